#include "lcab/zp.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace lcab;
using lcab_test::zp_oracle;

namespace {

zp_vector vec(std::initializer_list<long long> xs) {
    zp_vector v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

// encode the span generated by `vectors` in (Z/p^m)^R as a set of ids
std::set<std::uint64_t> span_ids(const std::vector<zp_vector>& vectors, std::size_t R, std::uint64_t p,
                                 std::uint64_t m_exp) {
    std::uint64_t mod = 1;
    for (std::uint64_t i = 0; i < m_exp; ++i) mod *= p;
    zp_oracle oracle{p, mod, R};
    std::vector<std::vector<std::uint64_t>> gens;
    for (const auto& v : vectors) {
        std::vector<std::uint64_t> g;
        for (const auto& x : v) g.push_back(static_cast<std::uint64_t>(mod_floor(x, integer(mod))));
        gens.push_back(std::move(g));
    }
    return oracle.span(gens);
}

bool det_unit_mod_p(const std::vector<zp_vector>& vectors, std::uint64_t p) {
    std::size_t n = vectors.size();
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = static_cast<std::uint64_t>(mod_floor(vectors[i][j], integer(p)));
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t r = c; r < n; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == n) return false;
        if (pivot != c) std::swap(m[pivot], m[c]);
        det = det * m[c][c] % p;
        std::uint64_t inv = static_cast<std::uint64_t>(mod_inverse(integer(m[c][c]), integer(p)));
        for (std::size_t r = c + 1; r < n; ++r) {
            std::uint64_t f = m[r][c] * inv % p;
            for (std::size_t j = c; j < n; ++j) m[r][j] = (m[r][j] + (p - f) * m[c][j]) % p;
        }
    }
    return det % p != 0;
}

} // namespace

TEST_CASE("triangular basis: identity case") {
    zp_basis b = triangular_basis({vec({1, 0})}, 2, 3, 32);
    CHECK(b.triangular_certificate);
    CHECK(b.permutation == std::vector<std::size_t>{0, 1});
    CHECK(b.vectors[0] == vec({1, 0}));
}

TEST_CASE("triangular basis: swap and scale") {
    zp_basis b = triangular_basis({vec({2, 1})}, 2, 2, 8);
    CHECK(b.permutation == std::vector<std::size_t>{1, 0});
    auto tri = b.permuted_vectors();
    CHECK(tri[0][0] == 1);
    CHECK(tri[0][1] == 2);
    // brute force: the output spans the same submodule mod 2^3
    CHECK(span_ids(b.vectors, 2, 2, 3) == span_ids({vec({2, 1})}, 2, 2, 3));
}

TEST_CASE("triangular basis: a pair over Z_5") {
    zp_basis b = triangular_basis({vec({1, 5, 0}), vec({0, 1, 5})}, 3, 5, 8);
    auto tri = b.permuted_vectors();
    CHECK(tri[0][0] == 1);
    CHECK(tri[1][0] == 0);
    CHECK(tri[1][1] == 1);
    // mutual reduction: spans agree mod 5^3
    CHECK(span_ids(b.vectors, 3, 5, 3) == span_ids({vec({1, 5, 0}), vec({0, 1, 5})}, 3, 5, 3));
}

TEST_CASE("triangular basis error modes") {
    CHECK_THROWS_AS(triangular_basis({vec({2, 0})}, 2, 2, 8), std::domain_error);
    CHECK_THROWS_AS(triangular_basis({vec({1, 0}), vec({1, 0})}, 2, 2, 8), std::domain_error);
    CHECK_THROWS_AS(triangular_basis({vec({1, 0}), vec({0, 2})}, 2, 2, 8), std::domain_error);
}

TEST_CASE("purity against the brute-force oracle") {
    CHECK(is_pure({vec({1, 0})}, 2, 2, 3));
    CHECK_FALSE(is_pure({vec({2, 0})}, 2, 2, 3));
    CHECK(is_pure({vec({1, 3})}, 2, 3, 3));

    zp_oracle o2{2, 8, 2};
    for (std::uint64_t a = 0; a < 8; ++a)
        for (std::uint64_t b = 0; b < 8; ++b) {
            if (a == 0 && b == 0) continue;
            bool expected = o2.pure({{a, b}});
            CHECK(is_pure({vec({static_cast<long long>(a), static_cast<long long>(b)})}, 2, 2, 3) == expected);
        }
}

TEST_CASE("purity precision exhaustion") {
    CHECK_THROWS_AS(is_pure({vec({8, 0})}, 2, 2, 3), precision_error);
    CHECK_THROWS_AS(is_pure({vec({1, 0}), vec({3, 0})}, 2, 2, 3), precision_error);
}

TEST_CASE("completing pure submodules to summands") {
    zp_basis b1 = complete_to_summand({vec({1, 0})}, 2, 5, 32);
    REQUIRE(b1.vectors.size() == 2);
    CHECK(b1.vectors[0] == vec({1, 0}));
    CHECK(b1.vectors[1] == vec({0, 1}));

    zp_basis b2 = complete_to_summand({vec({1, 1})}, 2, 2, 8);
    REQUIRE(b2.vectors.size() == 2);
    CHECK(b2.vectors[0] == vec({1, 1}));
    CHECK(det_unit_mod_p(b2.vectors, 2));

    zp_basis b3 = complete_to_summand({vec({1, 3}), vec({0, 1})}, 2, 3, 8);
    CHECK(b3.vectors[0] == vec({1, 3}));
    CHECK(b3.vectors[1] == vec({0, 1}));
    CHECK(det_unit_mod_p(b3.vectors, 3));

    CHECK_THROWS_AS(complete_to_summand({vec({2, 0})}, 2, 2, 8), std::domain_error);
}

TEST_CASE("random completions have unit determinant") {
    std::mt19937_64 rng(909);
    std::uniform_int_distribution<long long> entry(0, 1'000'000);
    int done = 0;
    while (done < 100) {
        std::size_t R = 2 + done % 2; // ambient 2 or 3
        std::size_t k = 1 + done % R;
        std::vector<zp_vector> sub;
        for (std::size_t i = 0; i < k; ++i) {
            zp_vector v(R);
            for (auto& x : v) x = entry(rng);
            sub.push_back(std::move(v));
        }
        try {
            if (!is_pure(sub, R, 2, 20)) continue;
        } catch (const precision_error&) {
            continue;
        }
        zp_basis b = complete_to_summand(sub, R, 2, 20);
        CHECK(det_unit_mod_p(b.vectors, 2));
        ++done;
    }
}

TEST_CASE("roots inside a span") {
    auto r1 = has_root(vec({2, 0}), 2, {vec({1, 0})}, 2, 8);
    REQUIRE(r1.has_value());
    CHECK(*r1 == vec({1, 0}));

    CHECK_FALSE(has_root(vec({1, 0}), 2, {vec({1, 0})}, 2, 8).has_value());

    auto r3 = has_root(vec({3, 0}), 3, {vec({1, 0})}, 5, 8);
    REQUIRE(r3.has_value());
    CHECK(*r3 == vec({1, 0}));

    // the candidate root exists coordinatewise but misses the span
    CHECK_FALSE(has_root(vec({0, 2}), 2, {vec({1, 0})}, 2, 8).has_value());

    // roots coprime to p always exist inside the span
    auto r4 = has_root(vec({3, 6}), 3, {vec({1, 2})}, 2, 8);
    REQUIRE(r4.has_value());
    CHECK(*r4 == vec({1, 2}));

    CHECK_THROWS_AS(has_root(vec({4, 0}), 16, {vec({1, 0})}, 2, 3), precision_error);
}

TEST_CASE("root results multiply back exactly at the output precision") {
    std::mt19937_64 rng(112233);
    std::uniform_int_distribution<long long> entry(0, 4095);
    std::uniform_int_distribution<int> nn(1, 12);
    for (int i = 0; i < 200; ++i) {
        std::size_t R = 2;
        zp_vector base{entry(rng), entry(rng)};
        std::uint64_t n = static_cast<std::uint64_t>(nn(rng));
        zp_vector v(R);
        for (std::size_t j = 0; j < R; ++j) v[j] = base[j] * n;
        auto w = has_root(v, n, {base}, 2, 24);
        if (!w.has_value()) {
            // legitimate only when the base itself is not recoverable at precision
            continue;
        }
        std::int64_t k = 0;
        std::uint64_t m = n;
        while (m % 2 == 0) {
            m /= 2;
            ++k;
        }
        integer out_mod = pow_integer(2, 24 - k);
        for (std::size_t j = 0; j < R; ++j)
            CHECK(mod_floor(integer(n) * (*w)[j] - v[j], out_mod) == 0);
    }
}
