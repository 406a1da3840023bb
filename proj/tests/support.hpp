#pragma once

// Shared test helpers: a seeded generator of valid terms and brute-force
// oracles used to freeze expected values independently of the library code.

#include "lcab/expr.hpp"
#include "lcab/numeric.hpp"
#include "lcab/predicates.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace lcab_test {

using lcab::cardinal;
using lcab::group_expr;

inline group_expr random_atom(std::mt19937_64& rng) {
    static const std::uint64_t primes[] = {2, 3, 5, 7};
    std::uniform_int_distribution<int> pick(0, 8);
    std::uniform_int_distribution<std::size_t> pi(0, 3);
    std::uniform_int_distribution<std::uint64_t> ni(2, 12);
    switch (pick(rng)) {
    case 0: return group_expr::reals();
    case 1: return group_expr::integers();
    case 2: return group_expr::circle();
    case 3: return group_expr::rationals();
    case 4: return group_expr::rationals_dual();
    case 5: return group_expr::cyclic(ni(rng));
    case 6: return group_expr::prufer(primes[pi(rng)]);
    case 7: return group_expr::padic_integers(primes[pi(rng)]);
    default: return group_expr::padic_field(primes[pi(rng)]);
    }
}

/// Valid-by-construction random term: infinite powers are only formed over
/// compact bases and infinite restricted powers over discrete ones.
inline group_expr random_valid_term(std::mt19937_64& rng, int depth = 3) {
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_int_distribution<std::uint64_t> small(1, 3);
    std::uniform_int_distribution<std::size_t> pi(0, 3);
    static const std::uint64_t primes[] = {2, 3, 5, 7};
    int c = depth <= 0 ? 0 : pick(rng);
    if (c <= 3) return random_atom(rng);
    if (c <= 5) {
        std::uniform_int_distribution<int> nparts(2, 3);
        std::vector<group_expr> parts;
        for (int i = 0, n = nparts(rng); i < n; ++i) parts.push_back(random_valid_term(rng, depth - 1));
        return group_expr::direct_sum(std::move(parts));
    }
    if (c <= 7) {
        group_expr base = random_valid_term(rng, depth - 1);
        bool want_infinite = pick(rng) < 5;
        if (want_infinite && lcab::is_compact(base)) return group_expr::power(std::move(base), cardinal::aleph0());
        return group_expr::power(std::move(base), cardinal::finite(small(rng)));
    }
    if (c == 8) {
        group_expr base = random_valid_term(rng, depth - 1);
        bool want_infinite = pick(rng) < 5;
        if (want_infinite && lcab::is_discrete(base))
            return group_expr::restricted_power(std::move(base), cardinal::aleph0());
        return group_expr::restricted_power(std::move(base), cardinal::finite(small(rng)));
    }
    return group_expr::local_prod(primes[pi(rng)], cardinal::aleph0());
}

// ---------------------------------------------------------------------------
// Brute-force predicate oracle in the literal finite group Z/nZ
// ---------------------------------------------------------------------------

struct cyclic_oracle {
    std::uint64_t n;

    bool compact() const { return true; }
    bool discrete() const { return true; }
    bool connected() const { return n == 1; }
    bool totally_disconnected() const { return true; }
    bool torsion_free() const { return n == 1; }

    // the exponent of Z/n is n itself
    bool has_prime_exponent(std::uint64_t& p) const {
        if (lcab::is_prime(n)) {
            p = n;
            return true;
        }
        return false;
    }

    // P_q(Z/n) = Z/n iff q^k x dies for every x, i.e. n is a q-power
    bool pp_all(std::uint64_t q) const {
        for (std::uint64_t x = 0; x < n; ++x) {
            std::uint64_t y = x % n;
            for (int k = 0; k < 128; ++k) y = y * (q % n) % n;
            if (y != 0) return false;
        }
        return true;
    }

    // div(Z/n) = intersection of the images of multiplication maps
    bool densely_divisible() const {
        for (std::uint64_t x = 0; x < n; ++x) {
            bool divisible = true;
            for (std::uint64_t m = 1; m <= n && divisible; ++m) {
                bool has_root = false;
                for (std::uint64_t b = 0; b < n && !has_root; ++b) has_root = (m * b % n) == x;
                divisible &= has_root;
            }
            if (!divisible) return false; // dense in a discrete group means all of it
        }
        return true;
    }

    // p(Z/n) proper iff the image of multiplication by p is smaller
    bool p_dense(std::uint64_t p) const {
        std::set<std::uint64_t> image;
        for (std::uint64_t x = 0; x < n; ++x) image.insert(p % n * x % n);
        return image.size() == n;
    }
};

// ---------------------------------------------------------------------------
// Brute-force Z_p-module oracle in (Z/p^m)^R
// ---------------------------------------------------------------------------

struct zp_oracle {
    std::uint64_t p;
    std::uint64_t mod; // p^m
    std::size_t rank;  // ambient R

    std::uint64_t encode(const std::vector<std::uint64_t>& v) const {
        std::uint64_t e = 0;
        for (std::size_t i = rank; i-- > 0;) e = e * mod + v[i];
        return e;
    }

    /// All Z-combinations of the generators mod p^m, as encoded ids.
    std::set<std::uint64_t> span(const std::vector<std::vector<std::uint64_t>>& gens) const {
        std::set<std::uint64_t> h;
        std::vector<std::uint64_t> zero(rank, 0);
        h.insert(encode(zero));
        std::vector<std::vector<std::uint64_t>> frontier{zero};
        while (!frontier.empty()) {
            auto cur = frontier.back();
            frontier.pop_back();
            for (const auto& g : gens) {
                std::vector<std::uint64_t> nxt(rank);
                for (std::size_t i = 0; i < rank; ++i) nxt[i] = (cur[i] + g[i]) % mod;
                if (h.insert(encode(nxt)).second) frontier.push_back(nxt);
            }
        }
        return h;
    }

    /// H is pure iff H and p^k U intersect in p^k H for every p^k < p^m.
    bool pure(const std::vector<std::vector<std::uint64_t>>& gens) const {
        std::set<std::uint64_t> h = span(gens);
        std::vector<std::vector<std::uint64_t>> elems;
        for (std::uint64_t id : h) {
            std::vector<std::uint64_t> v(rank);
            std::uint64_t e = id;
            for (std::size_t i = 0; i < rank; ++i) {
                v[i] = e % mod;
                e /= mod;
            }
            elems.push_back(v);
        }
        for (std::uint64_t pk = p; pk < mod; pk *= p) {
            for (const auto& v : elems) {
                bool in_pku = true;
                for (std::size_t i = 0; i < rank; ++i) in_pku &= v[i] % pk == 0;
                if (!in_pku) continue;
                bool in_pkh = false;
                for (const auto& w : elems) {
                    bool match = true;
                    for (std::size_t i = 0; i < rank; ++i) match &= (w[i] * pk % mod) == v[i];
                    if (match) {
                        in_pkh = true;
                        break;
                    }
                }
                if (!in_pkh) return false;
            }
        }
        return true;
    }
};

} // namespace lcab_test
