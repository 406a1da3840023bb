#include "lcab/adele.hpp"
#include "lcab/json_io.hpp"
#include "lcab/padic.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

using namespace lcab;

TEST_CASE("carries and valuation gains") {
    // 1 + 4 = 5 in Q_5
    padic a = padic::from_integer(5, 1, 16), b = padic::from_integer(5, 4, 16);
    padic s = a + b;
    CHECK(s.valuation() == 1);
    CHECK(s.unit() == 1);

    // p^-2 * p^2 = 1 in Q_3
    padic x = padic::make(3, -2, 1), y = padic::make(3, 2, 1);
    padic prod = x * y;
    CHECK(prod.valuation() == 0);
    CHECK(prod.unit() == 1);
}

TEST_CASE("division by a unit via the modular inverse") {
    // brute-force oracle: the inverse of 3 mod 16
    std::int64_t expected = -1;
    for (std::int64_t u = 1; u < 16; ++u)
        if (3 * u % 16 == 1) expected = u;
    REQUIRE(expected == 11);

    padic inv3 = padic::from_integer(2, 1, 4) / padic::from_integer(2, 3, 4);
    CHECK(inv3.valuation() == 0);
    CHECK(inv3.unit() == expected);
    CHECK(inv3.precision() == 4);
}

TEST_CASE("division errors") {
    CHECK_THROWS_AS(padic::from_integer(2, 1) / padic::zero(2), std::domain_error);
    CHECK_THROWS_AS(padic::from_integer(2, 1) + padic::from_integer(3, 1), std::invalid_argument);
}

TEST_CASE("field axioms against exact rational arithmetic") {
    std::mt19937_64 rng(8128);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
    for (std::uint64_t p : {2ull, 3ull, 7ull}) {
        for (int i = 0; i < 200; ++i) {
            rational qa(num(rng), den(rng)), qb(num(rng), den(rng));
            padic a = padic::from_rational(p, qa), b = padic::from_rational(p, qb);
            CHECK(congruent(a + b, padic::from_rational(p, qa + qb)));
            CHECK(congruent(a - b, padic::from_rational(p, qa - qb)));
            CHECK(congruent(a * b, padic::from_rational(p, qa * qb)));
            if (qb != 0) CHECK(congruent(a / b, padic::from_rational(p, qa / qb)));
            CHECK(congruent((a + b) - b, a));
            if (qa != 0) CHECK(congruent((a / a), padic::from_integer(p, 1)));
        }
    }
}

TEST_CASE("valuation laws") {
    std::mt19937_64 rng(6174);
    std::uniform_int_distribution<int> num(1, 400);
    for (int i = 0; i < 300; ++i) {
        std::uint64_t p = 3;
        rational qa(num(rng)), qb(num(rng));
        padic a = padic::from_rational(p, qa), b = padic::from_rational(p, qb);
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
        padic s = a + b;
        if (!s.is_zero()) {
            CHECK(s.valuation() >= std::min(a.valuation(), b.valuation()));
            if (a.valuation() != b.valuation())
                CHECK(s.valuation() == std::min(a.valuation(), b.valuation()));
        }
    }
}

TEST_CASE("cancellation loses precision honestly") {
    padic a = padic::from_integer(2, 3, 8);
    padic diff = a - a;
    CHECK(diff.is_zero());
    CHECK_FALSE(diff.is_exact_zero());
    CHECK(diff.abs_precision() == 8);
    // partial cancellation: (1) + (-1 + 2^5) has valuation 5 and 3 digits left
    padic one = padic::from_integer(2, 1, 8);
    padic other = padic::from_integer(2, 31, 8); // -1 + 2^5 = 31
    padic s = one + other;
    CHECK(s.valuation() == 5);
    CHECK(s.precision() == 3);
}

TEST_CASE("p-adic fractional parts") {
    CHECK(padic::from_rational(2, rational(1, 2)).frac_part() == rational(1, 2));
    CHECK(padic::from_integer(3, 7).frac_part() == 0);
    CHECK(padic::from_rational(5, rational(7, 25)).frac_part() == rational(7, 25));
    CHECK(padic::from_rational(3, rational(-1, 3)).frac_part() == rational(2, 3));
    // {a}_p has valuation >= 0 after subtraction
    padic a = padic::from_rational(5, rational(7, 25));
    padic r = padic::from_rational(5, a.frac_part());
    CHECK((a - r).is_integral());
    // too little precision to see the negative digits
    CHECK_THROWS_AS(padic::make(5, -3, 1, 2).frac_part(), precision_error);
}

TEST_CASE("literal syntax round trip") {
    padic a = padic::make(2, -1, 3, 16);
    CHECK(a.str() == "2^-1 * 3 (mod 2^16)");
    padic b = padic::parse_literal(a.str(), 2);
    CHECK(congruent(a, b));
    CHECK(b.precision() == 16);
    CHECK(congruent(padic::parse_literal("7", 5), padic::from_integer(5, 7)));
    CHECK(congruent(padic::parse_literal("7/25", 5), padic::from_rational(5, rational(7, 25))));
    CHECK(padic::parse_literal("0", 3).is_zero());
    CHECK_THROWS_AS(padic::parse_literal("3^0 * 1", 2), std::invalid_argument);
}

TEST_CASE("adele characters: frozen examples") {
    // diagonal rational adeles are in the kernel
    adele diag = adele::diagonal(rational(1));
    CHECK(diag.character_phase(rational(1)) == 0);
    CHECK(diag.character_phase(rational(1, 2)) == 0);
    adele diag2 = adele::diagonal(rational(22, 15));
    CHECK(diag2.character_phase(rational(9, 14)) == 0);

    // a_inf = 1, all finite parts 0: xi(1/2) = e^{-pi i} = -1
    adele a(rational(1));
    std::complex<double> v = a.character(rational(1, 2));
    CHECK(std::abs(v - std::complex<double>(-1.0, 0.0)) < 1e-12);

    // the zero adele maps everything to 1
    adele zero;
    CHECK(std::abs(zero.character(rational(17, 5)) - std::complex<double>(1.0, 0.0)) < 1e-12);
}

TEST_CASE("character multiplicativity and the kernel, randomized") {
    std::mt19937_64 rng(2718281);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 100), pick(0, 4);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11};
    for (int i = 0; i < 300; ++i) {
        adele a(rational(num(rng), den(rng)));
        for (int c = 0, nc = pick(rng) % 3 + 1; c < nc; ++c) {
            std::uint64_t p = primes[pick(rng)];
            a.set(p, padic::from_rational(p, rational(num(rng), den(rng))));
        }
        rational r(num(rng), den(rng)), s(num(rng), den(rng));
        auto lhs = a.character(r + s);
        auto rhs = a.character(r) * a.character(s);
        CHECK(std::abs(lhs - rhs) <= 1e-9);
    }
    for (int i = 0; i < 100; ++i) {
        rational q(num(rng), den(rng));
        adele d = adele::diagonal(q);
        rational r(num(rng), den(rng));
        CHECK(d.character_phase(r) == 0); // exact, stronger than the 1e-9 bound
        CHECK(std::abs(d.character(r) - std::complex<double>(1.0, 0.0)) <= 1e-9);
    }
}

TEST_CASE("adele JSON serialization") {
    adele a(rational(3, 4));
    a.set(2, padic::from_rational(2, rational(1, 2), 16));
    a.set(5, padic::from_integer(5, 2, 16));
    json j = adele_to_json(a);
    CHECK(j["inf"] == "3/4");
    adele b = adele_from_json(j);
    CHECK(b.real_part() == rational(3, 4));
    CHECK(b.finite_parts().size() == 2);
    CHECK(congruent(b.finite_parts().at(2), a.finite_parts().at(2)));
    CHECK(b.character_phase(rational(7, 10)) == a.character_phase(rational(7, 10)));

    adele d = adele::diagonal(rational(5, 6));
    adele d2 = adele_from_json(adele_to_json(d));
    CHECK(d2.character_phase(rational(3, 4)) == 0);
}

TEST_CASE("tail validation requires listed denominators") {
    adele a;
    CHECK_THROWS_AS(a.set_tail(rational(1, 3)), std::invalid_argument);
    a.set(3, padic::from_rational(3, rational(1, 3)));
    a.set_tail(rational(1, 3)); // fine once 3 is listed
    CHECK(a.tail() == rational(1, 3));
}
