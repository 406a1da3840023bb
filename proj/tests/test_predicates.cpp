#include "lcab/classify.hpp"
#include "lcab/parse.hpp"
#include "lcab/predicates.hpp"
#include "lcab/render.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace lcab;
using lcab_test::cyclic_oracle;
using lcab_test::random_valid_term;

TEST_CASE("prime set algebra") {
    prime_set f23 = prime_set::of({2, 3});
    prime_set f35 = prime_set::of({3, 5});
    prime_set all = prime_set::all();
    prime_set co2 = prime_set::all_except({2});

    CHECK(f23.united(f35) == prime_set::of({2, 3, 5}));
    CHECK(f23.intersected(f35) == prime_set::of({3}));
    CHECK(f23.united(co2) == prime_set::all());
    CHECK(f23.intersected(co2) == prime_set::of({3}));
    CHECK(co2.united(prime_set::all_except({3})) == prime_set::all());
    CHECK(co2.intersected(prime_set::all_except({3})) == prime_set::all_except({2, 3}));
    CHECK(all.contains(97));
    CHECK_FALSE(co2.contains(2));
    CHECK(co2.smallest() == 3);
    CHECK(prime_set::all_except({2, 3, 5}).smallest() == 7);
    CHECK(prime_set::none().empty());
}

TEST_CASE("atom predicate table spot checks") {
    predicate_vector qp5 = predicate_vector_of(parse_expr("Qp(5)"));
    CHECK(qp5.totally_disconnected);
    CHECK(qp5.torsion_free);
    CHECK(qp5.P == p_status::all);
    CHECK(qp5.pp_all == prime_set::of({5}));
    CHECK(qp5.densely_divisible);
    CHECK_FALSE(qp5.compact);
    CHECK_FALSE(qp5.discrete);
    CHECK_FALSE(qp5.connected);

    predicate_vector qhat = predicate_vector_of(parse_expr("Qhat"));
    CHECK(qhat.compact);
    CHECK(qhat.connected);
    CHECK(qhat.torsion_free);
    CHECK(qhat.densely_divisible);
    CHECK(qhat.P == p_status::all);

    predicate_vector r = predicate_vector_of(parse_expr("R"));
    CHECK(r.connected);
    CHECK(r.P == p_status::trivial);
    CHECK(r.torsion_free);
    CHECK(r.densely_divisible);

    predicate_vector pr = predicate_vector_of(parse_expr("Prufer(2)"));
    CHECK(pr.discrete);
    CHECK_FALSE(pr.torsion_free);
    CHECK(pr.P == p_status::all);
    CHECK(pr.pp_all == prime_set::of({2}));
    CHECK(pr.densely_divisible);

    CHECK(predicate_vector_of(parse_expr("Q + Qp(2)")).P == p_status::mixed);
    CHECK(predicate_vector_of(parse_expr("lp(Qp(3), w)")).pp_all == prime_set::of({3}));
}

TEST_CASE("nondense prime sets") {
    CHECK(nondense_primes(parse_expr("Zp(7)")) == prime_set::of({7}));
    CHECK(nondense_primes(parse_expr("Z")) == prime_set::all());
    CHECK(nondense_primes(parse_expr("lp(Qp(3), w)")) == prime_set::none());
    CHECK(nondense_primes(parse_expr("C(6)")) == prime_set::of({2, 3}));
    CHECK(nondense_primes(parse_expr("C(8)")) == prime_set::of({2}));
    CHECK(nondense_primes(parse_expr("Q + R + Qhat + T + Prufer(5) + Qp(3)")) == prime_set::none());
    CHECK(nondense_primes(parse_expr("Zp(2) + C(15)")) == prime_set::of({2, 3, 5}));
    CHECK(nondense_primes(parse_expr("prod(Zp(2), w)")) == prime_set::of({2}));
    CHECK(nondense_primes(parse_expr("Z + Qp(2)")) == prime_set::all());
}

TEST_CASE("dense divisibility") {
    CHECK(densely_divisible(parse_expr("Qhat")));
    CHECK_FALSE(densely_divisible(parse_expr("Zp(2)")));
    CHECK_FALSE(densely_divisible(parse_expr("prod(C(3), w)")));
    CHECK(densely_divisible(parse_expr("T")));
    CHECK(densely_divisible(parse_expr("Q")));
    CHECK_FALSE(densely_divisible(parse_expr("Z")));
}

TEST_CASE("every predicate on C(n) agrees with brute force in Z/nZ") {
    for (std::uint64_t n = 2; n <= 30; ++n) {
        cyclic_oracle oracle{n};
        predicate_vector v = predicate_vector_of(group_expr::cyclic(n));
        CAPTURE(n);
        CHECK(v.compact == oracle.compact());
        CHECK(v.discrete == oracle.discrete());
        CHECK(v.connected == oracle.connected());
        CHECK(v.totally_disconnected == oracle.totally_disconnected());
        CHECK(v.torsion_free == oracle.torsion_free());
        std::uint64_t p = 0;
        bool prime_exp = oracle.has_prime_exponent(p);
        CHECK(v.exponent_p.has_value() == prime_exp);
        if (prime_exp) CHECK(*v.exponent_p == p);
        CHECK(v.P == p_status::all);
        CHECK(v.densely_divisible == oracle.densely_divisible());
        prime_set nd = nondense_primes(group_expr::cyclic(n));
        for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
            CHECK(v.pp_all.contains(q) == oracle.pp_all(q));
            CHECK(nd.contains(q) == !oracle.p_dense(q));
        }
    }
}

TEST_CASE("structural invariants on a generated corpus") {
    std::mt19937_64 rng(31415);
    for (int i = 0; i < 500; ++i) {
        group_expr e = random_valid_term(rng);
        predicate_vector v = predicate_vector_of(e);
        CAPTURE(render(e));

        if (!e.is_trivial() && !normalize(e).is_trivial())
            CHECK_FALSE(v.connected && v.totally_disconnected);
        if (v.exponent_p) {
            CHECK_FALSE(v.torsion_free);
            CHECK(nondense_primes(e).contains(*v.exponent_p));
        }
        if (v.compact) CHECK(v.P == p_status::all);

        // Lemma-style case rules, checked against the structural computation:
        // compact: densely divisible iff connected
        if (v.compact) CHECK(v.densely_divisible == v.connected);
        // torsion-free t.d. Z_p-module: densely divisible iff pA dense
        if (v.torsion_free && v.totally_disconnected && !v.pp_all.empty()) {
            std::uint64_t p = v.pp_all.smallest();
            CHECK(v.densely_divisible == !nondense_primes(e).contains(p));
        }
    }
}

TEST_CASE("for simple t.d. terms with P(A) = A some prime has P_p(A) = A") {
    // The dichotomy (5) holds under characteristic simplicity; mixed-prime
    // sums such as Qp(2) + Qp(3) are exactly the terms it rejects.
    std::mt19937_64 rng(161803);
    int seen = 0;
    for (int i = 0; i < 800; ++i) {
        group_expr e = random_valid_term(rng);
        if (normalize(e).is_trivial()) continue;
        simplicity_verdict verdict = characteristically_simple(e);
        if (!verdict.simple) continue;
        predicate_vector v = predicate_vector_of(e);
        if (v.totally_disconnected && v.P == p_status::all) {
            CHECK_FALSE(v.pp_all.empty());
            ++seen;
        }
    }
    CHECK(seen > 0);
    CHECK(predicate_vector_of(parse_expr("Qp(2) + Qp(3)")).pp_all.empty());
}

TEST_CASE("the trivial group vector") {
    predicate_vector v = predicate_vector_of(group_expr::trivial());
    CHECK(v.compact);
    CHECK(v.discrete);
    CHECK(v.connected);
    CHECK(v.totally_disconnected);
    CHECK(v.torsion_free);
    CHECK_FALSE(v.exponent_p);
    CHECK(v.P == p_status::all);
}
