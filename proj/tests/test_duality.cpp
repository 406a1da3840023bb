#include "lcab/dual.hpp"
#include "lcab/parse.hpp"
#include "lcab/predicates.hpp"
#include "lcab/render.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace lcab;
using lcab_test::random_valid_term;

TEST_CASE("the atom dual table") {
    CHECK(dual(group_expr::reals()) == group_expr::reals());
    CHECK(dual(group_expr::integers()) == group_expr::circle());
    CHECK(dual(group_expr::circle()) == group_expr::integers());
    CHECK(dual(group_expr::rationals()) == group_expr::rationals_dual());
    CHECK(dual(group_expr::rationals_dual()) == group_expr::rationals());
    CHECK(dual(group_expr::cyclic(12)) == group_expr::cyclic(12));
    CHECK(dual(group_expr::padic_integers(2)) == group_expr::prufer(2));
    CHECK(dual(group_expr::prufer(2)) == group_expr::padic_integers(2));
    CHECK(dual(group_expr::padic_field(7)) == group_expr::padic_field(7));
}

TEST_CASE("constructor exchange rules") {
    CHECK(dual(parse_expr("prod(Zp(2), w)")) == parse_expr("sum(Prufer(2), w)"));
    CHECK(dual(parse_expr("sum(Prufer(2), w)")) == parse_expr("prod(Zp(2), w)"));
    CHECK(dual(parse_expr("lp(Qp(3), w)")) == parse_expr("lp(Qp(3), w)"));
    CHECK(dual(parse_expr("prod(C(3), 2)")) == parse_expr("sum(C(3), 2)"));
    CHECK(render(dual(parse_expr("Z + Qp(2)"))) == "T + Qp(2)");
}

TEST_CASE("involution examples, applied by hand") {
    CHECK(check_involution(parse_expr("R")));
    // dual(Z + Qp(2)) = T + Qp(2); dual again = Z + Qp(2)
    CHECK(check_involution(parse_expr("Z + Qp(2)")));
    // dual(prod(C(5), w)) = sum(C(5), w); dual again = prod(C(5), w)
    CHECK(check_involution(parse_expr("prod(C(5), w)")));
}

TEST_CASE("involution holds on a generated corpus") {
    std::mt19937_64 rng(1138);
    for (int i = 0; i < 400; ++i) {
        group_expr e = random_valid_term(rng);
        CAPTURE(render(e));
        CHECK(check_involution(e));
        CHECK(validate(dual(e)).valid);
    }
}

TEST_CASE("compact/discrete and torsion-free/densely-divisible exchanges") {
    std::mt19937_64 rng(271828);
    for (int i = 0; i < 400; ++i) {
        group_expr e = random_valid_term(rng);
        group_expr d = dual(e);
        CAPTURE(render(e), render(d));
        predicate_vector ve = predicate_vector_of(e), vd = predicate_vector_of(d);
        CHECK(ve.compact == vd.discrete);
        CHECK(ve.discrete == vd.compact);
        CHECK(ve.torsion_free == vd.densely_divisible);
        CHECK(ve.densely_divisible == vd.torsion_free);
    }
}

TEST_CASE("dual rejects invalid terms") {
    CHECK_THROWS_AS(dual(parse_expr("prod(Q, w)")), std::invalid_argument);
}

TEST_CASE("dual of the trivial group is trivial") {
    CHECK(dual(group_expr::trivial()) == group_expr::trivial());
}
