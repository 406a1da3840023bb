#pragma once

#include "lcab/expr.hpp"
#include "lcab/validate.hpp"

#include <stdexcept>
#include <vector>

namespace lcab {

namespace detail {

inline group_expr dual_rewrite(const group_expr& e) {
    switch (e.kind()) {
    // Atom table: R <-> R, Z <-> T, Q <-> Qhat, C(n) <-> C(n),
    // Zp(p) <-> Prufer(p), Qp(p) <-> Qp(p).
    case node_kind::reals: return group_expr::reals();
    case node_kind::integers: return group_expr::circle();
    case node_kind::circle: return group_expr::integers();
    case node_kind::rationals: return group_expr::rationals_dual();
    case node_kind::rationals_dual: return group_expr::rationals();
    case node_kind::cyclic: return group_expr::cyclic(e.param());
    case node_kind::prufer: return group_expr::padic_integers(e.param());
    case node_kind::padic_integers: return group_expr::prufer(e.param());
    case node_kind::padic_field: return group_expr::padic_field(e.param());
    case node_kind::direct_sum: {
        std::vector<group_expr> parts;
        parts.reserve(e.parts().size());
        for (const auto& part : e.parts()) parts.push_back(dual_rewrite(part));
        return group_expr::direct_sum(std::move(parts));
    }
    // Full powers and restricted powers exchange; the local product
    // (Qp, Zp)^(k) is self-dual.
    case node_kind::power:
        return group_expr::restricted_power(dual_rewrite(e.base()), e.index());
    case node_kind::restricted_power:
        return group_expr::power(dual_rewrite(e.base()), e.index());
    case node_kind::local_prod:
        return group_expr::local_prod(e.param(), e.index());
    }
    return e;
}

} // namespace detail

/// Structural Pontryagin dual.  Input must be valid; the result is returned
/// in normal form and is itself valid.
inline group_expr dual(const group_expr& e) {
    if (!is_valid(e)) throw std::invalid_argument("dual: invalid input term");
    return normalize(detail::dual_rewrite(e));
}

/// dual(dual(e)) is syntactically the normal form of e.
inline bool check_involution(const group_expr& e) { return dual(dual(e)) == normalize(e); }

} // namespace lcab
