#pragma once

#include "lcab/expr.hpp"

#include <string>

namespace lcab {

/// Prints a term in the input grammar; parse_expr(render(e)) reproduces e.
inline std::string render(const group_expr& e) {
    switch (e.kind()) {
    case node_kind::reals: return "R";
    case node_kind::integers: return "Z";
    case node_kind::circle: return "T";
    case node_kind::rationals: return "Q";
    case node_kind::rationals_dual: return "Qhat";
    case node_kind::cyclic: return "C(" + std::to_string(e.param()) + ")";
    case node_kind::prufer: return "Prufer(" + std::to_string(e.param()) + ")";
    case node_kind::padic_integers: return "Zp(" + std::to_string(e.param()) + ")";
    case node_kind::padic_field: return "Qp(" + std::to_string(e.param()) + ")";
    case node_kind::direct_sum: {
        if (e.parts().empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < e.parts().size(); ++i) {
            if (i > 0) out += " + ";
            out += render(e.parts()[i]);
        }
        return out;
    }
    case node_kind::power:
        return "prod(" + render(e.base()) + ", " + e.index().str() + ")";
    case node_kind::restricted_power:
        return "sum(" + render(e.base()) + ", " + e.index().str() + ")";
    case node_kind::local_prod:
        return "lp(Qp(" + std::to_string(e.param()) + "), " + e.index().str() + ")";
    }
    return {};
}

} // namespace lcab
