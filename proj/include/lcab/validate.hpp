#pragma once

#include "lcab/expr.hpp"
#include "lcab/predicates.hpp"

#include <string>
#include <vector>

namespace lcab {

struct validation_issue {
    std::string path; // child indices from the root, e.g. "/1/0"; "" is the root
    std::string rule;
    std::string message;
};

struct validation_report {
    bool valid = true;
    std::vector<validation_issue> violations;
};

namespace detail {

inline void validate_into(const group_expr& e, const std::string& path, validation_report& report) {
    switch (e.kind()) {
    case node_kind::power:
        if (e.index().is_aleph0() && !is_compact(e.base()))
            report.violations.push_back(
                {path, "power-compact-base", "infinite full power of non-compact base"});
        validate_into(e.base(), path + "/0", report);
        break;
    case node_kind::restricted_power:
        if (e.index().is_aleph0() && !is_discrete(e.base()))
            report.violations.push_back(
                {path, "restricted-power-discrete-base", "infinite restricted power of non-discrete base"});
        validate_into(e.base(), path + "/0", report);
        break;
    case node_kind::direct_sum:
        for (std::size_t i = 0; i < e.parts().size(); ++i)
            validate_into(e.parts()[i], path + "/" + std::to_string(i), report);
        break;
    default:
        break; // atoms and local products carry no side conditions
    }
}

} // namespace detail

/// Checks the local-compactness and second-countability side conditions;
/// a valid report certifies the term denotes an abelian l.c.s.c. group.
inline validation_report validate(const group_expr& e) {
    validation_report report;
    detail::validate_into(e, "", report);
    report.valid = report.violations.empty();
    return report;
}

inline bool is_valid(const group_expr& e) { return validate(e).valid; }

} // namespace lcab
