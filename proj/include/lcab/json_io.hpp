#pragma once

#include "lcab/adele.hpp"
#include "lcab/classify.hpp"
#include "lcab/expr.hpp"
#include "lcab/monolith.hpp"
#include "lcab/predicates.hpp"
#include "lcab/validate.hpp"
#include "lcab/zp.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lcab {

using json = nlohmann::json;

// Terms serialize as {"node": <name>, "args": [...]}; cardinals as a number
// or "w".  This schema is stable.

inline json cardinal_to_json(cardinal k) {
    if (k.is_aleph0()) return json("w");
    return json(k.value());
}

inline cardinal cardinal_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "w") return cardinal::aleph0();
        throw std::invalid_argument("cardinal: expected a number or \"w\"");
    }
    return cardinal::finite(j.get<std::uint64_t>());
}

inline json expr_to_json(const group_expr& e) {
    json args = json::array();
    switch (e.kind()) {
    case node_kind::reals: return {{"node", "R"}, {"args", args}};
    case node_kind::integers: return {{"node", "Z"}, {"args", args}};
    case node_kind::circle: return {{"node", "T"}, {"args", args}};
    case node_kind::rationals: return {{"node", "Q"}, {"args", args}};
    case node_kind::rationals_dual: return {{"node", "QHat"}, {"args", args}};
    case node_kind::cyclic: return {{"node", "C"}, {"args", {e.param()}}};
    case node_kind::prufer: return {{"node", "Prufer"}, {"args", {e.param()}}};
    case node_kind::padic_integers: return {{"node", "Zp"}, {"args", {e.param()}}};
    case node_kind::padic_field: return {{"node", "Qp"}, {"args", {e.param()}}};
    case node_kind::direct_sum:
        for (const auto& part : e.parts()) args.push_back(expr_to_json(part));
        return {{"node", "DirectSum"}, {"args", args}};
    case node_kind::power:
        return {{"node", "Power"}, {"args", {expr_to_json(e.base()), cardinal_to_json(e.index())}}};
    case node_kind::restricted_power:
        return {{"node", "RestrictedPower"}, {"args", {expr_to_json(e.base()), cardinal_to_json(e.index())}}};
    case node_kind::local_prod:
        return {{"node", "LocalProd"}, {"args", {e.param(), cardinal_to_json(e.index())}}};
    }
    return {};
}

inline group_expr expr_from_json(const json& j) {
    std::string node = j.at("node").get<std::string>();
    const json& args = j.at("args");
    if (node == "R") return group_expr::reals();
    if (node == "Z") return group_expr::integers();
    if (node == "T") return group_expr::circle();
    if (node == "Q") return group_expr::rationals();
    if (node == "QHat") return group_expr::rationals_dual();
    if (node == "C") return group_expr::cyclic(args.at(0).get<std::uint64_t>());
    if (node == "Prufer") return group_expr::prufer(args.at(0).get<std::uint64_t>());
    if (node == "Zp") return group_expr::padic_integers(args.at(0).get<std::uint64_t>());
    if (node == "Qp") return group_expr::padic_field(args.at(0).get<std::uint64_t>());
    if (node == "DirectSum") {
        std::vector<group_expr> parts;
        for (const auto& part : args) parts.push_back(expr_from_json(part));
        return group_expr::direct_sum(std::move(parts));
    }
    if (node == "Power") return group_expr::power(expr_from_json(args.at(0)), cardinal_from_json(args.at(1)));
    if (node == "RestrictedPower")
        return group_expr::restricted_power(expr_from_json(args.at(0)), cardinal_from_json(args.at(1)));
    if (node == "LocalProd")
        return group_expr::local_prod(args.at(0).get<std::uint64_t>(), cardinal_from_json(args.at(1)));
    throw std::invalid_argument("unknown term node '" + node + "'");
}

inline json prime_set_to_json(const prime_set& s) {
    json j;
    j["kind"] = s.is_cofinite() ? "cofinite" : "finite";
    j[s.is_cofinite() ? "excluded" : "primes"] = s.listed();
    return j;
}

inline json predicate_vector_to_json(const predicate_vector& v) {
    json j;
    j["compact"] = v.compact;
    j["discrete"] = v.discrete;
    j["connected"] = v.connected;
    j["totally_disconnected"] = v.totally_disconnected;
    j["torsion_free"] = v.torsion_free;
    j["exponent_p"] = v.exponent_p ? json(*v.exponent_p) : json(nullptr);
    j["P_status"] = v.P == p_status::trivial ? "Trivial" : v.P == p_status::all ? "All" : "Mixed";
    j["Pp_all"] = prime_set_to_json(v.pp_all);
    j["densely_divisible"] = v.densely_divisible;
    return j;
}

inline json validation_report_to_json(const validation_report& r) {
    json issues = json::array();
    for (const auto& v : r.violations)
        issues.push_back({{"path", v.path.empty() ? "/" : v.path}, {"rule", v.rule}, {"message", v.message}});
    return {{"valid", r.valid}, {"violations", issues}};
}

inline json canonical_form_to_json(const canonical_form& c) {
    json j;
    j["family"] = family_name(c.fam());
    switch (c.fam()) {
    case family::elem_abelian:
        j["p"] = c.p();
        j["kappa"] = cardinal_to_json(c.kappa());
        j["kappa_prime"] = cardinal_to_json(c.kappa_prime());
        break;
    case family::reals:
        j["n"] = c.kappa().value();
        break;
    case family::rationals_sum:
    case family::rationals_dual_power:
        j["kappa"] = cardinal_to_json(c.kappa());
        break;
    case family::qp_local:
        j["p"] = c.p();
        j["kappa"] = cardinal_to_json(c.kappa());
        break;
    }
    j["cg_realizable"] = c.cg_realizable();
    return j;
}

inline json verdict_to_json(const simplicity_verdict& v) {
    json j;
    j["simple"] = v.simple;
    if (v.simple) {
        json c = canonical_form_to_json(*v.canonical);
        j.update(c);
    } else {
        j["failed_condition"] = *v.failed_condition;
        j["witness"] = v.witness;
        if (v.witness_prime) j["witness_prime"] = *v.witness_prime;
    }
    return j;
}

inline json closure_report_to_json(const closure_report& r) {
    json j;
    j["target_contained"] = r.target_contained;
    j["generators_used"] = r.generators_used;
    j["window"] = r.window;
    if (r.witness) j["witness"] = *r.witness;
    if (!r.details.empty()) j["details"] = r.details;
    return j;
}

inline json no_go_certificate_to_json(const no_go_certificate& c) {
    json pis = json::array();
    for (const auto& p : c.prime_set) pis.push_back(p.str());
    json mats = json::array();
    for (const auto& m : c.matrices) {
        json rows = json::array();
        for (const auto& row : m) {
            json r = json::array();
            for (const auto& x : row) r.push_back(rational_str(x));
            rows.push_back(r);
        }
        mats.push_back(rows);
    }
    return {{"prime_set", pis},
            {"excluded_prime", c.excluded_prime},
            {"matrices", mats},
            {"statement", c.statement}};
}

inline json zp_basis_to_json(const zp_basis& b) {
    json vecs = json::array();
    for (const auto& v : b.vectors) {
        json row = json::array();
        for (const auto& x : v) row.push_back(x.str());
        vecs.push_back(row);
    }
    return {{"p", b.p},
            {"precision", b.precision},
            {"vectors", vecs},
            {"permutation", b.permutation},
            {"triangular_certificate", b.triangular_certificate}};
}

inline std::vector<zp_vector> zp_vectors_from_json(const json& j) {
    std::vector<zp_vector> out;
    for (const auto& row : j) {
        zp_vector v;
        for (const auto& x : row)
            v.push_back(x.is_string() ? integer(x.get<std::string>()) : integer(x.get<std::int64_t>()));
        out.push_back(std::move(v));
    }
    return out;
}

inline json adele_to_json(const adele& a) {
    json j;
    j["inf"] = rational_str(a.real_part());
    for (const auto& [p, xp] : a.finite_parts()) j[std::to_string(p)] = xp.str();
    if (a.tail() != 0) j["tail"] = rational_str(a.tail());
    return j;
}

inline adele adele_from_json(const json& j, std::int64_t precision = padic::default_precision) {
    adele a;
    if (j.contains("inf")) a.set_real(parse_rational(j.at("inf").get<std::string>()));
    for (const auto& [key, value] : j.items()) {
        if (key == "inf" || key == "tail") continue;
        std::uint64_t p = std::stoull(key);
        a.set(p, padic::parse_literal(value.get<std::string>(), p, precision));
    }
    if (j.contains("tail")) a.set_tail(parse_rational(j.at("tail").get<std::string>()));
    return a;
}

} // namespace lcab
