#pragma once

#include "lcab/cardinal.hpp"
#include "lcab/expr.hpp"
#include "lcab/predicates.hpp"
#include "lcab/validate.hpp"

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace lcab {

enum class family : std::uint8_t {
    elem_abelian,        // C_p^kappa + C_p^(kappa')
    reals,               // R^n
    rationals_sum,       // Q^(kappa)
    rationals_dual_power,// Qhat^kappa
    qp_local,            // Qp(kappa)
};

inline const char* family_name(family f) {
    switch (f) {
    case family::elem_abelian: return "ElemAbelian";
    case family::reals: return "Reals";
    case family::rationals_sum: return "RationalsSum";
    case family::rationals_dual_power: return "RationalsDualPower";
    case family::qp_local: return "QpLocal";
    }
    return "";
}

/// Canonical representative of a topologically characteristically simple
/// abelian l.c.s.c. group.  Distinct values denote non-isomorphic groups.
class canonical_form {
public:
    /// Raw product/sum multiplicities are renormalized so that
    /// kappa' is 0 or aleph0, absorbing finite sum multiplicities into kappa
    /// (and finite kappa into an infinite kappa').
    static canonical_form elem_abelian(std::uint64_t p, cardinal prod_mult, cardinal sum_mult) {
        if (!is_prime(p)) throw std::invalid_argument("ElemAbelian requires a prime");
        cardinal kappa, kappa_prime;
        if (sum_mult.is_finite()) {
            kappa = prod_mult + sum_mult;
            kappa_prime = cardinal::finite(0);
        } else {
            kappa_prime = cardinal::aleph0();
            kappa = prod_mult.is_aleph0() ? cardinal::aleph0() : cardinal::finite(0);
        }
        if (kappa.is_zero() && kappa_prime.is_zero())
            throw std::invalid_argument("ElemAbelian parameters denote the trivial group");
        canonical_form c(family::elem_abelian);
        c.p_ = p;
        c.kappa_ = kappa;
        c.kappa_prime_ = kappa_prime;
        return c;
    }

    static canonical_form reals(std::uint64_t n) {
        if (n < 1) throw std::invalid_argument("Reals requires n >= 1");
        canonical_form c(family::reals);
        c.kappa_ = cardinal::finite(n);
        return c;
    }

    static canonical_form rationals_sum(cardinal kappa) {
        if (kappa.is_zero()) throw std::invalid_argument("RationalsSum requires kappa >= 1");
        canonical_form c(family::rationals_sum);
        c.kappa_ = kappa;
        return c;
    }

    static canonical_form rationals_dual_power(cardinal kappa) {
        if (kappa.is_zero()) throw std::invalid_argument("RationalsDualPower requires kappa >= 1");
        canonical_form c(family::rationals_dual_power);
        c.kappa_ = kappa;
        return c;
    }

    static canonical_form qp_local(std::uint64_t p, cardinal kappa) {
        if (!is_prime(p)) throw std::invalid_argument("QpLocal requires a prime");
        if (kappa.is_zero()) throw std::invalid_argument("QpLocal requires kappa >= 1");
        canonical_form c(family::qp_local);
        c.p_ = p;
        c.kappa_ = kappa;
        return c;
    }

    family fam() const { return family_; }
    std::uint64_t p() const { return p_; }
    cardinal kappa() const { return kappa_; }
    cardinal kappa_prime() const { return kappa_prime_; }

    /// Whether the group occurs as the monolith of a COMPACTLY GENERATED
    /// soluble l.c.s.c. group: false exactly for Q^(n) and Qhat^n, n finite.
    bool cg_realizable() const {
        if (family_ == family::rationals_sum || family_ == family::rationals_dual_power)
            return kappa_.is_aleph0();
        return true;
    }

    std::string str() const {
        switch (family_) {
        case family::elem_abelian:
            return "ElemAbelian(" + std::to_string(p_) + ", " + kappa_.str() + ", " + kappa_prime_.str() + ")";
        case family::reals: return "Reals(" + kappa_.str() + ")";
        case family::rationals_sum: return "RationalsSum(" + kappa_.str() + ")";
        case family::rationals_dual_power: return "RationalsDualPower(" + kappa_.str() + ")";
        case family::qp_local: return "QpLocal(" + std::to_string(p_) + ", " + kappa_.str() + ")";
        }
        return {};
    }

    friend bool operator==(const canonical_form&, const canonical_form&) = default;

private:
    explicit canonical_form(family f) : family_(f) {}

    family family_;
    std::uint64_t p_ = 0;
    cardinal kappa_{};
    cardinal kappa_prime_{};
};

struct simplicity_verdict {
    bool simple = false;
    std::optional<canonical_form> canonical;
    std::optional<int> failed_condition; // 1..5, the dichotomy conditions
    std::optional<std::uint64_t> witness_prime;
    std::string witness;
};

namespace detail {

// Product/sum multiplicity pair for a prime-exponent term (only C(p) atoms occur).
struct mult_pair {
    cardinal prod, sum;
};

inline mult_pair elem_multiplicities(const group_expr& e) {
    switch (e.kind()) {
    case node_kind::cyclic:
        return {cardinal::finite(1), cardinal::finite(0)};
    case node_kind::direct_sum: {
        mult_pair m{cardinal::finite(0), cardinal::finite(0)};
        for (const auto& part : e.parts()) {
            mult_pair pm = elem_multiplicities(part);
            m.prod = m.prod + pm.prod;
            m.sum = m.sum + pm.sum;
        }
        return m;
    }
    case node_kind::power: {
        mult_pair b = elem_multiplicities(e.base());
        if (e.index().is_aleph0()) return {cardinal::aleph0() * (b.prod + b.sum), cardinal::finite(0)};
        return {e.index() * b.prod, e.index() * b.sum};
    }
    case node_kind::restricted_power: {
        mult_pair b = elem_multiplicities(e.base());
        if (e.index().is_aleph0()) return {cardinal::finite(0), cardinal::aleph0() * (b.prod + b.sum)};
        return {e.index() * b.prod, e.index() * b.sum};
    }
    default:
        throw std::logic_error("elem_multiplicities: unexpected node in a prime-exponent term");
    }
}

// Multiplicity of a single self-companion atom (R, Q or Qhat) in a term
// built only from that atom.
inline cardinal atom_multiplicity(const group_expr& e, node_kind atom) {
    switch (e.kind()) {
    case node_kind::direct_sum: {
        cardinal m = cardinal::finite(0);
        for (const auto& part : e.parts()) m = m + atom_multiplicity(part, atom);
        return m;
    }
    case node_kind::power:
    case node_kind::restricted_power:
        return e.index() * atom_multiplicity(e.base(), atom);
    default:
        if (e.kind() != atom) throw std::logic_error("atom_multiplicity: unexpected node");
        return cardinal::finite(1);
    }
}

// Rank of a compact open subgroup of a Qp(kappa)-family term.
inline cardinal qp_rank(const group_expr& e) {
    switch (e.kind()) {
    case node_kind::padic_field:
        return cardinal::finite(1);
    case node_kind::local_prod:
        return cardinal::aleph0();
    case node_kind::direct_sum: {
        cardinal m = cardinal::finite(0);
        for (const auto& part : e.parts()) m = m + qp_rank(part);
        return m;
    }
    case node_kind::power:
    case node_kind::restricted_power:
        return e.index() * qp_rank(e.base());
    default:
        throw std::logic_error("qp_rank: unexpected node in a Qp(kappa)-family term");
    }
}

inline canonical_form canonical_form_from_vector(const group_expr& e, const predicate_vector& v) {
    if (v.exponent_p) {
        mult_pair m = elem_multiplicities(e);
        return canonical_form::elem_abelian(*v.exponent_p, m.prod, m.sum);
    }
    if (v.connected && v.P == p_status::trivial) {
        cardinal n = atom_multiplicity(e, node_kind::reals);
        return canonical_form::reals(n.value());
    }
    if (v.connected && v.P == p_status::all)
        return canonical_form::rationals_dual_power(atom_multiplicity(e, node_kind::rationals_dual));
    if (v.totally_disconnected && v.P == p_status::trivial)
        return canonical_form::rationals_sum(atom_multiplicity(e, node_kind::rationals));
    assert(v.totally_disconnected && v.P == p_status::all);
    std::uint64_t p = v.pp_all.smallest();
    return canonical_form::qp_local(p, qp_rank(e));
}

} // namespace detail

/// Decides topological characteristic simplicity by testing the five
/// dichotomy conditions:
///   (1) prime exponent or torsion-free;
///   (2) torsion-free implies pA dense for every prime p;
///   (3) connected or totally disconnected;
///   (4) P(A) trivial or all of A;
///   (5) totally disconnected with P(A) = A implies P_p(A) = A for some p.
/// Reports the first failed condition with a witness, or the canonical form.
inline simplicity_verdict characteristically_simple(const group_expr& expr) {
    if (!is_valid(expr)) throw std::invalid_argument("characteristically_simple: invalid term");
    group_expr e = normalize(expr);
    if (e.is_trivial())
        throw std::domain_error("characteristically_simple: the trivial group has no verdict");

    predicate_vector v = predicate_vector_of(e);
    simplicity_verdict verdict;
    auto fail = [&](int cond, std::string why, std::optional<std::uint64_t> p = std::nullopt) {
        verdict.simple = false;
        verdict.failed_condition = cond;
        verdict.witness = std::move(why);
        verdict.witness_prime = p;
        return verdict;
    };

    if (!v.exponent_p && !v.torsion_free)
        return fail(1, "torsion present without prime exponent");
    if (v.torsion_free) {
        prime_set nd = nondense_primes(e);
        if (!nd.empty()) {
            std::uint64_t p = nd.smallest();
            return fail(2, "pA is not dense for p = " + std::to_string(p), p);
        }
    }
    if (!v.connected && !v.totally_disconnected)
        return fail(3, "neither connected nor totally disconnected");
    if (v.P == p_status::mixed)
        return fail(4, "P(A) is a proper nontrivial subgroup");
    if (v.totally_disconnected && v.P == p_status::all && v.pp_all.empty())
        return fail(5, "P(A) = A but no prime p has P_p(A) = A");

    verdict.simple = true;
    verdict.canonical = detail::canonical_form_from_vector(e, v);
    return verdict;
}

/// Canonical five-family form; precondition: the term is characteristically
/// simple (throws std::domain_error otherwise).
inline canonical_form canonical_form_of(const group_expr& expr) {
    simplicity_verdict verdict = characteristically_simple(expr);
    if (!verdict.simple)
        throw std::domain_error("canonical_form: term is not characteristically simple (failed condition " +
                                std::to_string(*verdict.failed_condition) + ")");
    return *verdict.canonical;
}

inline bool iso_canonical(const canonical_form& a, const canonical_form& b) { return a == b; }

/// Canonical form of the Pontryagin dual.
inline canonical_form dual_canonical(const canonical_form& c) {
    switch (c.fam()) {
    case family::elem_abelian:
        // Product and sum multiplicities exchange, then renormalize.
        return canonical_form::elem_abelian(c.p(), c.kappa_prime(), c.kappa());
    case family::reals:
        return c;
    case family::rationals_sum:
        return canonical_form::rationals_dual_power(c.kappa());
    case family::rationals_dual_power:
        return canonical_form::rationals_sum(c.kappa());
    case family::qp_local:
        return c;
    }
    return c;
}

} // namespace lcab
