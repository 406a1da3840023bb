#pragma once

#include "lcab/expr.hpp"
#include "lcab/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lcab {

/// A finite or cofinite set of primes.  Member lists are sorted and
/// duplicate-free; a cofinite set stores the excluded primes.
class prime_set {
public:
    static prime_set none() { return prime_set(false, {}); }
    static prime_set all() { return prime_set(true, {}); }
    static prime_set of(std::vector<std::uint64_t> primes) { return prime_set(false, std::move(primes)); }
    static prime_set all_except(std::vector<std::uint64_t> primes) { return prime_set(true, std::move(primes)); }

    bool is_cofinite() const { return cofinite_; }
    const std::vector<std::uint64_t>& listed() const { return primes_; }

    bool contains(std::uint64_t p) const {
        bool in = std::binary_search(primes_.begin(), primes_.end(), p);
        return cofinite_ ? !in : in;
    }

    bool empty() const { return !cofinite_ && primes_.empty(); }

    /// Smallest member; precondition: not empty.
    std::uint64_t smallest() const {
        if (!cofinite_) return primes_.front();
        for (std::uint64_t p = 2;; ++p)
            if (is_prime(p) && !std::binary_search(primes_.begin(), primes_.end(), p)) return p;
    }

    prime_set united(const prime_set& o) const {
        std::vector<std::uint64_t> v;
        if (!cofinite_ && !o.cofinite_) {
            std::set_union(primes_.begin(), primes_.end(), o.primes_.begin(), o.primes_.end(),
                           std::back_inserter(v));
            return prime_set(false, std::move(v));
        }
        if (cofinite_ && o.cofinite_) {
            std::set_intersection(primes_.begin(), primes_.end(), o.primes_.begin(), o.primes_.end(),
                                  std::back_inserter(v));
            return prime_set(true, std::move(v));
        }
        const prime_set& co = cofinite_ ? *this : o;
        const prime_set& fin = cofinite_ ? o : *this;
        std::set_difference(co.primes_.begin(), co.primes_.end(), fin.primes_.begin(), fin.primes_.end(),
                            std::back_inserter(v));
        return prime_set(true, std::move(v));
    }

    prime_set intersected(const prime_set& o) const {
        std::vector<std::uint64_t> v;
        if (!cofinite_ && !o.cofinite_) {
            std::set_intersection(primes_.begin(), primes_.end(), o.primes_.begin(), o.primes_.end(),
                                  std::back_inserter(v));
            return prime_set(false, std::move(v));
        }
        if (cofinite_ && o.cofinite_) {
            std::set_union(primes_.begin(), primes_.end(), o.primes_.begin(), o.primes_.end(),
                           std::back_inserter(v));
            return prime_set(true, std::move(v));
        }
        const prime_set& co = cofinite_ ? *this : o;
        const prime_set& fin = cofinite_ ? o : *this;
        std::set_difference(fin.primes_.begin(), fin.primes_.end(), co.primes_.begin(), co.primes_.end(),
                            std::back_inserter(v));
        return prime_set(false, std::move(v));
    }

    friend bool operator==(const prime_set&, const prime_set&) = default;

private:
    prime_set(bool cofinite, std::vector<std::uint64_t> primes)
        : cofinite_(cofinite), primes_(std::move(primes)) {
        std::sort(primes_.begin(), primes_.end());
        primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    }

    bool cofinite_;
    std::vector<std::uint64_t> primes_;
};

/// Status of the subgroup P(A) of compact elements: trivial, the whole
/// group, or a proper nontrivial subgroup (a classification-failure witness).
enum class p_status : std::uint8_t { trivial, all, mixed };

struct predicate_vector {
    bool compact = false;
    bool discrete = false;
    bool connected = false;
    bool totally_disconnected = false;
    bool torsion_free = false;
    std::optional<std::uint64_t> exponent_p; // set iff the group has prime exponent p (and is nontrivial)
    p_status P = p_status::trivial;
    prime_set pp_all = prime_set::none();    // primes q with P_q(A) = A
    bool densely_divisible = false;
};

namespace detail {

// Exponent bookkeeping across direct sums: the trivial group is neutral.
struct exponent_state {
    bool neutral = true;                 // still compatible with every prime
    bool none = false;                   // torsion without a single prime exponent
    std::uint64_t p = 0;

    static exponent_state of(const std::optional<std::uint64_t>& e, bool trivial) {
        exponent_state s;
        if (trivial) return s;
        s.neutral = false;
        if (e) s.p = *e;
        else s.none = true;
        return s;
    }
    exponent_state joined(const exponent_state& o) const {
        if (neutral) return o;
        if (o.neutral) return *this;
        exponent_state s;
        s.neutral = false;
        if (none || o.none || p != o.p) s.none = true;
        else s.p = p;
        return s;
    }
    std::optional<std::uint64_t> result() const {
        if (neutral || none) return std::nullopt;
        return p;
    }
};

inline p_status join_status(p_status a, p_status b) {
    if (a == b) return a;
    return p_status::mixed;
}

} // namespace detail

/// Full structural predicate vector of a term (atom table plus constructor
/// rules; see the per-kind cases).  Total on well-formed terms, including
/// ones the validator rejects.
inline predicate_vector predicate_vector_of(const group_expr& e) {
    predicate_vector v;
    switch (e.kind()) {
    case node_kind::reals:
        v.connected = true;
        v.torsion_free = true;
        v.densely_divisible = true;
        return v;
    case node_kind::integers:
        v.discrete = true;
        v.totally_disconnected = true;
        v.torsion_free = true;
        return v;
    case node_kind::circle:
        v.compact = true;
        v.connected = true;
        v.P = p_status::all;
        v.densely_divisible = true;
        return v;
    case node_kind::rationals:
        v.discrete = true;
        v.totally_disconnected = true;
        v.torsion_free = true;
        v.densely_divisible = true;
        return v;
    case node_kind::rationals_dual:
        v.compact = true;
        v.connected = true;
        v.torsion_free = true;
        v.P = p_status::all;
        v.densely_divisible = true;
        return v;
    case node_kind::cyclic: {
        std::uint64_t n = e.param();
        v.compact = true;
        v.discrete = true;
        v.totally_disconnected = true;
        v.P = p_status::all;
        if (is_prime(n)) v.exponent_p = n;
        std::vector<std::uint64_t> qs;
        for (const integer& f : factor(integer(n)))
            qs.push_back(static_cast<std::uint64_t>(f));
        std::sort(qs.begin(), qs.end());
        qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
        if (qs.size() == 1) v.pp_all = prime_set::of(qs); // n is a q-power
        return v;
    }
    case node_kind::prufer:
        v.discrete = true;
        v.totally_disconnected = true;
        v.P = p_status::all;
        v.pp_all = prime_set::of({e.param()});
        v.densely_divisible = true;
        return v;
    case node_kind::padic_integers:
        v.compact = true;
        v.totally_disconnected = true;
        v.torsion_free = true;
        v.P = p_status::all;
        v.pp_all = prime_set::of({e.param()});
        return v;
    case node_kind::padic_field:
        v.totally_disconnected = true;
        v.torsion_free = true;
        v.P = p_status::all;
        v.pp_all = prime_set::of({e.param()});
        v.densely_divisible = true;
        return v;
    case node_kind::local_prod:
        v.totally_disconnected = true;
        v.torsion_free = true;
        v.P = p_status::all;
        v.pp_all = prime_set::of({e.param()});
        v.densely_divisible = true;
        return v;
    case node_kind::direct_sum: {
        if (e.is_trivial()) {
            v.compact = v.discrete = v.connected = v.totally_disconnected = true;
            v.torsion_free = true;
            v.P = p_status::all;
            v.pp_all = prime_set::all();
            v.densely_divisible = true;
            return v;
        }
        v.compact = v.discrete = v.connected = v.totally_disconnected = true;
        v.torsion_free = true;
        v.pp_all = prime_set::all();
        v.densely_divisible = true;
        detail::exponent_state exp;
        bool first = true;
        for (const auto& part : e.parts()) {
            predicate_vector pv = predicate_vector_of(part);
            v.compact &= pv.compact;
            v.discrete &= pv.discrete;
            v.connected &= pv.connected;
            v.totally_disconnected &= pv.totally_disconnected;
            v.torsion_free &= pv.torsion_free;
            v.densely_divisible &= pv.densely_divisible;
            v.pp_all = v.pp_all.intersected(pv.pp_all);
            exp = exp.joined(detail::exponent_state::of(pv.exponent_p, part.is_trivial()));
            v.P = first ? pv.P : detail::join_status(v.P, pv.P);
            first = false;
        }
        v.exponent_p = exp.result();
        return v;
    }
    case node_kind::power: {
        predicate_vector b = predicate_vector_of(e.base());
        v = b;
        v.discrete = b.discrete && e.index().is_finite();
        return v;
    }
    case node_kind::restricted_power: {
        predicate_vector b = predicate_vector_of(e.base());
        v = b;
        if (e.index().is_aleph0()) {
            // Infinite direct sum of a nontrivial group: discrete iff the
            // base is, never compact or connected, always t.d. when valid.
            v.compact = false;
            v.connected = false;
            v.totally_disconnected = true;
        }
        return v;
    }
    }
    return v;
}

/// The set of primes p for which pA is NOT dense in A.
inline prime_set nondense_primes(const group_expr& e) {
    switch (e.kind()) {
    case node_kind::reals:
    case node_kind::circle:
    case node_kind::rationals:
    case node_kind::rationals_dual:
    case node_kind::prufer:
    case node_kind::padic_field:
    case node_kind::local_prod:
        return prime_set::none();
    case node_kind::integers:
        return prime_set::all();
    case node_kind::cyclic: {
        std::vector<std::uint64_t> qs;
        for (const integer& f : factor(integer(e.param())))
            qs.push_back(static_cast<std::uint64_t>(f));
        return prime_set::of(std::move(qs));
    }
    case node_kind::padic_integers:
        return prime_set::of({e.param()});
    case node_kind::direct_sum: {
        prime_set s = prime_set::none();
        for (const auto& part : e.parts()) s = s.united(nondense_primes(part));
        return s;
    }
    case node_kind::power:
    case node_kind::restricted_power:
        // Products and sums of dense subsets are dense in the product and
        // discrete-sum topologies, so the exception set is the base's.
        return nondense_primes(e.base());
    }
    return prime_set::none();
}

/// Whether div(A) is dense in A.
inline bool densely_divisible(const group_expr& e) { return predicate_vector_of(e).densely_divisible; }

inline bool is_compact(const group_expr& e) { return predicate_vector_of(e).compact; }
inline bool is_discrete(const group_expr& e) { return predicate_vector_of(e).discrete; }

} // namespace lcab
