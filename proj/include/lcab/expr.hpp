#pragma once

#include "lcab/cardinal.hpp"
#include "lcab/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lcab {

enum class node_kind : std::uint8_t {
    reals,            // R
    integers,         // Z
    circle,           // T
    rationals,        // Q (discrete)
    rationals_dual,   // Qhat
    cyclic,           // C(n), n >= 2
    prufer,           // Prufer(p)
    padic_integers,   // Zp(p)
    padic_field,      // Qp(p)
    direct_sum,       // finite direct sum; empty list denotes the trivial group
    power,            // full direct product of `index` copies
    restricted_power, // direct sum of `index` copies, discrete on coordinates
    local_prod,       // local direct product of `index` copies of (Qp(p), Zp(p))
};

/// Immutable constructor term denoting an abelian l.c.s.c. group.
///
/// Factory invariants: direct sums are flattened and never contain the
/// trivial group or a single part; zero powers collapse to the trivial
/// group; local products with finite index are rewritten to full powers.
class group_expr {
public:
    static group_expr reals() { return group_expr(node_kind::reals); }
    static group_expr integers() { return group_expr(node_kind::integers); }
    static group_expr circle() { return group_expr(node_kind::circle); }
    static group_expr rationals() { return group_expr(node_kind::rationals); }
    static group_expr rationals_dual() { return group_expr(node_kind::rationals_dual); }

    static group_expr cyclic(std::uint64_t n) {
        if (n < 2) throw std::invalid_argument("C(n) requires n >= 2");
        group_expr e(node_kind::cyclic);
        e.param_ = n;
        return e;
    }
    static group_expr prufer(std::uint64_t p) { return prime_atom(node_kind::prufer, p); }
    static group_expr padic_integers(std::uint64_t p) { return prime_atom(node_kind::padic_integers, p); }
    static group_expr padic_field(std::uint64_t p) { return prime_atom(node_kind::padic_field, p); }

    static group_expr trivial() { return group_expr(node_kind::direct_sum); }

    static group_expr direct_sum(std::vector<group_expr> parts) {
        std::vector<group_expr> flat;
        for (auto& part : parts) {
            if (part.kind() == node_kind::direct_sum) {
                for (auto& sub : part.parts_) flat.push_back(std::move(sub));
            } else {
                flat.push_back(std::move(part));
            }
        }
        if (flat.size() == 1) return std::move(flat.front());
        group_expr e(node_kind::direct_sum);
        e.parts_ = std::move(flat);
        return e;
    }

    static group_expr power(group_expr base, cardinal k) {
        if (k.is_zero() || base.is_trivial()) return trivial();
        group_expr e(node_kind::power);
        e.index_ = k;
        e.parts_.push_back(std::move(base));
        return e;
    }

    static group_expr restricted_power(group_expr base, cardinal k) {
        if (k.is_zero() || base.is_trivial()) return trivial();
        group_expr e(node_kind::restricted_power);
        e.index_ = k;
        e.parts_.push_back(std::move(base));
        return e;
    }

    static group_expr local_prod(std::uint64_t p, cardinal k) {
        if (!is_prime(p)) throw std::invalid_argument("lp requires a prime");
        if (k.is_finite()) return power(padic_field(p), k);
        group_expr e(node_kind::local_prod);
        e.param_ = p;
        e.index_ = k;
        return e;
    }

    node_kind kind() const { return kind_; }
    std::uint64_t param() const { return param_; } // n for C, p for Prufer/Zp/Qp/lp
    cardinal index() const { return index_; }
    const std::vector<group_expr>& parts() const { return parts_; }
    const group_expr& base() const { return parts_.front(); }

    bool is_trivial() const { return kind_ == node_kind::direct_sum && parts_.empty(); }
    bool is_atom() const {
        return kind_ != node_kind::direct_sum && kind_ != node_kind::power &&
               kind_ != node_kind::restricted_power && kind_ != node_kind::local_prod;
    }

    friend bool operator==(const group_expr& a, const group_expr& b) { return compare(a, b) == 0; }
    friend bool operator!=(const group_expr& a, const group_expr& b) { return compare(a, b) != 0; }

    /// Total order on node shape; used to sort direct-sum parts into normal form.
    static int compare(const group_expr& a, const group_expr& b) {
        if (a.kind_ != b.kind_) return a.kind_ < b.kind_ ? -1 : 1;
        if (a.param_ != b.param_) return a.param_ < b.param_ ? -1 : 1;
        if (a.index_ != b.index_) return a.index_ < b.index_ ? -1 : 1;
        if (a.parts_.size() != b.parts_.size()) return a.parts_.size() < b.parts_.size() ? -1 : 1;
        for (std::size_t i = 0; i < a.parts_.size(); ++i)
            if (int c = compare(a.parts_[i], b.parts_[i]); c != 0) return c;
        return 0;
    }

private:
    explicit group_expr(node_kind k) : kind_(k) {}

    static group_expr prime_atom(node_kind k, std::uint64_t p) {
        if (!is_prime(p)) throw std::invalid_argument("atom requires a prime argument");
        group_expr e(k);
        e.param_ = p;
        return e;
    }

    node_kind kind_;
    std::uint64_t param_ = 0;
    cardinal index_{};
    std::vector<group_expr> parts_;
};

/// Syntactic normal form: recursively sorts direct-sum parts by the shape
/// order.  All other normalization (flattening, finite local products, zero
/// powers) is maintained by the factories.  This is a syntactic canonical
/// form for round-trip and involution checks, not an isomorphism normal form.
inline group_expr normalize(const group_expr& e) {
    switch (e.kind()) {
    case node_kind::direct_sum: {
        std::vector<group_expr> parts;
        parts.reserve(e.parts().size());
        for (const auto& part : e.parts()) parts.push_back(normalize(part));
        std::sort(parts.begin(), parts.end(),
                  [](const group_expr& a, const group_expr& b) { return group_expr::compare(a, b) < 0; });
        return group_expr::direct_sum(std::move(parts));
    }
    case node_kind::power:
        return group_expr::power(normalize(e.base()), e.index());
    case node_kind::restricted_power:
        return group_expr::restricted_power(normalize(e.base()), e.index());
    default:
        return e;
    }
}

} // namespace lcab
