#pragma once

#include "lcab/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcab {

/// Exact truncated element of F_p((t)).
///
/// Coefficients are stored for exponents low() .. low()+size-1; everything
/// at exponents >= precision_high() is unknown (INT64_MAX marks an exact
/// element).  The coefficient at low() is nonzero unless the element is
/// (known-)zero.
class laurent {
public:
    static constexpr std::int64_t exact = std::numeric_limits<std::int64_t>::max();

    static laurent zero(std::uint64_t p, std::int64_t precision_high = exact) {
        check_prime(p);
        laurent a(p);
        a.prec_ = precision_high;
        return a;
    }

    static laurent monomial(std::uint64_t p, std::uint64_t coeff, std::int64_t exponent) {
        return from_coeffs(p, exponent, {static_cast<std::uint32_t>(coeff % p)});
    }

    static laurent from_coeffs(std::uint64_t p, std::int64_t low, std::vector<std::uint32_t> coeffs,
                               std::int64_t precision_high = exact) {
        check_prime(p);
        laurent a(p);
        a.low_ = low;
        a.coeffs_ = std::move(coeffs);
        for (auto& c : a.coeffs_) c %= static_cast<std::uint32_t>(p);
        a.prec_ = precision_high;
        a.trim();
        return a;
    }

    std::uint64_t prime() const { return p_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t low() const {
        if (is_zero()) throw std::domain_error("laurent: valuation of (known-)zero");
        return low_;
    }
    std::int64_t valuation() const { return low(); }
    std::int64_t precision_high() const { return prec_; }

    std::uint32_t coeff(std::int64_t exponent) const {
        if (exponent >= prec_) throw precision_error("laurent: coefficient beyond precision");
        if (is_zero() || exponent < low_ || exponent >= low_ + static_cast<std::int64_t>(coeffs_.size()))
            return 0;
        return coeffs_[static_cast<std::size_t>(exponent - low_)];
    }

    friend laurent operator+(const laurent& a, const laurent& b) {
        check_same_prime(a, b);
        std::int64_t prec = std::min(a.prec_, b.prec_);
        if (a.is_zero() && b.is_zero()) return zero(a.p_, prec);
        std::int64_t lo = a.is_zero() ? b.low_ : (b.is_zero() ? a.low_ : std::min(a.low_, b.low_));
        if (lo >= prec) return zero(a.p_, prec);
        std::int64_t hi = prec == exact
                              ? std::max(a.is_zero() ? lo : a.low_ + static_cast<std::int64_t>(a.coeffs_.size()),
                                         b.is_zero() ? lo : b.low_ + static_cast<std::int64_t>(b.coeffs_.size()))
                              : prec;
        laurent r(a.p_);
        r.low_ = lo;
        r.prec_ = prec;
        r.coeffs_.assign(static_cast<std::size_t>(hi - lo), 0);
        for (std::int64_t e = lo; e < hi; ++e)
            r.coeffs_[static_cast<std::size_t>(e - lo)] =
                static_cast<std::uint32_t>((a.coeff_unchecked(e) + b.coeff_unchecked(e)) % a.p_);
        r.trim();
        return r;
    }

    friend laurent operator-(const laurent& a) {
        laurent r = a;
        for (auto& c : r.coeffs_)
            c = c == 0 ? 0 : static_cast<std::uint32_t>(a.p_ - c);
        return r;
    }

    friend laurent operator-(const laurent& a, const laurent& b) { return a + (-b); }

    friend laurent operator*(const laurent& a, const laurent& b) {
        check_same_prime(a, b);
        // The product coefficient at e is known iff every contributing pair
        // is known: precision min(prec_a + val_b, prec_b + val_a).
        if (a.is_zero() && b.is_zero()) return zero(a.p_, sat_add(a.prec_, b.prec_));
        if (a.is_zero()) return zero(a.p_, sat_add(a.prec_, b.low_));
        if (b.is_zero()) return zero(a.p_, sat_add(b.prec_, a.low_));
        std::int64_t prec = std::min(sat_add(a.prec_, b.low_), sat_add(b.prec_, a.low_));
        laurent r(a.p_);
        r.low_ = a.low_ + b.low_;
        r.prec_ = prec;
        std::int64_t len = static_cast<std::int64_t>(a.coeffs_.size() + b.coeffs_.size()) - 1;
        if (prec != exact) len = std::min(len, prec - r.low_);
        if (len <= 0) return zero(a.p_, prec);
        r.coeffs_.assign(static_cast<std::size_t>(len), 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size() && i + j < r.coeffs_.size(); ++j)
                r.coeffs_[i + j] = static_cast<std::uint32_t>(
                    (r.coeffs_[i + j] + static_cast<std::uint64_t>(a.coeffs_[i]) * b.coeffs_[j]) % a.p_);
        }
        r.trim();
        return r;
    }

    /// Multiplicative inverse, computed to `terms` coefficients when the
    /// input is exact (default 64, the [-32, 32] window), or to the
    /// precision the input supports.
    laurent inverse(std::size_t terms = 64) const {
        if (is_zero()) throw std::domain_error("laurent: inversion of zero");
        std::size_t known = prec_ == exact ? terms
                                           : static_cast<std::size_t>(prec_ - low_);
        std::size_t n = std::min(terms, known);
        // Invert the unit part u = sum c_i t^i, c_0 != 0, by long division.
        std::vector<std::uint32_t> inv(n, 0);
        std::uint64_t c0inv = static_cast<std::uint64_t>(mod_inverse(integer(coeffs_[0]), integer(p_)));
        for (std::size_t k = 0; k < n; ++k) {
            std::uint64_t acc = k == 0 ? 1 : 0;
            for (std::size_t j = 1; j <= k; ++j) {
                std::uint32_t cj = j < coeffs_.size() ? coeffs_[j] : 0;
                acc = (acc + static_cast<std::uint64_t>(p_ - 1) * cj % p_ * inv[k - j]) % p_;
            }
            inv[k] = static_cast<std::uint32_t>(acc * c0inv % p_);
        }
        laurent r(p_);
        r.low_ = -low_;
        r.coeffs_ = std::move(inv);
        r.prec_ = -low_ + static_cast<std::int64_t>(n);
        r.trim();
        return r;
    }

    /// t^k * a, the action of the k-th power of the shift generator.
    laurent shifted(std::int64_t k) const {
        laurent r = *this;
        r.low_ += k;
        if (r.prec_ != exact) r.prec_ += k;
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0 (p=" + std::to_string(p_) + ")";
        std::string out;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            std::int64_t e = low_ + static_cast<std::int64_t>(i);
            if (!first) out += " + ";
            first = false;
            if (e == 0) {
                out += std::to_string(coeffs_[i]);
            } else {
                if (coeffs_[i] != 1) out += std::to_string(coeffs_[i]) + "*";
                out += e == 1 ? "t" : "t^" + std::to_string(e);
            }
        }
        return out + " (p=" + std::to_string(p_) + ")";
    }

    /// Parses literals like "t^-1 + 1 + 2*t^3 (p=3)"; the trailing (p=...)
    /// is optional when `p` is supplied and must match it otherwise.
    static laurent parse_literal(std::string_view text, std::uint64_t p);

    friend bool operator==(const laurent& a, const laurent& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_) &&
               a.prec_ == b.prec_;
    }

private:
    explicit laurent(std::uint64_t p) : p_(p) {}

    static void check_prime(std::uint64_t p) {
        if (!is_prime(p)) throw std::invalid_argument("laurent: p must be prime");
    }
    static void check_same_prime(const laurent& a, const laurent& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("laurent: prime mismatch");
    }
    static std::int64_t sat_add(std::int64_t a, std::int64_t b) {
        if (a == exact || b == exact) return exact;
        return a + b;
    }

    std::uint32_t coeff_unchecked(std::int64_t e) const {
        if (is_zero() || e < low_ || e >= low_ + static_cast<std::int64_t>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(e - low_)];
    }

    void trim() {
        if (prec_ != exact) {
            std::int64_t keep = prec_ - low_;
            if (keep < static_cast<std::int64_t>(coeffs_.size()))
                coeffs_.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
        }
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
            low_ += static_cast<std::int64_t>(lead);
        }
        if (coeffs_.empty()) low_ = 0;
    }

    std::uint64_t p_;
    std::int64_t low_ = 0;
    std::vector<std::uint32_t> coeffs_;
    std::int64_t prec_ = exact;
};

inline laurent shift_action(std::int64_t k, const laurent& a) { return a.shifted(k); }

inline laurent laurent::parse_literal(std::string_view text, std::uint64_t p) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> std::int64_t {
        skip();
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("laurent literal: expected a number");
        return std::stoll(std::string(text.substr(start, pos - start)));
    };

    laurent acc = laurent::zero(p);
    while (true) {
        skip();
        if (pos >= text.size() || text[pos] == '(') break;
        std::uint64_t c = 1;
        std::int64_t e = 0;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            c = static_cast<std::uint64_t>(read_int());
            skip();
            if (pos < text.size() && text[pos] == '*') ++pos;
            skip();
        }
        if (pos < text.size() && text[pos] == 't') {
            ++pos;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = read_int();
            } else {
                e = 1;
            }
        }
        acc = acc + laurent::monomial(p, c, e);
        skip();
        if (pos < text.size() && text[pos] == '+') {
            ++pos;
            continue;
        }
        break;
    }
    skip();
    if (pos < text.size() && text[pos] == '(') {
        ++pos;
        skip();
        if (text.substr(pos, 2) != "p=") throw std::invalid_argument("laurent literal: expected 'p='");
        pos += 2;
        std::int64_t declared = read_int();
        if (declared != static_cast<std::int64_t>(p))
            throw std::invalid_argument("laurent literal: prime does not match");
        skip();
        if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("laurent literal: expected ')'");
        ++pos;
    }
    skip();
    if (pos != text.size()) throw std::invalid_argument("laurent literal: trailing input");
    return acc;
}

} // namespace lcab
