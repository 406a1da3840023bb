#pragma once

#include "lcab/numeric.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lcab {

/// Exact fixed-precision element of Q_p.
///
/// A nonzero value is u * p^v with the unit u in [1, p^M), gcd(u, p) = 1,
/// known modulo p^M; the value is therefore known modulo p^(v+M).  A zero
/// value carries only an absolute precision A, meaning the element lies in
/// p^A Z_p (A = exact_zero_precision for a true zero).
class padic {
public:
    static constexpr std::int64_t default_precision = 64;
    static constexpr std::int64_t exact_zero_precision = std::numeric_limits<std::int64_t>::max();

    static padic zero(std::uint64_t p) { return zero_at(p, exact_zero_precision); }

    static padic zero_at(std::uint64_t p, std::int64_t abs_precision) {
        check_prime(p);
        padic a(p);
        a.zero_ = true;
        a.prec_ = abs_precision;
        return a;
    }

    static padic make(std::uint64_t p, std::int64_t valuation, const integer& unit,
                      std::int64_t precision = default_precision) {
        check_prime(p);
        if (precision < 1) throw std::invalid_argument("padic: precision must be >= 1");
        integer m = pow_integer(p, precision);
        integer u = mod_floor(unit, m);
        if (u == 0 || u % p == 0) throw std::invalid_argument("padic: unit must be coprime to p");
        padic a(p);
        a.val_ = valuation;
        a.unit_ = u;
        a.prec_ = precision;
        return a;
    }

    static padic from_integer(std::uint64_t p, const integer& n,
                              std::int64_t precision = default_precision) {
        return from_rational(p, rational(n), precision);
    }

    static padic from_rational(std::uint64_t p, const rational& q,
                               std::int64_t precision = default_precision) {
        check_prime(p);
        if (q == 0) return zero(p);
        integer num = numerator(q), den = denominator(q);
        std::int64_t v = 0;
        while (num % p == 0) { num /= p; ++v; }
        while (den % p == 0) { den /= p; --v; }
        integer m = pow_integer(p, precision);
        integer u = mod_floor(num, m) * mod_inverse(den, m) % m;
        return make(p, v, u, precision);
    }

    std::uint64_t prime() const { return p_; }
    bool is_zero() const { return zero_; }
    bool is_exact_zero() const { return zero_ && prec_ == exact_zero_precision; }

    std::int64_t valuation() const {
        if (zero_) throw std::domain_error("padic: valuation of (known-)zero");
        return val_;
    }
    const integer& unit() const {
        if (zero_) throw std::domain_error("padic: unit of (known-)zero");
        return unit_;
    }
    /// Relative precision M for nonzero values, absolute for zero.
    std::int64_t precision() const { return prec_; }
    /// The value is known modulo p^abs_precision().
    std::int64_t abs_precision() const { return zero_ ? prec_ : sat_add(val_, prec_); }

    bool is_integral() const { return zero_ ? prec_ >= 0 : val_ >= 0; }

    friend padic operator-(const padic& a) {
        if (a.zero_) return a;
        integer m = pow_integer(a.p_, a.prec_);
        return make(a.p_, a.val_, m - a.unit_, a.prec_);
    }

    friend padic operator+(const padic& a, const padic& b) {
        check_same_prime(a, b);
        if (a.is_exact_zero()) return b;
        if (b.is_exact_zero()) return a;
        std::int64_t abs = std::min(a.abs_precision(), b.abs_precision());
        if (a.zero_ && b.zero_) return zero_at(a.p_, abs);
        std::int64_t vmin = a.zero_ ? b.val_ : (b.zero_ ? a.val_ : std::min(a.val_, b.val_));
        std::int64_t digits = abs - vmin; // number of known digits of the sum above p^vmin
        if (digits <= 0) return zero_at(a.p_, abs);
        integer m = pow_integer(a.p_, digits);
        integer s = 0;
        if (!a.zero_) s += a.unit_ * pow_integer(a.p_, a.val_ - vmin);
        if (!b.zero_) s += b.unit_ * pow_integer(a.p_, b.val_ - vmin);
        s = mod_floor(s, m);
        if (s == 0) return zero_at(a.p_, abs);
        std::int64_t extra = 0;
        while (s % a.p_ == 0) { s /= a.p_; ++extra; }
        return make(a.p_, vmin + extra, s, digits - extra);
    }

    friend padic operator-(const padic& a, const padic& b) { return a + (-b); }

    friend padic operator*(const padic& a, const padic& b) {
        check_same_prime(a, b);
        if (a.is_exact_zero() || b.is_exact_zero()) return zero(a.p_);
        if (a.zero_ || b.zero_) {
            std::int64_t abs;
            if (a.zero_ && b.zero_) abs = sat_add(a.prec_, b.prec_);
            else if (a.zero_) abs = sat_add(a.prec_, b.val_);
            else abs = sat_add(b.prec_, a.val_);
            return zero_at(a.p_, abs);
        }
        std::int64_t prec = std::min(a.prec_, b.prec_);
        integer m = pow_integer(a.p_, prec);
        return make(a.p_, a.val_ + b.val_, a.unit_ * b.unit_ % m, prec);
    }

    friend padic operator/(const padic& a, const padic& b) {
        check_same_prime(a, b);
        if (b.zero_) throw std::domain_error("padic: division by zero");
        if (a.is_exact_zero()) return zero(a.p_);
        if (a.zero_) return zero_at(a.p_, sat_add(a.prec_, -b.val_));
        std::int64_t prec = std::min(a.prec_, b.prec_);
        integer m = pow_integer(a.p_, prec);
        return make(a.p_, a.val_ - b.val_, a.unit_ * mod_inverse(b.unit_, m) % m, prec);
    }

    /// a and b agree at the shared precision, i.e. a - b is (known-)zero.
    friend bool congruent(const padic& a, const padic& b) { return (a - b).is_zero(); }

    /// The p-adic fractional part {a}_p: the unique r in Z[1/p] with
    /// 0 <= r < 1 and a - r in Z_p.  Requires the negative-power digits to
    /// be determined, i.e. abs_precision() >= 0.
    rational frac_part() const {
        if (abs_precision() < 0)
            throw precision_error("padic: fractional part needs the digits below p^0");
        if (zero_ || val_ >= 0) return rational(0);
        integer den = pow_integer(p_, -val_);
        integer num = unit_ % den; // prec_ >= -val_ holds since abs_precision() >= 0
        return rational(num, den);
    }

    /// Literal form "p^v * u (mod p^M)"; zero prints as "0".
    std::string str() const {
        if (is_exact_zero()) return "0";
        if (zero_) return "0 (mod " + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
        return std::to_string(p_) + "^" + std::to_string(val_) + " * " + unit_.str() + " (mod " +
               std::to_string(p_) + "^" + std::to_string(prec_) + ")";
    }

    /// Accepts the canonical literal "p^v * u (mod p^M)" as well as plain
    /// integer or "n/d" rational literals (embedded at `precision`).
    static padic parse_literal(std::string_view text, std::uint64_t p,
                               std::int64_t precision = default_precision);

private:
    explicit padic(std::uint64_t p) : p_(p) {}

    static void check_prime(std::uint64_t p) {
        if (!is_prime(p)) throw std::invalid_argument("padic: p must be prime");
    }
    static void check_same_prime(const padic& a, const padic& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("padic: prime mismatch");
    }
    static std::int64_t sat_add(std::int64_t a, std::int64_t b) {
        if (a == exact_zero_precision || b == exact_zero_precision) return exact_zero_precision;
        std::int64_t s;
        if (__builtin_add_overflow(a, b, &s)) return a > 0 ? exact_zero_precision : std::numeric_limits<std::int64_t>::min();
        return s;
    }

    std::uint64_t p_;
    bool zero_ = false;
    std::int64_t val_ = 0;
    integer unit_ = 0;
    std::int64_t prec_ = exact_zero_precision;
};

namespace detail {

struct padic_literal_parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    integer read_integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw std::invalid_argument("padic literal: expected an integer");
        return integer(std::string(text.substr(start, pos - start)));
    }
    void expect_end() {
        skip_ws();
        if (pos != text.size()) throw std::invalid_argument("padic literal: trailing input");
    }
};

} // namespace detail

inline padic padic::parse_literal(std::string_view text, std::uint64_t p, std::int64_t precision) {
    detail::padic_literal_parser in{text};
    integer first = in.read_integer();
    if (in.eat('^')) {
        // canonical form: p^v * u (mod p^M)
        if (first != integer(p)) throw std::invalid_argument("padic literal: base does not match p");
        integer v = in.read_integer();
        if (!in.eat('*')) throw std::invalid_argument("padic literal: expected '*'");
        integer u = in.read_integer();
        std::int64_t prec = precision;
        in.skip_ws();
        if (in.eat('(')) {
            in.skip_ws();
            if (in.text.substr(in.pos, 3) != "mod") throw std::invalid_argument("padic literal: expected 'mod'");
            in.pos += 3;
            integer base = in.read_integer();
            if (base != integer(p)) throw std::invalid_argument("padic literal: modulus base does not match p");
            if (!in.eat('^')) throw std::invalid_argument("padic literal: expected '^'");
            prec = static_cast<std::int64_t>(in.read_integer());
            if (!in.eat(')')) throw std::invalid_argument("padic literal: expected ')'");
        }
        in.expect_end();
        return make(p, static_cast<std::int64_t>(v), u, prec);
    }
    if (in.eat('/')) {
        integer den = in.read_integer();
        in.expect_end();
        return from_rational(p, rational(first, den), precision);
    }
    in.expect_end();
    return from_integer(p, first, precision);
}

} // namespace lcab
