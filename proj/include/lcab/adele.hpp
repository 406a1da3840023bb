#pragma once

#include "lcab/numeric.hpp"
#include "lcab/padic.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace lcab {

namespace detail {

/// {x}_p for an exact rational x: the unique r in Z[1/p] with 0 <= r < 1
/// and x - r p-integral.
inline rational rational_frac_part(const rational& x, std::uint64_t p) {
    integer den = denominator(x);
    std::int64_t k = 0;
    while (den % p == 0) { den /= p; ++k; }
    if (k == 0) return rational(0);
    integer pk = pow_integer(p, k);
    integer num = mod_floor(numerator(x) * mod_inverse(den, pk), pk);
    return rational(num, pk);
}

} // namespace detail

/// An adele over Q at desk scale: an exact rational archimedean coordinate,
/// finitely many explicit p-adic coordinates, and a rational `tail` giving
/// the value of every unlisted coordinate (p-integral there; 0 by default).
/// A diagonal rational adele is diagonal(q).
class adele {
public:
    adele() = default;
    explicit adele(rational real_part) : inf_(std::move(real_part)) {}

    static adele diagonal(const rational& q, std::int64_t precision = padic::default_precision) {
        adele a(q);
        a.tail_ = q;
        for (const integer& f : factor(denominator(q)))
            a.set(static_cast<std::uint64_t>(f), padic::from_rational(static_cast<std::uint64_t>(f), q, precision));
        return a;
    }

    const rational& real_part() const { return inf_; }
    const rational& tail() const { return tail_; }
    const std::map<std::uint64_t, padic>& finite_parts() const { return finite_; }

    void set_real(rational q) { inf_ = std::move(q); }

    void set(std::uint64_t p, padic value) {
        if (value.prime() != p) throw std::invalid_argument("adele: coordinate prime mismatch");
        finite_.insert_or_assign(p, std::move(value));
    }

    /// The unlisted coordinates must be p-integral, i.e. every prime in the
    /// tail's denominator must carry an explicit coordinate.
    void set_tail(rational q) {
        for (const integer& f : factor(denominator(q)))
            if (!finite_.count(static_cast<std::uint64_t>(f)))
                throw std::invalid_argument("adele: tail is not integral at an unlisted prime");
        tail_ = std::move(q);
    }

    /// Exact total phase of the character xi_a(r), in turns and reduced to
    /// [0, 1):  -r*a_inf + sum_p {r*a_p}_p  (mod 1).
    rational character_phase(const rational& r) const {
        rational total = -r * inf_;
        std::set<std::uint64_t> extra;
        for (const integer& f : factor(denominator(r))) extra.insert(static_cast<std::uint64_t>(f));
        for (const integer& f : factor(denominator(tail_))) extra.insert(static_cast<std::uint64_t>(f));
        for (const auto& [p, ap] : finite_) {
            extra.erase(p);
            std::int64_t prec = ap.is_zero() ? padic::default_precision
                                             : std::max<std::int64_t>(ap.precision(), 1);
            padic rp = padic::from_rational(p, r, prec);
            total += (rp * ap).frac_part();
        }
        // Unlisted primes that can contribute: those dividing the
        // denominator of r or of the tail, materialized as the integral
        // (tail) coordinate.
        for (std::uint64_t p : extra) total += detail::rational_frac_part(r * tail_, p);
        total -= floor_rational(total);
        return total;
    }

    /// xi_a(r) = e^{-2 pi i r a_inf} prod_p e^{2 pi i {r a_p}_p}.  Exact up
    /// to the single final complex exponential.
    std::complex<double> character(const rational& r) const {
        double turns = static_cast<double>(character_phase(r));
        double angle = 2.0 * 3.14159265358979323846 * turns;
        return {std::cos(angle), std::sin(angle)};
    }

private:
    static rational floor_rational(const rational& q) {
        integer num = numerator(q), den = denominator(q);
        integer fl = num / den;
        if (num < 0 && num % den != 0) fl -= 1;
        return rational(fl);
    }

    rational inf_ = 0;
    rational tail_ = 0;
    std::map<std::uint64_t, padic> finite_;
};

} // namespace lcab
