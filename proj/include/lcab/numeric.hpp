#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lcab {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/// Raised when a result would depend on digits beyond the working precision.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline integer pow_integer(std::uint64_t base, std::int64_t exp) {
    if (exp < 0) throw std::invalid_argument("pow_integer: negative exponent");
    integer r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// Euclidean remainder in [0, m).
inline integer mod_floor(const integer& a, const integer& m) {
    integer r = a % m;
    if (r < 0) r += m;
    return r;
}

inline integer mod_inverse(const integer& a, const integer& m) {
    integer old_r = mod_floor(a, m), r = m;
    integer old_s = 1, s = 0;
    while (r != 0) {
        integer q = old_r / r;
        integer t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: element is not invertible");
    return mod_floor(old_s, m);
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % p == 0) return n == p;
    // Deterministic Miller-Rabin for 64-bit inputs.
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) -> std::uint64_t {
        std::uint64_t r = 1;
        a %= m;
        while (e > 0) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

inline bool miller_rabin_big(const integer& n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % p == 0) return n == p;
    integer d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic for n < 3.3e24 with this base set; amply probable beyond.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        integer x = boost::multiprecision::powm(integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline integer pollard_rho(const integer& n) {
    if (n % 2 == 0) return 2;
    integer x = 2, y = 2, c = 1, d = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = boost::multiprecision::gcd(x >= y ? x - y : y - x, n);
        }
        if (d != n) return d;
        c += 1;
    }
}

inline void factor_into(integer n, std::vector<integer>& out) {
    if (n <= 1) return;
    for (std::uint64_t p = 2; p < 1000; p = (p == 2 ? 3 : p + 2)) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
        if (n == 1) return;
    }
    if (miller_rabin_big(n)) {
        out.push_back(n);
        return;
    }
    integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace detail

/// Prime factorization (with multiplicity, unsorted).
inline std::vector<integer> factor(const integer& n) {
    std::vector<integer> out;
    detail::factor_into(n < 0 ? -n : n, out);
    return out;
}

/// Parses "n" or "n/d" (optionally signed) into an exact rational.
inline rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return rational(integer(text));
        integer num(text.substr(0, slash)), den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational literal '" + text + "'");
    }
}

inline std::string rational_str(const rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

} // namespace lcab
