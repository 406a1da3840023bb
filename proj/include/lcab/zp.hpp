#pragma once

#include "lcab/numeric.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lcab {

using zp_vector = std::vector<integer>; // entries reduced mod p^M, valuation >= 0

/// A list of module generators with a coordinate permutation and a
/// triangularity certificate: when set, reordering the ambient coordinates
/// by `permutation` puts the coefficient matrix in unit-diagonal triangular
/// form (zero before the diagonal).
struct zp_basis {
    std::uint64_t p = 2;
    std::int64_t precision = 32;                 // entries are known mod p^precision
    std::vector<zp_vector> vectors;              // in the ORIGINAL coordinates
    std::vector<std::size_t> permutation;        // permutation[i] = original coordinate at slot i
    bool triangular_certificate = false;

    std::vector<zp_vector> permuted_vectors() const {
        std::vector<zp_vector> out;
        out.reserve(vectors.size());
        for (const auto& v : vectors) {
            zp_vector w(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[permutation[i]];
            out.push_back(std::move(w));
        }
        return out;
    }
};

namespace detail {

inline void check_zp_input(const std::vector<zp_vector>& vectors, std::size_t ambient_rank,
                           std::uint64_t p, std::int64_t precision) {
    if (!is_prime(p)) throw std::invalid_argument("zp: p must be prime");
    if (precision < 1) throw std::invalid_argument("zp: precision must be >= 1");
    if (vectors.size() > ambient_rank)
        throw std::invalid_argument("zp: more vectors than the ambient rank");
    for (const auto& v : vectors)
        if (v.size() != ambient_rank) throw std::invalid_argument("zp: vector length mismatch");
}

inline std::int64_t p_valuation(const integer& x, std::uint64_t p, std::int64_t cap) {
    if (x == 0) return cap;
    integer y = x;
    std::int64_t v = 0;
    while (v < cap && y % p == 0) {
        y /= p;
        ++v;
    }
    return v;
}

/// Smith elimination of the generator matrix A (columns = the generators)
/// over Z/p^M, with the row transform tracked: U*A*V is diagonal with
/// entries p^diag[t] (diag[t] = precision marks a zero diagonal).  Always
/// choosing a minimal-valuation pivot keeps every division exact.
struct smith_form {
    std::uint64_t p;
    std::int64_t precision;
    integer modulus;
    std::size_t rank_cols;               // number of generators
    std::vector<std::int64_t> diag;      // one valuation per generator
    std::vector<zp_vector> U;            // R x R row transform

    /// Whether x lies in the span of the generators at this precision.
    bool contains(const zp_vector& x) const {
        std::size_t R = U.size();
        zp_vector y(R, integer(0));
        for (std::size_t i = 0; i < R; ++i) {
            integer acc = 0;
            for (std::size_t j = 0; j < R; ++j) acc += U[i][j] * x[j];
            y[i] = mod_floor(acc, modulus);
        }
        for (std::size_t t = 0; t < R; ++t) {
            std::int64_t need = t < rank_cols ? diag[t] : precision;
            if (p_valuation(y[t], p, precision) < need) return false;
        }
        return true;
    }
};

inline smith_form smith_eliminate(const std::vector<zp_vector>& gens, std::size_t ambient_rank,
                                  std::uint64_t p, std::int64_t precision) {
    integer modulus = pow_integer(p, precision);
    std::size_t R = ambient_rank, k = gens.size();
    std::vector<zp_vector> D(R, zp_vector(k, integer(0)));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < R; ++i) D[i][j] = mod_floor(gens[j][i], modulus);

    smith_form sf;
    sf.p = p;
    sf.precision = precision;
    sf.modulus = modulus;
    sf.rank_cols = k;
    sf.diag.assign(k, precision);
    sf.U.assign(R, zp_vector(R, integer(0)));
    for (std::size_t i = 0; i < R; ++i) sf.U[i][i] = 1;

    for (std::size_t t = 0; t < k; ++t) {
        std::size_t bi = R, bj = k;
        std::int64_t best = precision;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < k; ++j) {
                std::int64_t v = p_valuation(D[i][j], p, precision);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi == R) break; // remaining block vanishes mod p^M
        std::swap(D[t], D[bi]);
        std::swap(sf.U[t], sf.U[bi]);
        for (std::size_t i = 0; i < R; ++i) std::swap(D[i][t], D[i][bj]);

        integer pa = pow_integer(p, best);
        integer inv = mod_inverse(D[t][t] / pa, modulus);
        for (std::size_t j = 0; j < k; ++j) D[t][j] = D[t][j] * inv % modulus;
        for (std::size_t j = 0; j < R; ++j) sf.U[t][j] = sf.U[t][j] * inv % modulus;

        for (std::size_t i = t + 1; i < R; ++i) {
            if (D[i][t] == 0) continue;
            integer q = D[i][t] / pa; // exact: the pivot valuation is minimal
            for (std::size_t j = 0; j < k; ++j) D[i][j] = mod_floor(D[i][j] - q * D[t][j], modulus);
            for (std::size_t j = 0; j < R; ++j) sf.U[i][j] = mod_floor(sf.U[i][j] - q * sf.U[t][j], modulus);
        }
        for (std::size_t j = t + 1; j < k; ++j) {
            if (D[t][j] == 0) continue;
            integer q = D[t][j] / pa;
            for (std::size_t i = 0; i < R; ++i) D[i][j] = mod_floor(D[i][j] - q * D[i][t], modulus);
        }
        sf.diag[t] = best;
    }
    return sf;
}

} // namespace detail

/// The inductive triangular-basis construction: project off the slots owned
/// by earlier vectors, locate a unit coefficient at or after the current
/// slot (lowest index wins), scale it to 1 and swap it into place.  Fails
/// when no unit pivot exists, which certifies the input is not a chain of
/// direct summands.
inline zp_basis triangular_basis(const std::vector<zp_vector>& vectors, std::size_t ambient_rank,
                                 std::uint64_t p, std::int64_t precision = 32) {
    detail::check_zp_input(vectors, ambient_rank, p, precision);
    integer modulus = pow_integer(p, precision);

    zp_basis basis;
    basis.p = p;
    basis.precision = precision;
    basis.permutation.resize(ambient_rank);
    std::iota(basis.permutation.begin(), basis.permutation.end(), std::size_t{0});

    // work[i][s] = coefficient of output vector i at SLOT s (permuted coords)
    std::vector<zp_vector> work;
    for (std::size_t n = 0; n < vectors.size(); ++n) {
        zp_vector v(ambient_rank);
        for (std::size_t s = 0; s < ambient_rank; ++s)
            v[s] = mod_floor(vectors[n][basis.permutation[s]], modulus);
        // eliminate the slots owned by earlier vectors (their diagonal is 1)
        for (std::size_t i = 0; i < n; ++i) {
            integer c = v[i];
            if (c == 0) continue;
            for (std::size_t s = 0; s < ambient_rank; ++s)
                v[s] = mod_floor(v[s] - c * work[i][s], modulus);
        }
        // lowest unit coefficient at slot >= n
        std::size_t pivot = ambient_rank;
        for (std::size_t s = n; s < ambient_rank; ++s) {
            if (v[s] % p != 0) {
                pivot = s;
                break;
            }
        }
        if (pivot == ambient_rank) {
            bool all_zero = true;
            for (const auto& x : v) all_zero &= (x == 0);
            throw std::domain_error(all_zero
                                        ? "zp: vectors are dependent at this precision"
                                        : "zp: no unit pivot; the input is not a summand chain");
        }
        integer inv = mod_inverse(v[pivot], modulus);
        for (auto& x : v) x = x * inv % modulus;
        if (pivot != n) {
            std::swap(basis.permutation[pivot], basis.permutation[n]);
            for (auto& w : work) std::swap(w[pivot], w[n]);
            std::swap(v[pivot], v[n]);
        }
        work.push_back(std::move(v));
    }

    // map back to the original coordinates
    for (const auto& w : work) {
        zp_vector v(ambient_rank);
        for (std::size_t s = 0; s < ambient_rank; ++s) v[basis.permutation[s]] = w[s];
        basis.vectors.push_back(std::move(v));
    }
    basis.triangular_certificate = true;
    return basis;
}

/// Purity test at precision: the span is pure iff its reduction mod p has
/// full rank, i.e. a basis extends to triangular form.  Throws
/// precision_error when the generators cannot be certified independent at
/// this precision.
inline bool is_pure(const std::vector<zp_vector>& sub, std::size_t ambient_rank, std::uint64_t p,
                    std::int64_t precision = 32) {
    detail::check_zp_input(sub, ambient_rank, p, precision);
    detail::smith_form sf = detail::smith_eliminate(sub, ambient_rank, p, precision);
    for (std::int64_t a : sf.diag) {
        if (a >= precision)
            throw precision_error("zp: a pivot valuation reached the precision; independence not certified");
        if (a != 0) return false;
    }
    return true;
}

/// Completes a pure submodule to a full ambient basis: the first |sub|
/// vectors span the input submodule, the rest are standard basis vectors.
inline zp_basis complete_to_summand(const std::vector<zp_vector>& sub, std::size_t ambient_rank,
                                    std::uint64_t p, std::int64_t precision = 32) {
    if (!is_pure(sub, ambient_rank, p, precision))
        throw std::domain_error("zp: complete_to_summand requires a pure submodule");
    zp_basis basis = triangular_basis(sub, ambient_rank, p, precision);
    for (std::size_t s = sub.size(); s < ambient_rank; ++s) {
        zp_vector e(ambient_rank, integer(0));
        e[basis.permutation[s]] = 1;
        basis.vectors.push_back(std::move(e));
    }
    return basis;
}

/// The root w of v with n*w = v inside the span of `sub`, if one exists at
/// precision.  Since all groups here are torsion-free the root is unique:
/// w = v/n must be coordinatewise integral and lie in the span; absence is
/// certified by the valuation of the obstructing coordinate.  Roots for the
/// part of n coprime to p always exist inside the span.
inline std::optional<zp_vector> has_root(const zp_vector& v, std::uint64_t n,
                                         const std::vector<zp_vector>& sub, std::uint64_t p,
                                         std::int64_t precision = 32) {
    if (n == 0) throw std::invalid_argument("zp: n must be positive");
    detail::check_zp_input(sub, v.size(), p, precision);
    std::int64_t k = 0;
    std::uint64_t m = n;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (k >= precision) throw precision_error("zp: the p-part of n exceeds the precision budget");

    integer modulus = pow_integer(p, precision);
    integer minv = mod_inverse(integer(m), modulus);
    zp_vector x(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) x[j] = mod_floor(v[j], modulus) * minv % modulus;

    // divide by p^k; a coordinate of valuation < k obstructs the root
    integer pk = pow_integer(p, k);
    std::int64_t out_prec = precision - k;
    integer out_mod = pow_integer(p, out_prec);
    zp_vector w(v.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (detail::p_valuation(x[j], p, precision) < k) return std::nullopt;
        w[j] = mod_floor(x[j] / pk, out_mod);
    }

    detail::smith_form sf = detail::smith_eliminate(sub, v.size(), p, out_prec);
    if (!sf.contains(w)) return std::nullopt;
    return w;
}

} // namespace lcab
