#pragma once

#include "lcab/laurent.hpp"
#include "lcab/numeric.hpp"
#include "lcab/padic.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcab {

/// Result of a normal-closure / density search in a truncated model.
struct closure_report {
    bool target_contained = false;
    std::uint64_t generators_used = 0;
    std::map<std::string, std::int64_t> window;   // truncation parameters (incl. seed and trials)
    std::optional<std::string> witness;           // on failure, a target element not reached
    std::map<std::string, std::int64_t> details;  // scenario extras (achieved floor, ranks, ...)
};

/// The obstruction certificate of the Q^n no-go argument: all generated
/// coefficients lie in Z[1/p : p in pi], so the module misses 1/q.
struct no_go_certificate {
    std::vector<integer> prime_set;                          // pi, sorted
    std::uint64_t excluded_prime = 2;                        // smallest prime not in pi
    std::vector<std::vector<std::vector<rational>>> matrices; // the generators followed by their inverses
    std::string statement;
};

// ---------------------------------------------------------------------------
// AGL(1, q) and the cyclic wreath window
// ---------------------------------------------------------------------------

/// F_q for q = p or p^2, q <= 121, with dense add/mul tables.
class small_field {
public:
    explicit small_field(std::uint64_t q) : q_(q) {
        if (q < 2 || q > 121) throw std::invalid_argument("small_field: q must be in [2, 121]");
        std::uint64_t p = smallest_factor(q);
        if (q != p && q != p * p) throw std::invalid_argument("small_field: q must be p or p^2");
        p_ = p;
        add_.assign(q * q, 0);
        mul_.assign(q * q, 0);
        if (q == p) {
            for (std::uint64_t a = 0; a < q; ++a)
                for (std::uint64_t b = 0; b < q; ++b) {
                    add_[a * q + b] = static_cast<std::uint8_t>((a + b) % p);
                    mul_[a * q + b] = static_cast<std::uint8_t>(a * b % p);
                }
        } else {
            // F_p[x] / (x^2 + cx + d) for an irreducible monic quadratic
            std::uint64_t c = 0, d = 0;
            bool found = false;
            for (c = 0; c < p && !found; ++c)
                for (d = 0; d < p && !found; ++d) {
                    bool has_root = false;
                    for (std::uint64_t x = 0; x < p; ++x)
                        if ((x * x + c * x + d) % p == 0) has_root = true;
                    if (!has_root) {
                        found = true;
                        irr_c_ = c;
                        irr_d_ = d;
                    }
                }
            if (!found) throw std::logic_error("small_field: no irreducible quadratic found");
            for (std::uint64_t a = 0; a < q; ++a)
                for (std::uint64_t b = 0; b < q; ++b) {
                    std::uint64_t a0 = a % p, a1 = a / p, b0 = b % p, b1 = b / p;
                    add_[a * q + b] = static_cast<std::uint8_t>((a0 + b0) % p + (a1 + b1) % p * p);
                    // (a0 + a1 x)(b0 + b1 x) with x^2 = -(c x + d)
                    std::uint64_t e = a1 * b1 % p;
                    std::uint64_t c0 = (a0 * b0 + (p - irr_d_ % p) % p * e) % p;
                    std::uint64_t c1 = (a0 * b1 + a1 * b0 + (p - irr_c_ % p) % p * e) % p;
                    mul_[a * q + b] = static_cast<std::uint8_t>(c0 + c1 * p);
                }
        }
        inv_.assign(q, 0);
        for (std::uint64_t a = 1; a < q; ++a)
            for (std::uint64_t b = 1; b < q; ++b)
                if (mul(a, b) == 1) inv_[a] = static_cast<std::uint8_t>(b);
        neg_.assign(q, 0);
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b)
                if (add(a, b) == 0) neg_[a] = static_cast<std::uint8_t>(b);
    }

    std::uint64_t order() const { return q_; }
    std::uint64_t characteristic() const { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return add_[a * q_ + b]; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_[a * q_ + b]; }
    std::uint64_t neg(std::uint64_t a) const { return neg_[a]; }
    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("small_field: inverse of zero");
        return inv_[a];
    }

    /// A generator of the cyclic group F_q^*.
    std::uint64_t unit_generator() const {
        for (std::uint64_t g = 1; g < q_; ++g) {
            std::uint64_t x = g, n = 1;
            while (x != 1) {
                x = mul(x, g);
                ++n;
            }
            if (n == q_ - 1) return g;
        }
        throw std::logic_error("small_field: no unit generator");
    }

private:
    static std::uint64_t smallest_factor(std::uint64_t n) {
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return d;
        return n;
    }

    std::uint64_t q_, p_ = 0, irr_c_ = 0, irr_d_ = 0;
    std::vector<std::uint8_t> add_, mul_, inv_, neg_;
};

/// AGL(1, q) = F_q x| F_q^*: pairs (a, b) with (a,b)(a',b') = (a + b a', b b').
/// The monolith is the translation subgroup {(a, 1)}, noncentral for q > 2.
class agl1_group {
public:
    explicit agl1_group(std::uint64_t q) : field_(q) {
        if (q <= 2) throw std::invalid_argument("AGL1(q): the monolith is noncentral only for q > 2");
    }

    const small_field& field() const { return field_; }
    std::uint64_t order() const { return field_.order() * (field_.order() - 1); }

    std::uint64_t encode(std::uint64_t a, std::uint64_t b) const { return a * (field_.order() - 1) + (b - 1); }
    std::pair<std::uint64_t, std::uint64_t> decode(std::uint64_t e) const {
        std::uint64_t q1 = field_.order() - 1;
        return {e / q1, e % q1 + 1};
    }

    std::uint64_t identity() const { return encode(0, 1); }
    std::uint64_t compose(std::uint64_t x, std::uint64_t y) const {
        auto [a, b] = decode(x);
        auto [c, d] = decode(y);
        return encode(field_.add(a, field_.mul(b, c)), field_.mul(b, d));
    }
    std::uint64_t inverse(std::uint64_t x) const {
        auto [a, b] = decode(x);
        std::uint64_t binv = field_.inv(b);
        return encode(field_.neg(field_.mul(binv, a)), binv);
    }
    bool is_translation(std::uint64_t x) const { return decode(x).second == 1; }

    std::vector<std::uint64_t> generators() const {
        return {encode(1, 1), encode(0, field_.unit_generator())};
    }

private:
    small_field field_;
};

/// The cyclic-window wreath model F^(C_k) x| C_k with the shift action.
class wreath_window {
public:
    wreath_window(const agl1_group& f, std::size_t k, std::uint64_t budget = 10'000'000)
        : F_(f), k_(k) {
        if (k < 1) throw std::invalid_argument("wreath_window: k must be >= 1");
        std::uint64_t n = k;
        for (std::size_t i = 0; i < k; ++i) {
            if (n > budget / F_.order()) throw std::invalid_argument("wreath_window: enumeration budget exceeded");
            n *= F_.order();
        }
        order_ = n;
    }

    std::uint64_t order() const { return order_; }
    std::size_t window() const { return k_; }
    const agl1_group& fibre() const { return F_; }

    std::uint64_t encode(const std::vector<std::uint64_t>& base, std::size_t shift) const {
        std::uint64_t e = shift;
        for (std::size_t i = k_; i-- > 0;) e = e * F_.order() + base[i];
        return e;
    }
    void decode(std::uint64_t e, std::vector<std::uint64_t>& base, std::size_t& shift) const {
        base.resize(k_);
        for (std::size_t i = 0; i < k_; ++i) {
            base[i] = e % F_.order();
            e /= F_.order();
        }
        shift = static_cast<std::size_t>(e);
    }

    std::uint64_t identity() const { return 0; }

    std::uint64_t compose(std::uint64_t x, std::uint64_t y) const {
        std::vector<std::uint64_t> f, g, h(k_);
        std::size_t s, t;
        decode(x, f, s);
        decode(y, g, t);
        for (std::size_t i = 0; i < k_; ++i) h[i] = F_.compose(f[i], g[(i + k_ - s) % k_]);
        return encode(h, (s + t) % k_);
    }

    std::uint64_t inverse(std::uint64_t x) const {
        std::vector<std::uint64_t> f, h(k_);
        std::size_t s;
        decode(x, f, s);
        for (std::size_t i = 0; i < k_; ++i) h[i] = F_.inverse(f[(i + s) % k_]);
        return encode(h, (k_ - s) % k_);
    }

    std::vector<std::uint64_t> generators() const {
        std::vector<std::uint64_t> gens;
        std::vector<std::uint64_t> base(k_, F_.identity());
        for (std::uint64_t fg : F_.generators()) {
            base[0] = fg;
            gens.push_back(encode(base, 0));
            base[0] = F_.identity();
        }
        if (k_ > 1) gens.push_back(encode(base, 1)); // the shift
        return gens;
    }

    /// Identity-based subgroup closure with incremental generator addition.
    struct subgroup {
        std::vector<char> member;
        std::vector<std::uint64_t> elements;
        std::vector<std::uint64_t> gens;
    };

    void grow(subgroup& h, std::uint64_t new_gen) const {
        if (h.member.empty()) {
            h.member.assign(order_, 0);
            h.member[identity()] = 1;
            h.elements.push_back(identity());
        }
        if (h.member[new_gen]) return;
        h.gens.push_back(new_gen);
        h.gens.push_back(inverse(new_gen));
        // every known element times the new generator seeds the frontier
        std::vector<std::uint64_t> frontier;
        for (std::uint64_t e : h.elements) {
            for (std::uint64_t g : {new_gen, inverse(new_gen)}) {
                std::uint64_t c = compose(e, g);
                if (!h.member[c]) {
                    h.member[c] = 1;
                    h.elements.push_back(c);
                    frontier.push_back(c);
                }
            }
        }
        while (!frontier.empty()) {
            std::uint64_t e = frontier.back();
            frontier.pop_back();
            for (std::uint64_t g : h.gens) {
                std::uint64_t c = compose(e, g);
                if (!h.member[c]) {
                    h.member[c] = 1;
                    h.elements.push_back(c);
                    frontier.push_back(c);
                }
            }
        }
    }

    /// Normal closure of `start` in the whole wreath window.
    subgroup normal_closure(std::uint64_t start) const {
        subgroup h;
        std::vector<std::uint64_t> seeds{start};
        grow(h, start);
        std::vector<std::uint64_t> ambient = generators();
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            for (std::uint64_t g : ambient) {
                std::uint64_t c = compose(compose(g, seeds[i]), inverse(g));
                if (!h.member[c]) {
                    seeds.push_back(c);
                    grow(h, c);
                }
            }
        }
        return h;
    }

    /// All elements of M^(C_k): translation tuples with zero shift.
    std::vector<std::uint64_t> monolith_window() const {
        const std::uint64_t m = F_.field().order(); // |translations| = q
        std::vector<std::uint64_t> out;
        std::vector<std::uint64_t> base(k_);
        std::vector<std::uint64_t> idx(k_, 0);
        while (true) {
            for (std::size_t i = 0; i < k_; ++i) base[i] = F_.encode(idx[i], 1);
            out.push_back(encode(base, 0));
            std::size_t i = 0;
            while (i < k_ && ++idx[i] == m) idx[i++] = 0;
            if (i == k_) break;
        }
        return out;
    }

private:
    const agl1_group& F_;
    std::size_t k_;
    std::uint64_t order_;
};

/// Normal closures of random nontrivial elements of AGL1(q) wr C_k all
/// contain the monolith window M^(C_k).
inline closure_report wreath_monolith_window(std::uint64_t q, std::size_t k, std::uint64_t trials,
                                             std::uint64_t seed, std::uint64_t budget = 10'000'000) {
    if (k < 2) throw std::invalid_argument("wreath_monolith_window: k must be >= 2");
    agl1_group F(q);
    wreath_window W(F, k, budget);
    std::vector<std::uint64_t> target = W.monolith_window();

    closure_report report;
    report.target_contained = true;
    report.window = {{"q", static_cast<std::int64_t>(q)},
                     {"k", static_cast<std::int64_t>(k)},
                     {"trials", static_cast<std::int64_t>(trials)},
                     {"seed", static_cast<std::int64_t>(seed)},
                     {"group_order", static_cast<std::int64_t>(W.order())}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(1, W.order() - 1);
    for (std::uint64_t t = 0; t < trials && report.target_contained; ++t) {
        std::uint64_t start = pick(rng);
        if (start == W.identity()) start = 1;
        auto h = W.normal_closure(start);
        ++report.generators_used;
        for (std::uint64_t m : target) {
            if (!h.member[m]) {
                report.target_contained = false;
                report.witness = "monolith element id " + std::to_string(m) +
                                 " missed from the closure of id " + std::to_string(start);
                break;
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Laurent ideal density
// ---------------------------------------------------------------------------

/// Rank of the projection of {t^j g : -N <= j <= N} onto the coefficient
/// window [-N/2, N/2], together with the window dimension.
inline std::pair<std::size_t, std::size_t> laurent_shift_span_rank(std::uint64_t p, std::int64_t N,
                                                                   const laurent& g) {
    if (N < 2) throw std::invalid_argument("laurent density: N must be >= 2");
    if (g.is_zero()) throw std::invalid_argument("laurent density: g must be nonzero");
    std::int64_t half = N / 2;
    std::size_t dim = static_cast<std::size_t>(2 * half + 1);
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::int64_t j = -N; j <= N; ++j) {
        laurent shifted = g.shifted(j);
        std::vector<std::uint32_t> row(dim);
        for (std::int64_t e = -half; e <= half; ++e)
            row[static_cast<std::size_t>(e + half)] = shifted.coeff(e);
        rows.push_back(std::move(row));
    }
    // F_p Gaussian elimination
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        std::uint64_t inv = static_cast<std::uint64_t>(mod_inverse(integer(rows[rank][col]), integer(p)));
        for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(x * inv % p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            std::uint64_t c = rows[r][col];
            for (std::size_t j = 0; j < dim; ++j)
                rows[r][j] = static_cast<std::uint32_t>((rows[r][j] + (p - c % p) * rows[rank][j]) % p);
        }
        ++rank;
    }
    return {rank, dim};
}

/// For random nonzero g supported in [-N/2, N/2], the F_p-span of the
/// shifts {t^j g : |j| <= N} covers the whole window: the principal ideal
/// generated by g is dense at window scale.
inline closure_report laurent_ideal_density(std::uint64_t p, std::int64_t N, std::uint64_t trials,
                                            std::uint64_t seed) {
    if (N < 2) throw std::invalid_argument("laurent_ideal_density: N must be >= 2");
    closure_report report;
    report.target_contained = true;
    report.window = {{"p", static_cast<std::int64_t>(p)},
                     {"N", N},
                     {"trials", static_cast<std::int64_t>(trials)},
                     {"seed", static_cast<std::int64_t>(seed)}};
    std::mt19937_64 rng(seed);
    std::int64_t half = N / 2;
    std::uniform_int_distribution<std::uint32_t> coeff(0, static_cast<std::uint32_t>(p - 1));
    std::size_t dim = static_cast<std::size_t>(2 * half + 1);
    report.details["window_dimension"] = static_cast<std::int64_t>(dim);
    for (std::uint64_t t = 0; t < trials && report.target_contained; ++t) {
        std::vector<std::uint32_t> cs(dim);
        bool nonzero = false;
        for (auto& c : cs) nonzero |= (c = coeff(rng)) != 0;
        if (!nonzero) cs[dim / 2] = 1;
        laurent g = laurent::from_coeffs(p, -half, cs);
        auto [rank, d] = laurent_shift_span_rank(p, N, g);
        ++report.generators_used;
        if (rank != d) {
            report.target_contained = false;
            report.witness = g.str();
            report.details["rank"] = static_cast<std::int64_t>(rank);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Q_p x| <mult by p>
// ---------------------------------------------------------------------------

/// The Z_p-module generated by the s-orbit slice {p^j a : |j| <= K} is
/// p^(v(a)-K) Z_p; the achieved valuation floor is recorded.
inline closure_report qp_semidirect_monolith(std::uint64_t p, std::int64_t K, const padic& a) {
    if (a.prime() != p) throw std::invalid_argument("qp_semidirect_monolith: prime mismatch");
    if (a.is_zero()) throw std::invalid_argument("qp_semidirect_monolith: a must be nonzero");
    if (K < 0) throw std::invalid_argument("qp_semidirect_monolith: K must be >= 0");
    closure_report report;
    report.window = {{"p", static_cast<std::int64_t>(p)}, {"K", K}};
    std::int64_t floor = a.valuation() + K + 1;
    for (std::int64_t j = -K; j <= K; ++j) {
        padic shifted = padic::make(p, j, 1, a.precision()) * a;
        floor = std::min(floor, shifted.valuation());
        ++report.generators_used;
    }
    report.details["floor_valuation"] = floor;
    report.details["target_valuation"] = a.valuation() - K;
    report.target_contained = floor <= a.valuation() - K;
    if (!report.target_contained)
        report.witness = "p^" + std::to_string(a.valuation() - K) + " not reached (floor " +
                         std::to_string(floor) + ")";
    return report;
}

// ---------------------------------------------------------------------------
// Hall's window model
// ---------------------------------------------------------------------------

namespace detail {

/// Incremental reduced basis of a Q-subspace.
class rational_span {
public:
    explicit rational_span(std::size_t dim) : dim_(dim) {}

    bool add(std::vector<rational> v) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const rational& c = v[pivots_[i]];
            if (c != 0)
                for (std::size_t j = 0; j < dim_; ++j) v[j] -= c * rows_[i][j];
        }
        std::size_t pivot = dim_;
        for (std::size_t j = 0; j < dim_; ++j)
            if (v[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot == dim_) return false;
        rational lead = v[pivot];
        for (auto& x : v) x /= lead;
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

    std::size_t dimension() const { return rows_.size(); }
    const std::vector<std::vector<rational>>& rows() const { return rows_; }

private:
    std::size_t dim_;
    std::vector<std::vector<rational>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace detail

/// Cyclic-window version of Hall's construction: xi shifts the k
/// coordinates cyclically, eta scales coordinate m by prime_assignment[m].
/// Reports whether the Q-span of the orbit of v under <xi, eta> is all of
/// Q^k.  Repeated primes are allowed as a deliberate negative control.
inline closure_report hall_window_minimality(std::size_t k, const std::vector<std::uint64_t>& prime_assignment,
                                             const std::vector<rational>& v) {
    if (k < 1 || prime_assignment.size() != k)
        throw std::invalid_argument("hall_window_minimality: need one prime per coordinate");
    for (std::uint64_t p : prime_assignment)
        if (!is_prime(p)) throw std::invalid_argument("hall_window_minimality: assignments must be prime");
    if (v.size() != k) throw std::invalid_argument("hall_window_minimality: v has the wrong length");
    bool nonzero = false;
    for (const auto& x : v) nonzero |= x != 0;
    if (!nonzero) throw std::invalid_argument("hall_window_minimality: v must be nonzero");

    detail::rational_span span(k);
    std::vector<std::vector<rational>> queue{v};
    span.add(v);
    std::uint64_t applied = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::vector<rational> cur = queue[i];
        // xi: coordinate m moves to m+1 (cyclically)
        std::vector<rational> sh(k);
        for (std::size_t m = 0; m < k; ++m) sh[(m + 1) % k] = cur[m];
        // eta: scale coordinate m by rho(m)
        std::vector<rational> sc(k);
        for (std::size_t m = 0; m < k; ++m) sc[m] = cur[m] * rational(prime_assignment[m]);
        applied += 2;
        if (span.add(sh)) queue.push_back(std::move(sh));
        if (span.add(sc)) queue.push_back(std::move(sc));
        if (span.dimension() == k) break;
    }

    closure_report report;
    report.target_contained = span.dimension() == k;
    report.generators_used = applied;
    report.window = {{"k", static_cast<std::int64_t>(k)}};
    report.details["span_dimension"] = static_cast<std::int64_t>(span.dimension());
    bool distinct = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) distinct &= prime_assignment[i] != prime_assignment[j];
    report.details["distinct_primes"] = distinct ? 1 : 0;
    if (!report.target_contained) report.witness = "orbit span has dimension " + std::to_string(span.dimension());
    return report;
}

// ---------------------------------------------------------------------------
// The rational no-go certificate
// ---------------------------------------------------------------------------

using rational_matrix = std::vector<std::vector<rational>>;

inline rational_matrix invert_rational_matrix(const rational_matrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    rational_matrix a = m;
    rational_matrix inv(n, std::vector<rational>(n, rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == n) throw std::domain_error("singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        rational lead = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= lead;
            inv[col][j] /= lead;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            rational c = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= c * a[col][j];
                inv[r][j] -= c * inv[col][j];
            }
        }
    }
    return inv;
}

inline rational_matrix mul_rational_matrix(const rational_matrix& a, const rational_matrix& b) {
    std::size_t n = a.size();
    rational_matrix c(n, std::vector<rational>(n, rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k2 = 0; k2 < n; ++k2) {
            if (a[i][k2] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k2] * b[k2][j];
        }
    return c;
}

/// Computes pi = primes dividing any denominator among the generators and
/// their inverses, and the smallest prime q outside pi.  Every word in the
/// generators maps the standard basis into Z[1/p : p in pi]^n, so the
/// generated module is proper: Q^n is never a minimal closed normal
/// subgroup under a compactly generated action.
inline no_go_certificate rational_no_go(const std::vector<rational_matrix>& matrices) {
    if (matrices.empty()) throw std::invalid_argument("rational_no_go: need at least one matrix");
    std::size_t n = matrices.front().size();
    if (n < 1) throw std::invalid_argument("rational_no_go: need n >= 1");
    no_go_certificate cert;
    for (const auto& m : matrices) {
        if (m.size() != n) throw std::invalid_argument("rational_no_go: mixed matrix sizes");
        cert.matrices.push_back(m);
    }
    for (const auto& m : matrices) cert.matrices.push_back(invert_rational_matrix(m));

    std::vector<integer> primes;
    for (const auto& m : cert.matrices)
        for (const auto& row : m)
            for (const auto& entry : row)
                for (const integer& f : factor(denominator(entry))) primes.push_back(f);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    cert.prime_set = std::move(primes);

    for (std::uint64_t q = 2;; ++q) {
        if (!is_prime(q)) continue;
        if (!std::binary_search(cert.prime_set.begin(), cert.prime_set.end(), integer(q))) {
            cert.excluded_prime = q;
            break;
        }
    }
    std::string pis;
    for (std::size_t i = 0; i < cert.prime_set.size(); ++i)
        pis += (i ? ", " : "") + cert.prime_set[i].str();
    cert.statement = "the module generated by all words in the matrices applied to the standard basis "
                     "has coefficients in Z[1/p : p in {" + pis + "}]; the prime " +
                     std::to_string(cert.excluded_prime) + " divides no denominator, so 1/" +
                     std::to_string(cert.excluded_prime) + " * e_1 is never reached";
    return cert;
}

// ---------------------------------------------------------------------------
// Diagonal minimal subgroups of (Q_p x Q_p) x| <mult by p>
// ---------------------------------------------------------------------------

/// Desk-scale verification of the continuum of diagonals L_lambda =
/// {(a, lambda a)}: each is invariant under the shift action and Z_p
/// scaling, distinct lambdas give distinct subgroups at precision, and the
/// module generated by one nonzero element exhausts the valuation window.
inline closure_report diagonal_minimals(std::uint64_t p, const std::vector<padic>& lambdas,
                                        std::int64_t K, std::int64_t precision = padic::default_precision) {
    if (K < 0) throw std::invalid_argument("diagonal_minimals: K must be >= 0");
    for (const auto& l : lambdas)
        if (l.prime() != p) throw std::invalid_argument("diagonal_minimals: lambda prime mismatch");
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (congruent(lambdas[i], lambdas[j]))
                throw std::invalid_argument("diagonal_minimals: duplicate lambdas at precision");

    closure_report report;
    report.target_contained = true;
    report.window = {{"p", static_cast<std::int64_t>(p)},
                     {"K", K},
                     {"precision", precision},
                     {"lambdas", static_cast<std::int64_t>(lambdas.size())}};

    std::vector<padic> samples{padic::from_integer(p, 1, precision),
                               padic::make(p, -1, 1, precision),
                               padic::from_integer(p, 1 + static_cast<std::int64_t>(p), precision)};
    std::vector<padic> scalars{padic::from_integer(p, 1 + static_cast<std::int64_t>(p), precision),
                               padic::from_integer(p, 2 * static_cast<std::int64_t>(p) + 1, precision)};

    auto fail = [&](const std::string& why) {
        report.target_contained = false;
        report.witness = why;
    };

    padic one = padic::from_integer(p, 1, precision);
    for (std::size_t i = 0; i < lambdas.size() && report.target_contained; ++i) {
        const padic& lambda = lambdas[i];
        for (const padic& a : samples) {
            // s-action: (a, la) -> (pa, p(la)) must stay of the form (x, lx)
            padic s_first = padic::make(p, 1, 1, precision) * a;
            padic s_second = padic::make(p, 1, 1, precision) * (lambda * a);
            if (!congruent(s_second, lambda * s_first)) {
                fail("shift action leaves L_lambda for lambda = " + lambda.str());
                break;
            }
            // Z_p scaling
            for (const padic& mu : scalars) {
                if (!congruent(mu * (lambda * a), lambda * (mu * a))) {
                    fail("Z_p scaling leaves L_lambda for lambda = " + lambda.str());
                    break;
                }
            }
            if (!report.target_contained) break;
            // the orbit of (a, lambda a) under {p^j} exhausts the window
            std::int64_t floor = a.valuation() + K + 1;
            for (std::int64_t j = -K; j <= K; ++j)
                floor = std::min(floor, (padic::make(p, j, 1, precision) * a).valuation());
            if (floor != a.valuation() - K) {
                fail("orbit of (" + a.str() + ", lambda*a) reached floor " + std::to_string(floor) +
                     " instead of " + std::to_string(a.valuation() - K));
                break;
            }
            ++report.generators_used;
        }
        if (!report.target_contained) break;
        // pairwise distinctness witnesses: (1, lambda_i) lies outside L_lambda_j
        for (std::size_t j = 0; j < lambdas.size(); ++j) {
            if (i == j) continue;
            if (congruent(lambdas[i] * one, lambdas[j] * one)) {
                fail("lambda " + lambdas[i].str() + " and " + lambdas[j].str() +
                     " give the same diagonal at precision");
                break;
            }
        }
    }
    report.details["distinct_diagonals"] = report.target_contained
                                               ? static_cast<std::int64_t>(lambdas.size())
                                               : 0;
    return report;
}

} // namespace lcab
