#pragma once

#include "satedge/constructions.hpp"
#include "satedge/error.hpp"
#include "satedge/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Closed-form quantities of the K_{p+1}-saturation problem, all in exact rationals.
// Decimal coefficients (15.9, 32.4, ...) are kept as exact tenths.

namespace satedge::formulas {

/// 4p^2 - 11p + 8, the recurring denominator.
inline Rational quad(const Rational& p) { return 4 * p * p - 11 * p + 8; }

inline void require_p(std::int64_t p) {
    if (p < 3) throw invalid_argument("formula needs p >= 3");
}

/// Leading coefficient 2(p-2)^2 / (p(4p^2-11p+8)).
inline Rational main_term(std::int64_t p) {
    require_p(p);
    Rational q(p);
    return 2 * (q - 2) * (q - 2) / (q * quad(q));
}

/// Linear coefficient (p-2)(2p-3) / (4p^2-11p+8) of the divisible-case minimum.
inline Rational linear_term(std::int64_t p) {
    require_p(p);
    Rational q(p);
    return (q - 2) * (2 * q - 3) / quad(q);
}

/// Exact minimum over non-Turán extremal graphs when modulus(p) divides n.
inline Rational divisible_minimum(std::int64_t n, std::int64_t p) {
    require_p(p);
    const auto m = static_cast<std::int64_t>(construction_modulus(static_cast<int>(p)));
    if (n < 0 || n % m != 0)
        throw invalid_argument("divisible_minimum: " + std::to_string(m) + " does not divide n=" + std::to_string(n));
    Rational nn(n);
    return main_term(p) * nn * nn - linear_term(p) * nn;
}

inline void check_h1_guard(std::int64_t p, std::int64_t x, std::int64_t y) {
    require_p(p);
    if (x < 0 || y < 0 || !(p * (p - 1) * (3 * p - 4) * x > y))
        throw invalid_argument("h1 feasibility guard p(p-1)(3p-4)x > y fails");
}

/// f_{p+1}(H_1) as the four-term polynomial in n = modulus*x + y and y.
inline Rational f_h1_closed(std::int64_t p, std::int64_t x, std::int64_t y) {
    check_h1_guard(p, x, y);
    Rational q(p), yy(y);
    Rational n = Rational(static_cast<std::int64_t>(construction_modulus(static_cast<int>(p)))) * x + yy;
    Rational Q = quad(q);
    return main_term(p) * n * n - linear_term(p) * n + 8 * (q - 1) * (q - 1) * (q - 1) / (q * Q) * yy * yy -
           2 * (q - 1) * (q - 1) / Q * yy;
}

/// The same count as pairs inside V_0 plus pairs inside each V_i.
inline Rational f_h1_binomial(std::int64_t p, std::int64_t x, std::int64_t y) {
    check_h1_guard(p, x, y);
    Rational q(p);
    return choose2(2 * (q - 1) * (q - 2) * (q - 2) * x + 2 * y) + (q - 1) * choose2(4 * (q - 1) * (q - 1) * (q - 2) * x);
}

struct Bracket {
    Rational lower_coeff;
    Rational upper_coeff;
    Rational lower;  // lower_coeff * n, the O_p(1) slack is not modelled
    Rational upper;
};

/// Linear-in-n bracket on f_{p+1}(n, ex(n,K_p)+1) minus main_term(p) n^2.
inline Bracket g_p_bracket(std::int64_t n, std::int64_t p) {
    require_p(p);
    Rational q(p), nn(n);
    Bracket b;
    b.lower_coeff = -(q - 2) * (2 * q - 3) / quad(q);
    b.upper_coeff = -(q - 2) * (2 * q * q - 5 * q + 4) / (q * quad(q));
    b.lower = b.lower_coeff * nn;
    b.upper = b.upper_coeff * nn;
    return b;
}

inline void require_r(const Rational& r) {
    if (r <= 0) throw invalid_argument("bound needs r > 0");
}

/// Turán cap on the remainder: (p-2)/(2(p-1)) (1-pr)^2 n^2.
inline Rational remainder_edge_cap(std::int64_t n, std::int64_t p, const Rational& r) {
    require_p(p);
    Rational q(p), nn(n);
    return (q - 2) / (2 * (q - 1)) * (1 - q * r) * (1 - q * r) * nn * nn;
}

/// Lower bound on e(R*, H) for the best packed clique.
inline Rational r_star_edge_bound(std::int64_t n, std::int64_t p, const Rational& r, const Rational& delta) {
    require_p(p);
    require_r(r);
    Rational q(p), nn(n);
    return (q * (q - 2) / (q - 1) - q * (2 * q * q - 4 * q + 1) / (2 * (q - 1)) * r) * nn - delta / (r * nn);
}

/// Lower bound on z_{p-1}(R*) implied by r_star_edge_bound.
inline Rational r_star_top_bound(std::int64_t n, std::int64_t p, const Rational& r, const Rational& delta) {
    require_p(p);
    require_r(r);
    Rational q(p), nn(n);
    return (q - 2) / (q - 1) - q * (2 * q - 3) / (2 * (q - 1)) * r - delta / (r * nn * nn);
}

/// Lower bound on the saturating edges touching the packed vertices.
inline Rational ell1_bound(std::int64_t n, std::int64_t p, const Rational& r, const Rational& delta) {
    require_p(p);
    Rational q(p), nn(n);
    return ((q - 2) / (q - 1) * r - q * (q - 2) / (2 * (q - 1)) * r * r) * nn * nn - q * r / 2 * nn - delta;
}

inline Rational remainder_excess(std::int64_t n, std::int64_t p, const Rational& r, const Rational& delta) {
    require_p(p);
    require_r(r);
    Rational q(p), nn(n);
    return delta / (2 * (q - 1) * r * r * nn * nn) - (q - 2) / ((q - 1) * (q - 1) * r) +
           q * (2 * q - 3) / (2 * (q - 1) * (q - 1)) + 1 / (2 * r * nn);
}

/// The lower bound F >= -(p-2)/((p-1)^2 r).
inline Rational remainder_excess_floor(std::int64_t p, const Rational& r) {
    require_p(p);
    require_r(r);
    Rational q(p);
    return -(q - 2) / ((q - 1) * (q - 1) * r);
}

/// Lower bound on the saturating edges inside the remainder when some A_i(R*) is empty.
inline Rational ell2_bound(std::int64_t n, std::int64_t p, const Rational& r, const Rational& delta) {
    require_p(p);
    require_r(r);
    Rational q(p), nn(n);
    Rational s = 2 * (q - 2) - q * (2 * q - 3) * r;
    return s * s / (8 * (q - 1) * (q - 1) * (q - 1)) * nn * nn - s / (4 * (q - 1)) * nn + delta * remainder_excess(n, p, r, delta);
}

/// (p-1) * C(zn/(p-1), 2): the convexity bound on pairs inside p-1 sets of total size zn.
inline Rational jensen_pairs(std::int64_t n, std::int64_t p, const Rational& z) {
    require_p(p);
    Rational q(p), nn(n);
    return z * z / (2 * (q - 1)) * nn * nn - z / 2 * nn;
}

/// Packing density above which the ell_1 bound alone settles the minimum.
inline Rational ell1_threshold(std::int64_t p) {
    require_p(p);
    Rational q(p);
    return 2 * (q - 2) * (2 * q - 3) / (q * quad(q));
}

/// Packing density below which the ell_2 bound alone settles the minimum.
inline Rational ell2_threshold(std::int64_t p) {
    require_p(p);
    Rational q(p);
    return 1 / (40 * q * (q - 2) * (2 * q - 3));
}

// ---- Positivity polynomials --------------------------------------------------------------

inline Rational positivity_f(const Rational& p) {
    return p * (4 * p * p - 16 * p + rat(159, 10)) * quad(p) - 16 * (p - 1) * (p - 1) * (p - 1) * (p - 2) * (p - 2);
}

/// 4p^4 - 32.4p^3 + 97.1p^2 - 128.8p + 64
inline Rational positivity_f_expanded(const Rational& p) {
    return (((4 * p - rat(324, 10)) * p + rat(971, 10)) * p - rat(1288, 10)) * p + 64;
}

inline Rational positivity_g(const Rational& p) {
    return 120 * p * positivity_f(p) - (p - 1) * (p - 1) * (p - 1) * (4 * p * p + p - 8);
}

/// 476p^5 - 3877p^4 + 11651p^3 - 15479p^2 + 7705p - 8
inline Rational positivity_g_expanded(const Rational& p) {
    return ((((476 * p - 3877) * p + 11651) * p - 15479) * p + 7705) * p - 8;
}

/// Smallest integer p0 >= 1 such that the leading term strictly dominates the sum of
/// the other terms' magnitudes for every p >= p0 (Cauchy-style bound 1 + max|a_i/a_n|).
inline std::int64_t dominance_start(const std::vector<Rational>& coeffs_high_to_low) {
    Rational lead = abs(coeffs_high_to_low.front());
    Rational worst = 0;
    for (std::size_t i = 1; i < coeffs_high_to_low.size(); ++i) worst = std::max(worst, abs(coeffs_high_to_low[i]) / lead);
    Rational bound = 1 + worst;
    BigInt floor_bound = boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
    return static_cast<std::int64_t>(floor_bound) + 1;
}

inline std::vector<Rational> positivity_f_coeffs() {
    return {4, rat(-324, 10), rat(971, 10), rat(-1288, 10), 64};
}
inline std::vector<Rational> positivity_g_coeffs() { return {476, -3877, 11651, -15479, 7705, -8}; }

struct PositivitySweep {
    std::int64_t p_min = 3;
    std::int64_t p_max = 0;
    bool f_nonnegative = true;
    bool g_nonnegative = true;
    std::int64_t first_failure = 0;  // 0 when none
    Rational f_min;                  // smallest value seen and where
    std::int64_t f_min_at = 0;
    Rational g_min;
    std::int64_t g_min_at = 0;
    bool forms_agree = true;  // factored == expanded at every swept point
    std::int64_t f_dominance_from = 0;
    std::int64_t g_dominance_from = 0;

    /// The sweep plus leading-term dominance covers every integer p >= p_min.
    bool covers_all_p() const {
        return f_nonnegative && g_nonnegative && forms_agree && f_dominance_from <= p_max + 1 &&
               g_dominance_from <= p_max + 1;
    }
};

/// Exact sweep of f(p) >= 0 and g(p) >= 0 over integers p_min..p_max.
inline PositivitySweep sweep_positivity(std::int64_t p_max, std::int64_t p_min = 3) {
    PositivitySweep s;
    s.p_min = p_min;
    s.p_max = p_max;
    s.f_dominance_from = dominance_start(positivity_f_coeffs());
    s.g_dominance_from = dominance_start(positivity_g_coeffs());
    for (std::int64_t p = p_min; p <= p_max; ++p) {
        Rational q(p);
        Rational f = positivity_f(q), g = positivity_g(q);
        if (f != positivity_f_expanded(q) || g != positivity_g_expanded(q)) s.forms_agree = false;
        if (p == p_min || f < s.f_min) {
            s.f_min = f;
            s.f_min_at = p;
        }
        if (p == p_min || g < s.g_min) {
            s.g_min = g;
            s.g_min_at = p;
        }
        if (f < 0 || g < 0) {
            if (s.first_failure == 0) s.first_failure = p;
            s.f_nonnegative = s.f_nonnegative && f >= 0;
            s.g_nonnegative = s.g_nonnegative && g >= 0;
        }
    }
    return s;
}

// ---- Quadratic minimisation in r ----------------------------------------------------------

/// H(r) = 8p(p-1)^3(4p^2-11p+8) h(n,p,r) as the explicit quadratic in r.
inline Rational quadratic_H(std::int64_t p, std::int64_t n, const Rational& r) {
    Rational q(p), nn(n), Q = quad(q);
    return q * q * Q * Q * nn * nn * r * r -
           (4 * q * (q - 2) * (q - 2) * Q * nn * nn + 2 * q * q * (q - 1) * (q - 1) * Q * nn) * r +
           4 * q * (q - 2) * (q - 2) * Q * nn * nn - 4 * q * (q - 1) * (q - 1) * (q - 2) * Q * nn;
}

inline Rational quadratic_H_prime(std::int64_t p, std::int64_t n, const Rational& r) {
    Rational q(p), nn(n), Q = quad(q);
    return 2 * q * q * Q * Q * nn * nn * r - (4 * q * (q - 2) * (q - 2) * Q * nn * nn + 2 * q * q * (q - 1) * (q - 1) * Q * nn);
}

inline Rational quadratic_H_second(std::int64_t p, std::int64_t n) {
    Rational q(p), nn(n), Q = quad(q);
    return 2 * q * q * Q * Q * nn * nn;
}

/// h(n,p,r): the two-term bound on ell_1 + ell_2 as a quadratic in r.
inline Rational quadratic_h(std::int64_t p, std::int64_t n, const Rational& r) {
    Rational q(p), nn(n), k = q - 1;
    return q * quad(q) * nn * nn / (8 * k * k * k) * r * r -
           (2 * (q - 2) * (q - 2) * nn * nn + q * k * k * nn) / (4 * k * k * k) * r +
           (q - 2) * (q - 2) / (2 * k * k * k) * nn * nn - (q - 2) / (2 * k) * nn;
}

inline Rational quadratic_minimizer(std::int64_t p, std::int64_t n) {
    Rational q(p), nn(n), Q = quad(q);
    return 2 * (q - 2) * (q - 2) / (q * Q) + (q - 1) * (q - 1) / (Q * nn);
}

inline Rational quadratic_rhs(std::int64_t p, std::int64_t n) {
    Rational q(p), nn(n), k = q - 1;
    return 16 * k * k * k * (q - 2) * (q - 2) * nn * nn - 8 * q * k * k * k * (q - 2) * (2 * q - 3) * nn -
           q * q * k * k * k * k;
}

struct QuadraticCheck {
    Rational r_star;
    Rational H_at_r_star;
    Rational rhs;
    Rational H_prime_at_r_star;
    Rational H_second;
    bool scaling_matches = false;  // H(r*) == 8p(p-1)^3 Q h(n,p,r*)
    bool holds() const { return H_at_r_star == rhs && H_prime_at_r_star == 0 && H_second > 0 && scaling_matches; }
};

inline QuadraticCheck quadratic_identity(std::int64_t p, std::int64_t n) {
    require_p(p);
    if (n < 1) throw invalid_argument("quadratic_identity needs n >= 1");
    QuadraticCheck c;
    c.r_star = quadratic_minimizer(p, n);
    c.H_at_r_star = quadratic_H(p, n, c.r_star);
    c.rhs = quadratic_rhs(p, n);
    c.H_prime_at_r_star = quadratic_H_prime(p, n, c.r_star);
    c.H_second = quadratic_H_second(p, n);
    Rational q(p);
    c.scaling_matches = c.H_at_r_star == 8 * q * (q - 1) * (q - 1) * (q - 1) * quad(q) * quadratic_h(p, n, c.r_star);
    return c;
}

// ---- Bundled bounds -----------------------------------------------------------------------

/// Every explicit bound for one (n, p, r) instance with delta = delta(n, p).
struct BoundSet {
    std::int64_t p = 0;
    std::int64_t n = 0;
    Rational r;
    Rational delta;
    Rational remainder_edge_cap;
    Rational r_star_edges;
    Rational r_star_top;
    Rational ell1;
    Rational ell2;
    Rational F;
    Rational F_floor;
    Bracket bracket;
};

inline BoundSet bound_set(std::int64_t n, std::int64_t p, const Rational& r) {
    BoundSet b;
    b.p = p;
    b.n = n;
    b.r = r;
    b.delta = satedge::delta(static_cast<std::uint64_t>(n), static_cast<int>(p));
    b.remainder_edge_cap = remainder_edge_cap(n, p, r);
    b.r_star_edges = r_star_edge_bound(n, p, r, b.delta);
    b.r_star_top = r_star_top_bound(n, p, r, b.delta);
    b.ell1 = ell1_bound(n, p, r, b.delta);
    b.ell2 = ell2_bound(n, p, r, b.delta);
    b.F = remainder_excess(n, p, r, b.delta);
    b.F_floor = remainder_excess_floor(p, r);
    b.bracket = g_p_bracket(n, p);
    return b;
}

}  // namespace satedge::formulas
