// Slope functions and central charges for the double-tilt construction, the
// half-plane cone test for charge images, and the (alpha, beta)-plane wall
// scanner with its exact conic.
#pragma once

#include "tiltstab/chern.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tiltstab {

/// Finite quadratic-field value or +infinity (the torsion convention).
struct ExtendedSlope {
    bool infinite = false;
    QuadExt value;

    static ExtendedSlope inf() { return {true, QuadExt()}; }
    static ExtendedSlope finite(QuadExt v) { return {false, std::move(v)}; }

    friend bool operator==(const ExtendedSlope& x, const ExtendedSlope& y) {
        if (x.infinite || y.infinite) return x.infinite == y.infinite;
        return x.value == y.value;
    }
    /// Three-way comparison; +infinity compares equal to itself.
    friend int compare(const ExtendedSlope& x, const ExtendedSlope& y) {
        if (x.infinite && y.infinite) return 0;
        if (x.infinite) return 1;
        if (y.infinite) return -1;
        return (x.value - y.value).sign();
    }
};

/// mu = v1 / v0, +infinity on torsion classes (v0 = 0).
inline ExtendedSlope mu_slope(const TwistedVector& v) {
    if (v.v0.is_zero()) return ExtendedSlope::inf();
    return ExtendedSlope::finite(v.v1 / v.v0);
}

/// nu = (v2 - v0/6) / v1, +infinity when v1 = 0.
inline ExtendedSlope nu_slope(const TwistedVector& v) {
    if (v.v1.is_zero()) return ExtendedSlope::inf();
    return ExtendedSlope::finite((v.v2 - v.v0 / QuadExt(6)) / v.v1);
}

/// Central charge Z = -integral(e^{-i omega} ch^B), expanded by degree:
/// Re = -ch3^B + (1/2) omega^2.ch1^B, Im = omega.ch2^B - (1/6) omega^3.ch0.
struct Charge {
    QuadExt re, im;
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline Charge central_charge(const ChernVector& ch, const Polarization& pol) {
    const TwistedVector v = v_vector(ch, pol);
    return {QuadExt(-v.v3) + v.v1 / QuadExt(2), v.v2 - v.v0 / QuadExt(6)};
}

/// Z_{alpha,0,s} = -ch3 + s alpha^2 H^2.ch1 + i (alpha H.ch2 - (1/6) alpha^3 H^3 ch0).
inline Charge charge_s(const ChernVector& ch, const QuadExt& alpha, const DivisorClass& H, const Rational& s,
                       const Threefold& X) {
    const CohRing& R = X.ring;
    R.check_divisor(H);
    const Rational a2 = (alpha * alpha).rational_value();
    const Rational k = R.triple(H, H, H);
    const Rational p1 = R.integrate(ch.ch1, R.mul_div_div(H, H));
    const Rational p2 = R.integrate(H, ch.ch2);
    Charge z;
    z.re = QuadExt(-ch.ch3 + s * a2 * p1);
    z.im = alpha * QuadExt(p2) - alpha.pow3() * QuadExt(k * ch.ch0 / 6);
    return z;
}

/// Threshold alpha = 1/(2 sqrt(3)) of the reduction from small alpha at B = 0
/// to arbitrary (alpha, beta) along a fixed ample ray.
inline QuadExt li_reduction_threshold() { return QuadExt::sqrt_of(Rational(1, 12)); }

// ---------------------------------------------------------------------------
// Half-plane cone containment.
// ---------------------------------------------------------------------------

struct ConeCheckResult {
    bool pass = true;
    std::size_t zero_charges = 0;   // anomalies, reported but not failing
    std::vector<std::size_t> outside;  // indices of charges outside the cone
};

/// True when every charge lies in { r exp(pi phi i) : r >= 0, phi0 <= phi <= phi0 + 1 }
/// with phi0 the phase of the anchor. Decided by exact 2x2 determinant signs:
/// z is inside exactly when cross(anchor, z) = Re(anchor) Im(z) - Im(anchor) Re(z) >= 0.
inline ConeCheckResult cone_check(const std::vector<Charge>& charges, const Charge& anchor) {
    if (anchor.is_zero()) throw DegenerateInputError("cone_check: zero anchor charge");
    ConeCheckResult out;
    for (std::size_t i = 0; i < charges.size(); ++i) {
        const Charge& z = charges[i];
        if (z.is_zero()) {
            ++out.zero_charges;
            continue;
        }
        const QuadExt cross = anchor.re * z.im - anchor.im * z.re;
        if (cross.sign() < 0) {
            out.pass = false;
            out.outside.push_back(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Walls in the (alpha, beta) plane for omega = alpha H, B = beta H.
// ---------------------------------------------------------------------------

/// Coefficients of c1 alpha^2 + c2 beta^2 + c3 beta + c4 = 0, the locus
/// nu(E) = nu(F) after clearing denominators. Degenerate when all vanish.
struct WallConic {
    Rational c1, c2, c3, c4;
    bool degenerate = false;

    Rational eval(const Rational& alpha_sq, const Rational& beta) const {
        return c1 * alpha_sq + c2 * beta * beta + c3 * beta + c4;
    }
};

namespace detail {

struct WallClassData {
    Rational e0;  // ch0
    Rational e1;  // H^2.ch1
    Rational e2;  // H.ch2
};

inline WallClassData wall_class_data(const Threefold& X, const DivisorClass& H, const ChernVector& ch) {
    const CohRing& R = X.ring;
    return {ch.ch0, R.integrate(ch.ch1, R.mul_div_div(H, H)), R.integrate(H, ch.ch2)};
}

// H^2.ch1^{beta H} and H.ch2^{beta H} as polynomials in beta.
inline Rational twisted_e1(const WallClassData& c, const Rational& k, const Rational& beta) {
    return c.e1 - beta * k * c.e0;
}
inline Rational twisted_e2(const WallClassData& c, const Rational& k, const Rational& beta) {
    return c.e2 - beta * c.e1 + beta * beta * k * c.e0 / 2;
}

}  // namespace detail

/// nu_{alpha H, beta H}(E) - nu(F) clears to C / (alpha e1(beta) f1(beta)) with
/// C = [e2 f1 - f2 e1](beta) - (alpha^2 K / 6)(e0 F1 - f0 E1); the bracket is
/// quadratic in beta because the cubic terms cancel.
inline WallConic wall_conic(const ChernVector& E, const ChernVector& F, const DivisorClass& H,
                            const Threefold& X) {
    const Rational k = X.ring.triple(H, H, H);
    if (k <= 0) throw std::invalid_argument("wall_conic: H^3 must be positive");
    const auto e = detail::wall_class_data(X, H, E);
    const auto f = detail::wall_class_data(X, H, F);
    WallConic w;
    w.c1 = k * (f.e0 * e.e1 - e.e0 * f.e1) / 6;
    w.c2 = k * (e.e1 * f.e0 - f.e1 * e.e0) / 2;
    w.c3 = k * (f.e2 * e.e0 - e.e2 * f.e0);
    w.c4 = e.e2 * f.e1 - f.e2 * e.e1;
    w.degenerate = w.c1 == 0 && w.c2 == 0 && w.c3 == 0 && w.c4 == 0;
    return w;
}

struct WallGridSpec {
    Rational alpha_lo, alpha_hi;  // alpha samples in (alpha_lo, alpha_hi]
    Rational beta_lo, beta_hi;    // beta samples in [beta_lo, beta_hi]
    std::size_t alpha_steps = 0, beta_steps = 0;
};

struct WallDiagram {
    ChernVector E, F;
    DivisorClass H;
    WallConic conic;
    WallGridSpec grid;
    std::vector<Rational> alpha_nodes, beta_nodes;
    std::vector<std::int8_t> signs;  // row-major [i_alpha][j_beta], sign of nu(E) - nu(F)

    std::int8_t sign_at(std::size_t i, std::size_t j) const { return signs[i * beta_nodes.size() + j]; }
};

/// Sign of nu(E) - nu(F) at one rational (alpha, beta) node, evaluated through
/// the conic and the two slope denominators; infinite slopes use the torsion
/// convention (+infinity compares above every finite slope).
inline int wall_sign(const WallConic& w, const detail::WallClassData& e, const detail::WallClassData& f,
                     const Rational& k, const Rational& alpha, const Rational& beta) {
    const Rational e1 = detail::twisted_e1(e, k, beta);
    const Rational f1 = detail::twisted_e1(f, k, beta);
    if (e1 == 0 && f1 == 0) return 0;
    if (e1 == 0) return 1;
    if (f1 == 0) return -1;
    const Rational c = w.eval(alpha * alpha, beta);
    return c.sign() * e1.sign() * f1.sign();
}

/// Deterministic sign grid; node sets are closed-form functions of the bounds, so the
/// result is independent of evaluation order.
inline WallDiagram wall_scan(const ChernVector& E, const ChernVector& F, const DivisorClass& H,
                             const Threefold& X, const WallGridSpec& grid) {
    if (grid.alpha_steps == 0 || grid.beta_steps == 0) throw std::invalid_argument("wall_scan: empty grid");
    if (grid.alpha_lo < 0 || grid.alpha_hi <= grid.alpha_lo)
        throw std::invalid_argument("wall_scan: alpha range must be positive");
    WallDiagram d;
    d.E = E;
    d.F = F;
    d.H = H;
    d.grid = grid;
    d.conic = wall_conic(E, F, H, X);

    const Rational k = X.ring.triple(H, H, H);
    const auto e = detail::wall_class_data(X, H, E);
    const auto f = detail::wall_class_data(X, H, F);

    d.alpha_nodes.reserve(grid.alpha_steps);
    for (std::size_t i = 0; i < grid.alpha_steps; ++i)
        d.alpha_nodes.push_back(grid.alpha_lo +
                                (grid.alpha_hi - grid.alpha_lo) * Rational(Int(i + 1), Int(grid.alpha_steps)));
    d.beta_nodes.reserve(grid.beta_steps);
    if (grid.beta_steps == 1) {
        d.beta_nodes.push_back(grid.beta_lo);
    } else {
        for (std::size_t j = 0; j < grid.beta_steps; ++j)
            d.beta_nodes.push_back(grid.beta_lo + (grid.beta_hi - grid.beta_lo) *
                                                      Rational(Int(j), Int(grid.beta_steps - 1)));
    }

    d.signs.resize(d.alpha_nodes.size() * d.beta_nodes.size());
    for (std::size_t i = 0; i < d.alpha_nodes.size(); ++i)
        for (std::size_t j = 0; j < d.beta_nodes.size(); ++j)
            d.signs[i * d.beta_nodes.size() + j] =
                static_cast<std::int8_t>(wall_sign(d.conic, e, f, k, d.alpha_nodes[i], d.beta_nodes[j]));
    return d;
}

}  // namespace tiltstab
