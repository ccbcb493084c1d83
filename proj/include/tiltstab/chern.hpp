// Twisted Chern character calculus on a threefold: ch^B = e^{-B}.ch, the
// omega-paired vector v^B, the discriminants Delta-bar and Nabla-bar, the
// Bogomolov-Gieseker combination, the twist parameter beta-bar, and the
// reduced-inequality check ch_3^{B + beta-bar omega} <= 0.
#pragma once

#include "tiltstab/quadext.hpp"
#include "tiltstab/ring.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace tiltstab {

struct NotDefinedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical K-theory class of a threefold: (ch0, ch1, ch2, ch3) with ch1 a
/// divisor class, ch2 a curve class, and ch3 the point multiplicity.
struct ChernVector {
    Rational ch0;
    DivisorClass ch1;
    CurveClass ch2;
    Rational ch3;

    friend bool operator==(const ChernVector& x, const ChernVector& y) {
        return x.ch0 == y.ch0 && x.ch1 == y.ch1 && x.ch2 == y.ch2 && x.ch3 == y.ch3;
    }
};

inline ChernVector zero_ch(const Threefold& X) {
    return {Rational(0), X.ring.zero_divisor(), X.ring.zero_curve(), Rational(0)};
}

/// Class of a skyscraper sheaf: (0, 0, 0, 1).
inline ChernVector skyscraper_ch(const Threefold& X) {
    return {Rational(0), X.ring.zero_divisor(), X.ring.zero_curve(), Rational(1)};
}

/// ch(O(D)) = exp(D) = (1, D, D^2/2, D^3/6).
inline ChernVector line_bundle_ch(const Threefold& X, const DivisorClass& d) {
    X.ring.check_divisor(d);
    const CurveClass d2 = X.ring.mul_div_div(d, d);
    ChernVector out;
    out.ch0 = 1;
    out.ch1 = d;
    out.ch2 = Rational(1, 2) * d2;
    out.ch3 = X.ring.integrate(d, d2) / 6;
    return out;
}

inline ChernVector add(const ChernVector& x, const ChernVector& y) {
    ChernVector out;
    out.ch0 = x.ch0 + y.ch0;
    out.ch1 = x.ch1 + y.ch1;
    if (x.ch2.size() != y.ch2.size()) throw DimensionError("curve coordinate length mismatch");
    out.ch2.resize(x.ch2.size());
    for (std::size_t k = 0; k < x.ch2.size(); ++k) out.ch2[k] = x.ch2[k] + y.ch2[k];
    out.ch3 = x.ch3 + y.ch3;
    return out;
}

inline ChernVector scale(const Rational& c, const ChernVector& x) {
    ChernVector out;
    out.ch0 = c * x.ch0;
    out.ch1 = c * x.ch1;
    out.ch2 = c * x.ch2;
    out.ch3 = c * x.ch3;
    return out;
}

inline ChernVector negate(const ChernVector& x) { return scale(Rational(-1), x); }

/// Dual class: odd-degree pieces change sign.
inline ChernVector dual(const ChernVector& x) {
    ChernVector out = x;
    out.ch1 = Rational(-1) * out.ch1;
    out.ch3 = -out.ch3;
    return out;
}

/// Graded product of two numerical classes, truncated to degree 3.
inline ChernVector mul(const Threefold& X, const ChernVector& e, const ChernVector& f) {
    const CohRing& R = X.ring;
    R.check_divisor(e.ch1);
    R.check_divisor(f.ch1);
    R.check_curve(e.ch2);
    R.check_curve(f.ch2);
    ChernVector out;
    out.ch0 = e.ch0 * f.ch0;
    out.ch1 = e.ch0 * f.ch1 + f.ch0 * e.ch1;
    out.ch2 = R.mul_div_div(e.ch1, f.ch1);
    for (std::size_t k = 0; k < out.ch2.size(); ++k) out.ch2[k] += e.ch0 * f.ch2[k] + f.ch0 * e.ch2[k];
    out.ch3 = e.ch0 * f.ch3 + f.ch0 * e.ch3 + R.integrate(e.ch1, f.ch2) + R.integrate(f.ch1, e.ch2);
    return out;
}

/// ch^B = e^{-B}.ch, the twisted Chern character.
inline ChernVector twist(const Threefold& X, const ChernVector& ch, const DivisorClass& b) {
    const CohRing& R = X.ring;
    R.check_divisor(b);
    R.check_divisor(ch.ch1);
    R.check_curve(ch.ch2);
    const CurveClass b2 = R.mul_div_div(b, b);
    ChernVector out;
    out.ch0 = ch.ch0;
    out.ch1 = ch.ch1 - ch.ch0 * b;
    const CurveClass b_ch1 = R.mul_div_div(b, ch.ch1);
    out.ch2.resize(ch.ch2.size());
    for (std::size_t k = 0; k < out.ch2.size(); ++k)
        out.ch2[k] = ch.ch2[k] - b_ch1[k] + ch.ch0 * b2[k] / 2;
    out.ch3 = ch.ch3 - R.integrate(b, ch.ch2) + R.integrate(ch.ch1, b2) / 2 - ch.ch0 * R.integrate(b, b2) / 6;
    return out;
}

// ---------------------------------------------------------------------------
// Polarization and the v-vector.
// ---------------------------------------------------------------------------

/// Class B + i omega with omega = alpha H ample. The scale alpha is rational
/// or a pure square root, so alpha^2 is always rational; B is rational.
struct Polarization {
    const Threefold* X;
    DivisorClass H;
    QuadExt alpha;
    DivisorClass B;

    Polarization(const Threefold& threefold, DivisorClass h, QuadExt a, DivisorClass b)
        : X(&threefold), H(std::move(h)), alpha(std::move(a)), B(std::move(b)) {
        X->ring.check_divisor(H);
        X->ring.check_divisor(B);
        if (alpha.sign() <= 0) throw std::invalid_argument("alpha must be positive");
        if (alpha.a() != 0 && alpha.b() != 0)
            throw std::invalid_argument("alpha must be rational or sqrt of a rational");
        if (!X->nef_generators.empty()) {
            if (!is_ample(*X, H)) throw std::invalid_argument("H is not ample (not interior to the nef cone)");
        } else if (X->ring.triple(H, H, H) <= 0) {
            throw std::invalid_argument("omega^3 must be positive");
        }
    }

    /// omega = alpha H with rational alpha, when representable.
    Polarization(const Threefold& threefold, DivisorClass omega, DivisorClass b)
        : Polarization(threefold, std::move(omega), QuadExt(Rational(1)), std::move(b)) {}

    Rational alpha_sq() const { return (alpha * alpha).rational_value(); }
    Rational h_cubed() const { return X->ring.triple(H, H, H); }
};

/// v^B = (omega^3.ch0^B, omega^2.ch1^B, omega.ch2^B, ch3^B).
struct TwistedVector {
    QuadExt v0, v1, v2;
    Rational v3;
};

inline TwistedVector v_vector(const ChernVector& ch, const Polarization& pol) {
    const CohRing& R = pol.X->ring;
    const ChernVector t = twist(*pol.X, ch, pol.B);
    const Rational K = pol.h_cubed();
    const CurveClass h2 = R.mul_div_div(pol.H, pol.H);
    TwistedVector v;
    v.v0 = pol.alpha.pow3() * QuadExt(K * t.ch0);
    v.v1 = pol.alpha.squared() * QuadExt(R.integrate(t.ch1, h2));
    v.v2 = pol.alpha * QuadExt(R.integrate(pol.H, t.ch2));
    v.v3 = t.ch3;
    return v;
}

/// Delta-bar = v1^2 - 2 v0 v2.
inline QuadExt delta_bar(const TwistedVector& v) { return v.v1.squared() - 2 * (v.v0 * v.v2); }
inline QuadExt delta_bar(const ChernVector& ch, const Polarization& pol) { return delta_bar(v_vector(ch, pol)); }

/// Nabla-bar = 2 v2^2 - 3 v1 v3.
inline QuadExt nabla_bar(const TwistedVector& v) {
    return 2 * v.v2.squared() - 3 * (v.v1 * QuadExt(v.v3));
}
inline QuadExt nabla_bar(const ChernVector& ch, const Polarization& pol) { return nabla_bar(v_vector(ch, pol)); }

/// Delta-bar + 6 Nabla-bar, the quantity the type-inequality bounds below by 0.
inline QuadExt bg_quantity(const TwistedVector& v) { return delta_bar(v) + 6 * nabla_bar(v); }
inline QuadExt bg_quantity(const ChernVector& ch, const Polarization& pol) { return bg_quantity(v_vector(ch, pol)); }

/// Exact value in the working field when available, and always a rational
/// enclosure of guaranteed width.
struct AlgebraicValue {
    std::optional<QuadExt> exact;
    RatInterval enclosure;

    bool is_exact() const { return exact.has_value(); }
};

inline const Rational& beta_enclosure_width() {
    static const Rational w(Int(1), Int(1000000000000LL));  // 1e-12
    return w;
}

namespace detail {

/// Rational reduction of the beta-bar data: with omega = alpha H and rational B,
/// Delta-bar = alpha^4 * disc and the twist divisor is B + t H with t in Q(sqrt(disc)).
struct BetaData {
    Rational rank_k;  // K * ch0, with K = H^3
    Rational p;       // H^2.ch1^B
    Rational q;       // H.ch2^B
    Rational c3;      // ch3^B
    Rational disc;    // p^2 - 2 * rank_k * q;  Delta-bar = alpha^4 * disc
};

inline BetaData beta_data(const ChernVector& ch, const Polarization& pol) {
    const CohRing& R = pol.X->ring;
    const ChernVector t = twist(*pol.X, ch, pol.B);
    BetaData d;
    d.rank_k = pol.h_cubed() * t.ch0;
    d.p = R.integrate(t.ch1, R.mul_div_div(pol.H, pol.H));
    d.q = R.integrate(pol.H, t.ch2);
    d.c3 = t.ch3;
    d.disc = d.p * d.p - 2 * d.rank_k * d.q;
    return d;
}

inline void require_beta_defined(const BetaData& d) {
    if (d.disc < 0) throw NotDefinedError("Delta-bar is negative; beta-bar is not defined");
    // v1 + sqrt(Delta-bar) = alpha^2 (p + sqrt(disc)) vanishes exactly when
    // disc = p^2 with p <= 0.
    if (d.p <= 0 && d.disc == d.p * d.p)
        throw DegenerateInputError("v1 + sqrt(Delta-bar) = 0; beta-bar denominator vanishes");
}

/// t with B + beta-bar omega = B + t H, exact in Q(sqrt(disc)).
inline QuadExt beta_twist_parameter(const BetaData& d) {
    require_beta_defined(d);
    return QuadExt(2 * d.q) / (QuadExt(d.p) + QuadExt::sqrt_of(d.disc));
}

}  // namespace detail

/// beta-bar = 2 v2 / (v1 + sqrt(Delta-bar)). Exact in the working field Q(alpha)
/// whenever sqrt(Delta-bar) lies there; otherwise an enclosure of width <= 1e-12.
inline AlgebraicValue beta_bar(const ChernVector& ch, const Polarization& pol) {
    const detail::BetaData d = detail::beta_data(ch, pol);
    detail::require_beta_defined(d);

    const Rational a2 = pol.alpha_sq();
    const Rational delta_rat = a2 * a2 * d.disc;  // Delta-bar as a rational

    AlgebraicValue out;
    if (auto root = sqrt_in_field(delta_rat, pol.alpha.r())) {
        // v1, v2 are alpha^2 p and alpha q; all arithmetic stays in Q(alpha).
        const QuadExt v1 = pol.alpha.squared() * QuadExt(d.p);
        const QuadExt v2 = pol.alpha * QuadExt(d.q);
        const QuadExt value = (2 * v2) / (v1 + *root);
        out.exact = value;
        out.enclosure = enclose(value, beta_enclosure_width());
        return out;
    }

    // Enclosure path: beta-bar = 2 q / (alpha (p + sqrt(disc))).
    Rational eps = beta_enclosure_width() / 1000000;
    for (int attempt = 0; attempt < 8; ++attempt, eps /= 1000000) {
        const RatInterval root = sqrt_enclosure(d.disc, eps);
        const RatInterval a = enclose(pol.alpha, eps);
        const RatInterval den = a * (RatInterval::point(d.p) + root);
        if (den.contains_zero()) continue;  // exact zero was excluded above; tighten
        const RatInterval val = RatInterval::point(2 * d.q) / den;
        if (val.width() <= beta_enclosure_width()) {
            out.enclosure = val;
            return out;
        }
    }
    throw std::logic_error("beta-bar enclosure did not reach the target width");
}

enum class BmsVerdict { holds, fails, undecided };

struct BmsResult {
    BmsVerdict verdict = BmsVerdict::undecided;
    QuadExt value;            // ch3 twisted by B + beta-bar omega (exact, field Q(sqrt(disc)))
    RatInterval value_range;  // enclosure of the value, for reporting
};

/// Evaluates ch3^{B + beta-bar omega}(E) and compares it against 0. With a
/// rational B and alpha^2 rational the twist parameter t = alpha beta-bar lies
/// in Q(sqrt(disc)), so the verdict is always exact.
inline BmsResult bms_check(const ChernVector& ch, const Polarization& pol) {
    const detail::BetaData d = detail::beta_data(ch, pol);
    const QuadExt t = detail::beta_twist_parameter(d);

    // ch3^{B + tH} as a cubic in t with rational coefficients.
    const QuadExt value = QuadExt(d.c3) - t * QuadExt(d.q) + t.squared() * QuadExt(d.p / 2) -
                          t.pow3() * QuadExt(d.rank_k / 6);
    BmsResult out;
    out.value = value;
    out.value_range = enclose(value, beta_enclosure_width());
    out.verdict = value.sign() <= 0 ? BmsVerdict::holds : BmsVerdict::fails;
    return out;
}

}  // namespace tiltstab
