// Verification suite for the flag threefold P(T_P2) with H = a h1 + b h2:
// closed-form Chern data of O(k, l) against ring truth, the threshold alpha_0,
// heart placement of the six exceptional generators, the charge-cone test for
// Z_{alpha, 0, s}, the skyscraper dimension vector, and the Euler pairing.
#pragma once

#include "tiltstab/chern.hpp"
#include "tiltstab/presets.hpp"
#include "tiltstab/stability.hpp"

#include <array>
#include <string>
#include <vector>

namespace tiltstab::ptp2 {

/// Twist and homological shift of one object O(k, l)[shift].
struct ExceptionalObject {
    int k, l, shift;
};

/// The fixed full Ext-exceptional collection generating the heart:
/// O(-1,-1)[3], O(0,-1)[2], O(1,-1)[1], O(-1,0)[2], O[1], O(1,0).
inline const std::array<ExceptionalObject, 6>& exceptional_collection() {
    static const std::array<ExceptionalObject, 6> c = {{{-1, -1, 3},
                                                        {0, -1, 2},
                                                        {1, -1, 1},
                                                        {-1, 0, 2},
                                                        {0, 0, 1},
                                                        {1, 0, 0}}};
    return c;
}

/// Shifts placing each O(k, l) of the collection in the double-tilted heart,
/// as listed in the placement computation: O(1,0) at 0, O at 1, O(1,-1) at 1,
/// O(-1,0), O(0,-1), O(-1,-1) at 2. (The collection item O(-1,-1)[3] is the
/// shift by one of the heart object O(-1,-1)[2].)
inline const std::array<int, 6>& heart_placement_list() {
    static const std::array<int, 6> shifts = {2, 2, 1, 2, 1, 0};
    return shifts;
}

inline const Threefold& space() { return preset("PT_P2"); }

/// ch(O(k, l)) = exp(k h1 + l h2) in the PT_P2 ring.
inline ChernVector ch_line_bundle(long long k, long long l) {
    DivisorClass d = {Rational(k), Rational(l)};
    return line_bundle_ch(space(), d);
}

/// The two conventions for H.ch2 of O(k, l): the printed closed form, and the
/// ring-true value (exactly half of it).
enum class Ch2Convention { printed, ring };

/// H^2.ch1(O(k,l)) = l a^2 + 2(k+l) ab + k b^2; identical in both conventions.
inline Rational h2_ch1(long long a, long long b, long long k, long long l) {
    return Rational(l) * a * a + Rational(2) * (k + l) * a * b + Rational(k) * b * b;
}

/// H.ch2(O(k,l)): printed form (2k+l) l a + (k+2l) k b, or its ring-true half.
inline Rational h_ch2(long long a, long long b, long long k, long long l, Ch2Convention conv) {
    const Rational printed = Rational(2 * k + l) * l * a + Rational(k + 2 * l) * k * b;
    return conv == Ch2Convention::printed ? printed : printed / 2;
}

/// ch3(O(k,l)) = k l (k + l) / 2; identical in both conventions.
inline Rational ch3_closed_form(long long k, long long l) { return Rational(k) * l * (k + l) / 2; }

struct ChCompReport {
    Rational formula1, ring1;
    Rational formula2, ring2;
    Rational formula3, ring3;
    bool match1 = false, match3 = false;
    bool formula2_is_twice_ring = false;
};

/// Compares the three closed forms against independent ring arithmetic on
/// exp(k h1 + l h2). Formulas (1) and (3) agree exactly; formula (2) is
/// exactly twice the ring value, and the report records that ratio.
inline ChCompReport closed_form_report(long long a, long long b, long long k, long long l) {
    const Threefold& X = space();
    const DivisorClass H = {Rational(a), Rational(b)};
    const ChernVector ch = ch_line_bundle(k, l);

    ChCompReport rep;
    rep.formula1 = h2_ch1(a, b, k, l);
    rep.ring1 = X.ring.integrate(ch.ch1, X.ring.mul_div_div(H, H));
    rep.formula2 = h_ch2(a, b, k, l, Ch2Convention::printed);
    rep.ring2 = X.ring.integrate(H, ch.ch2);
    rep.formula3 = ch3_closed_form(k, l);
    rep.ring3 = ch.ch3;
    rep.match1 = rep.formula1 == rep.ring1;
    rep.match3 = rep.formula3 == rep.ring3;
    rep.formula2_is_twice_ring = rep.formula2 == 2 * rep.ring2;
    return rep;
}

// ---------------------------------------------------------------------------
// alpha_0.
// ---------------------------------------------------------------------------

enum class Alpha0Mode { printed, ring };

struct Alpha0 {
    Rational alpha_sq;
    QuadExt alpha;
    std::string binding;  // which inequality attains the minimum
};

/// Printed mode: the verbatim min{ sqrt(2/(a(a+b))), sqrt(18/(a^2+6ab+b^2)) }.
/// Ring mode: the largest threshold under which the three strict inequalities
/// behind the heart and charge computations hold with ring-true ch2 values:
/// alpha^2 < 1/(a(a+b)), alpha^2 < 18/(a^2+6ab+2b^2), alpha^2 < 3/(ab).
inline Alpha0 alpha0(long long a, long long b, Alpha0Mode mode) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("alpha0: a, b must be positive");
    std::vector<std::pair<Rational, std::string>> radicands;
    if (mode == Alpha0Mode::printed) {
        radicands.emplace_back(Rational(2, 1) / (Rational(a) * (a + b)), "2/(a(a+b))");
        radicands.emplace_back(Rational(18, 1) / (Rational(a) * a + 6 * Rational(a) * b + Rational(b) * b),
                               "18/(a^2+6ab+b^2)");
    } else {
        radicands.emplace_back(Rational(1, 1) / (Rational(a) * (a + b)), "1/(a(a+b))");
        radicands.emplace_back(
            Rational(18, 1) / (Rational(a) * a + 6 * Rational(a) * b + 2 * Rational(b) * b),
            "18/(a^2+6ab+2b^2)");
        radicands.emplace_back(Rational(3, 1) / (Rational(a) * b), "3/(ab)");
    }
    Alpha0 out{radicands[0].first, QuadExt(), radicands[0].second};
    for (const auto& [r, name] : radicands)
        if (r < out.alpha_sq) {
            out.alpha_sq = r;
            out.binding = name;
        }
    out.alpha = QuadExt::sqrt_of(out.alpha_sq);
    return out;
}

// ---------------------------------------------------------------------------
// Heart membership.
// ---------------------------------------------------------------------------

enum class HeartVerdict { in_heart, not_in_heart, boundary };

struct HeartMembership {
    HeartVerdict verdict = HeartVerdict::not_in_heart;
    int first_tilt_shift = 0;  // 0 if mu > 0, else 1
    int heart_shift = 0;       // shift placing O(k, l)[shift] in the double-tilted heart
    Rational mu_numerator;     // H^2.ch1
    Rational nu_numerator;     // H.ch2 - (alpha^2/6) H^3  (ring-true, for the sheaf)
    bool nu_infinite = false;  // mu numerator vanished, second slope is +infinity
};

/// Classifies O(k, l)[shift] by the two sign tests of the tilting construction
/// with ring-true ch2: the first-tilt side from sign(H^2.ch1), the second from
/// sign(nu) of the once-shifted object. A vanishing nu numerator is a wall
/// contact and is reported as boundary.
inline HeartMembership heart_membership(long long k, long long l, int shift, long long a, long long b,
                                        const QuadExt& alpha) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("heart_membership: a, b must be positive");
    if (alpha.sign() <= 0) throw std::invalid_argument("heart_membership: alpha must be positive");
    if (alpha.a() != 0 && alpha.b() != 0)
        throw std::invalid_argument("heart_membership: alpha must be rational or sqrt of a rational");
    const Rational a2 = (alpha * alpha).rational_value();

    HeartMembership out;
    out.mu_numerator = h2_ch1(a, b, k, l);
    out.first_tilt_shift = out.mu_numerator > 0 ? 0 : 1;
    // K/6 = ab(a+b)/2 for H^3 = 3ab(a+b).
    out.nu_numerator = h_ch2(a, b, k, l, Ch2Convention::ring) - a2 * Rational(a) * b * (a + b) / 2;

    if (out.mu_numerator == 0) {
        // v1 of the shifted object vanishes: nu = +infinity, object stays put.
        out.nu_infinite = true;
        out.heart_shift = out.first_tilt_shift;
        out.verdict = shift == out.heart_shift ? HeartVerdict::in_heart : HeartVerdict::not_in_heart;
        return out;
    }

    // Sign of nu of O(k,l)[first_tilt_shift]; the shift negates the v-vector.
    const int object_sign = out.first_tilt_shift == 0 ? 1 : -1;
    const int nu_sign = object_sign * out.nu_numerator.sign();
    out.heart_shift = out.first_tilt_shift + (nu_sign > 0 ? 0 : 1);
    if (out.nu_numerator == 0)
        out.verdict = HeartVerdict::boundary;
    else
        out.verdict = shift == out.heart_shift ? HeartVerdict::in_heart : HeartVerdict::not_in_heart;
    return out;
}

// ---------------------------------------------------------------------------
// Charge cone check.
// ---------------------------------------------------------------------------

struct ChargeWitness {
    std::string name;
    Charge z;
    bool ok = true;
};

struct ChargeConeReport {
    bool pass = true;
    bool precondition_ok = true;  // b > a > 0 and 0 < alpha < alpha_0 of the matching mode
    std::vector<ChargeWitness> witnesses;
    QuadExt cross_numerator;  // -Re6 Im1 + Re1 Im6; the cross inequality needs it
    bool cross_ok = false;    // -Re6/Im6 + Re1/Im1 > 0
};

/// Z_{alpha, 0, s} of one O(k, l)[n] with the dual convention Z(E[n]) = (-1)^n Z(E).
inline Charge generator_charge(const ExceptionalObject& obj, long long a, long long b, const QuadExt& alpha,
                               const Rational& s, Ch2Convention conv) {
    const Rational a2 = (alpha * alpha).rational_value();
    const Rational p1 = h2_ch1(a, b, obj.k, obj.l);
    const Rational p2 = h_ch2(a, b, obj.k, obj.l, conv);
    const Rational c3 = ch3_closed_form(obj.k, obj.l);
    const Rational k6 = Rational(a) * b * (a + b) / 2;  // H^3 / 6
    Charge z;
    z.re = QuadExt(-c3 + s * a2 * p1);
    z.im = alpha * QuadExt(p2 - a2 * k6);
    if (obj.shift % 2 != 0) {
        z.re = -z.re;
        z.im = -z.im;
    }
    return z;
}

/// Verifies the quadrant placement of the six generator charges (third quadrant
/// for O(-1,-1)[3], first for O(1,0), closed second quadrant for the rest) and
/// the cross inequality -Re/Im(O(1,0)) + Re/Im(O(-1,-1)[3]) > 0, all by exact
/// sign tests. Precondition violations are flagged, never silently repaired.
inline ChargeConeReport charge_cone_check(long long a, long long b, const QuadExt& alpha, const Rational& s,
                                          Ch2Convention conv) {
    if (alpha.a() != 0 && alpha.b() != 0)
        throw std::invalid_argument("charge_cone_check: alpha must be rational or sqrt of a rational");
    ChargeConeReport rep;
    const Alpha0 a0 = alpha0(a, b, conv == Ch2Convention::printed ? Alpha0Mode::printed : Alpha0Mode::ring);
    // alpha and alpha_0 may live in different quadratic fields; compare squares.
    rep.precondition_ok =
        b > a && a > 0 && alpha.sign() > 0 && (alpha * alpha).rational_value() < a0.alpha_sq;

    const auto& coll = exceptional_collection();
    std::array<Charge, 6> z;
    for (std::size_t i = 0; i < 6; ++i) z[i] = generator_charge(coll[i], a, b, alpha, s, conv);

    auto label = [&](std::size_t i) {
        const auto& o = coll[i];
        return "O(" + std::to_string(o.k) + "," + std::to_string(o.l) + ")[" + std::to_string(o.shift) + "]";
    };
    for (std::size_t i = 0; i < 6; ++i) {
        bool ok = true;
        if (i == 0)  // O(-1,-1)[3]: open third quadrant
            ok = z[i].re.sign() < 0 && z[i].im.sign() < 0;
        else if (i == 5)  // O(1,0): open first quadrant
            ok = z[i].re.sign() > 0 && z[i].im.sign() > 0;
        else  // closed second quadrant
            ok = z[i].re.sign() <= 0 && z[i].im.sign() >= 0;
        rep.witnesses.push_back({label(i), z[i], ok});
        rep.pass = rep.pass && ok;
    }

    // Cross inequality, sign-exact: with Im6 > 0 > Im1 the claim is equivalent
    // to (-Re6 Im1 + Re1 Im6) having the sign opposite to Im6 Im1.
    const Charge& z1 = z[0];
    const Charge& z6 = z[5];
    rep.cross_numerator = -(z6.re * z1.im) + z1.re * z6.im;
    if (z6.im.sign() != 0 && z1.im.sign() != 0) {
        const int den_sign = z6.im.sign() * z1.im.sign();
        rep.cross_ok = rep.cross_numerator.sign() * den_sign > 0;
    } else {
        rep.cross_ok = false;
    }
    rep.pass = rep.pass && rep.cross_ok;
    return rep;
}

// ---------------------------------------------------------------------------
// Skyscraper decomposition and the Euler pairing.
// ---------------------------------------------------------------------------

/// Coordinates of a class in the signed basis (-1)^{shift_i} ch(O(k_i, l_i))
/// of the collection; the 6x6 system over Q is invertible.
inline std::vector<Rational> decompose(const ChernVector& target) {
    const auto& coll = exceptional_collection();
    std::vector<std::vector<Rational>> m(6, std::vector<Rational>(6));
    for (std::size_t j = 0; j < 6; ++j) {
        const ChernVector ch = ch_line_bundle(coll[j].k, coll[j].l);
        const Rational sgn = coll[j].shift % 2 == 0 ? 1 : -1;
        m[0][j] = sgn * ch.ch0;
        m[1][j] = sgn * ch.ch1[0];
        m[2][j] = sgn * ch.ch1[1];
        m[3][j] = sgn * ch.ch2[0];
        m[4][j] = sgn * ch.ch2[1];
        m[5][j] = sgn * ch.ch3;
    }
    std::vector<Rational> rhs = {target.ch0,    target.ch1[0], target.ch1[1],
                                 target.ch2[0], target.ch2[1], target.ch3};
    auto sol = solve_linear(std::move(m), std::move(rhs));
    if (!sol) throw std::logic_error("exceptional collection classes are linearly dependent");
    return *sol;
}

using DimensionVector = std::array<long long, 6>;

/// Dimension vector of the skyscraper class (0, 0, 0, 1) in the collection
/// basis; entries are verified to be nonnegative integers.
inline DimensionVector decompose_skyscraper() {
    const auto sol = decompose(skyscraper_ch(space()));
    DimensionVector n{};
    for (std::size_t i = 0; i < 6; ++i) {
        if (denominator(sol[i]) != 1 || sol[i] < 0)
            throw std::logic_error("skyscraper dimension vector is not a nonnegative integer vector");
        n[i] = numerator(sol[i]).convert_to<long long>();
    }
    return n;
}

/// chi(E, F) = integral of ch(E)^dual . ch(F) . td(X) on any model with Todd data.
inline Rational euler_pairing(const Threefold& X, const ChernVector& E, const ChernVector& F) {
    if (!X.todd) throw std::invalid_argument("euler_pairing: '" + X.name + "' carries no Todd data");
    const ChernVector td = {Rational(1), X.todd->td1, X.todd->td2, X.todd->td3};
    return mul(X, mul(X, dual(E), F), td).ch3;
}

}  // namespace tiltstab::ptp2
