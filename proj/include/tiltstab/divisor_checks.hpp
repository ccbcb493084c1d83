// Positivity tests for divisors: the destabilizing-divisor inequality and the
// Hodge-index chain that rules it out for nef classes.
#pragma once

#include "tiltstab/chern.hpp"
#include "tiltstab/ring.hpp"

#include <array>
#include <string>
#include <vector>

namespace tiltstab {

struct NegDivisorResult {
    bool holds = false;  // whether the strict inequality D^3 > rhs is satisfied
    Rational lhs;        // D^3
    Rational rhs;        // (H^2.D)^3 / (4 (H^3)^2) + (3/4) (H.D^2)^2 / (H^2.D)
};

/// Strict test D^3 > (H^2.D)^3 / (4 (H^3)^2) + (3/4) (H.D^2)^2 / (H^2.D).
/// A divisor satisfying it destabilizes the double-tilt pair for some
/// (alpha, beta) on the ray of H; nef divisors never satisfy it.
inline NegDivisorResult neg_divisor_test(const DivisorClass& D, const DivisorClass& H, const Threefold& X) {
    const Rational A = X.ring.triple(H, H, H);
    const Rational P = X.ring.triple(H, H, D);
    const Rational Q = X.ring.triple(H, D, D);
    const Rational T = X.ring.triple(D, D, D);
    if (A <= 0) throw std::invalid_argument("neg_divisor_test: H^3 must be positive");
    if (P == 0) throw DegenerateInputError("neg_divisor_test: H^2.D = 0, right-hand side undefined");
    NegDivisorResult out;
    out.lhs = T;
    out.rhs = P * P * P / (4 * A * A) + Rational(3, 4) * Q * Q / P;
    out.holds = out.lhs > out.rhs;
    return out;
}

struct HodgeInequality {
    std::string name;
    Rational lhs, rhs;  // cleared, division-free forms; the relation asserted is lhs >= rhs
    bool holds = false;
};

struct HodgeChainReport {
    // h1..h3 are the index-theorem inequalities, h4 restates h1, and h5 carries
    // the three chained steps, each in cleared form.
    std::vector<HodgeInequality> inequalities;
    bool all_hold = true;
};

/// Evaluates, for nef D and ample H with A = H^3, P = H^2.D, Q = H.D^2, T = D^3:
///   (h1) P^3 >= A^2 T        (h2) Q^3 >= A T^2       (h3) P^2 >= A Q
///   (h4) the restatement of h1 as an upper bound on T, and
///   (h5) the three-step chain bounding T by Q^2/P, each step cleared of
///        denominators so vanishing intersection numbers need no special case.
/// All comparisons are exact and non-strict.
inline HodgeChainReport hodge_chain(const DivisorClass& D, const DivisorClass& H, const Threefold& X) {
    if (!is_nef(X, D)) throw std::invalid_argument("hodge_chain: D is not nef");
    if (!is_ample(X, H)) throw std::invalid_argument("hodge_chain: H is not ample");
    const Rational A = X.ring.triple(H, H, H);
    const Rational P = X.ring.triple(H, H, D);
    const Rational Q = X.ring.triple(H, D, D);
    const Rational T = X.ring.triple(D, D, D);

    HodgeChainReport rep;
    auto push = [&rep](std::string name, Rational lhs, Rational rhs) {
        const bool ok = lhs >= rhs;
        rep.inequalities.push_back({std::move(name), std::move(lhs), std::move(rhs), ok});
        rep.all_hold = rep.all_hold && ok;
    };
    push("h1", P * P * P, A * A * T);
    push("h2", Q * Q * Q, A * T * T);
    push("h3", P * P, A * Q);
    push("h4", P * P * P, A * A * T);
    // Chain comparing Q^2/P >= A T^2/(P Q) >= P^2 T/(Q A) >= T, cleared of
    // denominators. The middle comparison follows from h1 in the direction
    // P^3 T >= A^2 T^2 (T >= 0), which is how it is evaluated here.
    push("h5_step1", Q * Q * Q, A * T * T);          // term1 >= term2, times P Q
    push("h5_step2", P * P * P * T, A * A * T * T);  // term3 >= term2, times P Q A
    push("h5_step3", P * P * T, A * Q * T);          // term3 >= term4, times Q A
    return rep;
}

}  // namespace tiltstab
