#include <catch2/catch_amalgamated.hpp>

#include "tiltstab/ptp2.hpp"

using namespace tiltstab;
using namespace tiltstab::ptp2;

namespace {
DivisorClass dc(std::initializer_list<long long> v) {
    DivisorClass out;
    for (long long x : v) out.emplace_back(x);
    return out;
}
QuadExt qe(long long p, long long q = 1) { return QuadExt(rat(p, q)); }
}  // namespace

TEST_CASE("line bundle Chern data on the flag threefold") {
    CHECK(ch_line_bundle(0, 0) == ChernVector{rat(1), dc({0, 0}), {rat(0), rat(0)}, rat(0)});
    // ch3(O(k,l)) = k l (k+l)/2.
    CHECK(ch_line_bundle(1, 1).ch3 == rat(1));
    for (long long k = -3; k <= 3; ++k)
        for (long long l = -3; l <= 3; ++l)
            CHECK(ch_line_bundle(k, l).ch3 == Rational(k) * l * (k + l) / 2);
}

TEST_CASE("closed form H^2.ch1 equals ring truth") {
    const Threefold& X = space();
    for (long long a = 1; a <= 3; ++a)
        for (long long b = 1; b <= 3; ++b)
            for (long long k = -2; k <= 2; ++k)
                for (long long l = -2; l <= 2; ++l) {
                    const DivisorClass H = dc({a, b});
                    const Rational ring =
                        X.ring.integrate(ch_line_bundle(k, l).ch1, X.ring.mul_div_div(H, H));
                    CHECK(h2_ch1(a, b, k, l) == ring);
                }
}

TEST_CASE("ch-comparison report: (1) and (3) match, (2) is exactly twice ring truth") {
    for (long long a = 1; a <= 3; ++a)
        for (long long b = 1; b <= 3; ++b)
            for (long long k = -3; k <= 3; ++k)
                for (long long l = -3; l <= 3; ++l) {
                    const auto rep = closed_form_report(a, b, k, l);
                    CHECK(rep.match1);
                    CHECK(rep.match3);
                    CHECK(rep.formula2_is_twice_ring);
                }
    // The specific ratio-2 witness: (k,l) = (1,0), (a,b) = (1,2) gives
    // printed value b = 2 against ring value b/2 = 1.
    const auto rep = closed_form_report(1, 2, 1, 0);
    CHECK(rep.formula2 == 2);
    CHECK(rep.ring2 == 1);
}

TEST_CASE("alpha0, printed mode") {
    // (a,b) = (1,2): min{sqrt(2/3), sqrt(18/17)} = sqrt(2/3).
    const Alpha0 a0 = alpha0(1, 2, Alpha0Mode::printed);
    CHECK(a0.alpha_sq == rat(2, 3));
    CHECK(a0.alpha == QuadExt::sqrt_of(rat(2, 3)));
    CHECK(a0.binding == "2/(a(a+b))");

    // a = b: min{1/a, (3/2)/a} = 1/a.
    for (long long a = 1; a <= 4; ++a) {
        const Alpha0 eq = alpha0(a, a, Alpha0Mode::printed);
        CHECK(eq.alpha == QuadExt(rat(1, a)));
    }
    CHECK_THROWS_AS(alpha0(0, 2, Alpha0Mode::printed), std::invalid_argument);
}

TEST_CASE("alpha0, ring mode") {
    // (a,b) = (1,2): the tilt-slope positivity of O(1,0) binds at 1/3; the
    // charge-cone inequalities (18/21 and 3/2) are looser.
    const Alpha0 a0 = alpha0(1, 2, Alpha0Mode::ring);
    CHECK(a0.alpha_sq == rat(1, 3));
    CHECK(a0.binding == "1/(a(a+b))");

    // Ring thresholds sit at half the squared printed-convention thresholds when the same
    // inequality binds.
    const Alpha0 p = alpha0(2, 3, Alpha0Mode::printed);
    const Alpha0 r = alpha0(2, 3, Alpha0Mode::ring);
    CHECK(p.alpha_sq == rat(1, 5));
    CHECK(r.alpha_sq == rat(1, 10));
}

TEST_CASE("heart placement at small alpha matches the placement list") {
    const auto& coll = exceptional_collection();
    const auto& shifts = heart_placement_list();
    // alpha = 1/3 < alpha0(ring) = sqrt(1/3) at (a, b) = (1, 2).
    for (std::size_t i = 0; i < coll.size(); ++i) {
        const auto h = heart_membership(coll[i].k, coll[i].l, shifts[i], 1, 2, qe(1, 3));
        CHECK(h.verdict == HeartVerdict::in_heart);
        CHECK(h.heart_shift == shifts[i]);
    }
}

TEST_CASE("heart placement worked cases") {
    // O(1,0) at (1,2), alpha = 1/3: mu numerator 8 > 0, ring Im = 2/9 > 0.
    const auto h10 = heart_membership(1, 0, 0, 1, 2, qe(1, 3));
    CHECK(h10.verdict == HeartVerdict::in_heart);
    CHECK(h10.mu_numerator == 8);
    CHECK(h10.first_tilt_shift == 0);

    // O(0,0): mu numerator 0, so the structure sheaf enters at shift 1 with
    // infinite second slope.
    const auto h00 = heart_membership(0, 0, 1, 1, 2, qe(1, 3));
    CHECK(h00.verdict == HeartVerdict::in_heart);
    CHECK(h00.nu_infinite);
    CHECK(h00.heart_shift == 1);

    // O(-1,-1) lands at shift 2 (the collection uses its shift by one more).
    const auto hm = heart_membership(-1, -1, 2, 1, 2, qe(1, 3));
    CHECK(hm.verdict == HeartVerdict::in_heart);
    CHECK(heart_membership(-1, -1, 3, 1, 2, qe(1, 3)).verdict == HeartVerdict::not_in_heart);
}

TEST_CASE("heart placement of O(0,-1) flips above its own wall") {
    // Ring threshold for O(0,-1)[2]: alpha^2 <= 1/(b(a+b)) = 1/6 at (1,2),
    // strictly below alpha0(ring)^2 = 1/3. Above the wall the once-shifted
    // sheaf has positive slope and stays at shift 1.
    const auto below = heart_membership(0, -1, 2, 1, 2, QuadExt::sqrt_of(rat(1, 7)));
    CHECK(below.verdict == HeartVerdict::in_heart);
    const auto at_wall = heart_membership(0, -1, 2, 1, 2, QuadExt::sqrt_of(rat(1, 6)));
    CHECK(at_wall.verdict == HeartVerdict::boundary);
    const auto above = heart_membership(0, -1, 2, 1, 2, QuadExt::sqrt_of(rat(27, 100)));
    CHECK(above.verdict == HeartVerdict::not_in_heart);
    CHECK(above.heart_shift == 1);
}

TEST_CASE("heart membership argument validation") {
    CHECK_THROWS_AS(heart_membership(1, 0, 0, 1, 2, qe(0)), std::invalid_argument);
    CHECK_THROWS_AS(heart_membership(1, 0, 0, 1, 2, qe(-1)), std::invalid_argument);
    CHECK_THROWS_AS(heart_membership(1, 0, 0, 0, 2, qe(1, 3)), std::invalid_argument);
}

TEST_CASE("charge cone check passes at (1, 2, 1/3) in both conventions") {
    const auto ring = charge_cone_check(1, 2, qe(1, 3), rat(1, 18), Ch2Convention::ring);
    CHECK(ring.pass);
    CHECK(ring.precondition_ok);
    // Witness: Z(O(1,0)) = 4/81 + (2/9) i.
    CHECK(ring.witnesses[5].z.re == qe(4, 81));
    CHECK(ring.witnesses[5].z.im == qe(2, 9));

    const auto printed = charge_cone_check(1, 2, qe(1, 3), rat(1, 18), Ch2Convention::printed);
    CHECK(printed.pass);
    // Witness: Im Z(O(1,0)) = 2 alpha - 3 alpha^3 = 5/9 in the printed convention.
    CHECK(printed.witnesses[5].z.im == qe(5, 9));
}

TEST_CASE("the six generator charges at (1,2,1/3) all lie in the anchored cone") {
    const auto r = charge_cone_check(1, 2, qe(1, 3), rat(1, 18), Ch2Convention::ring);
    std::vector<Charge> zs;
    for (const auto& w : r.witnesses) zs.push_back(w.z);
    const auto cone = cone_check(zs, r.witnesses[5].z);
    CHECK(cone.pass);
    CHECK(cone.zero_charges == 0);
}

TEST_CASE("charge cone check fails at the boundary alpha = alpha0") {
    // At alpha^2 = 1/3 (ring) the anchor slides onto the real axis: the
    // first-quadrant strictness fails, and so does the precondition.
    const auto r = charge_cone_check(1, 2, QuadExt::sqrt_of(rat(1, 3)), rat(1, 18), Ch2Convention::ring);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.precondition_ok);
    CHECK(r.witnesses[5].z.im.is_zero());
}

TEST_CASE("charge cone check fails below alpha0 once O(0,-1)[2] leaves the cone") {
    // At (a,b) = (1,2), alpha^2 = 27/100 < 1/3 = alpha0(ring)^2 the charge of
    // O(0,-1)[2] drops into the open third quadrant and even leaves the closed
    // half-plane cone anchored at Z(O(1,0)): the containment claim fails
    // strictly inside (0, alpha0).
    const QuadExt alpha = QuadExt::sqrt_of(rat(27, 100));
    const auto r = charge_cone_check(1, 2, alpha, rat(1, 18), Ch2Convention::ring);
    CHECK(r.precondition_ok);
    CHECK_FALSE(r.pass);
    REQUIRE(r.witnesses.size() == 6);
    CHECK_FALSE(r.witnesses[1].ok);         // O(0,-1)[2]
    CHECK(r.witnesses[1].z.im.sign() < 0);  // negative imaginary part

    // Cross-check: the cone containment itself fails for that charge.
    std::vector<Charge> zs;
    for (const auto& w : r.witnesses) zs.push_back(w.z);
    const auto cone = cone_check(zs, r.witnesses[5].z);
    CHECK_FALSE(cone.pass);

    // Under the printed convention the quadrant thresholds double, so all six
    // quadrant placements still hold at alpha^2 = 27/100; the cross inequality
    // fails there nonetheless (its printed-convention sign flips at
    // alpha^2 = (76 - sqrt(2188))/63, just below 27/100).
    const auto p27 = charge_cone_check(1, 2, alpha, rat(1, 18), Ch2Convention::printed);
    CHECK(p27.precondition_ok);
    for (const auto& w : p27.witnesses) CHECK(w.ok);
    CHECK_FALSE(p27.cross_ok);
    CHECK_FALSE(p27.pass);
    const auto p26 = charge_cone_check(1, 2, QuadExt::sqrt_of(rat(13, 50)), rat(1, 18), Ch2Convention::printed);
    CHECK(p26.pass);

    // At alpha^2 = 6/10 < 2/3 = alpha0(printed)^2 the quadrant of O(0,-1)[2]
    // fails in the printed convention as well.
    const auto p = charge_cone_check(1, 2, QuadExt::sqrt_of(rat(6, 10)), rat(1, 18), Ch2Convention::printed);
    CHECK(p.precondition_ok);
    CHECK_FALSE(p.witnesses[1].ok);
    CHECK_FALSE(p.pass);
}

TEST_CASE("skyscraper dimension vector is (1, 2, 1, 1, 2, 1)") {
    const DimensionVector n = decompose_skyscraper();
    CHECK(n == DimensionVector{1, 2, 1, 1, 2, 1});

    // Recombination: sum of n_i (-1)^{shift_i} ch(O(k_i, l_i)) = (0,0,0,1).
    const auto& coll = exceptional_collection();
    ChernVector sum = zero_ch(space());
    for (std::size_t i = 0; i < 6; ++i) {
        const Rational sgn = coll[i].shift % 2 == 0 ? 1 : -1;
        sum = add(sum, scale(sgn * n[i], ch_line_bundle(coll[i].k, coll[i].l)));
    }
    CHECK(sum == skyscraper_ch(space()));
}

TEST_CASE("decompose is exact on basis elements and zero") {
    // ch(O(1,0)) itself is the last collection member with positive sign.
    const auto last = decompose(ch_line_bundle(1, 0));
    const std::vector<Rational> expect_last = {rat(0), rat(0), rat(0), rat(0), rat(0), rat(1)};
    CHECK(last == expect_last);

    const auto zero = decompose(zero_ch(space()));
    for (const auto& c : zero) CHECK(c == 0);

    // O(0,-1) sits at an odd collection sign... its class decomposes with a
    // positive unit coordinate at index 1 since (-1)^2 = 1.
    const auto mid = decompose(ch_line_bundle(0, -1));
    CHECK(mid[1] == rat(1));
}

TEST_CASE("euler pairing oracles on the flag threefold") {
    const Threefold& X = space();
    const ChernVector o = ch_line_bundle(0, 0);
    CHECK(euler_pairing(X, o, o) == 1);                        // chi(O_X) = 1
    CHECK(euler_pairing(X, o, ch_line_bundle(1, 0)) == 3);     // chi(O(1,0)) = chi(P^2, O(1))
    CHECK(euler_pairing(X, o, skyscraper_ch(X)) == 1);         // only ch3 td0 survives
    CHECK(euler_pairing(X, o, ch_line_bundle(0, 1)) == 3);     // symmetric projection
    CHECK(euler_pairing(X, o, ch_line_bundle(1, 1)) == 8);     // chi(O_pi(1)) = chi(P^2, T_P2)
}

TEST_CASE("euler pairing is bilinear") {
    const Threefold& X = space();
    const ChernVector e = ch_line_bundle(2, -1);
    const ChernVector f = ch_line_bundle(-1, 1);
    const ChernVector g = skyscraper_ch(X);
    CHECK(euler_pairing(X, e, add(f, g)) == euler_pairing(X, e, f) + euler_pairing(X, e, g));
}

TEST_CASE("euler pairing on other presets against Kunneth values") {
    const Threefold& quadric = preset("Quadric3");
    CHECK(euler_pairing(quadric, line_bundle_ch(quadric, dc({0})), line_bundle_ch(quadric, dc({1}))) == 5);
    const Threefold& p1p2 = preset("P1xP2");
    // chi(O(1,1)) = chi(P^1, O(1)) chi(P^2, O(1)) = 2 * 3.
    CHECK(euler_pairing(p1p2, line_bundle_ch(p1p2, dc({0, 0})), line_bundle_ch(p1p2, dc({1, 1}))) == 6);
    const Threefold& p2c = preset("P2xEllipticCurve");
    // chi(O(h)) = 3 * 0, chi(O(f)) = 1 * 1.
    CHECK(euler_pairing(p2c, line_bundle_ch(p2c, dc({0, 0})), line_bundle_ch(p2c, dc({1, 0}))) == 0);
    CHECK(euler_pairing(p2c, line_bundle_ch(p2c, dc({0, 0})), line_bundle_ch(p2c, dc({0, 1}))) == 1);
}
