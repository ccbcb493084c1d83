#include <catch2/catch_amalgamated.hpp>

#include "tiltstab/presets.hpp"
#include "tiltstab/stability.hpp"

using namespace tiltstab;

namespace {
DivisorClass dc(std::initializer_list<long long> v) {
    DivisorClass out;
    for (long long x : v) out.emplace_back(x);
    return out;
}
QuadExt qe(long long p, long long q = 1) { return QuadExt(rat(p, q)); }
}  // namespace

TEST_CASE("mu slope: torsion convention and plug-ins") {
    TwistedVector torsion{qe(0), qe(1), qe(0), rat(0)};
    CHECK(mu_slope(torsion).infinite);
    TwistedVector plain{qe(2), qe(3), qe(0), rat(0)};
    CHECK(mu_slope(plain) == ExtendedSlope::finite(qe(3, 2)));

    // O(d) on P3, B = 0, omega = alpha H: mu = d / alpha.
    const Threefold& X = preset("P3");
    const QuadExt alpha = QuadExt::sqrt_of(rat(3));
    const Polarization pol(X, dc({1}), alpha, X.ring.zero_divisor());
    const auto mu = mu_slope(v_vector(line_bundle_ch(X, dc({3})), pol));
    CHECK(mu == ExtendedSlope::finite(qe(3) / alpha));
}

TEST_CASE("nu slope: infinities and the flag-threefold value") {
    TwistedVector v1zero{qe(1), qe(0), qe(5), rat(0)};
    CHECK(nu_slope(v1zero).infinite);
    TwistedVector sky{qe(0), qe(0), qe(0), rat(1)};
    CHECK(nu_slope(sky).infinite);

    // O(1,0) on PT_P2, H = h1 + 2h2, B = 0: nu = (1 - 3 alpha^2)/(8 alpha),
    // positive exactly when alpha < 1/sqrt(3).
    const Threefold& X = preset("PT_P2");
    auto nu_at = [&X](const QuadExt& alpha) {
        const Polarization pol(X, dc({1, 2}), alpha, X.ring.zero_divisor());
        return nu_slope(v_vector(line_bundle_ch(X, dc({1, 0})), pol));
    };
    CHECK(nu_at(qe(1, 3)) == ExtendedSlope::finite(qe(1, 4)));
    CHECK(nu_at(QuadExt::sqrt_of(rat(1, 4))).value.sign() > 0);
    CHECK(nu_at(QuadExt::sqrt_of(rat(1, 3))).value.sign() == 0);
    CHECK(nu_at(qe(2, 3)).value.sign() < 0);
}

TEST_CASE("nu is a slope: seesaw between summands") {
    const Threefold& X = preset("P1xP2");
    const Polarization pol(X, dc({1, 1}), qe(1, 2), dc({0, -1}));
    const ChernVector a = line_bundle_ch(X, dc({2, 1}));
    const ChernVector b = line_bundle_ch(X, dc({0, 2}));
    const TwistedVector va = v_vector(a, pol), vb = v_vector(b, pol), vs = v_vector(add(a, b), pol);
    REQUIRE(va.v1.sign() > 0);
    REQUIRE(vb.v1.sign() > 0);
    const auto na = nu_slope(va), nb = nu_slope(vb), ns = nu_slope(vs);
    const int lo = compare(ns, na), hi = compare(ns, nb);
    CHECK(lo * hi <= 0);  // nu(a+b) lies weakly between nu(a) and nu(b)
}

TEST_CASE("central charge values") {
    const Threefold& X = preset("P3");
    const QuadExt alpha = QuadExt::sqrt_of(rat(1, 3));
    const Polarization pol(X, dc({1}), alpha, X.ring.zero_divisor());

    // Skyscraper: -1 + 0i for any polarization.
    const Charge zp = central_charge(skyscraper_ch(X), pol);
    CHECK(zp.re == qe(-1));
    CHECK(zp.im.is_zero());

    // O_X: Re = 0, Im = -alpha^3/6.
    const Charge zo = central_charge(line_bundle_ch(X, dc({0})), pol);
    CHECK(zo.re.is_zero());
    CHECK(zo.im == -(alpha.pow3() / qe(6)));

    // Zero class maps to zero.
    const Charge zz = central_charge(zero_ch(X), pol);
    CHECK(zz.is_zero());
}

TEST_CASE("Z_{alpha,0,s}: flag-threefold witness and skyscraper") {
    const Threefold& X = preset("PT_P2");
    // (a, b, alpha, s) = (1, 2, 1/3, 1/18) on O(1,0): 4/81 + (2/9) i with
    // ring-true ch2 (H.ch2 = b/2).
    const Charge z = charge_s(line_bundle_ch(X, dc({1, 0})), qe(1, 3), dc({1, 2}), rat(1, 18), X);
    CHECK(z.re == qe(4, 81));
    CHECK(z.im == qe(2, 9));

    const Charge zp = charge_s(skyscraper_ch(X), qe(1, 2), dc({1, 2}), rat(1, 18), X);
    CHECK(zp.re == qe(-1));
    CHECK(zp.im.is_zero());

    // s = 0 and ch3 = 0 make the charge purely imaginary.
    const Charge zi = charge_s(line_bundle_ch(X, dc({1, 0})), qe(1, 2), dc({1, 2}), rat(0), X);
    CHECK(zi.re.is_zero());
}

TEST_CASE("central charge is consistent with nu: sign(Im) = sign(v2 - v0/6)") {
    const Threefold& X = preset("P1xP1xP1");
    for (long long d1 = -2; d1 <= 2; ++d1)
        for (long long d2 = -1; d2 <= 2; d2 += 3) {
            const ChernVector ch = line_bundle_ch(X, dc({d1, d2, 1}));
            for (long long num = 1; num <= 5; num += 2) {
                const QuadExt alpha = QuadExt(rat(num, 3));
                const Polarization pol(X, dc({1, 1, 1}), alpha, X.ring.zero_divisor());
                const TwistedVector v = v_vector(ch, pol);
                const Charge z = charge_s(ch, alpha, dc({1, 1, 1}), rat(7, 5), X);
                CHECK(z.im.sign() == (v.v2 - v.v0 / qe(6)).sign());
            }
        }
}

TEST_CASE("central charge equals Z_{alpha,0,1/2} at B = 0") {
    const Threefold& X = preset("PT_P2");
    const DivisorClass H = dc({2, 3});
    const QuadExt alpha = QuadExt::sqrt_of(rat(2, 7));
    const Polarization pol(X, H, alpha, X.ring.zero_divisor());
    for (long long k = -2; k <= 2; ++k) {
        const ChernVector ch = line_bundle_ch(X, dc({k, 1 - k}));
        const Charge a = central_charge(ch, pol);
        const Charge b = charge_s(ch, alpha, H, rat(1, 2), X);
        CHECK(a.re == b.re);
        CHECK(a.im == b.im);
    }
}

TEST_CASE("cone check: obvious members and the antipode boundary") {
    const Charge anchor{qe(1), qe(1)};
    CHECK(cone_check({anchor, anchor, anchor}, anchor).pass);
    CHECK(cone_check({{qe(-1), qe(-1)}}, anchor).pass);   // phi0 + 1 boundary
    CHECK_FALSE(cone_check({{qe(1), qe(-1)}}, anchor).pass);  // just below phi0
    CHECK(cone_check({{qe(-1), qe(1)}}, anchor).pass);
    CHECK_THROWS_AS(cone_check({anchor}, Charge{qe(0), qe(0)}), DegenerateInputError);

    // Zero charges are anomalies, not failures.
    const auto r = cone_check({{qe(0), qe(0)}, {qe(0), qe(1)}}, anchor);
    CHECK(r.pass);
    CHECK(r.zero_charges == 1);
}

TEST_CASE("cone check is invariant under a common positive scale") {
    const Charge anchor{qe(2), qe(1)};
    const std::vector<Charge> zs = {{qe(-3), qe(5)}, {qe(1), qe(1)}, {qe(-2), qe(-1)}};
    const auto base = cone_check(zs, anchor);
    std::vector<Charge> scaled;
    for (const auto& z : zs) scaled.push_back({qe(7, 3) * z.re, qe(7, 3) * z.im});
    const Charge anchor_scaled{qe(7, 3) * anchor.re, qe(7, 3) * anchor.im};
    const auto after = cone_check(scaled, anchor_scaled);
    CHECK(base.pass == after.pass);
    CHECK(base.outside == after.outside);
}

TEST_CASE("wall conic between O and O(1) on P3") {
    // Hand expansion: -beta^2/2 + beta/2 - alpha^2/6 = 0.
    const Threefold& X = preset("P3");
    const WallConic w = wall_conic(line_bundle_ch(X, dc({0})), line_bundle_ch(X, dc({1})), dc({1}), X);
    CHECK(w.c1 == rat(-1, 6));
    CHECK(w.c2 == rat(-1, 2));
    CHECK(w.c3 == rat(1, 2));
    CHECK(w.c4 == rat(0));
    CHECK_FALSE(w.degenerate);
}

TEST_CASE("wall conic degenerates exactly for proportional classes") {
    const Threefold& X = preset("P3");
    const ChernVector e = line_bundle_ch(X, dc({1}));
    CHECK(wall_conic(e, e, dc({1}), X).degenerate);
    CHECK(wall_conic(e, scale(rat(3), e), dc({1}), X).degenerate);
    // The skyscraper has vanishing nu-data, so that pair degenerates too: the
    // slope difference is infinite-vs-finite with one sign everywhere.
    CHECK(wall_conic(e, skyscraper_ch(X), dc({1}), X).degenerate);
    CHECK_FALSE(wall_conic(e, line_bundle_ch(X, dc({2})), dc({1}), X).degenerate);
}

TEST_CASE("wall scan signs agree with direct slope comparison") {
    const Threefold& X = preset("P3");
    const ChernVector E = line_bundle_ch(X, dc({0}));
    const ChernVector F = line_bundle_ch(X, dc({1}));
    WallGridSpec grid{rat(0), rat(2), rat(-2), rat(2), 21, 21};
    const WallDiagram d = wall_scan(E, F, dc({1}), X, grid);

    for (std::size_t i = 0; i < d.alpha_nodes.size(); ++i)
        for (std::size_t j = 0; j < d.beta_nodes.size(); ++j) {
            const Polarization pol(X, dc({1}), QuadExt(d.alpha_nodes[i]),
                                   d.beta_nodes[j] * dc({1}));
            const int direct = compare(nu_slope(v_vector(E, pol)), nu_slope(v_vector(F, pol)));
            CHECK(static_cast<int>(d.sign_at(i, j)) == direct);
        }
}

TEST_CASE("wall scan with a skyscraper handles infinite slopes") {
    const Threefold& X = preset("P3");
    const ChernVector E = skyscraper_ch(X);
    const ChernVector F = line_bundle_ch(X, dc({0}));
    WallGridSpec grid{rat(0), rat(1), rat(-1), rat(1), 7, 9};
    const WallDiagram d = wall_scan(E, F, dc({1}), X, grid);
    for (std::size_t i = 0; i < d.alpha_nodes.size(); ++i)
        for (std::size_t j = 0; j < d.beta_nodes.size(); ++j) {
            const Polarization pol(X, dc({1}), QuadExt(d.alpha_nodes[i]), d.beta_nodes[j] * dc({1}));
            CHECK(static_cast<int>(d.sign_at(i, j)) ==
                  compare(nu_slope(v_vector(E, pol)), nu_slope(v_vector(F, pol))));
        }
}

TEST_CASE("degenerate pair scans flag the conic and give one constant sign") {
    const Threefold& X = preset("P3");
    const ChernVector e = line_bundle_ch(X, dc({1}));
    WallGridSpec grid{rat(0), rat(2), rat(-1), rat(1), 9, 9};
    const WallDiagram d = wall_scan(e, scale(rat(2), e), dc({1}), X, grid);
    CHECK(d.conic.degenerate);
    for (const auto s : d.signs) CHECK(s == 0);

    // Skyscraper against O(1): infinite beats finite away from beta = 1, where
    // both v1 vanish and the difference degenerates to 0.
    WallGridSpec away{rat(0), rat(2), rat(-1), rat(3, 4), 9, 9};
    const WallDiagram p = wall_scan(skyscraper_ch(X), e, dc({1}), X, away);
    CHECK(p.conic.degenerate);
    for (const auto s : p.signs) CHECK(s == 1);
    WallGridSpec at_wall{rat(0), rat(2), rat(1), rat(1), 3, 1};
    const WallDiagram q = wall_scan(skyscraper_ch(X), e, dc({1}), X, at_wall);
    for (const auto s : q.signs) CHECK(s == 0);
}

TEST_CASE("wall scan rejects empty or nonpositive grids") {
    const Threefold& X = preset("P3");
    const ChernVector e = line_bundle_ch(X, dc({0}));
    WallGridSpec empty{rat(0), rat(2), rat(0), rat(1), 0, 5};
    CHECK_THROWS_AS(wall_scan(e, e, dc({1}), X, empty), std::invalid_argument);
    WallGridSpec inverted{rat(2), rat(1), rat(0), rat(1), 5, 5};
    CHECK_THROWS_AS(wall_scan(e, e, dc({1}), X, inverted), std::invalid_argument);
}

TEST_CASE("single-node grid matches nu_slope directly") {
    const Threefold& X = preset("P3");
    const ChernVector E = line_bundle_ch(X, dc({0})), F = line_bundle_ch(X, dc({1}));
    WallGridSpec grid{rat(0), rat(1), rat(1, 2), rat(1, 2), 1, 1};
    const WallDiagram d = wall_scan(E, F, dc({1}), X, grid);
    REQUIRE(d.signs.size() == 1);
    const Polarization pol(X, dc({1}), QuadExt(rat(1)), rat(1, 2) * dc({1}));
    CHECK(static_cast<int>(d.signs[0]) == compare(nu_slope(v_vector(E, pol)), nu_slope(v_vector(F, pol))));
}

TEST_CASE("the reduction threshold constant") {
    const QuadExt t = li_reduction_threshold();
    CHECK((t * t).rational_value() == rat(1, 12));
    CHECK(t.sign() > 0);
}
