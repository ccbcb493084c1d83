#include <catch2/catch_amalgamated.hpp>

#include "tiltstab/presets.hpp"
#include "tiltstab/ring.hpp"

#include <random>

using namespace tiltstab;

namespace {
DivisorClass dc(std::initializer_list<long long> v) {
    DivisorClass out;
    for (long long x : v) out.emplace_back(x);
    return out;
}
}  // namespace

TEST_CASE("preset lookup") {
    CHECK(preset_names().size() == 8);
    for (const auto& name : preset_names()) CHECK(preset(name).name == name);
    CHECK_THROWS_AS(preset("P4"), UnknownPresetError);
    CHECK(preset("P3").ring.rho() == 1);
    CHECK(preset("PT_P2").ring.rho() == 2);
    CHECK(preset("P1xP1xP1").ring.rho() == 3);
}

TEST_CASE("flag threefold relations: h1^2 h2 = h1 h2^2 = 1, h1^3 = h2^3 = 0") {
    const Threefold& X = preset("PT_P2");
    const DivisorClass h1 = dc({1, 0}), h2 = dc({0, 1});
    CHECK(X.ring.triple(h1, h1, h2) == 1);
    CHECK(X.ring.triple(h1, h2, h2) == 1);
    CHECK(X.ring.triple(h1, h1, h1) == 0);
    CHECK(X.ring.triple(h2, h2, h2) == 0);
    CHECK(X.ring.integrate(h1, X.ring.mul_div_div(h1, h2)) == 1);
    CHECK(X.ring.integrate(h1, X.ring.mul_div_div(h1, h1)) == 0);
}

TEST_CASE("flag threefold: (a h1 + b h2)^3 = 3ab(a+b)") {
    // Oracle: expand trilinearly with the two relations above.
    const Threefold& X = preset("PT_P2");
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b) {
            const DivisorClass H = dc({a, b});
            CHECK(X.ring.triple(H, H, H) == Rational(3) * a * b * (a + b));
        }
}

TEST_CASE("product presets: squares of pullbacks vanish") {
    const Threefold& X = preset("P1xP2");
    const DivisorClass h1 = dc({1, 0});
    CHECK(is_zero(X.ring.mul_div_div(h1, h1)));
    CHECK(X.ring.triple(dc({1, 1}), dc({1, 1}), dc({1, 1})) == 3);

    const Threefold& Y = preset("P1xP1xP1");
    CHECK(Y.ring.triple(dc({1, 0, 0}), dc({0, 1, 0}), dc({0, 0, 1})) == 1);
    CHECK(Y.ring.triple(dc({1, 1, 1}), dc({1, 1, 1}), dc({1, 1, 1})) == 6);

    const Threefold& A = preset("P1xAbelianSurface");
    CHECK(A.ring.triple(dc({1, 0}), dc({0, 1}), dc({0, 1})) == 2);  // h.theta^2 = 2
    CHECK(A.ring.triple(dc({0, 1}), dc({0, 1}), dc({0, 1})) == 0);
}

TEST_CASE("bilinearity: D . 0 = 0") {
    for (const auto& name : preset_names()) {
        const Threefold& X = preset(name);
        const DivisorClass d = X.ring.basis_divisor(0);
        CHECK(is_zero(X.ring.mul_div_div(d, X.ring.zero_divisor())));
    }
}

TEST_CASE("dimension mismatches are rejected") {
    const Threefold& X = preset("PT_P2");
    CHECK_THROWS_AS(X.ring.mul_div_div(dc({1}), dc({1, 0})), DimensionError);
    CHECK_THROWS_AS(X.ring.integrate(dc({1, 0}), {Rational(1)}), DimensionError);
}

TEST_CASE("triple products are fully symmetric on every preset") {
    for (const auto& name : preset_names()) {
        const Threefold& X = preset(name);
        const std::size_t n = X.ring.rho();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const auto di = X.ring.basis_divisor(i);
                    const auto dj = X.ring.basis_divisor(j);
                    const auto dk = X.ring.basis_divisor(k);
                    const Rational v = X.ring.triple(di, dj, dk);
                    CHECK(X.ring.triple(di, dk, dj) == v);
                    CHECK(X.ring.triple(dj, di, dk) == v);
                    CHECK(X.ring.triple(dj, dk, di) == v);
                    CHECK(X.ring.triple(dk, di, dj) == v);
                    CHECK(X.ring.triple(dk, dj, di) == v);
                }
    }
}

TEST_CASE("validate_ring: presets clean, corrupted ring reported") {
    for (const auto& name : preset_names()) CHECK(validate_ring(preset(name)).empty());

    Threefold broken = preset("P1xP2");
    broken.ring.div_div[0][1][0] += 1;  // h1.h2 != h2.h1 now
    const auto issues = validate_ring(broken);
    CHECK_FALSE(issues.empty());
}

TEST_CASE("nef cone membership on simplicial preset cones") {
    const Threefold& X = preset("PT_P2");
    CHECK(is_nef(X, dc({1, 0})));
    CHECK(is_nef(X, dc({1, 1})));
    CHECK_FALSE(is_nef(X, dc({-1, 0})));
    CHECK_FALSE(is_ample(X, dc({1, 0})));
    CHECK(is_ample(X, dc({1, 2})));

    const Threefold& Y = preset("P1xP2");
    CHECK_FALSE(is_nef(Y, dc({-1, 0})));
    CHECK(is_nef(Y, dc({0, 3})));
}

TEST_CASE("nef generators pair nonnegatively against sampled cone classes") {
    // For every generator G and every H in the cone: H^2.G >= 0 and H.G^2 >= 0.
    std::mt19937_64 rng(5);
    for (const auto& name : preset_names()) {
        const Threefold& X = preset(name);
        for (int trial = 0; trial < 10; ++trial) {
            DivisorClass H = X.ring.zero_divisor();
            for (std::size_t i = 0; i < X.ring.rho(); ++i)
                H = H + Rational(1 + (long long)(rng() % 7)) * X.nef_generators[i];
            for (const auto& g : X.nef_generators) {
                CHECK(X.ring.triple(H, H, g) >= 0);
                CHECK(X.ring.triple(H, g, g) >= 0);
            }
        }
    }
}

TEST_CASE("canonical class is minus twice the degree-one Todd part") {
    // td1 = c1/2 and K = -c1 tie the two stored data sets together.
    for (const auto& name : preset_names()) {
        const Threefold& X = preset(name);
        REQUIRE(X.todd.has_value());
        CHECK(X.canonical == Rational(-2) * X.todd->td1);
    }
}

TEST_CASE("Todd degree-3 part integrates to chi(O_X)") {
    for (const auto& name : preset_names()) {
        const Threefold& X = preset(name);
        REQUIRE(X.todd.has_value());
        CHECK(X.todd->td3 == X.chi_structure_sheaf);
    }
    CHECK(preset("PT_P2").chi_structure_sheaf == 1);
    CHECK(preset("P1xAbelianSurface").chi_structure_sheaf == 0);
    CHECK(preset("P2xEllipticCurve").chi_structure_sheaf == 0);
    CHECK(preset("P1xP1xEllipticCurve").chi_structure_sheaf == 0);
}

TEST_CASE("exact linear solver") {
    auto sol = solve_linear({{rat(2), rat(1)}, {rat(1), rat(-1)}}, {rat(4), rat(-1)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == rat(1));
    CHECK((*sol)[1] == rat(2));
    CHECK_FALSE(solve_linear({{rat(1), rat(2)}, {rat(2), rat(4)}}, {rat(1), rat(2)}).has_value());
}
