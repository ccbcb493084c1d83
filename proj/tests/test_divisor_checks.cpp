#include <catch2/catch_amalgamated.hpp>

#include "tiltstab/divisor_checks.hpp"
#include "tiltstab/presets.hpp"

using namespace tiltstab;

namespace {
DivisorClass dc(std::initializer_list<long long> v) {
    DivisorClass out;
    for (long long x : v) out.emplace_back(x);
    return out;
}
}  // namespace

TEST_CASE("negativity test on P1xP2: D = h1, H = h1 + h2") {
    // Intersection oracle: H^3 = 3, H^2.D = 1, H.D^2 = 0, D^3 = 0,
    // so rhs = 1/36 and the strict inequality fails.
    const Threefold& X = preset("P1xP2");
    const auto r = neg_divisor_test(dc({1, 0}), dc({1, 1}), X);
    CHECK_FALSE(r.holds);
    CHECK(r.lhs == 0);
    CHECK(r.rhs == rat(1, 36));
}

TEST_CASE("negativity test equality case D = H") {
    // lhs = H^3 and rhs = H^3/4 + 3H^3/4 = H^3: not strict, so false.
    for (const auto& name : {"P3", "PT_P2", "P1xP1xEllipticCurve"}) {
        const Threefold& X = preset(name);
        DivisorClass H = X.ring.zero_divisor();
        for (std::size_t i = 0; i < X.ring.rho(); ++i) H[i] = rat(static_cast<long long>(i) + 1);
        const auto r = neg_divisor_test(H, H, X);
        CHECK_FALSE(r.holds);
        CHECK(r.lhs == r.rhs);
        CHECK(r.lhs == X.ring.triple(H, H, H));
    }
}

TEST_CASE("negativity test rejects H^2.D = 0") {
    const Threefold& X = preset("P1xP2");
    CHECK_THROWS_AS(neg_divisor_test(X.ring.zero_divisor(), dc({1, 1}), X), DegenerateInputError);
}

TEST_CASE("negativity test is scale consistent") {
    const Threefold& X = preset("PT_P2");
    const DivisorClass D = dc({3, 1}), H = dc({1, 2});
    const auto base = neg_divisor_test(D, H, X);
    const auto scaled = neg_divisor_test(rat(5, 2) * D, rat(7, 3) * H, X);
    CHECK(base.holds == scaled.holds);
}

TEST_CASE("a non-nef divisor can satisfy the negativity inequality") {
    // On PT_P2 the class D = h1 - 3h2 against H = 5h1 + 3h2 has D^3 = 18 > 0
    // while H.D^2 = 0, so the inequality reads 18 > (H^2.D)^3/(4 (H^3)^2).
    const Threefold& X = preset("PT_P2");
    const DivisorClass D = dc({1, -3}), H = dc({5, 3});
    REQUIRE_FALSE(is_nef(X, D));
    const auto r = neg_divisor_test(D, H, X);
    CHECK(r.lhs == 18);
    CHECK(r.holds);
}

TEST_CASE("hodge chain: D = H gives equality throughout") {
    const Threefold& X = preset("P1xP2");
    const DivisorClass H = dc({2, 3});
    const auto rep = hodge_chain(H, H, X);
    CHECK(rep.all_hold);
    for (const auto& ineq : rep.inequalities) CHECK(ineq.lhs == ineq.rhs);
}

TEST_CASE("hodge chain: D = h1, H = h1 + h2 on P1xP2") {
    // (h1): 1 >= 9*0, (h2): 0 >= 3*0, (h3): 1 >= 3*0.
    const Threefold& X = preset("P1xP2");
    const auto rep = hodge_chain(dc({1, 0}), dc({1, 1}), X);
    CHECK(rep.all_hold);
    CHECK(rep.inequalities[0].lhs == 1);
    CHECK(rep.inequalities[0].rhs == 0);
    CHECK(rep.inequalities[1].lhs == 0);
    CHECK(rep.inequalities[1].rhs == 0);
    CHECK(rep.inequalities[2].lhs == 1);
    CHECK(rep.inequalities[2].rhs == 0);
}

TEST_CASE("hodge chain: D = 0 holds trivially") {
    const Threefold& X = preset("Quadric3");
    const auto rep = hodge_chain(X.ring.zero_divisor(), dc({1}), X);
    CHECK(rep.all_hold);
    for (const auto& ineq : rep.inequalities) {
        CHECK(ineq.lhs == 0);
        CHECK(ineq.rhs == 0);
    }
}

TEST_CASE("hodge chain rejects non-nef D and non-ample H") {
    const Threefold& X = preset("PT_P2");
    CHECK_THROWS_AS(hodge_chain(dc({-1, 0}), dc({1, 1}), X), std::invalid_argument);
    CHECK_THROWS_AS(hodge_chain(dc({1, 0}), dc({1, 0}), X), std::invalid_argument);
}

TEST_CASE("hodge chain on a strictly interior nef divisor") {
    // PT_P2, D = h1 + 2h2, H = h1 + h2: A = 6, P = 9, Q = 13, T = 18.
    const Threefold& X = preset("PT_P2");
    const auto rep = hodge_chain(dc({1, 2}), dc({1, 1}), X);
    CHECK(rep.all_hold);
    CHECK(rep.inequalities[0].lhs == 729);   // P^3
    CHECK(rep.inequalities[0].rhs == 648);   // A^2 T
    CHECK(rep.inequalities[1].lhs == 2197);  // Q^3
    CHECK(rep.inequalities[1].rhs == 1944);  // A T^2
    CHECK(rep.inequalities[2].lhs == 81);    // P^2
    CHECK(rep.inequalities[2].rhs == 78);    // A Q
}
