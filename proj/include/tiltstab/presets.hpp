// Preset intersection rings for the threefolds with nef tangent bundle, up to
// etale cover: P^3, the quadric, the three products of projective spaces, the
// flag threefold P(T_P2), and the three bundle cases over abelian bases
// (modelled by their product forms P^1 x A, P^2 x C, P^1 x P^1 x C, which have
// the same even cohomology, nef cone and canonical class).
#pragma once

#include "tiltstab/ring.hpp"

#include <stdexcept>
#include <vector>

namespace tiltstab {

struct UnknownPresetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"P3",           "Quadric3",          "P1xP2",
                                                   "P1xP1xP1",     "PT_P2",             "P1xAbelianSurface",
                                                   "P2xEllipticCurve", "P1xP1xEllipticCurve"};
    return names;
}

namespace detail {

inline std::vector<Rational> rv(std::initializer_list<long long> v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (long long x : v) out.emplace_back(x);
    return out;
}

inline Threefold make_p3() {
    Threefold X;
    X.name = "P3";
    X.ring.divisor_basis = {"H"};
    X.ring.curve_basis = {"H^2"};
    X.ring.div_div = {{rv({1})}};      // H.H = H^2
    X.ring.div_curve = {{Rational(1)}};  // H.H^2 = 1
    X.nef_generators = {rv({1})};
    X.canonical = rv({-4});
    X.todd = ToddData{rv({2}), {Rational(11, 6)}, Rational(1)};
    X.chi_structure_sheaf = 1;
    return X;
}

inline Threefold make_quadric3() {
    Threefold X;
    X.name = "Quadric3";
    X.ring.divisor_basis = {"H"};
    X.ring.curve_basis = {"line"};     // H^2 = 2 lines
    X.ring.div_div = {{rv({2})}};
    X.ring.div_curve = {{Rational(1)}};  // H.line = 1
    X.nef_generators = {rv({1})};
    X.canonical = rv({-3});
    X.todd = ToddData{{Rational(3, 2)}, {Rational(13, 6)}, Rational(1)};
    X.chi_structure_sheaf = 1;
    return X;
}

inline Threefold make_p1xp2() {
    Threefold X;
    X.name = "P1xP2";
    X.ring.divisor_basis = {"h1", "h2"};       // P^1 and P^2 pullbacks
    X.ring.curve_basis = {"h1.h2", "h2^2"};    // h1^2 = 0, h2^3 = 0, h1.h2^2 = 1
    X.ring.div_div = {{rv({0, 0}), rv({1, 0})},  //
                      {rv({1, 0}), rv({0, 1})}};
    X.ring.div_curve = {{Rational(0), Rational(1)},  //
                        {Rational(1), Rational(0)}};
    X.nef_generators = {rv({1, 0}), rv({0, 1})};
    X.canonical = rv({-2, -3});
    X.todd = ToddData{{Rational(1), Rational(3, 2)}, {Rational(3, 2), Rational(1)}, Rational(1)};
    X.chi_structure_sheaf = 1;
    return X;
}

inline Threefold make_p1cubed() {
    Threefold X;
    X.name = "P1xP1xP1";
    X.ring.divisor_basis = {"h1", "h2", "h3"};
    X.ring.curve_basis = {"h2.h3", "h1.h3", "h1.h2"};  // h_i^2 = 0, h1.h2.h3 = 1
    X.ring.div_div = {{rv({0, 0, 0}), rv({0, 0, 1}), rv({0, 1, 0})},
                      {rv({0, 0, 1}), rv({0, 0, 0}), rv({1, 0, 0})},
                      {rv({0, 1, 0}), rv({1, 0, 0}), rv({0, 0, 0})}};
    X.ring.div_curve = {{Rational(1), Rational(0), Rational(0)},
                        {Rational(0), Rational(1), Rational(0)},
                        {Rational(0), Rational(0), Rational(1)}};
    X.nef_generators = {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})};
    X.canonical = rv({-2, -2, -2});
    X.todd = ToddData{rv({1, 1, 1}), rv({1, 1, 1}), Rational(1)};
    X.chi_structure_sheaf = 1;
    return X;
}

// Flag threefold P(T_P2), the (1,1)-divisor in P^2 x P^2. Relations:
// h1^3 = h2^3 = 0, h1^2.h2 = h1.h2^2 = 1, and h1.h2 = h1^2 + h2^2 in H^4
// (Grothendieck relation for the tautological class h1 + h2).
inline Threefold make_ptp2() {
    Threefold X;
    X.name = "PT_P2";
    X.ring.divisor_basis = {"h1", "h2"};
    X.ring.curve_basis = {"h1^2", "h2^2"};
    X.ring.div_div = {{rv({1, 0}), rv({1, 1})},  //
                      {rv({1, 1}), rv({0, 1})}};
    X.ring.div_curve = {{Rational(0), Rational(1)},  //
                        {Rational(1), Rational(0)}};
    X.nef_generators = {rv({1, 0}), rv({0, 1})};
    X.canonical = rv({-2, -2});
    // From the normal sequence of the (1,1)-divisor: c1 = 2h1 + 2h2,
    // c2 = h1^2 + 5 h1.h2 + h2^2 = 6 h1^2 + 6 h2^2.
    X.todd = ToddData{rv({1, 1}), {Rational(3, 2), Rational(3, 2)}, Rational(1)};
    X.chi_structure_sheaf = 1;
    return X;
}

// P^1 x A for a principally polarized abelian surface with NS(A) = Z.theta,
// theta^2 = 2 points. Pic^0 twists vanish in cohomology, so this ring also
// serves the nontrivial P^1-bundles over A.
inline Threefold make_p1xabelian() {
    Threefold X;
    X.name = "P1xAbelianSurface";
    X.ring.divisor_basis = {"h", "theta"};
    X.ring.curve_basis = {"h.theta", "theta^2"};
    X.ring.div_div = {{rv({0, 0}), rv({1, 0})},  //
                      {rv({1, 0}), rv({0, 1})}};
    X.ring.div_curve = {{Rational(0), Rational(2)},  // h.theta^2 = 2
                        {Rational(2), Rational(0)}};
    X.nef_generators = {rv({1, 0}), rv({0, 1})};
    X.canonical = rv({-2, 0});
    X.todd = ToddData{rv({1, 0}), {Rational(0), Rational(0)}, Rational(0)};
    X.chi_structure_sheaf = 0;
    return X;
}

inline Threefold make_p2xelliptic() {
    Threefold X;
    X.name = "P2xEllipticCurve";
    X.ring.divisor_basis = {"h", "f"};        // P^2 pullback, elliptic fiber
    X.ring.curve_basis = {"h^2", "h.f"};      // h^3 = 0, f^2 = 0, h^2.f = 1
    X.ring.div_div = {{rv({1, 0}), rv({0, 1})},  //
                      {rv({0, 1}), rv({0, 0})}};
    X.ring.div_curve = {{Rational(0), Rational(1)},  //
                        {Rational(1), Rational(0)}};
    X.nef_generators = {rv({1, 0}), rv({0, 1})};
    X.canonical = rv({-3, 0});
    X.todd = ToddData{{Rational(3, 2), Rational(0)}, {Rational(1), Rational(0)}, Rational(0)};
    X.chi_structure_sheaf = 0;
    return X;
}

inline Threefold make_p1p1xelliptic() {
    Threefold X;
    X.name = "P1xP1xEllipticCurve";
    X.ring.divisor_basis = {"h1", "h2", "f"};
    X.ring.curve_basis = {"h1.h2", "h1.f", "h2.f"};  // h1.h2.f = 1
    X.ring.div_div = {{rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0})},
                      {rv({1, 0, 0}), rv({0, 0, 0}), rv({0, 0, 1})},
                      {rv({0, 1, 0}), rv({0, 0, 1}), rv({0, 0, 0})}};
    X.ring.div_curve = {{Rational(0), Rational(0), Rational(1)},
                        {Rational(0), Rational(1), Rational(0)},
                        {Rational(1), Rational(0), Rational(0)}};
    X.nef_generators = {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})};
    X.canonical = rv({-2, -2, 0});
    X.todd = ToddData{rv({1, 1, 0}), rv({1, 0, 0}), Rational(0)};
    X.chi_structure_sheaf = 0;
    return X;
}

}  // namespace detail

/// Preset lookup by name; throws UnknownPresetError for anything else.
inline const Threefold& preset(const std::string& name) {
    static const Threefold p3 = detail::make_p3();
    static const Threefold q3 = detail::make_quadric3();
    static const Threefold p1p2 = detail::make_p1xp2();
    static const Threefold p1c = detail::make_p1cubed();
    static const Threefold ptp2 = detail::make_ptp2();
    static const Threefold p1a = detail::make_p1xabelian();
    static const Threefold p2c = detail::make_p2xelliptic();
    static const Threefold p1p1c = detail::make_p1p1xelliptic();
    if (name == "P3") return p3;
    if (name == "Quadric3") return q3;
    if (name == "P1xP2") return p1p2;
    if (name == "P1xP1xP1") return p1c;
    if (name == "PT_P2") return ptp2;
    if (name == "P1xAbelianSurface") return p1a;
    if (name == "P2xEllipticCurve") return p2c;
    if (name == "P1xP1xEllipticCurve") return p1p1c;
    throw UnknownPresetError("unknown preset '" + name + "'");
}

}  // namespace tiltstab
