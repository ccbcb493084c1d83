// Graded model of the even cohomology ring H^{2*}(X,Q) of a threefold:
// divisor and curve classes in fixed bases, structure constants for the
// degree-2 x degree-2 product, and the degree-6 integration pairing.
#pragma once

#include "tiltstab/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tiltstab {

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using DivisorClass = std::vector<Rational>;  // coordinates in the divisor basis
using CurveClass = std::vector<Rational>;    // coordinates in the curve basis

inline DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    if (x.size() != y.size()) throw DimensionError("divisor coordinate length mismatch");
    DivisorClass out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}
inline DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    if (x.size() != y.size()) throw DimensionError("divisor coordinate length mismatch");
    DivisorClass out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
    return out;
}
inline DivisorClass operator*(const Rational& c, const DivisorClass& x) {
    DivisorClass out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
    return out;
}
inline bool is_zero(const std::vector<Rational>& x) {
    for (const auto& c : x)
        if (c != 0) return false;
    return true;
}

/// Structure data of the even cohomology ring. The point class is normalized
/// so that integration of a degree-6 product returns its multiplicity.
struct CohRing {
    std::vector<std::string> divisor_basis;  // rank rho
    std::vector<std::string> curve_basis;    // rank rho'
    // div_div[i][j]: curve-class coordinates of D_i . D_j
    std::vector<std::vector<CurveClass>> div_div;
    // div_curve[i][k]: integral of D_i . C_k
    std::vector<std::vector<Rational>> div_curve;

    std::size_t rho() const { return divisor_basis.size(); }
    std::size_t rho_curve() const { return curve_basis.size(); }

    void check_divisor(const DivisorClass& d) const {
        if (d.size() != rho()) throw DimensionError("divisor class has wrong coordinate length");
    }
    void check_curve(const CurveClass& c) const {
        if (c.size() != rho_curve()) throw DimensionError("curve class has wrong coordinate length");
    }

    /// D1 . D2 as a curve class (bilinear, symmetric).
    CurveClass mul_div_div(const DivisorClass& d1, const DivisorClass& d2) const {
        check_divisor(d1);
        check_divisor(d2);
        CurveClass out(rho_curve(), Rational(0));
        for (std::size_t i = 0; i < rho(); ++i) {
            if (d1[i] == 0) continue;
            for (std::size_t j = 0; j < rho(); ++j) {
                if (d2[j] == 0) continue;
                const Rational c = d1[i] * d2[j];
                const CurveClass& s = div_div[i][j];
                for (std::size_t k = 0; k < out.size(); ++k) out[k] += c * s[k];
            }
        }
        return out;
    }

    /// Integral of the degree-6 product D . C.
    Rational integrate(const DivisorClass& d, const CurveClass& c) const {
        check_divisor(d);
        check_curve(c);
        Rational out(0);
        for (std::size_t i = 0; i < rho(); ++i) {
            if (d[i] == 0) continue;
            for (std::size_t k = 0; k < rho_curve(); ++k) out += d[i] * c[k] * div_curve[i][k];
        }
        return out;
    }

    /// Triple intersection number D1 . D2 . D3.
    Rational triple(const DivisorClass& d1, const DivisorClass& d2, const DivisorClass& d3) const {
        return integrate(d1, mul_div_div(d2, d3));
    }

    DivisorClass zero_divisor() const { return DivisorClass(rho(), Rational(0)); }
    CurveClass zero_curve() const { return CurveClass(rho_curve(), Rational(0)); }

    DivisorClass basis_divisor(std::size_t i) const {
        DivisorClass d = zero_divisor();
        d.at(i) = 1;
        return d;
    }
};

struct ToddData {
    DivisorClass td1;
    CurveClass td2;
    Rational td3;
};

/// A named threefold model: ring plus nef cone, canonical class and Todd data.
struct Threefold {
    std::string name;
    CohRing ring;
    std::vector<DivisorClass> nef_generators;
    DivisorClass canonical;
    std::optional<ToddData> todd;
    Rational chi_structure_sheaf;  // Euler characteristic of O_X
};

// ---------------------------------------------------------------------------
// Small exact linear solver (used for cone coordinates and basis changes).
// ---------------------------------------------------------------------------

/// Solves M x = rhs by Gaussian elimination over Q; nullopt for singular M.
inline std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m,
                                                         std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    if (n == 0) return std::vector<Rational>{};
    for (const auto& row : m)
        if (row.size() != n) throw DimensionError("solve_linear needs a square matrix");
    if (rhs.size() != n) throw DimensionError("solve_linear rhs length mismatch");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        const Rational inv = m[col][col];
        for (std::size_t j = col; j < n; ++j) m[col][j] /= inv;
        rhs[col] /= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational f = m[row][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    return rhs;
}

/// Coordinates of D in the nef-generator basis (all preset cones are simplicial).
inline std::optional<std::vector<Rational>> cone_coordinates(const Threefold& X, const DivisorClass& d) {
    X.ring.check_divisor(d);
    const std::size_t n = X.ring.rho();
    if (X.nef_generators.size() != n)
        throw std::logic_error("nef cone of '" + X.name + "' is not simplicial in this basis");
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = X.nef_generators[j][i];
    return solve_linear(std::move(m), d);
}

/// Membership of D in the closed nef cone.
inline bool is_nef(const Threefold& X, const DivisorClass& d) {
    const auto coords = cone_coordinates(X, d);
    if (!coords) throw std::logic_error("degenerate nef-cone generators in '" + X.name + "'");
    for (const auto& c : *coords)
        if (c < 0) return false;
    return true;
}

/// Strict interior of the nef cone; on the presets this is exactly ampleness.
inline bool is_ample(const Threefold& X, const DivisorClass& d) {
    const auto coords = cone_coordinates(X, d);
    if (!coords) throw std::logic_error("degenerate nef-cone generators in '" + X.name + "'");
    for (const auto& c : *coords)
        if (c <= 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Ring diagnostics.
// ---------------------------------------------------------------------------

/// Checks commutativity of the divisor product, full S3-symmetry of triple
/// products on basis elements, dimension consistency of the stored tables, and
/// (when the data is present) Todd/nef-cone sanity. Returns human-readable
/// violation messages; empty means the ring passed.
inline std::vector<std::string> validate_ring(const Threefold& X) {
    std::vector<std::string> issues;
    const CohRing& R = X.ring;
    const std::size_t n = R.rho(), nc = R.rho_curve();

    if (R.div_div.size() != n) issues.push_back("div_div table has wrong row count");
    for (const auto& row : R.div_div) {
        if (row.size() != n) issues.push_back("div_div table has wrong column count");
        for (const auto& entry : row)
            if (entry.size() != nc) issues.push_back("div_div entry has wrong curve-coordinate length");
    }
    if (R.div_curve.size() != n) issues.push_back("div_curve table has wrong row count");
    for (const auto& row : R.div_curve)
        if (row.size() != nc) issues.push_back("div_curve table has wrong column count");
    if (!issues.empty()) return issues;  // shape is broken, element tests would throw

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (R.div_div[i][j] != R.div_div[j][i])
                issues.push_back("product not commutative on basis pair (" + R.divisor_basis[i] + ", " +
                                 R.divisor_basis[j] + ")");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational ijk = R.integrate(R.basis_divisor(i), R.div_div[j][k]);
                const Rational jik = R.integrate(R.basis_divisor(j), R.div_div[i][k]);
                if (ijk != jik)
                    issues.push_back("triple product not symmetric on (" + R.divisor_basis[i] + ", " +
                                     R.divisor_basis[j] + ", " + R.divisor_basis[k] + "): " + to_string(ijk) +
                                     " vs " + to_string(jik));
            }

    if (X.todd) {
        if (X.todd->td1.size() != n) issues.push_back("td1 has wrong length");
        if (X.todd->td2.size() != nc) issues.push_back("td2 has wrong length");
        if (X.todd->td3 != X.chi_structure_sheaf)
            issues.push_back("td3 does not integrate to chi(O_X): " + to_string(X.todd->td3) + " vs " +
                             to_string(X.chi_structure_sheaf));
    }
    return issues;
}

}  // namespace tiltstab
