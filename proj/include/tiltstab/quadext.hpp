// Arithmetic in real quadratic extensions Q(sqrt(r)) with exact sign decisions,
// plus rational interval enclosures for values that leave the working field.
#pragma once

#include "tiltstab/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace tiltstab {

struct FieldMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Value a + b*sqrt(r) with a, b, r rational and r >= 0.
/// Canonical form: b == 0 implies r == 0; r is never a perfect rational square
/// (square radicands are folded into the rational part on construction).
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), r_(0) {}
    QuadExt(const Rational& a) : a_(a), b_(0), r_(0) {}  // NOLINT(google-explicit-constructor)
    QuadExt(long long a) : a_(a), b_(0), r_(0) {}        // NOLINT(google-explicit-constructor)
    QuadExt(Rational a, Rational b, Rational r) : a_(std::move(a)), b_(std::move(b)), r_(std::move(r)) {
        if (r_ < 0) throw std::invalid_argument("negative radicand");
        normalize();
    }

    /// sqrt(x) of a nonnegative rational, exact: either rational or 0 + 1*sqrt(x).
    static QuadExt sqrt_of(const Rational& x) {
        if (x < 0) throw std::invalid_argument("sqrt of negative rational");
        return QuadExt(Rational(0), Rational(1), x);
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& r() const { return r_; }
    bool is_rational() const { return b_ == 0; }

    /// The rational value; throws if the value is irrational.
    const Rational& rational_value() const {
        if (!is_rational()) throw FieldMismatchError("value is irrational: " + str());
        return a_;
    }

    QuadExt operator-() const { return QuadExt(-a_, -b_, r_, no_normalize{}); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        const Rational& r = joint_radicand(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, r);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        const Rational& r = joint_radicand(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * r, x.a_ * y.b_ + x.b_ * y.a_, r);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        const Rational& r = joint_radicand(x, y);
        const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * r;  // y * conj(y)
        if (norm == 0) {
            if (y.a_ == 0 && y.b_ == 0) throw std::domain_error("division by zero");
            // a^2 == b^2 r with b != 0 would mean sqrt(r) rational, excluded by canonical form.
            throw std::logic_error("non-canonical quadratic divisor");
        }
        const QuadExt num = x * QuadExt(y.a_, -y.b_, r, no_normalize{});
        return QuadExt(num.a_ / norm, num.b_ / norm, r);
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    /// Exact sign of a + b*sqrt(r), decided by rational comparisons only.
    int sign() const {
        if (b_ == 0) return a_.sign();
        if (a_ == 0) return b_.sign();
        if (a_.sign() == b_.sign()) return a_.sign();
        // Opposite signs: compare a^2 against b^2 r; sqrt(r) irrational so equality is impossible.
        const int c = (a_ * a_ - b_ * b_ * r_).sign();
        return a_.sign() * c;
    }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) { return (x - y).is_zero(); }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    QuadExt squared() const { return *this * *this; }
    QuadExt pow3() const { return *this * *this * *this; }

    std::string str() const {
        if (b_ == 0) return to_string(a_);
        std::string s;
        if (a_ != 0) s += to_string(a_) + (b_ > 0 ? "+" : "");
        if (b_ == 1)
            s += "sqrt(" + to_string(r_) + ")";
        else if (b_ == -1)
            s += "-sqrt(" + to_string(r_) + ")";
        else
            s += to_string(b_) + "*sqrt(" + to_string(r_) + ")";
        return s;
    }

private:
    struct no_normalize {};
    QuadExt(Rational a, Rational b, Rational r, no_normalize) : a_(std::move(a)), b_(std::move(b)), r_(std::move(r)) {}

    void normalize() {
        if (r_ == 0) b_ = 0;
        if (b_ == 0) {
            r_ = 0;
            return;
        }
        if (auto s = exact_sqrt(r_)) {
            a_ += b_ * *s;
            b_ = 0;
            r_ = 0;
        }
    }

    // Two operands are compatible when at least one is rational or radicands agree.
    static const Rational& joint_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.b_ == 0) return y.r_;
        if (y.b_ == 0) return x.r_;
        if (x.r_ != y.r_)
            throw FieldMismatchError("mixing sqrt(" + to_string(x.r_) + ") with sqrt(" + to_string(y.r_) + ")");
        return x.r_;
    }

    Rational a_, b_, r_;
};

/// sqrt of a nonnegative rational inside Q(sqrt(r)): rational root, or d*sqrt(r).
inline std::optional<QuadExt> sqrt_in_field(const Rational& x, const Rational& r) {
    if (x < 0) return std::nullopt;
    if (auto s = exact_sqrt(x)) return QuadExt(*s);
    if (r > 0) {
        if (auto d = exact_sqrt(x / r)) return QuadExt(Rational(0), *d, r);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rational interval enclosures (directed bounds, no floating point).
// ---------------------------------------------------------------------------

struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("inverted interval");
    }
    static RatInterval point(const Rational& v) { return RatInterval(v, v); }

    Rational width() const { return hi - lo; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    /// Sign if decidable from the enclosure: -1, 0 (only for the exact point 0), +1; nullopt otherwise.
    std::optional<int> certain_sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (lo == 0 && hi == 0) return 0;
        return std::nullopt;
    }

    friend RatInterval operator+(const RatInterval& x, const RatInterval& y) {
        return RatInterval(x.lo + y.lo, x.hi + y.hi);
    }
    friend RatInterval operator-(const RatInterval& x, const RatInterval& y) {
        return RatInterval(x.lo - y.hi, x.hi - y.lo);
    }
    friend RatInterval operator*(const RatInterval& x, const RatInterval& y) {
        const Rational c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
        Rational lo = c[0], hi = c[0];
        for (int i = 1; i < 4; ++i) {
            if (c[i] < lo) lo = c[i];
            if (c[i] > hi) hi = c[i];
        }
        return RatInterval(lo, hi);
    }
    friend RatInterval operator/(const RatInterval& x, const RatInterval& y) {
        if (y.contains_zero()) throw std::domain_error("interval division through zero");
        const Rational c[4] = {x.lo / y.lo, x.lo / y.hi, x.hi / y.lo, x.hi / y.hi};
        Rational lo = c[0], hi = c[0];
        for (int i = 1; i < 4; ++i) {
            if (c[i] < lo) lo = c[i];
            if (c[i] > hi) hi = c[i];
        }
        return RatInterval(lo, hi);
    }
};

namespace detail {
// Round up/down onto a 2^-bits grid to keep Newton iterates small.
inline Rational round_up(const Rational& x, unsigned bits) {
    Int scale = Int(1) << bits;
    Int n = numerator(x) * scale, d = denominator(x);
    Int q = floor_div(n, d);
    if (q * d != n) ++q;
    return Rational(q, scale);
}
}  // namespace detail

/// Encloses sqrt(v) for rational v >= 0 within the requested width. Exact point
/// interval when v is a perfect square.
inline RatInterval sqrt_enclosure(const Rational& v, const Rational& max_width) {
    if (v < 0) throw std::domain_error("sqrt_enclosure of negative value");
    if (v == 0) return RatInterval::point(Rational(0));
    if (auto s = exact_sqrt(v)) return RatInterval::point(*s);
    if (max_width <= 0) throw std::invalid_argument("nonpositive enclosure width");

    // Grid fine enough that rounding noise stays far below the target width.
    unsigned bits = 64;
    {
        Rational w = max_width;
        while (w < 1 && bits < 8192) {
            w *= 65536;
            bits += 16;
        }
    }
    // Newton from above: x >= sqrt(v) is preserved by x -> (x + v/x)/2 and by rounding up.
    Rational x = v >= 1 ? Rational((v + 1) / 2) : Rational(1);
    for (int iter = 0; iter < 20000; ++iter) {
        const Rational lo = v / x;
        if (x - lo <= max_width) return RatInterval(lo, x);
        x = detail::round_up((x + lo) / 2, bits);
    }
    throw std::logic_error("sqrt_enclosure failed to converge");
}

/// Enclosure of a general quadratic-field value.
inline RatInterval enclose(const QuadExt& x, const Rational& max_width) {
    if (x.is_rational()) return RatInterval::point(x.a());
    const RatInterval root = sqrt_enclosure(x.r(), max_width / (2 * abs(x.b())));
    return RatInterval::point(x.a()) + RatInterval::point(x.b()) * root;
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline double to_double(const QuadExt& x) {
    if (x.is_rational()) return to_double(x.a());
    const RatInterval e = enclose(x, Rational(1, 1000000000000LL));
    return to_double((e.lo + e.hi) / 2);
}

}  // namespace tiltstab
