// Exact rational scalars and small parsing/printing helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tiltstab {

// Expression templates are disabled so intermediate results are plain values.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long long p, long long q = 1) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(Int(p), Int(q));
}

inline int sign(const Rational& x) { return x.sign(); }

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Parses "p", "-p", or "p/q" (whitespace-free). Throws ParseError on malformed input.
inline Rational parse_rational(std::string_view s) {
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    const auto is_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(s)) throw ParseError("bad rational literal: " + std::string(s));
            return Rational(Int(std::string(s)));
        }
        const auto ps = s.substr(0, slash);
        const auto qs = s.substr(slash + 1);
        if (!is_int(ps) || !is_int(qs)) throw ParseError("bad rational literal: " + std::string(s));
        Int p{std::string(ps)}, q{std::string(qs)};
        if (q == 0) throw ParseError("zero denominator in: " + std::string(s));
        return Rational(p, q);
    } catch (const std::exception& e) {
        throw ParseError(std::string("cannot parse rational '") + std::string(s) + "': " + e.what());
    }
}

/// Canonical "p" or "p/q" form; the representation keeps the denominator positive and coprime.
inline std::string to_string(const Rational& x) {
    const Int num = numerator(x), den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// floor(a/b) for exact integers, b > 0 not required.
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("floor_div by zero");
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Rational floor_rat(const Rational& x) { return Rational(floor_div(numerator(x), denominator(x))); }

/// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    const Int num = numerator(x), den = denominator(x);
    const Int sn = boost::multiprecision::sqrt(num);
    const Int sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace tiltstab
