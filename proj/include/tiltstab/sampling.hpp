// Seeded deterministic sampling for the verification sweeps. Draws go through
// the raw mt19937_64 stream (never distribution adapters), so identical seeds
// give identical reports on every platform.
#pragma once

#include "tiltstab/ring.hpp"

#include <cstdint>
#include <random>

namespace tiltstab {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long long next_int(long long lo, long long hi) {
        return lo + static_cast<long long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational next_rational(long long max_abs_num, long long max_den, bool allow_negative) {
        const long long num = next_int(allow_negative ? -max_abs_num : 0, max_abs_num);
        const long long den = next_int(1, max_den);
        return rat(num, den);
    }

    DivisorClass next_divisor(const CohRing& ring, long long max_abs_num, long long max_den,
                              bool allow_negative) {
        DivisorClass d = ring.zero_divisor();
        for (auto& c : d) c = next_rational(max_abs_num, max_den, allow_negative);
        return d;
    }

    CurveClass next_curve(const CohRing& ring, long long max_abs_num, long long max_den,
                          bool allow_negative) {
        CurveClass z = ring.zero_curve();
        for (auto& c : z) c = next_rational(max_abs_num, max_den, allow_negative);
        return z;
    }

    /// Nonzero nonnegative integer combination of the nef-cone generators.
    DivisorClass next_nef(const Threefold& X, long long max_coeff) {
        while (true) {
            DivisorClass d = X.ring.zero_divisor();
            bool nonzero = false;
            for (std::size_t i = 0; i < X.nef_generators.size(); ++i) {
                const long long c = next_int(0, max_coeff);
                if (c != 0) {
                    nonzero = true;
                    d = d + rat(c) * X.nef_generators[i];
                }
            }
            if (nonzero) return d;
        }
    }

    /// Strictly positive integer combination of the generators: ample.
    DivisorClass next_ample(const Threefold& X, long long max_coeff) {
        DivisorClass d = X.ring.zero_divisor();
        for (std::size_t i = 0; i < X.nef_generators.size(); ++i)
            d = d + rat(next_int(1, max_coeff)) * X.nef_generators[i];
        return d;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace tiltstab
