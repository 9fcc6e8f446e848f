#pragma once

// Deterministic sampling used by the sweep commands and the test suites.
// The generator is a seeded mt19937_64 with hand-rolled range reduction so
// the streams are identical across standard libraries.

#include "ratsurf/surface.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ratsurf {

class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    // Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here and
    // keeps the stream implementation-independent).
    long uniform(long lo, long hi) {
        if (hi < lo) throw Precondition("uniform: empty range");
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(rng_() % span);
    }
    Int uniform_int(long lo, long hi) { return Int(uniform(lo, hi)); }
    bool coin() { return (rng_() & 1) != 0; }

    DivClass divisor(const SurfaceConfig& s, long lo, long hi) {
        DivClass d = DivClass::zero(s);
        d.a = uniform(lo, hi);
        if (!s.is_p2()) {
            d.b = uniform(lo, hi);
            for (auto& g : d.g) g = uniform(lo, hi);
        }
        return d;
    }

    // A class guaranteed to have a two-term resolution, built from random
    // non-negative exponents.
    NumClass admitting_class(const SurfaceConfig& s, long max_exp);

private:
    std::mt19937_64 rng_;
};

}  // namespace ratsurf
