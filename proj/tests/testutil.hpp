#pragma once

// Shared fixtures and independent oracles for the test suites.  The oracles
// here deliberately re-derive quantities along a different route than the
// library (monomial counting for h^0, a direct Chern-character expansion
// for the Euler pairing) so the two sides stay independent.

#include "ratsurf/sampling.hpp"
#include "ratsurf/surface.hpp"

#include <vector>

namespace rtest {

using namespace ratsurf;

inline std::vector<SurfaceConfig> standard_surfaces() {
    return {
        SurfaceConfig::p2(),
        SurfaceConfig::hirzebruch(0),
        SurfaceConfig::hirzebruch(1),
        SurfaceConfig::hirzebruch(2),
        SurfaceConfig::hirzebruch(3),
        SurfaceConfig::blowup(1, 1, {}),
        SurfaceConfig::blowup(1, 1, {1}),
        SurfaceConfig::blowup(2, 2, {1, 1, 2}),
        SurfaceConfig::blowup(3, 2, {2}),
    };
}

inline std::vector<SurfaceConfig> blowup_surfaces() {
    std::vector<SurfaceConfig> out;
    for (const auto& s : standard_surfaces())
        if (!s.is_p2()) out.push_back(s);
    return out;
}

// h^0(O(aA+bB)) on F_e by counting monomials: sections decompose along the
// ruling as sum_{k=0}^{b} h^0(P^1, O(a - ek)).
inline Int monomial_h0(int e, long a, long b) {
    if (b < 0) return 0;
    Int total = 0;
    for (long k = 0; k <= b; ++k) {
        Int term = Int(a) - Int(e) * k + 1;
        if (term > 0) total += term;
    }
    return total;
}

// chi(u, w) assembled directly from the Chern-character product
// ch(u)^dual . ch(w) . (1 - K/2 + [pt]), with ch2 recovered from chi.
inline Rat euler_pairing_oracle(const SurfaceConfig& s, const NumClass& u, const NumClass& w) {
    DivClass k = canonical_class(s);
    auto ch2 = [&](const NumClass& f) {
        return Rat(f.chi) + intersect(s, f.c1, k) / 2 - Rat(f.r);
    };
    Rat deg2 = Rat(u.r) * ch2(w) + Rat(w.r) * ch2(u) - intersect(s, u.c1, w.c1);
    Rat deg1_td = -intersect(s, k, Rat(u.r) * w.c1 - Rat(w.r) * u.c1) / 2;
    Rat deg0_td = Rat(u.r) * Rat(w.r);
    return deg2 + deg1_td + deg0_td;
}

inline NumClass random_positive_rank_class(Sampler& rng, const SurfaceConfig& s, long rmax, long cmax) {
    return NumClass{rng.uniform_int(1, rmax), rng.divisor(s, -cmax, cmax), rng.uniform_int(-30, 30)};
}

}  // namespace rtest
