#pragma once

// Exponent tuple of a two-term resolution by the exceptional line bundles.
//
// Blowup shape (n = t + 4, d = 1 + |S1|):
//   0 -> O(-C-A)^a1 (+) O(-C-A+E_j)^gj
//     -> O(-C)^a2 (+) O(-A)^a3 (+) O(-E_i)^gi (+) O^a4 -> F -> 0.
// P^2 shape (n = 3, d = 1):
//   0 -> O(-2)^a1 -> O(-1)^a2 (+) O^a3 -> F -> 0
// stored with a3 in `alpha3` slot positions alpha1, alpha2, alpha3 and the
// rest unused.

#include "ratsurf/numeric.hpp"
#include "ratsurf/surface.hpp"

#include <vector>

namespace ratsurf {

struct GaetaExponents {
    bool p2 = false;
    Int alpha1, alpha2, alpha3, alpha4;
    std::vector<Int> gamma_s0;  // per i in S0
    std::vector<Int> gamma_s1;  // per j in S1

    static GaetaExponents for_p2(Int a1, Int a2, Int a3) {
        GaetaExponents e;
        e.p2 = true;
        e.alpha1 = std::move(a1);
        e.alpha2 = std::move(a2);
        e.alpha3 = std::move(a3);
        e.alpha4 = 0;
        return e;
    }
    static GaetaExponents for_blowup(Int a1, Int a2, Int a3, Int a4, std::vector<Int> gi,
                                     std::vector<Int> gj) {
        GaetaExponents e;
        e.alpha1 = std::move(a1);
        e.alpha2 = std::move(a2);
        e.alpha3 = std::move(a3);
        e.alpha4 = std::move(a4);
        e.gamma_s0 = std::move(gi);
        e.gamma_s1 = std::move(gj);
        return e;
    }

    bool matches(const SurfaceConfig& s) const {
        if (s.is_p2()) return p2;
        return !p2 && static_cast<int>(gamma_s0.size()) == s.s0_count() &&
               static_cast<int>(gamma_s1.size()) == s.s1_count();
    }

    Int left_sum() const {
        Int v = alpha1;
        for (const auto& g : gamma_s1) v += g;
        return v;
    }
    Int right_sum() const {
        if (p2) return alpha2 + alpha3;
        Int v = alpha2 + alpha3 + alpha4;
        for (const auto& g : gamma_s0) v += g;
        return v;
    }
    Int rank() const { return right_sum() - left_sum(); }

    bool all_nonneg() const {
        if (alpha1 < 0 || alpha2 < 0 || alpha3 < 0) return false;
        if (!p2 && alpha4 < 0) return false;
        for (const auto& g : gamma_s0)
            if (g < 0) return false;
        for (const auto& g : gamma_s1)
            if (g < 0) return false;
        return true;
    }
    bool all_positive() const {
        if (alpha1 < 1 || alpha2 < 1 || alpha3 < 1) return false;
        if (!p2 && alpha4 < 1) return false;
        for (const auto& g : gamma_s0)
            if (g < 1) return false;
        for (const auto& g : gamma_s1)
            if (g < 1) return false;
        return true;
    }

    // Exponents listed in sequence order (left block first).
    std::vector<Int> by_sequence_index() const {
        std::vector<Int> out;
        out.push_back(alpha1);
        if (p2) {
            out.push_back(alpha2);
            out.push_back(alpha3);
            return out;
        }
        for (const auto& g : gamma_s1) out.push_back(g);
        out.push_back(alpha2);
        out.push_back(alpha3);
        for (const auto& g : gamma_s0) out.push_back(g);
        out.push_back(alpha4);
        return out;
    }

    bool operator==(const GaetaExponents&) const = default;
};

}  // namespace ratsurf
