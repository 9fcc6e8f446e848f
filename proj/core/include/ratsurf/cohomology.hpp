#pragma once

// Exact line-bundle cohomology.
//
// On F_e the dimensions follow the standard reduction: b = -1 rules the
// bundle out entirely, b >= 0 has vanishing h^2 and an h^0 recursion, and
// b <= -2 is handled through Serre duality.  On a two-step blowup, a class
// is reduced to a pullback class by stripping exceptional coefficients one
// at a time:
//   * coefficient +1 at E_k is dropped whenever the remaining bundle is
//     trivial on every component of E_k (degree bookkeeping on the total
//     transform and its children),
//   * coefficient -1 at E_k is dropped through 0 -> L(-E_k) -> L -> O_{E_k}
//     -> 0, which pins all three dimensions exactly when h^0(L) = 0 or when
//     E_k is certified to lie outside the base locus of |L|.
// Base-locus certificates come from two sources only: pullbacks of effective
// classes on an admissible configuration (their base loci live over B, away
// from every blown-up point), and classes that are non-negative combinations
// of the basepoint-free family
//     D = {A, C} u {C - E_i} u {C + A - E_i - E_j : p_j > p_i}.
// Serre duality on the blowup is tried before giving up.  Everything the
// engine cannot certify is reported as Unknown together with the Euler
// characteristic; it never guesses.

#include "ratsurf/surface.hpp"

#include <optional>
#include <vector>

namespace ratsurf {

struct CohomResult {
    bool exact = false;
    Int h0, h1, h2;  // meaningful only when exact
    Int chi;         // always the Riemann-Roch value

    static CohomResult make_exact(Int h0, Int h1, Int h2);
    static CohomResult unknown(Int chi) {
        CohomResult r;
        r.chi = std::move(chi);
        return r;
    }
    bool operator==(const CohomResult&) const = default;
};

// chi(O(aA+bB)) on F_e: (a+1)(b+1) - e*b(b+1)/2.
Int chi_line_fe(int e, const Int& a, const Int& b);

// chi(O(D)) on any configured surface (alias of chi_of_divisor).
Int chi_line(const SurfaceConfig& s, const DivClass& d);

// Full cohomology of O(aA+bB) on F_e; always exact.
CohomResult cohom_fe(int e, const Int& a, const Int& b);

// Full cohomology of O(D) on the configured surface.  Exact on P^2 and on
// pullback classes; on blowups exact whenever the reduction rules apply.
CohomResult cohom_X(const SurfaceConfig& s, const DivClass& d);

struct BaseLocusReport {
    std::vector<DivClass> fixed_parts;
    DivClass mobile;
    bool bpf = false;
    bool supported = false;
};

// Base-locus decomposition for the certified families (members of the bpf
// set D, fiber/section classes minus exceptional divisors, pullbacks of
// effective classes).  supported = false means the configuration-dependent
// answer is not determined by the combinatorial data; nothing is guessed.
BaseLocusReport base_locus(const SurfaceConfig& s, const DivClass& d);

struct AmpleDecomposition {
    // Blowup: weights over D listed as [wA, wC, wi (i in S0), wj (j in S1)];
    // P^2: the single weight [d].
    std::vector<Int> weights;
    Int wA() const { return weights.at(0); }
    Int wC() const { return weights.at(1); }
    bool very_ample = false;             // all weights >= 1 (sufficient only)
    std::optional<Int> m_very_ample_bound;  // min weight, when >= 1
};

// Solves the triangular system expressing an integral L over the family D
// (or over H on P^2).  Weights can be negative; positivity is what the
// very-ampleness certificate needs.
AmpleDecomposition ample_decompose(const SurfaceConfig& s, const DivClass& l);

// Recomposes a weight vector back into a divisor class (inverse of
// ample_decompose's triangular solve).
DivClass recompose_weights(const SurfaceConfig& s, const std::vector<Int>& weights);

}  // namespace ratsurf
