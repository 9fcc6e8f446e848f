#pragma once

// Resolution exponents of a numerical class, existence of the two-term
// resolution, reconstruction, the twist search over pullback line bundles,
// and the numeric condition suites attached to general cokernels.

#include "ratsurf/cohomology.hpp"
#include "ratsurf/exponents.hpp"
#include "ratsurf/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ratsurf {

struct ExponentsResult {
    bool admits = false;
    GaetaExponents exps;        // always filled (entries may be negative)
    std::string first_failing;  // name of the first negative exponent, in
                                // the fixed order gammas, alpha4/a3, alpha1/a1, alpha2/a2, alpha3
};

// Blowup: gamma's read off c1, alpha4 = chi, alpha1..3 = -chi of the three
// standard twists.  P^2: the semi-orthogonal recursion through the Euler
// pairing.  Works for rank 0 classes as well (twists at ch level).
ExponentsResult exponents(const SurfaceConfig& s, const NumClass& f);

// Closed forms in (alpha, delta, gamma, r, chi); blowups only.  Must agree
// with exponents() everywhere.
GaetaExponents exponents_closed_form(const SurfaceConfig& s, const NumClass& f);

// Numerical class of the cokernel with the given exponents.
NumClass class_of(const SurfaceConfig& s, const GaetaExponents& exps);

struct TwistSearchResult {
    bool feasible = false;
    DivClass L;  // pullback class (no exceptional part)
    GaetaExponents exps;
    Int chi_after;  // chi(f(L))
};

// Searches for a pullback line bundle L with chi(f(L)) >= r*M such that
// f(L) has non-negative exponents.  Candidates are the "minimal" lattice
// points relative to the hyperbola chi(f'(L_{x,y})) = 0 of the reduced
// F_e-class f' (x in [1, ceil(sqrt(2*Delta'/(e+2))) + ceil(M) + 2]); they
// are ranked by chi(f(L)) descending, ties by smallest x then smallest y,
// and the first one meeting both requirements is returned.  Requires
// gamma_i, gamma_j >= 0 and gamma_i >= sum of the children's gamma_j.
TwistSearchResult twist_search(const SurfaceConfig& s, const NumClass& f, const Rat& m);

// Discriminant threshold above which the search window provably contains a
// valid candidate: (e+2)/2 * R^2 with
//   R = M + (2e+6)*sqrt(2M/(e+2)) + (3e+12)/2,
// obtained by bounding the walk along the hyperbola with the worst-case
// offsets (eps_x < 1, eps_y <= 2, delta < 1, eps*x0 < M).
Rat twist_search_window_bound(int e, const Rat& m);

struct CokernelReport {
    bool torsion_free_ok = false;       // gamma_i >= sum_{j>i} gamma_j
    bool locally_free_ok = false;       // gamma_i >= 1 + sum_{j>i} gamma_j
    bool globally_generated_ok = false; // alpha4 >= r+2 and gamma_i >= r - alpha4 + sum
    bool no_sections_on_curves_ok = false;
    Int prioritary_codim_bound;         // sum gamma_i + alpha4 - r + 1
    bool wbn_shape = false;             // alpha4 = l*r and balanced exponent sum
    std::optional<Int> wbn_ell;
};

CokernelReport cokernel_condition_report(const SurfaceConfig& s, const GaetaExponents& exps);

struct DegeneracyCodim {
    bool whole_space = false;
    Int codim;  // meaningful when !whole_space
};

// Codimension of the rank-dropping locus for a general map between bundles
// of ranks a <= b, with an optional split (a2, b2) whose sections vanish in
// one direction: a2 = b2 = 0 gives b-a+1; b2 < a2 degenerates to the whole
// space; otherwise min(b2-a2, b-a)+1.
DegeneracyCodim degeneracy_codim(const Int& a, const Int& b, const Int& a2, const Int& b2);

}  // namespace ratsurf
