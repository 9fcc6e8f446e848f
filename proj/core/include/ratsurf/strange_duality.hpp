#pragma once

// Numerics around the orthogonal class pairs sigma = (r, L, r*l) and
// rho = (1, 0, 1-l): positivity suites, the determinant class on the
// Hilbert scheme of points, the dimension identity for the space of
// commuting squares, the stratum codimension gap, and the l = 1 counting
// identity.

#include "ratsurf/exponents.hpp"
#include "ratsurf/stability.hpp"
#include "ratsurf/surface.hpp"

#include <vector>

namespace ratsurf {

struct SDPair {
    Int r;    // >= 2
    Int ell;  // >= 1
    DivClass L;
    NumClass sigma;  // (r, L, r*l)
    NumClass rho;    // (1, 0, 1-l)
    NumClass v;      // sigma + rho
};

// Builds the pair and asserts the K-theoretic orthogonality
// chi_tensor(sigma, rho) = 0.
SDPair make_pair(const SurfaceConfig& s, const Int& r, const Int& ell, const DivClass& L);

// Exponents of v from those of sigma: alpha1..3 grow by l, alpha4 drops by
// l-1, gammas unchanged.  Cross-checked against exponents(v); blowups only.
GaetaExponents v_exponents(const SurfaceConfig& s, const GaetaExponents& sigma_exps, const Int& ell);

// max over 1 <= m <= l of m(l + r + 1 - m).
Int big_M(const Int& r, const Int& ell);

struct PositivityReport {
    bool a1_admits = false;          // sigma has non-negative exponents
    bool a2_gammas = false;          // gamma_j >= M; gamma_i >= M + sum children
    bool a2_alphadelta = false;      // alpha, delta >= M + sum gamma_i + r(l-1)
    bool a4_discriminant = false;    // P(L/r) >= (lambda+1)^2/(4 lambda) + t/8 + 1/r + l
    bool a6_theta_vanishing = false; // the determinant-class vanishing inequalities
    bool dim_count_hyp = false;      // alpha2, alpha3 >= M; gamma_j >= M+l; gamma_i >= M+l+sum
    bool all() const {
        return a1_admits && a2_gammas && a2_alphadelta && a4_discriminant && a6_theta_vanishing &&
               dim_count_hyp;
    }
};

// Evaluates the positivity suites for a pair; the polarization supplies the
// lambda in the discriminant bound.  Blowups only.
PositivityReport positivity_report(const SurfaceConfig& s, const SDPair& pair,
                                   const GaetaExponents& sigma_exps, const Polarization& h);

// Class in Pic(S) + Z*(E/2) on the Hilbert scheme of points: a base class
// from S and a rational multiple of the exceptional divisor E.
struct HilbDivClass {
    DivClass base;
    Rat e_coeff;  // coefficient of E (half-integral in practice)
};

struct ThetaReport {
    HilbDivClass theta;   // L_l - (r/2) E
    HilbDivClass K_hilb;  // (K_S)_l
    // Sufficient Kodaira-type certificate: L - K_S splits into one piece
    // with all decomposition weights >= l and r-1 pieces with weights
    // >= l-1 (feasible iff every weight is >= l + (r-1)(l-1)).
    bool vanishing_sufficient = false;
};

ThetaReport theta_on_hilb(const SurfaceConfig& s, const SDPair& pair);

struct XiDimension {
    Int hom_lambda_omega;
    Int dim_P;          // hom(Lambda, Omega) - 1
    Int formula_value;  // the four-term dimension count; must equal dim_P
    Int rk_lambda, rk_omega;
};

// Dimension of the space of commuting squares over the resolution space of
// v, computed two ways: directly as hom(Lambda, Omega) - 1 and through the
// parameter count hom(L,O) - hom(L,O_Z) + (alpha4-1) + (2l + hom(O,O_Z) - 1).
// Asserts the two agree and that rk(Lambda) - rk(Omega) = r + 1 and
// alpha4 = (r-1)l + 1.  Needs exact cohomology for every summand pair.
XiDimension xi_dimension(const SurfaceConfig& s, const SDPair& pair, const GaetaExponents& v_exps);

struct StratumGap {
    Int ext1_bound;     // lambda(a2+a3+a4) + sum lambda_i gamma_i
    Int stratum_codim;  // codimension of the stratum in Hom(Omega, O_Z)
    Int gap;            // ext1_bound - stratum_codim
};

// The three quantities attached to a stratum (lambda, lambda_j, lambda_i)
// of section-space defects; preconditions are the stratum's emptiness
// bounds 0 <= lambda <= l, 0 <= lambda_i <= lambda, 0 <= lambda_j <= l.
StratumGap stratum_gap(const SurfaceConfig& s, const GaetaExponents& v_exps, const Int& ell,
                       const Int& lambda, const std::vector<Int>& lambda_j,
                       const std::vector<Int>& lambda_i);

struct NumbersMatchL1 {
    Int c2_v;
    Int chi_L;
    bool equal = false;
};

// l = 1 specialization of the top-Chern-class / Euler-characteristic
// identity: c_2(v) = chi(O(L)).
NumbersMatchL1 numbers_match_l1(const SurfaceConfig& s, const SDPair& pair);

}  // namespace ratsurf
