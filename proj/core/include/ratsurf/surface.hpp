#pragma once

// Picard-lattice layer: the base surface (P^2, a Hirzebruch surface F_e, or a
// two-step blowup of F_e), divisor classes, numerical sheaf classes, and the
// Riemann-Roch style invariants and Euler pairings built from them.
//
// Conventions for blowups of F_e:
//   * A is the fiber class, B the (-e)-section, C = eA + B.
//   * The lattice is generated by A, B, E_1..E_t with A^2 = 0, A.B = 1,
//     B^2 = -e, E_i.E_j = -delta_ij, A.E_i = B.E_i = 0.
//   * Points p_1..p_s (set S0) are blown up on F_e first; points
//     p_{s+1}..p_t (set S1) sit on the exceptional divisors of the first
//     step, p_j > p_i recording which one.  E_i always denotes the total
//     transform, so the classes above stay orthonormal.
//   * K = -(e+2)A - 2B + sum E_i.
// On P^2 the lattice is Z.H with H^2 = 1 and K = -3H; divisor classes store
// the H-coefficient in `a`.

#include "ratsurf/errors.hpp"
#include "ratsurf/numeric.hpp"

#include <string>
#include <vector>

namespace ratsurf {

enum class SurfaceKind { P2, Blowup };

class SurfaceConfig {
public:
    static SurfaceConfig p2();
    static SurfaceConfig hirzebruch(int e);  // blowup kind with t = 0
    // s1_parents[k] is the 1-based S0 index under p_{s0+1+k}; flags record
    // the geometric assumptions the point configuration is promised to
    // satisfy (they cannot be derived from the combinatorial data).
    static SurfaceConfig blowup(int e, int s0, std::vector<int> s1_parents,
                                bool avoids_b = true, bool avoids_fiber_directions = true);

    SurfaceKind kind() const { return kind_; }
    bool is_p2() const { return kind_ == SurfaceKind::P2; }

    int e() const;
    int t() const { return s0_ + static_cast<int>(s1_parents_.size()); }
    int s0_count() const { return s0_; }
    int s1_count() const { return static_cast<int>(s1_parents_.size()); }
    bool avoids_b() const { return avoids_b_; }
    bool avoids_fiber_directions() const { return avoids_fiber_; }

    // Points carry 1-based indices 1..t; S0 = {1..s}, S1 = {s+1..t}.
    bool in_s0(int idx) const { return idx >= 1 && idx <= s0_; }
    bool in_s1(int idx) const { return idx > s0_ && idx <= t(); }
    int parent_of(int j) const;               // j in S1 -> its S0 index
    std::vector<int> children_of(int i) const;  // i in S0 -> S1 indices

    // F_e itself is admissible; a genuine blowup is admissible only when
    // e > 0 and the configuration avoids B and avoids fiber directions.
    bool admissible() const;

    bool operator==(const SurfaceConfig&) const = default;

private:
    SurfaceConfig() = default;
    SurfaceKind kind_ = SurfaceKind::P2;
    int e_ = 0;
    int s0_ = 0;
    std::vector<int> s1_parents_;
    bool avoids_b_ = true;
    bool avoids_fiber_ = true;
};

// A divisor class with rational coefficients.  Blowup kind: a*A + b*B +
// sum g_i*E_i (so -E_i is stored as g_i = -1).  P^2: a*H with b unused and
// g empty.
struct DivClass {
    Rat a;
    Rat b;
    std::vector<Rat> g;

    DivClass() = default;
    DivClass(Rat a_, Rat b_, std::vector<Rat> g_ = {}) : a(std::move(a_)), b(std::move(b_)), g(std::move(g_)) {}

    static DivClass zero(const SurfaceConfig& s);
    static DivClass fiber_A(const SurfaceConfig& s);     // A
    static DivClass section_B(const SurfaceConfig& s);   // B
    static DivClass section_C(const SurfaceConfig& s);   // C = eA + B
    static DivClass exceptional(const SurfaceConfig& s, int idx);  // E_idx
    static DivClass hyperplane(const Rat& d);            // d*H on P^2

    bool integral() const;
    bool is_zero() const;

    // C-basis view a*A + b*B = alpha*A + delta*C; round-trips exactly.
    Rat alpha(const SurfaceConfig& s) const;  // a - e*b
    Rat delta() const { return b; }

    // gamma_i = -g_i, the conventional sign for first Chern classes written
    // as ... - sum gamma_i E_i.
    Rat gamma(int idx) const { return -g.at(static_cast<size_t>(idx - 1)); }

    DivClass operator+(const DivClass& o) const;
    DivClass operator-(const DivClass& o) const;
    DivClass operator-() const;
    friend DivClass operator*(const Rat& c, const DivClass& d);
    bool operator==(const DivClass&) const = default;

    std::string str() const;  // human-readable, e.g. "2A+3B-E1"
};

// Numerical class (rank, first Chern class, Euler characteristic).  The
// triple determines the full Chern character on these surfaces.
struct NumClass {
    Int r;
    DivClass c1;
    Int chi;

    bool operator==(const NumClass&) const = default;

    static NumClass structure_sheaf(const SurfaceConfig& s) { return NumClass{1, DivClass::zero(s), 1}; }
    static NumClass line_bundle(const SurfaceConfig& s, const DivClass& d);
    NumClass operator+(const NumClass& o) const;
};

// Ample class H = uA + vC - sum d_i E_i with u, v, d_i > 0.
struct Polarization {
    Rat u;
    Rat v;
    std::vector<Rat> d;

    DivClass divisor(const SurfaceConfig& s) const;
    void validate(const SurfaceConfig& s) const;  // throws Precondition
    Rat lambda(const SurfaceConfig& s) const;     // u/v + e/2
};

void check_divisor(const SurfaceConfig& s, const DivClass& d);  // throws DimensionMismatch

Rat intersect(const SurfaceConfig& s, const DivClass& d1, const DivClass& d2);
DivClass canonical_class(const SurfaceConfig& s);

// chi(O(D)) for integral D, by Riemann-Roch with chi(O) = 1.
Int chi_of_divisor(const SurfaceConfig& s, const DivClass& d);

// P(nu) = 1 + nu.(nu - K)/2, the Hilbert-polynomial-at-0 of a slope.
Rat hilbert_P(const SurfaceConfig& s, const DivClass& nu);

struct Invariants {
    DivClass nu;  // total slope c1/r (rational class)
    Rat P_nu;
    Rat Delta;  // P(nu) - chi/r; 0 exactly for line bundles
    Rat ch2;
    Rat c2;  // integral for integral classes
};

Invariants invariants(const SurfaceConfig& s, const NumClass& f);  // throws RankZero

// f(L): rank unchanged, c1 += r*D, chi recomputed.  Rank 0 uses additivity
// of the Chern character: c1 unchanged, chi += D.c1.
NumClass twist(const SurfaceConfig& s, const NumClass& f, const DivClass& d);

struct PairingResult {
    Rat chi_hom;     // chi(F1, F2) = sum (-1)^i ext^i
    Rat chi_tensor;  // chi of the K-theory product F1.F2
};

// Both pairings via the slope/discriminant form; requires positive ranks.
PairingResult pairings(const SurfaceConfig& s, const NumClass& f1, const NumClass& f2);

// Euler pairing chi(u, w) at Chern-character level; valid for any ranks
// (used for structure-sheaf classes of exceptional curves and the like).
Rat euler_pairing(const SurfaceConfig& s, const NumClass& u, const NumClass& w);

// ch_2 of a class, recovered from (r, c1, chi) by Riemann-Roch.
Rat ch2_of(const SurfaceConfig& s, const NumClass& f);

// All admissible blowup shapes with t <= t_max points over F_e, one per
// isomorphism type of the parent structure (plus F_e itself at t = 0).
std::vector<SurfaceConfig> admissible_shapes(int e, int t_max);

}  // namespace ratsurf
