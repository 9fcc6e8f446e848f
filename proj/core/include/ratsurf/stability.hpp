#pragma once

// Numeric hypothesis suites for moduli statements: polarization positivity,
// exponent conditions, the discriminant threshold, and the codimension
// quantity attached to a Harder-Narasimhan type.

#include "ratsurf/exponents.hpp"
#include "ratsurf/surface.hpp"

#include <optional>
#include <vector>

namespace ratsurf {

struct PolarizationReport {
    Rat lambda;  // u/v + e/2
    // H a positive combination of the basepoint-free family D, i.e.
    // wA, wC, wi, wj all > 0 (per point, not just in aggregate).
    bool positive_combination = false;
    bool ratio_bound = false;  // d_i/v <= lambda/(lambda+1) for all i
    bool sqrt_bound = false;   // (d_i/v)^2 <= 2*lambda/t for all i (squared form, exact)
    bool h_k_plus_a_negative = false;    // H.(K+A) < 0
    bool h_k_plus_2a_negative = false;   // H.(K+2A) < 0
    bool all() const {
        return positive_combination && ratio_bound && sqrt_bound && h_k_plus_a_negative &&
               h_k_plus_2a_negative;
    }
};

PolarizationReport polarization_report(const SurfaceConfig& s, const Polarization& h);

struct ExponentConditionReport {
    bool rank_ge_2 = false;
    bool gamma_chain = false;  // gamma_i >= sum_{j>i} gamma_j + 1 for all i in S0
    bool alpha4_sum = false;   // sum gamma_i + alpha4 >= r + 1
    bool all_positive = false;
    bool all() const { return rank_ge_2 && gamma_chain && alpha4_sum && all_positive; }
};

ExponentConditionReport exponent_conditions(const SurfaceConfig& s, const GaetaExponents& exps);

// (lambda+1)^2/(4 lambda) + t/8 + 1/r.
Rat discriminant_threshold(const SurfaceConfig& s, const Polarization& h, const Int& r);

// Gradings of a filtration: rank, total slope (a rational class), and
// discriminant per graded piece, ordered top-down.
struct HNData {
    struct Grading {
        Int r;
        DivClass nu;
        Rat Delta;
    };
    std::vector<Grading> gradings;
};

struct Ext1Report {
    Rat ext1_plus;  // sum_{i<j} r_i r_j (Delta_i + Delta_j - P(nu_j - nu_i))
    bool deltas_nonneg = false;
    bool slope_gaps_ok = false;  // (nu_i - nu_j).D <= 2 for i < j, D in the bpf family and C+A
    std::optional<bool> slope_ordered;  // nu_1.H >= ... >= nu_l.H, when H given
};

Ext1Report ext1_plus(const SurfaceConfig& s, const HNData& hn,
                     const std::optional<Polarization>& h = std::nullopt);

struct HypothesisReport {
    ExponentConditionReport exponents;
    PolarizationReport polarization;
    Rat discriminant;
    Rat threshold;
    bool discriminant_ok = false;
    bool admits = false;
    bool all() const { return admits && exponents.all() && polarization.all() && discriminant_ok; }
};

// Convenience aggregation of the three hypothesis groups for a class f and
// polarization H.  Checks hypotheses only; asserts nothing geometric.
HypothesisReport hypothesis_report(const SurfaceConfig& s, const NumClass& f, const Polarization& h);

}  // namespace ratsurf
