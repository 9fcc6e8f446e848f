#include "ratsurf/stability.hpp"

#include "ratsurf/cohomology.hpp"
#include "ratsurf/gaeta.hpp"

namespace ratsurf {

namespace {

// The bpf family D as divisor classes (blowup surfaces).
std::vector<DivClass> bpf_family(const SurfaceConfig& s) {
    std::vector<DivClass> out;
    const DivClass A = DivClass::fiber_A(s), C = DivClass::section_C(s);
    out.push_back(A);
    out.push_back(C);
    for (int i = 1; i <= s.s0_count(); ++i) out.push_back(C - DivClass::exceptional(s, i));
    for (int j = s.s0_count() + 1; j <= s.t(); ++j)
        out.push_back(C + A - DivClass::exceptional(s, s.parent_of(j)) - DivClass::exceptional(s, j));
    return out;
}

}  // namespace

PolarizationReport polarization_report(const SurfaceConfig& s, const Polarization& h) {
    h.validate(s);
    PolarizationReport rep;
    rep.lambda = h.lambda(s);

    // Per-divisor weights of H over D: wj = d_j, wi = d_i - sum children,
    // wC = v - sum_{S0} d_i, wA = u - sum_{S1} d_j.
    Rat sum_di = 0, sum_dj = 0;
    bool weights_positive = true;
    for (int i = 1; i <= s.s0_count(); ++i) {
        Rat w = h.d[static_cast<size_t>(i - 1)];
        for (int j : s.children_of(i)) w -= h.d[static_cast<size_t>(j - 1)];
        if (w <= 0) weights_positive = false;
        sum_di += h.d[static_cast<size_t>(i - 1)];
    }
    for (int j = s.s0_count() + 1; j <= s.t(); ++j) sum_dj += h.d[static_cast<size_t>(j - 1)];
    if (h.u - sum_dj <= 0 || h.v - sum_di <= 0) weights_positive = false;
    rep.positive_combination = weights_positive;  // d_j > 0 already validated

    rep.ratio_bound = true;
    rep.sqrt_bound = true;
    int t = s.t();
    for (const auto& di : h.d) {
        Rat q = di / h.v;
        if (q > rep.lambda / (rep.lambda + 1)) rep.ratio_bound = false;
        if (t > 0 && q * q > 2 * rep.lambda / Rat(t)) rep.sqrt_bound = false;
    }

    DivClass hd = h.divisor(s);
    DivClass k = canonical_class(s);
    DivClass a = DivClass::fiber_A(s);
    rep.h_k_plus_a_negative = intersect(s, hd, k + a) < 0;
    rep.h_k_plus_2a_negative = intersect(s, hd, k + a + a) < 0;
    return rep;
}

ExponentConditionReport exponent_conditions(const SurfaceConfig& s, const GaetaExponents& exps) {
    if (!exps.matches(s)) throw DimensionMismatch("exponent tuple does not match the surface");
    ExponentConditionReport rep;
    rep.rank_ge_2 = exps.rank() >= 2;
    rep.gamma_chain = true;
    Int sum_gi = 0;
    if (!s.is_p2()) {
        for (int i = 1; i <= s.s0_count(); ++i) {
            Int g = exps.gamma_s0[static_cast<size_t>(i - 1)];
            sum_gi += g;
            Int child_sum = 0;
            for (int j : s.children_of(i)) child_sum += exps.gamma_s1[static_cast<size_t>(j - s.s0_count() - 1)];
            if (g < child_sum + 1) rep.gamma_chain = false;
        }
    }
    Int a_last = s.is_p2() ? exps.alpha3 : exps.alpha4;
    rep.alpha4_sum = sum_gi + a_last >= exps.rank() + 1;
    rep.all_positive = exps.all_positive();
    return rep;
}

Rat discriminant_threshold(const SurfaceConfig& s, const Polarization& h, const Int& r) {
    if (r < 1) throw Precondition("discriminant_threshold needs r >= 1");
    Rat lambda = h.lambda(s);
    if (lambda <= 0) throw Precondition("lambda must be positive");
    return (lambda + 1) * (lambda + 1) / (4 * lambda) + Rat(s.t(), 8) + Rat(Int(1), r);
}

Ext1Report ext1_plus(const SurfaceConfig& s, const HNData& hn,
                     const std::optional<Polarization>& h) {
    if (hn.gradings.empty()) throw Precondition("ext1_plus needs at least one grading");
    for (const auto& g : hn.gradings)
        if (g.r < 1) throw Precondition("every grading needs rank >= 1");

    Ext1Report rep;
    rep.ext1_plus = 0;
    size_t l = hn.gradings.size();
    for (size_t i = 0; i < l; ++i)
        for (size_t j = i + 1; j < l; ++j) {
            const auto& gi = hn.gradings[i];
            const auto& gj = hn.gradings[j];
            rep.ext1_plus += Rat(gi.r) * Rat(gj.r) *
                             (gi.Delta + gj.Delta - hilbert_P(s, gj.nu - gi.nu));
        }

    rep.deltas_nonneg = true;
    for (const auto& g : hn.gradings)
        if (g.Delta < 0) rep.deltas_nonneg = false;

    rep.slope_gaps_ok = true;
    if (!s.is_p2()) {
        std::vector<DivClass> ds = bpf_family(s);
        ds.push_back(DivClass::section_C(s) + DivClass::fiber_A(s));
        for (size_t i = 0; i < l && rep.slope_gaps_ok; ++i)
            for (size_t j = i + 1; j < l && rep.slope_gaps_ok; ++j)
                for (const auto& d : ds)
                    if (intersect(s, hn.gradings[i].nu - hn.gradings[j].nu, d) > 2) {
                        rep.slope_gaps_ok = false;
                        break;
                    }
    } else {
        for (size_t i = 0; i < l && rep.slope_gaps_ok; ++i)
            for (size_t j = i + 1; j < l; ++j)
                if (intersect(s, hn.gradings[i].nu - hn.gradings[j].nu, DivClass::hyperplane(1)) > 2) {
                    rep.slope_gaps_ok = false;
                    break;
                }
    }

    if (h) {
        DivClass hd = h->divisor(s);
        bool ordered = true;
        for (size_t i = 0; i + 1 < l; ++i)
            if (intersect(s, hn.gradings[i].nu, hd) < intersect(s, hn.gradings[i + 1].nu, hd))
                ordered = false;
        rep.slope_ordered = ordered;
    }
    return rep;
}

HypothesisReport hypothesis_report(const SurfaceConfig& s, const NumClass& f, const Polarization& h) {
    HypothesisReport rep;
    ExponentsResult er = exponents(s, f);
    rep.admits = er.admits;
    rep.exponents = exponent_conditions(s, er.exps);
    rep.polarization = polarization_report(s, h);
    rep.discriminant = invariants(s, f).Delta;
    rep.threshold = discriminant_threshold(s, h, f.r);
    rep.discriminant_ok = rep.discriminant >= rep.threshold;
    return rep;
}

}  // namespace ratsurf
