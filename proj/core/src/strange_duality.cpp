#include "ratsurf/strange_duality.hpp"

#include "ratsurf/cohomology.hpp"
#include "ratsurf/exceptional.hpp"
#include "ratsurf/gaeta.hpp"

#include <algorithm>

namespace ratsurf {

SDPair make_pair(const SurfaceConfig& s, const Int& r, const Int& ell, const DivClass& L) {
    if (r < 2) throw Precondition("make_pair needs r >= 2");
    if (ell < 1) throw Precondition("make_pair needs ell >= 1");
    check_divisor(s, L);
    if (!L.integral()) throw Precondition("make_pair needs an integral L");
    SDPair p;
    p.r = r;
    p.ell = ell;
    p.L = L;
    p.sigma = NumClass{r, L, r * ell};
    p.rho = NumClass{1, DivClass::zero(s), 1 - ell};
    p.v = p.sigma + p.rho;
    if (pairings(s, p.sigma, p.rho).chi_tensor != 0)
        throw Error("internal: sigma and rho are not orthogonal");
    return p;
}

GaetaExponents v_exponents(const SurfaceConfig& s, const GaetaExponents& sigma_exps, const Int& ell) {
    if (s.is_p2()) throw P2Unsupported("the exponent shift is stated for the ruled-surface sequence");
    if (!sigma_exps.matches(s)) throw DimensionMismatch("exponent tuple does not match the surface");
    if (!sigma_exps.all_nonneg()) throw Precondition("v_exponents needs admitting sigma exponents");
    if (ell < 1) throw Precondition("v_exponents needs ell >= 1");
    // alpha4(sigma) = r*ell defines the rank of the pair
    if (sigma_exps.alpha4 < ell || sigma_exps.alpha4 % ell != 0)
        throw Precondition("v_exponents needs alpha4(sigma) = r*ell for some r >= 1");
    GaetaExponents v = sigma_exps;
    v.alpha1 += ell;
    v.alpha2 += ell;
    v.alpha3 += ell;
    v.alpha4 -= ell - 1;
    return v;
}

Int big_M(const Int& r, const Int& ell) {
    if (r < 1 || ell < 1) throw Precondition("big_M needs r, ell >= 1");
    Int best = 0;
    for (Int m = 1; m <= ell; ++m) {
        Int val = m * (ell + r + 1 - m);
        best = std::max(best, val);
    }
    return best;
}

PositivityReport positivity_report(const SurfaceConfig& s, const SDPair& pair,
                                   const GaetaExponents& sigma_exps, const Polarization& h) {
    if (s.is_p2()) throw P2Unsupported("the positivity suites are stated over the ruled-surface basis");
    if (!sigma_exps.matches(s)) throw DimensionMismatch("exponent tuple does not match the surface");
    PositivityReport rep;
    const Int M = big_M(pair.r, pair.ell);
    const Int r = pair.r, ell = pair.ell;
    Int alpha = to_int(pair.L.alpha(s)), delta = to_int(pair.L.delta());

    rep.a1_admits = exponents(s, pair.sigma).admits;

    rep.a2_gammas = true;
    Int sum_gi = 0;
    for (int i = 1; i <= s.s0_count(); ++i) {
        Int g = sigma_exps.gamma_s0[static_cast<size_t>(i - 1)];
        sum_gi += g;
        Int child_sum = 0;
        for (int j : s.children_of(i))
            child_sum += sigma_exps.gamma_s1[static_cast<size_t>(j - s.s0_count() - 1)];
        if (g < M + child_sum) rep.a2_gammas = false;
    }
    for (const auto& g : sigma_exps.gamma_s1)
        if (g < M) rep.a2_gammas = false;

    rep.a2_alphadelta = alpha >= M + sum_gi + r * (ell - 1) && delta >= M + sum_gi + r * (ell - 1);

    Rat lhs = hilbert_P(s, Rat(Int(1), r) * pair.L);
    rep.a4_discriminant = lhs >= discriminant_threshold(s, h, r) + Rat(ell);

    rep.a6_theta_vanishing = true;
    {
        Int base = r * (ell - 1);
        for (const auto& g : sigma_exps.gamma_s1)
            if (g < base) rep.a6_theta_vanishing = false;
        for (int i = 1; i <= s.s0_count(); ++i) {
            Int g = sigma_exps.gamma_s0[static_cast<size_t>(i - 1)];
            Int child = 0;
            for (int j : s.children_of(i))
                child += sigma_exps.gamma_s1[static_cast<size_t>(j - s.s0_count() - 1)] + 1;
            if (g < base + child) rep.a6_theta_vanishing = false;
        }
        if (delta < base - 1 + sum_gi + Int(s.s0_count())) rep.a6_theta_vanishing = false;
        if (alpha < base - 1 + Int(s.e()) + sum_gi + Int(s.s0_count())) rep.a6_theta_vanishing = false;
    }

    {
        GaetaExponents ve = v_exponents(s, sigma_exps, ell);
        rep.dim_count_hyp = ve.alpha2 >= M && ve.alpha3 >= M;
        for (const auto& g : ve.gamma_s1)
            if (g < M + ell) rep.dim_count_hyp = false;
        for (int i = 1; i <= s.s0_count(); ++i) {
            Int g = ve.gamma_s0[static_cast<size_t>(i - 1)];
            Int child_sum = 0;
            for (int j : s.children_of(i)) child_sum += ve.gamma_s1[static_cast<size_t>(j - s.s0_count() - 1)];
            if (g < M + ell + child_sum) rep.dim_count_hyp = false;
        }
    }
    return rep;
}

ThetaReport theta_on_hilb(const SurfaceConfig& s, const SDPair& pair) {
    ThetaReport rep;
    rep.theta = HilbDivClass{pair.L, Rat(-pair.r, 2)};
    rep.K_hilb = HilbDivClass{canonical_class(s), 0};
    AmpleDecomposition dec = ample_decompose(s, pair.L - canonical_class(s));
    // One factor needs every weight >= l, the other r-1 factors >= l-1;
    // splitting weight-by-weight this is feasible iff each weight clears
    // l + (r-1)(l-1).
    Int need = pair.ell + (pair.r - 1) * (pair.ell - 1);
    rep.vanishing_sufficient =
        std::all_of(dec.weights.begin(), dec.weights.end(), [&](const Int& w) { return w >= need; });
    return rep;
}

namespace {

struct Summand {
    DivClass cls;
    Int mult;
};

// Dual-side bundles of the two-term resolution of v: Lambda collects the
// duals of the right block, Omega those of the left block.
void dual_blocks(const SurfaceConfig& s, const GaetaExponents& exps, std::vector<Summand>& lambda,
                 std::vector<Summand>& omega) {
    ExcSequence seq = sequence(s);
    std::vector<Int> by_index = exps.by_sequence_index();
    for (int k = 1; k <= seq.n(); ++k) {
        Summand sm{-seq.bundles[static_cast<size_t>(k - 1)], by_index[static_cast<size_t>(k - 1)]};
        if (k <= seq.d)
            omega.push_back(std::move(sm));
        else
            lambda.push_back(std::move(sm));
    }
}

}  // namespace

XiDimension xi_dimension(const SurfaceConfig& s, const SDPair& pair, const GaetaExponents& v_exps) {
    if (!v_exps.matches(s)) throw DimensionMismatch("exponent tuple does not match the surface");
    if (!v_exps.all_nonneg()) throw Precondition("xi_dimension needs non-negative exponents");
    std::vector<Summand> lambda, omega;
    dual_blocks(s, v_exps, lambda, omega);

    XiDimension out;
    out.rk_lambda = 0;
    out.rk_omega = 0;
    for (const auto& sm : lambda) out.rk_lambda += sm.mult;
    for (const auto& sm : omega) out.rk_omega += sm.mult;

    out.hom_lambda_omega = 0;
    for (const auto& lf : lambda)
        for (const auto& om : omega) {
            if (lf.mult == 0 || om.mult == 0) continue;
            CohomResult h = cohom_X(s, om.cls - lf.cls);
            if (!h.exact)
                throw Incomplete("hom between resolution summands is not determined exactly");
            out.hom_lambda_omega += lf.mult * om.mult * h.h0;
        }

    out.dim_P = out.hom_lambda_omega - 1;
    Int hom_lambda_oz = pair.ell * out.rk_lambda;
    Int hom_omega_oz = pair.ell * out.rk_omega;
    const Int& a_last = v_exps.p2 ? v_exps.alpha3 : v_exps.alpha4;  // exponent of the O-summand
    out.formula_value = out.hom_lambda_omega - hom_lambda_oz + (a_last - 1) +
                        (2 * pair.ell + hom_omega_oz - 1);

    if (out.rk_lambda - out.rk_omega != pair.r + 1)
        throw Error("internal: rk(Lambda) - rk(Omega) != r + 1");
    if (a_last != (pair.r - 1) * pair.ell + 1)
        throw Error("internal: the O-exponent of v is not (r-1)l + 1");
    if (out.formula_value != out.dim_P)
        throw Error("internal: dimension count disagrees with hom(Lambda,Omega) - 1");
    return out;
}

StratumGap stratum_gap(const SurfaceConfig& s, const GaetaExponents& v_exps, const Int& ell,
                       const Int& lambda, const std::vector<Int>& lambda_j,
                       const std::vector<Int>& lambda_i) {
    if (s.is_p2()) throw P2Unsupported("strata are indexed by the blowup structure");
    if (!v_exps.matches(s)) throw DimensionMismatch("exponent tuple does not match the surface");
    if (static_cast<int>(lambda_j.size()) != s.s1_count() ||
        static_cast<int>(lambda_i.size()) != s.s0_count())
        throw DimensionMismatch("stratum data does not match the surface");
    if (lambda < 0 || lambda > ell) throw Precondition("need 0 <= lambda <= ell");
    for (const auto& x : lambda_i)
        if (x < 0 || x > lambda) throw Precondition("need 0 <= lambda_i <= lambda");
    for (const auto& x : lambda_j)
        if (x < 0 || x > ell) throw Precondition("need 0 <= lambda_j <= ell");

    StratumGap out;
    out.ext1_bound = lambda * (v_exps.alpha2 + v_exps.alpha3 + v_exps.alpha4);
    for (int i = 1; i <= s.s0_count(); ++i)
        out.ext1_bound += lambda_i[static_cast<size_t>(i - 1)] * v_exps.gamma_s0[static_cast<size_t>(i - 1)];

    out.stratum_codim = lambda * (v_exps.alpha1 + lambda - ell);
    for (int j = s.s0_count() + 1; j <= s.t(); ++j) {
        const Int& lj = lambda_j[static_cast<size_t>(j - s.s0_count() - 1)];
        out.stratum_codim += lj * (v_exps.gamma_s1[static_cast<size_t>(j - s.s0_count() - 1)] + lj - ell);
    }
    for (int i = 1; i <= s.s0_count(); ++i) {
        const Int& li = lambda_i[static_cast<size_t>(i - 1)];
        Int inner = li - lambda;
        for (int j : s.children_of(i))
            inner += ell - lambda_j[static_cast<size_t>(j - s.s0_count() - 1)];
        out.stratum_codim += li * inner;
    }

    out.gap = out.ext1_bound - out.stratum_codim;

    // Closed form of the same difference; guards the two tallies above.
    Int r = v_exps.rank() - 1;
    Int closed = lambda * (ell + r + 1 - lambda);
    for (int i = 1; i <= s.s0_count(); ++i) {
        const Int& li = lambda_i[static_cast<size_t>(i - 1)];
        const Int& gi = v_exps.gamma_s0[static_cast<size_t>(i - 1)];
        for (int j : s.children_of(i)) {
            const Int& lj = lambda_j[static_cast<size_t>(j - s.s0_count() - 1)];
            closed += (lj - li) * (ell - lj);
        }
        closed -= (lambda - li) * (gi - li);
    }
    for (int j = s.s0_count() + 1; j <= s.t(); ++j)
        closed -= (lambda_j[static_cast<size_t>(j - s.s0_count() - 1)] - lambda) *
                  v_exps.gamma_s1[static_cast<size_t>(j - s.s0_count() - 1)];
    if (closed != out.gap) throw Error("internal: stratum gap closed form mismatch");
    return out;
}

NumbersMatchL1 numbers_match_l1(const SurfaceConfig& s, const SDPair& pair) {
    if (pair.ell != 1) throw Precondition("numbers_match_l1 needs ell = 1");
    NumbersMatchL1 out;
    out.c2_v = to_int(invariants(s, pair.v).c2);
    out.chi_L = chi_line(s, pair.L);
    out.equal = out.c2_v == out.chi_L;
    return out;
}

}  // namespace ratsurf
