#include "ratsurf/gaeta.hpp"

#include "ratsurf/exceptional.hpp"

#include <algorithm>

namespace ratsurf {

namespace {

// chi(f(D)) without constructing the twisted class (valid for rank 0 too).
Int chi_of_twist(const SurfaceConfig& s, const NumClass& f, const DivClass& d) {
    return twist(s, f, d).chi;
}

ExponentsResult exponents_p2(const SurfaceConfig& s, const NumClass& f) {
    // a3 = chi(O, F); a2 = chi(O(-1), F) - a3 * hom(O(-1), O);
    // a1 = -chi(F, O(-2)).
    Int a3 = f.chi;
    NumClass om1 = NumClass::line_bundle(s, DivClass::hyperplane(-1));
    NumClass om2 = NumClass::line_bundle(s, DivClass::hyperplane(-2));
    Int hom_12 = cohom_X(s, DivClass::hyperplane(1)).h0;
    Int a2 = to_int(euler_pairing(s, om1, f)) - a3 * hom_12;
    Int a1 = -to_int(euler_pairing(s, f, om2));
    ExponentsResult out;
    out.exps = GaetaExponents::for_p2(a1, a2, a3);
    if (a3 < 0)
        out.first_failing = "a3";
    else if (a1 < 0)
        out.first_failing = "a1";
    else if (a2 < 0)
        out.first_failing = "a2";
    out.admits = out.first_failing.empty();
    return out;
}

}  // namespace

ExponentsResult exponents(const SurfaceConfig& s, const NumClass& f) {
    check_divisor(s, f.c1);
    if (f.r < 0) throw Precondition("exponents needs rank >= 0");
    if (!f.c1.integral()) throw Precondition("exponents needs an integral first Chern class");
    if (s.is_p2()) return exponents_p2(s, f);
    if (!s.admissible()) throw InadmissibleSurface("exponents needs an admissible configuration");

    DivClass sum_s0 = DivClass::zero(s), sum_all = DivClass::zero(s);
    for (int i = 1; i <= s.s0_count(); ++i) sum_s0 = sum_s0 + DivClass::exceptional(s, i);
    sum_all = sum_s0;
    for (int j = s.s0_count() + 1; j <= s.t(); ++j) sum_all = sum_all + DivClass::exceptional(s, j);
    const DivClass A = DivClass::fiber_A(s), B = DivClass::section_B(s);

    std::vector<Int> gi, gj;
    for (int i = 1; i <= s.s0_count(); ++i) gi.push_back(to_int(f.c1.gamma(i)));
    for (int j = s.s0_count() + 1; j <= s.t(); ++j) gj.push_back(to_int(f.c1.gamma(j)));

    Int a4 = f.chi;
    Int a1 = -chi_of_twist(s, f, -A - B + sum_all);
    Int a2 = -chi_of_twist(s, f, -B + sum_s0);
    Int a3 = -chi_of_twist(s, f, -A + sum_s0);

    ExponentsResult out;
    out.exps = GaetaExponents::for_blowup(a1, a2, a3, a4, gi, gj);
    for (size_t k = 0; k < gi.size() && out.first_failing.empty(); ++k)
        if (gi[k] < 0) out.first_failing = "gamma" + std::to_string(k + 1);
    for (size_t k = 0; k < gj.size() && out.first_failing.empty(); ++k)
        if (gj[k] < 0) out.first_failing = "gamma" + std::to_string(s.s0_count() + k + 1);
    if (out.first_failing.empty() && a4 < 0) out.first_failing = "alpha4";
    if (out.first_failing.empty() && a1 < 0) out.first_failing = "alpha1";
    if (out.first_failing.empty() && a2 < 0) out.first_failing = "alpha2";
    if (out.first_failing.empty() && a3 < 0) out.first_failing = "alpha3";
    out.admits = out.first_failing.empty();
    return out;
}

GaetaExponents exponents_closed_form(const SurfaceConfig& s, const NumClass& f) {
    if (s.is_p2()) throw P2Unsupported("closed forms use the A/C basis");
    check_divisor(s, f.c1);
    if (!f.c1.integral()) throw Precondition("exponents needs an integral first Chern class");
    Int alpha = to_int(f.c1.alpha(s)), delta = to_int(f.c1.delta());
    Int sum_gi = 0, sum_gj = 0;
    std::vector<Int> gi, gj;
    for (int i = 1; i <= s.s0_count(); ++i) {
        gi.push_back(to_int(f.c1.gamma(i)));
        sum_gi += gi.back();
    }
    for (int j = s.s0_count() + 1; j <= s.t(); ++j) {
        gj.push_back(to_int(f.c1.gamma(j)));
        sum_gj += gj.back();
    }
    Int a1 = delta + alpha + f.r - f.chi - sum_gi - sum_gj;
    Int a2 = alpha + f.r - f.chi - sum_gi;
    Int a3 = delta + f.r - f.chi - sum_gi;
    return GaetaExponents::for_blowup(a1, a2, a3, f.chi, gi, gj);
}

NumClass class_of(const SurfaceConfig& s, const GaetaExponents& exps) {
    if (!exps.matches(s)) throw DimensionMismatch("exponent tuple does not match the surface");
    if (!exps.all_nonneg()) throw Precondition("class_of needs non-negative exponents");
    if (exps.rank() < 0) throw Precondition("class_of needs a non-negative cokernel rank");
    ExcSequence seq = sequence(s);
    std::vector<Int> by_index = exps.by_sequence_index();
    NumClass acc{0, DivClass::zero(s), 0};
    for (int k = 1; k <= seq.n(); ++k) {
        Int mult = by_index[static_cast<size_t>(k - 1)];
        if (k <= seq.d) mult = -mult;
        NumClass lb = NumClass::line_bundle(s, seq.bundles[static_cast<size_t>(k - 1)]);
        acc.r += mult * lb.r;
        acc.c1 = acc.c1 + Rat(mult) * lb.c1;
        acc.chi += mult * lb.chi;
    }
    return acc;
}

Rat twist_search_window_bound(int e, const Rat& m) {
    Rat mm = std::max(m, Rat(0));
    Rat root = Rat(ceil_sqrt(2 * mm / Rat(e + 2)));
    Rat r = mm + Rat(2 * e + 6) * root + Rat(3 * e + 12, 2);
    return Rat(e + 2, 2) * r * r;
}

TwistSearchResult twist_search(const SurfaceConfig& s, const NumClass& f, const Rat& m) {
    if (s.is_p2()) throw P2Unsupported("twist search runs over pullbacks from the ruled surface");
    check_divisor(s, f.c1);
    if (f.r <= 0) throw Precondition("twist_search needs positive rank");
    if (!f.c1.integral()) throw Precondition("twist_search needs an integral first Chern class");
    if (!s.admissible()) throw InadmissibleSurface("twist_search needs an admissible configuration");
    Int sum_gi = 0, sum_gj = 0;
    for (int i = 1; i <= s.s0_count(); ++i) {
        Int g = to_int(f.c1.gamma(i));
        if (g < 0) throw Precondition("twist_search requires gamma_i >= 0");
        Int child_sum = 0;
        for (int j : s.children_of(i)) child_sum += to_int(f.c1.gamma(j));
        if (g < child_sum) throw Precondition("twist_search requires gamma_i >= sum of children");
        sum_gi += g;
    }
    for (int j = s.s0_count() + 1; j <= s.t(); ++j) {
        Int g = to_int(f.c1.gamma(j));
        if (g < 0) throw Precondition("twist_search requires gamma_j >= 0");
        sum_gj += g;
    }

    // Reduced class on F_e: exceptional part dropped, chi bumped by the
    // S0 weights.  alpha/beta are the A/B coordinates of c1.
    int e = s.e();
    SurfaceConfig fe = SurfaceConfig::hirzebruch(e);
    Rat alpha_r = Rat(f.c1.a) / Rat(f.r);
    Rat beta_r = Rat(f.c1.b) / Rat(f.r);
    NumClass fprime{f.r, DivClass{f.c1.a, f.c1.b, {}}, f.chi + sum_gi};
    Rat delta_prime = invariants(fe, fprime).Delta;

    // Lattice: L = n*A + m*B integral <-> hyperbola coordinates
    // x = m + beta/r + 1, y = n + alpha/r + (e+2)/2.
    auto x_of = [&](const Int& mm) { return Rat(mm) + beta_r + 1; };
    auto chi_prime = [&](const Int& mm, const Int& nn) {
        DivClass l = DivClass{Rat(nn), Rat(mm), {}};
        return twist(fe, fprime, l).chi;
    };

    Rat x_hi = Rat(ceil_sqrt(std::max(Rat(0), 2 * delta_prime / Rat(e + 2)))) + ceil_rat(std::max(m, Rat(0))) + 2;

    struct Candidate {
        Int chi_x;  // chi(f(L)) on the blowup
        Int mm, nn;
    };
    std::vector<Candidate> cands;
    Int m_lo = ceil_rat(1 - beta_r - 1);  // smallest m with x >= 1
    for (Int mm = m_lo; x_of(mm) <= x_hi; ++mm) {
        Rat x = x_of(mm);
        // Smallest lattice y on or above the upper branch: chi' >= 0 at
        // n_min and chi' < 0 below; both shifted points must not be above.
        Rat q = delta_prime / x + Rat(e) * x / 2;
        Int n_min = ceil_rat(q - alpha_r - Rat(e + 2, 2));
        while (chi_prime(mm, n_min) < 0) ++n_min;        // guard against rounding at the branch
        while (chi_prime(mm, n_min - 1) >= 0) --n_min;
        for (Int nn = n_min; nn <= n_min + 1; ++nn) {
            if (nn == n_min + 1 && chi_prime(mm, n_min) != 0) break;  // (x, y-1) would sit above
            if (chi_prime(mm - 1, nn) > 0) continue;                  // (x-1, y) above the branch
            cands.push_back(Candidate{chi_prime(mm, nn) - sum_gi, mm, nn});
        }
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& l, const Candidate& r) {
        if (l.chi_x != r.chi_x) return l.chi_x > r.chi_x;
        if (l.mm != r.mm) return l.mm < r.mm;
        return l.nn < r.nn;
    });

    TwistSearchResult out;
    for (const auto& c : cands) {
        if (Rat(c.chi_x) < Rat(f.r) * m) continue;
        DivClass l = DivClass::zero(s);
        l.a = Rat(c.nn);
        l.b = Rat(c.mm);
        ExponentsResult er = exponents(s, twist(s, f, l));
        if (!er.admits) continue;
        out.feasible = true;
        out.L = l;
        out.exps = er.exps;
        out.chi_after = c.chi_x;
        return out;
    }
    return out;
}

CokernelReport cokernel_report_impl(const SurfaceConfig& s, const GaetaExponents& exps) {
    CokernelReport rep;
    Int r = exps.rank();
    Int sum_gi = 0;
    rep.torsion_free_ok = true;
    rep.locally_free_ok = true;
    bool gg_gamma = true, nsc = true;
    if (!s.is_p2()) {
        for (int i = 1; i <= s.s0_count(); ++i) {
            Int g = exps.gamma_s0[static_cast<size_t>(i - 1)];
            sum_gi += g;
            auto children = s.children_of(i);
            Int child_sum = 0;
            for (int j : children) child_sum += exps.gamma_s1[static_cast<size_t>(j - s.s0_count() - 1)];
            if (!children.empty()) {
                if (g < child_sum) rep.torsion_free_ok = false;
                if (g < 1 + child_sum) rep.locally_free_ok = false;
                if (g < r - exps.alpha4 + child_sum) gg_gamma = false;
            }
            Int excess = exps.alpha4 - r;
            if (excess < 0) excess = 0;
            if (g < child_sum + excess) nsc = false;
        }
        for (const auto& g : exps.gamma_s1)
            if (g < exps.alpha4 - r) nsc = false;
    }
    Int a_last = s.is_p2() ? exps.alpha3 : exps.alpha4;
    rep.globally_generated_ok = gg_gamma && a_last >= r + 2;
    rep.no_sections_on_curves_ok = nsc;
    rep.prioritary_codim_bound = sum_gi + a_last - r + 1;

    // Balanced shape: a_n = l*r and left sum = (right sum without a_n) + (l-1)r.
    if (r > 0 && a_last % r == 0 && a_last / r >= 1) {
        Int ell = a_last / r;
        if (exps.left_sum() == exps.right_sum() - a_last + (ell - 1) * r) {
            rep.wbn_shape = true;
            rep.wbn_ell = ell;
        }
    }
    return rep;
}

CokernelReport cokernel_condition_report(const SurfaceConfig& s, const GaetaExponents& exps) {
    if (!exps.matches(s)) throw DimensionMismatch("exponent tuple does not match the surface");
    if (!exps.all_nonneg()) throw Precondition("cokernel conditions need non-negative exponents");
    return cokernel_report_impl(s, exps);
}

DegeneracyCodim degeneracy_codim(const Int& a, const Int& b, const Int& a2, const Int& b2) {
    if (a > b || a2 < 0 || b2 < 0 || a2 > a || b2 > b) throw Precondition("degeneracy_codim: need a <= b, 0 <= a2 <= a, 0 <= b2 <= b");
    DegeneracyCodim out;
    if (a2 == 0 && b2 == 0) {
        out.codim = b - a + 1;
        return out;
    }
    if (b2 < a2) {
        out.whole_space = true;
        out.codim = 0;
        return out;
    }
    out.codim = std::min(b2 - a2, b - a) + 1;
    return out;
}

}  // namespace ratsurf
