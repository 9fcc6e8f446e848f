#include "ratsurf/cohomology.hpp"

#include <algorithm>

namespace ratsurf {

CohomResult CohomResult::make_exact(Int h0, Int h1, Int h2) {
    CohomResult r;
    r.exact = true;
    r.h0 = std::move(h0);
    r.h1 = std::move(h1);
    r.h2 = std::move(h2);
    r.chi = r.h0 - r.h1 + r.h2;
    return r;
}

Int chi_line_fe(int e, const Int& a, const Int& b) {
    return (a + 1) * (b + 1) - Int(e) * b * (b + 1) / 2;
}

Int chi_line(const SurfaceConfig& s, const DivClass& d) { return chi_of_divisor(s, d); }

namespace {

// h^0(O(aA+bB)) on F_e by the b-induction; agrees with counting monomials.
Int h0_fe(int e, const Int& a, const Int& b) {
    if (b < 0) return 0;
    if (b == 0) return a >= -1 ? a + 1 : Int(0);
    if (a >= Int(e) * b - 1) return chi_line_fe(e, a, b);
    return h0_fe(e, a, b - 1);
}

}  // namespace

CohomResult cohom_fe(int e, const Int& a, const Int& b) {
    if (e < 0) throw Precondition("cohom_fe needs e >= 0");
    if (b <= -2) {
        // Serre duality: h^i(D) = h^{2-i}(K - D), K = -(e+2)A - 2B.
        CohomResult dual = cohom_fe(e, Int(-e - 2) - a, Int(-2) - b);
        return CohomResult::make_exact(dual.h2, dual.h1, dual.h0);
    }
    Int h0 = h0_fe(e, a, b);
    Int h1 = h0 - chi_line_fe(e, a, b);  // h^2 = 0 for b >= -1
    if (h1 < 0) throw Error("internal: negative h^1 on F_e");
    return CohomResult::make_exact(h0, h1, 0);
}

namespace {

CohomResult cohom_p2(const Int& d) {
    auto h0 = [](const Int& k) { return k >= 0 ? (k + 1) * (k + 2) / 2 : Int(0); };
    Int a0 = h0(d);
    Int a2 = h0(-3 - d);  // Serre duality against K = -3H
    Int chi = (d + 1) * (d + 2) / 2;
    Int a1 = a0 + a2 - chi;
    if (a1 != 0) throw Error("internal: line bundles on P^2 have no h^1");
    return CohomResult::make_exact(a0, 0, a2);
}

struct ExcCoeffs {
    std::vector<Int> g;
    bool all_zero() const {
        return std::all_of(g.begin(), g.end(), [](const Int& x) { return x == 0; });
    }
};

// Is L trivial on every component of the total transform E_k?  For k in S1
// the transform is irreducible and only the degree on E_k matters; for k in
// S0 the children's degrees must vanish as well.
bool trivial_on_exceptional(const SurfaceConfig& s, const std::vector<Int>& g, int k) {
    if (g[static_cast<size_t>(k - 1)] != 0) return false;
    if (s.in_s0(k))
        for (int j : s.children_of(k))
            if (g[static_cast<size_t>(j - 1)] != 0) return false;
    return true;
}

DivClass rebuild(const SurfaceConfig& s, const Int& a, const Int& b, const std::vector<Int>& g) {
    DivClass d = DivClass::zero(s);
    d.a = a;
    d.b = b;
    for (size_t i = 0; i < g.size(); ++i) d.g[i] = g[i];
    return d;
}

// Certificate that E_k is not contained in the base locus of |L| (given
// h^0(L) > 0).  True for pullbacks of effective classes on an admissible
// configuration, and for non-negative combinations of the family D.
std::optional<bool> exc_outside_base_locus(const SurfaceConfig& s, const DivClass& l, int /*k*/) {
    bool pullback = true;
    for (const auto& x : l.g)
        if (x != 0) pullback = false;
    if (pullback) {
        if (l.a >= 0 && l.b >= 0 && s.admissible()) return true;
        return std::nullopt;
    }
    AmpleDecomposition dec = ample_decompose(s, l);
    bool nonneg = std::all_of(dec.weights.begin(), dec.weights.end(), [](const Int& w) { return w >= 0; });
    if (nonneg) return true;  // |L| is basepoint-free
    return std::nullopt;
}

// |N| certified to contain a connected member: non-negative weights over D
// with either positive self-intersection or N one of the fibration classes.
bool connected_effective_certified(const SurfaceConfig& s, const DivClass& n) {
    if (n.is_zero() || !n.integral()) return false;
    AmpleDecomposition dec = ample_decompose(s, n);
    for (const auto& w : dec.weights)
        if (w < 0) return false;
    if (intersect(s, n, n) > 0) return true;
    return n == DivClass::fiber_A(s) || n == DivClass::section_C(s);
}

CohomResult cohom_blowup(const SurfaceConfig& s, const DivClass& d, bool allow_serre);

// Strip one exceptional coefficient if a rule applies; nullopt when stuck.
std::optional<CohomResult> try_strip(const SurfaceConfig& s, const Int& a, const Int& b,
                                     const std::vector<Int>& g, bool allow_serre) {
    auto order = [&](auto&& f) {  // S1 indices first, then S0
        for (int k = s.s0_count() + 1; k <= s.t(); ++k)
            if (auto r = f(k)) return r;
        for (int k = 1; k <= s.s0_count(); ++k)
            if (auto r = f(k)) return r;
        return std::optional<CohomResult>{};
    };

    // Coefficient +1: h^p(L(E_k)) = h^p(L).
    if (auto r = order([&](int k) -> std::optional<CohomResult> {
            if (g[static_cast<size_t>(k - 1)] != 1) return std::nullopt;
            std::vector<Int> g2 = g;
            g2[static_cast<size_t>(k - 1)] = 0;
            if (!trivial_on_exceptional(s, g2, k)) return std::nullopt;
            return cohom_blowup(s, rebuild(s, a, b, g2), allow_serre);
        }))
        return r;

    // Coefficient -1: 0 -> L(-E_k) -> L -> O_{E_k} -> 0.
    return order([&](int k) -> std::optional<CohomResult> {
        if (g[static_cast<size_t>(k - 1)] != -1) return std::nullopt;
        std::vector<Int> g2 = g;
        g2[static_cast<size_t>(k - 1)] = 0;
        if (!trivial_on_exceptional(s, g2, k)) return std::nullopt;
        DivClass l = rebuild(s, a, b, g2);
        CohomResult up = cohom_blowup(s, l, allow_serre);
        if (!up.exact) return std::nullopt;
        if (up.h0 == 0) return CohomResult::make_exact(0, up.h1 + 1, up.h2);
        auto cert = exc_outside_base_locus(s, l, k);
        if (!cert) return std::nullopt;
        if (*cert) return CohomResult::make_exact(up.h0 - 1, up.h1, up.h2);
        return CohomResult::make_exact(up.h0, up.h1 + 1, up.h2);
    });
}

CohomResult cohom_blowup(const SurfaceConfig& s, const DivClass& d, bool allow_serre) {
    std::vector<Int> g(d.g.size());
    for (size_t i = 0; i < g.size(); ++i) g[i] = to_int(d.g[i]);
    Int a = to_int(d.a), b = to_int(d.b);

    bool has_exceptional = std::any_of(g.begin(), g.end(), [](const Int& x) { return x != 0; });
    if (!has_exceptional) {
        CohomResult r = cohom_fe(s.e(), a, b);  // pullback classes push down
        return r;
    }

    if (auto r = try_strip(s, a, b, g, allow_serre)) return *r;

    // h^1(O(-N)) = 0 exactly when every member of |N| is connected.
    DivClass minus = -d;
    if (connected_effective_certified(s, minus)) {
        Int chi = chi_line(s, d);
        if (chi < 0) throw Error("internal: connectedness certificate contradicts chi");
        return CohomResult::make_exact(0, 0, chi);
    }

    if (allow_serre) {
        DivClass dual = canonical_class(s) - d;
        CohomResult r = cohom_blowup(s, dual, false);
        if (r.exact) return CohomResult::make_exact(r.h2, r.h1, r.h0);
    }

    return CohomResult::unknown(chi_line(s, d));
}

}  // namespace

CohomResult cohom_X(const SurfaceConfig& s, const DivClass& d) {
    check_divisor(s, d);
    if (!d.integral()) throw Precondition("cohom_X needs an integral class");
    if (s.is_p2()) return cohom_p2(to_int(d.a));
    bool has_exceptional = false;
    for (const auto& x : d.g)
        if (x != 0) has_exceptional = true;
    if (has_exceptional && !s.admissible())
        throw InadmissibleSurface("exceptional reduction rules need an admissible blowup");
    return cohom_blowup(s, d, true);
}

AmpleDecomposition ample_decompose(const SurfaceConfig& s, const DivClass& l) {
    check_divisor(s, l);
    if (!l.integral()) throw Precondition("ample_decompose needs an integral class");
    AmpleDecomposition out;
    if (s.is_p2()) {
        out.weights = {to_int(l.a)};
    } else {
        // L = wA*A + wC*C + sum wi*(C-E_i) + sum wj*(C+A-E_i(j)-E_j); the
        // system is triangular from the exceptional coefficients up.
        Int alpha = to_int(l.alpha(s)), delta = to_int(l.delta());
        std::vector<Int> wj(static_cast<size_t>(s.s1_count()));
        std::vector<Int> wi(static_cast<size_t>(s.s0_count()));
        Int sum_wj = 0, sum_gi = 0;
        for (int j = s.s0_count() + 1; j <= s.t(); ++j) {
            wj[static_cast<size_t>(j - s.s0_count() - 1)] = to_int(l.gamma(j));
            sum_wj += to_int(l.gamma(j));
        }
        for (int i = 1; i <= s.s0_count(); ++i) {
            Int w = to_int(l.gamma(i));
            for (int j : s.children_of(i)) w -= to_int(l.gamma(j));
            wi[static_cast<size_t>(i - 1)] = w;
            sum_gi += to_int(l.gamma(i));
        }
        out.weights.push_back(alpha - sum_wj);   // wA
        out.weights.push_back(delta - sum_gi);   // wC
        for (auto& w : wi) out.weights.push_back(w);
        for (auto& w : wj) out.weights.push_back(w);
    }
    Int mn = out.weights.front();
    for (const auto& w : out.weights) mn = std::min(mn, w);
    out.very_ample = mn >= 1;
    if (mn >= 1) out.m_very_ample_bound = mn;
    return out;
}

DivClass recompose_weights(const SurfaceConfig& s, const std::vector<Int>& weights) {
    if (s.is_p2()) {
        if (weights.size() != 1) throw DimensionMismatch("P^2 expects one weight");
        return DivClass::hyperplane(Rat(weights[0]));
    }
    size_t want = 2 + static_cast<size_t>(s.t());
    if (weights.size() != want) throw DimensionMismatch("weight vector does not match surface");
    DivClass out = Rat(weights[0]) * DivClass::fiber_A(s) + Rat(weights[1]) * DivClass::section_C(s);
    size_t pos = 2;
    for (int i = 1; i <= s.s0_count(); ++i, ++pos)
        out = out + Rat(weights[pos]) * (DivClass::section_C(s) - DivClass::exceptional(s, i));
    for (int j = s.s0_count() + 1; j <= s.t(); ++j, ++pos) {
        DivClass dj = DivClass::section_C(s) + DivClass::fiber_A(s) -
                      DivClass::exceptional(s, s.parent_of(j)) - DivClass::exceptional(s, j);
        out = out + Rat(weights[pos]) * dj;
    }
    return out;
}

BaseLocusReport base_locus(const SurfaceConfig& s, const DivClass& d) {
    check_divisor(s, d);
    BaseLocusReport rep;
    rep.mobile = d;
    if (!d.integral()) return rep;

    if (s.is_p2()) {
        if (d.a >= 0) {
            rep.bpf = true;
            rep.supported = true;
        }
        return rep;
    }
    if (!s.admissible()) throw InadmissibleSurface("base_locus needs an admissible configuration");

    const DivClass A = DivClass::fiber_A(s), C = DivClass::section_C(s), B = DivClass::section_B(s);

    // Non-negative combination over the bpf family D: basepoint-free.
    {
        AmpleDecomposition dec = ample_decompose(s, d);
        if (std::all_of(dec.weights.begin(), dec.weights.end(), [](const Int& w) { return w >= 0; })) {
            rep.bpf = true;
            rep.supported = true;
            return rep;
        }
    }

    // Pullback of an effective class: fixed part k*B over the negative
    // section, basepoint-free moving part (points avoid B).
    bool pullback = std::all_of(d.g.begin(), d.g.end(), [](const Rat& x) { return x == 0; });
    if (pullback && d.a >= 0 && d.b >= 0) {
        Int a = to_int(d.a), b = to_int(d.b);
        Int k = 0;
        if (s.e() > 0) {
            Int stray = b - a / Int(s.e());
            if (stray > 0) k = stray;
        }
        rep.supported = true;
        rep.bpf = k == 0;
        if (k > 0) {
            rep.fixed_parts.push_back(Rat(k) * B);
            rep.mobile = d - Rat(k) * B;
        }
        return rep;
    }

    // D0 - E_i for a single i in S0: the fiber class pins the whole system,
    // the section class stays free after one point.
    auto single_exc = [&](bool s0_only) -> int {
        int found = 0;
        for (int k = 1; k <= s.t(); ++k) {
            Rat gk = d.g[static_cast<size_t>(k - 1)];
            if (gk == 0) continue;
            if (gk != -1 || found != 0) return 0;
            if (s0_only && !s.in_s0(k)) return 0;
            found = k;
        }
        return found;
    };
    if (int i = single_exc(true); i != 0) {
        DivClass d0 = d + DivClass::exceptional(s, i);
        if (d0 == A) {
            rep.supported = true;
            rep.fixed_parts.push_back(d);
            rep.mobile = DivClass::zero(s);
            return rep;
        }
        return rep;  // other D0 - E_i base loci depend on the configuration
    }

    // D0 - E_j for j in S1 with parent i: |D0-E_j| = |D0-E_i| + (E_i-E_j)
    // whenever D0 is an effective pullback or one of the section shapes.
    if (int j = single_exc(false); j != 0 && s.in_s1(j)) {
        DivClass d0 = d + DivClass::exceptional(s, j);
        bool d0_pullback = std::all_of(d0.g.begin(), d0.g.end(), [](const Rat& x) { return x == 0; });
        if (d0_pullback && d0.a >= 0 && d0.b >= 0) {
            int i = s.parent_of(j);
            BaseLocusReport inner = base_locus(s, d0 - DivClass::exceptional(s, i));
            rep.supported = true;
            if (inner.supported) {
                rep.fixed_parts = inner.fixed_parts;
                rep.mobile = inner.mobile;
            } else {
                rep.mobile = d0 - DivClass::exceptional(s, i);
            }
            rep.fixed_parts.push_back(DivClass::exceptional(s, i) - DivClass::exceptional(s, j));
            return rep;
        }
    }
    return rep;
}

}  // namespace ratsurf
