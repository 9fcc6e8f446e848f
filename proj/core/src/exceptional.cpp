#include "ratsurf/exceptional.hpp"

#include <sstream>

namespace ratsurf {

ExcSequence sequence(const SurfaceConfig& s) {
    ExcSequence seq;
    if (s.is_p2()) {
        seq.bundles = {DivClass::hyperplane(-2), DivClass::hyperplane(-1), DivClass::hyperplane(0)};
        seq.d = 1;
        return seq;
    }
    if (!s.admissible()) throw InadmissibleSurface("exceptional sequence needs an admissible blowup");
    const DivClass A = DivClass::fiber_A(s), C = DivClass::section_C(s);
    seq.bundles.push_back(-(C + A));
    for (int j = s.s0_count() + 1; j <= s.t(); ++j)
        seq.bundles.push_back(-(C + A) + DivClass::exceptional(s, j));
    seq.bundles.push_back(-C);
    seq.bundles.push_back(-A);
    for (int i = 1; i <= s.s0_count(); ++i) seq.bundles.push_back(-DivClass::exceptional(s, i));
    seq.bundles.push_back(DivClass::zero(s));
    seq.d = 1 + s.s1_count();
    return seq;
}

namespace {

DualObject dual_line_bundle(const SurfaceConfig& s, const DivClass& d, int shift, std::string label) {
    DualObject o;
    o.kclass = NumClass::line_bundle(s, d);
    o.shift = shift;
    o.kind = DualKind::LineBundle;
    o.bundle = d;
    o.label = std::move(label);
    return o;
}

// [O_{E_k}] = [O] - [O(-E_k)]: rank 0, c1 = E_k, chi = 1.
DualObject dual_structure_sheaf(const SurfaceConfig& s, int k, int shift) {
    DualObject o;
    DivClass e = DivClass::exceptional(s, k);
    o.kclass = NumClass{0, e, 1 - chi_of_divisor(s, -e)};
    o.shift = shift;
    o.kind = DualKind::ExceptionalStructureSheaf;
    o.exc_index = k;
    o.label = "O_E" + std::to_string(k) + "[-" + std::to_string(shift) + "]";
    return o;
}

}  // namespace

std::vector<DualObject> dual_sequence(const SurfaceConfig& s) {
    std::vector<DualObject> duals;  // duals[i-1] pairs with sequence member i
    if (s.is_p2()) {
        // From 0 -> O(-1) -> O^3 -> T(-1) -> 0: T(-1) has class (2, H, 3).
        DualObject t;
        t.kclass = NumClass{2, DivClass::hyperplane(1), 3 - chi_of_divisor(s, DivClass::hyperplane(-1))};
        t.shift = 1;
        t.kind = DualKind::TangentTwist;
        t.label = "T(-1)[-1]";
        duals.push_back(dual_line_bundle(s, DivClass::hyperplane(1), 2, "O(1)[-2]"));
        duals.push_back(t);
        duals.push_back(dual_line_bundle(s, DivClass::hyperplane(0), 0, "O"));
        return duals;
    }
    if (!s.admissible()) throw InadmissibleSurface("dual sequence needs an admissible blowup");
    const DivClass A = DivClass::fiber_A(s), B = DivClass::section_B(s);
    DivClass sum_s0 = DivClass::zero(s), sum_s1 = DivClass::zero(s);
    for (int i = 1; i <= s.s0_count(); ++i) sum_s0 = sum_s0 + DivClass::exceptional(s, i);
    for (int j = s.s0_count() + 1; j <= s.t(); ++j) sum_s1 = sum_s1 + DivClass::exceptional(s, j);

    duals.push_back(dual_line_bundle(s, A + B - sum_s0 - sum_s1, 2, "O(A+B-sum E)[-2]"));
    for (int j = s.s0_count() + 1; j <= s.t(); ++j) duals.push_back(dual_structure_sheaf(s, j, 2));
    duals.push_back(dual_line_bundle(s, B - sum_s0, 1, "O(B-sum E_i)[-1]"));
    duals.push_back(dual_line_bundle(s, A - sum_s0, 1, "O(A-sum E_i)[-1]"));
    for (int i = 1; i <= s.s0_count(); ++i) duals.push_back(dual_structure_sheaf(s, i, 1));
    duals.push_back(dual_line_bundle(s, DivClass::zero(s), 0, "O"));
    return duals;
}

std::vector<PairCheck> SequenceReport::failures() const {
    std::vector<PairCheck> out;
    for (const auto& c : checks)
        if (c.status == CheckStatus::Violated) out.push_back(c);
    return out;
}

SequenceReport verify_line_bundles(const SurfaceConfig& s, const std::vector<DivClass>& bundles) {
    SequenceReport rep;
    int n = static_cast<int>(bundles.size());
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            PairCheck c;
            c.i = i;
            c.j = j;
            c.cls = bundles[static_cast<size_t>(j - 1)] - bundles[static_cast<size_t>(i - 1)];
            c.h = cohom_X(s, c.cls);
            if (!c.h.exact) {
                c.status = CheckStatus::Unknown;
                c.what = "cohomology not determined";
                ++rep.unknown_count;
            } else if (i == j) {
                bool ok = c.h.h0 == 1 && c.h.h1 == 0 && c.h.h2 == 0;
                c.status = ok ? CheckStatus::Ok : CheckStatus::Violated;
                if (!ok) c.what = "diagonal is not (1,0,0)";
            } else if (i < j) {
                bool ok = c.h.h1 == 0 && c.h.h2 == 0;
                c.status = ok ? CheckStatus::Ok : CheckStatus::Violated;
                if (!ok) c.what = "higher Ext between ordered members";
            } else {
                bool ok = c.h.h0 == 0 && c.h.h1 == 0 && c.h.h2 == 0;
                c.status = ok ? CheckStatus::Ok : CheckStatus::Violated;
                if (!ok) c.what = "backwards Hom/Ext does not vanish";
            }
            rep.checks.push_back(std::move(c));
        }
    }
    rep.passed = rep.unknown_count == 0 && rep.failures().empty();
    return rep;
}

SequenceReport verify_sequence(const SurfaceConfig& s) { return verify_line_bundles(s, sequence(s).bundles); }

DualReport verify_dual_objects(const SurfaceConfig& s, const std::vector<DualObject>& duals) {
    DualReport rep;
    ExcSequence seq = sequence(s);
    int n = seq.n();
    if (static_cast<int>(duals.size()) != n) throw Precondition("dual list has wrong length");
    bool any_violation = false;
    for (int i = 1; i <= n; ++i) {
        const DualObject& v = duals[static_cast<size_t>(i - 1)];
        for (int j = 1; j <= n; ++j) {
            DualPairCheck c;
            c.i = i;
            c.j = j;
            const DivClass& ej = seq.bundles[static_cast<size_t>(j - 1)];
            c.euler = euler_pairing(s, v.kclass, NumClass::line_bundle(s, ej));
            Rat expected = i == j ? ((v.shift % 2 == 0) ? Rat(1) : Rat(-1)) : Rat(0);
            c.euler_ok = c.euler == expected;
            if (!c.euler_ok) any_violation = true;
            if (v.bundle) {
                CohomResult h = cohom_X(s, ej - *v.bundle);
                if (!h.exact) {
                    c.cohom = DualCohomStatus::Unknown;
                    ++rep.unknown_count;
                } else {
                    // Hom(V[-s], E_j[l]) = H^{l+s}(E_j - V): the full
                    // condition asks for k exactly at l = 0, i = j.
                    Int want[3] = {0, 0, 0};
                    if (i == j) want[v.shift] = 1;
                    bool ok = h.h0 == want[0] && h.h1 == want[1] && h.h2 == want[2];
                    c.cohom = ok ? DualCohomStatus::Ok : DualCohomStatus::Violated;
                    if (!ok) any_violation = true;
                }
            }
            rep.checks.push_back(std::move(c));
        }
    }
    rep.passed = !any_violation && rep.unknown_count == 0;
    return rep;
}

DualReport verify_dual(const SurfaceConfig& s) { return verify_dual_objects(s, dual_sequence(s)); }

std::vector<std::vector<Int>> lambda_matrix(const SurfaceConfig& s, const GaetaExponents& exps) {
    if (!exps.matches(s)) throw DimensionMismatch("exponent tuple does not match the surface");
    ExcSequence seq = sequence(s);
    int n = seq.n();
    std::vector<std::vector<Int>> m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            // chi(E_j, E_i) = chi(O(L_i - L_j)) for line bundles.
            Int chi = chi_of_divisor(s, seq.bundles[static_cast<size_t>(i - 1)] -
                                            seq.bundles[static_cast<size_t>(j - 1)]);
            int sign = i <= seq.d ? -1 : 1;
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = Int(sign) * chi;
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
                throw Error("internal: lambda matrix is not lower triangular");
        Int diag = m[static_cast<size_t>(i)][static_cast<size_t>(i)];
        if (diag != 1 && diag != -1) throw Error("internal: lambda matrix diagonal is not +-1");
    }
    return m;
}

std::vector<Rat> perp_functional(const SurfaceConfig& s, const NumClass& f) {
    ExcSequence seq = sequence(s);
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(seq.n()));
    for (const auto& l : seq.bundles) out.push_back(euler_pairing(s, NumClass::line_bundle(s, l), f));
    return out;
}

bool perp_test(const SurfaceConfig& s, const std::vector<Int>& w, const NumClass& f) {
    std::vector<Rat> chi = perp_functional(s, f);
    if (w.size() != chi.size()) throw DimensionMismatch("w has wrong length for this sequence");
    Rat acc = 0;
    for (size_t k = 0; k < w.size(); ++k) acc += Rat(w[k]) * chi[k];
    return acc == 0;
}

}  // namespace ratsurf
