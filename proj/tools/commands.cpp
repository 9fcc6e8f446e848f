#include "commands.hpp"

#include "ratsurf/cohomology.hpp"
#include "ratsurf/exceptional.hpp"
#include "ratsurf/gaeta.hpp"
#include "ratsurf/json_io.hpp"
#include "ratsurf/sampling.hpp"
#include "ratsurf/stability.hpp"
#include "ratsurf/strange_duality.hpp"
#include "ratsurf/surface.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace ratsurf::cli {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUnsupported = 2;

// Arguments may be inline JSON (starting with '{' or '[') or a file path.
Json load_json(const std::string& arg) {
    std::string text;
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw JsonError("cannot open '" + arg + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw JsonError(std::string("parse error in '") + arg + "': " + e.what());
    }
}

SurfaceConfig load_surface(const std::string& arg) { return surface_from_json(load_json(arg)); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json verdict(const std::string& tag, const std::string& what, bool pass) {
    Json v;
    v["tag"] = tag;
    v["check"] = what;
    v["pass"] = pass;
    return v;
}

Json polarization_json(const PolarizationReport& rep) {
    Json j;
    j["lambda"] = rat_to_json(rep.lambda);
    Json checks = Json::array();
    checks.push_back(verdict("6.1", "H is a positive combination of the bpf family", rep.positive_combination));
    checks.push_back(verdict("6.3", "d_i/v <= lambda/(lambda+1)", rep.ratio_bound));
    checks.push_back(verdict("6.3", "(d_i/v)^2 <= 2*lambda/t", rep.sqrt_bound));
    checks.push_back(verdict("H.(K+A)", "H.(K+A) < 0", rep.h_k_plus_a_negative));
    checks.push_back(verdict("H.(K+2A)", "H.(K+2A) < 0", rep.h_k_plus_2a_negative));
    j["checks"] = std::move(checks);
    j["pass"] = rep.all();
    return j;
}

Json exponent_conditions_json(const ExponentConditionReport& rep) {
    Json j;
    Json checks = Json::array();
    checks.push_back(verdict("6.0", "rank >= 2", rep.rank_ge_2));
    checks.push_back(verdict("6.0", "gamma_i >= sum children + 1", rep.gamma_chain));
    checks.push_back(verdict("6.2", "sum gamma_i + alpha4 >= r + 1", rep.alpha4_sum));
    checks.push_back(verdict("positivity", "all exponents >= 1", rep.all_positive));
    j["checks"] = std::move(checks);
    j["pass"] = rep.all();
    return j;
}

Json positivity_json(const PositivityReport& rep) {
    Json j;
    Json checks = Json::array();
    checks.push_back(verdict("A.1", "sigma admits a two-term resolution", rep.a1_admits));
    checks.push_back(verdict("A.2", "gamma bounds against M", rep.a2_gammas));
    checks.push_back(verdict("A.2", "alpha, delta >= M + sum gamma_i + r(l-1)", rep.a2_alphadelta));
    checks.push_back(verdict("A.4", "P(L/r) >= threshold + l", rep.a4_discriminant));
    checks.push_back(verdict("A.6", "determinant-class vanishing bounds", rep.a6_theta_vanishing));
    checks.push_back(verdict("dim-count", "alpha2, alpha3 >= M; gamma_j >= M+l; gamma_i >= M+l+sum", rep.dim_count_hyp));
    j["checks"] = std::move(checks);
    j["pass"] = rep.all();
    return j;
}

Json sequence_report_json(const SequenceReport& rep) {
    Json j;
    j["pass"] = rep.passed;
    j["unknown"] = rep.unknown_count;
    Json pairs = Json::array();
    for (const auto& c : rep.checks) {
        Json f;
        f["i"] = c.i;
        f["j"] = c.j;
        f["h"] = to_json(c.h);
        f["status"] = c.status == CheckStatus::Ok      ? "ok"
                      : c.status == CheckStatus::Unknown ? "unknown"
                                                         : "violated";
        if (!c.what.empty()) f["what"] = c.what;
        pairs.push_back(std::move(f));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

Json dual_report_json(const DualReport& rep) {
    Json j;
    j["pass"] = rep.passed;
    j["unknown"] = rep.unknown_count;
    Json entries = Json::array();
    for (const auto& c : rep.checks) {
        Json f;
        f["i"] = c.i;
        f["j"] = c.j;
        f["euler"] = rat_to_json(c.euler);
        f["euler_ok"] = c.euler_ok;
        switch (c.cohom) {
            case DualCohomStatus::Ok: f["cohom"] = "ok"; break;
            case DualCohomStatus::Violated: f["cohom"] = "violated"; break;
            case DualCohomStatus::EulerOnly: f["cohom"] = "euler-only"; break;
            case DualCohomStatus::Unknown: f["cohom"] = "unknown"; break;
        }
        entries.push_back(std::move(f));
    }
    j["pairs"] = std::move(entries);
    return j;
}

Json cokernel_json(const CokernelReport& rep) {
    Json j;
    Json checks = Json::array();
    checks.push_back(verdict("coker-ii", "torsion-free bound on gammas", rep.torsion_free_ok));
    checks.push_back(verdict("coker-iii", "locally-free bound on gammas", rep.locally_free_ok));
    checks.push_back(verdict("coker-iv", "globally generated (alpha4 >= r+2 and gamma bound)", rep.globally_generated_ok));
    checks.push_back(verdict("no-sec-curves", "no sections vanishing on curves", rep.no_sections_on_curves_ok));
    j["checks"] = std::move(checks);
    j["prioritary_codim_bound"] = int_to_json(rep.prioritary_codim_bound);
    j["wbn_shape"] = rep.wbn_shape;
    if (rep.wbn_ell) j["wbn_ell"] = int_to_json(*rep.wbn_ell);
    return j;
}

std::vector<SurfaceConfig> sweep_surfaces() {
    std::vector<SurfaceConfig> out;
    out.push_back(SurfaceConfig::p2());
    for (int e = 0; e <= 3; ++e) out.push_back(SurfaceConfig::hirzebruch(e));
    out.push_back(SurfaceConfig::blowup(1, 1, {}));
    out.push_back(SurfaceConfig::blowup(1, 1, {1}));
    out.push_back(SurfaceConfig::blowup(2, 2, {1, 1, 2}));
    out.push_back(SurfaceConfig::blowup(3, 2, {2}));
    return out;
}

std::vector<SurfaceConfig> sweep_blowups() {
    std::vector<SurfaceConfig> out;
    for (const auto& s : sweep_surfaces())
        if (!s.is_p2()) out.push_back(s);
    return out;
}

// ---------------------------------------------------------------- sweeps

int sweep_cohom_oracle(int e_max, long range, std::ostream& out) {
    long cases = 0, failures = 0;
    for (int e = 0; e <= e_max; ++e) {
        for (long a = -range; a <= range; ++a) {
            for (long b = -range; b <= range; ++b) {
                ++cases;
                CohomResult h = cohom_fe(e, Int(a), Int(b));
                Int oracle = 0;
                if (b >= 0)
                    for (long k = 0; k <= b; ++k) {
                        Int term = Int(a) - Int(e) * k + 1;
                        if (term > 0) oracle += term;
                    }
                bool ok = h.h0 == oracle && h.h0 - h.h1 + h.h2 == chi_line_fe(e, Int(a), Int(b));
                CohomResult dual = cohom_fe(e, Int(-e - 2 - a), Int(-2 - b));
                ok = ok && h.h0 == dual.h2 && h.h1 == dual.h1 && h.h2 == dual.h0;
                if (!ok) ++failures;
            }
        }
    }
    Json j;
    j["cases"] = cases;
    j["failures"] = failures;
    emit(out, j);
    return failures == 0 ? kOk : kCheckFailed;
}

int sweep_exc(int e_max, int t_max, std::ostream& out) {
    long configs = 0, violations = 0, unknowns = 0;
    std::vector<SurfaceConfig> surfaces;
    surfaces.push_back(SurfaceConfig::p2());
    surfaces.push_back(SurfaceConfig::hirzebruch(0));
    for (int e = 1; e <= e_max; ++e)
        for (const auto& s : admissible_shapes(e, t_max)) surfaces.push_back(s);
    for (const auto& s : surfaces) {
        ++configs;
        SequenceReport seq = verify_sequence(s);
        DualReport dual = verify_dual(s);
        unknowns += seq.unknown_count + dual.unknown_count;
        if (!seq.failures().empty()) ++violations;
        if (!dual.passed && dual.unknown_count == 0) ++violations;
    }
    Json j;
    j["configs"] = configs;
    j["violations"] = violations;
    j["unknowns"] = unknowns;
    emit(out, j);
    if (unknowns > 0) return kUnsupported;
    return violations == 0 ? kOk : kCheckFailed;
}

int sweep_gaeta_roundtrip(long n, uint64_t seed, std::ostream& out) {
    Sampler rng(seed);
    long cases = 0, failures = 0;
    for (const auto& s : sweep_surfaces()) {
        for (long k = 0; k < n; ++k) {
            ++cases;
            NumClass f = rng.admitting_class(s, 9);
            ExponentsResult er = exponents(s, f);
            bool ok = er.admits && class_of(s, er.exps) == f;
            if (!s.is_p2()) ok = ok && exponents_closed_form(s, f) == er.exps;
            if (!ok) ++failures;
        }
    }
    Json j;
    j["cases"] = cases;
    j["failures"] = failures;
    emit(out, j);
    return failures == 0 ? kOk : kCheckFailed;
}

int sweep_orthogonality(long n, uint64_t seed, std::ostream& out) {
    Sampler rng(seed);
    long failures = 0;
    auto surfaces = sweep_surfaces();
    for (long k = 0; k < n; ++k) {
        const auto& s = surfaces[static_cast<size_t>(rng.uniform(0, static_cast<long>(surfaces.size()) - 1))];
        Int r = rng.uniform_int(2, 5), ell = rng.uniform_int(1, 4);
        DivClass L = rng.divisor(s, -8, 8);
        SDPair p = make_pair(s, r, ell, L);
        if (pairings(s, p.sigma, p.rho).chi_tensor != 0) ++failures;
    }
    Json j;
    j["cases"] = n;
    j["failures"] = failures;
    emit(out, j);
    return failures == 0 ? kOk : kCheckFailed;
}

int sweep_numbers_match(long n, uint64_t seed, std::ostream& out) {
    Sampler rng(seed);
    long failures = 0;
    auto surfaces = sweep_surfaces();
    for (long k = 0; k < n; ++k) {
        const auto& s = surfaces[static_cast<size_t>(rng.uniform(0, static_cast<long>(surfaces.size()) - 1))];
        SDPair p = make_pair(s, rng.uniform_int(2, 5), 1, rng.divisor(s, -10, 10));
        if (!numbers_match_l1(s, p).equal) ++failures;
    }
    Json j;
    j["cases"] = n;
    j["failures"] = failures;
    emit(out, j);
    return failures == 0 ? kOk : kCheckFailed;
}

int sweep_twist(long n, uint64_t seed, std::ostream& out) {
    Sampler rng(seed);
    long failures = 0;
    auto blowups = sweep_blowups();
    for (long k = 0; k < n; ++k) {
        const auto& s = blowups[static_cast<size_t>(rng.uniform(0, static_cast<long>(blowups.size()) - 1))];
        Int r = rng.uniform_int(1, 3);
        Rat m = Rat(rng.uniform(0, 3));
        DivClass c1 = DivClass::zero(s);
        c1.a = rng.uniform(-6, 6);
        c1.b = rng.uniform(-6, 6);
        // gamma_i >= sum of children keeps the search's precondition.
        for (int j = s.s0_count() + 1; j <= s.t(); ++j)
            c1.g[static_cast<size_t>(j - 1)] = -Rat(r) * rng.uniform(0, 2);
        for (int i = 1; i <= s.s0_count(); ++i) {
            Rat child = 0;
            for (int j : s.children_of(i)) child += -c1.g[static_cast<size_t>(j - 1)];
            c1.g[static_cast<size_t>(i - 1)] = -(child + Rat(r) * rng.uniform(0, 2));
        }
        Rat m_eff = m;
        {
            Rat gi = 0, gj = 0;
            for (int i = 1; i <= s.s0_count(); ++i) gi += -c1.g[static_cast<size_t>(i - 1)];
            for (int j = s.s0_count() + 1; j <= s.t(); ++j) gj += -c1.g[static_cast<size_t>(j - 1)];
            m_eff = std::max(m, 1 + std::max(gi, gj) / Rat(r));
        }
        Rat bound = twist_search_window_bound(s.e(), m_eff) + s.t();
        // chi chosen so the discriminant clears the window bound.
        NumClass probe{r, c1, 0};
        Rat p_nu = invariants(s, probe).P_nu;
        Int chi = floor_rat(Rat(r) * (p_nu - bound)) - rng.uniform(0, 5);
        NumClass f{r, c1, chi};
        TwistSearchResult res = twist_search(s, f, m_eff);
        bool ok = res.feasible;
        if (ok) {
            NumClass twisted = twist(s, f, res.L);
            ok = exponents(s, twisted).admits && Rat(twisted.chi) >= Rat(r) * m_eff &&
                 res.exps == exponents(s, twisted).exps;
        }
        if (!ok) ++failures;
    }
    Json j;
    j["cases"] = n;
    j["failures"] = failures;
    emit(out, j);
    return failures == 0 ? kOk : kCheckFailed;
}

int sweep_stratum_gap(long n, uint64_t seed, std::ostream& out) {
    Sampler rng(seed);
    long failures = 0;
    auto blowups = sweep_blowups();
    for (long k = 0; k < n; ++k) {
        const auto& s = blowups[static_cast<size_t>(rng.uniform(0, static_cast<long>(blowups.size()) - 1))];
        Int r = rng.uniform_int(2, 4), ell = rng.uniform_int(1, 3);
        Int M = big_M(r, ell);
        std::vector<Int> gj(static_cast<size_t>(s.s1_count()));
        for (auto& g : gj) g = M + ell + rng.uniform_int(0, 4);
        std::vector<Int> gi(static_cast<size_t>(s.s0_count()));
        for (int i = 1; i <= s.s0_count(); ++i) {
            Int child = 0;
            for (int j : s.children_of(i)) child += gj[static_cast<size_t>(j - s.s0_count() - 1)];
            gi[static_cast<size_t>(i - 1)] = M + ell + child + rng.uniform_int(0, 4);
        }
        Int a2 = M + rng.uniform_int(0, 5), a3 = M + rng.uniform_int(0, 5);
        Int a4 = (r - 1) * ell + 1;
        Int sum_gi = 0, sum_gj = 0;
        for (const auto& g : gi) sum_gi += g;
        for (const auto& g : gj) sum_gj += g;
        Int a1 = a2 + a3 + sum_gi + a4 - sum_gj - (r + 1);
        GaetaExponents v = GaetaExponents::for_blowup(a1, a2, a3, a4, gi, gj);
        // stratum data satisfying the emptiness bounds, excluding the
        // all-equal case with lambda > 0 (no verdict there)
        Int lambda;
        std::vector<Int> li(static_cast<size_t>(s.s0_count())), lj(static_cast<size_t>(s.s1_count()));
        while (true) {
            lambda = rng.uniform_int(0, static_cast<long>(ell));
            for (auto& x : lj) x = rng.uniform_int(0, static_cast<long>(ell));
            for (int i = 1; i <= s.s0_count(); ++i) {
                Int cap = lambda;
                for (int j : s.children_of(i))
                    cap = std::min(cap, lj[static_cast<size_t>(j - s.s0_count() - 1)]);
                li[static_cast<size_t>(i - 1)] = rng.uniform_int(0, static_cast<long>(cap));
            }
            bool all_equal = lambda > 0;
            for (const auto& x : li)
                if (x != lambda) all_equal = false;
            for (const auto& x : lj)
                if (x != lambda) all_equal = false;
            if (!all_equal) break;
        }
        StratumGap g = stratum_gap(s, v, ell, lambda, lj, li);
        if (g.gap > 0) ++failures;
    }
    Json j;
    j["cases"] = n;
    j["failures"] = failures;
    emit(out, j);
    return failures == 0 ? kOk : kCheckFailed;
}

int sweep_ext1(long n, uint64_t seed, std::ostream& out) {
    Sampler rng(seed);
    long failures = 0;
    auto surfaces = sweep_surfaces();
    for (long k = 0; k < n; ++k) {
        const auto& s = surfaces[static_cast<size_t>(rng.uniform(0, static_cast<long>(surfaces.size()) - 1))];
        long len = rng.uniform(1, 4);
        std::vector<NumClass> classes;
        HNData hn;
        for (long i = 0; i < len; ++i) {
            NumClass f{rng.uniform_int(1, 4), rng.divisor(s, -5, 5), rng.uniform_int(-10, 10)};
            Invariants inv = invariants(s, f);
            hn.gradings.push_back(HNData::Grading{f.r, inv.nu, inv.Delta});
            classes.push_back(std::move(f));
        }
        Rat expected = 0;
        for (size_t i = 0; i < classes.size(); ++i)
            for (size_t j = i + 1; j < classes.size(); ++j)
                expected -= pairings(s, classes[i], classes[j]).chi_hom;
        Ext1Report rep = ext1_plus(s, hn);
        if (rep.ext1_plus != expected) ++failures;
        if (len == 1 && rep.ext1_plus != 0) ++failures;
    }
    Json j;
    j["cases"] = n;
    j["failures"] = failures;
    emit(out, j);
    return failures == 0 ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- driver

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for divisor classes, line-bundle cohomology,\n"
                 "exceptional sequences and resolution exponents on rational surfaces"};
    app.require_subcommand(1);
    bool json_flag = true;
    app.add_flag("--json", json_flag, "JSON output (the only supported format; accepted for scripts)");

    // ------------------------------------------------------------ surface
    auto* c_surface = app.add_subcommand("surface", "lattice data, invariants, twists, pairings");
    c_surface->require_subcommand(1);
    std::string su_surface, su_class, su_f2, su_div;

    auto* c_info = c_surface->add_subcommand("info", "surface summary");
    c_info->add_option("--surface", su_surface)->required();
    c_info->callback([&] {
        SurfaceConfig s = load_surface(su_surface);
        Json j;
        j["command"] = "surface info";
        j["surface"] = to_json(s);
        if (!s.is_p2()) {
            j["admissible"] = s.admissible();
            j["t"] = s.t();
        }
        j["canonical_class"] = to_json(canonical_class(s));
        emit(out, j);
    });

    auto* c_inv = c_surface->add_subcommand("invariants", "slope, discriminant, Chern data of a class");
    c_inv->add_option("--surface", su_surface)->required();
    c_inv->add_option("--class", su_class)->required();
    c_inv->callback([&] {
        SurfaceConfig s = load_surface(su_surface);
        NumClass f = numclass_from_json(load_json(su_class), s);
        Invariants inv = invariants(s, f);
        Json j;
        j["command"] = "surface invariants";
        j["nu"] = to_json(inv.nu);
        j["P_nu"] = rat_to_json(inv.P_nu);
        j["Delta"] = rat_to_json(inv.Delta);
        j["ch2"] = rat_to_json(inv.ch2);
        j["c2"] = rat_to_json(inv.c2);
        emit(out, j);
    });

    auto* c_pair = c_surface->add_subcommand("pair", "Euler pairings of two classes");
    c_pair->add_option("--surface", su_surface)->required();
    c_pair->add_option("--f1", su_class)->required();
    c_pair->add_option("--f2", su_f2)->required();
    c_pair->callback([&] {
        SurfaceConfig s = load_surface(su_surface);
        NumClass f1 = numclass_from_json(load_json(su_class), s);
        NumClass f2 = numclass_from_json(load_json(su_f2), s);
        PairingResult pr = pairings(s, f1, f2);
        Json j;
        j["command"] = "surface pair";
        j["chi_hom"] = rat_to_json(pr.chi_hom);
        j["chi_tensor"] = rat_to_json(pr.chi_tensor);
        emit(out, j);
    });

    auto* c_twist = c_surface->add_subcommand("twist", "tensor a class by a line bundle");
    c_twist->add_option("--surface", su_surface)->required();
    c_twist->add_option("--class", su_class)->required();
    c_twist->add_option("--divisor", su_div)->required();
    c_twist->callback([&] {
        SurfaceConfig s = load_surface(su_surface);
        NumClass f = numclass_from_json(load_json(su_class), s);
        DivClass d = divisor_from_json(load_json(su_div), s);
        Json j;
        j["command"] = "surface twist";
        j["class"] = to_json(twist(s, f, d));
        emit(out, j);
    });

    // ------------------------------------------------------------- cohom
    auto* c_cohom = app.add_subcommand("cohom", "line-bundle cohomology (exact rule engine)");
    std::string ch_surface, ch_div;
    bool ch_bl = false, ch_ample = false;
    int cohom_rc = kOk;
    c_cohom->add_option("--surface", ch_surface)->required();
    c_cohom->add_option("--divisor", ch_div)->required();
    c_cohom->add_flag("--base-locus", ch_bl, "include the base-locus report");
    c_cohom->add_flag("--ample", ch_ample, "include the very-ampleness decomposition");
    c_cohom->callback([&] {
        SurfaceConfig s = load_surface(ch_surface);
        DivClass d = divisor_from_json(load_json(ch_div), s);
        CohomResult h = cohom_X(s, d);
        Json j = to_json(h);
        if (ch_bl) {
            BaseLocusReport bl = base_locus(s, d);
            Json b;
            b["supported"] = bl.supported;
            if (bl.supported) {
                b["bpf"] = bl.bpf;
                Json fixed = Json::array();
                for (const auto& f : bl.fixed_parts) fixed.push_back(to_json(f));
                b["fixed_parts"] = std::move(fixed);
                b["mobile"] = to_json(bl.mobile);
            }
            j["base_locus"] = std::move(b);
        }
        if (ch_ample) {
            AmpleDecomposition dec = ample_decompose(s, d);
            Json a;
            Json w = Json::array();
            for (const auto& x : dec.weights) w.push_back(int_to_json(x));
            a["weights"] = std::move(w);
            a["very_ample"] = dec.very_ample;
            if (dec.m_very_ample_bound) a["m_very_ample_bound"] = int_to_json(*dec.m_very_ample_bound);
            j["ample"] = std::move(a);
        }
        emit(out, j);
        if (!h.exact) cohom_rc = kUnsupported;
    });

    // --------------------------------------------------------------- exc
    auto* c_exc = app.add_subcommand("exc", "exceptional sequences and their duals");
    c_exc->require_subcommand(1);
    std::string ex_surface, ex_exps, ex_class;
    std::vector<long long> ex_w;
    int exc_rc = kOk;

    auto* c_exc_seq = c_exc->add_subcommand("sequence", "print the sequence and its dual");
    c_exc_seq->add_option("--surface", ex_surface)->required();
    c_exc_seq->callback([&] {
        SurfaceConfig s = load_surface(ex_surface);
        ExcSequence seq = sequence(s);
        Json j;
        j["command"] = "exc sequence";
        j["d"] = seq.d;
        Json bundles = Json::array();
        for (const auto& b : seq.bundles) bundles.push_back(to_json(b));
        j["bundles"] = std::move(bundles);
        Json duals = Json::array();
        for (const auto& v : dual_sequence(s)) {
            Json dj;
            dj["label"] = v.label;
            dj["shift"] = v.shift;
            dj["kclass"] = to_json(v.kclass);
            duals.push_back(std::move(dj));
        }
        j["dual"] = std::move(duals);
        emit(out, j);
    });

    auto* c_exc_verify = c_exc->add_subcommand("verify", "check the vanishing conditions pair by pair");
    c_exc_verify->add_option("--surface", ex_surface)->required();
    c_exc_verify->callback([&] {
        SurfaceConfig s = load_surface(ex_surface);
        SequenceReport seq = verify_sequence(s);
        DualReport dual = verify_dual(s);
        Json j;
        j["command"] = "exc verify";
        j["sequence"] = sequence_report_json(seq);
        j["dual"] = dual_report_json(dual);
        j["pass"] = seq.passed && dual.passed;
        emit(out, j);
        if (seq.unknown_count + dual.unknown_count > 0)
            exc_rc = kUnsupported;
        else if (!(seq.passed && dual.passed))
            exc_rc = kCheckFailed;
    });

    auto* c_exc_lambda = c_exc->add_subcommand("lambda", "the determinant-map matrix");
    c_exc_lambda->add_option("--surface", ex_surface)->required();
    c_exc_lambda->add_option("--exponents", ex_exps);
    c_exc_lambda->callback([&] {
        SurfaceConfig s = load_surface(ex_surface);
        GaetaExponents exps;
        if (!ex_exps.empty()) {
            exps = exponents_from_json(load_json(ex_exps), s);
        } else {
            exps = s.is_p2() ? GaetaExponents::for_p2(0, 0, 0)
                             : GaetaExponents::for_blowup(0, 0, 0, 0,
                                                          std::vector<Int>(static_cast<size_t>(s.s0_count())),
                                                          std::vector<Int>(static_cast<size_t>(s.s1_count())));
        }
        auto m = lambda_matrix(s, exps);
        Json j;
        j["command"] = "exc lambda";
        Json rows = Json::array();
        for (const auto& row : m) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(int_to_json(x));
            rows.push_back(std::move(r));
        }
        j["matrix"] = std::move(rows);
        emit(out, j);
    });

    auto* c_exc_perp = c_exc->add_subcommand("perp", "test membership in the orthogonal of a class");
    c_exc_perp->add_option("--surface", ex_surface)->required();
    c_exc_perp->add_option("--w", ex_w, "coordinates over the dual-bundle basis")->required();
    c_exc_perp->add_option("--class", ex_class)->required();
    c_exc_perp->callback([&] {
        SurfaceConfig s = load_surface(ex_surface);
        NumClass f = numclass_from_json(load_json(ex_class), s);
        std::vector<Int> w(ex_w.begin(), ex_w.end());
        bool in_perp = perp_test(s, w, f);
        Json j;
        j["command"] = "exc perp";
        j["in_perp"] = in_perp;
        Json chis = Json::array();
        for (const auto& x : perp_functional(s, f)) chis.push_back(rat_to_json(x));
        j["chi"] = std::move(chis);
        emit(out, j);
        if (!in_perp) exc_rc = kCheckFailed;
    });

    // ------------------------------------------------------------- gaeta
    auto* c_gaeta = app.add_subcommand("gaeta", "resolution exponents, existence, the twist search");
    c_gaeta->require_subcommand(1);
    std::string ga_surface, ga_class, ga_exps, ga_m = "0";
    long long ga_a = 0, ga_b = 0, ga_a2 = 0, ga_b2 = 0;
    int gaeta_rc = kOk;

    bool ga_closed = false;
    auto* c_ga_exp = c_gaeta->add_subcommand("exponents", "exponent tuple of a class");
    c_ga_exp->add_option("--surface", ga_surface)->required();
    c_ga_exp->add_option("--class", ga_class)->required();
    c_ga_exp->add_flag("--closed-form", ga_closed, "use the closed forms in (alpha, delta, gamma)");
    c_ga_exp->callback([&] {
        SurfaceConfig s = load_surface(ga_surface);
        NumClass f = numclass_from_json(load_json(ga_class), s);
        ExponentsResult er = exponents(s, f);
        Json j;
        j["command"] = "gaeta exponents";
        j["admits"] = er.admits;
        j["exponents"] = to_json(ga_closed ? exponents_closed_form(s, f) : er.exps);
        if (!er.admits) j["first_failing"] = er.first_failing;
        emit(out, j);
    });

    auto* c_ga_exists = c_gaeta->add_subcommand("exists", "does the class admit a two-term resolution?");
    c_ga_exists->add_option("--surface", ga_surface)->required();
    c_ga_exists->add_option("--class", ga_class)->required();
    c_ga_exists->callback([&] {
        SurfaceConfig s = load_surface(ga_surface);
        ExponentsResult er = exponents(s, numclass_from_json(load_json(ga_class), s));
        Json j;
        j["admits"] = er.admits;
        if (!er.admits) j["first_failing"] = er.first_failing;
        emit(out, j);
        if (!er.admits) gaeta_rc = kCheckFailed;
    });

    auto* c_ga_class = c_gaeta->add_subcommand("class-of", "numerical class of an exponent tuple");
    c_ga_class->add_option("--surface", ga_surface)->required();
    c_ga_class->add_option("--exponents", ga_exps)->required();
    c_ga_class->callback([&] {
        SurfaceConfig s = load_surface(ga_surface);
        NumClass f = class_of(s, exponents_from_json(load_json(ga_exps), s));
        Json j;
        j["command"] = "gaeta class-of";
        j["class"] = to_json(f);
        emit(out, j);
    });

    auto* c_ga_twist = c_gaeta->add_subcommand("twist", "search for a pullback twist that admits");
    c_ga_twist->add_option("--surface", ga_surface)->required();
    c_ga_twist->add_option("--class", ga_class)->required();
    c_ga_twist->add_option("--M", ga_m, "required chi(f(L)) >= r*M (rational)");
    c_ga_twist->callback([&] {
        SurfaceConfig s = load_surface(ga_surface);
        NumClass f = numclass_from_json(load_json(ga_class), s);
        auto m = parse_rat(ga_m);
        if (!m) throw JsonError("--M: not a rational: '" + ga_m + "'");
        TwistSearchResult res = twist_search(s, f, *m);
        Json j;
        j["command"] = "gaeta twist";
        j["feasible"] = res.feasible;
        if (res.feasible) {
            j["L"] = to_json(res.L);
            j["exponents"] = to_json(res.exps);
            j["chi_after"] = int_to_json(res.chi_after);
        }
        emit(out, j);
        if (!res.feasible) gaeta_rc = kCheckFailed;
    });

    auto* c_ga_cond = c_gaeta->add_subcommand("conditions", "cokernel condition suite for exponents");
    c_ga_cond->add_option("--surface", ga_surface)->required();
    c_ga_cond->add_option("--exponents", ga_exps)->required();
    c_ga_cond->callback([&] {
        SurfaceConfig s = load_surface(ga_surface);
        CokernelReport rep = cokernel_condition_report(s, exponents_from_json(load_json(ga_exps), s));
        Json j = cokernel_json(rep);
        j["command"] = "gaeta conditions";
        emit(out, j);
    });

    auto* c_ga_deg = c_gaeta->add_subcommand("degeneracy", "codimension of the rank-dropping locus");
    c_ga_deg->add_option("--a", ga_a)->required();
    c_ga_deg->add_option("--b", ga_b)->required();
    c_ga_deg->add_option("--a2", ga_a2);
    c_ga_deg->add_option("--b2", ga_b2);
    c_ga_deg->callback([&] {
        DegeneracyCodim dc = degeneracy_codim(Int(ga_a), Int(ga_b), Int(ga_a2), Int(ga_b2));
        Json j;
        j["command"] = "gaeta degeneracy";
        j["whole_space"] = dc.whole_space;
        if (!dc.whole_space) j["codim"] = int_to_json(dc.codim);
        emit(out, j);
    });

    // -------------------------------------------------------------- stab
    auto* c_stab = app.add_subcommand("stab", "polarization and exponent hypothesis suites");
    c_stab->require_subcommand(1);
    std::string st_surface, st_h, st_class, st_hn;
    int stab_rc = kOk;

    std::string st_exps;
    auto* c_st_check = c_stab->add_subcommand("check", "hypothesis suite for a class and polarization");
    c_st_check->add_option("--surface", st_surface)->required();
    c_st_check->add_option("--H", st_h)->required();
    c_st_check->add_option("--class", st_class);
    c_st_check->add_option("--exponents", st_exps);
    c_st_check->callback([&] {
        SurfaceConfig s = load_surface(st_surface);
        Polarization h = polarization_from_json(load_json(st_h), s);
        Json j;
        j["command"] = "stab check";
        bool pass = true;
        if (!st_exps.empty()) {
            ExponentConditionReport rep =
                exponent_conditions(s, exponents_from_json(load_json(st_exps), s));
            j["polarization"] = polarization_json(polarization_report(s, h));
            j["exponents"] = exponent_conditions_json(rep);
            pass = rep.all() && polarization_report(s, h).all();
        } else if (!st_class.empty()) {
            NumClass f = numclass_from_json(load_json(st_class), s);
            HypothesisReport rep = hypothesis_report(s, f, h);
            j["polarization"] = polarization_json(rep.polarization);
            j["exponents"] = exponent_conditions_json(rep.exponents);
            j["admits"] = rep.admits;
            j["Delta"] = rat_to_json(rep.discriminant);
            j["threshold"] = rat_to_json(rep.threshold);
            j["discriminant_ok"] = rep.discriminant_ok;
            pass = rep.all();
        } else {
            PolarizationReport rep = polarization_report(s, h);
            j["polarization"] = polarization_json(rep);
            pass = rep.all();
        }
        j["pass"] = pass;
        emit(out, j);
        if (!pass) stab_rc = kCheckFailed;
    });

    auto* c_st_ext = c_stab->add_subcommand("ext1", "codimension quantity of a filtration type");
    c_st_ext->add_option("--surface", st_surface)->required();
    c_st_ext->add_option("--hn", st_hn, "[{\"r\":..,\"nu\":div,\"Delta\":rat},...]")->required();
    c_st_ext->add_option("--H", st_h);
    c_st_ext->callback([&] {
        SurfaceConfig s = load_surface(st_surface);
        Json arr = load_json(st_hn);
        HNData hn;
        for (const auto& g : arr) {
            HNData::Grading gr;
            gr.r = int_from_json(g.at("r"), "hn.r");
            gr.nu = divisor_from_json(g.at("nu"), s);
            gr.Delta = rat_from_json(g.at("Delta"), "hn.Delta");
            hn.gradings.push_back(std::move(gr));
        }
        std::optional<Polarization> h;
        if (!st_h.empty()) h = polarization_from_json(load_json(st_h), s);
        Ext1Report rep = ext1_plus(s, hn, h);
        Json j;
        j["command"] = "stab ext1";
        j["ext1_plus"] = rat_to_json(rep.ext1_plus);
        j["deltas_nonneg"] = rep.deltas_nonneg;
        j["slope_gaps_ok"] = rep.slope_gaps_ok;
        if (rep.slope_ordered) j["slope_ordered"] = *rep.slope_ordered;
        emit(out, j);
    });

    // ---------------------------------------------------------------- sd
    auto* c_sd = app.add_subcommand("sd", "orthogonal pairs and their numeric certificates");
    c_sd->require_subcommand(1);
    std::string sd_surface, sd_l, sd_h, sd_vexps;
    long long sd_r = 0, sd_ell = 0, sd_lam = 0;
    std::vector<long long> sd_lami, sd_lamj;
    int sd_rc = kOk;

    auto* c_sd_report = c_sd->add_subcommand("report", "full report for the pair (r, l, L)");
    c_sd_report->add_option("--surface", sd_surface)->required();
    c_sd_report->add_option("--r", sd_r)->required();
    c_sd_report->add_option("--ell", sd_ell)->required();
    c_sd_report->add_option("--L", sd_l)->required();
    c_sd_report->add_option("--H", sd_h);
    c_sd_report->callback([&] {
        SurfaceConfig s = load_surface(sd_surface);
        SDPair pair = make_pair(s, Int(sd_r), Int(sd_ell), divisor_from_json(load_json(sd_l), s));
        Json j;
        j["command"] = "sd report";
        j["sigma"] = to_json(pair.sigma);
        j["rho"] = to_json(pair.rho);
        j["v"] = to_json(pair.v);
        j["chi_tensor"] = rat_to_json(pairings(s, pair.sigma, pair.rho).chi_tensor);
        j["big_M"] = int_to_json(big_M(pair.r, pair.ell));
        ExponentsResult se = exponents(s, pair.sigma);
        j["sigma_admits"] = se.admits;
        j["sigma_exponents"] = to_json(se.exps);
        bool pass = true;
        if (!sd_h.empty() && !s.is_p2()) {
            Polarization h = polarization_from_json(load_json(sd_h), s);
            PositivityReport rep = positivity_report(s, pair, se.exps, h);
            j["positivity"] = positivity_json(rep);
            pass = rep.all();
        }
        ThetaReport theta = theta_on_hilb(s, pair);
        Json tj;
        tj["theta_base"] = to_json(theta.theta.base);
        tj["theta_e_coeff"] = rat_to_json(theta.theta.e_coeff);
        tj["K_base"] = to_json(theta.K_hilb.base);
        tj["vanishing_certified"] = theta.vanishing_sufficient;
        j["theta"] = std::move(tj);
        if (se.admits) {
            GaetaExponents ve =
                s.is_p2() ? exponents(s, pair.v).exps : v_exponents(s, se.exps, pair.ell);
            XiDimension xi = xi_dimension(s, pair, ve);
            Json xj;
            xj["v_exponents"] = to_json(ve);
            xj["hom_lambda_omega"] = int_to_json(xi.hom_lambda_omega);
            xj["dim"] = int_to_json(xi.dim_P);
            xj["rk_lambda"] = int_to_json(xi.rk_lambda);
            xj["rk_omega"] = int_to_json(xi.rk_omega);
            j["xi"] = std::move(xj);
        }
        if (pair.ell == 1) {
            NumbersMatchL1 nm = numbers_match_l1(s, pair);
            Json nj;
            nj["c2_v"] = int_to_json(nm.c2_v);
            nj["chi_L"] = int_to_json(nm.chi_L);
            nj["equal"] = nm.equal;
            j["numbers_match"] = std::move(nj);
        }
        j["pass"] = pass;
        emit(out, j);
        if (!pass) sd_rc = kCheckFailed;
    });

    auto* c_sd_bigm = c_sd->add_subcommand("bigm", "the constant M(r, l)");
    c_sd_bigm->add_option("--r", sd_r)->required();
    c_sd_bigm->add_option("--ell", sd_ell)->required();
    c_sd_bigm->callback([&] {
        Json j;
        j["command"] = "sd bigm";
        j["M"] = int_to_json(big_M(Int(sd_r), Int(sd_ell)));
        emit(out, j);
    });

    auto* c_sd_gap = c_sd->add_subcommand("stratum-gap", "ext bound vs stratum codimension");
    c_sd_gap->add_option("--surface", sd_surface)->required();
    c_sd_gap->add_option("--v-exponents", sd_vexps)->required();
    c_sd_gap->add_option("--ell", sd_ell)->required();
    c_sd_gap->add_option("--lam", sd_lam)->required();
    c_sd_gap->add_option("--lam-i", sd_lami);
    c_sd_gap->add_option("--lam-j", sd_lamj);
    c_sd_gap->callback([&] {
        SurfaceConfig s = load_surface(sd_surface);
        GaetaExponents ve = exponents_from_json(load_json(sd_vexps), s);
        std::vector<Int> li(sd_lami.begin(), sd_lami.end());
        std::vector<Int> lj(sd_lamj.begin(), sd_lamj.end());
        StratumGap g = stratum_gap(s, ve, Int(sd_ell), Int(sd_lam), lj, li);
        Json j;
        j["command"] = "sd stratum-gap";
        j["ext1_bound"] = int_to_json(g.ext1_bound);
        j["stratum_codim"] = int_to_json(g.stratum_codim);
        j["gap"] = int_to_json(g.gap);
        bool all_equal = sd_lam > 0;
        for (auto x : sd_lami)
            if (x != sd_lam) all_equal = false;
        for (auto x : sd_lamj)
            if (x != sd_lam) all_equal = false;
        if (all_equal && sd_lam > 0) j["note"] = "all-equal stratum: no sign verdict applies";
        emit(out, j);
    });

    // ------------------------------------------------------------- sweep
    auto* c_sweep = app.add_subcommand("sweep", "deterministic property sweeps");
    c_sweep->require_subcommand(1);
    long long sw_n = 500, sw_seed = 0, sw_emax = 4, sw_tmax = 4, sw_range = 12;
    int sweep_rc = kOk;

    auto add_sweep = [&](const std::string& name, const std::string& desc, auto fn, bool seeded) {
        auto* c = c_sweep->add_subcommand(name, desc);
        if (seeded) {
            c->add_option("--n", sw_n);
            c->add_option("--seed", sw_seed);
        }
        c->callback([&, fn] { sweep_rc = fn(); });
        return c;
    };

    {
        auto* c = c_sweep->add_subcommand("cohom-oracle", "exhaustive h^0 oracle comparison");
        c->add_option("--e-max", sw_emax);
        c->add_option("--range", sw_range);
        c->callback([&] { sweep_rc = sweep_cohom_oracle(static_cast<int>(sw_emax), sw_range, out); });
    }
    {
        auto* c = c_sweep->add_subcommand("exc-all", "verify all sequences up to a point count");
        c->add_option("--e-max", sw_emax);
        c->add_option("--t-max", sw_tmax);
        c->callback([&] { sweep_rc = sweep_exc(static_cast<int>(sw_emax), static_cast<int>(sw_tmax), out); });
    }
    add_sweep("gaeta-roundtrip", "exponents and class reconstruction agree",
              [&] { return sweep_gaeta_roundtrip(sw_n, static_cast<uint64_t>(sw_seed), out); }, true);
    add_sweep("orthogonality", "chi_tensor(sigma, rho) = 0",
              [&] { return sweep_orthogonality(sw_n, static_cast<uint64_t>(sw_seed), out); }, true);
    add_sweep("numbers-match", "l = 1 counting identity",
              [&] { return sweep_numbers_match(sw_n, static_cast<uint64_t>(sw_seed), out); }, true);
    add_sweep("twist", "twist search succeeds above the window bound",
              [&] { return sweep_twist(sw_n, static_cast<uint64_t>(sw_seed), out); }, true);
    add_sweep("stratum-gap", "gap <= 0 under the dimension-count hypotheses",
              [&] { return sweep_stratum_gap(sw_n, static_cast<uint64_t>(sw_seed), out); }, true);
    add_sweep("ext1", "ext1_plus matches the pairing sum",
              [&] { return sweep_ext1(sw_n, static_cast<uint64_t>(sw_seed), out); }, true);

    std::vector<std::string> argv = args;
    std::vector<char*> ptrs;
    ptrs.push_back(const_cast<char*>("ratsurf"));
    for (auto& a : argv) ptrs.push_back(a.data());
    try {
        app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help and friends
        err << "error: " << e.what() << "\n";
        return kUnsupported;
    }
    for (int rc : {cohom_rc, exc_rc, gaeta_rc, stab_rc, sd_rc, sweep_rc})
        if (rc != kOk) return rc;
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const JsonError& e) {
        err << "error: " << e.what() << "\n";
        return kUnsupported;
    } catch (const Incomplete& e) {
        err << "error: " << e.what() << "\n";
        return kUnsupported;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUnsupported;
    }
}

}  // namespace ratsurf::cli
