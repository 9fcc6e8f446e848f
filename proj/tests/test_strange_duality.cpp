#include "ratsurf/strange_duality.hpp"

#include "ratsurf/gaeta.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace ratsurf;

TEST_CASE("pair construction") {
    SurfaceConfig f0 = SurfaceConfig::hirzebruch(0);
    DivClass l(2, 2, {});
    SDPair p = make_pair(f0, 2, 2, l);
    CHECK(p.sigma == NumClass{2, l, 4});
    CHECK(p.rho == NumClass{1, DivClass::zero(f0), -1});
    CHECK(p.v == NumClass{3, l, 3});

    SDPair p1 = make_pair(f0, 3, 1, l);
    CHECK(p1.rho == NumClass{1, DivClass::zero(f0), 0});

    CHECK_THROWS_AS(make_pair(f0, 1, 2, l), Precondition);
    CHECK_THROWS_AS(make_pair(f0, 2, 0, l), Precondition);

    Sampler rng(83);
    for (const auto& s : rtest::standard_surfaces())
        for (int k = 0; k < 25; ++k) {
            SDPair q = make_pair(s, rng.uniform_int(2, 5), rng.uniform_int(1, 4), rng.divisor(s, -7, 7));
            CHECK(pairings(s, q.sigma, q.rho).chi_tensor == 0);
        }
}

TEST_CASE("exponents of v from exponents of sigma") {
    SurfaceConfig f0 = SurfaceConfig::hirzebruch(0);
    GaetaExponents se = GaetaExponents::for_blowup(3, 1, 1, 4, {}, {});  // r = 2, l = 2
    GaetaExponents ve = v_exponents(f0, se, 2);
    CHECK(ve == GaetaExponents::for_blowup(5, 3, 3, 3, {}, {}));

    // l = 1 leaves alpha4 unchanged
    GaetaExponents se1 = GaetaExponents::for_blowup(2, 1, 1, 2, {}, {});
    CHECK(v_exponents(f0, se1, 1).alpha4 == se1.alpha4);

    Sampler rng(89);
    for (const auto& s : rtest::blowup_surfaces()) {
        for (int k = 0; k < 60; ++k) {
            Int r = rng.uniform_int(2, 4), ell = rng.uniform_int(1, 3);
            // build an admitting sigma with alpha4 = r*l by adjusting chi last
            DivClass l = DivClass::zero(s);
            l.a = rng.uniform(20, 40);
            l.b = rng.uniform(10, 20);
            for (int i = 1; i <= s.s0_count(); ++i) l.g[static_cast<size_t>(i - 1)] = -rng.uniform(2, 4);
            for (int j = s.s0_count() + 1; j <= s.t(); ++j) l.g[static_cast<size_t>(j - 1)] = -rng.uniform(0, 2);
            SDPair p = make_pair(s, r, ell, l);
            ExponentsResult se_r = exponents(s, p.sigma);
            if (!se_r.admits) continue;
            CHECK(v_exponents(s, se_r.exps, ell) == exponents(s, p.v).exps);
        }
    }
}

TEST_CASE("the combinatorial constant M") {
    CHECK(big_M(2, 2) == 6);
    CHECK(big_M(3, 2) == 8);
    for (long r = 1; r <= 6; ++r) CHECK(big_M(r, 1) == r + 1);
    CHECK_THROWS_AS(big_M(0, 1), Precondition);
}

TEST_CASE("positivity suites: frozen verdicts") {
    SurfaceConfig f0 = SurfaceConfig::hirzebruch(0);
    Polarization h{13, 1, {}};  // lambda = 13 pins the discriminant verdicts below

    DivClass big(20, 20, {});
    SDPair p_big = make_pair(f0, 2, 2, big);
    PositivityReport rep = positivity_report(f0, p_big, exponents(f0, p_big.sigma).exps, h);
    CHECK(rep.a1_admits);
    CHECK(rep.a2_gammas);
    CHECK(rep.a2_alphadelta);
    CHECK(rep.a4_discriminant);
    CHECK(rep.a6_theta_vanishing);
    CHECK(rep.dim_count_hyp);
    CHECK(rep.all());

    DivClass small(3, 3, {});
    SDPair p_small = make_pair(f0, 2, 2, small);
    PositivityReport rs = positivity_report(f0, p_small, exponents(f0, p_small.sigma).exps, h);
    CHECK_FALSE(rs.a4_discriminant);  // P(L/2) = 25/4 just misses 163/26 + ... threshold + l

    SurfaceConfig x = SurfaceConfig::blowup(1, 1, {1});
    Polarization hx{3, 2, {Rat(1, 2), Rat(1, 4)}};
    Int M = big_M(2, 2);
    DivClass lx = DivClass::zero(x);
    lx.a = 60;
    lx.b = 30;
    lx.g[0] = -(M + M + 2);  // gamma_i >= M + child
    lx.g[1] = -(M - 1);      // gamma_j one short of M
    SDPair px = make_pair(x, 2, 2, lx);
    PositivityReport rx = positivity_report(x, px, exponents(x, px.sigma).exps, hx);
    CHECK_FALSE(rx.a2_gammas);
}

TEST_CASE("determinant class on the Hilbert scheme") {
    SurfaceConfig f0 = SurfaceConfig::hirzebruch(0);
    DivClass l(2, 2, {});
    SDPair p = make_pair(f0, 2, 1, l);
    ThetaReport rep = theta_on_hilb(f0, p);
    CHECK(rep.theta.base == l);
    CHECK(rep.theta.e_coeff == Rat(-1));  // -r/2
    CHECK(rep.K_hilb.base == canonical_class(f0));
    CHECK(rep.K_hilb.e_coeff == 0);
    CHECK(rep.vanishing_sufficient);  // l - K = 4A+4B is very ample, l = 1

    DivClass l22(20, 20, {});
    SDPair p22 = make_pair(f0, 2, 2, l22);
    CHECK(theta_on_hilb(f0, p22).vanishing_sufficient);  // weights 22 >= 2 + 1

    SDPair plow = make_pair(f0, 2, 2, DivClass::zero(f0));
    CHECK_FALSE(theta_on_hilb(f0, plow).vanishing_sufficient);  // weights of -K fall below l + (r-1)(l-1)
}

TEST_CASE("dimension identity for the space of commuting squares") {
    SurfaceConfig f0 = SurfaceConfig::hirzebruch(0);
    DivClass l(2, 2, {});
    SDPair p = make_pair(f0, 2, 2, l);
    GaetaExponents ve = v_exponents(f0, exponents(f0, p.sigma).exps, 2);
    CHECK(ve == GaetaExponents::for_blowup(4, 2, 2, 3, {}, {}));
    XiDimension xi = xi_dimension(f0, p, ve);
    CHECK(xi.hom_lambda_omega == 80);
    CHECK(xi.dim_P == 79);
    CHECK(xi.formula_value == 79);
    CHECK(xi.rk_lambda - xi.rk_omega == p.r + 1);

    Sampler rng(97);
    for (const auto& s : rtest::blowup_surfaces()) {
        for (int k = 0; k < 20; ++k) {
            Int r = rng.uniform_int(2, 4), ell = rng.uniform_int(1, 3);
            Int M = big_M(r, ell);
            DivClass lr = DivClass::zero(s);
            for (int j = s.s0_count() + 1; j <= s.t(); ++j)
                lr.g[static_cast<size_t>(j - 1)] = -(M + rng.uniform(0, 3));
            for (int i = 1; i <= s.s0_count(); ++i) {
                Rat child = 0;
                for (int j : s.children_of(i)) child += -lr.g[static_cast<size_t>(j - 1)];
                lr.g[static_cast<size_t>(i - 1)] = -(child + M + rng.uniform(0, 3));
            }
            Rat sum_gi = 0;
            for (int i = 1; i <= s.s0_count(); ++i) sum_gi += -lr.g[static_cast<size_t>(i - 1)];
            Rat base = Rat(M) + sum_gi + Rat(r) * (Rat(ell) - 1) + rng.uniform(0, 5);
            lr.b = base;                          // delta = base
            lr.a = base + Rat(s.e()) * lr.b;      // alpha = base
            SDPair pr = make_pair(s, r, ell, lr);
            ExponentsResult se = exponents(s, pr.sigma);
            REQUIRE(se.admits);
            XiDimension xr = xi_dimension(s, pr, v_exponents(s, se.exps, ell));
            CHECK(xr.formula_value == xr.dim_P);
            CHECK(xr.rk_lambda - xr.rk_omega == r + 1);
        }
    }
}

TEST_CASE("dimension identity on P^2") {
    SurfaceConfig p2 = SurfaceConfig::p2();
    SDPair p = make_pair(p2, 2, 1, DivClass::hyperplane(4));
    ExponentsResult ev = exponents(p2, p.v);
    REQUIRE(ev.admits);
    XiDimension xi = xi_dimension(p2, p, ev.exps);
    CHECK(xi.hom_lambda_omega == 150);
    CHECK(xi.dim_P == 149);
    CHECK(xi.formula_value == 149);
    CHECK(xi.rk_lambda == 8);
    CHECK(xi.rk_omega == 5);
}

TEST_CASE("stratum gap") {
    SurfaceConfig x = SurfaceConfig::blowup(1, 1, {1});
    Int r = 2, ell = 2;
    Int M = big_M(r, ell);
    // a4 = (r-1)l + 1 and a1 pinned so that the cokernel rank is r + 1
    std::vector<Int> gi_one = {2 * (M + ell)};
    std::vector<Int> gj_one = {M + ell};
    Int a4 = (r - 1) * ell + 1;
    Int a1 = M + M + gi_one[0] + a4 - gj_one[0] - (r + 1);
    GaetaExponents ve = GaetaExponents::for_blowup(a1, M, M, a4, gi_one, gj_one);

    StratumGap zero = stratum_gap(x, ve, ell, 0, {0}, {0});
    CHECK(zero.ext1_bound == 0);
    CHECK(zero.stratum_codim == 0);
    CHECK(zero.gap == 0);

    // lambda = 1 with a vanishing lambda_i: the gamma_i bound dominates
    StratumGap g1 = stratum_gap(x, ve, ell, 1, {1}, {0});
    CHECK(g1.gap <= 0);

    CHECK_THROWS_AS(stratum_gap(x, ve, ell, 3, {0}, {0}), Precondition);
    CHECK_THROWS_AS(stratum_gap(x, ve, ell, 1, {0}, {2}), Precondition);

    Sampler rng(101);
    for (const auto& s : rtest::blowup_surfaces()) {
        for (int k = 0; k < 200; ++k) {
            Int rr = rng.uniform_int(2, 4), ll = rng.uniform_int(1, 3);
            Int MM = big_M(rr, ll);
            std::vector<Int> gj(static_cast<size_t>(s.s1_count()));
            for (auto& g : gj) g = MM + ll + rng.uniform_int(0, 3);
            std::vector<Int> gi(static_cast<size_t>(s.s0_count()));
            for (int i = 1; i <= s.s0_count(); ++i) {
                Int child = 0;
                for (int j : s.children_of(i)) child += gj[static_cast<size_t>(j - s.s0_count() - 1)];
                gi[static_cast<size_t>(i - 1)] = MM + ll + child + rng.uniform_int(0, 3);
            }
            Int a2 = MM + rng.uniform_int(0, 4), a3 = MM + rng.uniform_int(0, 4);
            Int va4 = (rr - 1) * ll + 1;
            Int sum_gi = 0, sum_gj = 0;
            for (const auto& g : gi) sum_gi += g;
            for (const auto& g : gj) sum_gj += g;
            Int va1 = a2 + a3 + sum_gi + va4 - sum_gj - (rr + 1);
            GaetaExponents v = GaetaExponents::for_blowup(va1, a2, a3, va4, gi, gj);
            Int lambda;
            std::vector<Int> li(static_cast<size_t>(s.s0_count())), lj(static_cast<size_t>(s.s1_count()));
            while (true) {
                lambda = rng.uniform_int(0, static_cast<long>(ll));
                for (auto& t : lj) t = rng.uniform_int(0, static_cast<long>(ll));
                for (int i = 1; i <= s.s0_count(); ++i) {
                    Int cap = lambda;
                    for (int j : s.children_of(i))
                        cap = std::min(cap, lj[static_cast<size_t>(j - s.s0_count() - 1)]);
                    li[static_cast<size_t>(i - 1)] = rng.uniform_int(0, static_cast<long>(cap));
                }
                bool all_equal = lambda > 0;
                for (const auto& t : li)
                    if (t != lambda) all_equal = false;
                for (const auto& t : lj)
                    if (t != lambda) all_equal = false;
                if (!all_equal) break;
            }
            CHECK(stratum_gap(s, v, ll, lambda, lj, li).gap <= 0);
        }
    }
}

TEST_CASE("l = 1 counting identity") {
    SurfaceConfig f0 = SurfaceConfig::hirzebruch(0);
    SDPair p = make_pair(f0, 2, 1, DivClass(2, 2, {}));
    NumbersMatchL1 nm = numbers_match_l1(f0, p);
    CHECK(nm.c2_v == 9);
    CHECK(nm.chi_L == 9);
    CHECK(nm.equal);

    SDPair pz = make_pair(f0, 2, 1, DivClass::zero(f0));
    NumbersMatchL1 nz = numbers_match_l1(f0, pz);
    CHECK(nz.c2_v == 1);
    CHECK(nz.chi_L == 1);

    CHECK_THROWS_AS(numbers_match_l1(f0, make_pair(f0, 2, 2, DivClass(2, 2, {}))), Precondition);

    Sampler rng(103);
    for (const auto& s : rtest::standard_surfaces())
        for (int k = 0; k < 60; ++k) {
            SDPair q = make_pair(s, rng.uniform_int(2, 5), 1, rng.divisor(s, -10, 10));
            CHECK(numbers_match_l1(s, q).equal);
        }
}
