#include "ratsurf/exceptional.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ratsurf;

TEST_CASE("sequence shapes") {
    SurfaceConfig p2 = SurfaceConfig::p2();
    ExcSequence sp = sequence(p2);
    CHECK(sp.n() == 3);
    CHECK(sp.d == 1);
    CHECK(sp.bundles == std::vector<DivClass>{DivClass::hyperplane(-2), DivClass::hyperplane(-1),
                                              DivClass::hyperplane(0)});

    SurfaceConfig f2 = SurfaceConfig::hirzebruch(2);
    ExcSequence sf = sequence(f2);
    CHECK(sf.n() == 4);
    CHECK(sf.d == 1);
    const DivClass A = DivClass::fiber_A(f2), C = DivClass::section_C(f2);
    CHECK(sf.bundles[0] == -(C + A));
    CHECK(sf.bundles[1] == -C);
    CHECK(sf.bundles[2] == -A);
    CHECK(sf.bundles[3] == DivClass::zero(f2));

    // one point of height 0 carrying one infinitely-near point: t = 2
    SurfaceConfig x = SurfaceConfig::blowup(1, 1, {1});
    ExcSequence sx = sequence(x);
    CHECK(sx.n() == 6);
    CHECK(sx.d == 2);
    CHECK(sx.bundles[1] == -(DivClass::section_C(x) + DivClass::fiber_A(x)) + DivClass::exceptional(x, 2));
    CHECK(sx.bundles[4] == -DivClass::exceptional(x, 1));

    CHECK_THROWS_AS(sequence(SurfaceConfig::blowup(0, 1, {})), InadmissibleSurface);
}

TEST_CASE("dual sequence objects") {
    SurfaceConfig fe = SurfaceConfig::hirzebruch(2);
    auto duals = dual_sequence(fe);
    REQUIRE(duals.size() == 4);
    // indexed against the sequence: shifts 2, 1, 1, 0
    CHECK(duals[0].shift == 2);
    CHECK(duals[1].shift == 1);
    CHECK(duals[2].shift == 1);
    CHECK(duals[3].shift == 0);
    CHECK(*duals[3].bundle == DivClass::zero(fe));
    CHECK(*duals[0].bundle == DivClass::fiber_A(fe) + DivClass::section_B(fe));

    SurfaceConfig p2 = SurfaceConfig::p2();
    auto dp = dual_sequence(p2);
    REQUIRE(dp.size() == 3);
    CHECK(dp[1].kind == DualKind::TangentTwist);
    CHECK(dp[1].kclass == NumClass{2, DivClass::hyperplane(1), 3});
    CHECK(dp[1].shift == 1);

    SurfaceConfig x = SurfaceConfig::blowup(1, 1, {});
    auto dx = dual_sequence(x);
    REQUIRE(dx.size() == 5);
    bool found = false;
    for (const auto& v : dx)
        if (v.kind == DualKind::ExceptionalStructureSheaf && v.exc_index == 1 && v.shift == 1) {
            CHECK(v.kclass == NumClass{0, DivClass::exceptional(x, 1), 1});
            found = true;
        }
    CHECK(found);
}

TEST_CASE("sequence verification passes on the standard surfaces") {
    CHECK(verify_sequence(SurfaceConfig::p2()).passed);
    for (int e = 0; e <= 4; ++e) CHECK(verify_sequence(SurfaceConfig::hirzebruch(e)).passed);
    CHECK(verify_sequence(SurfaceConfig::blowup(3, 2, {1, 2})).passed);
}

TEST_CASE("a reversed sequence is rejected with a located pair") {
    SurfaceConfig f0 = SurfaceConfig::hirzebruch(0);
    auto bundles = sequence(f0).bundles;
    std::reverse(bundles.begin(), bundles.end());
    SequenceReport rep = verify_line_bundles(f0, bundles);
    CHECK_FALSE(rep.passed);
    auto fails = rep.failures();
    REQUIRE(!fails.empty());
    bool located = false;
    for (const auto& f : fails)
        if (f.i > f.j && f.h.h0 > 0) located = true;
    CHECK(located);
}

TEST_CASE("dual verification: identity pairing matrix") {
    for (int e = 0; e <= 3; ++e) {
        DualReport rep = verify_dual(SurfaceConfig::hirzebruch(e));
        CHECK(rep.passed);
        CHECK(rep.unknown_count == 0);
    }
    CHECK(verify_dual(SurfaceConfig::p2()).passed);
    CHECK(verify_dual(SurfaceConfig::blowup(2, 2, {1})).passed);
}

TEST_CASE("a perturbed dual list fails") {
    SurfaceConfig fe = SurfaceConfig::hirzebruch(1);
    auto duals = dual_sequence(fe);
    std::swap(duals[0], duals[1]);
    CHECK_FALSE(verify_dual_objects(fe, duals).passed);
}

TEST_CASE("lambda matrix") {
    SurfaceConfig f0 = SurfaceConfig::hirzebruch(0);
    GaetaExponents exps = GaetaExponents::for_blowup(1, 1, 1, 1, {}, {});
    auto m = lambda_matrix(f0, exps);
    std::vector<std::vector<Int>> expected = {
        {-1, 0, 0, 0}, {2, 1, 0, 0}, {2, 0, 1, 0}, {4, 2, 2, 1}};
    CHECK(m == expected);

    // the matrix depends only on the surface, not the exponent values
    GaetaExponents other = GaetaExponents::for_blowup(7, 0, 3, 9, {}, {});
    CHECK(lambda_matrix(f0, other) == expected);

    for (const auto& s : rtest::standard_surfaces()) {
        GaetaExponents shape =
            s.is_p2() ? GaetaExponents::for_p2(0, 0, 0)
                      : GaetaExponents::for_blowup(0, 0, 0, 0,
                                                   std::vector<Int>(static_cast<size_t>(s.s0_count())),
                                                   std::vector<Int>(static_cast<size_t>(s.s1_count())));
        auto mm = lambda_matrix(s, shape);  // throws if triangularity fails
        int d = sequence(s).d;
        for (size_t i = 0; i < mm.size(); ++i)
            CHECK(mm[i][i] == (static_cast<int>(i) < d ? -1 : 1));
    }
}

TEST_CASE("perp test") {
    Sampler rng(47);
    for (const auto& s : rtest::standard_surfaces()) {
        ExcSequence seq = sequence(s);
        for (int k = 0; k < 20; ++k) {
            NumClass f = rtest::random_positive_rank_class(rng, s, 4, 6);
            std::vector<Rat> chi = perp_functional(s, f);
            std::vector<Int> zero(chi.size(), Int(0));
            CHECK(perp_test(s, zero, f));

            // a kernel vector of the functional: (chi_2, -chi_1, 0, ...)
            std::vector<Int> w(chi.size(), Int(0));
            w[0] = to_int(chi[1]);
            w[1] = -to_int(chi[0]);
            CHECK(perp_test(s, w, f));

            if (chi[0] != 0) {
                std::vector<Int> e1(chi.size(), Int(0));
                e1[0] = 1;
                CHECK_FALSE(perp_test(s, e1, f));
            }

            // linearity: membership is stable under sums of kernel vectors
            std::vector<Int> w2(chi.size(), Int(0));
            w2[1] = to_int(chi[2]);
            w2[2] = -to_int(chi[1]);
            std::vector<Int> sum(chi.size());
            for (size_t i = 0; i < sum.size(); ++i) sum[i] = w[i] + w2[i];
            CHECK(perp_test(s, w2, f));
            CHECK(perp_test(s, sum, f));
        }
    }
}
