#include "ratsurf/stability.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace ratsurf;

TEST_CASE("polarization report on a ruled surface") {
    SurfaceConfig f1 = SurfaceConfig::hirzebruch(1);
    Polarization h{3, 2, {}};
    PolarizationReport rep = polarization_report(f1, h);
    CHECK(rep.lambda == 2);
    CHECK(rep.positive_combination);
    CHECK(rep.ratio_bound);
    CHECK(rep.sqrt_bound);
    CHECK(rep.h_k_plus_a_negative);
    CHECK(rep.h_k_plus_2a_negative);
    CHECK(rep.all());
}

TEST_CASE("polarization report on a two-step blowup") {
    SurfaceConfig x = SurfaceConfig::blowup(1, 1, {1});
    Polarization good{3, 2, {Rat(1, 2), Rat(1, 4)}};
    PolarizationReport rg = polarization_report(x, good);
    CHECK(rg.lambda == 2);
    CHECK(rg.all());

    // d_i too close to v: the ratio condition fails while the positivity
    // of the combination still holds
    Polarization bad{3, 2, {Rat(3, 2), Rat(1, 4)}};
    PolarizationReport rb = polarization_report(x, bad);
    CHECK(rb.positive_combination);
    CHECK_FALSE(rb.ratio_bound);  // (3/2)/2 = 3/4 > lambda/(lambda+1) = 2/3
    CHECK_FALSE(rb.all());

    // a child outweighing its parent breaks the positive combination
    Polarization skew{3, 2, {Rat(1, 4), Rat(1, 2)}};
    CHECK_FALSE(polarization_report(x, skew).positive_combination);
}

TEST_CASE("exponent conditions") {
    SurfaceConfig fe = SurfaceConfig::hirzebruch(1);
    ExponentConditionReport ok =
        exponent_conditions(fe, GaetaExponents::for_blowup(4, 1, 1, 4, {}, {}));
    CHECK(ok.rank_ge_2);
    CHECK(ok.gamma_chain);
    CHECK(ok.alpha4_sum);
    CHECK(ok.all_positive);
    CHECK(ok.all());

    // rank 1 fails
    ExponentConditionReport r1 =
        exponent_conditions(fe, GaetaExponents::for_blowup(2, 1, 1, 1, {}, {}));
    CHECK_FALSE(r1.rank_ge_2);

    // gamma_i equal to the children sum is one short
    SurfaceConfig x = SurfaceConfig::blowup(1, 1, {1});
    ExponentConditionReport gc =
        exponent_conditions(x, GaetaExponents::for_blowup(2, 3, 3, 6, {2}, {2}));
    CHECK_FALSE(gc.gamma_chain);
}

TEST_CASE("discriminant threshold") {
    SurfaceConfig x = SurfaceConfig::blowup(1, 1, {1});
    Polarization h{3, 2, {Rat(1, 2), Rat(1, 4)}};  // lambda = 2, t = 2
    CHECK(discriminant_threshold(x, h, 2) == Rat(15, 8));

    SurfaceConfig f1 = SurfaceConfig::hirzebruch(1);
    Polarization h2{Rat(1, 2), 1, {}};  // lambda = 1
    CHECK(discriminant_threshold(f1, h2, 1) == 2);

    Sampler rng(71);
    for (int k = 0; k < 50; ++k) {
        Int r = rng.uniform_int(1, 10);
        CHECK(discriminant_threshold(f1, h2, r) > discriminant_threshold(f1, h2, r + 1));
    }
    CHECK_THROWS_AS(discriminant_threshold(f1, h2, 0), Precondition);
}

TEST_CASE("ext1_plus basics") {
    SurfaceConfig f0 = SurfaceConfig::hirzebruch(0);
    HNData single;
    single.gradings.push_back(HNData::Grading{2, DivClass(Rat(1, 2), Rat(1, 2), {}), Rat(3, 4)});
    CHECK(ext1_plus(f0, single).ext1_plus == 0);

    HNData two;
    DivClass nu = DivClass(1, 1, {});
    two.gradings.push_back(HNData::Grading{1, nu, 1});
    two.gradings.push_back(HNData::Grading{1, nu, 1});
    CHECK(ext1_plus(f0, two).ext1_plus == 1);  // 1+1 - P(0)

    CHECK_THROWS_AS(ext1_plus(f0, HNData{}), Precondition);
}

TEST_CASE("ext1_plus equals the pairing sum") {
    Sampler rng(73);
    for (const auto& s : rtest::standard_surfaces()) {
        for (int k = 0; k < 40; ++k) {
            long len = rng.uniform(1, 4);
            std::vector<NumClass> classes;
            HNData hn;
            for (long i = 0; i < len; ++i) {
                NumClass f = rtest::random_positive_rank_class(rng, s, 4, 5);
                Invariants inv = invariants(s, f);
                hn.gradings.push_back(HNData::Grading{f.r, inv.nu, inv.Delta});
                classes.push_back(std::move(f));
            }
            Rat expected = 0;
            for (size_t i = 0; i < classes.size(); ++i)
                for (size_t j = i + 1; j < classes.size(); ++j)
                    expected -= pairings(s, classes[i], classes[j]).chi_hom;
            CHECK(ext1_plus(s, hn).ext1_plus == expected);
        }
    }
}

TEST_CASE("ext1_plus is non-negative when all pairings are non-positive") {
    Sampler rng(79);
    SurfaceConfig f1 = SurfaceConfig::hirzebruch(1);
    int found = 0;
    for (int k = 0; k < 400 && found < 40; ++k) {
        NumClass f1c = rtest::random_positive_rank_class(rng, f1, 3, 4);
        NumClass f2c = rtest::random_positive_rank_class(rng, f1, 3, 4);
        if (pairings(f1, f1c, f2c).chi_hom > 0) continue;
        ++found;
        HNData hn;
        for (const auto& f : {f1c, f2c}) {
            Invariants inv = invariants(f1, f);
            hn.gradings.push_back(HNData::Grading{f.r, inv.nu, inv.Delta});
        }
        CHECK(ext1_plus(f1, hn).ext1_plus >= 0);
    }
    CHECK(found > 0);
}

TEST_CASE("slope ordering flag") {
    SurfaceConfig f1 = SurfaceConfig::hirzebruch(1);
    Polarization h{3, 2, {}};
    HNData hn;
    hn.gradings.push_back(HNData::Grading{1, DivClass(2, 1, {}), 0});
    hn.gradings.push_back(HNData::Grading{1, DivClass(0, 0, {}), 0});
    Ext1Report rep = ext1_plus(f1, hn, h);
    REQUIRE(rep.slope_ordered.has_value());
    CHECK(*rep.slope_ordered);
    std::swap(hn.gradings[0], hn.gradings[1]);
    CHECK_FALSE(*ext1_plus(f1, hn, h).slope_ordered);
}

TEST_CASE("aggregated hypothesis report") {
    SurfaceConfig f1 = SurfaceConfig::hirzebruch(1);
    Polarization h{3, 2, {}};
    // large discriminant, rank 2, all exponents positive
    NumClass f{2, DivClass(14, 7, {}), 4};
    HypothesisReport rep = hypothesis_report(f1, f, h);
    CHECK(rep.admits);
    CHECK(rep.exponents.all());
    CHECK(rep.polarization.all());
    CHECK(rep.discriminant_ok);
    CHECK(rep.all());

    NumClass small{2, DivClass(2, 2, {}), 4};
    CHECK_FALSE(hypothesis_report(f1, small, h).discriminant_ok);
}
