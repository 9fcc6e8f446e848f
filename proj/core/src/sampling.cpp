#include "ratsurf/sampling.hpp"

#include "ratsurf/gaeta.hpp"

namespace ratsurf {

NumClass Sampler::admitting_class(const SurfaceConfig& s, long max_exp) {
    GaetaExponents e;
    if (s.is_p2()) {
        e = GaetaExponents::for_p2(uniform_int(0, max_exp), uniform_int(0, max_exp),
                                   uniform_int(0, max_exp));
    } else {
        std::vector<Int> gi, gj;
        for (int i = 0; i < s.s0_count(); ++i) gi.push_back(uniform_int(0, max_exp));
        for (int j = 0; j < s.s1_count(); ++j) gj.push_back(uniform_int(0, max_exp));
        e = GaetaExponents::for_blowup(uniform_int(0, max_exp), uniform_int(0, max_exp),
                                       uniform_int(0, max_exp), uniform_int(0, max_exp),
                                       std::move(gi), std::move(gj));
    }
    // top up the trailing exponent so the cokernel rank is non-negative
    if (e.rank() < 0) (s.is_p2() ? e.alpha3 : e.alpha4) -= e.rank();
    return class_of(s, e);
}

}  // namespace ratsurf
