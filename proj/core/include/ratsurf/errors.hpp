#pragma once

#include <stdexcept>
#include <string>

namespace ratsurf {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Divisor/class data does not match the surface (wrong number of exceptional
// coefficients, non-integral input where an integral one is required, ...).
struct DimensionMismatch : Error {
    using Error::Error;
};

// Slope or discriminant requested for a rank-0 class.
struct RankZero : Error {
    using Error::Error;
};

// An operation that needs the exceptional-divisor calculus was invoked on a
// blowup configuration that is not admissible.
struct InadmissibleSurface : Error {
    using Error::Error;
};

// Blowup-basis operation invoked on P^2.
struct P2Unsupported : Error {
    using Error::Error;
};

// A stated precondition on arguments fails.
struct Precondition : Error {
    using Error::Error;
};

// A verification step needed an exact cohomology value the rule engine could
// not produce.
struct Incomplete : Error {
    using Error::Error;
};

}  // namespace ratsurf
