#pragma once

// Exact arithmetic used everywhere in the library: arbitrary-precision
// integers and rationals. No floating point is used in any computation.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ratsurf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rat& x) { return den(x) == 1; }

// Exact conversion; throws if x has a nontrivial denominator.
inline Int to_int(const Rat& x) {
    if (!is_integer(x)) throw std::domain_error("expected an integer, got " + x.str());
    return num(x);
}

inline Int floor_rat(const Rat& x) {
    Int n = num(x), d = den(x);  // d > 0
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline Int ceil_rat(const Rat& x) {
    Int n = num(x), d = den(x);
    Int q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

// Smallest non-negative integer n with n*n >= x. Requires x >= 0 callers
// clamp negative arguments themselves.
inline Int ceil_sqrt(const Rat& x) {
    if (x <= 0) return 0;
    Int c = ceil_rat(x);
    Int r = boost::multiprecision::sqrt(c);  // floor sqrt of the integer ceiling
    while (r * r < x) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= x) --r;
    return r;
}

inline Int binom2(const Int& n) { return n * (n - 1) / 2; }  // C(n,2), any integer n

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rat& x) {
    if (is_integer(x)) return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

// Parses "p" or "p/q" (q > 0 after normalisation). Returns nullopt on syntax
// errors so callers can report the offending field.
std::optional<Rat> parse_rat(std::string_view text);

}  // namespace ratsurf
