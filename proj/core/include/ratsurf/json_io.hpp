#pragma once

// JSON encodings of the core data types.
//
//   surface:      {"kind":"p2"} or
//                 {"kind":"blowup","e":int,"s0":int,"s1_parents":[int,...],
//                  "avoids_b":bool,"avoids_fiber_directions":bool}
//   divisor:      {"a":rat,"b":rat,"e":[rat,...]}
//   class:        {"r":int,"c1":divisor,"chi":int}
//   polarization: {"u":rat,"v":rat,"d":[rat,...]}
//   exponents:    {"alpha1":..,"alpha2":..,"alpha3":..,"alpha4":..,
//                  "gamma_s0":[..],"gamma_s1":[..]}  (P^2: {"a1","a2","a3"})
//
// Rationals travel as "p/q" strings ("p" when integral); plain JSON numbers
// are accepted on input.  Parse errors throw JsonError with a field path.

#include "ratsurf/cohomology.hpp"
#include "ratsurf/exponents.hpp"
#include "ratsurf/surface.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace ratsurf {

using Json = nlohmann::json;

struct JsonError : Error {
    using Error::Error;
};

Json rat_to_json(const Rat& x);
Rat rat_from_json(const Json& j, const std::string& where);
Json int_to_json(const Int& x);
Int int_from_json(const Json& j, const std::string& where);

Json to_json(const SurfaceConfig& s);
SurfaceConfig surface_from_json(const Json& j);

Json to_json(const DivClass& d);
DivClass divisor_from_json(const Json& j, const SurfaceConfig& s);

Json to_json(const NumClass& f);
NumClass numclass_from_json(const Json& j, const SurfaceConfig& s);

Json to_json(const Polarization& h);
Polarization polarization_from_json(const Json& j, const SurfaceConfig& s);

Json to_json(const GaetaExponents& e);
GaetaExponents exponents_from_json(const Json& j, const SurfaceConfig& s);

Json to_json(const CohomResult& r);  // {"h":[h0,h1,h2]} or {"unknown":true,"chi":n}

}  // namespace ratsurf
