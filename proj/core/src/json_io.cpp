#include "ratsurf/json_io.hpp"

#include <limits>

namespace ratsurf {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw JsonError(where + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, "missing field '" + key + "'");
    return *it;
}

}  // namespace

Json rat_to_json(const Rat& x) { return rat_to_string(x); }

Rat rat_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) {
        auto r = parse_rat(j.get<std::string>());
        if (!r) fail(where, "not a rational: '" + j.get<std::string>() + "'");
        return *r;
    }
    fail(where, "expected an integer or a \"p/q\" string");
}

Json int_to_json(const Int& x) {
    // Values fitting a 64-bit integer travel as JSON numbers, larger ones
    // as strings; both forms are accepted on input.
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

Int int_from_json(const Json& j, const std::string& where) {
    Rat r = rat_from_json(j, where);
    if (!is_integer(r)) fail(where, "expected an integer");
    return num(r);
}

Json to_json(const SurfaceConfig& s) {
    Json j;
    if (s.is_p2()) {
        j["kind"] = "p2";
        return j;
    }
    j["kind"] = "blowup";
    j["e"] = s.e();
    j["s0"] = s.s0_count();
    Json parents = Json::array();
    for (int jj = s.s0_count() + 1; jj <= s.t(); ++jj) parents.push_back(s.parent_of(jj));
    j["s1_parents"] = std::move(parents);
    j["avoids_b"] = s.avoids_b();
    j["avoids_fiber_directions"] = s.avoids_fiber_directions();
    return j;
}

SurfaceConfig surface_from_json(const Json& j) {
    std::string kind = field(j, "kind", "surface").get<std::string>();
    if (kind == "p2") return SurfaceConfig::p2();
    if (kind != "blowup") fail("surface.kind", "expected \"p2\" or \"blowup\"");
    int e = field(j, "e", "surface").get<int>();
    int s0 = field(j, "s0", "surface").get<int>();
    std::vector<int> parents;
    for (const auto& p : field(j, "s1_parents", "surface")) parents.push_back(p.get<int>());
    bool ab = j.value("avoids_b", true);
    bool af = j.value("avoids_fiber_directions", true);
    return SurfaceConfig::blowup(e, s0, std::move(parents), ab, af);
}

Json to_json(const DivClass& d) {
    Json j;
    j["a"] = rat_to_json(d.a);
    j["b"] = rat_to_json(d.b);
    Json e = Json::array();
    for (const auto& x : d.g) e.push_back(rat_to_json(x));
    j["e"] = std::move(e);
    return j;
}

DivClass divisor_from_json(const Json& j, const SurfaceConfig& s) {
    DivClass d;
    d.a = rat_from_json(field(j, "a", "divisor"), "divisor.a");
    d.b = j.contains("b") ? rat_from_json(j.at("b"), "divisor.b") : Rat(0);
    if (j.contains("e"))
        for (const auto& x : j.at("e")) d.g.push_back(rat_from_json(x, "divisor.e"));
    if (!s.is_p2() && d.g.empty()) d.g.assign(static_cast<size_t>(s.t()), Rat(0));
    check_divisor(s, d);
    return d;
}

Json to_json(const NumClass& f) {
    Json j;
    j["r"] = int_to_json(f.r);
    j["c1"] = to_json(f.c1);
    j["chi"] = int_to_json(f.chi);
    return j;
}

NumClass numclass_from_json(const Json& j, const SurfaceConfig& s) {
    NumClass f;
    f.r = int_from_json(field(j, "r", "class"), "class.r");
    f.c1 = divisor_from_json(field(j, "c1", "class"), s);
    f.chi = int_from_json(field(j, "chi", "class"), "class.chi");
    return f;
}

Json to_json(const Polarization& h) {
    Json j;
    j["u"] = rat_to_json(h.u);
    j["v"] = rat_to_json(h.v);
    Json d = Json::array();
    for (const auto& x : h.d) d.push_back(rat_to_json(x));
    j["d"] = std::move(d);
    return j;
}

Polarization polarization_from_json(const Json& j, const SurfaceConfig& s) {
    Polarization h;
    h.u = rat_from_json(field(j, "u", "polarization"), "polarization.u");
    h.v = rat_from_json(field(j, "v", "polarization"), "polarization.v");
    if (j.contains("d"))
        for (const auto& x : j.at("d")) h.d.push_back(rat_from_json(x, "polarization.d"));
    h.validate(s);
    return h;
}

Json to_json(const GaetaExponents& e) {
    Json j;
    if (e.p2) {
        j["a1"] = int_to_json(e.alpha1);
        j["a2"] = int_to_json(e.alpha2);
        j["a3"] = int_to_json(e.alpha3);
        return j;
    }
    j["alpha1"] = int_to_json(e.alpha1);
    j["alpha2"] = int_to_json(e.alpha2);
    j["alpha3"] = int_to_json(e.alpha3);
    j["alpha4"] = int_to_json(e.alpha4);
    Json gi = Json::array(), gj = Json::array();
    for (const auto& x : e.gamma_s0) gi.push_back(int_to_json(x));
    for (const auto& x : e.gamma_s1) gj.push_back(int_to_json(x));
    j["gamma_s0"] = std::move(gi);
    j["gamma_s1"] = std::move(gj);
    return j;
}

GaetaExponents exponents_from_json(const Json& j, const SurfaceConfig& s) {
    GaetaExponents e;
    if (s.is_p2()) {
        e.p2 = true;
        e.alpha1 = int_from_json(field(j, "a1", "exponents"), "exponents.a1");
        e.alpha2 = int_from_json(field(j, "a2", "exponents"), "exponents.a2");
        e.alpha3 = int_from_json(field(j, "a3", "exponents"), "exponents.a3");
        return e;
    }
    e.alpha1 = int_from_json(field(j, "alpha1", "exponents"), "exponents.alpha1");
    e.alpha2 = int_from_json(field(j, "alpha2", "exponents"), "exponents.alpha2");
    e.alpha3 = int_from_json(field(j, "alpha3", "exponents"), "exponents.alpha3");
    e.alpha4 = int_from_json(field(j, "alpha4", "exponents"), "exponents.alpha4");
    if (j.contains("gamma_s0"))
        for (const auto& x : j.at("gamma_s0")) e.gamma_s0.push_back(int_from_json(x, "exponents.gamma_s0"));
    if (j.contains("gamma_s1"))
        for (const auto& x : j.at("gamma_s1")) e.gamma_s1.push_back(int_from_json(x, "exponents.gamma_s1"));
    if (!e.matches(s)) throw JsonError("exponents: gamma lengths do not match the surface");
    return e;
}

Json to_json(const CohomResult& r) {
    Json j;
    if (!r.exact) {
        j["unknown"] = true;
        j["chi"] = int_to_json(r.chi);
        return j;
    }
    j["h"] = Json::array({int_to_json(r.h0), int_to_json(r.h1), int_to_json(r.h2)});
    return j;
}

}  // namespace ratsurf
