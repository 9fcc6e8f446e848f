#include "ratsurf/surface.hpp"

#include <algorithm>
#include <sstream>

namespace ratsurf {

std::optional<Rat> parse_rat(std::string_view text) {
    if (text.empty()) return std::nullopt;
    auto parse_int = [](std::string_view v) -> std::optional<Int> {
        if (v.empty()) return std::nullopt;
        size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
        if (i == v.size()) return std::nullopt;
        for (size_t k = i; k < v.size(); ++k)
            if (v[k] < '0' || v[k] > '9') return std::nullopt;
        return Int(std::string(v));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rat(*n);
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rat(*n, *d);
}

SurfaceConfig SurfaceConfig::p2() {
    SurfaceConfig s;
    s.kind_ = SurfaceKind::P2;
    return s;
}

SurfaceConfig SurfaceConfig::hirzebruch(int e) { return blowup(e, 0, {}); }

SurfaceConfig SurfaceConfig::blowup(int e, int s0, std::vector<int> s1_parents, bool avoids_b,
                                    bool avoids_fiber_directions) {
    if (e < 0) throw Precondition("e must be >= 0");
    if (s0 < 0) throw Precondition("s0 must be >= 0");
    for (int p : s1_parents)
        if (p < 1 || p > s0) throw Precondition("s1 parent index out of range");
    SurfaceConfig s;
    s.kind_ = SurfaceKind::Blowup;
    s.e_ = e;
    s.s0_ = s0;
    s.s1_parents_ = std::move(s1_parents);
    s.avoids_b_ = avoids_b;
    s.avoids_fiber_ = avoids_fiber_directions;
    return s;
}

int SurfaceConfig::e() const {
    if (is_p2()) throw P2Unsupported("e is undefined on P^2");
    return e_;
}

int SurfaceConfig::parent_of(int j) const {
    if (!in_s1(j)) throw Precondition("parent_of: index not in S1");
    return s1_parents_[static_cast<size_t>(j - s0_ - 1)];
}

std::vector<int> SurfaceConfig::children_of(int i) const {
    if (!in_s0(i)) throw Precondition("children_of: index not in S0");
    std::vector<int> out;
    for (int k = 0; k < s1_count(); ++k)
        if (s1_parents_[static_cast<size_t>(k)] == i) out.push_back(s0_ + 1 + k);
    return out;
}

bool SurfaceConfig::admissible() const {
    if (is_p2()) return false;
    if (e_ == 0) return t() == 0;
    return avoids_b_ && avoids_fiber_;
}

DivClass DivClass::zero(const SurfaceConfig& s) {
    if (s.is_p2()) return DivClass{0, 0, {}};
    return DivClass{0, 0, std::vector<Rat>(static_cast<size_t>(s.t()), Rat(0))};
}

DivClass DivClass::fiber_A(const SurfaceConfig& s) {
    DivClass d = zero(s);
    d.a = 1;
    return d;
}

DivClass DivClass::section_B(const SurfaceConfig& s) {
    DivClass d = zero(s);
    d.b = 1;
    return d;
}

DivClass DivClass::section_C(const SurfaceConfig& s) {
    DivClass d = zero(s);
    d.a = s.e();
    d.b = 1;
    return d;
}

DivClass DivClass::exceptional(const SurfaceConfig& s, int idx) {
    if (idx < 1 || idx > s.t()) throw DimensionMismatch("exceptional index out of range");
    DivClass d = zero(s);
    d.g[static_cast<size_t>(idx - 1)] = 1;
    return d;
}

DivClass DivClass::hyperplane(const Rat& deg) { return DivClass{deg, 0, {}}; }

bool DivClass::integral() const {
    if (!is_integer(a) || !is_integer(b)) return false;
    for (const auto& x : g)
        if (!is_integer(x)) return false;
    return true;
}

bool DivClass::is_zero() const {
    if (a != 0 || b != 0) return false;
    for (const auto& x : g)
        if (x != 0) return false;
    return true;
}

Rat DivClass::alpha(const SurfaceConfig& s) const { return a - Rat(s.e()) * b; }

DivClass DivClass::operator+(const DivClass& o) const {
    if (g.size() != o.g.size()) throw DimensionMismatch("divisor length mismatch");
    DivClass out{a + o.a, b + o.b, g};
    for (size_t i = 0; i < g.size(); ++i) out.g[i] += o.g[i];
    return out;
}

DivClass DivClass::operator-(const DivClass& o) const { return *this + (-o); }

DivClass DivClass::operator-() const {
    DivClass out{-a, -b, g};
    for (auto& x : out.g) x = -x;
    return out;
}

DivClass operator*(const Rat& c, const DivClass& d) {
    DivClass out{c * d.a, c * d.b, d.g};
    for (auto& x : out.g) x *= c;
    return out;
}

std::string DivClass::str() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Rat& c, const std::string& name) {
        if (c == 0) return;
        if (!first && c > 0) os << "+";
        if (c == -1)
            os << "-";
        else if (c != 1)
            os << rat_to_string(c) << "*";
        os << name;
        first = false;
    };
    if (g.empty() && b == 0) {
        term(a, "H");
    } else {
        term(a, "A");
        term(b, "B");
    }
    for (size_t i = 0; i < g.size(); ++i) term(g[i], "E" + std::to_string(i + 1));
    if (first) os << "0";
    return os.str();
}

NumClass NumClass::line_bundle(const SurfaceConfig& s, const DivClass& d) {
    return NumClass{1, d, chi_of_divisor(s, d)};
}

NumClass NumClass::operator+(const NumClass& o) const { return NumClass{r + o.r, c1 + o.c1, chi + o.chi}; }

DivClass Polarization::divisor(const SurfaceConfig& s) const {
    validate(s);
    DivClass h = Rat(u) * DivClass::fiber_A(s) + Rat(v) * DivClass::section_C(s);
    for (int i = 1; i <= s.t(); ++i) h = h - d[static_cast<size_t>(i - 1)] * DivClass::exceptional(s, i);
    return h;
}

void Polarization::validate(const SurfaceConfig& s) const {
    if (s.is_p2()) throw P2Unsupported("polarizations in the uA+vC basis need a ruled surface");
    if (static_cast<int>(d.size()) != s.t()) throw DimensionMismatch("polarization has wrong number of d_i");
    if (u <= 0 || v <= 0) throw Precondition("polarization requires u, v > 0");
    for (const auto& x : d)
        if (x <= 0) throw Precondition("polarization requires every d_i > 0");
}

Rat Polarization::lambda(const SurfaceConfig& s) const { return u / v + Rat(s.e(), 2); }

void check_divisor(const SurfaceConfig& s, const DivClass& d) {
    size_t want = s.is_p2() ? 0 : static_cast<size_t>(s.t());
    if (d.g.size() != want) throw DimensionMismatch("divisor does not match surface (exceptional part)");
    if (s.is_p2() && d.b != 0) throw DimensionMismatch("P^2 divisor must have b = 0");
}

Rat intersect(const SurfaceConfig& s, const DivClass& d1, const DivClass& d2) {
    check_divisor(s, d1);
    check_divisor(s, d2);
    if (s.is_p2()) return d1.a * d2.a;
    Rat v = d1.a * d2.b + d2.a * d1.b - Rat(s.e()) * d1.b * d2.b;
    for (size_t i = 0; i < d1.g.size(); ++i) v -= d1.g[i] * d2.g[i];
    return v;
}

DivClass canonical_class(const SurfaceConfig& s) {
    if (s.is_p2()) return DivClass::hyperplane(-3);
    DivClass k = DivClass::zero(s);
    k.a = -(s.e() + 2);
    k.b = -2;
    for (auto& x : k.g) x = 1;
    return k;
}

Rat hilbert_P(const SurfaceConfig& s, const DivClass& nu) {
    DivClass k = canonical_class(s);
    return 1 + intersect(s, nu, nu - k) / 2;
}

Int chi_of_divisor(const SurfaceConfig& s, const DivClass& d) {
    check_divisor(s, d);
    if (!d.integral()) throw Precondition("chi_of_divisor needs an integral class");
    return to_int(hilbert_P(s, d));
}

Invariants invariants(const SurfaceConfig& s, const NumClass& f) {
    check_divisor(s, f.c1);
    if (f.r <= 0) throw RankZero("slope and discriminant are undefined in rank " + f.r.str());
    Invariants out;
    out.nu = Rat(1, 1) / Rat(f.r) * f.c1;
    out.P_nu = hilbert_P(s, out.nu);
    out.Delta = out.P_nu - Rat(f.chi) / Rat(f.r);
    Rat nu2 = intersect(s, out.nu, out.nu);
    out.ch2 = Rat(f.r) * (nu2 / 2 - out.Delta);
    out.c2 = Rat(binom2(f.r)) * nu2 + Rat(f.r) * out.Delta;
    return out;
}

Rat ch2_of(const SurfaceConfig& s, const NumClass& f) {
    // chi = ch2 - c1.K/2 + r * chi(O) inverted for ch2.
    return Rat(f.chi) + intersect(s, f.c1, canonical_class(s)) / 2 - Rat(f.r);
}

NumClass twist(const SurfaceConfig& s, const NumClass& f, const DivClass& d) {
    check_divisor(s, f.c1);
    check_divisor(s, d);
    if (!d.integral()) throw Precondition("twist needs an integral divisor");
    if (f.r < 0) throw Precondition("twist needs rank >= 0");
    if (f.r == 0) {
        NumClass out = f;
        out.chi = f.chi + to_int(intersect(s, d, f.c1));
        return out;
    }
    Invariants inv = invariants(s, f);
    NumClass out;
    out.r = f.r;
    out.c1 = f.c1 + Rat(f.r) * d;
    out.chi = to_int(Rat(f.r) * (hilbert_P(s, inv.nu + d) - inv.Delta));
    return out;
}

PairingResult pairings(const SurfaceConfig& s, const NumClass& f1, const NumClass& f2) {
    if (f1.r <= 0 || f2.r <= 0) throw RankZero("pairings requires positive ranks");
    Invariants i1 = invariants(s, f1);
    Invariants i2 = invariants(s, f2);
    Rat rr = Rat(f1.r) * Rat(f2.r);
    PairingResult out;
    out.chi_hom = rr * (hilbert_P(s, i2.nu - i1.nu) - i1.Delta - i2.Delta);
    out.chi_tensor = rr * (hilbert_P(s, i1.nu + i2.nu) - i1.Delta - i2.Delta);
    return out;
}

Rat euler_pairing(const SurfaceConfig& s, const NumClass& u, const NumClass& w) {
    // chi(u, w) = integral of ch(u)^dual . ch(w) . td(S) with chi(O) = 1.
    Rat ru(u.r), rw(w.r);
    Rat c2u = ch2_of(s, u), c2w = ch2_of(s, w);
    DivClass k = canonical_class(s);
    DivClass mixed = rw * u.c1 - ru * w.c1;  // r_w c_u - r_u c_w
    return ru * c2w + rw * c2u - intersect(s, u.c1, w.c1) + intersect(s, k, mixed) / 2 + ru * rw;
}

std::vector<SurfaceConfig> admissible_shapes(int e, int t_max) {
    std::vector<SurfaceConfig> out;
    out.push_back(SurfaceConfig::hirzebruch(e));
    if (e == 0) return out;  // e = 0 admits no admissible blown-up points
    // Parent structures up to isomorphism: a weakly decreasing list of child
    // counts c_1 >= ... >= c_s >= 0 with s + sum c_i = t.
    for (int t = 1; t <= t_max; ++t) {
        for (int s = 1; s <= t; ++s) {
            int q = t - s;
            std::vector<int> counts(static_cast<size_t>(s), 0);
            // enumerate weakly decreasing compositions of q into s parts
            auto rec = [&](auto&& self, int pos, int remaining, int maxc) -> void {
                if (pos == s) {
                    if (remaining != 0) return;
                    std::vector<int> parents;
                    for (int i = 0; i < s; ++i)
                        for (int c = 0; c < counts[static_cast<size_t>(i)]; ++c) parents.push_back(i + 1);
                    out.push_back(SurfaceConfig::blowup(e, s, parents));
                    return;
                }
                for (int c = std::min(remaining, maxc); c >= 0; --c) {
                    counts[static_cast<size_t>(pos)] = c;
                    self(self, pos + 1, remaining - c, c);
                }
            };
            rec(rec, 0, q, q);
        }
    }
    return out;
}

}  // namespace ratsurf
