#include "spherex/invariants.hpp"

#include "spherex/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spherex {

namespace {

long long ipow(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Character det_natural(const GroupPtr& g) {
    std::vector<Cyc> v;
    for (std::size_t c = 0; c < g->num_classes(); ++c) v.push_back(g->element(g->class_rep(c)).det());
    return {g, std::move(v)};
}

std::map<std::string, int> parse_override(const std::string& text) {
    std::map<std::string, int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw SpinError("spin override entries look like name=exponent: " + item);
        std::string name = item.substr(0, eq);
        name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
        try {
            out[name] = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw SpinError("bad exponent in spin override: " + item);
        }
    }
    return out;
}

}  // namespace

SpinSqrt spin_sqrt_character(const GroupPtr& g, const std::optional<std::string>& override_spec) {
    const auto& ab = g->abelianization();
    const Character d = det_natural(g);
    SpinSqrt s;
    std::vector<int> t(ab.factors.size(), 0);
    while (true) {
        Character c = linear_character(g, t);
        if (c * c == d) s.candidates.push_back(t);
        std::size_t i = t.size();
        while (i-- > 0) {
            if (++t[i] < ab.factors[i]) break;
            t[i] = 0;
        }
        if (i == std::size_t(-1)) break;
    }
    if (s.candidates.empty()) throw SpinError("no degree-1 character squares to det on " + g->name());
    if (override_spec) {
        auto o = parse_override(*override_spec);
        std::vector<int> e(ab.factors.size(), 0);
        for (const auto& [name, v] : o) {
            auto it = std::find_if(ab.generators.begin(), ab.generators.end(), [&](const AbGenerator& x) { return x.name == name; });
            if (it == ab.generators.end()) throw SpinError("spin override names unknown generator " + name);
            auto i = std::size_t(it - ab.generators.begin());
            e[i] = ((v % ab.factors[i]) + ab.factors[i]) % ab.factors[i];
        }
        if (std::find(s.candidates.begin(), s.candidates.end(), e) == s.candidates.end())
            throw SpinError("spin override does not square to det on " + g->name());
        s.exponents = e;
    } else {
        s.exponents = s.candidates.front();
    }
    s.character = linear_character(g, s.exponents);
    return s;
}

Cyc defect(const MatGroup& g, const SpinSqrt& s, Elem e) {
    if (e == 0) throw Error("defect is undefined at the identity");
    const CycMatrix& m = g.element(e);
    Cyc den = Cyc(1) - m.trace() + m.det();
    return s.character.at_element(e) * den.inverse();
}

std::string CcsVector::str() const {
    std::string s = "(" + std::to_string(rank) + ";";
    for (std::size_t i = 0; i < first.size(); ++i) s += (i ? ", " : " ") + first[i].str();
    return s + "; " + second.str() + ")";
}

nlohmann::json CcsVector::to_json() const {
    nlohmann::json f = nlohmann::json::array();
    for (const auto& x : first) f.push_back(x.str());
    return {{"rank", rank}, {"first", f}, {"second", second.str()}};
}

InvariantContext::InvariantContext(GroupPtr g, const std::optional<std::string>& spin_override)
    : g_(std::move(g)), cat_(irrep_catalog(g_)), spin_(spin_sqrt_character(g_, spin_override)) {
    def_.assign(g_->num_classes(), Cyc(0));
    for (std::size_t c = 1; c < g_->num_classes(); ++c) def_[c] = defect(*g_, spin_, g_->class_rep(c));
}

namespace {

Rational xi_sum(const MatGroup& g, const Character& chi, const std::vector<Cyc>& def) {
    const Cyc k(chi.degree());
    Cyc s(0);
    for (std::size_t c = 1; c < g.num_classes(); ++c) {
        Cyc d = chi[c] - k;
        if (d.is_zero()) continue;
        s = s + d * def[c] * Rational((long long)g.class_size(c));
    }
    s = s * Rational(1, (long long)g.order());
    auto r = s.rational_value();
    if (!r) throw IrrationalXi("xi is not rational on " + g.name() + ": " + s.str());
    return *r;
}

}  // namespace

Rational InvariantContext::xi_raw(const Character& chi) const {
    if (chi.group() != g_) throw Error("character belongs to another group");
    return xi_sum(*g_, chi, def_);
}

std::vector<RatMod1> InvariantContext::first_from_det(const Character& det) const { return spherex::first_ccs(det, g_->abelianization()); }

std::vector<RatMod1> InvariantContext::first_ccs(const Character& chi) const { return first_from_det(det_character(chi)); }

RatMod1 InvariantContext::second_ccs(const Character& chi) const { return xi(chi) - xi(det_character(chi)); }

RatMod1 InvariantContext::second_ccs(const Irrep& r) const { return xi(r.character) - xi(det_character(r)); }

CcsVector InvariantContext::ccs_vector(const Irrep& r) const {
    CcsVector v;
    v.rank = r.degree();
    Character d = det_character(r);
    v.first = first_from_det(d);
    v.second = xi(r.character) - xi(d);
    return v;
}

Rational xi_tilde_raw(const MatGroup& g, const Character& chi, const SpinSqrt& s) {
    std::vector<Cyc> def(g.num_classes(), Cyc(0));
    for (std::size_t c = 1; c < g.num_classes(); ++c) def[c] = defect(g, s, g.class_rep(c));
    return xi_sum(g, chi, def);
}

RatMod1 xi_tilde(const MatGroup& g, const Character& chi, const SpinSqrt& s) { return RatMod1(xi_tilde_raw(g, chi, s)); }

std::vector<RatMod1> first_ccs(const Character& chi, const Abelianization& ab) {
    // a degree-1 character is its own determinant
    Character det = chi.degree() == 1 ? chi : det_character(chi);
    std::vector<RatMod1> out;
    for (const auto& gen : ab.generators) {
        auto [n, e] = root_of_unity_log(det.at_element(gen.element));
        out.emplace_back(Rational(e, n));
    }
    return out;
}

RatMod1 second_ccs(const Character& chi, const MatGroup& g, const SpinSqrt& s) {
    return xi_tilde(g, chi, s) - xi_tilde(g, det_character(chi), s);
}

Rational xi_closed_form_bd_raw(long long q, long long t) {
    if (q < 2 || t < 1 || t > q - 1) throw SpecError("closed form needs q >= 2 and 1 <= t <= q-1");
    return Rational(t * t - 2 * q * t - 2 * q, 4 * q);
}

RatMod1 xi_closed_form_bd(long long q, long long t) { return RatMod1(xi_closed_form_bd_raw(q, t)); }

Rational xi_closed_form_d_raw(long long k, long long r, long long t, long long s) {
    if (k < 2 || r < 1 || t < 1 || t > 2 * r || s < 0 || s > ipow(2, k - 1) - 1)
        throw SpecError("closed form needs k > 1, r >= 1, 1 <= t <= 2r, 0 <= s < 2^(k-1)");
    const long long n = ipow(2, k), m = 2 * r + 1;
    auto z = [](long long N, long long e) { return Cyc::zeta(N, e); };
    auto sgn = [](long long e) { return e % 2 ? Cyc(-1) : Cyc(1); };
    Cyc sum(0);
    for (long long l = 1; l <= n - 1; ++l) {
        Cyc num = sgn(t * l) * Cyc(2) * z(n, l * s) - Cyc(2);
        Cyc den = z(n, l) + z(n, -l) - sgn(l) * Cyc(2);
        sum = sum + num / den;
    }
    for (long long q = 1; q <= 2 * r; ++q)
        for (long long l = 0; l <= n - 1; ++l) {
            Cyc num = sgn(t * l) * z(n, l * s) * (z(m, t * q) + z(m, -t * q)) - Cyc(2);
            Cyc den = z(n, l) + z(n, -l) - sgn(l) * (z(m, q) + z(m, -q));
            sum = sum + num / den;
        }
    for (long long q = 0; q <= 2 * r; ++q)
        for (long long l = 0; l <= n - 1; ++l) sum = sum - Cyc(2) / (z(2 * n, 2 * l + 1) + z(2 * n, -(2 * l + 1)));
    sum = sum * Rational(1, 2 * n * m);
    auto v = sum.rational_value();
    if (!v) throw IrrationalXi("closed form is not rational: " + sum.str());
    return *v;
}

RatMod1 xi_closed_form_d(long long k, long long r, long long t, long long s) { return RatMod1(xi_closed_form_d_raw(k, r, t, s)); }

bool telescoping_identity_check(long long n, long long t, long long j) {
    if (n < 1 || t < 1) throw Error("telescoping check needs n >= 1 and t >= 1");
    Cyc den = Cyc(2) - Cyc::zeta(n, j) - Cyc::zeta(n, -j);
    if (den.is_zero()) throw DivisionByZero();
    Cyc lhs = (Cyc(2) - Cyc::zeta(n, t * j) - Cyc::zeta(n, -t * j)) / den;
    Cyc rhs(0);
    for (long long i = 0; i < t; ++i) rhs = rhs + Cyc(t - i) * Cyc::zeta(n, i * j);
    for (long long l = 1; l < t; ++l) rhs = rhs + Cyc(t - l) * Cyc::zeta(n, -l * j);
    return lhs == rhs;
}

bool tensor_chern_first_check(const FamilySpec& gamma, long long l) {
    auto g = MatGroup::build(FamilySpec::product(gamma, l));
    auto inner = MatGroup::build(gamma);
    auto cl = MatGroup::build(FamilySpec::cyclic(l, 1));
    auto cat = irrep_catalog(g);
    auto icat = irrep_catalog(inner);
    auto ccat = irrep_catalog(cl);
    const auto& ab = g->abelianization();
    const auto& iab = inner->abelianization();
    if (ab.generators.size() != iab.generators.size() + 1) return false;
    for (const auto& r : cat->irreps) {
        if (!r.product_factors) return false;
        auto [i, j] = *r.product_factors;
        const Irrep& a = icat->irreps[i];
        auto got = first_ccs(det_character(r), ab);
        auto fa = first_ccs(det_character(a), iab);
        auto fs = first_ccs(ccat->irreps[j].character, cl->abelianization());
        std::vector<RatMod1> want = fa;
        want.push_back(a.degree() * fs.at(0));
        if (got != want) return false;
    }
    return true;
}

Rational scaled_xi(const Rational& raw, long long order) { return raw * Rational(order); }

}  // namespace spherex
