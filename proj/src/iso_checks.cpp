#include "spherex/iso_checks.hpp"

#include "spherex/errors.hpp"

#include <numeric>

namespace spherex {

namespace {

std::string S(long long x) { return std::to_string(x); }

long long ipow(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// verify_isomorphism plus an order comparison with the abstract group
IsoCheckResult check(const Presentation& p, const std::map<char, std::string>& a, const MatGroup& g, long long expected_order) {
    IsoCheckResult r = verify_isomorphism(p, a, g);
    if ((long long)g.order() != expected_order) {
        r.surjective = false;
        r.detail = "target has order " + S((long long)g.order()) + ", expected " + S(expected_order);
    }
    return r;
}

Presentation pprime_presentation(long long k, bool with_w, long long l, const std::string& letters) {
    // letters: names for x, y, z (and w)
    const char x = letters[0], y = letters[1], z = letters[2];
    auto c = [](char ch) { return std::string(1, ch); };
    std::vector<std::string> rels = {c(x) + "^2 = (" + c(x) + c(y) + ")^2 = " + c(y) + "^2", c(z) + " " + c(x) + " " + c(z) + "^-1 = " + c(y),
                                     c(z) + " " + c(y) + " " + c(z) + "^-1 = " + c(x) + " " + c(y), c(z) + "^" + S(ipow(3, k))};
    std::string gens = letters.substr(0, 3);
    if (with_w) {
        gens += "w";
        rels.push_back("w^" + S(l));
        for (char g : letters.substr(0, 3)) rels.push_back("w " + c(g) + " = " + c(g) + " w");
    }
    return Presentation::parse(gens, rels);
}

}  // namespace

std::vector<NamedIsoCheck> binary_polyhedral_iso_checks() {
    std::vector<NamedIsoCheck> out;
    const std::pair<FamilySpec, long long> cases[] = {{FamilySpec::bt(), 3}, {FamilySpec::bo(), 4}, {FamilySpec::bi(), 5}};
    for (const auto& [spec, n] : cases) {
        auto g = MatGroup::build(spec);
        auto bc = g->polyhedral_bc();
        if (!bc) throw InternalError("no (b, c) pair in " + spec.str());
        auto h = MatGroup::from_generators({{"b", g->element(bc->first)}, {"c", g->element(bc->second)}});
        const long long order = 24 * n / (6 - n);
        auto two = Presentation::parse("bc", {"(bc)^2 = b^3 = c^" + S(n)});
        out.push_back({"<2,3," + S(n) + "> relations on (b, c) in " + spec.str(), check(two, {{'b', "b"}, {'c', "c"}}, *h, order)});
        auto p = Presentation::parse("xy", {"x^2 = (xy)^3 = y^" + S(n), "x^4"});
        out.push_back({"P_" + S(order) + " -> <2,3," + S(n) + ">: x -> bc, y -> c^-1", check(p, {{'x', "bc"}, {'y', "c^-1"}}, *h, order)});
    }
    return out;
}

std::vector<NamedIsoCheck> small_case_iso_checks(long long r_max) {
    std::vector<NamedIsoCheck> out;
    for (long long r = 1; r <= r_max; ++r) {
        const long long q = 2 * r + 1;
        auto bd = MatGroup::build(FamilySpec::binary_dihedral(q));
        auto d = Presentation::parse("xy", {"x^4", "y^" + S(q), "x y x^-1 = y^-1"});
        out.push_back({"D_" + S(4 * q) + " -> BD_" + S(2 * q) + ": x -> b, y -> c^2", check(d, {{'x', "b"}, {'y', "c^2"}}, *bd, 4 * q)});
        // k = 1: tau phi_4 has order 2, so x is realized by tau itself
        auto d1 = MatGroup::from_generators({{"x", mats::tau()}, {"y", mats::psi(q)}});
        auto b = Presentation::parse("bc", {"(bc)^2 = b^2 = c^" + S(q)});
        out.push_back({"BD_" + S(2 * q) + " -> D_" + S(4 * q) + ": b -> x, c -> y^" + S(r + 1) + " x^2",
                       check(b, {{'b', "x"}, {'c', "y^" + S(r + 1) + " x^2"}}, *d1, 4 * q)});
    }
    // P'_24 -> P_24 inside BT, with P_24 generated by x = bc, y = c^-1
    auto bt = MatGroup::build(FamilySpec::bt());
    auto bc = bt->polyhedral_bc();
    if (!bc) throw InternalError("no (b, c) pair in BT");
    auto p24 = MatGroup::from_generators({{"x", bt->element(bt->multiply(bc->first, bc->second))}, {"y", bt->element(bt->inverse(bc->second))}});
    out.push_back({"P'_24 -> P_24: X -> y x y^-1, Y -> x, Z -> y^2",
                   check(pprime_presentation(1, false, 1, "XYZ"), {{'X', "y x y^-1"}, {'Y', "x"}, {'Z', "y^2"}}, *p24, 24)});
    CycMatrix z = mats::eta() * mats::phi(6);
    auto pp24 = MatGroup::from_generators({{"X", mats::tau().adjoint()}, {"Y", mats::psi(4).adjoint()}, {"Z", z * z}});
    auto p = Presentation::parse("xy", {"x^2 = (xy)^3 = y^3", "x^4"});
    out.push_back({"P_24 -> P'_24: x -> Y, y -> X^-1 Z^-1 Y^-1", check(p, {{'x', "Y"}, {'y', "X^-1 Z^-1 Y^-1"}}, *pp24, 24)});
    return out;
}

std::vector<NamedIsoCheck> product_iso_checks(long long q_max, long long l_max, long long k_max) {
    std::vector<NamedIsoCheck> out;
    for (long long k = 2; k <= k_max; ++k)
        for (long long q = 3; q <= q_max; q += 2)
            for (long long l = 1; l <= l_max; l += 2) {
                if (std::gcd(l, q) != 1) continue;
                const long long m = ipow(2, k - 1) * l, n = q + m, two = ipow(2, k + 1);
                auto g = MatGroup::from_generators({{"p", mats::psi(2 * q)}, {"t", mats::tau() * mats::phi(4 * m)}});
                auto pres = Presentation::parse("xyz", {"x^" + S(two), "y^" + S(q), "x y x^-1 = y^-1", "z^" + S(l), "z x = x z", "z y = y z"});
                out.push_back({"Psi: D_" + S(two * q) + " x C_" + S(l) + " -> D_{" + S(n) + "," + S(q) + "}",
                               check(pres, {{'x', "t^" + S(l)}, {'y', "p^2"}, {'z', "t^" + S(two)}}, *g, two * q * l)});
            }
    for (long long k = 2; k <= k_max; ++k)
        for (long long l = 1; l <= l_max; l += 2) {
            if (l % 3 == 0) continue;
            const long long m = ipow(3, k - 1) * l, three = ipow(3, k);
            auto g = MatGroup::from_generators({{"p", mats::psi(4)}, {"t", mats::tau()}, {"e", mats::eta() * mats::phi(6 * m)}});
            auto pres = pprime_presentation(k, true, l, "xyz");
            std::map<char, std::string> a;
            std::string which;
            if (l % 3 == 2) {
                a = {{'x', "p"}, {'y', "t"}};
                which = "case l = 2 mod 3";
            } else {
                a = {{'x', "t^-1"}, {'y', "p^-1"}};
                which = "case l = 1 mod 3";
            }
            a['z'] = "e^" + S(2 * l);
            a['w'] = "e^" + S(2 * three);
            out.push_back({"Phi (" + which + "): P'_" + S(8 * three) + " x C_" + S(l) + " -> T_" + S(m), check(pres, a, *g, 24 * m)});
        }
    return out;
}

std::vector<NamedIsoCheck> all_iso_checks() {
    auto out = binary_polyhedral_iso_checks();
    for (auto& c : small_case_iso_checks()) out.push_back(std::move(c));
    for (auto& c : product_iso_checks()) out.push_back(std::move(c));
    return out;
}

}  // namespace spherex
