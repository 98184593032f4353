#include "spherex/character.hpp"

#include "spherex/errors.hpp"

#include <algorithm>

namespace spherex {

namespace {

std::string str(long long x) { return std::to_string(x); }

long long ipow(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Irrep from_images(const GroupPtr& g, std::string label, std::vector<CycMatrix> images) {
    Irrep r;
    r.label = std::move(label);
    r.generator_images = std::move(images);
    std::vector<Cyc> v;
    r.character = Character(g, std::vector<Cyc>(g->num_classes(), Cyc(0)));
    for (std::size_t c = 0; c < g->num_classes(); ++c) v.push_back(r.image(g->class_rep(c)).trace());
    r.character = Character(g, std::move(v));
    return r;
}

CycMatrix scalar1(const Cyc& c) { return CycMatrix(1, {c}); }

std::vector<Irrep> cyclic_catalog(const GroupPtr& g, long long n) {
    std::vector<Irrep> out;
    if (n == 1) {
        Irrep r;
        r.label = "alpha_0";
        r.character = trivial_character(g);
        out.push_back(std::move(r));
        return out;
    }
    for (long long j = 0; j < n; ++j) out.push_back(from_images(g, "alpha_" + str(j), {scalar1(Cyc::zeta(n, j))}));
    return out;
}

std::vector<Irrep> bd_catalog(const GroupPtr& g, long long q) {
    std::vector<Irrep> out;
    // (b, c) values of alpha_0..alpha_3
    std::vector<std::pair<Cyc, Cyc>> lin;
    if (q % 2 == 0)
        lin = {{Cyc(1), Cyc(1)}, {Cyc(-1), Cyc(1)}, {Cyc(1), Cyc(-1)}, {Cyc(-1), Cyc(-1)}};
    else
        lin = {{Cyc(1), Cyc(1)}, {Cyc::zeta(4), Cyc(-1)}, {Cyc(-1), Cyc(1)}, {Cyc::zeta(4, 3), Cyc(-1)}};
    for (std::size_t j = 0; j < 4; ++j) out.push_back(from_images(g, "alpha_" + str(j), {scalar1(lin[j].first), scalar1(lin[j].second)}));
    for (long long t = 1; t < q; ++t) {
        CycMatrix b{{Cyc(0), Cyc(1)}, {Cyc(t % 2 ? -1 : 1), Cyc(0)}};
        CycMatrix c = CycMatrix::diag({Cyc::zeta(2 * q, t), Cyc::zeta(2 * q, -t)});
        out.push_back(from_images(g, "rho_" + str(t), {b, c}));
    }
    return out;
}

std::vector<Irrep> d_catalog(const GroupPtr& g, long long k, long long r) {
    std::vector<Irrep> out;
    const long long n = ipow(2, k + 1);
    for (long long j = 0; j < n; ++j) out.push_back(from_images(g, "alpha_" + str(j), {scalar1(Cyc::zeta(n, j)), scalar1(Cyc(1))}));
    for (long long t = 1; t <= 2 * r; ++t)
        for (long long s = 0; s < n / 4; ++s) {
            CycMatrix x = Cyc::zeta(n, s) * CycMatrix{{Cyc(0), Cyc(1)}, {Cyc(t % 2 ? -1 : 1), Cyc(0)}};
            CycMatrix y = CycMatrix::diag({Cyc::zeta(2 * r + 1, t), Cyc::zeta(2 * r + 1, -t)});
            out.push_back(from_images(g, "varrho_" + str(t) + "," + str(s), {x, y}));
        }
    return out;
}

std::vector<Irrep> pprime_catalog(const GroupPtr& g, long long k) {
    std::vector<Irrep> out;
    const long long n = ipow(3, k);
    const Cyc w = Cyc::zeta(3), w2 = Cyc::zeta(3, 2);
    for (long long j = 0; j < n; ++j) out.push_back(from_images(g, "alpha_" + str(j), {scalar1(Cyc(1)), scalar1(Cyc(1)), scalar1(Cyc::zeta(n, j))}));
    for (long long s = 0; s < n; ++s) {
        CycMatrix x{{Cyc(0), w2}, {-w, Cyc(0)}};
        CycMatrix y{{w2, Cyc(1)}, {w2, -w2}};
        CycMatrix z = Cyc::zeta(n, s) * CycMatrix{{Cyc(0), w}, {-w2, Cyc(-1)}};
        out.push_back(from_images(g, "varrho_" + str(s), {x, y, z}));
    }
    for (long long s = 0; s < n / 3; ++s) {
        CycMatrix x{{Cyc(-1), Cyc(-1), Cyc(-1)}, {Cyc(0), Cyc(0), Cyc(1)}, {Cyc(0), Cyc(1), Cyc(0)}};
        CycMatrix y{{Cyc(0), Cyc(0), Cyc(1)}, {Cyc(-1), Cyc(-1), Cyc(-1)}, {Cyc(1), Cyc(0), Cyc(0)}};
        CycMatrix z = Cyc::zeta(n, s) * CycMatrix{{Cyc(-1), Cyc(-1), Cyc(-1)}, {Cyc(0), Cyc(1), Cyc(0)}, {Cyc(1), Cyc(0), Cyc(0)}};
        out.push_back(from_images(g, "varsigma_" + str(s), {x, y, z}));
    }
    return out;
}

// BT, BO, BI: Burnside-Brauer characters, labeled alpha_1.. by how each one
// arises from the natural character and the linear characters.
std::vector<Irrep> polyhedral_catalog(const GroupPtr& g, Family fam) {
    auto chars = burnside_brauer(g);
    const Character nat = natural_character(g);
    std::vector<char> used(chars.size(), 0);
    auto take = [&](const Character& c) {
        for (std::size_t i = 0; i < chars.size(); ++i)
            if (!used[i] && chars[i] == c) {
                used[i] = 1;
                return chars[i];
            }
        throw InternalError("expected character missing from the Burnside-Brauer table of " + g->name());
    };
    // the unused irreducible of a degree, optionally the one contained in `in` (or not)
    auto pick = [&](long long deg, const Character* in, bool contained) {
        for (std::size_t i = 0; i < chars.size(); ++i) {
            if (used[i] || chars[i].degree() != deg) continue;
            if (in && (char_multiplicity(*in, chars[i]) > 0) != contained) continue;
            used[i] = 1;
            return chars[i];
        }
        throw InternalError("no irreducible of degree " + std::to_string(deg) + " left in " + g->name());
    };
    std::vector<Character> lab;
    const Character nat2 = nat * nat;
    switch (fam) {
        case Family::BinaryTetrahedral: {
            // the linear characters send c to 1, zeta_3^2, zeta_3
            Character a1 = take(linear_character(g, {0})), a2 = take(linear_character(g, {2})), a3 = take(linear_character(g, {1}));
            Character a4 = take(nat), a5 = take(nat * a2), a6 = take(nat * a3);
            Character a7 = pick(3, nullptr, true);
            lab = {a1, a2, a3, a4, a5, a6, a7};
            break;
        }
        case Family::BinaryOctahedral: {
            Character a1 = take(linear_character(g, {0})), a2 = take(linear_character(g, {1}));
            Character a4 = take(nat), a5 = take(nat * a2);
            Character a3 = pick(2, nullptr, true);
            Character a7 = pick(3, &nat2, true), a6 = pick(3, nullptr, true);
            Character a8 = pick(4, nullptr, true);
            lab = {a1, a2, a3, a4, a5, a6, a7, a8};
            break;
        }
        case Family::BinaryIcosahedral: {
            Character a1 = take(trivial_character(g)), a2 = take(nat);
            Character a3 = pick(2, nullptr, true);
            Character a5 = pick(3, &nat2, true), a4 = pick(3, nullptr, true);
            Character n5 = nat * a5;
            Character a7 = pick(4, &n5, true), a6 = pick(4, nullptr, true);
            Character a8 = pick(5, nullptr, true), a9 = pick(6, nullptr, true);
            lab = {a1, a2, a3, a4, a5, a6, a7, a8, a9};
            break;
        }
        default: throw InternalError("not a polyhedral family");
    }
    if (std::find(used.begin(), used.end(), 0) != used.end()) throw InternalError("unlabeled character in " + g->name());
    std::vector<Irrep> out;
    for (std::size_t i = 0; i < lab.size(); ++i) {
        Irrep r;
        r.label = "alpha_" + str((long long)(i + 1));
        r.character = lab[i];
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Irrep> product_catalog(const GroupPtr& g) {
    const auto* ps = g->product();
    if (!ps) throw InternalError("product group without product structure");
    auto inner = irrep_catalog(ps->inner);
    const long long l = ps->l;
    const auto& innerg = *ps->inner;
    const bool doubled = !(g->generators().back().matrix == mats::phi(l));
    std::optional<Elem> minus_i;
    if (doubled) minus_i = innerg.index_of(CycMatrix::scalar(2, Cyc(-1)));
    std::vector<Irrep> out;
    for (std::size_t i = 0; i < inner->irreps.size(); ++i) {
        const Irrep& a = inner->irreps[i];
        bool mats = !a.generator_images.empty() || innerg.generators().empty();
        for (long long j = 0; j < l; ++j) {
            Irrep r;
            r.label = a.label + " x alpha_" + str(j);
            r.product_factors = std::make_pair(i, int(j));
            std::vector<Cyc> v;
            for (std::size_t c = 0; c < g->num_classes(); ++c) {
                Elem e = g->class_rep(c);
                v.push_back(a.character.at_element(ps->inner_index[e]) * Cyc::zeta(l, j * ps->cyclic_exponent[e]));
            }
            r.character = Character(g, std::move(v));
            if (mats) {
                const int d = int(a.degree());
                r.generator_images = a.generator_images;
                CycMatrix w = doubled ? Cyc::zeta(l, j * ((l + 1) / 2)) * a.image(*minus_i) : CycMatrix::scalar(d, Cyc::zeta(l, j));
                r.generator_images.push_back(std::move(w));
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace

CatalogPtr irrep_catalog(const GroupPtr& g) {
    if (!g->spec()) throw Error("irrep catalog needs a family-built group");
    const FamilySpec& s = *g->spec();
    auto cat = std::make_shared<Catalog>();
    cat->group = g;
    switch (s.family) {
        case Family::Cyclic: cat->irreps = cyclic_catalog(g, s.a); break;
        case Family::BinaryDihedral: cat->irreps = bd_catalog(g, s.a); break;
        case Family::BinaryTetrahedral:
        case Family::BinaryOctahedral:
        case Family::BinaryIcosahedral: cat->irreps = polyhedral_catalog(g, s.family); break;
        case Family::D: cat->irreps = d_catalog(g, s.a, s.b); break;
        case Family::Pprime: cat->irreps = pprime_catalog(g, s.a); break;
        case Family::Product: cat->irreps = product_catalog(g); break;
    }
    if (cat->irreps.size() != g->num_classes())
        throw InternalError("catalog of " + g->name() + " has " + std::to_string(cat->irreps.size()) + " irreps for " +
                            std::to_string(g->num_classes()) + " classes");
    return cat;
}

}  // namespace spherex
