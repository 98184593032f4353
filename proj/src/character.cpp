#include "spherex/character.hpp"

#include "spherex/errors.hpp"
#include "spherex/presentation.hpp"

#include <algorithm>

namespace spherex {

Character::Character(GroupPtr g, std::vector<Cyc> values) : g_(std::move(g)), v_(std::move(values)) {
    if (!g_) throw InternalError("character without a group");
    if (v_.size() != g_->num_classes()) throw InternalError("character has the wrong number of values");
}

long long Character::degree() const {
    auto r = v_.at(0).rational_value();
    if (!r || !r->is_integer() || r->sign() <= 0) throw InternalError("character value at the identity is not a positive integer: " + v_[0].str());
    return r->to_ll();
}

Character Character::conj() const {
    std::vector<Cyc> v;
    v.reserve(v_.size());
    for (const auto& x : v_) v.push_back(x.conj());
    return {g_, std::move(v)};
}

namespace {

void same_group(const Character& a, const Character& b) {
    if (a.group() != b.group()) throw Error("characters belong to different groups");
}

template <class Op>
Character pointwise(const Character& a, const Character& b, Op op) {
    same_group(a, b);
    std::vector<Cyc> v;
    v.reserve(a.values().size());
    for (std::size_t i = 0; i < a.values().size(); ++i) v.push_back(op(a[i], b[i]));
    return {a.group(), std::move(v)};
}

}  // namespace

Character operator*(const Character& a, const Character& b) { return pointwise(a, b, [](const Cyc& x, const Cyc& y) { return x * y; }); }
Character operator+(const Character& a, const Character& b) { return pointwise(a, b, [](const Cyc& x, const Cyc& y) { return x + y; }); }
Character operator-(const Character& a, const Character& b) { return pointwise(a, b, [](const Cyc& x, const Cyc& y) { return x - y; }); }
Character operator*(const Cyc& c, const Character& a) {
    std::vector<Cyc> v;
    for (const auto& x : a.values()) v.push_back(c * x);
    return {a.group(), std::move(v)};
}

nlohmann::json Character::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& x : v_) j.push_back(x.str());
    return j;
}

Character trivial_character(const GroupPtr& g) { return {g, std::vector<Cyc>(g->num_classes(), Cyc(1))}; }

Character natural_character(const GroupPtr& g) { return {g, g->natural_character()}; }

Character linear_character(const GroupPtr& g, const std::vector<int>& exponents) {
    const auto& ab = g->abelianization();
    if (exponents.size() != ab.factors.size()) throw Error("wrong number of exponents for a linear character");
    std::vector<Cyc> v;
    for (std::size_t c = 0; c < g->num_classes(); ++c) {
        const auto& p = ab.projection[g->class_rep(c)];
        Cyc x(1);
        for (std::size_t i = 0; i < p.size(); ++i) x = x * Cyc::zeta(ab.factors[i], (long long)exponents[i] * p[i]);
        v.push_back(x);
    }
    return {g, std::move(v)};
}

std::vector<Character> linear_characters(const GroupPtr& g) {
    const auto& ab = g->abelianization();
    std::vector<Character> out;
    std::vector<int> t(ab.factors.size(), 0);
    while (true) {
        out.push_back(linear_character(g, t));
        std::size_t i = t.size();
        while (i-- > 0) {
            if (++t[i] < ab.factors[i]) break;
            t[i] = 0;
        }
        if (i == std::size_t(-1)) break;
    }
    return out;
}

Cyc char_inner_product(const Character& a, const Character& b) {
    same_group(a, b);
    const auto& g = *a.group();
    Cyc s(0);
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
        if (a[c].is_zero() || b[c].is_zero()) continue;
        s = s + a[c] * b[c].conj() * Rational((long long)g.class_size(c));
    }
    return s * Rational(1, (long long)g.order());
}

long long char_multiplicity(const Character& a, const Character& b) {
    Cyc ip = char_inner_product(a, b);
    auto r = ip.rational_value();
    if (!r || !r->is_integer()) throw InternalError("character inner product is not an integer: " + ip.str());
    return r->to_ll();
}

Character det_character(const Character& chi) {
    const auto& g = *chi.group();
    const long long d = chi.degree();
    std::vector<Cyc> v;
    v.reserve(g.num_classes());
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
        // Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
        std::vector<Cyc> p(d + 1), e(d + 1);
        for (long long i = 1; i <= d; ++i) p[i] = chi[g.class_power(c, i)];
        e[0] = Cyc(1);
        for (long long k = 1; k <= d; ++k) {
            Cyc s(0);
            for (long long i = 1; i <= k; ++i) {
                Cyc t = e[k - i] * p[i];
                s = (i % 2) ? s + t : s - t;
            }
            e[k] = s * Rational(1, k);
        }
        v.push_back(e[d]);
    }
    return {chi.group(), std::move(v)};
}

CycMatrix Irrep::image(Elem e) const {
    const auto& g = *character.group();
    if (generator_images.empty()) {
        if (g.generators().empty()) return CycMatrix::identity(int(degree()));
        throw Error("representation " + label + " has no matrices");
    }
    CycMatrix m = CycMatrix::identity(generator_images.front().dim());
    for (int s : g.word(e)) m = m * generator_images[s];
    return m;
}

Character det_character(const Irrep& r) {
    if (r.generator_images.empty()) return det_character(r.character);
    const auto& g = r.character.group();
    std::vector<Cyc> v;
    for (std::size_t c = 0; c < g->num_classes(); ++c) v.push_back(r.image(g->class_rep(c)).det());
    return {g, std::move(v)};
}

const Irrep& Catalog::find(const std::string& label) const {
    auto i = index_of(label);
    if (!i) throw Error("no representation labeled " + label);
    return irreps[*i];
}

std::optional<std::size_t> Catalog::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < irreps.size(); ++i)
        if (irreps[i].label == label) return i;
    return std::nullopt;
}

namespace {

long long norm(const Character& c) { return char_multiplicity(c, c); }

// Removes every known constituent from c.
Character peel(Character c, const std::vector<Character>& known) {
    for (const auto& k : known) {
        long long m = char_multiplicity(c, k);
        if (m != 0) c = c - Cyc(m) * k;
    }
    return c;
}

bool is_zero_character(const Character& c) {
    return std::all_of(c.values().begin(), c.values().end(), [](const Cyc& x) { return x.is_zero(); });
}

}  // namespace

std::vector<Character> burnside_brauer(const GroupPtr& g, int max_degree) {
    std::vector<Character> irr = linear_characters(g);
    auto total = [&] {
        long long s = 0;
        for (const auto& c : irr) s += c.degree() * c.degree();
        return s;
    };
    const Character nat = natural_character(g);
    std::vector<Character> residuals;
    auto consider = [&](const Character& c, bool& progress) {
        Character r = peel(c, irr);
        if (is_zero_character(r)) return;
        long long n = norm(r);
        if (n == 1) {
            Character x = r[0].rational_value()->sign() > 0 ? r : Cyc(-1) * r;
            if (x.degree() > max_degree) throw InternalError("character degree above the bound in Burnside-Brauer");
            irr.push_back(x);
            progress = true;
        } else if (std::find(residuals.begin(), residuals.end(), r) == residuals.end()) {
            residuals.push_back(r);
            progress = true;
        }
    };
    for (int pass = 0; pass < 64 && total() < (long long)g->order(); ++pass) {
        bool progress = false;
        std::vector<Character> pool{nat};
        for (const auto& x : irr) pool.push_back(nat * x);
        const std::size_t known = irr.size();
        for (std::size_t i = 0; i < known; ++i)
            for (std::size_t j = i; j < known; ++j) pool.push_back(irr[i] * irr[j]);
        for (const auto& r : residuals) {
            pool.push_back(r);
            pool.push_back(nat * r);
        }
        // differences of residuals isolate constituents they do not share
        for (std::size_t i = 0; i < residuals.size(); ++i)
            for (std::size_t j = i + 1; j < residuals.size(); ++j) pool.push_back(residuals[i] - residuals[j]);
        std::vector<Character> old = std::move(residuals);
        residuals.clear();
        for (const auto& c : pool) {
            consider(c, progress);
            if (total() >= (long long)g->order()) break;
        }
        // keep only residuals that are still reducible after the new finds
        std::vector<Character> kept;
        for (const auto& r : residuals) {
            Character p = peel(r, irr);
            if (!is_zero_character(p) && norm(p) > 1 && std::find(kept.begin(), kept.end(), p) == kept.end()) kept.push_back(p);
        }
        if (kept == old && !progress) break;
        residuals = std::move(kept);
        if (!progress) break;
    }
    if (total() != (long long)g->order()) throw InternalError("Burnside-Brauer did not complete the character table of " + g->name());
    return irr;
}

std::vector<std::pair<std::string, long long>> tensor_decompose(const Character& a, const Character& b, const Catalog& cat) {
    Character prod = a * b;
    std::vector<std::pair<std::string, long long>> out;
    long long deg = 0;
    for (const auto& r : cat.irreps) {
        long long m = char_multiplicity(prod, r.character);
        if (m) {
            out.emplace_back(r.label, m);
            deg += m * r.degree();
            prod = prod - Cyc(m) * r.character;
        }
    }
    if (!is_zero_character(prod) || deg != a.degree() * b.degree()) throw InternalError("tensor product does not decompose over the catalog");
    return out;
}

bool is_homomorphism(const Irrep& r) {
    const auto& g = *r.character.group();
    if (g.generators().empty()) return true;
    if (r.generator_images.size() != g.generators().size()) return false;
    std::vector<CycMatrix> img(g.order());
    const int dim = r.generator_images.front().dim();
    img[0] = CycMatrix::identity(dim);
    // breadth-first numbering: every element's image comes from one already known
    std::vector<char> have(g.order(), 0);
    have[0] = 1;
    for (Elem e = 0; e < g.order(); ++e) {
        if (!have[e]) return false;
        for (std::size_t s = 0; s < g.generators().size(); ++s) {
            Elem f = g.right_mul_gen(e, int(s));
            CycMatrix m = img[e] * r.generator_images[s];
            if (have[f]) {
                if (!(img[f] == m)) return false;
            } else {
                img[f] = std::move(m);
                have[f] = 1;
            }
        }
    }
    for (std::size_t c = 0; c < g.num_classes(); ++c)
        if (!(img[g.class_rep(c)].trace() == r.character[c])) return false;
    return true;
}

bool satisfies_family_relations(const Irrep& r) {
    const auto& g = *r.character.group();
    if (!g.spec()) throw Error("group has no family");
    Presentation p = family_presentation(*g.spec());
    if (g.generators().empty()) return true;
    std::map<char, CycMatrix> binding;
    for (std::size_t i = 0; i < g.generators().size(); ++i) binding[g.generators()[i].name[0]] = r.generator_images.at(i);
    for (const auto& rel : p.relations) {
        CycMatrix first = evaluate_matrices(rel.sides.front(), binding, (long long)g.order());
        for (std::size_t i = 1; i < rel.sides.size(); ++i)
            if (!(evaluate_matrices(rel.sides[i], binding, (long long)g.order()) == first)) return false;
    }
    return true;
}

}  // namespace spherex
