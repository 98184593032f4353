#include "spherex/presentation.hpp"

#include "spherex/errors.hpp"

#include <algorithm>
#include <cctype>

namespace spherex {

namespace {

struct WordParser {
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '*' || s[pos] == '\t')) ++pos;
    }

    long long exponent() {
        skip();
        if (pos >= s.size() || s[pos] != '^') return 1;
        ++pos;
        skip();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) throw ParseError("expected exponent in word: " + std::string(s));
        long long e = std::stoll(std::string(s.substr(start, pos - start)));
        return neg ? -e : e;
    }

    static std::vector<std::pair<char, long long>> raise(const std::vector<std::pair<char, long long>>& w, long long e) {
        std::vector<std::pair<char, long long>> base = w;
        if (e < 0) {
            std::reverse(base.begin(), base.end());
            for (auto& l : base) l.second = -l.second;
            e = -e;
        }
        std::vector<std::pair<char, long long>> out;
        for (long long i = 0; i < e; ++i) out.insert(out.end(), base.begin(), base.end());
        return out;
    }

    std::vector<std::pair<char, long long>> sequence() {
        std::vector<std::pair<char, long long>> out;
        while (true) {
            skip();
            if (pos >= s.size() || s[pos] == ')') return out;
            char c = s[pos];
            if (c == '(') {
                ++pos;
                auto inner = sequence();
                skip();
                if (pos >= s.size() || s[pos] != ')') throw ParseError("unbalanced parentheses in word: " + std::string(s));
                ++pos;
                auto r = raise(inner, exponent());
                out.insert(out.end(), r.begin(), r.end());
            } else if (c == '1') {
                ++pos;
                exponent();
            } else if (std::isalpha((unsigned char)c)) {
                ++pos;
                long long e = exponent();
                if (e != 0) out.emplace_back(c, e);
            } else {
                throw ParseError("unexpected character '" + std::string(1, c) + "' in word: " + std::string(s));
            }
        }
    }
};

}  // namespace

Word Word::parse(std::string_view text) {
    WordParser p{text};
    Word w;
    w.letters = p.sequence();
    if (p.pos != text.size()) throw ParseError("unbalanced parentheses in word: " + std::string(text));
    return w;
}

std::string Word::str() const {
    if (letters.empty()) return "1";
    std::string s;
    for (const auto& [c, e] : letters) {
        s += c;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

Relation Relation::parse(std::string_view text) {
    Relation r;
    r.text = std::string(text);
    std::size_t start = 0;
    while (true) {
        auto eq = text.find('=', start);
        r.sides.push_back(Word::parse(text.substr(start, eq == std::string_view::npos ? std::string_view::npos : eq - start)));
        if (eq == std::string_view::npos) break;
        start = eq + 1;
    }
    if (r.sides.size() == 1) r.sides.push_back(Word{});
    return r;
}

Presentation Presentation::parse(std::string_view generators, const std::vector<std::string>& relations) {
    Presentation p;
    for (char c : generators)
        if (std::isalpha((unsigned char)c)) p.generators.push_back(c);
    for (const auto& r : relations) {
        Relation rel = Relation::parse(r);
        for (const auto& w : rel.sides)
            for (const auto& [c, e] : w.letters)
                if (std::find(p.generators.begin(), p.generators.end(), c) == p.generators.end())
                    throw ParseError("unknown generator '" + std::string(1, c) + "' in relation: " + r);
        p.relations.push_back(std::move(rel));
    }
    return p;
}

Elem evaluate(const Word& w, const std::map<char, Elem>& binding, const MatGroup& g) {
    Elem r = 0;
    for (const auto& [c, e] : w.letters) {
        auto it = binding.find(c);
        if (it == binding.end()) throw ParseError("unknown generator '" + std::string(1, c) + "' in word " + w.str());
        r = g.multiply(r, g.power(it->second, e));
    }
    return r;
}

Elem evaluate_in_group(const Word& w, const MatGroup& g) {
    std::map<char, Elem> binding;
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
        const auto& name = g.generators()[i].name;
        if (name.size() == 1) binding[name[0]] = g.generator_element(int(i));
    }
    return evaluate(w, binding, g);
}

IsoCheckResult verify_isomorphism(const Presentation& p, const std::map<char, std::string>& assignment, const MatGroup& g) {
    for (const auto& rel : p.relations)
        for (const auto& w : rel.sides)
            for (const auto& [c, e] : w.letters)
                if (std::find(p.generators.begin(), p.generators.end(), c) == p.generators.end())
                    throw ParseError("unknown generator '" + std::string(1, c) + "' in relation: " + rel.text);
    std::map<char, Elem> images;
    for (char c : p.generators) {
        auto it = assignment.find(c);
        if (it == assignment.end()) throw ParseError("no assignment for generator '" + std::string(1, c) + "'");
        images[c] = evaluate_in_group(Word::parse(it->second), g);
    }
    IsoCheckResult res;
    res.relations_hold = true;
    for (const auto& rel : p.relations) {
        Elem first = evaluate(rel.sides.front(), images, g);
        for (std::size_t i = 1; i < rel.sides.size(); ++i)
            if (evaluate(rel.sides[i], images, g) != first) {
                res.relations_hold = false;
                if (res.detail.empty()) res.detail = "relation fails: " + rel.text;
            }
    }
    std::vector<Elem> gens;
    for (const auto& [c, e] : images) gens.push_back(e);
    res.surjective = g.generated_subgroup(gens).size() == g.order();
    if (!res.surjective && res.detail.empty()) res.detail = "images do not generate the group";
    return res;
}

namespace {

std::vector<std::string> family_relations(const FamilySpec& spec) {
    auto pw = [](long long b, long long e) {
        long long r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    switch (spec.family) {
        case Family::Cyclic:
            if (spec.a == 1) return {};
            return {"g^" + std::to_string(spec.a)};
        case Family::BinaryDihedral: return {"(bc)^2 = b^2 = c^" + std::to_string(spec.a)};
        case Family::D:
            return {"x^" + std::to_string(pw(2, spec.a + 1)), "y^" + std::to_string(2 * spec.b + 1), "x y x^-1 = y^-1"};
        case Family::Pprime:
            return {"x^2 = (xy)^2 = y^2", "z x z^-1 = y", "z y z^-1 = x y", "z^" + std::to_string(pw(3, spec.a))};
        default: throw SpecError("no presentation in generator letters for " + spec.str());
    }
}

}  // namespace

Presentation family_presentation(const FamilySpec& spec) {
    std::string gens;
    for (const auto& g : family_generators(spec)) gens += g.name;
    std::vector<std::string> rels;
    if (spec.family == Family::Product) {
        rels = family_relations(*spec.inner);
        for (const auto& g : family_generators(*spec.inner)) rels.push_back("w " + g.name + " = " + g.name + " w");
        bool doubled = !(family_generators(spec).back().matrix == mats::phi(spec.l));
        rels.push_back("w^" + std::to_string(doubled ? 2 * spec.l : spec.l));
    } else {
        rels = family_relations(spec);
    }
    return Presentation::parse(gens, rels);
}

CycMatrix evaluate_matrices(const Word& w, const std::map<char, CycMatrix>& binding, long long order_bound) {
    if (binding.empty()) throw ParseError("empty binding");
    const int dim = binding.begin()->second.dim();
    std::map<char, CycMatrix> inverses;
    auto inverse_of = [&](char c, const CycMatrix& m) -> const CycMatrix& {
        auto it = inverses.find(c);
        if (it != inverses.end()) return it->second;
        CycMatrix prev = CycMatrix::identity(dim), cur = m;
        for (long long k = 1; k <= order_bound; ++k) {
            if (cur.is_identity()) return inverses.emplace(c, prev).first->second;
            prev = cur;
            cur = cur * m;
        }
        throw InternalError("matrix for '" + std::string(1, c) + "' has no finite order within the bound");
    };
    CycMatrix r = CycMatrix::identity(dim);
    for (const auto& [c, e] : w.letters) {
        auto it = binding.find(c);
        if (it == binding.end()) throw ParseError("unknown generator '" + std::string(1, c) + "' in word " + w.str());
        const CycMatrix& base = e < 0 ? inverse_of(c, it->second) : it->second;
        for (long long i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
    }
    return r;
}

}  // namespace spherex
