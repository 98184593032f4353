#include "spherex/group.hpp"

#include "spherex/errors.hpp"
#include "spherex/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace spherex {

long long Abelianization::order() const {
    long long p = 1;
    for (int f : factors) p *= f;
    return p;
}

std::size_t MatGroup::default_element_cap() {
    if (const char* env = std::getenv("SPHEREX_ELEMENT_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return std::size_t(v);
        throw SpecError(std::string("invalid SPHEREX_ELEMENT_CAP: ") + env);
    }
    return 100000;
}

std::vector<NamedMatrix> family_generators(const FamilySpec& spec) {
    using namespace mats;
    switch (spec.family) {
        case Family::Cyclic:
            if (spec.a == 1) return {};
            return {{"g", cyclic_generator(spec.a, spec.b)}};
        case Family::BinaryDihedral: return {{"b", tau()}, {"c", psi(2 * spec.a)}};
        case Family::BinaryTetrahedral: return {{"p", psi(4)}, {"t", tau()}, {"e", eta()}};
        case Family::BinaryOctahedral: return {{"p", psi(8)}, {"t", tau()}, {"e", eta()}};
        case Family::BinaryIcosahedral: return {{"s", sigma()}, {"o", omega()}, {"i", iota()}};
        case Family::D: return {{"x", tau() * phi(2LL << spec.a)}, {"y", psi(2 * spec.b + 1)}};
        case Family::Pprime: {
            long long m = 2;
            for (long long i = 0; i < spec.a; ++i) m *= 3;
            CycMatrix e = eta() * phi(m);
            return {{"x", tau().adjoint()}, {"y", psi(4).adjoint()}, {"z", e * e}};
        }
        case Family::Product: {
            auto g = family_generators(*spec.inner);
            // phi_2l when -I is already in the inner group, otherwise phi_l
            bool minus_i = false;
            switch (spec.inner->family) {
                case Family::Cyclic: minus_i = spec.inner->a % 2 == 0; break;
                default: minus_i = true;
            }
            g.push_back({"w", phi(minus_i ? 2 * spec.l : spec.l)});
            return g;
        }
    }
    return {};
}

std::shared_ptr<const MatGroup> MatGroup::build(const FamilySpec& spec) { return build(spec, default_element_cap()); }

std::shared_ptr<const MatGroup> MatGroup::build(const FamilySpec& spec, std::size_t cap) {
    spec.validate();
    if (std::size_t(spec.expected_order()) > cap)
        throw ResourceError("group " + spec.str() + " has order " + std::to_string(spec.expected_order()) +
                            ", above the element cap " + std::to_string(cap));
    std::shared_ptr<MatGroup> g(new MatGroup());
    g->spec_ = spec;
    g->gens_ = family_generators(spec);
    g->close(cap);
    if (g->order() != std::size_t(spec.expected_order()))
        throw InternalError("group " + spec.str() + " closed with " + std::to_string(g->order()) + " elements, expected " +
                            std::to_string(spec.expected_order()));
    if (!g->fixed_point_free_) throw InternalError("group " + spec.str() + " is not fixed-point free");

    if (spec.family == Family::Product) {
        ProductStructure ps;
        ps.inner = build(*spec.inner, cap);
        ps.l = spec.l;
        const auto& inner = *ps.inner;
        int ng = int(inner.generators().size());
        // projection of the adjoined scalar: phi_l -> (1, 1), phi_2l -> (-I, (l+1)/2)
        Elem w_inner = 0;
        int w_exp = 1;
        const auto& w = g->gens_.back().matrix;
        if (!(w == mats::phi(spec.l))) {
            auto mi = inner.index_of(CycMatrix::scalar(2, Cyc(-1)));
            if (!mi) throw InternalError("product construction: -I missing from inner group");
            w_inner = *mi;
            w_exp = int((spec.l + 1) / 2);
        }
        ps.inner_index.assign(g->order(), 0);
        ps.cyclic_exponent.assign(g->order(), 0);
        for (Elem i = 1; i < g->order(); ++i) {
            Elem p = g->parent_[i];
            int gen = g->parent_gen_[i];
            if (gen < ng) {
                ps.inner_index[i] = inner.right_mul_gen(ps.inner_index[p], gen);
                ps.cyclic_exponent[i] = ps.cyclic_exponent[p];
            } else {
                ps.inner_index[i] = inner.multiply(ps.inner_index[p], w_inner);
                ps.cyclic_exponent[i] = int((ps.cyclic_exponent[p] + w_exp) % spec.l);
            }
        }
        g->product_ = std::move(ps);
    }
    auto fam = spec.family;
    if (fam == Family::BinaryTetrahedral || fam == Family::BinaryOctahedral || fam == Family::BinaryIcosahedral) {
        int t = fam == Family::BinaryTetrahedral ? 3 : fam == Family::BinaryOctahedral ? 4 : 5;
        const auto& tab = g->multiplication_table();
        std::size_t n = g->order();
        for (Elem b = 0; b < n && !g->bc_; ++b) {
            Elem b3 = g->power(b, 3);
            if (b3 == 0) continue;
            for (Elem c = 0; c < n; ++c) {
                if (g->power(c, t) != b3) continue;
                Elem bc = tab[std::size_t(b) * n + c];
                if (tab[std::size_t(bc) * n + bc] != b3) continue;
                if (g->generated_subgroup({b, c}).size() != n) continue;
                g->bc_ = std::make_pair(b, c);
                break;
            }
        }
        if (!g->bc_) throw InternalError("no presentation generators found for " + spec.str());
    }
    return g;
}

std::shared_ptr<const MatGroup> MatGroup::from_generators(std::vector<NamedMatrix> gens) {
    return from_generators(std::move(gens), default_element_cap());
}

std::shared_ptr<const MatGroup> MatGroup::from_generators(std::vector<NamedMatrix> gens, std::size_t cap) {
    if (gens.empty()) throw Error("from_generators: need at least one generator");
    std::shared_ptr<MatGroup> g(new MatGroup());
    g->gens_ = std::move(gens);
    g->close(cap);
    return g;
}

void MatGroup::close(std::size_t cap) {
    int dim = gens_.empty() ? 2 : gens_.front().matrix.dim();
    for (const auto& gm : gens_)
        if (gm.matrix.dim() != dim) throw Error("generators have different dimensions");
    const std::size_t ng = gens_.size();
    elems_.push_back(CycMatrix::identity(dim));
    index_.emplace(elems_.back(), 0);
    parent_.push_back(0);
    parent_gen_.push_back(-1);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        for (std::size_t gi = 0; gi < ng; ++gi) {
            CycMatrix m = elems_[i] * gens_[gi].matrix;
            auto it = index_.find(m);
            Elem j;
            if (it != index_.end()) {
                j = it->second;
            } else {
                if (elems_.size() >= cap)
                    throw ResourceError("group closure exceeded the element cap of " + std::to_string(cap));
                j = Elem(elems_.size());
                index_.emplace(m, j);
                elems_.push_back(std::move(m));
                parent_.push_back(Elem(i));
                parent_gen_.push_back(int(gi));
            }
            right_.push_back(j);
        }
    }
    for (std::size_t gi = 0; gi < ng; ++gi) gen_elem_.push_back(right_[gi]);

    inv_.resize(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        auto it = index_.find(elems_[i].adjoint());
        if (it == index_.end() || multiply(Elem(i), it->second) != 0) {
            // not unitary: search by multiplication
            Elem found = 0;
            bool ok = false;
            for (std::size_t j = 0; j < elems_.size() && !ok; ++j)
                if (multiply(Elem(i), Elem(j)) == 0) {
                    found = Elem(j);
                    ok = true;
                }
            inv_[i] = found;
        } else {
            inv_[i] = it->second;
        }
    }

    fixed_point_free_ = true;
    if (dim == 2) {
        for (std::size_t i = 1; i < elems_.size() && fixed_point_free_; ++i) {
            const auto& m = elems_[i];
            Cyc d = Cyc(1) - m.trace() + m.det();
            if (d.is_zero()) fixed_point_free_ = false;
        }
    } else {
        fixed_point_free_ = false;
    }
    compute_classes();
}

void MatGroup::compute_classes() {
    const std::size_t n = elems_.size();
    std::vector<std::int64_t> cls(n, -1);
    std::vector<std::vector<Elem>> classes;
    for (Elem x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        std::vector<Elem> orbit{x};
        cls[x] = std::int64_t(classes.size());
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
                Elem y = conjugate(orbit[k], gen_elem_[gi]);
                if (cls[y] < 0) {
                    cls[y] = std::int64_t(classes.size());
                    orbit.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    classes_ = std::move(classes);
    class_of_.assign(n, 0);
    for (std::size_t c = 0; c < classes_.size(); ++c)
        for (Elem e : classes_[c]) class_of_[e] = c;
}

std::string MatGroup::name() const { return spec_ ? spec_->str() : "custom"; }

int MatGroup::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return int(i);
    return -1;
}

std::optional<Elem> MatGroup::index_of(const CycMatrix& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Elem MatGroup::multiply(Elem i, Elem j) const {
    if (!table_.empty()) return table_[std::size_t(i) * elems_.size() + j];
    // walk j's word from i
    int buf[64];
    std::vector<int> path;
    int len = 0;
    for (Elem k = j; k != 0; k = parent_[k]) {
        if (len < 64) {
            buf[len++] = parent_gen_[k];
        } else {
            if (path.empty()) path.assign(buf, buf + 64);
            path.push_back(parent_gen_[k]);
        }
    }
    Elem r = i;
    if (path.empty()) {
        for (int t = len - 1; t >= 0; --t) r = right_mul_gen(r, buf[t]);
    } else {
        for (auto it = path.rbegin(); it != path.rend(); ++it) r = right_mul_gen(r, *it);
    }
    return r;
}

Elem MatGroup::power(Elem i, long long k) const {
    if (k < 0) return power(inv_[i], -k);
    Elem r = 0, b = i;
    while (k) {
        if (k & 1) r = multiply(r, b);
        k >>= 1;
        if (k) b = multiply(b, b);
    }
    return r;
}

int MatGroup::element_order(Elem i) const {
    int k = 1;
    for (Elem x = i; x != 0; x = multiply(x, i)) ++k;
    return k;
}

Elem MatGroup::conjugate(Elem x, Elem g) const { return multiply(multiply(g, x), inv_[g]); }

std::vector<int> MatGroup::word(Elem i) const {
    std::vector<int> w;
    for (Elem k = i; k != 0; k = parent_[k]) w.push_back(parent_gen_[k]);
    std::reverse(w.begin(), w.end());
    return w;
}

std::string MatGroup::word_string(Elem i) const { return word_string(word(i)); }

std::string MatGroup::word_string(const std::vector<int>& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!s.empty()) s += " ";
        s += gens_[w[i]].name;
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::size_t MatGroup::class_power(std::size_t c, long long k) const { return class_of_[power(class_rep(c), k)]; }

const std::vector<Elem>& MatGroup::multiplication_table() const {
    std::call_once(table_once_, [&] {
        const std::size_t n = elems_.size();
        if (n > 8192) return;
        std::vector<Elem> t(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            t[i * n] = Elem(i);
            for (std::size_t j = 1; j < n; ++j) t[i * n + j] = right_mul_gen(t[i * n + parent_[j]], parent_gen_[j]);
        }
        table_ = std::move(t);
    });
    if (table_.empty()) throw ResourceError("multiplication table too large for group of order " + std::to_string(order()));
    return table_;
}

bool MatGroup::contains_minus_identity() const { return index_of(CycMatrix::scalar(dim(), Cyc(-1))).has_value(); }

std::vector<Elem> MatGroup::generated_subgroup(const std::vector<Elem>& gens) const {
    std::vector<char> in(order(), 0);
    std::vector<Elem> out{0};
    in[0] = 1;
    for (std::size_t k = 0; k < out.size(); ++k)
        for (Elem s : gens) {
            Elem y = multiply(out[k], s);
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Elem> MatGroup::commutator_subgroup_bruteforce() const {
    const auto& t = multiplication_table();
    const std::size_t n = order();
    std::vector<char> seen(n, 0);
    std::vector<Elem> comms;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            Elem ab = t[std::size_t(a) * n + b];
            Elem c = t[std::size_t(t[std::size_t(ab) * n + inv_[a]]) * n + inv_[b]];
            if (!seen[c]) {
                seen[c] = 1;
                comms.push_back(c);
            }
        }
    return generated_subgroup(comms);
}

std::optional<std::pair<Elem, Elem>> MatGroup::polyhedral_bc() const { return bc_; }

std::vector<Cyc> MatGroup::natural_character() const {
    std::vector<Cyc> v;
    for (std::size_t c = 0; c < classes_.size(); ++c) v.push_back(elems_[class_rep(c)].trace());
    return v;
}

const Abelianization& MatGroup::abelianization() const {
    std::call_once(ab_once_, [&] { ab_ = compute_abelianization(); });
    return *ab_;
}

Abelianization MatGroup::compute_abelianization() const {
    if (!spec_) throw Error("abelianization needs a family-built group");
    Abelianization ab;
    const std::size_t n = order();

    // commutator subgroup
    if (n <= 4096) {
        ab.commutator_subgroup = commutator_subgroup_bruteforce();
    } else {
        std::vector<Elem> gens;
        for (std::size_t i = 0; i < gens_.size(); ++i)
            for (std::size_t j = 0; j < gens_.size(); ++j) {
                Elem a = gen_elem_[i], b = gen_elem_[j];
                gens.push_back(multiply(multiply(multiply(a, b), inv_[a]), inv_[b]));
            }
        auto sub = generated_subgroup(gens);
        while (true) {
            std::vector<char> in(n, 0);
            for (Elem e : sub) in[e] = 1;
            bool grew = false;
            for (Elem s : std::vector<Elem>(gens))
                for (Elem g : gen_elem_) {
                    Elem c = conjugate(s, g);
                    if (!in[c]) {
                        gens.push_back(c);
                        in[c] = 1;
                        grew = true;
                    }
                }
            if (!grew) break;
            sub = generated_subgroup(gens);
        }
        ab.commutator_subgroup = sub;
    }

    // cosets
    ab.coset.assign(n, std::uint32_t(-1));
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x) {
        if (ab.coset[x] != std::uint32_t(-1)) continue;
        auto id = std::uint32_t(reps.size());
        reps.push_back(x);
        for (Elem k : ab.commutator_subgroup) ab.coset[multiply(x, k)] = id;
    }
    const std::size_t q = reps.size();
    if (q * ab.commutator_subgroup.size() != n) throw InternalError("commutator cosets do not partition the group");

    // invariant factors from the Cayley graph of the quotient on the construction generators
    {
        const std::size_t m = gens_.size();
        std::vector<std::vector<long long>> coord(q);
        std::vector<char> seen(q, 0);
        IntMatrix rel;
        std::deque<std::uint32_t> queue{ab.coset[0]};
        coord[ab.coset[0]] = std::vector<long long>(m, 0);
        seen[ab.coset[0]] = 1;
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (std::size_t g = 0; g < m; ++g) {
                auto w = ab.coset[right_mul_gen(reps[u], int(g))];
                auto v = coord[u];
                v[g] += 1;
                if (!seen[w]) {
                    seen[w] = 1;
                    coord[w] = v;
                    queue.push_back(w);
                } else {
                    for (std::size_t t = 0; t < m; ++t) v[t] -= coord[w][t];
                    if (std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; })) rel.push_back(v);
                }
            }
        }
        ab.invariant_factors = m == 0 ? std::vector<long long>{} : invariant_factors(rel, m);
    }

    // chosen generators, following the conventions of the tables
    std::vector<std::pair<std::string, Elem>> chosen;
    auto add_base = [&](const FamilySpec& base, const MatGroup* base_group) {
        auto lift = [&](const std::string& name, Elem e) {
            if (base_group == this) return std::make_pair(name, e);
            auto idx = index_of(base_group->element(e));
            if (!idx) throw InternalError("inner generator missing from product");
            return std::make_pair(name, *idx);
        };
        switch (base.family) {
            case Family::Cyclic:
                if (base.a > 1) chosen.push_back(lift("g", base_group->generator_element(0)));
                break;
            case Family::BinaryDihedral:
                chosen.push_back(lift("b", base_group->generator_element(0)));
                if (base.a % 2 == 0) chosen.push_back(lift("c", base_group->generator_element(1)));
                break;
            case Family::BinaryTetrahedral:
            case Family::BinaryOctahedral:
                chosen.push_back(lift("c", base_group->polyhedral_bc()->second));
                break;
            case Family::BinaryIcosahedral: break;
            case Family::D: chosen.push_back(lift("x", base_group->generator_element(0))); break;
            case Family::Pprime: chosen.push_back(lift("z", base_group->generator_element(2))); break;
            case Family::Product: break;
        }
    };
    if (spec_->family == Family::Product) {
        add_base(*spec_->inner, product_->inner.get());
        auto w = index_of(mats::phi(spec_->l));
        if (!w) throw InternalError("scalar generator missing from product");
        chosen.emplace_back("w", *w);
    } else {
        add_base(*spec_, this);
    }

    for (const auto& [name, e] : chosen) {
        AbGenerator g;
        g.name = name;
        g.element = e;
        g.word = word(e);
        int k = 1;
        for (Elem x = e; ab.coset[x] != ab.coset[0]; x = multiply(x, e)) ++k;
        g.order = k;
        ab.generators.push_back(g);
        ab.factors.push_back(k);
    }
    if (ab.order() != (long long)q) throw InternalError("chosen abelianization generators do not match |Ab|");

    // projection: enumerate all residue tuples
    std::vector<std::vector<int>> of_coset(q);
    std::vector<char> hit(q, 0);
    std::vector<int> tuple(ab.factors.size(), 0);
    for (long long count = 0; count < (long long)q; ++count) {
        Elem x = 0;
        for (std::size_t i = 0; i < tuple.size(); ++i) x = multiply(x, power(ab.generators[i].element, tuple[i]));
        auto c = ab.coset[x];
        if (hit[c]) throw InternalError("chosen abelianization generators are not independent");
        hit[c] = 1;
        of_coset[c] = tuple;
        for (std::size_t i = tuple.size(); i-- > 0;) {
            if (++tuple[i] < ab.factors[i]) break;
            tuple[i] = 0;
        }
    }
    ab.projection.resize(n);
    for (Elem x = 0; x < n; ++x) ab.projection[x] = of_coset[ab.coset[x]];
    return ab;
}

nlohmann::json MatGroup::descriptor() const {
    nlohmann::json j;
    j["family"] = spec_ ? spec_->family_name() : "Custom";
    j["params"] = spec_ ? spec_->params_json() : nlohmann::json::object();
    j["spec"] = name();
    j["order"] = order();
    j["num_classes"] = num_classes();
    if (spec_) {
        const auto& ab = abelianization();
        j["abelianization"] = ab.factors;
        j["invariant_factors"] = ab.invariant_factors;
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : ab.generators) gens.push_back({{"name", g.name}, {"order", g.order}, {"word", word_string(g.word)}});
        j["abelianization_generators"] = gens;
    }
    return j;
}

}  // namespace spherex
