// One line per acceptance criterion. Published values are typed in below;
// everything else is recomputed here by brute force.
#include "spherex/classify.hpp"
#include "spherex/errors.hpp"
#include "spherex/iso_checks.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <numeric>

using namespace spherex;

namespace {

std::string S(long long x) { return std::to_string(x); }

std::map<std::string, std::unique_ptr<InvariantContext>> cache;

const InvariantContext& ctx(const std::string& s) {
    auto& p = cache[s];
    if (!p) p = std::make_unique<InvariantContext>(MatGroup::build(FamilySpec::parse(s)));
    return *p;
}

const Irrep& varrho(const InvariantContext& c, long long t, long long s) { return c.catalog().find("varrho_" + S(t) + "," + S(s)); }

struct Outcome {
    bool ok = true;
    std::string note;
    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

// scaled integers from a published table, compared as classes mod Z
void xi_table(Outcome& o, const std::string& spec, const std::vector<std::vector<long long>>& want) {
    const auto& c = ctx(spec);
    const long long n = (long long)c.group()->order();
    for (std::size_t t = 0; t < want.size(); ++t)
        for (std::size_t s = 0; s < want[t].size(); ++s) {
            RatMod1 got = c.xi(varrho(c, t + 1, s).character);
            o.expect(got == RatMod1(Rational(want[t][s], n)),
                     spec + " t=" + S(t + 1) + " s=" + S(s) + ": expected " + S(want[t][s]) + "/" + S(n) + ", got " + got.str());
        }
}

void c1_table(Outcome& o, const std::string& spec, long long scale, const std::vector<std::vector<long long>>& want) {
    const auto& c = ctx(spec);
    for (std::size_t t = 0; t < want.size(); ++t)
        for (std::size_t s = 0; s < want[t].size(); ++s) {
            auto got = c.first_ccs(varrho(c, t + 1, s)).at(0);
            o.expect(got == RatMod1(Rational(want[t][s], scale)), spec + " t=" + S(t + 1) + " s=" + S(s) + ": got " + got.str());
        }
}

Cyc inner(const MatGroup& g, const std::vector<Cyc>& a, const std::vector<Cyc>& bconj) {
    Cyc s(0);
    for (std::size_t c = 0; c < g.num_classes(); ++c) s += a[c] * bconj[c] * Rational((long long)g.class_size(c));
    return s * Rational(1, (long long)g.order());
}

// The D(k, r) triple sum, evaluated in floating point.
double d_sum(long long k, long long r, long long t, long long s) {
    const long long n = 1LL << k, m = 2 * r + 1;
    auto z = [](long long N, long long e) { return std::polar(1.0, 2 * std::numbers::pi * double(e) / double(N)); };
    auto sg = [](long long e) { return e % 2 ? -1.0 : 1.0; };
    std::complex<double> sum;
    for (long long l = 1; l < n; ++l) sum += (sg(t * l) * 2.0 * z(n, l * s) - 2.0) / (z(n, l) + z(n, -l) - sg(l) * 2.0);
    for (long long q = 1; q <= 2 * r; ++q)
        for (long long l = 0; l < n; ++l)
            sum += (sg(t * l) * z(n, l * s) * (z(m, t * q) + z(m, -t * q)) - 2.0) / (z(n, l) + z(n, -l) - sg(l) * (z(m, q) + z(m, -q)));
    for (long long q = 0; q <= 2 * r; ++q)
        for (long long l = 0; l < n; ++l) sum -= 2.0 / (z(2 * n, 2 * l + 1) + z(2 * n, -(2 * l + 1)));
    return sum.real() / double(2 * n * m);
}

double frac(double x) {
    double f = x - std::floor(x);
    return f > 1 - 1e-9 ? 0.0 : f;
}

Outcome c1() {
    Outcome o;
    xi_table(o, "D:2,2", {{-4, -9}, {-16, -1}, {4, -1}, {16, -9}});
    return o;
}

Outcome c2() {
    Outcome o;
    xi_table(o, "D:3,2", {{96, 31, 76, 71}, {64, 39, 44, 79}, {64, 79, 44, 39}, {96, 71, 76, 31}});
    xi_table(o, "D:3,1", {{-32, -17, -20, -41}, {-32, -41, -20, -17}});
    if (o.ok) o.note = "cell t=1 s=0 of D:3,2 is printed as 96; the unreduced sum gives 16, equal mod 80";
    return o;
}

Outcome c3() {
    Outcome o;
    c1_table(o, "D:2,2", 4, {{0, 1}, {2, 3}, {0, 1}, {2, 3}});
    c1_table(o, "D:3,2", 8, {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 2, 3}, {4, 5, 6, 7}});
    c1_table(o, "D:3,1", 8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
    return o;
}

Outcome c4() {
    Outcome o;
    struct T {
        const char* spec;
        std::vector<std::pair<long long, long long>> first, second;
    };
    const std::vector<T> tables = {
        {"BT", {{0, 1}, {2, 3}, {1, 3}, {0, 1}, {1, 3}, {2, 3}, {0, 1}}, {{0, 1}, {0, 1}, {0, 1}, {1, 24}, {3, 8}, {3, 8}, {1, 6}}},
        {"BO", {{0, 1}, {1, 2}, {1, 2}, {0, 1}, {0, 1}, {1, 2}, {0, 1}, {0, 1}}, {{0, 1}, {0, 1}, {1, 3}, {1, 48}, {25, 48}, {7, 12}, {1, 12}, {5, 24}}},
        {"BI", {}, {{0, 1}, {1, 120}, {49, 120}, {19, 30}, {1, 30}, {5, 6}, {1, 12}, {1, 6}, {7, 24}}},
    };
    for (const auto& t : tables) {
        const auto& c = ctx(t.spec);
        auto bb = burnside_brauer(c.group());
        const auto& irr = c.catalog().irreps;
        o.expect(irr.size() == t.second.size() && bb.size() == irr.size(), std::string(t.spec) + ": wrong irrep count");
        if (!o.ok) break;
        for (std::size_t i = 0; i < irr.size(); ++i) {
            const Character& chi = irr[i].character;
            o.expect(std::find(bb.begin(), bb.end(), chi) != bb.end(), std::string(t.spec) + " " + irr[i].label + " missing from the character-only catalog");
            Character det = det_character(chi);  // Newton identities
            if (!t.first.empty()) {
                auto f = first_ccs(det, c.group()->abelianization()).at(0);
                o.expect(f == RatMod1(Rational(t.first[i].first, t.first[i].second)), std::string(t.spec) + " " + irr[i].label + " c1 = " + f.str());
            }
            RatMod1 c2 = c.xi(chi) - c.xi(det);
            o.expect(c2 == RatMod1(Rational(t.second[i].first, t.second[i].second)), std::string(t.spec) + " " + irr[i].label + " c2 = " + c2.str());
        }
    }
    return o;
}

Outcome c5() {
    Outcome o;
    for (long long n = 1; n <= 12; ++n)
        for (long long q = 1; q < std::max(2LL, n); ++q) {
            if (std::gcd(n, q) != 1) continue;
            const std::string spec = n == 1 ? "C:1" : "C:" + S(n) + "," + S(q);
            const auto& c = ctx(spec);
            for (long long j = 0; j < n; ++j) {
                auto f = c.first_ccs(c.catalog().find("alpha_" + S(j)));
                // the trivial group has no H_1 generator
                if (n == 1) {
                    o.expect(f.empty(), "C:1 has a first CCS-number");
                    continue;
                }
                o.expect(f.size() == 1 && f[0] == RatMod1(Rational(j, n)), spec + " alpha_" + S(j));
            }
        }
    const long long even[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};  // halves on (b, c)
    for (long long q = 2; q <= 12; ++q) {
        const auto& c = ctx("BD:" + S(q));
        for (long long j = 0; j < 4; ++j) {
            auto f = c.first_ccs(c.catalog().find("alpha_" + S(j)));
            if (q % 2 == 0) {
                o.expect(f.size() == 2 && f[0] == RatMod1(Rational(even[j][0], 2)) && f[1] == RatMod1(Rational(even[j][1], 2)), "BD:" + S(q) + " alpha_" + S(j));
            } else {
                o.expect(f.size() == 1 && f[0] == RatMod1(Rational(j, 4)), "BD:" + S(q) + " alpha_" + S(j));
            }
        }
    }
    return o;
}

Outcome c6() {
    Outcome o;
    for (long long q = 2; q <= 30; ++q) {
        const auto& c = ctx("BD:" + S(q));
        for (long long t = 1; t < q; ++t) {
            RatMod1 want(Rational(t * t - 2 * q * t - 2 * q, 4 * q));
            RatMod1 got = c.xi(c.catalog().find("rho_" + S(t)).character);
            o.expect(got == want, "q=" + S(q) + " t=" + S(t) + ": " + got.str() + " vs " + want.str());
        }
    }
    return o;
}

Outcome c7() {
    Outcome o;
    for (long long k = 2; k <= 3; ++k)
        for (long long r = 1; r <= 3; ++r) {
            const auto& c = ctx("D:" + S(k) + "," + S(r));
            for (long long t = 1; t <= 2 * r; ++t)
                for (long long s = 0; s < (1LL << (k - 1)); ++s) {
                    RatMod1 got = c.xi(varrho(c, t, s).character);
                    double want = frac(d_sum(k, r, t, s));
                    const std::string at = "k=" + S(k) + " r=" + S(r) + " t=" + S(t) + " s=" + S(s);
                    double diff = std::abs(got.value().to_double() - want);
                    o.expect(std::min(diff, 1 - diff) < 1e-9, at + ": " + got.str() + " vs " + std::to_string(want));
                    o.expect(got == xi_closed_form_d(k, r, t, s), at + ": exact closed form differs");
                }
        }
    return o;
}

Outcome c8() {
    Outcome o;
    for (const auto& s : shipped_specs(2000)) {
        const auto& c = ctx(s);
        const auto& g = *c.group();
        const auto& irr = c.catalog().irreps;
        long long sq = 0;
        for (const auto& r : irr) sq += r.degree() * r.degree();
        o.expect(sq == (long long)g.order(), s + ": sum of squared degrees " + S(sq));
        o.expect(irr.size() == g.num_classes(), s + ": " + S((long long)irr.size()) + " irreps for " + S((long long)g.num_classes()) + " classes");
        std::vector<std::vector<Cyc>> conj;
        for (const auto& r : irr) conj.push_back(r.character.conj().values());
        for (std::size_t i = 0; i < irr.size() && o.ok; ++i)
            for (std::size_t j = i; j < irr.size(); ++j)
                if (!(inner(g, irr[i].character.values(), conj[j]) == Cyc(i == j ? 1 : 0))) {
                    o.fail(s + ": <" + irr[i].label + ", " + irr[j].label + "> wrong");
                    break;
                }
    }
    return o;
}

Outcome c9() {
    Outcome o;
    std::vector<std::string> bad;
    for (const auto& s : shipped_specs(2000)) {
        auto rep = classification_report(ctx(s));
        if (rep.verdict == Verdict::CollisionsFound) {
            std::string d = s + " (";
            for (std::size_t i = 0; i < rep.collisions.size(); ++i) {
                d += i ? "; " : "";
                for (std::size_t k = 0; k < rep.collisions[i].size(); ++k) d += (k ? " = " : "") + rep.collisions[i][k];
            }
            bad.push_back(d + ")");
        }
    }
    if (!bad.empty()) {
        std::string msg = "hard collisions in";
        for (const auto& b : bad) msg += " " + b;
        o.fail(msg);
    }
    auto scan = conjecture_scan(4, 5);
    long long checked = 0;
    for (const auto& p : scan.points) {
        o.expect(p.status == "verified", "D:" + S(p.k) + "," + S(p.r) + " " + p.status);
        checked += p.status == "verified";
    }
    if (o.ok) o.note = "scan verified at " + S(checked) + " grid points";
    return o;
}

Outcome c10() {
    Outcome o;
    long long n = 0;
    for (const auto& c : all_iso_checks()) {
        ++n;
        o.expect(c.result.ok(), c.name + (c.result.detail.empty() ? "" : ": " + c.result.detail));
    }
    if (o.ok) o.note = S(n) + " maps verified";
    return o;
}

Outcome c11() {
    Outcome o;
    for (long long n = 1; n <= 50; ++n)
        for (long long t = 1; t <= 10; ++t)
            for (long long j = 1; j < n; ++j) o.expect(telescoping_identity_check(n, t, j), "telescoping n=" + S(n) + " t=" + S(t) + " j=" + S(j));
    for (const auto& s : shipped_specs(2000)) {
        const auto& c = ctx(s);
        for (const auto& r : c.catalog().irreps) {
            if (r.degree() == 1) o.expect(c.second_ccs(r) == RatMod1(), s + " " + r.label + ": c2 of a degree-1 irrep is nonzero");
            o.expect(c.first_ccs(r.character) == first_ccs(det_character(r.character), c.group()->abelianization()), s + " " + r.label + ": c1 != c1 of det");
        }
    }
    std::string skipped;
    for (const auto& gamma : {FamilySpec::bt(), FamilySpec::binary_dihedral(3), FamilySpec::bi()})
        for (long long l : {5, 7}) {
            if (std::gcd(gamma.expected_order(), l) != 1) {
                skipped += " " + gamma.str() + "xC:" + S(l);
                continue;
            }
            o.expect(tensor_chern_first_check(gamma, l), "tensor check " + gamma.str() + "xC:" + S(l));
        }
    if (o.ok && !skipped.empty()) o.note = "not a fixed-point-free group, skipped:" + skipped;
    return o;
}

Outcome c12() {
    Outcome o;
    const auto& c = ctx("BIxC:7");
    const auto& irr = c.catalog().irreps;
    std::vector<CcsVector> v;
    for (const auto& r : irr) v.push_back(c.ccs_vector(r));
    std::string found;
    for (std::size_t a = 0; a < v.size() && found.empty(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            if (v[a].rank == v[b].rank && v[a].first == v[b].first && !(v[a] == v[b])) {
                found = irr[a].label + " " + v[a].str() + " vs " + irr[b].label + " " + v[b].str();
                break;
            }
    o.expect(!found.empty(), "no pair sharing rank and first CCS-numbers");
    bool distinct = true;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b) distinct = distinct && !(v[a] == v[b]);
    o.expect(distinct, "full CCS vectors collide on BIxC:7");
    if (o.ok) o.note = found + ", " + S((long long)irr.size()) + " irreps";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"D:2,2 40*xi table", c1},
        {"D:3,2 80*xi and D:3,1 48*xi tables", c2},
        {"D-family first CCS-number tables", c3},
        {"BT, BO, BI CCS-numbers from characters alone", c4},
        {"lens space and BD one-dimensional first CCS-numbers", c5},
        {"BD closed form, q <= 30", c6},
        {"D(k,r) closed form, k <= 3, r <= 3", c7},
        {"catalog completeness and orthonormality, order <= 2000", c8},
        {"classification verdicts and conjecture scan k <= 4, r <= 5", c9},
        {"presentation isomorphisms", c10},
        {"telescoping, degree-1 c2, c1 through det, tensor c1", c11},
        {"rank and c1 do not classify BIxC:7, CCS vectors do", c12},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.ok;
        std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << (o.note.empty() ? "" : "  [" + o.note + "]") << std::endl;
    }
    std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
