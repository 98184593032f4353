#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherex/classify.hpp"
#include "spherex/errors.hpp"

#include <algorithm>

using namespace spherex;

namespace {

CatalogPtr cat(const std::string& s) { return irrep_catalog(MatGroup::build(FamilySpec::parse(s))); }

// <a, b> summed over classes, written out here rather than via the library
Cyc inner(const MatGroup& g, const Character& a, const Character& b) {
    Cyc s(0);
    for (std::size_t c = 0; c < g.num_classes(); ++c) s += a[c] * b[c].conj() * Rational((long long)g.class_size(c));
    return s * Rational(1, (long long)g.order());
}

std::vector<long long> degrees(const Catalog& c) {
    std::vector<long long> d;
    for (const auto& r : c.irreps) d.push_back(r.degree());
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("catalog completeness and orthonormality") {
    for (const auto& s : shipped_specs(200)) {
        CAPTURE(s);
        auto c = cat(s);
        const auto& g = *c->group;
        CHECK(c->irreps.size() == g.num_classes());
        long long sq = 0;
        for (const auto& r : c->irreps) sq += r.degree() * r.degree();
        CHECK(sq == (long long)g.order());
        for (std::size_t i = 0; i < c->irreps.size(); ++i)
            for (std::size_t j = i; j < c->irreps.size(); ++j)
                CHECK(inner(g, c->irreps[i].character, c->irreps[j].character) == Cyc(i == j ? 1 : 0));
    }
}

TEST_CASE("degrees") {
    CHECK(degrees(*cat("BD:5")) == std::vector<long long>{1, 1, 1, 1, 2, 2, 2, 2});
    CHECK(degrees(*cat("BT")) == std::vector<long long>{1, 1, 1, 2, 2, 2, 3});
    CHECK(degrees(*cat("BO")) == std::vector<long long>{1, 1, 2, 2, 2, 3, 3, 4});
    CHECK(degrees(*cat("BI")) == std::vector<long long>{1, 2, 2, 3, 3, 4, 4, 5, 6});
    CHECK(cat("D:2,2")->irreps.size() == 16);
    CHECK(cat("BIxC:7")->irreps.size() == 63);
}

TEST_CASE("labels") {
    auto c = cat("BT");
    CHECK(c->find("alpha_4").character == natural_character(c->group));
    CHECK(c->find("alpha_1").character == trivial_character(c->group));
    CHECK(c->find("alpha_7").degree() == 3);
    auto d = cat("D:3,2");
    CHECK(d->index_of("varrho_4,3"));
    CHECK_FALSE(d->index_of("varrho_5,0"));
    CHECK_THROWS(d->find("rho_1"));
    auto p = cat("BTxC:5");
    CHECK(p->find("alpha_4 x alpha_2").degree() == 2);
}

TEST_CASE("tensor products") {
    auto c = cat("BT");
    auto nat = c->find("alpha_4").character;
    auto dec = tensor_decompose(nat, nat, *c);
    std::map<std::string, long long> m(dec.begin(), dec.end());
    CHECK(m == std::map<std::string, long long>{{"alpha_1", 1}, {"alpha_7", 1}});
    auto bi = cat("BI");
    auto n2 = bi->find("alpha_2").character;
    CHECK(char_multiplicity(n2 * bi->find("alpha_5").character, bi->find("alpha_7").character) == 1);
}

TEST_CASE("determinant paths agree") {
    for (const char* s : {"BD:4", "BD:5", "D:2,2", "D:3,1", "P:2", "BD:3xC:7", "D:2,1xC:5"}) {
        CAPTURE(s);
        auto c = cat(s);
        for (const auto& r : c->irreps) {
            if (!r.has_matrices()) continue;
            CAPTURE(r.label);
            CHECK(det_character(r) == det_character(r.character));
        }
    }
}

TEST_CASE("matrix irreps are homomorphisms satisfying the family relations") {
    for (const char* s : {"BD:6", "D:2,3", "P:2", "D:2,2xC:3"}) {
        CAPTURE(s);
        auto c = cat(s);
        for (const auto& r : c->irreps) {
            if (!r.has_matrices()) continue;
            CAPTURE(r.label);
            CHECK(is_homomorphism(r));
            CHECK(satisfies_family_relations(r));
        }
    }
}

TEST_CASE("burnside-brauer reproduces the polyhedral tables") {
    for (const char* s : {"BT", "BO", "BI"}) {
        CAPTURE(s);
        auto c = cat(s);
        auto bb = burnside_brauer(c->group);
        REQUIRE(bb.size() == c->irreps.size());
        for (const auto& r : c->irreps) CHECK(std::find(bb.begin(), bb.end(), r.character) != bb.end());
    }
}

TEST_CASE("linear characters") {
    auto g = MatGroup::build(FamilySpec::parse("D:2,2"));
    auto lin = linear_characters(g);
    CHECK(lin.size() == 8);
    for (const auto& x : lin) CHECK(x.degree() == 1);
}
