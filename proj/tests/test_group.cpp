#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherex/classify.hpp"
#include "spherex/errors.hpp"
#include "spherex/presentation.hpp"
#include "spherex/snf.hpp"

#include <cstdlib>
#include <numeric>
#include <set>

using namespace spherex;

namespace {

GroupPtr G(const char* s) { return MatGroup::build(FamilySpec::parse(s)); }

}  // namespace

TEST_CASE("spec parsing") {
    CHECK(FamilySpec::parse("C:5,2").str() == "C:5,2");
    CHECK(FamilySpec::parse("BD:7").expected_order() == 28);
    CHECK(FamilySpec::parse("BTxC:5").expected_order() == 120);
    CHECK(FamilySpec::parse("D:3,2").expected_order() == 80);
    CHECK(FamilySpec::parse("P:2").expected_order() == 72);
    CHECK(FamilySpec::parse("D:2,1xC:5").is_d_family());
    CHECK_FALSE(FamilySpec::parse("BD:5").is_d_family());
    CHECK_THROWS_AS(FamilySpec::parse("Q:3"), SpecError);
    CHECK_THROWS_AS(FamilySpec::parse("C:five"), Error);
    CHECK_THROWS_AS(FamilySpec::parse("C:4,2").validate(), SpecError);
    CHECK_THROWS_AS(FamilySpec::parse("BD:1").validate(), SpecError);
    CHECK_THROWS_AS(FamilySpec::parse("D:1,1").validate(), SpecError);
    CHECK_THROWS_AS(FamilySpec::parse("BIxC:5").validate(), SpecError);
    CHECK_THROWS_AS(FamilySpec::parse("D:2,1xC:3").validate(), SpecError);
}

TEST_CASE("groups are fixed-point free with the expected order") {
    for (const auto& s : shipped_specs(1000)) {
        CAPTURE(s);
        auto g = MatGroup::build(FamilySpec::parse(s));
        CHECK((long long)g->order() == FamilySpec::parse(s).expected_order());
        CHECK(g->fixed_point_free());
        std::size_t total = 0;
        for (std::size_t c = 0; c < g->num_classes(); ++c) total += g->class_size(c);
        CHECK(total == g->order());
        CHECK(g->class_size(0) == 1);
    }
}

TEST_CASE("cyclic groups are diagonal") {
    auto g = G("C:5,2");
    CHECK(g->order() == 5);
    for (std::size_t i = 0; i < g->order(); ++i) {
        CHECK(g->element(i)(0, 1).is_zero());
        CHECK(g->element(i)(1, 0).is_zero());
    }
}

TEST_CASE("class counts") {
    CHECK(G("BT")->num_classes() == 7);
    CHECK(G("BO")->num_classes() == 8);
    CHECK(G("BI")->num_classes() == 9);
    CHECK(G("BD:5")->num_classes() == 8);
    CHECK(G("D:2,2")->num_classes() == 16);
}

TEST_CASE("abelianization agrees with the commutator subgroup") {
    for (const char* s : {"BD:3", "BD:4", "BT", "BO", "BI", "D:2,2", "P:2", "BTxC:5", "D:2,1xC:5"}) {
        CAPTURE(s);
        auto g = G(s);
        const auto& ab = g->abelianization();
        auto comm = g->commutator_subgroup_bruteforce();
        CHECK(ab.order() * (long long)comm.size() == (long long)g->order());
        long long prod = 1;
        for (auto f : ab.invariant_factors) prod *= f;
        CHECK(prod == ab.order());
    }
    auto inv = [](const char* s) { return G(s)->abelianization().invariant_factors; };
    CHECK(inv("BD:3") == std::vector<long long>{4});
    CHECK(inv("BD:4") == std::vector<long long>{2, 2});
    CHECK(inv("D:2,2") == std::vector<long long>{8});
    CHECK(inv("BT") == std::vector<long long>{3});
    CHECK(inv("BI").empty());
}

TEST_CASE("smith normal form") {
    CHECK(invariant_factors({{2, 0}, {0, 3}}, 2) == std::vector<long long>{6});
    CHECK(invariant_factors({{2, 4}, {6, 8}}, 2) == std::vector<long long>{2, 4});
    CHECK(invariant_factors({{1, 1}}, 2) == std::vector<long long>{0});
    CHECK(smith_diagonal({{4, 6}, {6, 9}}, 2) == std::vector<long long>{1, 0});
}

TEST_CASE("family presentations hold in the realizations") {
    for (const char* s : {"C:7,3", "BD:5", "BD:6", "D:2,2", "D:3,1", "P:2", "BD:3xC:5", "D:2,1xC:5", "P:2xC:5"}) {
        CAPTURE(s);
        auto g = G(s);
        auto p = family_presentation(*g->spec());
        std::map<char, std::string> id;
        for (char c : p.generators) id[c] = std::string(1, c);
        auto r = verify_isomorphism(p, id, *g);
        CHECK(r.relations_hold);
        CHECK(r.surjective);
    }
    CHECK_THROWS_AS(family_presentation(FamilySpec::bt()), SpecError);
}

TEST_CASE("presentation checks") {
    auto q8 = G("BD:2");
    auto p = Presentation::parse("xy", {"x^2 = (xy)^2 = y^2", "x^4"});
    CHECK(verify_isomorphism(p, {{'x', "b"}, {'y', "c"}}, *q8).ok());
    auto bad = verify_isomorphism(p, {{'x', "1"}, {'y', "c"}}, *q8);
    CHECK_FALSE(bad.ok());
    CHECK_THROWS_AS(Presentation::parse("xy", {"x^2 = z"}), ParseError);
    CHECK(Word::parse("(xy)^-2 x").str() == Word::parse("y^-1 x^-1 y^-1 x^-1 x").str());
}

TEST_CASE("element cap") {
    CHECK_THROWS_AS(MatGroup::build(FamilySpec::bi(), 100), ResourceError);
    setenv("SPHEREX_ELEMENT_CAP", "40", 1);
    CHECK_THROWS_AS(MatGroup::build(FamilySpec::bo()), ResourceError);
    CHECK(MatGroup::build(FamilySpec::bt())->order() == 24);
    setenv("SPHEREX_ELEMENT_CAP", "lots", 1);
    CHECK_THROWS_AS(MatGroup::default_element_cap(), SpecError);
    unsetenv("SPHEREX_ELEMENT_CAP");
}
