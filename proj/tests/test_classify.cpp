#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherex/classify.hpp"
#include "spherex/errors.hpp"
#include "spherex/iso_checks.hpp"

using namespace spherex;

namespace {

InvariantContext ctx(const std::string& s) { return InvariantContext(MatGroup::build(FamilySpec::parse(s))); }

}  // namespace

TEST_CASE("reports") {
    CHECK(classification_report(ctx("BD:5")).verdict == Verdict::Injective);
    auto bt = classification_report(ctx("BT"));
    CHECK(bt.verdict == Verdict::Injective);
    CHECK(bt.entries.size() == 7);
    auto d31 = classification_report(ctx("D:3,1"));
    CHECK(d31.verdict == Verdict::Injective);
    CHECK(d31.collisions.empty());
    auto j = bt.to_json();
    CHECK(j["verdict"] == "Injective");
    CHECK(j["entries"].size() == 7);
}

TEST_CASE("every label appears once and collisions are maximal") {
    for (const char* s : {"BD:6", "BD:10", "D:3,2", "BOxC:5"}) {
        auto rep = classification_report(ctx(s));
        std::set<std::string> seen;
        for (const auto& [l, v] : rep.entries) CHECK(seen.insert(l).second);
        std::map<CcsVector, int> count;
        for (const auto& [l, v] : rep.entries) ++count[v];
        std::size_t groups = 0;
        for (const auto& [v, n] : count) groups += n > 1;
        CHECK(groups == rep.collisions.size());
    }
}

TEST_CASE("binary dihedral collisions are reported as hard findings") {
    // t1 + t2 = 2q is impossible, but the closed form only needs (t1 - t2)(t1 + t2 - 2q) = 0 mod 4q
    auto rep = classification_report(ctx("BD:6"));
    CHECK(rep.verdict == Verdict::CollisionsFound);
    REQUIRE(rep.collisions.size() == 1);
    CHECK(rep.collisions[0] == std::vector<std::string>{"rho_1", "rho_5"});
    CHECK(rep.excluded.empty());
}

TEST_CASE("D-family parameters") {
    CHECK(d_family_params("varrho_3,1") == std::make_tuple(3LL, 1LL, 0LL));
    CHECK(d_family_params("varrho_2,0 x alpha_4") == std::make_tuple(2LL, 0LL, 4LL));
    CHECK_FALSE(d_family_params("alpha_3"));
}

TEST_CASE("collision lemmas") {
    for (const char* s : {"D:2,2", "D:3,2", "D:3,1", "D:2,1xC:5"}) CHECK(verify_collision_lemmas(ctx(s)));
    CHECK_THROWS(verify_collision_lemmas(ctx("BT")));
}

TEST_CASE("conjecture scan") {
    auto rep = conjecture_scan(3, 2, 2);
    REQUIRE(rep.points.size() == 4);
    CHECK(rep.ok());
    CHECK(rep.points[0].k == 2);
    CHECK(rep.points[0].r == 1);
    for (const auto& p : rep.points) {
        CHECK(p.status == "verified");
        CHECK(p.counterexamples.empty());
    }
    // D(3,1): equal xi across different s only
    CHECK(rep.points[2].cross_s_collisions > 0);
    auto j = rep.to_json();
    CHECK(j[0]["params"] == nlohmann::json::array({2, 1}));
    CHECK(j[0]["orders"] == 24);
    CHECK(j[0]["status"] == "verified");
    auto capped = conjecture_scan(3, 1, 1, 30);
    CHECK(capped.points[1].status == "skipped");
    CHECK_THROWS_AS(conjecture_scan(1, 1), SpecError);
}

TEST_CASE("rank and first CCS-numbers do not classify BI x C7") {
    auto c = ctx("BIxC:7");
    auto hit = rank_first_collision(c);
    REQUIRE(hit);
    CHECK(hit->va.rank == hit->vb.rank);
    CHECK(hit->va.first == hit->vb.first);
    CHECK_FALSE(hit->va == hit->vb);
    CHECK(classification_report(c).verdict == Verdict::Injective);
}

TEST_CASE("isomorphism checks") {
    for (const auto& c : all_iso_checks()) {
        CAPTURE(c.name);
        CHECK(c.result.relations_hold);
        CHECK(c.result.surjective);
    }
}

TEST_CASE("shipped specs are valid and sorted") {
    auto s = shipped_specs();
    long long last = 0;
    for (const auto& x : s) {
        auto f = FamilySpec::parse(x);
        CHECK_NOTHROW(f.validate());
        CHECK(f.expected_order() >= last);
        last = f.expected_order();
    }
}
