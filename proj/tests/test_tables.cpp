#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherex/errors.hpp"
#include "spherex/tables.hpp"

using namespace spherex;

TEST_CASE("csv escaping") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    auto rows = csv_parse("a,\"b,c\",\"d\"\"e\"\r\n1,,3\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"a", "b,c", "d\"e"});
    CHECK(rows[1] == std::vector<std::string>{"1", "", "3"});
    CHECK_THROWS_AS(csv_parse("\"open"), ParseError);
}

TEST_CASE("character tables round trip") {
    for (const char* s : {"C:5,2", "BD:4", "BT", "D:2,2", "P:2", "BTxC:5"}) {
        CAPTURE(s);
        auto t = character_table(*irrep_catalog(MatGroup::build(FamilySpec::parse(s))));
        CHECK(CharTable::from_csv(t.to_csv()) == t);
        CHECK(CharTable::from_json(nlohmann::json::parse(t.to_json().dump())) == t);
        CHECK(t.rows.size() == t.classes.size());
    }
}

TEST_CASE("invariant tables round trip") {
    for (const char* s : {"C:5,2", "BD:4", "BO", "D:3,1", "BD:3xC:5"}) {
        CAPTURE(s);
        auto t = invariant_table(InvariantContext(MatGroup::build(FamilySpec::parse(s))));
        CHECK(InvariantTable::from_csv(t.to_csv()) == t);
        CHECK(InvariantTable::from_json(nlohmann::json::parse(t.to_json().dump())) == t);
    }
}

TEST_CASE("lens space column") {
    auto t = invariant_table(InvariantContext(MatGroup::build(FamilySpec::cyclic(5, 2))));
    REQUIRE(t.rows.size() == 5);
    std::vector<std::string> col;
    for (const auto& r : t.rows) col.push_back(r.first.at(0).str());
    CHECK(col == std::vector<std::string>{"0", "1/5", "2/5", "3/5", "4/5"});
}

TEST_CASE("scaled column") {
    auto t = invariant_table(InvariantContext(MatGroup::build(FamilySpec::d(2, 2))));
    std::map<std::string, std::string> got;
    for (const auto& r : t.rows) got[r.label] = r.scaled.str();
    CHECK(got["varrho_1,0"] == "-4");
    CHECK(got["varrho_4,0"] == "16");
    auto text = t.to_text("xi");
    CHECK(text.find("40*xi") != std::string::npos);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(InvariantTable::from_csv("label,rank\n"), ParseError);
    CHECK_THROWS_AS(InvariantTable::from_csv("label,rank,c1(x),c2,xi,scaled\na,1,0,0\n"), ParseError);
    CHECK_THROWS_AS(CharTable::from_csv("x,y\n"), ParseError);
    CHECK_THROWS_AS(CharTable::from_json(nlohmann::json::object()), ParseError);
}
