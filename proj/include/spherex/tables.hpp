#pragma once

#include "spherex/invariants.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace spherex {

struct CharTableClass {
    long long rep = 0;  // element index of the representative
    long long size = 1;
    long long order = 1;  // element order
    friend bool operator==(const CharTableClass&, const CharTableClass&) = default;
};

struct CharTableRow {
    std::string label;
    long long degree = 1;
    std::vector<Cyc> values;
    friend bool operator==(const CharTableRow&, const CharTableRow&) = default;
};

struct CharTable {
    std::string group;
    long long order = 1;
    std::vector<CharTableClass> classes;
    std::vector<CharTableRow> rows;

    std::string to_csv() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
    static CharTable from_csv(std::string_view text);
    static CharTable from_json(const nlohmann::json& j);
    friend bool operator==(const CharTable&, const CharTable&) = default;
};

CharTable character_table(const Catalog& cat);

struct InvariantRow {
    std::string label;
    long long rank = 1;
    std::vector<RatMod1> first;  // one per abelianization generator
    RatMod1 second;
    RatMod1 xi;
    Rational scaled;  // |G| times the unreduced xi
    friend bool operator==(const InvariantRow&, const InvariantRow&) = default;
};

struct InvariantTable {
    std::string group;
    long long order = 1;
    std::vector<std::string> generators;
    std::vector<InvariantRow> rows;

    std::string to_csv() const;
    nlohmann::json to_json() const;
    // mode "ccs" prints CCS vectors, "xi" prints xi with the scaled integer
    std::string to_text(std::string_view mode) const;
    static InvariantTable from_csv(std::string_view text);
    static InvariantTable from_json(const nlohmann::json& j);
    friend bool operator==(const InvariantTable&, const InvariantTable&) = default;
};

InvariantTable invariant_table(const InvariantContext& ctx);

// RFC 4180 helpers
std::string csv_escape(std::string_view cell);
std::vector<std::vector<std::string>> csv_parse(std::string_view text);

}  // namespace spherex
