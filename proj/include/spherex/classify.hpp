#pragma once

#include "spherex/invariants.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace spherex {

enum class Verdict { Injective, CollisionsFound, ConjecturalCaseExcluded };
std::string verdict_name(Verdict v);

struct ClassificationReport {
    std::string group;
    std::vector<std::pair<std::string, CcsVector>> entries;
    // maximal sets of labels sharing a CCS vector
    std::vector<std::vector<std::string>> collisions;
    Verdict verdict = Verdict::Injective;
    // rank-2 D-family labels whose collision differs only in t (same parity)
    std::vector<std::string> excluded;

    nlohmann::json to_json() const;
};

ClassificationReport classification_report(const InvariantContext& ctx);

// (t, s, j) for varrho_{t,s} of D(k,r), or varrho_{t,s} x alpha_j of a product (j = 0 otherwise).
std::optional<std::tuple<long long, long long, long long>> d_family_params(const std::string& label);

struct ScanPoint {
    long long k = 0, r = 0;
    long long order = 0;
    std::string status;  // "verified", "counterexample" or "skipped"
    nlohmann::json counterexamples = nlohmann::json::array();
    // equal xi across different s: allowed, the first CCS-number separates them
    long long cross_s_collisions = 0;
    nlohmann::json to_json() const;
};

struct ScanReport {
    std::vector<ScanPoint> points;
    bool ok() const;
    nlohmann::json to_json() const;
};

// For each D(k, r) with 2 <= k <= k_max, 1 <= r <= r_max: within each s and each
// parity class of t, t -> xi(varrho_{t,s}) must be injective. Grid points run on
// `threads` workers (0: hardware concurrency); groups above `cap` are skipped.
ScanReport conjecture_scan(long long k_max, long long r_max, unsigned threads = 0, std::size_t cap = 5000);

// D family only: equal first CCS-numbers force equal s and t-parity, and
// equal CCS vectors force equal xi.
bool verify_collision_lemmas(const InvariantContext& ctx);

// Two irreps with equal rank and first CCS-numbers but different CCS vectors.
struct RankFirstCollision {
    std::string a, b;
    CcsVector va, vb;
};
std::optional<RankFirstCollision> rank_first_collision(const InvariantContext& ctx);

// Groups exercised by the property suites, ordered by size.
std::vector<std::string> shipped_specs(std::size_t max_order = 2000);

}  // namespace spherex
