#include "spherex/classify.hpp"

#include "spherex/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <regex>
#include <thread>

namespace spherex {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Injective: return "Injective";
        case Verdict::CollisionsFound: return "CollisionsFound";
        case Verdict::ConjecturalCaseExcluded: return "ConjecturalCaseExcluded";
    }
    return "?";
}

nlohmann::json ClassificationReport::to_json() const {
    nlohmann::json e = nlohmann::json::array();
    for (const auto& [label, v] : entries) {
        auto j = v.to_json();
        j["label"] = label;
        e.push_back(j);
    }
    return {{"group", group}, {"verdict", verdict_name(verdict)}, {"entries", e}, {"collisions", collisions}, {"excluded", excluded}};
}

std::optional<std::tuple<long long, long long, long long>> d_family_params(const std::string& label) {
    static const std::regex re(R"(varrho_(\d+),(\d+)( x alpha_(\d+))?)");
    std::smatch m;
    if (!std::regex_match(label, m, re)) return std::nullopt;
    long long j = m[4].matched ? std::stoll(m[4]) : 0;
    return std::make_tuple(std::stoll(m[1]), std::stoll(m[2]), j);
}

ClassificationReport classification_report(const InvariantContext& ctx) {
    ClassificationReport rep;
    const auto& g = *ctx.group();
    rep.group = g.name();
    std::map<CcsVector, std::vector<std::string>> by;
    for (const auto& r : ctx.catalog().irreps) {
        auto v = ctx.ccs_vector(r);
        rep.entries.emplace_back(r.label, v);
        by[v].push_back(r.label);
    }
    const bool dfam = g.spec() && g.spec()->is_d_family();
    bool hard = false;
    for (const auto& [v, labels] : by) {
        if (labels.size() < 2) continue;
        rep.collisions.push_back(labels);
        bool conjectural = dfam && v.rank == 2;
        std::optional<std::tuple<long long, long long, long long>> first;
        for (const auto& l : labels) {
            auto p = d_family_params(l);
            if (!p) {
                conjectural = false;
                break;
            }
            if (!first) {
                first = p;
                continue;
            }
            auto [t0, s0, j0] = *first;
            auto [t1, s1, j1] = *p;
            if (s0 != s1 || j0 != j1 || (t0 - t1) % 2 != 0) conjectural = false;
        }
        if (conjectural)
            rep.excluded.insert(rep.excluded.end(), labels.begin(), labels.end());
        else
            hard = true;
    }
    rep.verdict = hard ? Verdict::CollisionsFound : !rep.excluded.empty() ? Verdict::ConjecturalCaseExcluded : Verdict::Injective;
    return rep;
}

nlohmann::json ScanPoint::to_json() const {
    return {{"params", {k, r}}, {"orders", order}, {"counterexamples", counterexamples}, {"status", status}, {"cross_s_collisions", cross_s_collisions}};
}

bool ScanReport::ok() const {
    return std::all_of(points.begin(), points.end(), [](const ScanPoint& p) { return p.status == "verified"; });
}

nlohmann::json ScanReport::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : points) j.push_back(p.to_json());
    return j;
}

namespace {

ScanPoint scan_point(long long k, long long r, std::size_t cap) {
    ScanPoint p;
    p.k = k;
    p.r = r;
    FamilySpec spec = FamilySpec::d(k, r);
    p.order = spec.expected_order();
    if (std::size_t(p.order) > cap) {
        p.status = "skipped";
        return p;
    }
    InvariantContext ctx(MatGroup::build(spec, cap));
    // xi per (t, s)
    std::map<std::pair<long long, long long>, Rational> xi;
    for (const auto& irr : ctx.catalog().irreps)
        if (auto d = d_family_params(irr.label)) xi[{std::get<0>(*d), std::get<1>(*d)}] = ctx.xi(irr.character).value();
    for (auto a = xi.begin(); a != xi.end(); ++a)
        for (auto b = std::next(a); b != xi.end(); ++b) {
            if (!(a->second == b->second)) continue;
            auto [t1, s1] = a->first;
            auto [t2, s2] = b->first;
            if (s1 == s2 && (t1 - t2) % 2 == 0)
                p.counterexamples.push_back({{"s", s1}, {"t1", t1}, {"t2", t2}, {"xi", a->second.str()}});
            else
                ++p.cross_s_collisions;
        }
    p.status = p.counterexamples.empty() ? "verified" : "counterexample";
    return p;
}

}  // namespace

ScanReport conjecture_scan(long long k_max, long long r_max, unsigned threads, std::size_t cap) {
    if (k_max < 2 || r_max < 1) throw SpecError("conjecture scan needs k_max >= 2 and r_max >= 1");
    std::vector<std::pair<long long, long long>> grid;
    for (long long k = 2; k <= k_max; ++k)
        for (long long r = 1; r <= r_max; ++r) grid.emplace_back(k, r);
    ScanReport rep;
    rep.points.resize(grid.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, unsigned(grid.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(grid.size());
    auto work = [&] {
        for (std::size_t i; (i = next++) < grid.size();) {
            try {
                rep.points[i] = scan_point(grid[i].first, grid[i].second, cap);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rep;
}

bool verify_collision_lemmas(const InvariantContext& ctx) {
    const auto& g = *ctx.group();
    if (!g.spec() || !g.spec()->is_d_family()) throw Error("collision lemmas apply to the D family only");
    struct Row {
        long long t, s, j;
        CcsVector v;
        RatMod1 xi;
    };
    std::vector<Row> rows;
    for (const auto& r : ctx.catalog().irreps) {
        auto p = d_family_params(r.label);
        if (!p) continue;
        rows.push_back({std::get<0>(*p), std::get<1>(*p), std::get<2>(*p), ctx.ccs_vector(r), ctx.xi(r.character)});
    }
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
            const auto &x = rows[a], &y = rows[b];
            if (x.v.first == y.v.first && (x.s != y.s || (x.t - y.t) % 2 != 0)) return false;
            if (x.v == y.v && !(x.xi == y.xi)) return false;
        }
    return true;
}

std::optional<RankFirstCollision> rank_first_collision(const InvariantContext& ctx) {
    std::vector<std::pair<std::string, CcsVector>> v;
    for (const auto& r : ctx.catalog().irreps) v.emplace_back(r.label, ctx.ccs_vector(r));
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            if (v[a].second.rank == v[b].second.rank && v[a].second.first == v[b].second.first && !(v[a].second == v[b].second))
                return RankFirstCollision{v[a].first, v[b].first, v[a].second, v[b].second};
    return std::nullopt;
}

std::vector<std::string> shipped_specs(std::size_t max_order) {
    std::vector<std::string> s;
    for (long long n = 1; n <= 12; ++n)
        for (long long q = 1; q < std::max(2LL, n); ++q)
            if (std::gcd(n, q) == 1) s.push_back(n == 1 ? "C:1" : "C:" + std::to_string(n) + "," + std::to_string(q));
    for (long long q = 2; q <= 10; ++q) s.push_back("BD:" + std::to_string(q));
    for (const char* x : {"BT", "BO", "BI", "D:2,1", "D:2,2", "D:2,3", "D:3,1", "D:3,2", "D:4,1", "P:2", "P:3", "C:5,2xC:3",
                          "BD:2xC:3", "BD:3xC:5", "BD:3xC:7", "BD:4xC:3", "BTxC:5", "BTxC:7", "BOxC:5", "BIxC:7", "D:2,1xC:5",
                          "D:2,2xC:3", "P:2xC:5", "P:2xC:7"})
        s.push_back(x);
    std::vector<std::string> out;
    for (const auto& x : s)
        if (std::size_t(FamilySpec::parse(x).expected_order()) <= max_order) out.push_back(x);
    std::stable_sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
        return FamilySpec::parse(a).expected_order() < FamilySpec::parse(b).expected_order();
    });
    return out;
}

}  // namespace spherex
