// spherex command line front end
#include "spherex/classify.hpp"
#include "spherex/errors.hpp"
#include "spherex/iso_checks.hpp"
#include "spherex/paper_checks.hpp"
#include "spherex/tables.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace spherex;

namespace {

enum class Format { Text, Csv, Json };

struct Config {
    Format format = Format::Text;
    std::optional<std::string> spin;
    std::optional<std::size_t> cap;
    std::string spec;
};

GroupPtr build(const Config& cfg) {
    auto spec = FamilySpec::parse(cfg.spec);
    return cfg.cap ? MatGroup::build(spec, *cfg.cap) : MatGroup::build(spec);
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_escape(cells[i]);
    return s + "\r\n";
}

int group_info(const Config& cfg) {
    auto g = build(cfg);
    auto d = g->descriptor();
    const auto& ab = g->abelianization();
    std::string abs;
    for (auto f : ab.invariant_factors)
        if (f != 1) abs += (abs.empty() ? "" : " x ") + ("C" + std::to_string(f));
    if (abs.empty()) abs = "1";
    switch (cfg.format) {
        case Format::Json: std::cout << d.dump(2) << "\n"; break;
        case Format::Csv:
            std::cout << csv_row({"key", "value"}) << csv_row({"spec", g->name()}) << csv_row({"order", std::to_string(g->order())})
                      << csv_row({"classes", std::to_string(g->num_classes())}) << csv_row({"abelianization", abs});
            for (const auto& gen : ab.generators) std::cout << csv_row({"generator " + gen.name, std::to_string(gen.order)});
            break;
        case Format::Text:
            std::cout << "group:          " << g->name() << "\n"
                      << "order:          " << g->order() << "\n"
                      << "classes:        " << g->num_classes() << "\n"
                      << "abelianization: " << abs << "\n";
            for (const auto& gen : ab.generators) std::cout << "  " << gen.name << " of order " << gen.order << "\n";
    }
    return 0;
}

int irreps(const Config& cfg) {
    auto cat = irrep_catalog(build(cfg));
    switch (cfg.format) {
        case Format::Json: {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& r : cat->irreps) a.push_back({{"label", r.label}, {"degree", r.degree()}, {"matrices", r.has_matrices()}});
            std::cout << nlohmann::json{{"group", cat->group->name()}, {"irreps", a}}.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << csv_row({"label", "degree", "matrices"});
            for (const auto& r : cat->irreps) std::cout << csv_row({r.label, std::to_string(r.degree()), r.has_matrices() ? "yes" : "no"});
            break;
        case Format::Text:
            std::cout << cat->group->name() << ": " << cat->irreps.size() << " irreducible representations\n";
            for (const auto& r : cat->irreps) std::cout << "  " << r.label << "  degree " << r.degree() << (r.has_matrices() ? "" : "  (character only)") << "\n";
    }
    return 0;
}

int char_table(const Config& cfg) {
    auto t = character_table(*irrep_catalog(build(cfg)));
    switch (cfg.format) {
        case Format::Json: std::cout << t.to_json().dump(2) << "\n"; break;
        case Format::Csv: std::cout << t.to_csv(); break;
        case Format::Text: std::cout << t.to_text();
    }
    return 0;
}

int invariant_cmd(const Config& cfg, const char* mode) {
    InvariantContext ctx(build(cfg), cfg.spin);
    auto t = invariant_table(ctx);
    switch (cfg.format) {
        case Format::Json: std::cout << t.to_json().dump(2) << "\n"; break;
        case Format::Csv: std::cout << t.to_csv(); break;
        case Format::Text: std::cout << t.to_text(mode);
    }
    return 0;
}

int classify(const Config& cfg) {
    InvariantContext ctx(build(cfg), cfg.spin);
    auto rep = classification_report(ctx);
    switch (cfg.format) {
        case Format::Json: std::cout << rep.to_json().dump(2) << "\n"; break;
        case Format::Csv:
            std::cout << csv_row({"label", "rank", "first", "second", "collides_with", "excluded"});
            for (const auto& [label, v] : rep.entries) {
                std::string first, with;
                for (std::size_t i = 0; i < v.first.size(); ++i) first += (i ? ";" : "") + v.first[i].str();
                for (const auto& c : rep.collisions)
                    if (std::find(c.begin(), c.end(), label) != c.end())
                        for (const auto& o : c)
                            if (o != label) with += (with.empty() ? "" : ";") + o;
                bool ex = std::find(rep.excluded.begin(), rep.excluded.end(), label) != rep.excluded.end();
                std::cout << csv_row({label, std::to_string(v.rank), first, v.second.str(), with, ex ? "yes" : "no"});
            }
            break;
        case Format::Text:
            std::cout << rep.group << ": " << verdict_name(rep.verdict) << ", " << rep.entries.size() << " irreps\n";
            for (const auto& [label, v] : rep.entries) std::cout << "  " << label << "  " << v.str() << "\n";
            for (const auto& c : rep.collisions) {
                std::cout << "collision:";
                for (const auto& l : c) std::cout << " " << l;
                std::cout << "\n";
            }
            if (!rep.excluded.empty()) {
                std::cout << "excluded (open case):";
                for (const auto& l : rep.excluded) std::cout << " " << l;
                std::cout << "\n";
            }
    }
    return rep.verdict == Verdict::CollisionsFound ? 1 : 0;
}

int scan(const Config& cfg, long long k_max, long long r_max, unsigned threads) {
    auto rep = conjecture_scan(k_max, r_max, threads, cfg.cap.value_or(5000));
    switch (cfg.format) {
        case Format::Json: std::cout << rep.to_json().dump(2) << "\n"; break;
        case Format::Csv:
            std::cout << csv_row({"k", "r", "order", "status", "counterexamples", "cross_s_collisions"});
            for (const auto& p : rep.points)
                std::cout << csv_row({std::to_string(p.k), std::to_string(p.r), std::to_string(p.order), p.status, p.counterexamples.dump(),
                                      std::to_string(p.cross_s_collisions)});
            break;
        case Format::Text:
            for (const auto& p : rep.points) std::cout << p.to_json().dump() << "\n";
    }
    return rep.ok() ? 0 : 1;
}

int iso_check(const Config& cfg) {
    auto checks = all_iso_checks();
    bool ok = true;
    nlohmann::json a = nlohmann::json::array();
    if (cfg.format == Format::Csv) std::cout << csv_row({"check", "relations_hold", "surjective", "detail"});
    for (const auto& c : checks) {
        ok = ok && c.result.ok();
        if (cfg.format == Format::Json)
            a.push_back({{"check", c.name}, {"relations_hold", c.result.relations_hold}, {"surjective", c.result.surjective}, {"detail", c.result.detail}});
        else if (cfg.format == Format::Csv)
            std::cout << csv_row({c.name, c.result.relations_hold ? "true" : "false", c.result.surjective ? "true" : "false", c.result.detail});
        else
            std::cout << (c.result.ok() ? "ok    " : "FAIL  ") << c.name << (c.result.detail.empty() ? "" : "  " + c.result.detail) << "\n";
    }
    if (cfg.format == Format::Json) std::cout << a.dump(2) << "\n";
    return ok ? 0 : 1;
}

int verify(const Config& cfg) {
    nlohmann::json a = nlohmann::json::array();
    if (cfg.format == Format::Csv) std::cout << csv_row({"check", "passed", "detail"});
    auto checks = verify_paper([&](const PaperCheck& c) {
        if (cfg.format == Format::Json)
            a.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        else if (cfg.format == Format::Csv)
            std::cout << csv_row({c.name, c.passed ? "true" : "false", c.detail}) << std::flush;
        else
            std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")" << std::endl;
    });
    if (cfg.format == Format::Json) std::cout << a.dump(2) << "\n";
    long long failed = std::count_if(checks.begin(), checks.end(), [](const PaperCheck& c) { return !c.passed; });
    if (cfg.format == Format::Text) std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact CCS-numbers and xi-invariants of spherical 3-manifold groups"};
    app.require_subcommand(1);
    Config cfg;
    std::string format = "text";
    long long cap = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--spin-character", cfg.spin, "Square root of det, e.g. \"x=1\" or \"b=0,c=1\"");
    app.add_option("--element-cap", cap, "Largest group order to enumerate (default: SPHEREX_ELEMENT_CAP or 100000)")->check(CLI::PositiveNumber);

    const char* spec_help = "C:n,q | BD:q | BT | BO | BI | D:k,r | P:k | <base>xC:l";
    auto* group = app.add_subcommand("group", "Group commands");
    group->require_subcommand(1);
    auto* info = group->add_subcommand("info", "Order, class count and abelianization");
    info->add_option("spec", cfg.spec, spec_help)->required();

    std::map<std::string, CLI::App*> with_spec;
    for (auto [name, help] : std::vector<std::pair<const char*, const char*>>{{"irreps", "Irreducible representations and degrees"},
                                                                            {"char-table", "Character table"},
                                                                            {"ccs-table", "CCS vector of every irrep"},
                                                                            {"xi-table", "xi-invariant of every irrep with |G|*xi"},
                                                                            {"classify", "Classification report"}}) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("spec", cfg.spec, spec_help)->required();
        with_spec[name] = s;
    }
    long long k_max = 4, r_max = 5;
    unsigned threads = 0;
    auto* sc = app.add_subcommand("conjecture-scan", "Scan t -> xi injectivity on D(k,r)");
    sc->add_option("--k-max", k_max, "Largest k")->check(CLI::Range(2LL, 64LL));
    sc->add_option("--r-max", r_max, "Largest r")->check(CLI::PositiveNumber);
    sc->add_option("--threads", threads, "Worker threads (0: all cores)");
    auto* iso = app.add_subcommand("iso-check", "Presentation isomorphism checks");
    auto* vp = app.add_subcommand("verify-paper", "Reproduce every published table and print a ledger");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    if (cap > 0) cfg.cap = std::size_t(cap);

    try {
        if (info->parsed()) return group_info(cfg);
        if (with_spec["irreps"]->parsed()) return irreps(cfg);
        if (with_spec["char-table"]->parsed()) return char_table(cfg);
        if (with_spec["ccs-table"]->parsed()) return invariant_cmd(cfg, "ccs");
        if (with_spec["xi-table"]->parsed()) return invariant_cmd(cfg, "xi");
        if (with_spec["classify"]->parsed()) return classify(cfg);
        if (sc->parsed()) return scan(cfg, k_max, r_max, threads);
        if (iso->parsed()) return iso_check(cfg);
        if (vp->parsed()) return verify(cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: bad input: " << e.what() << "\n";
        return 2;
    } catch (const SpecError& e) {
        std::cerr << "error: invalid group: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: resource limit: " << e.what() << "\n";
        return 2;
    } catch (const SpinError& e) {
        std::cerr << "error: spin character: " << e.what() << "\n";
        return 2;
    } catch (const IrrationalXi& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
