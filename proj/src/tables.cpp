#include "spherex/tables.hpp"

#include "spherex/errors.hpp"

#include <algorithm>
#include <sstream>

namespace spherex {

std::string csv_escape(std::string_view cell) {
    if (cell.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(cell);
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::vector<std::string>> csv_parse(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            row.push_back(std::move(cell));
            cell.clear();
            any = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            if (any || !cell.empty()) {
                row.push_back(std::move(cell));
                rows.push_back(std::move(row));
            }
            row.clear();
            cell.clear();
            any = false;
        } else {
            cell += c;
            any = true;
        }
    }
    if (quoted) throw ParseError("unterminated quoted CSV cell");
    if (any || !cell.empty()) {
        row.push_back(std::move(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string join_csv(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_escape(cells[i]);
    return s + "\r\n";
}

long long to_ll(const std::string& s) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw ParseError("not an integer: " + s);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("not an integer: " + s);
    }
}

// "c3[size=8,order=4,rep=5]"
std::string class_header(std::size_t i, const CharTableClass& c) {
    return "c" + std::to_string(i) + "[size=" + std::to_string(c.size) + ",order=" + std::to_string(c.order) + ",rep=" + std::to_string(c.rep) + "]";
}

CharTableClass parse_class_header(const std::string& h) {
    CharTableClass c;
    auto open = h.find('['), close = h.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open) throw ParseError("bad class column header: " + h);
    std::stringstream ss(h.substr(open + 1, close - open - 1));
    std::string kv;
    while (std::getline(ss, kv, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError("bad class column header: " + h);
        auto k = kv.substr(0, eq);
        auto v = to_ll(kv.substr(eq + 1));
        if (k == "size")
            c.size = v;
        else if (k == "order")
            c.order = v;
        else if (k == "rep")
            c.rep = v;
        else
            throw ParseError("bad class column header: " + h);
    }
    return c;
}

std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

std::string render(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (w.size() <= i) w.push_back(0);
            w[i] = std::max(w[i], r[i].size());
        }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) line += (i ? "  " : "") + (i + 1 < r.size() ? pad(r[i], w[i]) : r[i]);
        out += line + "\n";
    }
    return out;
}

}  // namespace

CharTable character_table(const Catalog& cat) {
    const auto& g = *cat.group;
    CharTable t;
    t.group = g.name();
    t.order = (long long)g.order();
    for (std::size_t c = 0; c < g.num_classes(); ++c)
        t.classes.push_back({(long long)g.class_rep(c), (long long)g.class_size(c), g.element_order(g.class_rep(c))});
    for (const auto& r : cat.irreps) {
        CharTableRow row{r.label, r.degree(), {}};
        for (std::size_t c = 0; c < g.num_classes(); ++c) row.values.push_back(r.character[c]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string CharTable::to_csv() const {
    std::vector<std::string> h = {"label", "degree"};
    for (std::size_t i = 0; i < classes.size(); ++i) h.push_back(class_header(i, classes[i]));
    std::string out = "# group=" + group + " order=" + std::to_string(order) + "\r\n" + join_csv(h);
    for (const auto& r : rows) {
        std::vector<std::string> cells = {r.label, std::to_string(r.degree)};
        for (const auto& v : r.values) cells.push_back(v.str());
        out += join_csv(cells);
    }
    return out;
}

CharTable CharTable::from_csv(std::string_view text) {
    CharTable t;
    if (text.rfind("# group=", 0) == 0) {
        auto eol = text.find_first_of("\r\n");
        std::string meta(text.substr(8, eol - 8));
        auto o = meta.rfind(" order=");
        if (o == std::string::npos) throw ParseError("bad character table header");
        t.group = meta.substr(0, o);
        t.order = to_ll(meta.substr(o + 7));
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol);
    }
    auto rows = csv_parse(text);
    if (rows.empty() || rows[0].size() < 2 || rows[0][0] != "label" || rows[0][1] != "degree") throw ParseError("character table CSV needs a label,degree header");
    for (std::size_t i = 2; i < rows[0].size(); ++i) t.classes.push_back(parse_class_header(rows[0][i]));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != rows[0].size()) throw ParseError("character table row " + std::to_string(i) + " has the wrong width");
        CharTableRow row{r[0], to_ll(r[1]), {}};
        for (std::size_t c = 2; c < r.size(); ++c) row.values.push_back(Cyc::parse(r[c]));
        t.rows.push_back(std::move(row));
    }
    return t;
}

nlohmann::json CharTable::to_json() const {
    nlohmann::json cls = nlohmann::json::array(), rs = nlohmann::json::array();
    for (const auto& c : classes) cls.push_back({{"rep", c.rep}, {"size", c.size}, {"order", c.order}});
    for (const auto& r : rows) {
        nlohmann::json v = nlohmann::json::array();
        for (const auto& x : r.values) v.push_back(x.str());
        rs.push_back({{"label", r.label}, {"degree", r.degree}, {"values", v}});
    }
    return {{"group", group}, {"order", order}, {"classes", cls}, {"irreps", rs}};
}

CharTable CharTable::from_json(const nlohmann::json& j) {
    try {
        CharTable t;
        t.group = j.at("group").get<std::string>();
        t.order = j.at("order").get<long long>();
        for (const auto& c : j.at("classes")) t.classes.push_back({c.at("rep").get<long long>(), c.at("size").get<long long>(), c.at("order").get<long long>()});
        for (const auto& r : j.at("irreps")) {
            CharTableRow row{r.at("label").get<std::string>(), r.at("degree").get<long long>(), {}};
            for (const auto& v : r.at("values")) row.values.push_back(Cyc::parse(v.get<std::string>()));
            t.rows.push_back(std::move(row));
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad character table JSON: ") + e.what());
    }
}

std::string CharTable::to_text() const {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> h = {group + " (order " + std::to_string(order) + ")", "deg"};
    std::vector<std::string> sz = {"class size", ""};
    for (std::size_t i = 0; i < classes.size(); ++i) {
        h.push_back("c" + std::to_string(i));
        sz.push_back(std::to_string(classes[i].size) + " (ord " + std::to_string(classes[i].order) + ")");
    }
    cells.push_back(h);
    cells.push_back(sz);
    for (const auto& r : rows) {
        std::vector<std::string> line = {r.label, std::to_string(r.degree)};
        for (const auto& v : r.values) line.push_back(v.str());
        cells.push_back(line);
    }
    return render(cells);
}

InvariantTable invariant_table(const InvariantContext& ctx) {
    const auto& g = *ctx.group();
    InvariantTable t;
    t.group = g.name();
    t.order = (long long)g.order();
    for (const auto& gen : g.abelianization().generators) t.generators.push_back(gen.name);
    for (const auto& r : ctx.catalog().irreps) {
        auto v = ctx.ccs_vector(r);
        Rational raw = ctx.xi_raw(r.character);
        t.rows.push_back({r.label, v.rank, v.first, v.second, RatMod1(raw), scaled_xi(raw, t.order)});
    }
    return t;
}

std::string InvariantTable::to_csv() const {
    std::vector<std::string> h = {"label", "rank"};
    for (const auto& g : generators) h.push_back("c1(" + g + ")");
    for (const char* x : {"c2", "xi", "scaled"}) h.push_back(x);
    std::string out = "# group=" + group + " order=" + std::to_string(order) + "\r\n" + join_csv(h);
    for (const auto& r : rows) {
        std::vector<std::string> cells = {r.label, std::to_string(r.rank)};
        for (const auto& f : r.first) cells.push_back(f.str());
        cells.push_back(r.second.str());
        cells.push_back(r.xi.str());
        cells.push_back(r.scaled.str());
        out += join_csv(cells);
    }
    return out;
}

InvariantTable InvariantTable::from_csv(std::string_view text) {
    InvariantTable t;
    if (text.rfind("# group=", 0) == 0) {
        auto eol = text.find_first_of("\r\n");
        std::string meta(text.substr(8, eol - 8));
        auto o = meta.rfind(" order=");
        if (o == std::string::npos) throw ParseError("bad invariant table header");
        t.group = meta.substr(0, o);
        t.order = to_ll(meta.substr(o + 7));
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol);
    }
    auto rows = csv_parse(text);
    if (rows.empty() || rows[0].size() < 5 || rows[0][0] != "label" || rows[0][1] != "rank") throw ParseError("invariant table CSV needs a label,rank header");
    const auto& h = rows[0];
    const std::size_t ng = h.size() - 5;
    for (std::size_t i = 0; i < ng; ++i) {
        const auto& c = h[2 + i];
        if (c.size() < 5 || c.rfind("c1(", 0) != 0 || c.back() != ')') throw ParseError("bad column header: " + c);
        t.generators.push_back(c.substr(3, c.size() - 4));
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != h.size()) throw ParseError("invariant table row " + std::to_string(i) + " has the wrong width");
        InvariantRow row;
        row.label = r[0];
        row.rank = to_ll(r[1]);
        for (std::size_t k = 0; k < ng; ++k) row.first.push_back(RatMod1::parse(r[2 + k]));
        row.second = RatMod1::parse(r[2 + ng]);
        row.xi = RatMod1::parse(r[3 + ng]);
        row.scaled = Rational::parse(r[4 + ng]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

nlohmann::json InvariantTable::to_json() const {
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json f = nlohmann::json::object();
        for (std::size_t i = 0; i < r.first.size(); ++i) f[generators.at(i)] = r.first[i].str();
        rs.push_back({{"label", r.label}, {"rank", r.rank}, {"c1", f}, {"c2", r.second.str()}, {"xi", r.xi.str()}, {"scaled", r.scaled.str()}});
    }
    return {{"group", group}, {"order", order}, {"generators", generators}, {"irreps", rs}};
}

InvariantTable InvariantTable::from_json(const nlohmann::json& j) {
    try {
        InvariantTable t;
        t.group = j.at("group").get<std::string>();
        t.order = j.at("order").get<long long>();
        t.generators = j.at("generators").get<std::vector<std::string>>();
        for (const auto& r : j.at("irreps")) {
            InvariantRow row;
            row.label = r.at("label").get<std::string>();
            row.rank = r.at("rank").get<long long>();
            for (const auto& g : t.generators) row.first.push_back(RatMod1::parse(r.at("c1").at(g).get<std::string>()));
            row.second = RatMod1::parse(r.at("c2").get<std::string>());
            row.xi = RatMod1::parse(r.at("xi").get<std::string>());
            row.scaled = Rational::parse(r.at("scaled").get<std::string>());
            t.rows.push_back(std::move(row));
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad invariant table JSON: ") + e.what());
    }
}

std::string InvariantTable::to_text(std::string_view mode) const {
    std::vector<std::vector<std::string>> cells;
    if (mode == "xi") {
        cells.push_back({"label", "rank", "xi", std::to_string(order) + "*xi"});
        for (const auto& r : rows) cells.push_back({r.label, std::to_string(r.rank), r.xi.str(), r.scaled.str()});
    } else {
        std::string gens;
        for (std::size_t i = 0; i < generators.size(); ++i) gens += (i ? ", " : "") + generators[i];
        cells.push_back({"label", "(rank; c1(" + gens + "); c2)"});
        for (const auto& r : rows) {
            CcsVector v{r.rank, r.first, r.second};
            cells.push_back({r.label, v.str()});
        }
    }
    return group + " (order " + std::to_string(order) + ")\n" + render(cells);
}

}  // namespace spherex
