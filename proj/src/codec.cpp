#include "keibridge/codec.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

namespace keibridge {

using nlohmann::json;

namespace {

const char* kind_name(ParseError::Kind k) {
    switch (k) {
        case ParseError::Kind::syntax: return "syntax";
        case ParseError::Kind::duplicate_label: return "duplicate-label";
        case ParseError::Kind::dangling_reference: return "dangling-reference";
        case ParseError::Kind::structural: return "structural";
    }
    return "?";
}

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        toks.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return toks;
}

void line_col_of_byte(const std::string& text, size_t byte, int& line, int& col) {
    line = 1;
    col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
}

}  // namespace

std::string ParseError::describe() const {
    std::ostringstream os;
    os << "line " << line << ":" << column << " [" << kind_name(kind) << "] " << message;
    return os.str();
}

Parsed<Diagram> parse_diagram(const std::string& text) {
    Parsed<Diagram> result;
    Diagram d;
    std::set<std::string> declared;
    std::optional<std::string> terminal_token;
    int terminal_line = 0, terminal_col = 0;
    bool saw_boundary = false;

    auto err = [&](int line, int col, ParseError::Kind kind, std::string msg) {
        result.errors.push_back({line, col, kind, std::move(msg)});
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    // First pass declares arcs so later records can be checked in any order,
    // second pass builds the records.
    std::vector<std::pair<int, std::vector<Token>>> records;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0].text[0] == '#') continue;
        if (toks[0].text == "arc") {
            if (toks.size() != 2) {
                err(lineno, toks[0].column, ParseError::Kind::syntax,
                    "arc record expects exactly one label");
                continue;
            }
            if (!declared.insert(toks[1].text).second)
                err(lineno, toks[1].column, ParseError::Kind::duplicate_label,
                    "arc declared twice: " + toks[1].text);
            else
                d.arcs.push_back(toks[1].text);
            continue;
        }
        records.emplace_back(lineno, std::move(toks));
    }

    auto check_arc = [&](const Token& t, int lineno) {
        if (!declared.count(t.text)) {
            err(lineno, t.column, ParseError::Kind::dangling_reference,
                "reference to undeclared arc: " + t.text);
            return false;
        }
        return true;
    };

    for (const auto& [ln, toks] : records) {
        const std::string& verb = toks[0].text;
        if (verb == "x") {
            if (toks.size() != 4) {
                err(ln, toks[0].column, ParseError::Kind::syntax,
                    "crossing record expects three arc labels");
                continue;
            }
            bool ok = true;
            for (int i = 1; i <= 3; ++i) ok &= check_arc(toks[i], ln);
            if (ok) d.crossings.push_back({toks[1].text, toks[2].text, toks[3].text});
        } else if (verb == "join") {
            if (toks.size() != 3) {
                err(ln, toks[0].column, ParseError::Kind::syntax,
                    "join record expects two arc labels");
                continue;
            }
            bool ok = check_arc(toks[1], ln) & check_arc(toks[2], ln);
            if (ok) d.joins.push_back({toks[1].text, toks[2].text});
        } else if (verb == "boundary") {
            if (saw_boundary) {
                err(ln, toks[0].column, ParseError::Kind::structural, "second boundary record");
                continue;
            }
            saw_boundary = true;
            for (size_t i = 1; i < toks.size(); ++i)
                if (check_arc(toks[i], ln)) d.ends.push_back(toks[i].text);
        } else if (verb == "terminal") {
            if (toks.size() != 2) {
                err(ln, toks[0].column, ParseError::Kind::syntax,
                    "terminal record expects one position or arc label");
                continue;
            }
            terminal_token = toks[1].text;
            terminal_line = ln;
            terminal_col = toks[1].column;
        } else {
            err(ln, toks[0].column, ParseError::Kind::syntax, "unknown record: " + verb);
        }
    }

    if (terminal_token) {
        bool resolved = false;
        if (std::all_of(terminal_token->begin(), terminal_token->end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
            !terminal_token->empty()) {
            int pos = std::stoi(*terminal_token);
            if (pos >= 0 && pos < static_cast<int>(d.ends.size())) {
                d.terminal = pos;
                resolved = true;
            }
        }
        if (!resolved) {
            auto it = std::find(d.ends.begin(), d.ends.end(), *terminal_token);
            if (it != d.ends.end()) {
                d.terminal = static_cast<int>(it - d.ends.begin());
                resolved = true;
            }
        }
        if (!resolved)
            err(terminal_line, terminal_col, ParseError::Kind::dangling_reference,
                "terminal does not name a boundary position or boundary arc: " + *terminal_token);
    }

    if (result.errors.empty()) {
        for (const auto& problem : validate_diagram(d))
            err(0, 0, ParseError::Kind::structural, problem);
    }
    if (result.errors.empty()) result.value = std::move(d);
    return result;
}

Parsed<Diagram> parse_link(const std::string& text) {
    auto result = parse_diagram(text);
    if (result.ok() && result.value->is_tangle()) {
        result.errors.push_back({0, 0, ParseError::Kind::structural,
                                 "expected a link diagram, found a tangle (boundary record present)"});
        result.value.reset();
    }
    return result;
}

Parsed<Diagram> parse_tangle(const std::string& text) {
    auto result = parse_diagram(text);
    if (result.ok() && !result.value->is_tangle()) {
        result.errors.push_back({0, 0, ParseError::Kind::structural,
                                 "expected a tangle diagram, found no boundary record"});
        result.value.reset();
    }
    return result;
}

std::string serialize_diagram(const Diagram& d) {
    std::ostringstream os;
    for (const auto& a : d.arcs) os << "arc " << a << "\n";
    for (const auto& c : d.crossings)
        os << "x " << c.under_in << " " << c.over << " " << c.under_out << "\n";
    for (const auto& j : d.joins) os << "join " << j.a << " " << j.b << "\n";
    if (!d.ends.empty()) {
        os << "boundary";
        for (const auto& e : d.ends) os << " " << e;
        os << "\n";
    }
    if (d.terminal) os << "terminal " << *d.terminal << "\n";
    return os.str();
}

Parsed<Kei> parse_kei(const std::string& text) {
    Parsed<Kei> result;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        int line, col;
        line_col_of_byte(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
        result.errors.push_back({line, col, ParseError::Kind::syntax, e.what()});
        return result;
    }
    auto structural = [&](std::string msg) {
        result.errors.push_back({1, 1, ParseError::Kind::structural, std::move(msg)});
    };
    if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
        structural("kei file must be an object with \"order\" and \"table\"");
        return result;
    }
    if (!j["order"].is_number_integer() || !j["table"].is_array()) {
        structural("\"order\" must be an integer and \"table\" an array");
        return result;
    }
    std::vector<std::vector<int>> table;
    for (const auto& row : j["table"]) {
        if (!row.is_array()) {
            structural("table rows must be arrays");
            return result;
        }
        std::vector<int> r;
        for (const auto& e : row) {
            if (!e.is_number_integer()) {
                structural("table entries must be integers");
                return result;
            }
            r.push_back(e.get<int>());
        }
        table.push_back(std::move(r));
    }
    if (static_cast<int>(table.size()) != j["order"].get<int>()) {
        structural("declared order does not match table size");
        return result;
    }
    std::string label = j.value("label", "");
    auto check = validate_kei(table);
    if (!check.ok()) {
        for (const auto& s : check.structural) structural(s);
        for (const auto& v : check.violations) structural(v.describe());
        return result;
    }
    result.value = Kei::from_table(std::move(table), std::move(label));
    return result;
}

std::string serialize_kei(const Kei& k) {
    json j;
    j["label"] = k.label();
    j["order"] = k.order();
    j["table"] = k.table();
    return j.dump(2) + "\n";
}

namespace {

json panel_to_json(const Diagram& p) {
    json j;
    j["arcs"] = p.arcs;
    json xs = json::array();
    for (const auto& c : p.crossings) xs.push_back({c.under_in, c.over, c.under_out});
    j["crossings"] = xs;
    if (!p.joins.empty()) {
        json js = json::array();
        for (const auto& jn : p.joins) js.push_back({jn.a, jn.b});
        j["joins"] = js;
    }
    j["ends"] = p.ends;
    if (p.terminal) j["terminal"] = *p.terminal;
    return j;
}

bool panel_from_json(const json& j, Diagram& p, std::vector<ParseError>& errors) {
    auto structural = [&](std::string msg) {
        errors.push_back({1, 1, ParseError::Kind::structural, std::move(msg)});
        return false;
    };
    if (!j.is_object() || !j.contains("arcs") || !j.contains("crossings") || !j.contains("ends"))
        return structural("panel must be an object with \"arcs\", \"crossings\" and \"ends\"");
    for (const auto& a : j["arcs"]) {
        if (!a.is_string()) return structural("panel arcs must be strings");
        p.arcs.push_back(a.get<std::string>());
    }
    for (const auto& c : j["crossings"]) {
        if (!c.is_array() || c.size() != 3)
            return structural("panel crossings must be [under_in, over, under_out] triples");
        p.crossings.push_back(
            {c[0].get<std::string>(), c[1].get<std::string>(), c[2].get<std::string>()});
    }
    if (j.contains("joins"))
        for (const auto& jn : j["joins"]) {
            if (!jn.is_array() || jn.size() != 2)
                return structural("panel joins must be [a, b] pairs");
            p.joins.push_back({jn[0].get<std::string>(), jn[1].get<std::string>()});
        }
    for (const auto& e : j["ends"]) {
        if (!e.is_string()) return structural("panel ends must be arc labels");
        p.ends.push_back(e.get<std::string>());
    }
    if (j.contains("terminal")) p.terminal = j["terminal"].get<int>();
    return true;
}

}  // namespace

Parsed<TriPlane> parse_triplane(const std::string& text) {
    Parsed<TriPlane> result;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        int line, col;
        line_col_of_byte(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
        result.errors.push_back({line, col, ParseError::Kind::syntax, e.what()});
        return result;
    }
    auto structural = [&](std::string msg) {
        result.errors.push_back({1, 1, ParseError::Kind::structural, std::move(msg)});
    };
    if (!j.is_object() || !j.contains("b") || !j.contains("boundary") || !j.contains("panels")) {
        structural("tri-plane file must carry \"b\", \"boundary\" and \"panels\"");
        return result;
    }
    TriPlane tp;
    tp.b = j["b"].get<int>();
    for (const auto& p : j["boundary"]) tp.boundary.push_back(p.get<std::string>());
    if (!j["panels"].is_array() || j["panels"].size() != 3) {
        structural("\"panels\" must list exactly three tangle diagrams");
        return result;
    }
    for (int i = 0; i < 3; ++i)
        if (!panel_from_json(j["panels"][i], tp.panels[i], result.errors)) return result;
    if (j.contains("patch_counts")) {
        const auto& pc = j["patch_counts"];
        if (!pc.is_array() || pc.size() != 3) {
            structural("\"patch_counts\" must be [c1, c2, c3]");
            return result;
        }
        tp.patch_counts = {{pc[0].get<int>(), pc[1].get<int>(), pc[2].get<int>()}};
    }
    if (static_cast<int>(tp.boundary.size()) != 2 * tp.b)
        structural("boundary must list exactly 2b endpoint labels");
    for (int i = 0; i < 3; ++i) {
        if (static_cast<int>(tp.panels[i].ends.size()) != 2 * tp.b)
            structural("panel " + std::to_string(i) + " strand count differs from b");
        for (const auto& problem : validate_diagram(tp.panels[i]))
            structural("panel " + std::to_string(i) + ": " + problem);
    }
    if (result.errors.empty()) result.value = std::move(tp);
    return result;
}

std::string serialize_triplane(const TriPlane& tp) {
    json j;
    j["b"] = tp.b;
    j["boundary"] = tp.boundary;
    json panels = json::array();
    for (const auto& p : tp.panels) panels.push_back(panel_to_json(p));
    j["panels"] = panels;
    if (tp.patch_counts)
        j["patch_counts"] = {(*tp.patch_counts)[0], (*tp.patch_counts)[1], (*tp.patch_counts)[2]};
    return j.dump(2) + "\n";
}

}  // namespace keibridge
