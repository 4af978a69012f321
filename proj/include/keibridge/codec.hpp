#pragma once

#include <optional>
#include <string>
#include <vector>

#include "keibridge/diagram.hpp"
#include "keibridge/kei.hpp"

namespace keibridge {

struct ParseError {
    enum class Kind { syntax, duplicate_label, dangling_reference, structural };
    int line = 0;    // 1-based
    int column = 0;  // 1-based
    Kind kind = Kind::syntax;
    std::string message;

    std::string describe() const;
    bool operator==(const ParseError&) const = default;
};

/// All-or-nothing parse result: either a value or the full error list,
/// never a partially constructed object.
template <class T>
struct Parsed {
    std::optional<T> value;
    std::vector<ParseError> errors;

    bool ok() const { return value.has_value(); }
};

// Line-oriented diagram text:
//   arc <label>
//   x <under_in> <over> <under_out>
//   join <a> <b>
//   boundary <arc at position 0> <arc at position 1> ...
//   terminal <position or arc label>
// Blank lines and lines starting with '#' are ignored.
Parsed<Diagram> parse_diagram(const std::string& text);
Parsed<Diagram> parse_link(const std::string& text);    // rejects boundary records
Parsed<Diagram> parse_tangle(const std::string& text);  // requires a boundary record
std::string serialize_diagram(const Diagram& d);

// Kei files are JSON: {"label": ..., "order": n, "table": [[...], ...]}.
Parsed<Kei> parse_kei(const std::string& text);
std::string serialize_kei(const Kei& k);

// Tri-plane files are JSON: {"b", "boundary", "panels": [three tangle
// objects], "patch_counts"?}; each panel object carries "arcs",
// "crossings", "joins"?, "ends", "terminal"?.
Parsed<TriPlane> parse_triplane(const std::string& text);
std::string serialize_triplane(const TriPlane& tp);

}  // namespace keibridge
