#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graphs.hpp"

namespace digideal {

enum class GraphFormat { json, dot };

/// Result of reading a graph file: a digraph, or an undirected graph awaiting orientation.
struct ParsedGraph {
    bool directed = true;
    Digraph digraph;
    UGraph ugraph;
};

namespace detail {

struct RawEdge {
    std::optional<std::string> label;
    std::string from;
    std::string to;
    std::size_t line = 0;
};

inline std::string at_line(std::size_t line, const std::string& msg) {
    return line ? "line " + std::to_string(line) + ": " + msg : msg;
}

/// Shared validation for both formats, reported against source lines.
inline ParsedGraph assemble(bool directed, std::vector<std::string> vertices, std::vector<std::size_t> vertex_lines,
                            const std::vector<RawEdge>& edges) {
    std::unordered_map<std::string, std::size_t> vindex;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].empty()) throw ValidationError(at_line(vertex_lines[i], "empty vertex label"));
        if (!vindex.emplace(vertices[i], i).second)
            throw ValidationError(at_line(vertex_lines[i], "duplicate vertex '" + vertices[i] + "'"));
    }
    std::set<std::string> explicit_labels;
    for (const auto& e : edges)
        if (e.label) {
            if (e.label->empty()) throw ValidationError(at_line(e.line, "empty edge label"));
            if (!explicit_labels.insert(*e.label).second)
                throw ValidationError(at_line(e.line, "duplicate edge id '" + *e.label + "'"));
        }
    std::map<std::pair<std::size_t, std::size_t>, std::string> seen;
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> resolved;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto& e = edges[k];
        std::string label = e.label ? *e.label : "e" + std::to_string(k + 1);
        if (!e.label && explicit_labels.count(label))
            throw ValidationError(at_line(e.line, "default edge id '" + label + "' collides with an explicit id"));
        auto f = vindex.find(e.from), t = vindex.find(e.to);
        if (f == vindex.end()) throw ValidationError(at_line(e.line, "edge '" + label + "': unknown vertex '" + e.from + "'"));
        if (t == vindex.end()) throw ValidationError(at_line(e.line, "edge '" + label + "': unknown vertex '" + e.to + "'"));
        if (f->second == t->second) throw ValidationError(at_line(e.line, "edge '" + label + "' is a loop"));
        auto key = std::make_pair(f->second, t->second);
        auto rkey = std::make_pair(t->second, f->second);
        if (seen.count(key)) throw ValidationError(at_line(e.line, "edge '" + label + "' duplicates edge '" + seen[key] + "'"));
        if (seen.count(rkey))
            throw ValidationError(at_line(e.line, "edge '" + label + "' " + (directed ? "is antiparallel to" : "duplicates") +
                                                      " edge '" + seen[rkey] + "'"));
        seen[key] = label;
        resolved.emplace_back(label, f->second, t->second);
    }
    ParsedGraph g;
    g.directed = directed;
    if (directed) {
        std::vector<DiEdge> es;
        for (auto& [l, a, b] : resolved) es.push_back(DiEdge{l, a, b});
        g.digraph = Digraph(std::move(vertices), std::move(es));
    } else {
        std::vector<UEdge> es;
        for (auto& [l, a, b] : resolved) es.push_back(UEdge{l, a, b});
        g.ugraph = UGraph(std::move(vertices), std::move(es));
    }
    return g;
}

inline std::size_t line_of(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

/// Lines where the elements of the top-level array under `key` begin.
inline std::vector<std::size_t> json_element_lines(std::string_view text, std::string_view key) {
    std::vector<std::size_t> lines;
    int depth = 0;
    bool in_string = false, want_array = false, in_array = false, expect_element = false;
    std::string last_string;
    std::string current;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_string) {
            if (c == '\\') {
                ++i;
                continue;
            }
            if (c == '"') {
                in_string = false;
                last_string = current;
            } else {
                current += c;
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (in_array && depth == 2 && expect_element && c != ']') {
            lines.push_back(line_of(text, i));
            expect_element = false;
        }
        switch (c) {
            case '"':
                in_string = true;
                current.clear();
                break;
            case ':':
                want_array = depth == 1 && last_string == key;
                break;
            case '{':
            case '[':
                ++depth;
                if (c == '[' && want_array && depth == 2) {
                    in_array = true;
                    expect_element = true;
                }
                want_array = false;
                break;
            case '}':
            case ']':
                if (in_array && depth == 2) in_array = false;
                --depth;
                break;
            case ',':
                if (in_array && depth == 2) expect_element = true;
                break;
            default:
                break;
        }
    }
    return lines;
}

inline std::string json_string(const nlohmann::json& v, std::size_t line, const std::string& what) {
    if (!v.is_string()) throw ParseError(at_line(line, what + " must be a string"));
    return v.get<std::string>();
}

// ---- DOT ----

class DotParser {
public:
    explicit DotParser(std::string_view text) : text_(text) {}

    ParsedGraph parse() {
        skip();
        std::string kw = lower(ident_or_fail("expected 'digraph' or 'graph'"));
        if (kw == "strict") {
            skip();
            kw = lower(ident_or_fail("expected 'digraph' or 'graph'"));
        }
        if (kw != "digraph" && kw != "graph") fail("expected 'digraph' or 'graph'");
        directed_ = kw == "digraph";
        skip();
        if (peek() != '{') id();
        skip();
        expect('{');
        statements();
        skip();
        if (pos_ < text_.size()) fail("unexpected text after the closing '}'");
        return assemble(directed_, vertices_, vertex_lines_, edges_);
    }

private:
    void statements() {
        while (true) {
            skip();
            if (pos_ >= text_.size()) fail("missing closing '}'");
            if (peek() == '}') {
                ++pos_;
                return;
            }
            if (peek() == ';') {
                ++pos_;
                continue;
            }
            statement();
        }
    }

    void statement() {
        const std::size_t line = current_line();
        std::size_t save = pos_;
        std::string first = id();
        skip();
        std::string lw = lower(first);
        if ((lw == "graph" || lw == "node" || lw == "edge") && peek() == '[' && !quoted_) {
            attributes();
            return;
        }
        if (lw == "subgraph" && !quoted_) {
            pos_ = save;
            fail("subgraphs are not supported");
        }
        if (peek() == '=') {
            ++pos_;
            skip();
            id();
            return;
        }
        std::vector<std::string> chain{first};
        while (true) {
            skip();
            if (starts_with("->") || starts_with("--")) {
                bool arrow = starts_with("->");
                if (arrow != directed_) fail(directed_ ? "'--' in a digraph" : "'->' in an undirected graph");
                pos_ += 2;
                skip();
                chain.push_back(id());
            } else {
                break;
            }
        }
        skip();
        std::map<std::string, std::string> attrs;
        if (peek() == '[') attrs = attributes();
        for (const auto& v : chain) add_vertex(v, line);
        if (chain.size() == 1) return;
        std::optional<std::string> label;
        if (attrs.count("label")) label = attrs["label"];
        else if (attrs.count("id")) label = attrs["id"];
        if (label && chain.size() > 2) fail_at(line, "an edge label cannot apply to a chain of edges");
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) edges_.push_back(RawEdge{label, chain[k], chain[k + 1], line});
    }

    std::map<std::string, std::string> attributes() {
        std::map<std::string, std::string> out;
        while (peek() == '[') {
            ++pos_;
            while (true) {
                skip();
                if (peek() == ']') {
                    ++pos_;
                    break;
                }
                if (peek() == ',' || peek() == ';') {
                    ++pos_;
                    continue;
                }
                std::string k = id();
                skip();
                expect('=');
                skip();
                out[lower(k)] = id();
            }
            skip();
        }
        return out;
    }

    void add_vertex(const std::string& v, std::size_t line) {
        if (known_.insert(v).second) {
            vertices_.push_back(v);
            vertex_lines_.push_back(line);
        }
    }

    std::string id() {
        quoted_ = false;
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = peek();
        if (c == '"') {
            quoted_ = true;
            ++pos_;
            std::string s;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '"') ++pos_;
                s += text_[pos_++];
            }
            if (pos_ >= text_.size()) fail("unterminated string");
            ++pos_;
            return s;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
            std::size_t start = pos_;
            if (c == '-' && !(pos_ + 1 < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '.')))
                fail("expected an identifier");
            ++pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '.'))
                ++pos_;
            return std::string(text_.substr(start, pos_ - start));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string ident_or_fail(const char* msg) {
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(peek()))) fail(msg);
        return id();
    }

    void skip() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (starts_with("//") || (c == '#' && at_line_start())) {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (starts_with("/*")) {
                auto end = text_.find("*/", pos_ + 2);
                if (end == std::string_view::npos) fail("unterminated comment");
                pos_ = end + 2;
            } else {
                break;
            }
        }
    }

    bool at_line_start() const {
        std::size_t i = pos_;
        while (i > 0 && (text_[i - 1] == ' ' || text_[i - 1] == '\t')) --i;
        return i == 0 || text_[i - 1] == '\n';
    }
    bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::size_t current_line() const { return line_of(text_, pos_); }
    static std::string lower(std::string s) {
        for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        return s;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(at_line(current_line(), msg)); }
    [[noreturn]] void fail_at(std::size_t line, const std::string& msg) const { throw ParseError(at_line(line, msg)); }

    std::string_view text_;
    std::size_t pos_ = 0;
    bool directed_ = true;
    bool quoted_ = false;
    std::vector<std::string> vertices_;
    std::vector<std::size_t> vertex_lines_;
    std::set<std::string> known_;
    std::vector<RawEdge> edges_;
};

inline bool plain_dot_id(const std::string& s) {
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

inline std::string dot_id(const std::string& s) {
    if (plain_dot_id(s)) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '\\';
        out += c;
    }
    return out + "\"";
}

inline std::string render_dot_generic(bool directed, const std::string& name, const std::vector<std::string>& vertices,
                                      const std::vector<std::tuple<std::string, std::size_t, std::size_t>>& edges) {
    std::ostringstream os;
    os << (directed ? "digraph " : "graph ") << dot_id(name) << " {\n";
    for (const auto& v : vertices) os << "  " << dot_id(v) << ";\n";
    for (const auto& [l, a, b] : edges)
        os << "  " << dot_id(vertices[a]) << (directed ? " -> " : " -- ") << dot_id(vertices[b]) << " [label=" << dot_id(l)
           << "];\n";
    os << "}\n";
    return os.str();
}

inline std::string render_json_generic(bool directed, const std::vector<std::string>& vertices,
                                       const std::vector<std::tuple<std::string, std::size_t, std::size_t>>& edges) {
    nlohmann::ordered_json j;
    if (!directed) j["directed"] = false;
    j["vertices"] = vertices;
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [l, a, b] : edges) j["edges"].push_back({{"id", l}, {"from", vertices[a]}, {"to", vertices[b]}});
    return j.dump(2) + "\n";
}

}  // namespace detail

/// JSON: {"vertices":[...],"edges":[{"id","from","to"}]}, with "directed": false for undirected input.
/// Edge ids default to e1..em in file order; vertices default to their first appearance in edges.
inline ParsedGraph parse_graph_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::string msg = e.what();
        auto p = msg.find("] ");
        throw ParseError(detail::at_line(detail::line_of(text, e.byte ? e.byte - 1 : 0),
                                         p == std::string::npos ? msg : msg.substr(p + 2)));
    }
    if (!j.is_object()) throw ParseError("line 1: top level must be an object");
    bool directed = true;
    if (j.contains("directed")) {
        if (!j["directed"].is_boolean()) throw ParseError("\"directed\" must be a boolean");
        directed = j["directed"].get<bool>();
    }
    auto vlines = detail::json_element_lines(text, "vertices");
    auto elines = detail::json_element_lines(text, "edges");
    auto line_at = [](const std::vector<std::size_t>& ls, std::size_t k) { return k < ls.size() ? ls[k] : 0; };

    std::vector<detail::RawEdge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
        std::size_t k = 0;
        for (const auto& e : j["edges"]) {
            std::size_t line = line_at(elines, k++);
            if (!e.is_object()) throw ParseError(detail::at_line(line, "edge must be an object"));
            if (!e.contains("from") || !e.contains("to"))
                throw ParseError(detail::at_line(line, "edge needs \"from\" and \"to\""));
            detail::RawEdge r;
            r.from = detail::json_string(e["from"], line, "\"from\"");
            r.to = detail::json_string(e["to"], line, "\"to\"");
            if (e.contains("id")) r.label = detail::json_string(e["id"], line, "\"id\"");
            r.line = line;
            edges.push_back(std::move(r));
        }
    }
    std::vector<std::string> vertices;
    std::vector<std::size_t> vertex_lines;
    if (j.contains("vertices")) {
        if (!j["vertices"].is_array()) throw ParseError("\"vertices\" must be an array");
        std::size_t k = 0;
        for (const auto& v : j["vertices"]) {
            std::size_t line = line_at(vlines, k++);
            vertices.push_back(detail::json_string(v, line, "vertex"));
            vertex_lines.push_back(line);
        }
    } else {
        std::set<std::string> seen;
        for (const auto& e : edges)
            for (const auto* v : {&e.from, &e.to})
                if (seen.insert(*v).second) {
                    vertices.push_back(*v);
                    vertex_lines.push_back(e.line);
                }
    }
    return detail::assemble(directed, std::move(vertices), std::move(vertex_lines), edges);
}

/// DOT subset: digraph/graph bodies with node and edge statements, edge chains,
/// attribute lists (label or id names an edge), and C/C++/# comments.
inline ParsedGraph parse_graph_dot(std::string_view text) { return detail::DotParser(text).parse(); }

inline ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::json ? parse_graph_json(text) : parse_graph_dot(text);
}

/// Guess from the first significant character.
inline GraphFormat sniff_format(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? GraphFormat::json : GraphFormat::dot;
    }
    return GraphFormat::json;
}

inline Digraph parse_digraph(std::string_view text, GraphFormat format) {
    auto g = parse_graph(text, format);
    if (!g.directed) throw ParseError("expected a directed graph");
    return g.digraph;
}

inline std::string render_json(const Digraph& d) {
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> es;
    for (const auto& e : d.edges()) es.emplace_back(e.label, e.tail, e.head);
    return detail::render_json_generic(true, d.vertices(), es);
}

inline std::string render_json(const UGraph& g) {
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> es;
    for (const auto& e : g.edges()) es.emplace_back(e.label, e.a, e.b);
    return detail::render_json_generic(false, g.vertices(), es);
}

inline std::string render_dot(const Digraph& d, const std::string& name = "D") {
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> es;
    for (const auto& e : d.edges()) es.emplace_back(e.label, e.tail, e.head);
    return detail::render_dot_generic(true, name, d.vertices(), es);
}

inline std::string render_dot(const UGraph& g, const std::string& name = "G") {
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> es;
    for (const auto& e : g.edges()) es.emplace_back(e.label, e.a, e.b);
    return detail::render_dot_generic(false, name, g.vertices(), es);
}

}  // namespace digideal
