#pragma once

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "errors.hpp"
#include "io.hpp"

namespace digideal::cli {

using Report = nlohmann::ordered_json;

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"ideal", "cycles", "cycle-basis", "is-dag", "is-upd",
                                            "covers", "bipartite", "hgraph", "analyze"};
    return c;
}

struct AnalysisRequest {
    std::string command;
    std::string input;
    std::string input_format;  // "", "json" or "dot"
    std::string order = "grevlex";
    std::vector<std::string> vars;  // priority list, highest first
    std::string method = "toric";
    std::string route = "elimination";
    std::optional<std::uint64_t> seed;
    std::string format = "text";
    std::size_t cap = 10000;
    bool k_graph = false;
};

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline TermOrder edge_order(const AnalysisRequest& req, const Digraph& d) {
    auto vars = edge_vars(d);
    std::vector<std::string> names = req.vars.empty() ? vars->names() : req.vars;
    if (names.size() != vars->size()) throw UsageError("--vars must list every edge label exactly once");
    try {
        return req.order == "lex" ? TermOrder::lex(*vars, names) : TermOrder::grevlex(*vars, names);
    } catch (const UsageError& e) {
        throw UsageError(std::string("--vars: ") + e.what());
    }
}

inline nlohmann::ordered_json cycle_rows(const CycleReport& r, const Digraph& d) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& c : r.cycles)
        rows.push_back({{"edges", c.labels(d)}, {"class", to_string(c.cls)}, {"length", c.length}});
    return rows;
}

inline std::vector<std::string> rendered(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

inline std::string join(const nlohmann::ordered_json& arr, const char* sep = " ") {
    std::string s;
    for (const auto& x : arr) {
        if (!s.empty()) s += sep;
        s += x.is_string() ? x.get<std::string>() : x.dump();
    }
    return s;
}

struct Context {
    const AnalysisRequest& req;
    const Digraph& d;
    std::optional<IdealBasis> ideal;

    const IdealBasis& diedge() {
        if (!ideal)
            ideal = diedge_ideal(d, edge_order(req, d),
                                 req.route == "saturation" ? ToricRoute::saturation : ToricRoute::elimination);
        return *ideal;
    }
};

inline void add_ideal(Report& r, Context& ctx) {
    if (ctx.req.method == "linear") r["ideal"] = rendered(linear_edge_ideal(ctx.d));
    else r["ideal"] = ctx.diedge().rendered();
}

inline void add_cycles(Report& r, Context& ctx) {
    if (ctx.req.method == "linear") r["cycles"] = cycle_rows(classify_linear_basis(linear_edge_ideal(ctx.d), ctx.d), ctx.d);
    else r["cycles"] = cycle_rows(classify_generators(ctx.diedge(), ctx.d), ctx.d);
}

inline void add_cycle_basis(Report& r, Context& ctx) {
    r["cycle_basis"] = rendered(linear_edge_ideal(ctx.d));
    r["cycle_space_dimension"] = cycle_space_dimension(ctx.d);
}

inline void add_dag(Report& r, Context& ctx) {
    auto dr = is_dag(ctx.d, ctx.diedge());
    r["dag"] = dr.dag;
    r["dag_witness"] = dr.witness ? nlohmann::ordered_json(dr.witness->labels(ctx.d)) : nlohmann::ordered_json(nullptr);
    r["dag_ideal_evidence"] = dr.ideal_evidence;
    if (!dr.diagnostics.empty()) r["dag_diagnostics"] = dr.diagnostics;
}

inline void add_upd(Report& r, Context& ctx) {
    auto ur = is_upd(ctx.d, ctx.diedge(), ctx.req.cap);
    r["upd"] = ur.upd;
    r["upd_reason"] = ur.reason;
    r["unique_directed_paths"] = ur.unique_paths;
}

inline void add_covers(Report& r, Context& ctx) {
    auto cr = source_sink_covers(ctx.d, ctx.req.cap);
    nlohmann::ordered_json c;
    c["source"] = cr.source.empty() ? std::vector<std::string>{} : cr.source.front();
    c["sink"] = cr.sink.empty() ? std::vector<std::string>{} : cr.sink.front();
    c["minimal_vertex_covers"] = cr.minimal_vertex_covers;
    r["covers"] = c;
}

inline void add_bipartite(Report& r, Context& ctx) {
    auto br = is_directly_bipartite(ctx.d);
    r["directly_bipartite"] = br.directly_bipartite;
    r["sources"] = br.sources;
    r["sinks"] = br.sinks;
    r["witness"] = br.witness ? nlohmann::ordered_json(br.witness->to_string()) : nlohmann::ordered_json(nullptr);
    r["divertex_ideal"] = br.vertex_ideal ? br.vertex_ideal->rendered() : std::vector<std::string>{};
}

}  // namespace detail

/// Runs one command on an already parsed digraph.
inline Report run_command(const AnalysisRequest& req, const Digraph& d) {
    Report r;
    detail::Context ctx{req, d, std::nullopt};
    const auto& c = req.command;
    if (c == "ideal") detail::add_ideal(r, ctx);
    else if (c == "cycles") detail::add_cycles(r, ctx);
    else if (c == "cycle-basis") detail::add_cycle_basis(r, ctx);
    else if (c == "is-dag") detail::add_dag(r, ctx);
    else if (c == "is-upd") detail::add_upd(r, ctx);
    else if (c == "covers") detail::add_covers(r, ctx);
    else if (c == "bipartite") detail::add_bipartite(r, ctx);
    else if (c == "hgraph") {
        auto g = req.k_graph ? build_k_graph(d) : build_h_graph(d);
        if (req.format == "json") r["graph"] = nlohmann::ordered_json::parse(render_json(g));
        else r["dot"] = render_dot(g, req.k_graph ? "K" : "H");
    } else if (c == "analyze") {
        detail::add_ideal(r, ctx);
        detail::add_cycles(r, ctx);
        detail::add_cycle_basis(r, ctx);
        detail::add_dag(r, ctx);
        detail::add_upd(r, ctx);
        detail::add_covers(r, ctx);
        detail::add_bipartite(r, ctx);
    } else {
        throw UsageError("unknown command '" + c + "'");
    }
    return r;
}

/// json: one compact line. text: one line per fact; a lone ideal prints bare polynomials.
inline std::string emit_report(const Report& r, const std::string& format) {
    if (format == "json") return r.dump() + "\n";
    std::ostringstream os;
    if (r.contains("dot")) return r["dot"].get<std::string>();
    if (r.contains("graph")) return r["graph"].dump(2) + "\n";
    const bool bare = r.size() == 1;
    for (const auto& [key, value] : r.items()) {
        if (key == "ideal" || key == "cycle_basis" || key == "divertex_ideal" || key == "dag_diagnostics") {
            if (!bare) os << key << ":\n";
            for (const auto& p : value) os << (bare ? "" : "  ") << p.get<std::string>() << "\n";
        } else if (key == "cycles") {
            if (!bare) os << "cycles:\n";
            for (const auto& c : value)
                os << (bare ? "" : "  ") << c["class"].get<std::string>() << " " << detail::join(c["edges"])
                   << " (length " << c["length"].get<std::size_t>() << ")\n";
        } else if (key == "covers") {
            os << "source cover: " << detail::join(value["source"]) << "\n";
            os << "sink cover: " << detail::join(value["sink"]) << "\n";
            os << "minimal vertex covers of K_D:\n";
            for (const auto& c : value["minimal_vertex_covers"]) os << "  " << detail::join(c) << "\n";
        } else if (value.is_array()) {
            os << key << ": " << detail::join(value) << "\n";
        } else if (value.is_string()) {
            os << key << ": " << value.get<std::string>() << "\n";
        } else {
            os << key << ": " << value.dump() << "\n";
        }
    }
    return os.str();
}

/// Command-line entry point; args excludes the program name.
inline Result run(const std::vector<std::string>& args) {
    Result res;
    AnalysisRequest req;
    std::uint64_t seed = 0;
    CLI::App app{"Decide digraph properties through polynomial ideals", "digideal"};
    app.add_option("command", req.command, "Command to run")->required()->check(CLI::IsMember(commands()));
    app.add_option("input", req.input, "Graph file (JSON or DOT)")->required();
    app.add_option("--input-format", req.input_format, "Input format (default: detect)")
        ->check(CLI::IsMember({"json", "dot"}));
    app.add_option("--order", req.order, "Term order on the edge variables")->check(CLI::IsMember({"lex", "grevlex"}));
    app.add_option("--vars", req.vars, "Edge priority list, highest first")->delimiter(',');
    app.add_option("--method", req.method, "Ideal family")->check(CLI::IsMember({"toric", "linear"}));
    app.add_option("--route", req.route, "Toric ideal construction")->check(CLI::IsMember({"elimination", "saturation"}));
    auto* seed_opt = app.add_option("--seed", seed, "Orientation seed for undirected input");
    app.add_option("--format", req.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", req.cap, "Enumeration cap")->check(CLI::PositiveNumber);
    app.add_flag("--k", req.k_graph, "hgraph: emit K_D instead of H_D");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        res.code = app.exit(e, out, err) == 0 ? 0 : 1;
        res.out = out.str();
        res.err = err.str();
        return res;
    }
    if (*seed_opt) req.seed = seed;

    try {
        std::string text = detail::read_file(req.input);
        GraphFormat fmt = req.input_format.empty() ? sniff_format(text)
                          : req.input_format == "json" ? GraphFormat::json
                                                       : GraphFormat::dot;
        ParsedGraph pg = parse_graph(text, fmt);
        Digraph d;
        if (pg.directed) {
            d = pg.digraph;
        } else {
            if (!req.seed) throw UsageError("undirected input needs --seed to choose an orientation");
            d = orient(pg.ugraph, *req.seed);
        }
        Report r = run_command(req, d);
        if (!pg.directed && !r.contains("dot") && !r.contains("graph")) r["orientation_seed"] = *req.seed;
        res.out = emit_report(r, req.format);
    } catch (const UsageError& e) {
        res.code = 1;
        res.err = std::string("error: ") + e.what() + "\n";
    } catch (const ParseError& e) {
        res.code = 2;
        res.err = req.input + ": " + e.what() + "\n";
    } catch (const ValidationError& e) {
        res.code = 2;
        res.err = req.input + ": " + e.what() + "\n";
    } catch (const CapExceeded& e) {
        res.code = 3;
        res.err = std::string("error: ") + e.what() + "\n";
    } catch (const Error& e) {
        res.code = 1;
        res.err = std::string("error: ") + e.what() + "\n";
    }
    return res;
}

}  // namespace digideal::cli
