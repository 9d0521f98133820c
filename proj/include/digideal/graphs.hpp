#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "toric.hpp"

namespace digideal {

struct DiEdge {
    std::string label;
    std::size_t tail;
    std::size_t head;
};

struct UEdge {
    std::string label;
    std::size_t a;
    std::size_t b;
};

namespace detail {

inline std::unordered_map<std::string, std::size_t> index_labels(const std::vector<std::string>& labels,
                                                                  const char* what) {
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty()) throw ValidationError(std::string("empty ") + what + " label");
        if (!idx.emplace(labels[i], i).second)
            throw ValidationError(std::string("duplicate ") + what + " label '" + labels[i] + "'");
    }
    return idx;
}

inline std::string fresh_label(std::string base, const std::unordered_set<std::string>& taken) {
    while (taken.count(base)) base += "_";
    return base;
}

}  // namespace detail

/// Simple directed graph: no loops, no repeated or antiparallel edges.
class Digraph {
public:
    Digraph() = default;
    Digraph(std::vector<std::string> vertices, std::vector<DiEdge> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        vertex_index_ = detail::index_labels(vertices_, "vertex");
        std::vector<std::string> elabels;
        for (const auto& e : edges_) elabels.push_back(e.label);
        edge_index_ = detail::index_labels(elabels, "edge");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        out_.assign(vertices_.size(), {});
        in_.assign(vertices_.size(), {});
        for (std::size_t h = 0; h < edges_.size(); ++h) {
            const auto& e = edges_[h];
            if (e.tail >= vertices_.size() || e.head >= vertices_.size())
                throw ValidationError("edge '" + e.label + "' refers to an unknown vertex");
            if (e.tail == e.head) throw ValidationError("edge '" + e.label + "' is a loop");
            if (seen.count({e.tail, e.head}))
                throw ValidationError("edge '" + e.label + "' duplicates an existing edge " + vertices_[e.tail] +
                                      " -> " + vertices_[e.head]);
            if (seen.count({e.head, e.tail}))
                throw ValidationError("edge '" + e.label + "' is antiparallel to an existing edge " +
                                      vertices_[e.head] + " -> " + vertices_[e.tail]);
            seen.insert({e.tail, e.head});
            out_[e.tail].push_back(h);
            in_[e.head].push_back(h);
        }
    }

    /// Build from vertex labels and (edge label, from label, to label) triples.
    static Digraph from_labels(std::vector<std::string> vertices,
                               const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
        auto idx = detail::index_labels(vertices, "vertex");
        std::vector<DiEdge> es;
        for (const auto& [label, from, to] : edges) {
            auto f = idx.find(from), t = idx.find(to);
            if (f == idx.end()) throw ValidationError("edge '" + label + "' uses unknown vertex '" + from + "'");
            if (t == idx.end()) throw ValidationError("edge '" + label + "' uses unknown vertex '" + to + "'");
            es.push_back(DiEdge{label, f->second, t->second});
        }
        return Digraph(std::move(vertices), std::move(es));
    }

    [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] const std::vector<std::string>& vertices() const { return vertices_; }
    [[nodiscard]] const std::vector<DiEdge>& edges() const { return edges_; }
    [[nodiscard]] const std::string& vertex(std::size_t i) const { return vertices_.at(i); }
    [[nodiscard]] const DiEdge& edge(std::size_t h) const { return edges_.at(h); }
    [[nodiscard]] const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }
    [[nodiscard]] const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_.at(v); }

    [[nodiscard]] std::optional<std::size_t> find_vertex(const std::string& label) const {
        auto it = vertex_index_.find(label);
        return it == vertex_index_.end() ? std::nullopt : std::optional(it->second);
    }
    [[nodiscard]] std::optional<std::size_t> find_edge(const std::string& label) const {
        auto it = edge_index_.find(label);
        return it == edge_index_.end() ? std::nullopt : std::optional(it->second);
    }
    [[nodiscard]] std::size_t edge_index(const std::string& label) const {
        auto h = find_edge(label);
        if (!h) throw UsageError("unknown edge '" + label + "'");
        return *h;
    }
    [[nodiscard]] std::vector<std::string> edge_labels() const {
        std::vector<std::string> out;
        for (const auto& e : edges_) out.push_back(e.label);
        return out;
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
        for (std::size_t h = 0; h < a.edges_.size(); ++h) {
            const auto &x = a.edges_[h], &y = b.edges_[h];
            if (x.label != y.label || x.tail != y.tail || x.head != y.head) return false;
        }
        return true;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<DiEdge> edges_;
    std::unordered_map<std::string, std::size_t> vertex_index_;
    std::unordered_map<std::string, std::size_t> edge_index_;
    std::vector<std::vector<std::size_t>> out_, in_;
};

/// Simple undirected graph.
class UGraph {
public:
    UGraph() = default;
    UGraph(std::vector<std::string> vertices, std::vector<UEdge> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        vertex_index_ = detail::index_labels(vertices_, "vertex");
        std::vector<std::string> elabels;
        for (const auto& e : edges_) elabels.push_back(e.label);
        edge_index_ = detail::index_labels(elabels, "edge");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        adj_.assign(vertices_.size(), {});
        for (std::size_t h = 0; h < edges_.size(); ++h) {
            const auto& e = edges_[h];
            if (e.a >= vertices_.size() || e.b >= vertices_.size())
                throw ValidationError("edge '" + e.label + "' refers to an unknown vertex");
            if (e.a == e.b) throw ValidationError("edge '" + e.label + "' is a loop");
            auto key = std::minmax(e.a, e.b);
            if (!seen.insert({key.first, key.second}).second)
                throw ValidationError("edge '" + e.label + "' duplicates an existing edge");
            adj_[e.a].push_back({e.b, h});
            adj_[e.b].push_back({e.a, h});
        }
    }

    static UGraph from_labels(std::vector<std::string> vertices,
                              const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
        auto idx = detail::index_labels(vertices, "vertex");
        std::vector<UEdge> es;
        for (const auto& [label, a, b] : edges) {
            auto f = idx.find(a), t = idx.find(b);
            if (f == idx.end() || t == idx.end()) throw ValidationError("edge '" + label + "' uses an unknown vertex");
            es.push_back(UEdge{label, f->second, t->second});
        }
        return UGraph(std::move(vertices), std::move(es));
    }

    [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] const std::vector<std::string>& vertices() const { return vertices_; }
    [[nodiscard]] const std::vector<UEdge>& edges() const { return edges_; }
    [[nodiscard]] const std::string& vertex(std::size_t i) const { return vertices_.at(i); }
    [[nodiscard]] const UEdge& edge(std::size_t h) const { return edges_.at(h); }
    /// (neighbour, edge index) pairs.
    [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& adjacent(std::size_t v) const {
        return adj_.at(v);
    }
    [[nodiscard]] std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
    [[nodiscard]] std::optional<std::size_t> find_vertex(const std::string& label) const {
        auto it = vertex_index_.find(label);
        return it == vertex_index_.end() ? std::nullopt : std::optional(it->second);
    }
    [[nodiscard]] std::optional<std::size_t> find_edge(const std::string& label) const {
        auto it = edge_index_.find(label);
        return it == edge_index_.end() ? std::nullopt : std::optional(it->second);
    }

private:
    std::vector<std::string> vertices_;
    std::vector<UEdge> edges_;
    std::unordered_map<std::string, std::size_t> vertex_index_;
    std::unordered_map<std::string, std::size_t> edge_index_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
};

/// Set of pairwise vertex-disjoint edges, by edge index.
struct Matching {
    std::vector<std::size_t> edges;

    [[nodiscard]] std::vector<std::string> labels(const UGraph& g) const {
        std::vector<std::string> out;
        for (auto h : edges) out.push_back(g.edge(h).label);
        return out;
    }
};

/// Two colour classes of a bipartite graph.
struct Bipartition {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    std::vector<int> side;  // 0 = left, 1 = right, per vertex
};

/// Closed elementary walk: edge indices in traversal order, +1 where the edge is
/// traversed along its orientation and −1 against it.
struct CycleWitness {
    std::vector<std::size_t> edges;
    std::vector<int> signs;

    [[nodiscard]] bool directed() const {
        return !edges.empty() && std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
    }
    [[nodiscard]] std::vector<std::size_t> edge_set() const {
        auto s = edges;
        std::sort(s.begin(), s.end());
        return s;
    }
    [[nodiscard]] std::vector<std::string> labels(const Digraph& d) const {
        std::vector<std::string> out;
        for (auto h : edges) out.push_back(d.edge(h).label);
        return out;
    }
    /// Signed incidence vector in {−1,0,1}^m.
    [[nodiscard]] std::vector<std::int64_t> incidence_vector(std::size_t m) const {
        std::vector<std::int64_t> v(m, 0);
        for (std::size_t k = 0; k < edges.size(); ++k) v.at(edges[k]) = signs[k];
        return v;
    }
    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

// ---- constructions -------------------------------------------------------------------------

/// Vertex × edge matrix: −1 at the tail, +1 at the head.
inline IntMatrix incidence_matrix(const Digraph& d) {
    IntMatrix m(d.vertex_count(), d.edge_count());
    for (std::size_t h = 0; h < d.edge_count(); ++h) {
        m(d.edge(h).tail, h) = -1;
        m(d.edge(h).head, h) = 1;
    }
    return m;
}

inline UGraph underlying(const Digraph& d) {
    std::vector<UEdge> es;
    for (const auto& e : d.edges()) es.push_back(UEdge{e.label, e.tail, e.head});
    return UGraph(d.vertices(), std::move(es));
}

/// Labels for the z-copies of the vertices: z1..zn, made unique against existing labels.
inline std::vector<std::string> z_labels(const Digraph& d) {
    std::unordered_set<std::string> taken(d.vertices().begin(), d.vertices().end());
    std::vector<std::string> z;
    for (std::size_t i = 0; i < d.vertex_count(); ++i) {
        z.push_back(detail::fresh_label("z" + std::to_string(i + 1), taken));
        taken.insert(z.back());
    }
    return z;
}

namespace detail {

inline UGraph double_graph(const Digraph& d, bool with_matching) {
    const std::size_t n = d.vertex_count();
    auto vertices = d.vertices();
    auto z = z_labels(d);
    vertices.insert(vertices.end(), z.begin(), z.end());
    std::vector<UEdge> es;
    for (const auto& e : d.edges()) es.push_back(UEdge{e.label, n + e.tail, e.head});
    if (with_matching) {
        std::unordered_set<std::string> taken;
        for (const auto& e : d.edges()) taken.insert(e.label);
        for (std::size_t i = 0; i < n; ++i) {
            std::string f = fresh_label("f" + std::to_string(i + 1), taken);
            taken.insert(f);
            es.push_back(UEdge{f, n + i, i});
        }
    }
    return UGraph(std::move(vertices), std::move(es));
}

}  // namespace detail

/// H_D: vertices v_1..v_n, z_1..z_n; an edge {z_i, v_j} for every [v_i, v_j] (keeping its
/// label) and the matching edges f_i = {z_i, v_i}.
inline UGraph build_h_graph(const Digraph& d) { return detail::double_graph(d, true); }

/// K_D: H_D without the matching edges. Isolated vertices are kept.
inline UGraph build_k_graph(const Digraph& d) { return detail::double_graph(d, false); }

/// Induced subgraph on the non-isolated vertices.
inline UGraph strip_isolated(const UGraph& g) {
    std::vector<std::size_t> remap(g.vertex_count(), SIZE_MAX);
    std::vector<std::string> vs;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) continue;
        remap[v] = vs.size();
        vs.push_back(g.vertex(v));
    }
    std::vector<UEdge> es;
    for (const auto& e : g.edges()) es.push_back(UEdge{e.label, remap[e.a], remap[e.b]});
    return UGraph(std::move(vs), std::move(es));
}

/// Number of connected components (isolated vertices count as components).
inline std::size_t component_count(const UGraph& g) {
    std::vector<std::size_t> parent(g.vertex_count());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t c = g.vertex_count();
    for (const auto& e : g.edges()) {
        auto a = find(e.a), b = find(e.b);
        if (a != b) {
            parent[a] = b;
            --c;
        }
    }
    return c;
}

/// Two-colouring with each component's lowest-index vertex on the left, or nullopt if an odd cycle exists.
inline std::optional<Bipartition> is_bipartite(const UGraph& g) {
    Bipartition bp;
    bp.side.assign(g.vertex_count(), -1);
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        if (bp.side[s] != -1) continue;
        bp.side[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            for (auto [w, h] : g.adjacent(v)) {
                if (bp.side[w] == -1) {
                    bp.side[w] = 1 - bp.side[v];
                    q.push(w);
                } else if (bp.side[w] == bp.side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) (bp.side[v] == 0 ? bp.left : bp.right).push_back(v);
    return bp;
}

/// Perfect matching of a bipartite graph by augmenting paths, or nullopt if none exists.
inline std::optional<Matching> perfect_matching(const UGraph& g) {
    auto bp = is_bipartite(g);
    if (!bp) throw UnsupportedError("perfect_matching: only bipartite graphs are supported");
    if (g.vertex_count() % 2 != 0) return std::nullopt;
    std::vector<std::size_t> match_edge(g.vertex_count(), SIZE_MAX);  // edge matched at each vertex
    auto other = [&](std::size_t h, std::size_t v) { return g.edge(h).a == v ? g.edge(h).b : g.edge(h).a; };
    std::vector<char> visited;
    std::function<bool(std::size_t)> augment = [&](std::size_t u) -> bool {
        for (auto [w, h] : g.adjacent(u)) {
            if (visited[w]) continue;
            visited[w] = 1;
            if (match_edge[w] == SIZE_MAX || augment(other(match_edge[w], w))) {
                match_edge[u] = h;
                match_edge[w] = h;
                return true;
            }
        }
        return false;
    };
    for (auto u : bp->left) {
        visited.assign(g.vertex_count(), 0);
        if (!augment(u)) return std::nullopt;
    }
    Matching m;
    for (auto u : bp->left) m.edges.push_back(match_edge[u]);
    std::sort(m.edges.begin(), m.edges.end());
    if (m.edges.size() * 2 != g.vertex_count()) return std::nullopt;
    return m;
}

/// Inverse of build_h_graph: matched pairs become (z_i, v_i), with the v side taken as the
/// colour class holding each component's lowest-index vertex; every other edge {z_i, v_j}
/// becomes [v_i, v_j].
inline Digraph digraph_from_bipartite(const UGraph& g, const Matching& m) {
    auto bp = is_bipartite(g);
    if (!bp) throw UsageError("digraph_from_bipartite: graph is not bipartite");
    std::vector<std::size_t> partner(g.vertex_count(), SIZE_MAX);
    std::vector<char> in_matching(g.edge_count(), 0);
    for (auto h : m.edges) {
        if (h >= g.edge_count()) throw UsageError("digraph_from_bipartite: matching edge out of range");
        const auto& e = g.edge(h);
        if (partner[e.a] != SIZE_MAX || partner[e.b] != SIZE_MAX)
            throw UsageError("digraph_from_bipartite: edges of the matching share a vertex");
        partner[e.a] = e.b;
        partner[e.b] = e.a;
        in_matching[h] = 1;
    }
    if (m.edges.size() * 2 != g.vertex_count()) throw UsageError("digraph_from_bipartite: matching is not perfect");

    std::vector<std::size_t> dindex(g.vertex_count(), SIZE_MAX);
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (bp->side[v] != 0) continue;
        dindex[v] = vertices.size();
        vertices.push_back(g.vertex(v));
    }
    std::vector<DiEdge> es;
    for (std::size_t h = 0; h < g.edge_count(); ++h) {
        if (in_matching[h]) continue;
        const auto& e = g.edge(h);
        std::size_t vside = bp->side[e.a] == 0 ? e.a : e.b;
        std::size_t zside = vside == e.a ? e.b : e.a;
        es.push_back(DiEdge{e.label, dindex[partner[zside]], dindex[vside]});
    }
    return Digraph(std::move(vertices), std::move(es));
}

// ---- combinatorial oracles -----------------------------------------------------------------

namespace detail {

/// Rotate/reverse so the smallest edge index comes first and is traversed forward.
inline CycleWitness canonical_cycle(CycleWitness c) {
    if (c.edges.empty()) return c;
    auto rotate_min = [](CycleWitness& w) {
        auto it = std::min_element(w.edges.begin(), w.edges.end());
        auto k = static_cast<std::ptrdiff_t>(it - w.edges.begin());
        std::rotate(w.edges.begin(), w.edges.begin() + k, w.edges.end());
        std::rotate(w.signs.begin(), w.signs.begin() + k, w.signs.end());
    };
    rotate_min(c);
    if (c.signs.front() < 0) {
        std::reverse(c.edges.begin(), c.edges.end());
        std::reverse(c.signs.begin(), c.signs.end());
        for (auto& s : c.signs) s = -s;
        rotate_min(c);
    }
    return c;
}

}  // namespace detail

/// If the edge set forms one elementary cycle of the underlying graph, its canonical witness.
inline std::optional<CycleWitness> cycle_from_edge_set(const Digraph& d, const std::vector<std::size_t>& edge_set) {
    if (edge_set.size() < 3) return std::nullopt;
    std::map<std::size_t, std::vector<std::size_t>> at;  // vertex -> incident edges in the set
    std::set<std::size_t> uniq(edge_set.begin(), edge_set.end());
    if (uniq.size() != edge_set.size()) return std::nullopt;
    for (auto h : edge_set) {
        if (h >= d.edge_count()) return std::nullopt;
        at[d.edge(h).tail].push_back(h);
        at[d.edge(h).head].push_back(h);
    }
    for (const auto& [v, es] : at)
        if (es.size() != 2) return std::nullopt;
    CycleWitness w;
    std::size_t start = d.edge(edge_set.front()).tail;
    std::size_t v = start;
    std::size_t prev = SIZE_MAX;
    do {
        const auto& es = at[v];
        std::size_t h = es[0] == prev ? es[1] : es[0];
        const auto& e = d.edge(h);
        w.edges.push_back(h);
        w.signs.push_back(e.tail == v ? 1 : -1);
        v = e.tail == v ? e.head : e.tail;
        prev = h;
    } while (v != start && w.edges.size() <= edge_set.size());
    if (v != start || w.edges.size() != edge_set.size()) return std::nullopt;
    return detail::canonical_cycle(std::move(w));
}

/// Every elementary cycle of the underlying graph, sorted by edge-index set.
inline std::vector<CycleWitness> enumerate_cycles_oracle(const Digraph& d, std::size_t cap = 10000) {
    const auto g = underlying(d);
    const std::size_t n = g.vertex_count();
    std::vector<CycleWitness> out;
    std::vector<std::size_t> vpath, epath;
    std::vector<char> on_path(n, 0);

    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t s, std::size_t v) {
        for (auto [w, h] : g.adjacent(v)) {
            if (!epath.empty() && h == epath.back()) continue;
            if (w == s && epath.size() >= 2) {
                if (vpath[1] < v) {
                    CycleWitness c;
                    for (std::size_t k = 0; k < epath.size(); ++k) {
                        c.edges.push_back(epath[k]);
                        c.signs.push_back(d.edge(epath[k]).tail == vpath[k] ? 1 : -1);
                    }
                    c.edges.push_back(h);
                    c.signs.push_back(d.edge(h).tail == v ? 1 : -1);
                    out.push_back(detail::canonical_cycle(std::move(c)));
                    if (out.size() > cap)
                        throw CapExceeded("cycle enumeration exceeded the cap of " + std::to_string(cap));
                }
                continue;
            }
            if (w < s || on_path[w]) continue;
            on_path[w] = 1;
            vpath.push_back(w);
            epath.push_back(h);
            dfs(s, w);
            epath.pop_back();
            vpath.pop_back();
            on_path[w] = 0;
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        on_path[s] = 1;
        vpath = {s};
        epath.clear();
        dfs(s, s);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end(),
              [](const CycleWitness& a, const CycleWitness& b) { return a.edge_set() < b.edge_set(); });
    return out;
}

struct TopologicalResult {
    std::optional<std::vector<std::size_t>> order;  // all edges point forward
    std::optional<CycleWitness> cycle;              // set when no order exists
};

/// Kahn's algorithm (smallest index first); on failure returns a directed cycle.
inline TopologicalResult topological_sort(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& e : d.edges()) ++indeg[e.head];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (!indeg[v]) ready.push(v);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        auto v = ready.top();
        ready.pop();
        order.push_back(v);
        for (auto h : d.out_edges(v))
            if (--indeg[d.edge(h).head] == 0) ready.push(d.edge(h).head);
    }
    TopologicalResult r;
    if (order.size() == n) {
        r.order = std::move(order);
        return r;
    }
    // Every remaining vertex has a remaining predecessor; walk backwards until a repeat.
    std::size_t v = 0;
    while (indeg[v] == 0) ++v;
    std::vector<std::size_t> seen_at(n, SIZE_MAX);
    std::vector<std::size_t> via;  // edge used to reach each step backwards
    std::vector<std::size_t> walk;
    while (seen_at[v] == SIZE_MAX) {
        seen_at[v] = walk.size();
        walk.push_back(v);
        for (auto h : d.in_edges(v)) {
            if (indeg[d.edge(h).tail] > 0) {
                via.push_back(h);
                v = d.edge(h).tail;
                break;
            }
        }
    }
    CycleWitness c;
    for (std::size_t k = seen_at[v]; k < via.size(); ++k) {
        c.edges.push_back(via[k]);
        c.signs.push_back(1);
    }
    std::reverse(c.edges.begin(), c.edges.end());
    r.cycle = detail::canonical_cycle(std::move(c));
    return r;
}

/// G with each edge given a direction from a seeded Mersenne Twister bit stream.
inline Digraph orient(const UGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<DiEdge> es;
    for (const auto& e : g.edges()) {
        bool flip = (rng() >> 63) != 0;
        es.push_back(flip ? DiEdge{e.label, e.b, e.a} : DiEdge{e.label, e.a, e.b});
    }
    return Digraph(g.vertices(), std::move(es));
}

/// True iff between every ordered pair (u, v) with v reachable from u there is exactly
/// one elementary directed path. Exhaustive; intended for small graphs.
inline bool unique_directed_paths_oracle(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<std::size_t> count(n, 0);
    bool ok = true;
    std::function<void(std::size_t)> dfs = [&](std::size_t v) {
        for (auto h : d.out_edges(v)) {
            auto w = d.edge(h).head;
            if (on_path[w]) continue;
            if (++count[w] > 1) {
                ok = false;
                return;
            }
            on_path[w] = 1;
            dfs(w);
            on_path[w] = 0;
            if (!ok) return;
        }
    };
    for (std::size_t u = 0; u < n && ok; ++u) {
        std::fill(count.begin(), count.end(), 0);
        on_path[u] = 1;
        dfs(u);
        on_path[u] = 0;
    }
    return ok;
}

/// Sources and sinks of a directly bipartite digraph, or nullopt. Vertices without edges
/// are ignored; at least one edge is required.
inline std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> directly_bipartite_oracle(
    const Digraph& d) {
    if (d.edge_count() == 0) return std::nullopt;
    std::vector<std::size_t> sources, sinks;
    for (std::size_t v = 0; v < d.vertex_count(); ++v) {
        bool out = !d.out_edges(v).empty(), in = !d.in_edges(v).empty();
        if (out && in) return std::nullopt;
        if (out) sources.push_back(v);
        if (in) sinks.push_back(v);
    }
    return std::make_pair(sources, sinks);
}

}  // namespace digideal
