#pragma once

#include <digideal/analysis.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace testing_support {

using namespace digideal;

inline Digraph make_digraph(std::size_t n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::string> vs;
    for (std::size_t i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    int h = 1;
    for (auto [a, b] : arcs) es.emplace_back("e" + std::to_string(h++), "v" + std::to_string(a), "v" + std::to_string(b));
    return Digraph::from_labels(vs, es);
}

inline Digraph d1() { return make_digraph(5, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {3, 4}, {3, 5}}); }
inline Digraph d2() { return make_digraph(5, {{1, 2}, {2, 3}, {1, 3}, {4, 3}, {3, 5}}); }
inline Digraph d4() { return make_digraph(5, {{1, 2}, {3, 2}, {1, 4}, {3, 4}, {3, 5}}); }

inline UGraph cycle_graph(std::size_t n) {
    std::vector<std::string> vs;
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    for (std::size_t i = 0; i < n; ++i) vs.push_back("u" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) es.emplace_back("e" + std::to_string(i + 1), vs[i], vs[(i + 1) % n]);
    return UGraph::from_labels(vs, es);
}

/// σ1: lex e3 > e1 > e4 > e2 > e5 > e6 on the edges of D1.
inline TermOrder sigma1() {
    auto vars = edge_vars(d1());
    return TermOrder::lex(*vars, {"e3", "e1", "e4", "e2", "e5", "e6"});
}

/// σ2: lex e1 > e3 > e2 > e4 > e5 on the edges of D2.
inline TermOrder sigma2() {
    auto vars = edge_vars(d2());
    return TermOrder::lex(*vars, {"e1", "e3", "e2", "e4", "e5"});
}

/// Random simple digraph with 1..max_n vertices and at most max_m edges, no antiparallel pairs.
inline Digraph random_digraph(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m) {
    std::size_t n = 1 + rng() % max_n;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::size_t m = pairs.empty() ? 0 : rng() % (std::min(max_m, pairs.size()) + 1);
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t k = 0; k < m; ++k) {
        auto [a, b] = pairs[k];
        arcs.push_back(rng() & 1 ? std::make_pair(a, b) : std::make_pair(b, a));
    }
    return make_digraph(n, arcs);
}

inline std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

inline Polynomial P(const std::string& text, const VarTablePtr& vars) { return Polynomial::parse(text, vars); }

inline std::set<std::string> rendered_set(const IdealBasis& I) {
    auto r = I.rendered();
    return {r.begin(), r.end()};
}

// ---- independent oracles ------------------------------------------------------------------

/// Edge subsets (as sorted index lists) that form one elementary cycle, found by testing
/// every subset: all touched vertices have degree 2 and the subset is connected.
inline std::vector<std::vector<std::size_t>> brute_force_cycle_sets(const Digraph& d) {
    const std::size_t m = d.edge_count();
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) < 3) continue;
        std::map<std::size_t, int> deg;
        std::vector<std::size_t> es;
        for (std::size_t h = 0; h < m; ++h)
            if (mask >> h & 1) {
                es.push_back(h);
                ++deg[d.edge(h).tail];
                ++deg[d.edge(h).head];
            }
        if (!std::all_of(deg.begin(), deg.end(), [](auto& p) { return p.second == 2; })) continue;
        // connectivity by flood fill over the chosen edges
        std::set<std::size_t> reached{d.edge(es[0]).tail};
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto h : es) {
                auto a = d.edge(h).tail, b = d.edge(h).head;
                if (reached.count(a) != reached.count(b)) {
                    reached.insert(a);
                    reached.insert(b);
                    grew = true;
                }
            }
        }
        if (reached.size() == deg.size()) out.push_back(es);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of simple directed paths from u to v, counted over (vertex, visited-set) states.
inline std::size_t count_directed_paths(const Digraph& d, std::size_t u, std::size_t v) {
    std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> memo;
    std::function<std::size_t(std::size_t, std::uint32_t)> go = [&](std::size_t x, std::uint32_t seen) -> std::size_t {
        if (x == v) return 1;
        auto key = std::make_pair(x, seen);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::size_t total = 0;
        for (auto h : d.out_edges(x)) {
            auto y = d.edge(h).head;
            if (seen >> y & 1) continue;
            total += go(y, seen | (1u << y));
        }
        return memo[key] = total;
    };
    return go(u, 1u << u);
}

inline bool brute_force_unique_paths(const Digraph& d) {
    for (std::size_t u = 0; u < d.vertex_count(); ++u)
        for (std::size_t v = 0; v < d.vertex_count(); ++v)
            if (u != v && count_directed_paths(d, u, v) > 1) return false;
    return true;
}

/// Minimal vertex covers by testing every vertex subset.
inline std::set<std::set<std::size_t>> brute_force_minimal_covers(const UGraph& g) {
    const std::size_t n = g.vertex_count();
    auto covers = [&](std::uint32_t mask) {
        for (const auto& e : g.edges())
            if (!(mask >> e.a & 1) && !(mask >> e.b & 1)) return false;
        return true;
    };
    std::set<std::set<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!covers(mask)) continue;
        bool minimal = true;
        for (std::size_t v = 0; v < n && minimal; ++v)
            if (mask >> v & 1 && covers(mask & ~(1u << v))) minimal = false;
        if (!minimal) continue;
        std::set<std::size_t> s;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1) s.insert(v);
        out.insert(s);
    }
    return out;
}

/// Rank of a list of rational vectors by Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Scalar>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            Scalar f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Coefficient vector of a linear form over `m` variables.
inline std::vector<Scalar> linear_coefficients(const Polynomial& p) {
    std::vector<Scalar> v(p.vars()->size(), Scalar(0));
    for (const auto& t : p.terms()) {
        auto s = t.mono.support();
        v.at(s.at(0)) = t.coeff;
    }
    return v;
}

inline std::vector<Scalar> to_scalars(const std::vector<std::int64_t>& v) {
    std::vector<Scalar> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

/// True when the two lists of vectors span the same rational subspace.
inline bool same_span(const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b) {
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    auto r = rational_rank(both);
    return r == rational_rank(a) && r == rational_rank(b);
}

/// x^a − x^b lies in the toric ideal of M iff M·a = M·b.
inline bool toric_binomial_oracle(const IntMatrix& M, const Polynomial& g) {
    if (g.size() != 2) return false;
    const auto& a = g.terms()[0].mono;
    const auto& b = g.terms()[1].mono;
    if (!(g.terms()[0].coeff + g.terms()[1].coeff).is_zero()) return false;
    std::vector<std::int64_t> diff(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) diff[i] = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
    auto img = M.apply(diff);
    return std::all_of(img.begin(), img.end(), [](std::int64_t x) { return x == 0; });
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    IntMatrix M(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) M(r, c) = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    return M;
}

inline VarTablePtr x_vars(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return VarTable::make(names);
}

}  // namespace testing_support
