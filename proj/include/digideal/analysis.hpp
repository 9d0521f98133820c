#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graphs.hpp"
#include "groebner.hpp"
#include "polynomial.hpp"
#include "toric.hpp"

namespace digideal {

enum class ToricRoute { elimination, saturation };
enum class CycleClass { directed, undirected };
enum class CycleSource { toric_generators, linear_basis, oracle };

inline const char* to_string(CycleClass c) { return c == CycleClass::directed ? "directed" : "undirected"; }

inline const char* to_string(CycleSource s) {
    switch (s) {
        case CycleSource::toric_generators: return "toric-generators";
        case CycleSource::linear_basis: return "linear-basis";
        case CycleSource::oracle: return "oracle";
    }
    return "";
}

struct CycleEntry {
    std::vector<std::size_t> edges;  // sorted edge indices
    CycleClass cls = CycleClass::undirected;
    std::size_t length = 0;
    CycleWitness witness;

    [[nodiscard]] std::vector<std::string> labels(const Digraph& d) const {
        std::vector<std::string> out;
        for (auto h : edges) out.push_back(d.edge(h).label);
        return out;
    }
};

struct CycleReport {
    std::vector<CycleEntry> cycles;
    CycleSource source = CycleSource::toric_generators;
};

struct CoverReport {
    std::vector<std::vector<std::string>> minimal_vertex_covers;  // of K_D
    std::vector<std::vector<std::string>> source;
    std::vector<std::vector<std::string>> sink;
};

struct BipartitionReport {
    bool directly_bipartite = false;
    std::vector<std::string> sources;
    std::vector<std::string> sinks;
    std::optional<Polynomial> witness;
    std::optional<IdealBasis> vertex_ideal;
    bool oracle_agrees = true;
};

struct DagReport {
    bool dag = true;
    std::optional<CycleWitness> witness;
    std::vector<std::size_t> order;  // topological order when dag
    bool ideal_evidence = false;     // reduced basis holds some Πe − 1
    std::vector<std::string> diagnostics;
};

struct UpdReport {
    bool upd = true;
    std::string reason;
    bool unique_paths = true;     // exhaustive directed-path check
    bool directed_cycles = true;  // every cycle directed, pairwise sharing at most one vertex
};

// ---- diedge ideal ------------------------------------------------------------------------

inline VarTablePtr edge_vars(const Digraph& d) { return VarTable::make(d.edge_labels()); }

/// Reduced Gröbner basis of the toric ideal of IM(D)ᵗ in the edge variables.
inline IdealBasis diedge_ideal(const Digraph& d, const TermOrder& ord, ToricRoute route = ToricRoute::elimination) {
    auto vars = edge_vars(d);
    if (ord.nvars() != vars->size()) throw UsageError("diedge_ideal: order does not match the edge count");
    auto im = incidence_matrix(d);
    return route == ToricRoute::elimination ? toric_by_elimination(im, vars, ord) : toric_by_saturation(im, vars, ord);
}

inline IdealBasis diedge_ideal(const Digraph& d) { return diedge_ideal(d, TermOrder::grevlex(d.edge_count())); }

namespace detail {

inline CycleEntry entry_from_witness(CycleWitness w) {
    CycleEntry e;
    e.edges = w.edge_set();
    e.cls = w.directed() ? CycleClass::directed : CycleClass::undirected;
    e.length = e.edges.size();
    e.witness = std::move(w);
    return e;
}

inline void sort_entries(std::vector<CycleEntry>& es) {
    std::sort(es.begin(), es.end(), [](const CycleEntry& a, const CycleEntry& b) { return a.edges < b.edges; });
}

/// Edge index of each variable of `vars`; every variable must name an edge of `d`.
inline std::vector<std::size_t> variable_edges(const VarTable& vars, const Digraph& d) {
    std::vector<std::size_t> map;
    for (const auto& name : vars.names()) {
        auto h = d.find_edge(name);
        if (!h) throw UsageError("variable '" + name + "' is not an edge of the digraph");
        map.push_back(*h);
    }
    return map;
}

}  // namespace detail

/// Reads each generator Πe_I − Πe_J (or Πe_I − 1) as a cycle of D and verifies it.
inline CycleReport classify_generators(const IdealBasis& gb, const Digraph& d) {
    CycleReport r;
    r.source = CycleSource::toric_generators;
    auto var_edge = detail::variable_edges(*gb.vars(), d);
    for (const auto& g0 : gb.generators()) {
        const auto g = g0.monic();
        auto bad = [&](const std::string& why) {
            return StructuralError("generator " + g.to_string() + " is not a cycle binomial: " + why);
        };
        if (!g.is_binomial()) throw bad("not a binomial");
        const auto& t1 = g.terms()[0];
        const auto& t2 = g.terms()[1];
        if (!t1.coeff.is_one() || !(t2.coeff == Scalar(-1))) throw bad("coefficients are not +1/-1");
        if (!t1.mono.coprime(t2.mono)) throw bad("monomials share a variable");
        std::set<std::size_t> plus, minus;
        for (std::size_t i = 0; i < t1.mono.nvars(); ++i) {
            if (t1.mono[i] > 1 || t2.mono[i] > 1) throw bad("not squarefree");
            if (t1.mono[i]) plus.insert(var_edge[i]);
            if (t2.mono[i]) minus.insert(var_edge[i]);
        }
        std::vector<std::size_t> all(plus.begin(), plus.end());
        all.insert(all.end(), minus.begin(), minus.end());
        std::sort(all.begin(), all.end());
        auto w = cycle_from_edge_set(d, all);
        if (!w) throw bad("edge set is not an elementary cycle");
        // Edges on one side of the binomial are traversed in one direction.
        int plus_sign = 0;
        for (std::size_t k = 0; k < w->edges.size(); ++k) {
            int expect = plus.count(w->edges[k]) ? w->signs[k] : -w->signs[k];
            if (plus_sign == 0) plus_sign = expect;
            if (expect != plus_sign) throw bad("orientation does not match the cycle");
        }
        auto e = detail::entry_from_witness(std::move(*w));
        if ((e.cls == CycleClass::directed) != minus.empty()) throw bad("class does not match the binomial shape");
        e.length = plus.size() + minus.size();
        r.cycles.push_back(std::move(e));
    }
    detail::sort_entries(r.cycles);
    return r;
}

/// All cycles of the underlying graph, tagged by orientation class.
inline CycleReport oracle_cycle_report(const Digraph& d, std::size_t cap = 10000) {
    CycleReport r;
    r.source = CycleSource::oracle;
    for (auto& w : enumerate_cycles_oracle(d, cap)) r.cycles.push_back(detail::entry_from_witness(std::move(w)));
    return r;
}

/// f_C: product of forward edges minus product of backward edges.
inline Polynomial cycle_binomial(const CycleWitness& c, const VarTablePtr& vars, const Digraph& d) {
    std::vector<std::int64_t> u(vars->size(), 0);
    for (std::size_t k = 0; k < c.edges.size(); ++k) u.at(vars->index(d.edge(c.edges[k]).label)) = c.signs[k];
    return binomial_of(u, vars).monic();
}

// ---- DAG and unique paths ---------------------------------------------------------------

inline bool has_directed_generator(const IdealBasis& gb) {
    for (const auto& g : gb.generators()) {
        if (!g.is_binomial()) continue;
        if (g.terms()[1].mono.is_one() && !g.terms()[0].mono.is_one()) return true;
    }
    return false;
}

inline DagReport is_dag(const Digraph& d, const IdealBasis& gb) {
    DagReport r;
    auto topo = topological_sort(d);
    r.dag = topo.order.has_value();
    if (topo.order) r.order = *topo.order;
    r.witness = topo.cycle;
    r.ideal_evidence = has_directed_generator(gb);
    if (r.dag == r.ideal_evidence)
        r.diagnostics.push_back(r.dag ? "basis holds a generator of the form prod(e) - 1 but no directed cycle exists"
                                      : "directed cycle found but the basis has no generator of the form prod(e) - 1");
    return r;
}

inline DagReport is_dag(const Digraph& d) { return is_dag(d, diedge_ideal(d)); }

/// True iff every cycle is directed and any two cycles share at most one vertex.
inline bool cycles_directed_and_vertex_sparse(const Digraph& d, std::size_t cap = 10000) {
    auto cycles = enumerate_cycles_oracle(d, cap);
    std::vector<std::set<std::size_t>> vsets;
    for (const auto& c : cycles) {
        if (!c.directed()) return false;
        std::set<std::size_t> vs;
        for (auto h : c.edges) vs.insert(d.edge(h).tail);
        vsets.push_back(std::move(vs));
    }
    for (std::size_t i = 0; i < vsets.size(); ++i)
        for (std::size_t j = i + 1; j < vsets.size(); ++j) {
            std::size_t common = 0;
            for (auto v : vsets[i]) common += vsets[j].count(v);
            if (common > 1) return false;
        }
    return true;
}

/// Decided from the basis: zero ideal, or pairwise coprime generators Πe − 1.
inline UpdReport is_upd(const Digraph& d, const IdealBasis& gb, std::size_t cap = 10000) {
    UpdReport r;
    r.unique_paths = unique_directed_paths_oracle(d);
    r.directed_cycles = cycles_directed_and_vertex_sparse(d, cap);
    if (gb.empty()) {
        r.upd = true;
        r.reason = "edge ideal is zero";
    } else {
        r.upd = true;
        r.reason = "generators are pairwise coprime of the form prod(e) - 1";
        const auto& gens = gb.generators();
        for (const auto& g : gens) {
            if (!g.is_binomial() || !g.terms()[1].mono.is_one()) {
                r.upd = false;
                r.reason = "generator " + g.to_string() + " is not of the form prod(e) - 1";
                break;
            }
        }
        for (std::size_t i = 0; r.upd && i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (!gens[i].leading().mono.coprime(gens[j].leading().mono)) {
                    r.upd = false;
                    r.reason = "generators " + gens[i].to_string() + " and " + gens[j].to_string() + " share an edge";
                    break;
                }
    }
    return r;
}

inline UpdReport is_upd(const Digraph& d) { return is_upd(d, diedge_ideal(d)); }

/// The undirected cycle on the symmetric difference of two directed cycles that share an edge,
/// read off the S-polynomial of their binomials.
inline CycleWitness symmetric_difference_cycle(const CycleWitness& c1, const CycleWitness& c2, const Digraph& d) {
    if (!c1.directed() || !c2.directed()) throw UsageError("symmetric_difference_cycle: cycles must be directed");
    auto s1 = c1.edge_set(), s2 = c2.edge_set();
    std::vector<std::size_t> shared;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(shared));
    if (shared.empty()) throw UsageError("symmetric_difference_cycle: cycles are edge-disjoint");
    if (s1 == s2) throw UsageError("symmetric_difference_cycle: cycles are identical");
    auto vars = edge_vars(d);
    auto lex = TermOrder::lex(vars->size());
    auto f1 = cycle_binomial(c1, vars, d), f2 = cycle_binomial(c2, vars, d);
    auto s = s_polynomial(f1, f2, lex);
    std::vector<std::size_t> edges;
    for (auto v : s.support()) edges.push_back(d.edge_index(vars->name(v)));
    std::sort(edges.begin(), edges.end());
    auto w = cycle_from_edge_set(d, edges);
    if (!w) throw StructuralError("symmetric difference " + s.to_string() + " is not a single elementary cycle");
    return *w;
}

// ---- linear edge ideal ------------------------------------------------------------------

/// Integer basis of the cycle space as linear forms in the edge variables.
inline std::vector<Polynomial> linear_edge_ideal(const Digraph& d) {
    auto vars = edge_vars(d);
    std::vector<Polynomial> out;
    for (const auto& u : integer_kernel_basis(incidence_matrix(d)).vectors) {
        std::vector<Term> ts;
        for (std::size_t h = 0; h < u.size(); ++h)
            if (u[h] != 0) ts.push_back(Term{Scalar(u[h]), Monomial::variable(u.size(), h)});
        out.emplace_back(vars, std::move(ts));
    }
    return out;
}

inline std::size_t cycle_space_dimension(const Digraph& d) {
    return d.edge_count() + component_count(underlying(d)) - d.vertex_count();
}

/// h_C: signed sum of the cycle's edge variables.
inline Polynomial cycle_linear_form(const CycleWitness& c, const VarTablePtr& vars, const Digraph& d) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < c.edges.size(); ++k)
        ts.push_back(Term{Scalar(c.signs[k]), Monomial::variable(vars->size(), vars->index(d.edge(c.edges.at(k)).label))});
    return Polynomial(vars, std::move(ts));
}

inline bool check_cycle_in_linear_ideal(const CycleWitness& c, const Digraph& d) {
    auto lin = linear_edge_ideal(d);
    auto vars = edge_vars(d);
    return contains(IdealBasis(vars, TermOrder::grevlex(vars->size()), lin), cycle_linear_form(c, vars, d));
}

/// Cycles read from the linear basis; each basis vector is a signed cycle vector.
inline CycleReport classify_linear_basis(const std::vector<Polynomial>& basis, const Digraph& d) {
    CycleReport r;
    r.source = CycleSource::linear_basis;
    for (const auto& p : basis) {
        auto var_edge = detail::variable_edges(*p.vars(), d);
        std::vector<std::size_t> edges;
        std::vector<int> sign(d.edge_count(), 0);
        for (const auto& t : p.terms()) {
            auto vs = t.mono.support();
            if (vs.size() != 1 || t.mono.degree() != 1) throw StructuralError("not a linear form: " + p.to_string());
            if (!(t.coeff == Scalar(1)) && !(t.coeff == Scalar(-1)))
                throw StructuralError("coefficient outside {-1, 1} in " + p.to_string());
            edges.push_back(var_edge[vs[0]]);
            sign[var_edge[vs[0]]] = t.coeff.sign();
        }
        std::sort(edges.begin(), edges.end());
        auto w = cycle_from_edge_set(d, edges);
        if (!w) throw StructuralError("basis element " + p.to_string() + " is not an elementary cycle");
        int ratio = sign[w->edges[0]] * w->signs[0];
        for (std::size_t k = 0; k < w->edges.size(); ++k)
            if (sign[w->edges[k]] * w->signs[k] != ratio)
                throw StructuralError("basis element " + p.to_string() + " does not follow the cycle's orientation");
        r.cycles.push_back(detail::entry_from_witness(std::move(*w)));
    }
    detail::sort_entries(r.cycles);
    return r;
}

// ---- vertex ideals, bipartite structure, covers -------------------------------------------

/// Reduced basis of the kernel of v ↦ Π(edges at v), in the vertex variables.
inline IdealBasis vertex_ideal(const UGraph& g, const TermOrder& ord) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw PreconditionError("vertex_ideal: vertex '" + g.vertex(v) +
                                    "' is isolated; strip isolated vertices first");
    auto vars = VarTable::make(g.vertices());
    if (ord.nvars() != vars->size()) throw UsageError("vertex_ideal: order does not match the vertex count");
    IntMatrix m(g.edge_count(), g.vertex_count());
    for (std::size_t h = 0; h < g.edge_count(); ++h) {
        m(h, g.edge(h).a) = 1;
        m(h, g.edge(h).b) = 1;
    }
    return toric_by_elimination(m, vars, ord);
}

inline IdealBasis vertex_ideal(const UGraph& g) { return vertex_ideal(g, TermOrder::grevlex(g.vertex_count())); }

/// Membership of Π z_I − Π v_J in the vertex ideal of K_D with isolated vertices removed,
/// where z_I and v_J are all of its z- and v-vertices and no index occurs on both sides.
inline BipartitionReport is_directly_bipartite(const Digraph& d) {
    BipartitionReport r;
    const std::size_t n = d.vertex_count();
    std::vector<char> has_out(n, 0), has_in(n, 0);
    for (const auto& e : d.edges()) {
        has_out[e.tail] = 1;
        has_in[e.head] = 1;
    }
    auto oracle = directly_bipartite_oracle(d);
    if (d.edge_count() == 0) {
        r.oracle_agrees = !oracle.has_value();
        return r;
    }
    auto kstar = strip_isolated(build_k_graph(d));
    auto ideal = vertex_ideal(kstar);
    auto zl = z_labels(d);
    std::vector<Term> ts;
    std::vector<Monomial::Exponent> zs(kstar.vertex_count(), 0), vs(kstar.vertex_count(), 0);
    bool overlap = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (has_out[i]) zs[*kstar.find_vertex(zl[i])] = 1;
        if (has_in[i]) vs[*kstar.find_vertex(d.vertex(i))] = 1;
        overlap |= has_out[i] && has_in[i];
    }
    Polynomial p(ideal.vars(), {Term{Scalar(1), Monomial(std::move(zs))}, Term{Scalar(-1), Monomial(std::move(vs))}},
                 ideal.order_ptr());
    p = p.monic();
    r.directly_bipartite = !overlap && contains(ideal, p);
    if (r.directly_bipartite) {
        for (std::size_t i = 0; i < n; ++i) {
            if (has_out[i]) r.sources.push_back(d.vertex(i));
            if (has_in[i]) r.sinks.push_back(d.vertex(i));
        }
        r.witness = p;
    }
    r.vertex_ideal = std::move(ideal);
    r.oracle_agrees = r.directly_bipartite == oracle.has_value();
    return r;
}

/// Complements of the maximal independent sets, each sorted; list sorted.
inline std::vector<std::vector<std::size_t>> minimal_vertex_covers(const UGraph& g, std::size_t cap = 10000) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& e : g.edges()) adj[e.a][e.b] = adj[e.b][e.a] = 1;
    std::vector<std::vector<std::size_t>> out;
    // Bron-Kerbosch with pivoting on the complement graph.
    std::function<void(std::vector<std::size_t>&, std::vector<std::size_t>, std::vector<std::size_t>)> bk =
        [&](std::vector<std::size_t>& R, std::vector<std::size_t> P, std::vector<std::size_t> X) {
            if (P.empty() && X.empty()) {
                std::vector<char> in(n, 0);
                for (auto v : R) in[v] = 1;
                std::vector<std::size_t> cover;
                for (std::size_t v = 0; v < n; ++v)
                    if (!in[v]) cover.push_back(v);
                out.push_back(std::move(cover));
                if (out.size() > cap) throw CapExceeded("vertex cover enumeration exceeded the cap of " + std::to_string(cap));
                return;
            }
            auto nonadj = [&](std::size_t a, std::size_t b) { return a != b && !adj[a][b]; };
            std::size_t pivot = P.empty() ? X.front() : P.front();
            std::size_t best = 0;
            for (const auto* S : {&P, &X})
                for (auto u : *S) {
                    std::size_t c = 0;
                    for (auto v : P) c += nonadj(u, v);
                    if (c > best) best = c, pivot = u;
                }
            std::vector<std::size_t> cand;
            for (auto v : P)
                if (!nonadj(pivot, v)) cand.push_back(v);
            for (auto v : cand) {
                std::vector<std::size_t> P2, X2;
                for (auto w : P)
                    if (nonadj(v, w)) P2.push_back(w);
                for (auto w : X)
                    if (nonadj(v, w)) X2.push_back(w);
                R.push_back(v);
                bk(R, std::move(P2), std::move(X2));
                R.pop_back();
                P.erase(std::find(P.begin(), P.end(), v));
                X.push_back(v);
            }
        };
    std::vector<std::size_t> R, P;
    for (std::size_t v = 0; v < n; ++v) P.push_back(v);
    bk(R, std::move(P), {});
    std::sort(out.begin(), out.end());
    return out;
}

/// Minimal vertex covers of K_D, and the ones lying on the z side (source covers, read as
/// v-labels) or on the v side (sink covers).
inline CoverReport source_sink_covers(const Digraph& d, std::size_t cap = 10000) {
    CoverReport r;
    const std::size_t n = d.vertex_count();
    auto k = build_k_graph(d);
    for (const auto& cover : minimal_vertex_covers(k, cap)) {
        std::vector<std::string> labels;
        bool all_v = true, all_z = true;
        for (auto x : cover) {
            labels.push_back(k.vertex(x));
            (x < n ? all_z : all_v) = false;
        }
        r.minimal_vertex_covers.push_back(labels);
        if (all_z) {
            std::vector<std::string> src;
            for (auto x : cover) src.push_back(d.vertex(x - n));
            r.source.push_back(std::move(src));
        }
        if (all_v) r.sink.push_back(std::move(labels));
    }
    return r;
}

/// Cycles of G found through the edge ideal of a seeded random orientation.
inline CycleReport undirected_cycles_via_orientation(const UGraph& g, std::uint64_t seed) {
    auto d = orient(g, seed);
    return classify_generators(diedge_ideal(d), d);
}

}  // namespace digideal
