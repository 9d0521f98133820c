#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "term_order.hpp"
#include "var_table.hpp"

namespace digideal {

enum class BasisStatus { raw = 0, groebner = 1, reduced = 2 };

/// Generators of an ideal together with the order they are sorted under.
class IdealBasis {
public:
    IdealBasis(VarTablePtr vars, const TermOrder& order, const std::vector<Polynomial>& gens = {},
               BasisStatus status = BasisStatus::raw)
        : vars_(std::move(vars)), order_(std::make_shared<const TermOrder>(order)), status_(status) {
        if (!vars_) throw UsageError("IdealBasis: null variable table");
        if (order_->nvars() != vars_->size()) throw UsageError("IdealBasis: order does not match variable table");
        for (const auto& g : gens) {
            if (!same_table(g.vars(), vars_)) throw UsageError("IdealBasis: generator over a different table");
            if (g.is_zero()) continue;
            gens_.push_back(g.with_order(order_));
        }
    }

    [[nodiscard]] const VarTablePtr& vars() const { return vars_; }
    [[nodiscard]] const TermOrder& order() const { return *order_; }
    [[nodiscard]] const std::shared_ptr<const TermOrder>& order_ptr() const { return order_; }
    [[nodiscard]] const std::vector<Polynomial>& generators() const { return gens_; }
    [[nodiscard]] BasisStatus status() const { return status_; }
    [[nodiscard]] std::size_t size() const { return gens_.size(); }
    [[nodiscard]] bool empty() const { return gens_.empty(); }

    [[nodiscard]] std::vector<std::string> rendered() const {
        std::vector<std::string> out;
        for (const auto& g : gens_) out.push_back(g.to_string());
        return out;
    }

private:
    VarTablePtr vars_;
    std::shared_ptr<const TermOrder> order_;
    std::vector<Polynomial> gens_;
    BasisStatus status_;
};

/// (lcm/LT(f))·f − (lcm/LT(g))·g with monic-normalized leading terms.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw UsageError("s_polynomial: zero input");
    detail::require_same_table(f, g);
    auto ordp = std::make_shared<const TermOrder>(ord);
    auto fo = f.with_order(ordp);
    auto go = g.with_order(ordp);
    const auto& lf = fo.leading();
    const auto& lg = go.leading();
    Monomial l = lcm(lf.mono, lg.mono);
    Monomial mf = l / lf.mono;
    Monomial mg = l / lg.mono;
    detail::Terms a = detail::add_scaled({}, Scalar(1) / lf.coeff, &mf, fo.terms(), ord);
    detail::Terms s = detail::add_scaled(a, -(Scalar(1) / lg.coeff), &mg, go.terms(), ord);
    Polynomial r(f.vars(), {}, ordp);
    r.mutable_terms() = std::move(s);
    return r;
}

namespace detail {

inline Terms make_monic(Terms t) {
    if (t.empty() || t.front().coeff.is_one()) return t;
    Scalar inv = Scalar(1) / t.front().coeff;
    for (auto& x : t) x.coeff *= inv;
    return t;
}

inline Terms spoly_terms(const Terms& f, const Terms& g, const TermOrder& ord) {
    Monomial l = lcm(f.front().mono, g.front().mono);
    Monomial mf = l / f.front().mono;
    Monomial mg = l / g.front().mono;
    Terms a = add_scaled({}, Scalar(1) / f.front().coeff, &mf, f, ord);
    return add_scaled(a, -(Scalar(1) / g.front().coeff), &mg, g, ord);
}

inline Terms reduce_against(const Terms& f, const std::vector<Terms>& basis, const TermOrder& ord) {
    std::vector<const Terms*> refs;
    refs.reserve(basis.size());
    for (const auto& g : basis) refs.push_back(&g);
    return normal_form(f, refs, ord);
}

/// Buchberger completion on monic sorted term lists, with the Gebauer-Moeller pair update.
inline std::vector<Terms> buchberger_terms(std::vector<Terms> input, const TermOrder& ord) {
    std::vector<Terms> G;
    std::vector<char> active;
    std::vector<std::uint64_t> sugar;
    // block orders select by sugar first; every order then takes the smallest lcm under `ord`
    const bool use_sugar = ord.kind() == OrderKind::block;
    struct Pair {
        std::uint64_t sugar;
        Monomial lcm;
        std::size_t j, i;
    };
    auto before = [&ord](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        auto c = ord.compare_unchecked(a.lcm, b.lcm);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    };
    std::set<Pair, decltype(before)> queue(before);

    auto lm = [&](std::size_t i) -> const Monomial& { return G[i].front().mono; };

    auto reduce_active = [&](const Terms& f) {
        std::vector<const Terms*> refs;
        for (std::size_t i = 0; i < G.size(); ++i)
            if (active[i]) refs.push_back(&G[i]);
        return make_monic(normal_form(f, refs, ord));
    };

    auto total_degree = [](const Terms& f) {
        std::uint64_t d = 0;
        for (const auto& t : f) d = std::max<std::uint64_t>(d, t.mono.degree());
        return d;
    };

    auto add_element = [&](Terms h, std::uint64_t s) {
        const std::size_t k = G.size();
        G.push_back(std::move(h));
        active.push_back(1);
        sugar.push_back(std::max(s, total_degree(G[k])));
        const Monomial& lh = lm(k);

        // drop old pairs whose lcm the new leading monomial splits
        for (auto it = queue.begin(); it != queue.end();) {
            const auto& [sg, l, j, i] = *it;
            if (lh.divides(l) && !(lcm(lm(i), lh) == l) && !(lcm(lm(j), lh) == l)) it = queue.erase(it);
            else ++it;
        }

        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < k; ++i)
            if (active[i]) cand.push_back(i);
        std::vector<Monomial> lcms;
        for (auto i : cand) lcms.push_back(lcm(lm(i), lh));
        std::vector<char> alive(cand.size(), 1);
        std::vector<std::size_t> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            alive[a] = 0;
            bool keep = lm(cand[a]).coprime(lh);
            if (!keep) {
                keep = true;
                for (std::size_t b = 0; b < cand.size() && keep; ++b)
                    if (b != a && (alive[b] || std::find(kept.begin(), kept.end(), b) != kept.end()) &&
                        lcms[b].divides(lcms[a]))
                        keep = false;
            }
            if (keep) kept.push_back(a);
        }
        for (auto a : kept) {
            if (lm(cand[a]).coprime(lh)) continue;
            const std::size_t i = cand[a];
            const std::uint64_t d = lcms[a].degree();
            const std::uint64_t s = use_sugar ? std::max(sugar[i] + d - lm(i).degree(), sugar[k] + d - lh.degree()) : 0;
            queue.insert(Pair{s, lcms[a], k, i});
        }

        for (std::size_t i = 0; i < k; ++i)
            if (active[i] && lh.divides(lm(i))) active[i] = 0;
    };

    for (auto& f : input) {
        Terms h = reduce_active(f);
        if (!h.empty()) add_element(std::move(h), total_degree(f));
    }

    while (!queue.empty()) {
        auto [sg, l, j, i] = *queue.begin();
        queue.erase(queue.begin());
        Terms h = reduce_active(spoly_terms(G[i], G[j], ord));
        if (!h.empty()) add_element(std::move(h), sg);
    }

    std::vector<Terms> out;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (active[i]) out.push_back(std::move(G[i]));
    return out;
}

/// Minimal, fully inter-reduced, monic basis sorted by descending leading monomial.
inline std::vector<Terms> reduce_terms(std::vector<Terms> G, const TermOrder& ord) {
    std::vector<Terms> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& mi = G[i].front().mono;
            const auto& mj = G[j].front().mono;
            if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<Terms> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<const Terms*> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(&minimal[j]);
        Terms head{minimal[i].front()};
        Terms tail(minimal[i].begin() + 1, minimal[i].end());
        Terms r = normal_form(std::move(tail), others, ord);
        head.insert(head.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
        out.push_back(make_monic(std::move(head)));
    }
    std::sort(out.begin(), out.end(), [&](const Terms& a, const Terms& b) {
        return ord.compare_unchecked(a.front().mono, b.front().mono) == std::strong_ordering::greater;
    });
    return out;
}

inline std::vector<Terms> terms_of(const IdealBasis& I) {
    std::vector<Terms> t;
    t.reserve(I.size());
    for (const auto& g : I.generators()) t.push_back(g.terms());
    return t;
}

inline std::vector<Polynomial> to_polys(std::vector<Terms> ts, const VarTablePtr& vars,
                                        const std::shared_ptr<const TermOrder>& ord) {
    std::vector<Polynomial> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        Polynomial p(vars, {}, ord);
        p.mutable_terms() = std::move(t);
        out.push_back(std::move(p));
    }
    return out;
}

/// Copy of `ord` over `nvars` variables; the extra variables rank below all existing ones.
inline TermOrder extend_order(const TermOrder& ord, std::size_t nvars) {
    if (nvars < ord.nvars()) throw UsageError("extend_order: cannot shrink an order");
    if (ord.kind() == OrderKind::block) return TermOrder::elimination(ord.front_block(), extend_order(*ord.base(), nvars));
    auto p = ord.priority();
    for (std::size_t v = ord.nvars(); v < nvars; ++v) p.push_back(v);
    return ord.kind() == OrderKind::lex ? TermOrder::lex(std::move(p)) : TermOrder::grevlex(std::move(p));
}

}  // namespace detail

/// Exhaustive check that every S-polynomial of generator pairs reduces to zero.
inline bool satisfies_buchberger_criterion(const IdealBasis& I) {
    auto G = detail::terms_of(I);
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j)
            if (!detail::reduce_against(detail::spoly_terms(G[i], G[j], I.order()), G, I.order()).empty())
                return false;
    return true;
}

/// Gröbner basis of the ideal generated by `gens` under its order.
inline IdealBasis buchberger(const IdealBasis& gens) {
    auto G = detail::buchberger_terms(detail::terms_of(gens), gens.order());
    return IdealBasis(gens.vars(), gens.order(), detail::to_polys(std::move(G), gens.vars(), gens.order_ptr()),
                      BasisStatus::groebner);
}

/// Unique reduced Gröbner basis; the input must already be a Gröbner basis.
inline IdealBasis reduce_basis(const IdealBasis& gb) {
    if (gb.status() == BasisStatus::raw && !satisfies_buchberger_criterion(gb))
        throw UsageError("reduce_basis: input is not a Groebner basis");
    auto R = detail::reduce_terms(detail::terms_of(gb), gb.order());
    return IdealBasis(gb.vars(), gb.order(), detail::to_polys(std::move(R), gb.vars(), gb.order_ptr()),
                      BasisStatus::reduced);
}

/// buchberger followed by reduce_basis.
inline IdealBasis groebner_basis(const IdealBasis& gens) {
    if (gens.status() == BasisStatus::reduced) return gens;
    return reduce_basis(buchberger(gens));
}

/// Generators of I ∩ K[vars \ drop] as a reduced basis under I's order.
inline IdealBasis eliminate(const IdealBasis& I, const std::vector<std::size_t>& drop) {
    if (drop.empty()) return groebner_basis(I);
    TermOrder elim = TermOrder::elimination(drop, I.order());
    IdealBasis big(I.vars(), elim, I.generators());
    auto G = detail::reduce_terms(detail::buchberger_terms(detail::terms_of(big), elim), elim);
    std::vector<Polynomial> kept;
    for (auto& t : G) {
        bool free = true;
        for (const auto& term : t)
            if (elim.touches_front(term.mono)) { free = false; break; }
        if (!free) continue;
        Polynomial p(I.vars(), {}, I.order_ptr());
        p.mutable_terms() = std::move(t);
        kept.push_back(std::move(p));
    }
    return IdealBasis(I.vars(), I.order(), kept, BasisStatus::reduced);
}

/// I : f^∞ via one auxiliary variable w and the relation w·f − 1.
inline IdealBasis saturate(const IdealBasis& I, const Polynomial& f) {
    if (f.is_zero()) throw UsageError("saturate: f must be nonzero");
    if (!same_table(f.vars(), I.vars())) throw UsageError("saturate: polynomial over a different table");
    auto names = I.vars()->names();
    names.push_back(I.vars()->fresh_name("_w"));
    auto big_vars = VarTable::make(names);
    const std::size_t w = names.size() - 1;
    auto big_order = std::make_shared<const TermOrder>(detail::extend_order(I.order(), names.size()));

    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.transfer(big_vars, big_order));
    Polynomial fw = f.transfer(big_vars, big_order) * Polynomial::monomial(big_vars, Monomial::variable(names.size(), w));
    gens.push_back(fw - Polynomial::constant(big_vars, Scalar(1)));
    auto elim = eliminate(IdealBasis(big_vars, *big_order, gens), {w});

    std::vector<Polynomial> back;
    for (const auto& g : elim.generators()) back.push_back(g.transfer(I.vars(), I.order_ptr()));
    return IdealBasis(I.vars(), I.order(), back, BasisStatus::reduced);
}

/// Ideal membership by normal form against a Gröbner basis.
inline bool contains(const IdealBasis& I, const Polynomial& f) {
    if (f.is_zero()) return true;
    if (!same_table(f.vars(), I.vars())) throw UsageError("contains: polynomial over a different table");
    const IdealBasis gb = I.status() == BasisStatus::raw ? groebner_basis(I) : I;
    auto G = detail::terms_of(gb);
    return detail::reduce_against(f.with_order(gb.order_ptr()).terms(), G, gb.order()).empty();
}

}  // namespace digideal
