#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "scalar.hpp"
#include "term_order.hpp"
#include "var_table.hpp"

namespace digideal {

struct Term {
    Scalar coeff;
    Monomial mono;
};

namespace detail {

using Terms = std::vector<Term>;

inline void sort_and_combine(Terms& terms, const TermOrder& ord) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ord.compare_unchecked(a.mono, b.mono) == std::strong_ordering::greater;
    });
    Terms out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms = std::move(out);
}

/// a + scale * shift * b, where a and b are sorted descending under `ord`.
inline Terms add_scaled(const Terms& a, const Scalar& scale, const Monomial* shift, const Terms& b,
                        const TermOrder& ord) {
    Terms out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto shifted = [&](std::size_t k) { return shift ? b[k].mono * *shift : b[k].mono; };
    std::optional<Monomial> bj;
    while (i < a.size() || j < b.size()) {
        if (j < b.size() && !bj) bj = shifted(j);
        if (j >= b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        if (i >= a.size()) {
            out.push_back(Term{scale * b[j].coeff, std::move(*bj)});
            bj.reset();
            ++j;
            continue;
        }
        auto c = ord.compare_unchecked(a[i].mono, *bj);
        if (c == std::strong_ordering::greater) {
            out.push_back(a[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back(Term{scale * b[j].coeff, std::move(*bj)});
            bj.reset();
            ++j;
        } else {
            Scalar s = a[i].coeff + scale * b[j].coeff;
            if (!s.is_zero()) out.push_back(Term{std::move(s), std::move(*bj)});
            bj.reset();
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace detail

/// Sparse polynomial with exact rational coefficients over a VarTable.
///
/// Terms are kept sorted descending under the polynomial's term order, with no zero
/// coefficients and no repeated monomials; the zero polynomial has no terms. When no
/// order is given the table's grevlex order (table position = priority) is used.
class Polynomial {
public:
    explicit Polynomial(VarTablePtr vars) : Polynomial(std::move(vars), {}, nullptr) {}

    Polynomial(VarTablePtr vars, std::vector<Term> terms, std::shared_ptr<const TermOrder> order = nullptr)
        : vars_(std::move(vars)), order_(std::move(order)), terms_(std::move(terms)) {
        if (!vars_) throw UsageError("Polynomial: null variable table");
        if (!order_) order_ = std::make_shared<const TermOrder>(TermOrder::grevlex(vars_->size()));
        if (order_->nvars() != vars_->size()) throw UsageError("Polynomial: order does not match variable table");
        for (const auto& t : terms_)
            if (t.mono.nvars() != vars_->size()) throw UsageError("Polynomial: monomial does not match variable table");
        detail::sort_and_combine(terms_, *order_);
    }

    Polynomial(VarTablePtr vars, std::vector<Term> terms, const TermOrder& order)
        : Polynomial(std::move(vars), std::move(terms), std::make_shared<const TermOrder>(order)) {}

    static Polynomial constant(VarTablePtr vars, const Scalar& c) {
        auto n = vars->size();
        return Polynomial(std::move(vars), {Term{c, Monomial(n)}});
    }
    static Polynomial monomial(VarTablePtr vars, const Monomial& m, const Scalar& c = Scalar(1)) {
        return Polynomial(std::move(vars), {Term{c, m}});
    }
    static Polynomial variable(VarTablePtr vars, std::string_view name) {
        auto n = vars->size();
        auto i = vars->index(name);
        return Polynomial(std::move(vars), {Term{Scalar(1), Monomial::variable(n, i)}});
    }

    /// Parses text such as "e1*e2*e3 - 1", "e1e2e3 - 1", "3/2*x^2 + y".
    static Polynomial parse(std::string_view text, VarTablePtr vars, std::shared_ptr<const TermOrder> order = nullptr);

    [[nodiscard]] const VarTablePtr& vars() const { return vars_; }
    [[nodiscard]] const TermOrder& order() const { return *order_; }
    [[nodiscard]] const std::shared_ptr<const TermOrder>& order_ptr() const { return order_; }
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    /// Same polynomial with its terms re-sorted under `ord`.
    [[nodiscard]] Polynomial with_order(std::shared_ptr<const TermOrder> ord) const {
        if (ord->nvars() != vars_->size()) throw UsageError("Polynomial: order does not match variable table");
        if (*ord == *order_) {
            Polynomial p(*this);
            p.order_ = std::move(ord);
            return p;
        }
        return Polynomial(vars_, terms_, std::move(ord));
    }
    [[nodiscard]] Polynomial with_order(const TermOrder& ord) const {
        return with_order(std::make_shared<const TermOrder>(ord));
    }

    /// Leading term under the polynomial's own order.
    [[nodiscard]] const Term& leading() const {
        if (terms_.empty()) throw UsageError("leading term of the zero polynomial is undefined");
        return terms_.front();
    }

    /// Divided by its leading coefficient (zero stays zero).
    [[nodiscard]] Polynomial monic() const {
        if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
        Polynomial p(*this);
        Scalar inv = Scalar(1) / terms_.front().coeff;
        for (auto& t : p.terms_) t.coeff *= inv;
        return p;
    }

    [[nodiscard]] Polynomial scaled(const Scalar& c, const Monomial& m) const {
        if (c.is_zero()) return Polynomial(vars_, {}, order_);
        Polynomial p(*this);
        for (auto& t : p.terms_) {
            t.coeff *= c;
            t.mono = t.mono * m;
        }
        return p;
    }

    /// True for c*m1 + d*m2 with both monomials present.
    [[nodiscard]] bool is_binomial() const { return terms_.size() == 2; }

    /// Indices of variables occurring in any term.
    [[nodiscard]] std::vector<std::size_t> support() const {
        std::vector<char> seen(vars_->size(), 0);
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < t.mono.nvars(); ++i)
                if (t.mono[i]) seen[i] = 1;
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i]) s.push_back(i);
        return s;
    }

    /// Re-expresses the polynomial over another table by variable name.
    /// Throws if a variable that occurs is missing from `target`.
    [[nodiscard]] Polynomial transfer(VarTablePtr target, std::shared_ptr<const TermOrder> ord = nullptr) const {
        std::vector<std::optional<std::size_t>> map(vars_->size());
        for (std::size_t i = 0; i < vars_->size(); ++i) map[i] = target->find(vars_->name(i));
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::vector<Monomial::Exponent> e(target->size(), 0);
            for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
                if (!t.mono[i]) continue;
                if (!map[i]) throw UsageError("variable '" + vars_->name(i) + "' is not in the target table");
                e[*map[i]] = t.mono[i];
            }
            out.push_back(Term{t.coeff, Monomial(std::move(e))});
        }
        return Polynomial(std::move(target), std::move(out), std::move(ord));
    }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!same_table(a.vars_, b.vars_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        if (*a.order_ == *b.order_) return equal_terms(a.terms_, b.terms_);
        return equal_terms(a.terms_, b.with_order(a.order_).terms_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

    // Internal access for the Gröbner engine.
    [[nodiscard]] detail::Terms& mutable_terms() { return terms_; }

private:
    static bool equal_terms(const detail::Terms& x, const detail::Terms& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!(x[i].coeff == y[i].coeff) || !(x[i].mono == y[i].mono)) return false;
        return true;
    }

    VarTablePtr vars_;
    std::shared_ptr<const TermOrder> order_;
    detail::Terms terms_;
};

namespace detail {

inline void require_same_table(const Polynomial& p, const Polynomial& q) {
    if (!same_table(p.vars(), q.vars())) throw UsageError("polynomials over different variable tables");
}

}  // namespace detail

/// Three-way comparison of monomials under `ord`.
inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, const TermOrder& ord) {
    if (a.nvars() != b.nvars()) throw UsageError("monomials over different variable tables");
    return ord.compare(a, b);
}

inline Polynomial add(const Polynomial& p, const Polynomial& q) {
    detail::require_same_table(p, q);
    const auto& qq = q.order() == p.order() ? q : q.with_order(p.order_ptr());
    auto terms = detail::add_scaled(p.terms(), Scalar(1), nullptr, qq.terms(), p.order());
    Polynomial r(p.vars(), {}, p.order_ptr());
    r.mutable_terms() = std::move(terms);
    return r;
}

inline Polynomial subtract(const Polynomial& p, const Polynomial& q) {
    detail::require_same_table(p, q);
    const auto& qq = q.order() == p.order() ? q : q.with_order(p.order_ptr());
    auto terms = detail::add_scaled(p.terms(), Scalar(-1), nullptr, qq.terms(), p.order());
    Polynomial r(p.vars(), {}, p.order_ptr());
    r.mutable_terms() = std::move(terms);
    return r;
}

inline Polynomial multiply(const Polynomial& p, const Polynomial& q) {
    detail::require_same_table(p, q);
    const auto& qq = q.order() == p.order() ? q : q.with_order(p.order_ptr());
    detail::Terms acc;
    for (const auto& t : p.terms()) acc = detail::add_scaled(acc, t.coeff, &t.mono, qq.terms(), p.order());
    Polynomial r(p.vars(), {}, p.order_ptr());
    r.mutable_terms() = std::move(acc);
    return r;
}

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return subtract(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return multiply(p, q); }
inline Polynomial operator-(const Polynomial& p) { return p.scaled(Scalar(-1), Monomial(p.vars()->size())); }

/// Leading (coefficient, monomial) of `p` under `ord`.
inline Term leading_term(const Polynomial& p, const TermOrder& ord) {
    if (p.is_zero()) throw UsageError("leading term of the zero polynomial is undefined");
    if (ord.nvars() != p.vars()->size()) throw UsageError("order does not match variable table");
    if (p.order() == ord) return p.leading();
    const Term* best = &p.terms().front();
    for (const auto& t : p.terms())
        if (ord.compare_unchecked(t.mono, best->mono) == std::strong_ordering::greater) best = &t;
    return *best;
}

namespace detail {

/// Full normal form of `f` modulo `basis`; all inputs sorted under `ord`. The first
/// basis element (in list order) whose leading monomial divides the current term is used.
inline Terms normal_form(Terms f, std::span<const Terms* const> basis, const TermOrder& ord) {
    Terms rem;
    while (!f.empty()) {
        const Term lt = f.front();
        const Terms* divisor = nullptr;
        for (const auto* g : basis) {
            if (!g->empty() && g->front().mono.divides(lt.mono)) {
                divisor = g;
                break;
            }
        }
        if (!divisor) {
            rem.push_back(lt);
            f.erase(f.begin());
            continue;
        }
        const Term& glt = divisor->front();
        Scalar q = lt.coeff / glt.coeff;
        Monomial m = lt.mono / glt.mono;
        f = add_scaled(f, -q, &m, *divisor, ord);
    }
    return rem;
}

}  // namespace detail

/// Normal form of `f` with respect to `basis` under `ord`.
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const TermOrder& ord) {
    auto ordp = std::make_shared<const TermOrder>(ord);
    if (ord.nvars() != f.vars()->size()) throw UsageError("order does not match variable table");
    std::vector<Polynomial> sorted;
    sorted.reserve(basis.size());
    for (const auto& g : basis) {
        detail::require_same_table(f, g);
        if (g.is_zero()) throw UsageError("reduce: basis contains the zero polynomial");
        sorted.push_back(g.with_order(ordp));
    }
    std::vector<const detail::Terms*> refs;
    for (const auto& g : sorted) refs.push_back(&g.terms());
    Polynomial r(f.vars(), {}, ordp);
    r.mutable_terms() = detail::normal_form(f.with_order(ordp).terms(), refs, ord);
    return r;
}

// ---- text rendering and parsing ----------------------------------------------------------

inline std::string render_monomial(const Monomial& m, const VarTable& vars) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += '*';
        s += vars.name(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar mag = t.coeff.sign() < 0 ? -t.coeff : t.coeff;
        if (first) {
            if (t.coeff.sign() < 0) s += "-";
        } else {
            s += t.coeff.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            s += mag.to_string();
        } else {
            if (!mag.is_one()) s += mag.to_string() + "*";
            s += render_monomial(t.mono, *vars_);
        }
    }
    return s;
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const VarTable& vars) : text_(text), vars_(vars) {}

    std::vector<Term> parse() {
        std::vector<Term> terms;
        skip_ws();
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                break;
            }
            first = false;
            Term t = parse_term();
            if (sign < 0) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            skip_ws();
            if (pos_ >= text_.size()) break;
            if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
        }
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return terms;
    }

private:
    Term parse_term() {
        Term t{Scalar(1), Monomial(vars_.size())};
        bool any = false;
        while (true) {
            skip_ws();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.coeff *= parse_number();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.mono = t.mono * parse_power();
            } else {
                if (!any) fail("expected a number or a variable");
                break;
            }
            any = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                char n = peek();
                if (!(std::isalnum(static_cast<unsigned char>(n)) || n == '_')) fail("expected a factor after '*'");
            }
        }
        return t;
    }

    Scalar parse_number() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string lit(text_.substr(start, pos_ - start));
        if (peek() == '/') {
            ++pos_;
            std::size_t ds = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (ds == pos_) fail("expected a denominator");
            lit += "/" + std::string(text_.substr(ds, pos_ - ds));
            Scalar s = Scalar::parse(lit);
            return s;
        }
        return Scalar::parse(lit);
    }

    Monomial parse_power() {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        std::string ident(text_.substr(start, pos_ - start));
        Monomial m = split_identifier(ident, start);
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t es = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (es == pos_) fail("expected an exponent after '^'");
            unsigned long e = std::stoul(std::string(text_.substr(es, pos_ - es)));
            Monomial r(vars_.size());
            for (unsigned long k = 0; k < e; ++k) r = r * m;
            return r;
        }
        return m;
    }

    // "e1e2e3" -> e1*e2*e3 by longest-prefix matching against the table.
    Monomial split_identifier(const std::string& ident, std::size_t at) {
        if (auto i = vars_.find(ident)) return Monomial::variable(vars_.size(), *i);
        Monomial m(vars_.size());
        std::size_t p = 0;
        while (p < ident.size()) {
            std::size_t best = 0;
            std::size_t best_index = 0;
            for (std::size_t len = ident.size() - p; len > 0; --len) {
                if (auto i = vars_.find(std::string_view(ident).substr(p, len))) {
                    best = len;
                    best_index = *i;
                    break;
                }
            }
            if (best == 0) {
                pos_ = at;
                fail("unknown variable '" + ident + "'");
            }
            m = m * Monomial::variable(vars_.size(), best_index);
            p += best;
        }
        return m;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    std::string_view text_;
    const VarTable& vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(std::string_view text, VarTablePtr vars, std::shared_ptr<const TermOrder> order) {
    if (!vars) throw UsageError("Polynomial::parse: null variable table");
    detail::PolyParser parser(text, *vars);
    auto terms = parser.parse();
    return Polynomial(std::move(vars), std::move(terms), std::move(order));
}

}  // namespace digideal
