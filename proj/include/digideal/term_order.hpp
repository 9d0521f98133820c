#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "var_table.hpp"

namespace digideal {

enum class OrderKind { lex, grevlex, block };

/// Multiplicative total order on monomials with 1 as minimum.
///
/// `priority()[0]` is the largest variable. A block order compares the front-block
/// part by grevlex first and breaks ties with its base order, so it eliminates the
/// front-block variables and agrees with the base order on monomials free of them.
class TermOrder {
public:
    static TermOrder lex(std::vector<std::size_t> priority) {
        return TermOrder(OrderKind::lex, std::move(priority));
    }
    static TermOrder grevlex(std::vector<std::size_t> priority) {
        return TermOrder(OrderKind::grevlex, std::move(priority));
    }
    static TermOrder lex(std::size_t nvars) { return lex(identity(nvars)); }
    static TermOrder grevlex(std::size_t nvars) { return grevlex(identity(nvars)); }

    /// Priority given by variable names, largest first; must name every variable exactly once.
    static TermOrder lex(const VarTable& vars, const std::vector<std::string>& names) {
        return lex(priority_from_names(vars, names));
    }
    static TermOrder grevlex(const VarTable& vars, const std::vector<std::string>& names) {
        return grevlex(priority_from_names(vars, names));
    }

    /// Elimination order for `front` on top of `base`.
    static TermOrder elimination(const std::vector<std::size_t>& front, const TermOrder& base) {
        const std::size_t n = base.nvars();
        std::vector<char> mask(n, 0);
        for (auto v : front) {
            if (v >= n) throw UsageError("TermOrder: front-block variable out of range");
            mask[v] = 1;
        }
        TermOrder t;
        t.kind_ = OrderKind::block;
        t.front_mask_ = mask;
        for (auto v : base.priority_)
            if (mask[v]) t.front_.push_back(v);
        t.priority_ = t.front_;
        for (auto v : base.priority_)
            if (!mask[v]) t.priority_.push_back(v);
        t.base_ = std::make_shared<const TermOrder>(base);
        t.build_rank();
        return t;
    }

    [[nodiscard]] OrderKind kind() const { return kind_; }
    [[nodiscard]] std::size_t nvars() const { return priority_.size(); }
    [[nodiscard]] const std::vector<std::size_t>& priority() const { return priority_; }
    /// Position of variable `v` in the priority list (0 = largest).
    [[nodiscard]] std::size_t rank(std::size_t v) const { return rank_.at(v); }
    [[nodiscard]] const std::vector<std::size_t>& front_block() const { return front_; }
    [[nodiscard]] const TermOrder* base() const { return base_.get(); }

    [[nodiscard]] std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (a.nvars() != nvars() || b.nvars() != nvars())
            throw UsageError("TermOrder: monomial variable count does not match the order");
        return compare_unchecked(a, b);
    }

    [[nodiscard]] std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case OrderKind::lex:
                for (auto v : priority_)
                    if (a[v] != b[v]) return a[v] < b[v] ? std::strong_ordering::less : std::strong_ordering::greater;
                return std::strong_ordering::equal;
            case OrderKind::grevlex:
                if (a.degree() != b.degree()) return a.degree() <=> b.degree();
                for (auto it = priority_.rbegin(); it != priority_.rend(); ++it)
                    if (a[*it] != b[*it]) return a[*it] < b[*it] ? std::strong_ordering::greater : std::strong_ordering::less;
                return std::strong_ordering::equal;
            case OrderKind::block: {
                std::uint64_t da = 0, db = 0;
                for (auto v : front_) { da += a[v]; db += b[v]; }
                if (da != db) return da <=> db;
                for (auto it = front_.rbegin(); it != front_.rend(); ++it)
                    if (a[*it] != b[*it]) return a[*it] < b[*it] ? std::strong_ordering::greater : std::strong_ordering::less;
                return base_->compare_unchecked(a, b);
            }
        }
        return std::strong_ordering::equal;
    }

    /// True if the monomial involves a front-block variable.
    [[nodiscard]] bool touches_front(const Monomial& m) const {
        for (auto v : front_)
            if (m[v] != 0) return true;
        return false;
    }

    friend bool operator==(const TermOrder& a, const TermOrder& b) {
        if (a.kind_ != b.kind_ || a.priority_ != b.priority_ || a.front_ != b.front_) return false;
        if (a.kind_ != OrderKind::block) return true;
        return *a.base_ == *b.base_;
    }

    [[nodiscard]] std::string describe(const VarTable* vars = nullptr) const {
        std::string s = kind_ == OrderKind::lex ? "lex" : kind_ == OrderKind::grevlex ? "grevlex" : "block";
        s += "(";
        for (std::size_t r = 0; r < priority_.size(); ++r) {
            if (r) s += r == front_.size() && kind_ == OrderKind::block ? " | " : " > ";
            s += vars ? vars->name(priority_[r]) : std::to_string(priority_[r]);
        }
        return s + ")";
    }

private:
    TermOrder() = default;
    TermOrder(OrderKind kind, std::vector<std::size_t> priority) : kind_(kind), priority_(std::move(priority)) {
        build_rank();
    }

    static std::vector<std::size_t> identity(std::size_t n) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), std::size_t{0});
        return p;
    }

    static std::vector<std::size_t> priority_from_names(const VarTable& vars, const std::vector<std::string>& names) {
        if (names.size() != vars.size())
            throw UsageError("TermOrder: priority list must name each of the " + std::to_string(vars.size()) +
                             " variables exactly once");
        std::vector<std::size_t> p;
        p.reserve(names.size());
        for (const auto& n : names) p.push_back(vars.index(n));
        return p;
    }

    void build_rank() {
        rank_.assign(priority_.size(), priority_.size());
        for (std::size_t r = 0; r < priority_.size(); ++r) {
            auto v = priority_[r];
            if (v >= priority_.size() || rank_[v] != priority_.size())
                throw UsageError("TermOrder: priority is not a permutation of the variables");
            rank_[v] = r;
        }
    }

    OrderKind kind_ = OrderKind::grevlex;
    std::vector<std::size_t> priority_;
    std::vector<std::size_t> rank_;
    std::vector<std::size_t> front_;
    std::vector<char> front_mask_;
    std::shared_ptr<const TermOrder> base_;
};

}  // namespace digideal
