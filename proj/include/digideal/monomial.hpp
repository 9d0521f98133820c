#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace digideal {

/// Power product over a fixed number of variables.
///
/// Exponents are held densely (one slot per variable of the owning table); a zero slot
/// means the variable does not occur. The all-zero monomial is 1.
class Monomial {
public:
    using Exponent = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
        for (auto e : exps_) degree_ += e;
    }

    /// Sparse construction from (variable index, exponent) pairs.
    Monomial(std::size_t nvars, std::initializer_list<std::pair<std::size_t, Exponent>> sparse)
        : exps_(nvars, 0) {
        for (auto [v, e] : sparse) {
            if (v >= nvars) throw UsageError("Monomial: variable index out of range");
            exps_[v] += e;
            degree_ += e;
        }
    }

    static Monomial variable(std::size_t nvars, std::size_t var, Exponent e = 1) {
        Monomial m(nvars);
        m.exps_.at(var) = e;
        m.degree_ = e;
        return m;
    }

    [[nodiscard]] std::size_t nvars() const { return exps_.size(); }
    [[nodiscard]] Exponent operator[](std::size_t v) const { return exps_[v]; }
    [[nodiscard]] const std::vector<Exponent>& exponents() const { return exps_; }
    [[nodiscard]] std::uint64_t degree() const { return degree_; }
    [[nodiscard]] bool is_one() const { return degree_ == 0; }

    /// Indices of the variables that occur.
    [[nodiscard]] std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0) s.push_back(i);
        return s;
    }

    [[nodiscard]] bool divides(const Monomial& other) const {
        if (degree_ > other.degree_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    [[nodiscard]] bool coprime(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0 && other.exps_[i] != 0) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        check_compatible(a, b);
        Monomial r(a);
        for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
        r.degree_ += b.degree_;
        return r;
    }

    /// Exact quotient a / b; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        check_compatible(a, b);
        Monomial r(a);
        for (std::size_t i = 0; i < r.exps_.size(); ++i) {
            if (b.exps_[i] > r.exps_[i]) throw UsageError("Monomial: inexact division");
            r.exps_[i] -= b.exps_[i];
        }
        r.degree_ -= b.degree_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        check_compatible(a, b);
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < r.exps_.size(); ++i) {
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
            r.degree_ += r.exps_[i];
        }
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        check_compatible(a, b);
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < r.exps_.size(); ++i) {
            r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
            r.degree_ += r.exps_[i];
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }

    /// Arbitrary but fixed total order, for use as a map key only (not a term order).
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

    [[nodiscard]] std::size_t hash() const {
        std::size_t h = 1469598103934665603ULL;
        for (auto e : exps_) h = (h ^ e) * 1099511628211ULL;
        return h;
    }

private:
    static void check_compatible(const Monomial& a, const Monomial& b) {
        if (a.exps_.size() != b.exps_.size()) throw UsageError("Monomial: variable count mismatch");
    }

    std::vector<Exponent> exps_;
    std::uint64_t degree_ = 0;
};

}  // namespace digideal

template <>
struct std::hash<digideal::Monomial> {
    std::size_t operator()(const digideal::Monomial& m) const noexcept { return m.hash(); }
};
