#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "polynomial.hpp"

namespace digideal {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw UsageError("IntMatrix: ragged rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    [[nodiscard]] std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// M·v for an integer column vector of length cols().
    [[nodiscard]] std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const {
        if (v.size() != cols_) throw UsageError("IntMatrix::apply: length mismatch");
        std::vector<std::int64_t> out(rows_, 0);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Basis of an integer lattice; one vector per row.
struct LatticeBasis {
    std::vector<std::vector<std::int64_t>> vectors;

    [[nodiscard]] std::size_t size() const { return vectors.size(); }
    [[nodiscard]] bool empty() const { return vectors.empty(); }
};

namespace detail {

using BigRow = std::vector<mpz_class>;

/// Unimodular row operations bringing columns [0, limit) to echelon form.
/// Returns the number of pivot rows.
inline std::size_t integer_echelon(std::vector<BigRow>& rows, std::size_t limit) {
    std::size_t prow = 0;
    for (std::size_t c = 0; c < limit && prow < rows.size(); ++c) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = prow; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
            }
            if (best == rows.size()) break;
            std::swap(rows[prow], rows[best]);
            bool others = false;
            for (std::size_t r = prow + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[prow][c].get_mpz_t());
                for (std::size_t k = c; k < rows[r].size(); ++k) rows[r][k] -= q * rows[prow][k];
                if (rows[r][c] != 0) others = true;
            }
            if (!others) {
                ++prow;
                break;
            }
        }
    }
    return prow;
}

/// Row Hermite normal form: positive pivots, entries above each pivot in [0, pivot).
inline void hermite_normal_form(std::vector<BigRow>& rows) {
    if (rows.empty()) return;
    const std::size_t width = rows.front().size();
    std::size_t rank = integer_echelon(rows, width);
    rows.resize(rank);
    std::size_t c = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        while (rows[r][c] == 0) ++c;
        if (rows[r][c] < 0)
            for (auto& x : rows[r]) x = -x;
        for (std::size_t above = 0; above < r; ++above) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows[above][c].get_mpz_t(), rows[r][c].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t k = c; k < width; ++k) rows[above][k] -= q * rows[r][k];
        }
    }
}

inline std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw UsageError("integer entry exceeds 64-bit range");
    return static_cast<std::int64_t>(z.get_si());
}

}  // namespace detail

/// Basis of {v ∈ Z^cols : M·v = 0}, returned in Hermite normal form.
inline LatticeBasis integer_kernel_basis(const IntMatrix& M) {
    const std::size_t n = M.cols();
    const std::size_t m = M.rows();
    std::vector<detail::BigRow> rows(n, detail::BigRow(m + n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) rows[j][i] = static_cast<long>(M(i, j));
        rows[j][m + j] = 1;
    }
    std::size_t rank = detail::integer_echelon(rows, m);
    std::vector<detail::BigRow> kernel;
    for (std::size_t r = rank; r < n; ++r) kernel.emplace_back(rows[r].begin() + static_cast<std::ptrdiff_t>(m), rows[r].end());
    detail::hermite_normal_form(kernel);
    LatticeBasis basis;
    for (const auto& row : kernel) {
        std::vector<std::int64_t> v;
        v.reserve(n);
        for (const auto& x : row) v.push_back(detail::to_int64(x));
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

/// x^{u+} − x^{u−} for an integer vector u.
inline Polynomial binomial_of(const std::vector<std::int64_t>& u, const VarTablePtr& vars,
                              const std::shared_ptr<const TermOrder>& ord = nullptr) {
    if (u.size() != vars->size()) throw UsageError("binomial_of: vector length does not match table");
    std::vector<Monomial::Exponent> pos(u.size(), 0), neg(u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > 0) pos[i] = static_cast<Monomial::Exponent>(u[i]);
        if (u[i] < 0) neg[i] = static_cast<Monomial::Exponent>(-u[i]);
    }
    return Polynomial(vars, {Term{Scalar(1), Monomial(std::move(pos))}, Term{Scalar(-1), Monomial(std::move(neg))}}, ord);
}

/// Ideal generated by e^{u+} − e^{u−} for u in the lattice basis.
inline IdealBasis lattice_ideal(const LatticeBasis& F, const VarTablePtr& vars, const TermOrder& order) {
    auto ordp = std::make_shared<const TermOrder>(order);
    std::vector<Polynomial> gens;
    for (const auto& u : F.vectors) gens.push_back(binomial_of(u, vars, ordp).monic());
    return IdealBasis(vars, order, gens);
}

inline IdealBasis lattice_ideal(const LatticeBasis& F, const VarTablePtr& vars) {
    return lattice_ideal(F, vars, TermOrder::grevlex(vars->size()));
}

/// Toric ideal of M (columns index the variables of `vars`) as the elimination ideal of
/// (X_j − Π t_i^{m_ij}, t_i z_i − 1) with z_i standing for t_i^{-1}.
inline IdealBasis toric_by_elimination(const IntMatrix& M, const VarTablePtr& vars, const TermOrder& order) {
    if (M.cols() != vars->size()) throw UsageError("toric_by_elimination: matrix columns must match the variables");
    if (order.nvars() != vars->size()) throw UsageError("toric_by_elimination: order does not match variables");
    const std::size_t n = vars->size();
    auto names = vars->names();
    std::vector<std::size_t> t_index(M.rows(), SIZE_MAX), z_index(M.rows(), SIZE_MAX);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        bool nonzero = false, negative = false;
        for (std::size_t j = 0; j < n; ++j) {
            nonzero |= M(i, j) != 0;
            negative |= M(i, j) < 0;
        }
        if (!nonzero) continue;
        auto add_name = [&](const std::string& stem) {
            std::string name = VarTable(names).fresh_name(stem);
            names.push_back(name);
            return names.size() - 1;
        };
        t_index[i] = add_name("_t" + std::to_string(i + 1));
        if (negative) z_index[i] = add_name("_z" + std::to_string(i + 1));
    }
    auto big = VarTable::make(names);
    const std::size_t N = names.size();
    std::vector<std::size_t> aux;
    for (std::size_t v = n; v < N; ++v) aux.push_back(v);

    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Monomial::Exponent> e(N, 0);
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (M(i, j) > 0) e[t_index[i]] = static_cast<Monomial::Exponent>(M(i, j));
            if (M(i, j) < 0) e[z_index[i]] = static_cast<Monomial::Exponent>(-M(i, j));
        }
        gens.emplace_back(big, std::vector<Term>{Term{Scalar(1), Monomial::variable(N, j)},
                                                 Term{Scalar(-1), Monomial(std::move(e))}});
    }
    for (std::size_t i = 0; i < M.rows(); ++i) {
        if (z_index[i] == SIZE_MAX) continue;
        gens.emplace_back(big, std::vector<Term>{Term{Scalar(1), Monomial(N, {{t_index[i], 1}, {z_index[i], 1}})},
                                                 Term{Scalar(-1), Monomial(N)}});
    }
    IdealBasis big_ideal(big, detail::extend_order(order, N), gens);
    auto elim = eliminate(big_ideal, aux);
    auto ordp = std::make_shared<const TermOrder>(order);
    std::vector<Polynomial> back;
    for (const auto& g : elim.generators()) back.push_back(g.transfer(vars, ordp));
    return IdealBasis(vars, order, back, BasisStatus::reduced);
}

/// Toric ideal of M as the saturation chain J_0 = lattice ideal of Ker(M),
/// J_i = J_{i-1} : x_i^∞ over the variables in ascending index order.
inline IdealBasis toric_by_saturation(const IntMatrix& M, const VarTablePtr& vars, const TermOrder& order) {
    if (M.cols() != vars->size()) throw UsageError("toric_by_saturation: matrix columns must match the variables");
    if (order.nvars() != vars->size()) throw UsageError("toric_by_saturation: order does not match variables");
    IdealBasis J = groebner_basis(lattice_ideal(integer_kernel_basis(M), vars, order));
    for (std::size_t i = 0; i < vars->size(); ++i) {
        if (J.empty()) break;
        J = saturate(J, Polynomial::monomial(vars, Monomial::variable(vars->size(), i)));
    }
    return J;
}

}  // namespace digideal
