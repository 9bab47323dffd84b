/*
 * matrix.hpp
 * ----------
 * Dense rational vectors and matrices, rational Gaussian elimination,
 * rank / solve / inverse, and dual-basis extraction for bilinear forms.
 *
 * Pivoting is deterministic (leftmost column, smallest row index) so that
 * solutions and reports are byte-stable across platforms.
 */
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "loday/errors.hpp"
#include "loday/rational.hpp"

namespace loday {

using Vec = std::vector<Scalar>;

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ContractViolation("vector size mismatch in +");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ContractViolation("vector size mismatch in -");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(const Scalar& c, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline Vec unit_vector(int dim, int index) {
    Vec v(static_cast<size_t>(dim), Scalar(0));
    v[static_cast<size_t>(index)] = 1;
    return v;
}

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Scalar(0)) {
        if (rows < 0 || cols < 0) throw ContractViolation("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o, "+");
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o, "-");
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw ContractViolation("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Scalar& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Scalar& okj = o.at(k, j);
                    if (!okj.is_zero()) r.at(i, j) += aik * okj;
                }
            }
        return r;
    }

    friend Matrix operator*(const Scalar& c, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = c * m.a_[k];
        return r;
    }

    Vec apply(const Vec& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw ContractViolation("matrix apply: vector length mismatch");
        Vec r(static_cast<size_t>(rows_), Scalar(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[static_cast<size_t>(j)].is_zero())
                    r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
        return r;
    }

private:
    void require_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ContractViolation(std::string("matrix shape mismatch in ") + op);
    }

    int rows_, cols_;
    std::vector<Scalar> a_;
};

/// Sparse matrix used by the identity sweeps; structure-constant data is
/// mostly zeros, so the checkers compose these instead of dense grids.
class SparseMat {
public:
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {}

    static SparseMat from(const Matrix& m) {
        SparseMat s(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!m.at(i, j).is_zero()) s.a_[{i, j}] = m.at(i, j);
        return s;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add_at(int i, int j, const Scalar& v) {
        if (v.is_zero()) return;
        auto it = a_.find({i, j});
        if (it == a_.end()) {
            a_.emplace(std::make_pair(i, j), v);
        } else {
            it->second += v;
            if (it->second.is_zero()) a_.erase(it);
        }
    }

    /// this += c * o
    void accumulate(const SparseMat& o, const Scalar& c) {
        if (c.is_zero()) return;
        for (const auto& [ij, v] : o.a_) add_at(ij.first, ij.second, c * v);
    }

    SparseMat times(const SparseMat& o) const {
        SparseMat r(rows_, o.cols_);
        std::vector<std::vector<std::pair<int, Scalar>>> rows_of_o(
            static_cast<size_t>(o.rows_));
        for (const auto& [ij, v] : o.a_)
            rows_of_o[static_cast<size_t>(ij.first)].push_back({ij.second, v});
        for (const auto& [ij, v] : a_)
            for (const auto& [j, w] : rows_of_o[static_cast<size_t>(ij.second)])
                r.add_at(ij.first, j, v * w);
        return r;
    }

    SparseMat transposed() const {
        SparseMat r(cols_, rows_);
        for (const auto& [ij, v] : a_) r.a_[{ij.second, ij.first}] = v;
        return r;
    }

    bool zero() const { return a_.empty(); }

    Matrix dense() const {
        Matrix m(rows_, cols_);
        for (const auto& [ij, v] : a_) m.at(ij.first, ij.second) = v;
        return m;
    }

private:
    int rows_, cols_;
    std::map<std::pair<int, int>, Scalar> a_;
};

/// Kronecker product in row-major block order: (A (x) B)[(i,p),(j,q)] = A[i][j] B[p][q].
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    if (!b.at(p, q).is_zero())
                        r.at(i * b.rows() + p, j * b.cols() + q) = aij * b.at(p, q);
        }
    return r;
}

namespace detail {

// Row echelon by rational elimination; pivot = leftmost column, smallest row.
// Returns pivot (row, col) pairs. Mutates m (and rhs columns if attached).
inline std::vector<std::pair<int, int>> row_echelon(Matrix& m) {
    std::vector<std::pair<int, int>> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot_row = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) { pivot_row = i; break; }
        if (pivot_row < 0) continue;
        if (pivot_row != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(pivot_row, j));
        const Scalar inv = Scalar(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            const Scalar f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

/// Rank over the rationals.
inline int rank(const Matrix& m) {
    Matrix work = m;
    return static_cast<int>(detail::row_echelon(work).size());
}

/// One exact solution of m x = rhs, or nullopt when inconsistent.
/// Free variables are set to zero (deterministic pivot order).
inline std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows())
        throw ContractViolation("solve: rhs length must equal row count");
    Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[static_cast<size_t>(i)];
    }
    // Eliminate on the coefficient columns only.
    std::vector<std::pair<int, int>> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot_row = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!aug.at(i, col).is_zero()) { pivot_row = i; break; }
        if (pivot_row < 0) continue;
        if (pivot_row != row)
            for (int j = 0; j <= m.cols(); ++j) std::swap(aug.at(row, j), aug.at(pivot_row, j));
        const Scalar inv = Scalar(1) / aug.at(row, col);
        for (int j = col; j <= m.cols(); ++j) aug.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || aug.at(i, col).is_zero()) continue;
            const Scalar f = aug.at(i, col);
            for (int j = col; j <= m.cols(); ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    for (int i = row; i < m.rows(); ++i)
        if (!aug.at(i, m.cols()).is_zero()) return std::nullopt;
    Vec x(static_cast<size_t>(m.cols()), Scalar(0));
    for (const auto& [r, c] : pivots) x[static_cast<size_t>(c)] = aug.at(r, m.cols());
    return x;
}

/// Exact inverse; nullopt for singular input.
inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ContractViolation("inverse: matrix must be square");
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = detail::row_echelon(aug);
    if (static_cast<int>(pivots.size()) < n) return std::nullopt;
    // All pivots lie in the left block iff the left block has full rank.
    for (const auto& [r, c] : pivots)
        if (c >= n) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

/// Dual basis of a nondegenerate bilinear form given by its Gram matrix
/// G[i][j] = B(e_i, e_j): returns f_1..f_n (coordinates in the e basis) with
/// B(f_j, e_i) = delta_ij. Throws DegenerateForm naming the kernel dimension.
inline std::vector<Vec> dual_basis(const Matrix& form) {
    if (form.rows() != form.cols()) throw ContractViolation("dual_basis: form must be square");
    const int n = form.rows();
    const Matrix gt = form.transpose();
    auto inv = inverse(gt);
    if (!inv) throw DegenerateForm(n - rank(form));
    std::vector<Vec> duals;
    duals.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        Vec f(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) f[static_cast<size_t>(i)] = inv->at(i, j);
        duals.push_back(std::move(f));
    }
    return duals;
}

}  // namespace loday
