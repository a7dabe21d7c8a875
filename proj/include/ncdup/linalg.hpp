#pragma once

#include "ncdup/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ncdup {

using Vec = std::vector<Rational>;

inline Vec zero_vec(std::size_t n) { return Vec(n); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = 1;
    return v;
}

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

inline Vec operator+(Vec a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec operator-(Vec a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vec operator*(const Rational& c, Vec v) {
    for (auto& x : v) x *= c;
    return v;
}

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec column(std::size_t j) const {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_column(std::size_t j, const Vec& v) {
        if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
        Vec out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
            }
        return c;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

namespace detail {

inline mpz_class lcm_of_denominators(const Matrix& m, std::size_t row) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rational& x = m(row, j);
        if (x.is_zero() || x.is_integer()) continue;
        mpz_class d = x.to_mpq().get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

} // namespace detail

/// Exact rank by Bareiss fraction-free elimination. Rows are first scaled to
/// integers, so every intermediate entry stays integral.
inline std::size_t rank(const Matrix& input) {
    Matrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = detail::lcm_of_denominators(m, i);
        if (l == 1) continue;
        Rational scale{mpq_class(l)};
        for (std::size_t j = 0; j < cols; ++j) m(i, j) *= scale;
    }
    Rational prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        const Rational p = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Rational lead = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Rational v = p * m(i, j) - lead * m(r, j);
                m(i, j) = v.is_zero() ? v : v / prev;
            }
            m(i, c) = 0;
        }
        prev = p;
        ++r;
    }
    return r;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        Rational inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of {x : m x = 0}.
inline std::vector<Vec> nullspace(const Matrix& input) {
    Matrix m = input;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rank of the span of a family of vectors of equal length.
inline std::size_t span_rank(const std::vector<Vec>& vectors, std::size_t length) {
    if (vectors.empty()) return 0;
    return rank(Matrix::from_columns(vectors, length));
}

/// Solves m x = b; returns false when inconsistent.
inline bool solve(const Matrix& m, const Vec& b, Vec& x) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return false;
    x.assign(m.cols(), Rational());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return true;
}

inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// ---------------------------------------------------------------------------
// Sparse matrices (column-compressed) for the large but very sparse complexes.

struct SparseEntry {
    std::uint32_t row;
    Rational value;
};

using SparseColumn = std::vector<SparseEntry>; // sorted by row, no zeros

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nonzeros() const { return nnz_; }

    const SparseColumn& column(std::size_t j) const { return columns_[j]; }

    /// Takes unsorted (row, value) pairs with possible repeats; sums and drops zeros.
    void set_column(std::size_t j, std::vector<std::pair<std::uint32_t, Rational>> terms) {
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseColumn col;
        for (auto& [r, v] : terms) {
            if (r >= rows_) throw std::out_of_range("sparse row index out of range");
            if (!col.empty() && col.back().row == r)
                col.back().value += v;
            else
                col.push_back({r, std::move(v)});
        }
        col.erase(std::remove_if(col.begin(), col.end(), [](const SparseEntry& e) { return e.value.is_zero(); }),
                  col.end());
        nnz_ -= columns_[j].size();
        nnz_ += col.size();
        columns_[j] = std::move(col);
    }

    Matrix to_dense() const {
        Matrix m(rows_, cols());
        for (std::size_t j = 0; j < cols(); ++j)
            for (const auto& e : columns_[j]) m(e.row, j) = e.value;
        return m;
    }

    /// this * other, both sparse.
    SparseMatrix multiply(const SparseMatrix& right) const {
        if (cols() != right.rows()) throw std::invalid_argument("sparse product shape mismatch");
        SparseMatrix out(rows_, right.cols());
        for (std::size_t j = 0; j < right.cols(); ++j) {
            std::vector<std::pair<std::uint32_t, Rational>> acc;
            for (const auto& e : right.column(j))
                for (const auto& f : columns_[e.row]) acc.emplace_back(f.row, f.value * e.value);
            out.set_column(j, std::move(acc));
        }
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::vector<SparseColumn> columns_;
    std::size_t nnz_ = 0;
};

namespace detail {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> parent;
};

// v -= factor * w, both sorted sparse columns.
inline SparseColumn axpy(const SparseColumn& v, const Rational& factor, const SparseColumn& w) {
    SparseColumn out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].row < w[j].row)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || w[j].row < v[i].row) {
            out.push_back({w[j].row, -(factor * w[j].value)});
            ++j;
        } else {
            Rational x = v[i].value - factor * w[j].value;
            if (!x.is_zero()) out.push_back({v[i].row, std::move(x)});
            ++i;
            ++j;
        }
    }
    return out;
}

// Incremental column reduction on one connected block. Each stored column is
// normalised so that its pivot (largest row index) equals 1.
inline std::size_t reduce_block(std::vector<SparseColumn> cols) {
    std::sort(cols.begin(), cols.end(), [](const SparseColumn& a, const SparseColumn& b) { return a.size() < b.size(); });
    std::unordered_map<std::uint32_t, SparseColumn> pivots;
    pivots.reserve(cols.size());
    for (auto& col : cols) {
        SparseColumn v = std::move(col);
        while (!v.empty()) {
            auto it = pivots.find(v.back().row);
            if (it == pivots.end()) break;
            Rational factor = v.back().value;
            v = axpy(v, factor, it->second);
        }
        if (v.empty()) continue;
        Rational inv = v.back().value.inverse();
        if (!inv.is_one())
            for (auto& e : v) e.value *= inv;
        std::uint32_t key = v.back().row;
        pivots.emplace(key, std::move(v));
    }
    return pivots.size();
}

} // namespace detail

/// Exact rank of a sparse rational matrix. The bipartite row/column incidence
/// graph is split into connected blocks first; rank is additive over blocks.
inline std::size_t rank(const SparseMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    detail::DisjointSets sets(R + C);
    for (std::size_t j = 0; j < C; ++j)
        for (const auto& e : m.column(j)) sets.unite(R + j, e.row);
    std::unordered_map<std::size_t, std::vector<SparseColumn>> blocks;
    for (std::size_t j = 0; j < C; ++j) {
        if (m.column(j).empty()) continue;
        blocks[sets.find(R + j)].push_back(m.column(j));
    }
    std::size_t total = 0;
    for (auto& [root, cols] : blocks) {
        if (cols.size() == 1) {
            ++total;
            continue;
        }
        total += detail::reduce_block(std::move(cols));
    }
    return total;
}

} // namespace ncdup
