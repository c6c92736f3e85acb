// linalg.hpp
// ----------
// Dense exact linear algebra over Q(q): matrices of Scalars, rank, and null
// spaces.  Elimination is fraction-free (Bareiss) over integer-polynomial
// rows obtained by clearing each row's denominators, which keeps every
// intermediate entry a genuine polynomial division result instead of a
// rapidly swelling fraction.

#pragma once

#include <cstddef>
#include <vector>

#include <qosc/errors.hpp>
#include <qosc/rational.hpp>

namespace qosc {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw DimensionMismatch("matrix product " + shape() + " * " + o.shape());
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& x = at(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Scalar& y = o.at(k, j);
                    if (!y.is_zero()) r.at(i, j) += x * y;
                }
            }
        return r;
    }
    Matrix operator*(const Scalar& s) const {
        Matrix r(rows_, cols_);
        if (s.is_zero()) return r;
        r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }
    friend Matrix operator*(const Scalar& s, const Matrix& m) { return m * s; }
    Matrix operator-() const { return *this * Scalar(-1); }

    // v -> M v on coordinate vectors.
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (v.size() != cols_)
            throw DimensionMismatch("matrix apply " + shape() + " to vector of size " +
                                    std::to_string(v.size()));
        std::vector<Scalar> out(rows_, Scalar(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        return out;
    }

    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("matrix shapes " + shape() + " vs " + o.shape());
    }
    std::string shape() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

namespace detail {

// Clear denominators row by row; scaling a row by a nonzero polynomial
// changes neither rank nor kernel.
inline std::vector<std::vector<ZPoly>> cleared_rows(const Matrix& m) {
    std::vector<std::vector<ZPoly>> z(m.rows(), std::vector<ZPoly>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ZPoly common(1);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const ZPoly& den = m.at(i, j).den();
            common = exact_div(common * den, poly_gcd(common, den));
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& s = m.at(i, j);
            z[i][j] = s.num() * exact_div(common, s.den());
        }
    }
    return z;
}

struct Echelon {
    std::vector<std::vector<ZPoly>> rows;
    std::vector<std::size_t> pivot_cols; // one per eliminated row, ascending
};

// Fraction-free forward elimination (Bareiss).  After step k every entry is
// the determinant of a (k+1)x(k+1) minor of the original matrix, so the
// divisions below are exact.
inline Echelon eliminate(std::vector<std::vector<ZPoly>> z, std::size_t cols) {
    Echelon ech;
    ZPoly prev(1);
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < z.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < z.size() && z[pivot][col].is_zero()) ++pivot;
        if (pivot == z.size()) continue;
        std::swap(z[lead], z[pivot]);
        for (std::size_t i = lead + 1; i < z.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                z[i][j] = exact_div(z[lead][col] * z[i][j] - z[i][col] * z[lead][j], prev);
            z[i][col] = ZPoly();
        }
        prev = z[lead][col];
        ech.pivot_cols.push_back(col);
        ++lead;
    }
    z.resize(ech.pivot_cols.size()); // keep only the pivot rows
    ech.rows = std::move(z);
    return ech;
}

} // namespace detail

inline std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return detail::eliminate(detail::cleared_rows(m), m.cols()).pivot_cols.size();
}

// Basis of { x : M x = 0 }, one vector per free column, produced in ascending
// free-column order.  Row index f of the returned vector for free column f is
// 1; callers impose their own normalization afterwards.
inline std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    const std::size_t n = m.cols();
    if (n == 0) return {};
    detail::Echelon ech =
        m.rows() == 0 ? detail::Echelon{} : detail::eliminate(detail::cleared_rows(m), n);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> x(n, Scalar(0));
        x[f] = Scalar(1);
        for (std::size_t i = ech.pivot_cols.size(); i-- > 0;) {
            std::size_t c = ech.pivot_cols[i];
            Scalar s(0);
            for (std::size_t j = c + 1; j < n; ++j)
                if (!x[j].is_zero() && !ech.rows[i][j].is_zero())
                    s += Scalar(ech.rows[i][j]) * x[j];
            x[c] = -s / Scalar(ech.rows[i][c]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// Rank of a list of row vectors (all the same length).
inline std::size_t rank_of_vectors(const std::vector<std::vector<Scalar>>& vs) {
    if (vs.empty()) return 0;
    Matrix m(vs.size(), vs[0].size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].size() != vs[0].size())
            throw DimensionMismatch("ragged vector list");
        for (std::size_t j = 0; j < vs[i].size(); ++j) m.at(i, j) = vs[i][j];
    }
    return rank(m);
}

inline bool in_span(const std::vector<std::vector<Scalar>>& basis,
                    const std::vector<Scalar>& v) {
    std::vector<std::vector<Scalar>> all = basis;
    all.push_back(v);
    return rank_of_vectors(all) == rank_of_vectors(basis);
}

} // namespace qosc
