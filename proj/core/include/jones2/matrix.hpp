#pragma once

#include <stdexcept>
#include <vector>

#include "jones2/laurent.hpp"
#include "jones2/numeric.hpp"

namespace jones2 {

/// Dense matrix over an exact commutative ring (Int, Rational, LaurentPoly).
/// Values are immutable in spirit: every operation returns a fresh matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}
    Matrix(int rows, int cols, std::vector<T> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != static_cast<std::size_t>(rows) * cols)
            throw std::invalid_argument("matrix entry count mismatch");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<T>& entries() const { return e_; }

    bool operator==(const Matrix&) const = default;

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    Matrix scaled(const T& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix pow(unsigned long n) const {
        if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
        Matrix acc = identity(rows_), base = *this;
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    bool is_zero() const {
        for (const T& x : e_)
            if (!(x == T(0))) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        return *this == identity(rows_);
    }

    template <typename U, typename Fn>
    Matrix<U> map(Fn&& fn) const {
        std::vector<U> out;
        out.reserve(e_.size());
        for (const T& x : e_) out.push_back(fn(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    T trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
        T s(0);
        for (int i = 0; i < rows_; ++i) s += at(i, i);
        return s;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<T> e_;
};

/// Cofactor-expansion determinant; fine for the 4x4/5x5 matrices used here.
template <typename T>
T determinant(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m.at(0, 0);
    T det(0);
    for (int i = 0; i < n; ++i) {
        if (m.at(i, 0) == T(0)) continue;
        Matrix<T> minor(n - 1, n - 1);
        for (int r = 0, rr = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 1; c < n; ++c) minor.at(rr, c - 1) = m.at(r, c);
            ++rr;
        }
        T term = m.at(i, 0) * determinant(minor);
        if (i % 2) det -= term;
        else det += term;
    }
    return det;
}

template <typename T>
Matrix<T> adjugate(const Matrix<T>& m) {
    int n = m.rows();
    Matrix<T> adj(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix<T> minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = m.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            T cof = determinant(minor);
            adj.at(j, i) = ((i + j) % 2) ? -cof : cof;
        }
    return adj;
}

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Int>;
using LaurentMatrix = Matrix<LaurentPoly>;

/// Gauss–Jordan reduction in place. Returns the rank; pivot columns are
/// appended to *pivots when given.
int rref_in_place(RationalMatrix& m, std::vector<int>* pivots = nullptr);
int rank(const RationalMatrix& m);

/// Exact inverse; throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Basis of the right nullspace { v : m v = 0 }, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Inverse of a Laurent matrix whose determinant is a unit +-t^k
/// (adjugate divided by the unit). Throws std::domain_error otherwise.
LaurentMatrix inverse_unit_det(const LaurentMatrix& m);

IntMatrix to_int_matrix(const RationalMatrix& m);  // throws if any entry is non-integral
RationalMatrix to_rational_matrix(const IntMatrix& m);

}  // namespace jones2
