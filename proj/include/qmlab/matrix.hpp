#pragma once

#include "qmlab/rational.hpp"

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qm {

// Dense row-major matrix. Ring operations work for any K; the elimination
// routines need a field.
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(int r, int c) : r_(r), c_(c), a_(size_t(r) * c, K(0)) {}
    Matrix(std::initializer_list<std::initializer_list<K>> rows)
    {
        r_ = int(rows.size());
        c_ = r_ ? int(rows.begin()->size()) : 0;
        for (auto& row : rows) {
            if (int(row.size()) != c_) throw std::invalid_argument("Matrix: ragged rows");
            for (auto& v : row) a_.push_back(v);
        }
    }

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int k = 0; k < n; ++k) m(k, k) = K(1);
        return m;
    }
    static Matrix diag(const std::vector<K>& d)
    {
        Matrix m(int(d.size()), int(d.size()));
        for (size_t k = 0; k < d.size(); ++k) m(int(k), int(k)) = d[k];
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    K& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const K& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    template <class F>
    auto map(F f) const
    {
        using V = decltype(f((*this)(0, 0)));
        Matrix<V> m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    Matrix transpose() const
    {
        Matrix m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix block(int i0, int j0, int nr, int nc) const
    {
        Matrix m(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }

    Matrix operator-() const
    {
        Matrix m = *this;
        for (auto& v : m.a_) v = -v;
        return m;
    }
    Matrix& operator+=(const Matrix& o)
    {
        same_shape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        same_shape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const K& s)
    {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const K& s) { return a *= s; }
    friend Matrix operator*(const K& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.c_ != b.r_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const K& v = a(i, k);
                if (is_zero(v)) continue;
                for (int j = 0; j < b.c_; ++j) m(i, j) += v * b(k, j);
            }
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix pow(int e) const
    {
        Matrix r = identity(r_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    bool is_zero_matrix() const
    {
        for (auto& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

    // Reduced row echelon form; returns pivot columns.
    std::vector<int> rref_inplace()
    {
        std::vector<int> piv;
        int row = 0;
        for (int col = 0; col < c_ && row < r_; ++col) {
            int p = -1;
            for (int i = row; i < r_; ++i)
                if (!is_zero((*this)(i, col))) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != row)
                for (int j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
            K inv = inverse((*this)(row, col));
            for (int j = col; j < c_; ++j) (*this)(row, j) *= inv;
            for (int i = 0; i < r_; ++i) {
                if (i == row || is_zero((*this)(i, col))) continue;
                K f = (*this)(i, col);
                for (int j = col; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            piv.push_back(col);
            ++row;
        }
        return piv;
    }

    int rank() const
    {
        Matrix m = *this;
        return int(m.rref_inplace().size());
    }

    // Basis of the right kernel, one column vector per entry.
    std::vector<std::vector<K>> kernel() const
    {
        Matrix m = *this;
        auto piv = m.rref_inplace();
        std::vector<bool> is_piv(c_, false);
        for (int p : piv) is_piv[p] = true;
        std::vector<std::vector<K>> basis;
        for (int f = 0; f < c_; ++f) {
            if (is_piv[f]) continue;
            std::vector<K> v(c_, K(0));
            v[f] = K(1);
            for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(int(r), f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::optional<Matrix> try_inverse() const
    {
        if (r_ != c_) throw std::invalid_argument("Matrix: inverse of non-square matrix");
        Matrix aug(r_, 2 * c_);
        for (int i = 0; i < r_; ++i) {
            for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, c_ + i) = K(1);
        }
        auto piv = aug.rref_inplace();
        if (int(piv.size()) < r_ || piv.back() >= c_) return std::nullopt;
        return aug.block(0, c_, r_, c_);
    }

    Matrix inverse_matrix() const
    {
        auto m = try_inverse();
        if (!m) throw division_by_zero("singular matrix");
        return *m;
    }

    K det() const
    {
        if (r_ != c_) throw std::invalid_argument("Matrix: determinant of non-square matrix");
        Matrix m = *this;
        K d(1);
        for (int col = 0; col < c_; ++col) {
            int p = -1;
            for (int i = col; i < r_; ++i)
                if (!is_zero(m(i, col))) {
                    p = i;
                    break;
                }
            if (p < 0) return K(0);
            if (p != col) {
                for (int j = 0; j < c_; ++j) std::swap(m(p, j), m(col, j));
                d = -d;
            }
            d *= m(col, col);
            K inv = inverse(m(col, col));
            for (int i = col + 1; i < r_; ++i) {
                if (is_zero(m(i, col))) continue;
                K f = m(i, col) * inv;
                for (int j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return d;
    }

    std::vector<K> apply(const std::vector<K>& v) const
    {
        if (int(v.size()) != c_) throw std::invalid_argument("Matrix: vector length mismatch");
        std::vector<K> out(r_, K(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (!is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    void same_shape(const Matrix& o) const
    {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    int r_ = 0, c_ = 0;
    std::vector<K> a_;
};

// Scalar l with a == l*b, if one exists (projective equality).
template <class K>
std::optional<K> proportionality(const Matrix<K>& a, const Matrix<K>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    std::optional<K> l;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            bool za = is_zero(a(i, j)), zb = is_zero(b(i, j));
            if (za != zb) return std::nullopt;
            if (za) continue;
            if (!l) l = a(i, j) / b(i, j);
            else if (a(i, j) != *l * b(i, j)) return std::nullopt;
        }
    if (!l) return std::nullopt;
    return l;
}

} // namespace qm
