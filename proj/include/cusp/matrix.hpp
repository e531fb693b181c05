/*
   Copyright 2026 The cusp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CUSP_MATRIX_HPP
#define CUSP_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "cusp/errors.hpp"
#include "cusp/integer.hpp"

namespace cusp {

/// Dense exact-integer matrix, row-major.
class IntMatrix {
   public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        a_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw InternalError("ragged initializer");
            for (long x : r) a_.emplace_back(x);
        }
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw InternalError("dimension mismatch in matrix product");
        IntMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("dimension mismatch in matrix sum");
        IntMatrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("dimension mismatch in matrix difference");
        IntMatrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    IntMatrix scaled(const Int& c) const {
        IntMatrix r = *this;
        for (auto& x : r.a_) x *= c;
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw InternalError("dimension mismatch in matrix apply");
        std::vector<Int> y(rows_, Int(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    Int trace() const {
        Int t = 0;
        for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

   private:
    int rows_, cols_;
    std::vector<Int> a_;
};

/// Determinant by fraction-free (Bareiss) elimination.
inline Int det(IntMatrix m) {
    if (m.rows() != m.cols()) throw InternalError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = div_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    Int d = m(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

/// Adjugate: adj(M) * M = det(M) * I.
inline IntMatrix adjugate(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InternalError("adjugate of non-square matrix");
    const int n = m.rows();
    IntMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc) = m(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = det(minor);
            if ((i + j) % 2) cof = -cof;
            adj(j, i) = cof;
        }
    return adj;
}

/// Inverse of a matrix with determinant +-1.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
    Int d = det(m);
    if (d != 1 && d != -1) throw InternalError("matrix is not unimodular");
    IntMatrix inv = adjugate(m);
    if (d == -1) inv = inv.scaled(Int(-1));
    return inv;
}

/// Characteristic polynomial det(x*I - M), ascending coefficients,
/// monic.  Faddeev-LeVerrier; all divisions are exact.
inline std::vector<Int> char_poly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InternalError("char poly of non-square matrix");
    const int n = m.rows();
    std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
    c[n] = 1;
    IntMatrix acc = IntMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        acc = m * acc;
        Int ck = div_exact(-acc.trace(), Int(k));
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) acc(i, i) += ck;
    }
    return c;
}

struct SmithNormalForm {
    IntMatrix u;  // rows x rows, det +-1
    IntMatrix d;  // same shape as input, diagonal with d1 | d2 | ...
    IntMatrix v;  // cols x cols, det +-1
};

/// Smith normal form: u*m*v = d with unimodular u, v, the diagonal
/// non-negative and each entry dividing the next.
inline SmithNormalForm smith_normal_form(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    auto row_sub = [&](int dst, int src, const Int& q) {
        for (int j = 0; j < cols; ++j) d(dst, j) -= q * d(src, j);
        for (int j = 0; j < rows; ++j) u(dst, j) -= q * u(src, j);
    };
    auto col_sub = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < rows; ++i) d(i, dst) -= q * d(i, src);
        for (int i = 0; i < cols; ++i) v(i, dst) -= q * v(i, src);
    };
    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) swap(d(a, j), d(b, j));
        for (int j = 0; j < rows; ++j) swap(u(a, j), u(b, j));
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) swap(d(i, a), d(i, b));
        for (int i = 0; i < cols; ++i) swap(v(i, a), v(i, b));
    };
    auto row_add = [&](int dst, int src) {
        for (int j = 0; j < cols; ++j) d(dst, j) += d(src, j);
        for (int j = 0; j < rows; ++j) u(dst, j) += u(src, j);
    };

    const int r = rows < cols ? rows : cols;
    for (int t = 0; t < r; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block as pivot
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    if (d(i, j) == 0) continue;
                    if (pi < 0 || cmp(abs(d(i, j)), abs(d(pi, pj))) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;  // trailing block is zero
            row_swap(t, pi);
            col_swap(t, pj);

            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Int q, rem;
                divmod_trunc(d(i, t), d(t, t), q, rem);
                if (q != 0) row_sub(i, t, q);
                if (rem != 0) clean = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Int q, rem;
                divmod_trunc(d(t, j), d(t, t), q, rem);
                if (q != 0) col_sub(j, t, q);
                if (rem != 0) clean = false;
            }
            if (!clean) continue;  // a smaller pivot appeared

            // pivot must divide the rest of the block
            bool divides_all = true;
            for (int i = t + 1; i < rows && divides_all; ++i)
                for (int j = t + 1; j < cols && divides_all; ++j)
                    if (!divides(d(t, t), d(i, j))) {
                        row_add(t, i);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (t < rows && t < cols && d(t, t) < 0) {
            for (int j = 0; j < cols; ++j) d(t, j) = -d(t, j);
            for (int j = 0; j < rows; ++j) u(t, j) = -u(t, j);
        }
    }
    return {u, d, v};
}

/// Small integer matrix for Weyl-group elements acting on the
/// character lattice.  Entries stay tiny; products are checked.
struct Mat {
    int n = 0;
    std::vector<i64> a;

    Mat() = default;
    explicit Mat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    i64& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    i64 at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool operator<(const Mat& o) const { return a < o.a; }

    Mat operator*(const Mat& o) const {
        Mat r(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                i64 x = at(i, k);
                if (!x) continue;
                for (int j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    bool is_identity() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    IntMatrix to_int_matrix() const {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = static_cast<long>(at(i, j));
        return m;
    }
};

/// Multiplicative order; throws if it exceeds the cap.
inline int matrix_order(const Mat& m, int cap = 10000) {
    Mat x = m;
    for (int k = 1; k <= cap; ++k) {
        if (x.is_identity()) return k;
        x = x * m;
    }
    throw InternalError("matrix order exceeds cap");
}

struct MatHash {
    size_t operator()(const Mat& m) const noexcept {
        size_t h = 1469598103934665603ull;
        for (i64 x : m.a) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace cusp

#endif
