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

#ifndef CUSP_ABELIAN_HPP
#define CUSP_ABELIAN_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "cusp/errors.hpp"
#include "cusp/integer.hpp"
#include "cusp/matrix.hpp"

namespace cusp {

/// Finite abelian group in invariant-factor form: Z/d1 x ... x Z/dk
/// with d1 | d2 | ... and every di >= 2.  Elements are coordinate
/// tuples, coordinate i reduced mod di.  The trivial group has an
/// empty factor list.
struct FinAbGroup {
    std::vector<i64> inv;

    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<i64> factors) : inv(std::move(factors)) {
        for (size_t i = 0; i < inv.size(); ++i) {
            if (inv[i] < 2) throw InternalError("invariant factor < 2");
            if (i + 1 < inv.size() && inv[i + 1] % inv[i] != 0)
                throw InternalError("invariant factors do not form a divisibility chain");
        }
    }

    int ngens() const { return static_cast<int>(inv.size()); }
    bool trivial() const { return inv.empty(); }

    i64 order() const {
        i64 o = 1;
        for (i64 d : inv) {
            if (o > (static_cast<i64>(1) << 62) / d) throw CapExceeded("group order exceeds 64 bits");
            o *= d;
        }
        return o;
    }

    std::vector<i64> zero() const { return std::vector<i64>(inv.size(), 0); }

    std::vector<i64> reduce(std::vector<i64> v) const {
        for (size_t i = 0; i < inv.size(); ++i) v[i] = mod_pos(v[i], inv[i]);
        return v;
    }

    std::vector<i64> neg(const std::vector<i64>& v) const {
        std::vector<i64> r(v.size());
        for (size_t i = 0; i < inv.size(); ++i) r[i] = v[i] == 0 ? 0 : inv[i] - v[i];
        return r;
    }

    std::vector<i64> add(const std::vector<i64>& a, const std::vector<i64>& b) const {
        std::vector<i64> r(a.size());
        for (size_t i = 0; i < inv.size(); ++i) r[i] = mod_pos(a[i] + b[i], inv[i]);
        return r;
    }

    i64 element_order(const std::vector<i64>& v) const {
        i64 o = 1;
        for (size_t i = 0; i < inv.size(); ++i) {
            i64 d = inv[i] / gcd_i64(v[i], inv[i]);
            o = o / gcd_i64(o, d) * d;
        }
        return o;
    }

    /// Visits every element in canonical order (coordinate 0 most
    /// significant, values ascending).  The callback may return false
    /// to stop early.
    void for_each(const std::function<bool(const std::vector<i64>&)>& fn) const {
        std::vector<i64> v(inv.size(), 0);
        for (;;) {
            if (!fn(v)) return;
            int i = static_cast<int>(inv.size()) - 1;
            while (i >= 0) {
                if (++v[i] < inv[i]) break;
                v[i] = 0;
                --i;
            }
            if (i < 0) return;
        }
    }

    bool operator==(const FinAbGroup& o) const { return inv == o.inv; }
};

/// Homomorphism between finite abelian groups, given on generators.
/// mat[i][j] is the i-th coordinate of the image of generator j,
/// reduced mod cod.inv[i].
struct AbHom {
    FinAbGroup dom, cod;
    std::vector<std::vector<i64>> mat;

    AbHom() = default;
    AbHom(FinAbGroup dom_, FinAbGroup cod_, std::vector<std::vector<i64>> m)
        : dom(std::move(dom_)), cod(std::move(cod_)), mat(std::move(m)) {
        const int r = cod.ngens(), c = dom.ngens();
        if (static_cast<int>(mat.size()) != r) throw InternalError("hom matrix has wrong row count");
        for (auto& row : mat)
            if (static_cast<int>(row.size()) != c) throw InternalError("hom matrix has wrong column count");
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) mat[i][j] = mod_pos(mat[i][j], cod.inv[i]);
        // well-defined: d_j * (generator j) must map to zero
        for (int j = 0; j < c; ++j)
            for (int i = 0; i < r; ++i)
                if (mul_mod(dom.inv[j] % cod.inv[i], mat[i][j], cod.inv[i]) != 0)
                    throw DoesNotDescend("hom is not well-defined on generator " + std::to_string(j));
    }

    static AbHom identity(const FinAbGroup& g) {
        std::vector<std::vector<i64>> m(g.ngens(), std::vector<i64>(g.ngens(), 0));
        for (int i = 0; i < g.ngens(); ++i) m[i][i] = 1 % g.inv[i];
        return AbHom(g, g, std::move(m));
    }

    std::vector<i64> apply(const std::vector<i64>& v) const {
        std::vector<i64> r(cod.ngens(), 0);
        for (int i = 0; i < cod.ngens(); ++i) {
            i64 acc = 0;
            for (int j = 0; j < dom.ngens(); ++j)
                acc = (acc + mul_mod(mat[i][j], v[j] % cod.inv[i], cod.inv[i])) % cod.inv[i];
            r[i] = acc;
        }
        return r;
    }

    /// this o other (apply other first).
    AbHom compose(const AbHom& other) const {
        if (!(other.cod == dom)) throw InternalError("hom composition domain mismatch");
        std::vector<std::vector<i64>> m(cod.ngens(), std::vector<i64>(other.dom.ngens(), 0));
        for (int i = 0; i < cod.ngens(); ++i)
            for (int j = 0; j < other.dom.ngens(); ++j) {
                i64 acc = 0;
                for (int k = 0; k < dom.ngens(); ++k)
                    acc = (acc + mul_mod(mat[i][k], other.mat[k][j] % cod.inv[i], cod.inv[i])) % cod.inv[i];
                m[i][j] = acc;
            }
        return AbHom(other.dom, cod, std::move(m));
    }

    bool is_identity() const {
        if (!(dom == cod)) return false;
        for (int i = 0; i < cod.ngens(); ++i)
            for (int j = 0; j < dom.ngens(); ++j)
                if (mat[i][j] != (i == j ? 1 % cod.inv[i] : 0)) return false;
        return true;
    }

    bool operator==(const AbHom& o) const { return dom == o.dom && cod == o.cod && mat == o.mat; }
    bool operator<(const AbHom& o) const { return mat < o.mat; }
};

/// Cokernel Z^n / (column span of M) together with the projection.
struct Cokernel {
    FinAbGroup group;
    IntMatrix m;          // the presenting matrix (n rows)
    IntMatrix u;          // SNF row transform
    IntMatrix u_inv;      // exact inverse of u
    std::vector<int> kept;     // diagonal positions with d != 1
    std::vector<i64> diag;     // all diagonal entries of the SNF

    std::vector<i64> project(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != u.cols()) throw InternalError("projection dimension mismatch");
        std::vector<Int> y = u.apply(x);
        std::vector<i64> r(kept.size());
        for (size_t i = 0; i < kept.size(); ++i) {
            Int rem = y[kept[i]] % Int(static_cast<long>(group.inv[i]));
            r[i] = mod_pos(to_i64(rem), group.inv[i]);
        }
        return r;
    }

    std::vector<i64> project_i64(const std::vector<i64>& x) const {
        std::vector<Int> xi(x.size());
        for (size_t i = 0; i < x.size(); ++i) xi[i] = static_cast<long>(x[i]);
        return project(xi);
    }
};

/// Cokernel of an n x m integer matrix of full row rank.  For square
/// input this is Z^n / M Z^n with |coker| = |det M|; a rank-deficient
/// matrix presents an infinite quotient and raises SingularMatrix.
inline Cokernel cokernel(const IntMatrix& m) {
    SmithNormalForm snf = smith_normal_form(m);
    const int n = m.rows();
    Cokernel ck;
    ck.m = m;
    ck.u = snf.u;
    ck.u_inv = unimodular_inverse(snf.u);
    std::vector<i64> factors;
    for (int i = 0; i < n; ++i) {
        if (i >= m.cols() || snf.d(i, i) == 0)
            throw SingularMatrix("matrix does not have full row rank; quotient is infinite");
        i64 d = to_i64(snf.d(i, i));
        ck.diag.push_back(d);
        if (d != 1) {
            factors.push_back(d);
            ck.kept.push_back(i);
        }
    }
    ck.group = FinAbGroup(std::move(factors));
    return ck;
}

/// Does the endomorphism A of Z^n preserve the column span of M?
/// Exact adjugate test: M^{-1} A M integral iff adj(M) A M == 0 mod det(M).
inline bool preserves_column_span(const IntMatrix& a, const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InternalError("adjugate span test needs square M");
    Int dm = det(m);
    if (dm == 0) throw SingularMatrix("span test with singular matrix");
    IntMatrix t = adjugate(m) * a * m;
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j)
            if (!divides(dm, t(i, j))) return false;
    return true;
}

/// Descends a lattice endomorphism A to the cokernel.  Throws
/// DoesNotDescend when A does not preserve the presented sublattice.
inline AbHom induce_endomorphism(const IntMatrix& a, const Cokernel& ck) {
    const int n = ck.u.rows();
    if (a.rows() != n || a.cols() != n) throw InternalError("endomorphism dimension mismatch");
    if (ck.m.rows() == ck.m.cols()) {
        if (!preserves_column_span(a, ck.m))
            throw DoesNotDescend("endomorphism does not preserve the presented lattice");
    }
    IntMatrix b = ck.u * a * ck.u_inv;
    // In SNF coordinates the lattice is spanned by diag(d_i); descent
    // requires d_j * b[i][j] == 0 mod d_i for every i, j.
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (!divides(Int(static_cast<long>(ck.diag[i])), Int(static_cast<long>(ck.diag[j])) * b(i, j)))
                throw DoesNotDescend("endomorphism does not preserve the presented lattice (SNF test)");
    std::vector<std::vector<i64>> mat(ck.kept.size(), std::vector<i64>(ck.kept.size(), 0));
    for (size_t i = 0; i < ck.kept.size(); ++i)
        for (size_t j = 0; j < ck.kept.size(); ++j) {
            Int e = b(ck.kept[i], ck.kept[j]) % Int(static_cast<long>(ck.group.inv[i]));
            mat[i][j] = mod_pos(to_i64(e), ck.group.inv[i]);
        }
    return AbHom(ck.group, ck.group, std::move(mat));
}

}  // namespace cusp

#endif
