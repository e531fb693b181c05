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

#ifndef CUSP_ROOTDATUM_HPP
#define CUSP_ROOTDATUM_HPP

#include <numeric>
#include <string>
#include <vector>

#include "cusp/abelian.hpp"
#include "cusp/errors.hpp"
#include "cusp/integer.hpp"
#include "cusp/matrix.hpp"

namespace cusp {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

enum class IsogenyKind { SimplyConnected, Adjoint, Sublattice };

struct Isogeny {
    IsogenyKind kind = IsogenyKind::SimplyConnected;
    IntMatrix basis;  // columns generate X in weight coordinates (Sublattice only)

    static Isogeny sc() { return {IsogenyKind::SimplyConnected, {}}; }
    static Isogeny adjoint() { return {IsogenyKind::Adjoint, {}}; }
    static Isogeny sublattice(IntMatrix b) { return {IsogenyKind::Sublattice, std::move(b)}; }
};

/// One almost-simple factor of a group over a finite field; the twist
/// is the order of the diagram automorphism, scalars_degree n gives a
/// factor living over the degree-n extension.
struct GroupFactor {
    Series series = Series::A;
    int rank = 1;
    int twist = 1;
    Isogeny isogeny = Isogeny::sc();
    int scalars_degree = 1;

    std::string label() const {
        std::string s;
        if (twist > 1) s += static_cast<char>('0' + twist);
        s += static_cast<char>(series);
        s += std::to_string(rank);
        return s;
    }
};

struct GroupSpec {
    std::vector<GroupFactor> factors;
    i64 q = 2;
};

/// Cartan matrix in the convention cartan(i,j) = <alpha_j, alpha_i^vee>;
/// column j holds the weight coordinates of alpha_j.
inline IntMatrix cartan_matrix(Series s, int n) {
    auto chain = [&](IntMatrix& c) {
        for (int i = 0; i < n; ++i) {
            c(i, i) = 2;
            if (i + 1 < n) {
                c(i, i + 1) = -1;
                c(i + 1, i) = -1;
            }
        }
    };
    IntMatrix c(n, n);
    switch (s) {
        case Series::A:
            if (n < 1) throw UnsupportedType("A_n needs n >= 1");
            chain(c);
            return c;
        case Series::B:
            if (n < 2) throw UnsupportedType("B_n needs n >= 2");
            chain(c);
            c(n - 1, n - 2) = -2;  // short root row
            return c;
        case Series::C:
            if (n < 2) throw UnsupportedType("C_n needs n >= 2");
            chain(c);
            c(n - 2, n - 1) = -2;  // long root column
            return c;
        case Series::D: {
            if (n < 4) throw UnsupportedType("D_n needs n >= 4");
            for (int i = 0; i < n; ++i) c(i, i) = 2;
            for (int i = 0; i + 1 < n - 2; ++i) {
                c(i, i + 1) = -1;
                c(i + 1, i) = -1;
            }
            c(n - 3, n - 2) = c(n - 2, n - 3) = -1;
            c(n - 3, n - 1) = c(n - 1, n - 3) = -1;
            return c;
        }
        case Series::E: {
            if (n != 6 && n != 7) throw UnsupportedType("only E6 and E7 are supported");
            for (int i = 0; i < n; ++i) c(i, i) = 2;
            auto edge = [&](int i, int j) { c(i, j) = c(j, i) = -1; };
            edge(0, 2);
            edge(2, 3);
            edge(3, 4);
            edge(4, 5);
            if (n == 7) edge(5, 6);
            edge(1, 3);
            return c;
        }
        case Series::F:
            if (n != 4) throw UnsupportedType("only F4 is supported");
            chain(c);
            c(2, 1) = -2;
            return c;
        case Series::G:
            if (n != 2) throw UnsupportedType("only G2 is supported");
            c(0, 0) = c(1, 1) = 2;
            c(0, 1) = -3;
            c(1, 0) = -1;
            return c;
    }
    throw UnsupportedType("unknown series");
}

/// Diagram automorphism of the given order as a node permutation.
inline std::vector<int> diagram_automorphism(Series s, int n, int twist) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    if (twist == 1) return p;
    if (twist == 2) {
        if (s == Series::A && n >= 2) {
            for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
            return p;
        }
        if (s == Series::D && n >= 4) {
            std::swap(p[n - 2], p[n - 1]);
            return p;
        }
        if (s == Series::E && n == 6) {
            p = {5, 1, 4, 3, 2, 0};
            return p;
        }
    }
    if (twist == 3 && s == Series::D && n == 4) {
        p = {2, 1, 3, 0};  // cycles the three leaves around the branch node
        return p;
    }
    throw UnsupportedType("twist " + std::to_string(twist) + " is not available for this type");
}

inline i64 weyl_order(Series s, int n) {
    auto fact = [](int k) {
        i64 f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    switch (s) {
        case Series::A: return fact(n + 1);
        case Series::B:
        case Series::C: return fact(n) << n;
        case Series::D: return fact(n) << (n - 1);
        case Series::E: return n == 6 ? 51840 : 2903040;
        case Series::F: return 1152;
        case Series::G: return 12;
    }
    throw UnsupportedType("unknown series");
}

inline int classical_coxeter_number(Series s, int n) {
    switch (s) {
        case Series::A: return n + 1;
        case Series::B:
        case Series::C: return 2 * n;
        case Series::D: return 2 * n - 2;
        case Series::E: return n == 6 ? 12 : 18;
        case Series::F: return 12;
        case Series::G: return 6;
    }
    throw UnsupportedType("unknown series");
}

/// Based root datum: the character lattice X in a fixed basis, the
/// simple reflections and the diagram automorphism acting on it.
struct RootDatum {
    Series series;
    int rank;               // = dim X
    int twist;              // t = order of sigma0
    Isogeny isogeny;
    IntMatrix cartan;       // of the underlying type
    std::vector<int> node_perm;  // diagram automorphism on nodes
    std::vector<Mat> refl;  // simple reflections on X
    Mat sigma0;             // diagram automorphism on X
    i64 center_order;       // [X : Q]

    std::string label() const {
        std::string s;
        if (twist > 1) s += static_cast<char>('0' + twist);
        s += static_cast<char>(series);
        s += std::to_string(rank);
        return s;
    }
};

namespace detail {

inline Mat narrow(const IntMatrix& m) {
    Mat r(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = to_i64(m(i, j));
    return r;
}

/// b^{-1} * a * b, throwing LatticeNotStable unless integral.
inline IntMatrix conjugate_into_basis(const IntMatrix& a, const IntMatrix& b, const IntMatrix& b_adj,
                                      const Int& b_det) {
    IntMatrix t = b_adj * a * b;
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j) {
            if (!divides(b_det, t(i, j)))
                throw LatticeNotStable("lattice is not stable under the required automorphism");
            t(i, j) = div_exact(t(i, j), b_det);
        }
    return t;
}

}  // namespace detail

inline RootDatum build_root_datum(Series s, int n, int twist, const Isogeny& isogeny) {
    IntMatrix c = cartan_matrix(s, n);
    std::vector<int> perm = diagram_automorphism(s, n, twist);
    // permutation must preserve the Cartan matrix
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (c(perm[i], perm[j]) != c(i, j)) throw InternalError("diagram automorphism table is wrong");

    // weight-basis reflections: s_i(pi_k) = pi_k - delta_{ik} alpha_i
    std::vector<IntMatrix> refl_p;
    for (int i = 0; i < n; ++i) {
        IntMatrix si = IntMatrix::identity(n);
        for (int k = 0; k < n; ++k) si(k, i) -= c(k, i);
        refl_p.push_back(si);
    }
    IntMatrix sigma_p(n, n);
    for (int j = 0; j < n; ++j) sigma_p(perm[j], j) = 1;

    IntMatrix basis;
    switch (isogeny.kind) {
        case IsogenyKind::SimplyConnected: basis = IntMatrix::identity(n); break;
        case IsogenyKind::Adjoint: basis = c; break;
        case IsogenyKind::Sublattice: basis = isogeny.basis; break;
    }
    if (basis.rows() != n || basis.cols() != n) throw LatticeNotStable("lattice basis has wrong shape");
    Int bdet = det(basis);
    if (bdet == 0) throw LatticeNotStable("lattice basis is singular");
    IntMatrix badj = adjugate(basis);

    // Q <= X: every simple root must lie in the span of the basis.
    for (int j = 0; j < n; ++j) {
        IntMatrix col(n, 1);
        for (int k = 0; k < n; ++k) col(k, 0) = c(k, j);
        IntMatrix t = badj * col;
        for (int k = 0; k < n; ++k)
            if (!divides(bdet, t(k, 0)))
                throw LatticeNotStable("root lattice is not contained in the chosen lattice");
    }

    RootDatum rd;
    rd.series = s;
    rd.rank = n;
    rd.twist = twist;
    rd.isogeny = isogeny;
    rd.cartan = c;
    rd.node_perm = perm;
    for (int i = 0; i < n; ++i)
        rd.refl.push_back(detail::narrow(detail::conjugate_into_basis(refl_p[i], basis, badj, bdet)));
    rd.sigma0 = detail::narrow(detail::conjugate_into_basis(sigma_p, basis, badj, bdet));

    Int cdet = abs(det(c));
    Int bd = abs(bdet);
    if (!divides(bd, cdet)) throw LatticeNotStable("lattice does not sit between root and weight lattices");
    rd.center_order = to_i64(div_exact(cdet, bd));

    for (int i = 0; i < n; ++i)
        if (!(rd.refl[i] * rd.refl[i]).is_identity()) throw InternalError("reflection is not an involution");
    if (matrix_order(rd.sigma0, 6) != twist) throw InternalError("sigma0 has wrong order");
    return rd;
}

/// Twisted Coxeter element: one simple reflection per sigma0-orbit of
/// nodes (smallest representative, ascending), composed with sigma0.
inline Mat twisted_coxeter_element(const RootDatum& rd) {
    std::vector<bool> seen(rd.rank, false);
    Mat w = Mat::identity(rd.rank);
    for (int i = 0; i < rd.rank; ++i) {
        if (seen[i]) continue;
        int j = i;
        do {
            seen[j] = true;
            j = rd.node_perm[j];
        } while (j != i);
        w = w * rd.refl[i];
    }
    return w;
}

/// Order of sigma0 * w_cox on X, the twisted Coxeter number h.
inline int twisted_coxeter_number(const RootDatum& rd) {
    return matrix_order(rd.sigma0 * twisted_coxeter_element(rd));
}

}  // namespace cusp

#endif
