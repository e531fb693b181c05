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

#ifndef CUSP_WEYL_HPP
#define CUSP_WEYL_HPP

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cusp/errors.hpp"
#include "cusp/matrix.hpp"
#include "cusp/poly.hpp"
#include "cusp/rootdatum.hpp"

namespace cusp {

inline constexpr i64 kWeylEnumerationCeiling = 200000;

/// The Weyl group as an explicit, canonically ordered list of lattice
/// automorphisms.  Elements are addressed by index into `elems`.
struct WeylGroup {
    RootDatum rd;
    std::vector<Mat> elems;  // sorted lexicographically by entries
    std::unordered_map<Mat, int, MatHash> index;
    int identity_index = -1;

    i64 order() const { return static_cast<i64>(elems.size()); }

    int index_of(const Mat& m) const {
        auto it = index.find(m);
        if (it == index.end()) throw InternalError("matrix is not a Weyl group element");
        return it->second;
    }
};

inline WeylGroup enumerate_weyl(const RootDatum& rd, i64 ceiling = kWeylEnumerationCeiling) {
    i64 expected = weyl_order(rd.series, rd.rank);
    if (expected > ceiling)
        throw TooLarge("Weyl group of order " + std::to_string(expected) + " exceeds the enumeration ceiling " +
                       std::to_string(ceiling));

    WeylGroup w;
    w.rd = rd;
    std::unordered_map<Mat, int, MatHash> seen;
    std::deque<Mat> queue;
    Mat id = Mat::identity(rd.rank);
    seen.emplace(id, 0);
    queue.push_back(id);
    while (!queue.empty()) {
        Mat x = std::move(queue.front());
        queue.pop_front();
        for (const Mat& s : rd.refl) {
            Mat y = x * s;
            if (seen.emplace(y, 0).second) queue.push_back(y);
        }
        if (static_cast<i64>(seen.size()) > expected) throw InternalError("Weyl closure exceeded expected order");
    }
    if (static_cast<i64>(seen.size()) != expected)
        throw InternalError("Weyl closure produced " + std::to_string(seen.size()) + " elements, expected " +
                            std::to_string(expected));
    w.elems.reserve(seen.size());
    for (auto& kv : seen) w.elems.push_back(kv.first);
    std::sort(w.elems.begin(), w.elems.end());
    for (int i = 0; i < static_cast<int>(w.elems.size()); ++i) w.index[w.elems[i]] = i;
    w.identity_index = w.index_of(id);
    return w;
}

/// w = sigma0 * omega^{-1}, the endomorphism whose cokernel at q is
/// the character group of the twisted torus.
inline Mat frobenius_twist(const RootDatum& rd, const Mat& omega) {
    Mat inv = omega;
    // omega has finite order; invert by powering
    int ord = matrix_order(omega);
    for (int i = 0; i < ord - 2; ++i) inv = inv * omega;
    if (ord == 1) inv = Mat::identity(rd.rank);
    return rd.sigma0 * inv;
}

inline bool is_elliptic(const RootDatum& rd, const Mat& omega) {
    Mat w = frobenius_twist(rd, omega);
    IntMatrix m = w.to_int_matrix();
    for (int i = 0; i < m.rows(); ++i) m(i, i) -= 1;
    return det(m) != 0;
}

/// A sigma0-twisted conjugacy class, with the data attached to its
/// elliptic torus: the characteristic polynomial of w = sigma0 *
/// omega^{-1} and its cyclotomic factorization.
struct TwistedClass {
    int repr = -1;               // canonical (minimal) member, index into W
    std::vector<int> members;    // sorted
    bool elliptic = false;
    Mat w;                       // sigma0 * repr^{-1}
    Poly charpoly;               // of w, ascending, monic
    std::vector<std::pair<int, int>> cyclo;  // (d, multiplicity)

    i64 size() const { return static_cast<i64>(members.size()); }
};

/// Partition of W into twisted classes for the action
///   x . omega = x * omega * sigma0^{-1} x^{-1} sigma0,
/// whose stabilizer is exactly the centralizer of sigma0 * omega^{-1}
/// in W.  For split types this is ordinary conjugacy.
inline std::vector<TwistedClass> twisted_classes(const WeylGroup& w) {
    const RootDatum& rd = w.rd;
    Mat sigma_inv = rd.sigma0;
    for (int i = 0; i < rd.twist - 2; ++i) sigma_inv = sigma_inv * rd.sigma0;
    if (rd.twist == 1) sigma_inv = Mat::identity(rd.rank);

    // y = s * omega * (sigma0^{-1} s sigma0); the right factor is fixed per generator
    std::vector<Mat> right;
    for (const Mat& s : rd.refl) right.push_back(sigma_inv * s * rd.sigma0);

    std::vector<int> cls(w.elems.size(), -1);
    std::vector<TwistedClass> out;
    for (int start = 0; start < static_cast<int>(w.elems.size()); ++start) {
        if (cls[start] >= 0) continue;
        TwistedClass tc;
        int id = static_cast<int>(out.size());
        std::deque<int> queue{start};
        cls[start] = id;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            tc.members.push_back(cur);
            for (size_t g = 0; g < rd.refl.size(); ++g) {
                Mat y = rd.refl[g] * w.elems[cur] * right[g];
                int yi = w.index_of(y);
                if (cls[yi] < 0) {
                    cls[yi] = id;
                    queue.push_back(yi);
                }
            }
        }
        std::sort(tc.members.begin(), tc.members.end());
        tc.repr = tc.members.front();
        tc.w = frobenius_twist(rd, w.elems[tc.repr]);
        tc.charpoly = char_poly(tc.w.to_int_matrix());
        tc.cyclo = cyclotomic_factor(tc.charpoly);
        tc.elliptic = poly_eval(tc.charpoly, Int(1)) != 0;
        out.push_back(std::move(tc));
    }
    return out;
}

/// The twisted centralizer Omega = { x in W : x w = w x } for
/// w = sigma0 * omega^{-1}; this is the rational Weyl group of the
/// torus attached to the class of omega.
struct TwistedCentralizer {
    std::vector<int> elems;  // indices into W, sorted
    std::vector<int> gens;   // a small generating set

    i64 order() const { return static_cast<i64>(elems.size()); }
};

inline TwistedCentralizer twisted_centralizer(const WeylGroup& w, const Mat& omega) {
    Mat wm = frobenius_twist(w.rd, omega);
    TwistedCentralizer out;
    for (int i = 0; i < static_cast<int>(w.elems.size()); ++i)
        if (w.elems[i] * wm == wm * w.elems[i]) out.elems.push_back(i);

    // greedy generating set
    std::unordered_map<Mat, bool, MatHash> closure;
    closure.emplace(Mat::identity(w.rd.rank), true);
    for (int idx : out.elems) {
        if (closure.count(w.elems[idx])) continue;
        out.gens.push_back(idx);
        // regenerate the closure with the new generator
        std::deque<Mat> queue;
        for (auto& kv : closure) queue.push_back(kv.first);
        std::vector<Mat> gens_m;
        for (int g : out.gens) gens_m.push_back(w.elems[g]);
        while (!queue.empty()) {
            Mat x = std::move(queue.front());
            queue.pop_front();
            for (const Mat& g : gens_m) {
                Mat y = x * g;
                if (closure.emplace(y, true).second) queue.push_back(y);
            }
        }
    }
    return out;
}

/// Finds the class containing the twisted Coxeter element.
inline int twisted_coxeter_class(const WeylGroup& w, const std::vector<TwistedClass>& classes) {
    int target = w.index_of(twisted_coxeter_element(w.rd));
    for (int i = 0; i < static_cast<int>(classes.size()); ++i)
        if (std::binary_search(classes[i].members.begin(), classes[i].members.end(), target)) return i;
    throw InternalError("twisted Coxeter element not found in any class");
}

}  // namespace cusp

#endif
