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

#ifndef CUSP_POLY_HPP
#define CUSP_POLY_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cusp/errors.hpp"
#include "cusp/integer.hpp"

namespace cusp {

/// Integer polynomial, ascending coefficients; p[i] is the x^i term.
using Poly = std::vector<Int>;

inline int poly_degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;  // zero polynomial
}

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

/// Division a = q*b + r as integer polynomials; requires b monic up to
/// sign.  Returns {q, r}.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    int db = poly_degree(b);
    if (db < 0) throw InternalError("polynomial division by zero");
    const Int& lead = b[db];
    if (lead != 1 && lead != -1) throw InternalError("divisor must be monic up to sign");
    poly_trim(a);
    Poly q(a.size() > static_cast<size_t>(db) ? a.size() - db : 0, Int(0));
    for (int i = poly_degree(a); i >= db; i = poly_degree(a)) {
        Int c = a[i] * lead;  // a[i] / lead with lead = +-1
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
        poly_trim(a);
        if (a.empty()) break;
    }
    return {q, a};
}

inline Int poly_eval(const Poly& p, const Int& x) {
    Int r = 0;
    for (int i = poly_degree(p); i >= 0; --i) r = r * x + p[i];
    return r;
}

inline int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

/// d-th cyclotomic polynomial, computed by dividing x^d - 1 by the
/// lower-index factors.  Memoized.
inline const Poly& cyclotomic(int d) {
    static std::map<int, Poly> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    Poly num(static_cast<size_t>(d) + 1, Int(0));
    num[0] = -1;
    num[d] = 1;
    for (int e = 1; e < d; ++e)
        if (d % e == 0) {
            auto [q, r] = poly_divmod(num, cyclotomic(e));
            if (poly_degree(r) >= 0) throw InternalError("cyclotomic recursion failed");
            num = q;
        }
    return cache.emplace(d, std::move(num)).first->second;
}

/// Factors a monic-up-to-sign integer polynomial whose roots all lie
/// on the unit circle into cyclotomic polynomials.  Returns the list
/// of (d, multiplicity), d ascending.  Throws NotCyclotomic if a
/// nontrivial remainder survives.
inline std::vector<std::pair<int, int>> cyclotomic_factor(Poly p) {
    poly_trim(p);
    int deg = poly_degree(p);
    if (deg < 0) throw NotCyclotomic("zero polynomial");
    if (p[deg] == -1)
        for (auto& c : p) c = -c;
    if (p[deg] != 1) throw NotCyclotomic("polynomial is not monic up to sign");

    std::vector<std::pair<int, int>> factors;
    // phi(d) <= deg bounds the candidates; 3*deg^2 + 6 is a safe scan limit.
    const int dmax = 3 * deg * deg + 6;
    for (int d = 1; d <= dmax && poly_degree(p) > 0; ++d) {
        if (euler_phi(d) > poly_degree(p)) continue;
        int mult = 0;
        for (;;) {
            auto [q, r] = poly_divmod(p, cyclotomic(d));
            if (poly_degree(r) >= 0) break;
            p = q;
            ++mult;
        }
        if (mult) factors.emplace_back(d, mult);
    }
    if (poly_degree(p) != 0 || p[0] != 1) throw NotCyclotomic("remainder is not a product of cyclotomics");
    return factors;
}

/// Evaluates prod Phi_d(q)^mult.
inline Int cyclotomic_product_at(const std::vector<std::pair<int, int>>& factors, const Int& q) {
    Int r = 1;
    for (auto [d, mult] : factors)
        for (int i = 0; i < mult; ++i) r *= poly_eval(cyclotomic(d), q);
    return r;
}

}  // namespace cusp

#endif
