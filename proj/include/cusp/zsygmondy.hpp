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

#ifndef CUSP_ZSYGMONDY_HPP
#define CUSP_ZSYGMONDY_HPP

#include <optional>

#include "cusp/integer.hpp"
#include "cusp/poly.hpp"

namespace cusp {

inline i64 largest_prime_factor(i64 n) {
    i64 best = 1;
    for (i64 p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            best = p;
            n /= p;
        }
    return n > 1 ? n : best;
}

/// Smallest prime ell with mult_order(q mod ell) = h, or nothing.
///
/// A prime of order h divides Phi_h(q), and the only divisor of
/// Phi_h(q) of smaller order is the largest prime factor of h, to the
/// first power.  So for h >= 3 a witness exists unless Phi_h(q)
/// collapses to that single intrinsic factor, and since every witness
/// is congruent to 1 mod h, an ascending scan finds the smallest.
inline std::optional<i64> zsygmondy(i64 q, i64 h) {
    if (q < 2 || h < 1) throw SpecError("zsygmondy needs q >= 2, h >= 1");
    if (h == 1) {
        for (i64 p = 2; p <= q - 1; ++p)
            if (is_prime_i64(p) && (q - 1) % p == 0) return p;
        return std::nullopt;
    }
    if (h == 2) {
        for (i64 p = 3; p <= q + 1; p += 2)
            if (is_prime_i64(p) && (q + 1) % p == 0) return p;
        return std::nullopt;
    }
    Int n = poly_eval(cyclotomic(static_cast<int>(h)), Int(static_cast<long>(q)));
    i64 intrinsic = largest_prime_factor(h);
    Int pi(static_cast<long>(intrinsic));
    while (divides(pi, n)) n = div_exact(n, pi);
    if (n == 1) return std::nullopt;
    // every remaining prime factor has order exactly h, so the
    // smallest witness is the smallest prime factor; trial division
    // stays in the progression 1 mod h
    for (Int ell(static_cast<long>(h + 1)); ell * ell <= n; ell += static_cast<long>(h))
        if (divides(ell, n)) {
            i64 l = to_i64(ell);
            if (mult_order_mod(q, l) != h) throw InternalError("zsygmondy witness has the wrong order");
            return l;
        }
    i64 l = to_i64(n);  // n itself is prime
    if (mult_order_mod(q, l) != h) throw InternalError("zsygmondy witness has the wrong order");
    return l;
}

}  // namespace cusp

#endif
