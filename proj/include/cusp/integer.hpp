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

#ifndef CUSP_INTEGER_HPP
#define CUSP_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "cusp/errors.hpp"

namespace cusp {

/// Exact integer used throughout the lattice layer.  Determinants and
/// Smith-normal-form intermediates must never wrap, so everything that
/// touches matrices runs on arbitrary precision.
using Int = mpz_class;

using i64 = std::int64_t;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline i64 int_pow_i64(i64 base, unsigned e) {
    Int r = int_pow(Int(static_cast<long>(base)), e);
    if (!r.fits_slong_p()) throw CapExceeded("integer power exceeds 64 bits");
    return static_cast<i64>(r.get_si());
}

/// Truncated division; |remainder| < |divisor|, remainder has the sign
/// of the dividend (C++ semantics).
inline void divmod_trunc(const Int& a, const Int& b, Int& q, Int& r) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

/// Exact division; throws if b does not divide a.
inline Int div_exact(const Int& a, const Int& b) {
    Int q, r;
    divmod_trunc(a, b, q, r);
    if (r != 0) throw InternalError("inexact division where exactness was required");
    return q;
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline i64 to_i64(const Int& a) {
    if (!a.fits_slong_p()) throw CapExceeded("value exceeds 64 bits: " + a.get_str());
    return static_cast<i64>(a.get_si());
}

inline std::string to_string(const Int& a) { return a.get_str(); }

/// Non-negative remainder of a modulo m (m > 0).
inline i64 mod_pos(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>((static_cast<__int128>(a) * b) % m);
}

inline i64 pow_mod(i64 base, i64 e, i64 m) {
    i64 r = 1 % m;
    base = mod_pos(base, m);
    while (e > 0) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

inline i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool is_prime_i64(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (i64 d = 37; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Multiplicative order of a modulo the prime ell: start from ell-1
/// and strip prime factors that keep the power at 1.
inline i64 mult_order_mod(i64 a, i64 ell) {
    a = mod_pos(a, ell);
    if (a == 0) throw InternalError("order of 0 is undefined");
    i64 o = ell - 1;
    i64 n = o;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        while (o % p == 0 && pow_mod(a, o / p, ell) == 1) o /= p;
    }
    if (n > 1)
        while (o % n == 0 && pow_mod(a, o / n, ell) == 1) o /= n;
    if (pow_mod(a, o, ell) != 1) throw InternalError("order computation failed; modulus not prime?");
    return o;
}

}  // namespace cusp

#endif
