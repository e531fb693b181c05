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

#ifndef CUSP_CLASSICAL_HPP
#define CUSP_CLASSICAL_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cusp/abelian.hpp"
#include "cusp/errors.hpp"
#include "cusp/integer.hpp"
#include "cusp/zsygmondy.hpp"

namespace cusp {

// Product-torus models for U(m) and the nonsplit even orthogonal
// groups: T(f) = prod T_{d_i} with |T_d| = q^d + 1.  Unitary shapes
// need every part odd; orthogonal shapes (indexed by half the matrix
// size) need an odd number of parts.

enum class TorusKind { Unitary, OrthogonalNonsplit };

struct TorusShape {
    TorusKind kind = TorusKind::Unitary;
    std::vector<int> parts;  // descending

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int t1_count() const { return static_cast<int>(std::count(parts.begin(), parts.end(), 1)); }
    bool good() const { return t1_count() <= 1; }

    bool valid() const {
        if (parts.empty()) return false;
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) return false;
        if (parts.back() < 1) return false;
        if (kind == TorusKind::Unitary) {
            for (int d : parts)
                if (d % 2 == 0) return false;
        } else {
            if (parts.size() % 2 == 0) return false;
        }
        return true;
    }
};

/// All valid shapes of the given total size, in descending
/// lexicographic order (largest first part first).
inline std::vector<TorusShape> enumerate_shapes(TorusKind kind, int size) {
    if (size < 1) throw SpecError("shape size must be positive");
    std::vector<TorusShape> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            TorusShape s{kind, cur};
            if (s.valid()) out.push_back(std::move(s));
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            if (kind == TorusKind::Unitary && p % 2 == 0) continue;
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(size, size);
    return out;
}

/// One symmetry of the product torus: y_i = mult_i * x_{perm_i}.
/// Permutations only move factors with the same part size.
struct ProductAut {
    std::vector<int> perm;
    std::vector<i64> mult;

    bool operator<(const ProductAut& o) const { return std::tie(perm, mult) < std::tie(o.perm, o.mult); }
    bool operator==(const ProductAut& o) const { return perm == o.perm && mult == o.mult; }
    bool is_identity() const {
        for (size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != static_cast<int>(i) || mult[i] != 1) return false;
        return true;
    }
};

/// Character group of a product torus with the action described by
/// the product model: each factor of part size d carries the cyclic
/// group of multiplications by q^2 (order d), plus the permutations
/// of equal parts.  For the orthogonal kind the permutation block is
/// the full symmetric group on equal parts; whether the rational Weyl
/// group imposes a sign-parity constraint is not settled by the model
/// and is flagged on the object.
struct ProductL {
    TorusShape shape;
    i64 q = 0;
    std::vector<i64> orders;         // q^{d_i} + 1, aligned with shape.parts
    std::vector<ProductAut> gens;
    std::vector<ProductAut> group;   // closure, canonical order, identity included
    bool action_model_flag = false;  // orthogonal kind: permutations may overshoot

    int nfactors() const { return static_cast<int>(orders.size()); }

    i64 order() const {
        i64 o = 1;
        for (i64 c : orders) {
            if (o > (static_cast<i64>(1) << 62) / c) throw CapExceeded("product torus order exceeds 64 bits");
            o *= c;
        }
        return o;
    }

    std::vector<i64> zero() const { return std::vector<i64>(orders.size(), 0); }

    std::vector<i64> reduce(std::vector<i64> v) const {
        for (size_t i = 0; i < v.size(); ++i) v[i] = mod_pos(v[i], orders[i]);
        return v;
    }

    std::vector<i64> neg(const std::vector<i64>& v) const {
        std::vector<i64> r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] == 0 ? 0 : orders[i] - v[i];
        return r;
    }

    std::vector<i64> apply(const ProductAut& g, const std::vector<i64>& v) const {
        std::vector<i64> r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = mul_mod(g.mult[i], v[g.perm[i]], orders[i]);
        return r;
    }

    void for_each(const std::function<bool(const std::vector<i64>&)>& fn) const {
        std::vector<i64> v(orders.size(), 0);
        for (;;) {
            if (!fn(v)) return;
            int i = static_cast<int>(orders.size()) - 1;
            while (i >= 0) {
                if (++v[i] < orders[i]) break;
                v[i] = 0;
                --i;
            }
            if (i < 0) return;
        }
    }
};

namespace detail {

inline ProductAut compose_aut(const ProductAut& f, const ProductAut& g, const std::vector<i64>& orders) {
    ProductAut r;
    const size_t n = orders.size();
    r.perm.resize(n);
    r.mult.resize(n);
    for (size_t i = 0; i < n; ++i) {
        r.perm[i] = g.perm[f.perm[i]];
        r.mult[i] = mul_mod(f.mult[i], g.mult[f.perm[i]], orders[i]);
    }
    return r;
}

}  // namespace detail

inline ProductL build_product_L(const TorusShape& shape, i64 q, i64 group_cap = 100000) {
    if (!shape.valid()) throw ShapeMismatch("invalid torus shape");
    if (q < 2) throw SpecError("field size must be at least 2");
    ProductL L;
    L.shape = shape;
    L.q = q;
    L.action_model_flag = shape.kind == TorusKind::OrthogonalNonsplit;
    const int n = static_cast<int>(shape.parts.size());
    for (int d : shape.parts) L.orders.push_back(int_pow_i64(q, static_cast<unsigned>(d)) + 1);

    ProductAut id;
    id.perm.resize(n);
    std::iota(id.perm.begin(), id.perm.end(), 0);
    id.mult.assign(n, 1);

    const i64 q2 = q * q;
    for (int i = 0; i < n; ++i) {
        if (shape.parts[i] == 1) continue;  // Gal(E_1/E) is trivial
        ProductAut g = id;
        g.mult[i] = mod_pos(q2, L.orders[i]);
        if (g.mult[i] != 1) L.gens.push_back(g);
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (shape.parts[i] != shape.parts[i + 1]) continue;
        ProductAut g = id;
        std::swap(g.perm[i], g.perm[i + 1]);
        L.gens.push_back(g);
    }

    std::set<ProductAut> closure{id};
    std::vector<ProductAut> queue{id};
    while (!queue.empty()) {
        ProductAut x = std::move(queue.back());
        queue.pop_back();
        for (const ProductAut& g : L.gens) {
            ProductAut y = detail::compose_aut(g, x, L.orders);
            if (closure.insert(y).second) queue.push_back(y);
        }
        if (static_cast<i64>(closure.size()) > group_cap) throw CapExceeded("product action group exceeds cap");
    }
    L.group.assign(closure.begin(), closure.end());
    return L;
}

inline bool is_general_position(const ProductL& L, const std::vector<i64>& v) {
    for (const ProductAut& g : L.group) {
        if (g.is_identity()) continue;
        if (L.apply(g, v) == v) return false;
    }
    return true;
}

inline bool is_conjugate_self_dual(const ProductL& L, const std::vector<i64>& v) {
    std::vector<i64> nv = L.neg(v);
    if (nv == v) return true;
    for (const ProductAut& g : L.group)
        if (L.apply(g, v) == nv) return true;
    return false;
}

/// Quotient of a unitary product torus by the diagonally embedded
/// Z/(q+1): the character group at SU level, with the U-level action
/// carried along element by element (an element may act trivially
/// downstairs, which kills general position there).
struct SUQuotient {
    FinAbGroup group;
    Cokernel coker;
    std::vector<AbHom> maps;  // aligned with the parent ProductL::group

    std::vector<i64> project(const std::vector<i64>& v) const { return coker.project_i64(v); }
};

inline SUQuotient restrict_to_SU(const ProductL& L) {
    if (L.shape.kind != TorusKind::Unitary) throw ShapeMismatch("SU restriction needs a unitary shape");
    const int n = L.nfactors();
    IntMatrix m(n, n + 1);
    for (int i = 0; i < n; ++i) {
        m(i, i) = static_cast<long>(L.orders[i]);
        m(i, n) = static_cast<long>(L.orders[i] / (L.q + 1));  // Z/(q+1) embeds in each factor
    }
    SUQuotient out;
    out.coker = cokernel(m);
    out.group = out.coker.group;
    for (const ProductAut& g : L.group) {
        IntMatrix gm(n, n);
        for (int i = 0; i < n; ++i) gm(i, g.perm[i]) = static_cast<long>(g.mult[i]);
        out.maps.push_back(induce_endomorphism(gm, out.coker));
    }
    return out;
}

inline bool su_is_general_position(const ProductL& L, const SUQuotient& su, const std::vector<i64>& v_quot) {
    for (size_t i = 0; i < L.group.size(); ++i) {
        if (L.group[i].is_identity()) continue;
        if (su.maps[i].apply(v_quot) == v_quot) return false;
    }
    return true;
}

inline bool su_is_conjugate_self_dual(const ProductL& L, const SUQuotient& su, const std::vector<i64>& v_quot) {
    std::vector<i64> nv = su.group.neg(v_quot);
    if (nv == v_quot) return true;
    for (size_t i = 0; i < L.group.size(); ++i)
        if (su.maps[i].apply(v_quot) == nv) return true;
    return false;
}

/// Characters with coordinate sum zero in the common cyclic overgroup
/// Z/(q^D + 1), D = lcm of the parts: the PU-image characters.
struct SumZeroSubgroup {
    i64 modulus = 0;            // q^D + 1
    std::vector<i64> weights;   // modulus / order_i

    bool contains(const std::vector<i64>& v) const {
        i64 s = 0;
        for (size_t i = 0; i < v.size(); ++i) s = (s + mul_mod(weights[i], v[i], modulus)) % modulus;
        return s == 0;
    }
};

inline SumZeroSubgroup sum_zero_subgroup(const ProductL& L) {
    if (L.shape.kind != TorusKind::Unitary) throw ShapeMismatch("sum-zero subgroup needs a unitary shape");
    i64 dlcm = 1;
    for (int d : L.shape.parts) dlcm = dlcm / gcd_i64(dlcm, d) * d;
    SumZeroSubgroup out;
    out.modulus = int_pow_i64(L.q, static_cast<unsigned>(dlcm)) + 1;
    for (i64 c : L.orders) {
        if (out.modulus % c != 0) throw InternalError("factor order does not divide the common overgroup");
        out.weights.push_back(out.modulus / c);
    }
    return out;
}

/// Lists the sum-zero elements in canonical order (caller caps the size).
inline std::vector<std::vector<i64>> sum_zero_elements(const ProductL& L, i64 cap = 1000000) {
    if (L.order() > cap) throw CapExceeded("sum-zero enumeration exceeds cap");
    SumZeroSubgroup sz = sum_zero_subgroup(L);
    std::vector<std::vector<i64>> out;
    L.for_each([&](const std::vector<i64>& v) {
        if (sz.contains(v)) out.push_back(v);
        return true;
    });
    return out;
}

namespace detail {

/// Element of order ell in Z/c (ell | c).
inline i64 element_of_order(i64 c, i64 ell) { return c / ell; }

inline void verify_or_throw(const ProductL& L, const std::vector<i64>& v, const char* what) {
    if (!is_conjugate_self_dual(L, v) || !is_general_position(L, v))
        throw ConstructionFailed(std::string(what) + ": constructed element failed verification");
}

}  // namespace detail

/// The paired-factor construction: shapes made of pairs (T_k, T_k)
/// for up to two distinct k > 1 plus at most three T_1 factors carry
/// a conjugate self-dual element in general position.  For good
/// shapes (at most one T_1) the Weyl orbit generates a subgroup of
/// odd order, coprime to q+1 when q > 2.
inline std::vector<i64> construct_v_element(const ProductL& L) {
    std::map<int, int> mult;
    for (int d : L.shape.parts) ++mult[d];
    int distinct_large = 0, r = 0;
    for (auto [d, m] : mult) {
        if (d == 1) {
            r = m;
            continue;
        }
        ++distinct_large;
        if (m != 2) throw ShapeMismatch("each part size > 1 must appear exactly twice");
    }
    if (distinct_large > 2) throw ShapeMismatch("at most two distinct paired part sizes");
    if (r > 3) throw ShapeMismatch("at most three T_1 factors");

    std::vector<i64> v(L.nfactors(), 0);
    int i = 0;
    while (i < L.nfactors()) {
        int k = L.shape.parts[i];
        i64 c = L.orders[i];
        if (k > 1) {
            i64 vk;
            if (k == 3 && L.q == 2) {
                vk = 1;  // generator of Z/9; no prime of order 6 exists at q = 2
                v[i] = vk;
                v[i + 1] = c - vk;
            } else {
                auto ell = zsygmondy(L.q, 2 * k);
                if (!ell) throw ConstructionFailed("no prime of order 2k available for the pair construction");
                vk = detail::element_of_order(c, *ell);
                v[i] = vk;
                v[i + 1] = k % 2 == 0 ? mul_mod(L.q, vk, c) : c - vk;
            }
            i += 2;
        } else {
            // T_1 block: 0 / (g, -g) / (g, -g, 0)
            if (r >= 2) {
                v[i] = 1;
                v[i + 1] = c - 1;
            }
            i += r;
        }
    }
    detail::verify_or_throw(L, v, "v-element");

    if (L.shape.good()) {
        for (const ProductAut& g : L.group) {
            std::vector<i64> u = L.apply(g, v);
            i64 o = 1;
            for (int j = 0; j < L.nfactors(); ++j) {
                i64 oj = L.orders[j] / gcd_i64(u[j], L.orders[j]);
                o = o / gcd_i64(o, oj) * oj;
            }
            if (o % 2 == 0) throw ConstructionFailed("good-shape orbit has even order");
            if (L.q != 2 && gcd_i64(o, L.q + 1) != 1)
                throw ConstructionFailed("good-shape orbit order shares a factor with q+1");
        }
    }
    return v;
}

/// The crude U(n) element (c, -c, 2c, -2c, ...) on the all-ones
/// shape; needs the field big enough for the coordinates to stay
/// distinct.
inline std::pair<ProductL, std::vector<i64>> construct_u_crude(int n, i64 q) {
    if (n < 1) throw SpecError("U(n) needs n >= 1");
    bool relaxed = (q % 2 == 0) && (n % 2 == 1);
    if (q < (relaxed ? n - 1 : n)) throw FieldTooSmall("need q >= n (q >= n-1 for even q, odd n)");
    TorusShape shape{TorusKind::Unitary, std::vector<int>(n, 1)};
    ProductL L = build_product_L(shape, q);
    std::vector<i64> v;
    const i64 c = q + 1;
    if (n % 2 == 0) {
        for (i64 j = 1; j <= n / 2; ++j) {
            v.push_back(mod_pos(j, c));
            v.push_back(mod_pos(-j, c));
        }
    } else {
        v.push_back(0);
        for (i64 j = 1; j <= n / 2; ++j) {
            v.push_back(mod_pos(j, c));
            v.push_back(mod_pos(-j, c));
        }
    }
    for (size_t a = 0; a < v.size(); ++a)
        for (size_t b = a + 1; b < v.size(); ++b)
            if (v[a] == v[b]) throw ConstructionFailed("crude coordinates collide");
    i64 sum = 0;
    for (i64 x : v) sum = mod_pos(sum + x, c);
    if (sum != 0) throw ConstructionFailed("crude coordinates do not sum to zero");
    detail::verify_or_throw(L, v, "crude U(n) element");
    return {std::move(L), std::move(v)};
}

struct Su812Result {
    ProductL L;                 // U-level torus, shape (k, k, 1, 1)
    std::vector<i64> v;         // U-level element, coordinate sum zero
    SUQuotient su;
    std::vector<i64> v_su;      // image at SU level, still in general position
    bool scripted = false;      // false when the exhaustive fallback was needed
};

/// SU(8) / SU(12): shape (k, k, 1, 1) with k = n/2 - 1, element
/// (c, -c, d, -d).  The scripted pick takes the smallest prime order
/// coprime to q+1; when no such prime exists the whole sum-zero
/// subgroup is searched.
inline Su812Result construct_su8_12(int n, i64 q) {
    if (n != 8 && n != 12) throw SpecError("only n = 8 and n = 12 are supported");
    const int k = n / 2 - 1;
    TorusShape shape{TorusKind::Unitary, {k, k, 1, 1}};
    Su812Result out{build_product_L(shape, q), {}, {}, {}, false};
    out.su = restrict_to_SU(out.L);
    SumZeroSubgroup sz = sum_zero_subgroup(out.L);

    auto admissible = [&](const std::vector<i64>& v) {
        if (!sz.contains(v)) return false;
        if (!is_conjugate_self_dual(out.L, v) || !is_general_position(out.L, v)) return false;
        std::vector<i64> vq = out.su.project(v);
        return su_is_conjugate_self_dual(out.L, out.su, vq) && su_is_general_position(out.L, out.su, vq);
    };

    i64 ck = out.L.orders[0];
    i64 ell = 0;
    for (i64 p = 3; p <= ck; p += 2)
        if (ck % p == 0 && is_prime_i64(p) && gcd_i64(p, q + 1) == 1) {
            ell = p;
            break;
        }
    if (ell) {
        i64 c = detail::element_of_order(ck, ell);
        std::vector<i64> v{c, ck - c, 1, q};
        if (admissible(v)) {
            out.v = std::move(v);
            out.v_su = out.su.project(out.v);
            out.scripted = true;
            return out;
        }
    }
    // exhaustive fallback over the sum-zero subgroup
    std::optional<std::vector<i64>> found;
    out.L.for_each([&](const std::vector<i64>& v) {
        if (admissible(v)) {
            found = v;
            return false;
        }
        return true;
    });
    if (!found) throw ConstructionFailed("no admissible element exists for SU(n)");
    out.v = *found;
    out.v_su = out.su.project(out.v);
    return out;
}

}  // namespace cusp

#endif
