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

#ifndef CUSP_TORUSCHAR_HPP
#define CUSP_TORUSCHAR_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "cusp/abelian.hpp"
#include "cusp/errors.hpp"
#include "cusp/weyl.hpp"

namespace cusp {

inline constexpr i64 kDefaultSearchCap = 1000000;
inline constexpr i64 kOmegaClosureCap = 100000;

using CharacterElt = std::vector<i64>;

/// Character group L = X / (q * sigma0 * omega^{-1} - 1) X of an
/// elliptic torus, together with the action of the rational Weyl
/// group Omega and the Frobenius (multiplication by q).
///
/// General position is a condition on the stabilizer inside the group
/// Omega itself, so the per-element descended maps are kept: an
/// element acting trivially on L still rules out general position.
struct CharGroupL {
    FinAbGroup group;
    Cokernel coker;           // projection X -> L
    i64 q = 0;
    Mat w;                    // sigma0 * omega^{-1}
    int class_index = -1;     // which twisted class this came from

    std::vector<int> omega_elems;     // Omega as indices into W (sorted)
    std::vector<AbHom> omega_maps;    // aligned with omega_elems
    std::vector<int> omega_gens;      // generating subset (indices into W)
    AbHom frobenius;                  // descent of w^{-1}; equals mult by q
    bool faithful = true;             // Omega -> Aut(L) injective?

    // distinct maps of non-identity Omega elements (for stabilizer
    // tests) and the full image group closure
    std::vector<AbHom> nonidentity_maps;
    std::vector<AbHom> image_closure;

    i64 order() const { return group.order(); }
};

inline AbHom multiplication_by(i64 c, const FinAbGroup& g) {
    std::vector<std::vector<i64>> m(g.ngens(), std::vector<i64>(g.ngens(), 0));
    for (int i = 0; i < g.ngens(); ++i) m[i][i] = mod_pos(c, g.inv[i]);
    return AbHom(g, g, std::move(m));
}

inline CharGroupL build_L(const WeylGroup& weyl, const TwistedClass& cls, i64 q) {
    if (!cls.elliptic) throw NonElliptic("class is not elliptic; the character quotient is infinite");
    if (q < 2) throw SpecError("field size must be at least 2");
    const RootDatum& rd = weyl.rd;

    CharGroupL L;
    L.q = q;
    L.w = cls.w;

    IntMatrix m = cls.w.to_int_matrix().scaled(Int(static_cast<long>(q)));
    for (int i = 0; i < rd.rank; ++i) m(i, i) -= 1;
    L.coker = cokernel(m);
    L.group = L.coker.group;

    TwistedCentralizer omega = twisted_centralizer(weyl, weyl.elems[cls.repr]);
    L.omega_elems = omega.elems;
    L.omega_gens = omega.gens;

    std::set<AbHom> distinct;
    bool identity_hit = false;
    for (int idx : omega.elems) {
        AbHom h = induce_endomorphism(weyl.elems[idx].to_int_matrix(), L.coker);
        if (idx != weyl.identity_index) {
            if (h.is_identity()) identity_hit = true;
            distinct.insert(h);
        }
        L.omega_maps.push_back(std::move(h));
    }
    L.faithful = !identity_hit && distinct.size() + 1 == L.omega_maps.size();
    L.nonidentity_maps.assign(distinct.begin(), distinct.end());

    // Omega is a group and descent is a homomorphism, so the element
    // maps are already closed; tests assert this.
    std::set<AbHom> closure(distinct.begin(), distinct.end());
    closure.insert(AbHom::identity(L.group));
    if (static_cast<i64>(closure.size()) > kOmegaClosureCap) throw CapExceeded("Omega image exceeds cap");
    L.image_closure.assign(closure.begin(), closure.end());

    // Frobenius: w^{-1} descends to multiplication by q
    Mat winv = cls.w;
    int ord = matrix_order(cls.w);
    if (ord == 1) winv = Mat::identity(rd.rank);
    for (int i = 0; i < ord - 2; ++i) winv = winv * cls.w;
    L.frobenius = induce_endomorphism(winv.to_int_matrix(), L.coker);
    if (!(L.frobenius == multiplication_by(q, L.group)))
        throw InternalError("Frobenius does not act as multiplication by q");
    return L;
}

inline CharGroupL build_L(const WeylGroup& weyl, const std::vector<TwistedClass>& classes, int class_index, i64 q) {
    CharGroupL L = build_L(weyl, classes[class_index], q);
    L.class_index = class_index;
    return L;
}

/// Trivial stabilizer in Omega: no non-identity element of Omega
/// fixes v.  When Omega acts with a kernel nothing is in general
/// position.
inline bool is_general_position(const CharGroupL& L, const CharacterElt& v) {
    if (!L.faithful) return false;
    for (const AbHom& h : L.nonidentity_maps)
        if (h.apply(v) == v) return false;
    return true;
}

/// Some element of Omega carries v to -v.
inline bool is_conjugate_self_dual(const CharGroupL& L, const CharacterElt& v) {
    CharacterElt nv = L.group.neg(v);
    if (nv == v) return true;  // the identity works
    for (const AbHom& h : L.nonidentity_maps)
        if (h.apply(v) == nv) return true;
    return false;
}

/// First element (canonical order) that is conjugate self-dual and in
/// general position, if any.
inline std::optional<CharacterElt> search_sd_gp(const CharGroupL& L, i64 cap = kDefaultSearchCap) {
    if (L.order() > cap) throw CapExceeded("|L| exceeds the search cap");
    std::optional<CharacterElt> found;
    L.group.for_each([&](const CharacterElt& v) {
        if (is_conjugate_self_dual(L, v) && is_general_position(L, v)) {
            found = v;
            return false;
        }
        return true;
    });
    return found;
}

/// First element in general position (no self-duality condition).
inline std::optional<CharacterElt> search_gp(const CharGroupL& L, i64 cap = kDefaultSearchCap) {
    if (L.order() > cap) throw CapExceeded("|L| exceeds the search cap");
    std::optional<CharacterElt> found;
    L.group.for_each([&](const CharacterElt& v) {
        if (is_general_position(L, v)) {
            found = v;
            return false;
        }
        return true;
    });
    return found;
}

/// Certificate produced by the sweeps: which class and which element.
struct SweepHit {
    int class_index = -1;
    CharacterElt element;
    i64 l_order = 0;
    std::vector<i64> invariant_factors;
};

/// Sweeps every elliptic twisted class for a general-position
/// character; with `self_dual` also requires conjugate self-duality.
inline std::optional<SweepHit> sweep_elliptic_classes(const WeylGroup& weyl, const std::vector<TwistedClass>& classes,
                                                      i64 q, bool self_dual, i64 cap = kDefaultSearchCap) {
    for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
        if (!classes[i].elliptic) continue;
        CharGroupL L = build_L(weyl, classes, i, q);
        std::optional<CharacterElt> v = self_dual ? search_sd_gp(L, cap) : search_gp(L, cap);
        if (v) return SweepHit{i, *v, L.order(), L.group.inv};
    }
    return std::nullopt;
}

inline bool exists_dl(const WeylGroup& weyl, const std::vector<TwistedClass>& classes, i64 q,
                      i64 cap = kDefaultSearchCap) {
    return sweep_elliptic_classes(weyl, classes, q, false, cap).has_value();
}

inline bool exists_sd_dl(const WeylGroup& weyl, const std::vector<TwistedClass>& classes, i64 q,
                         i64 cap = kDefaultSearchCap) {
    return sweep_elliptic_classes(weyl, classes, q, true, cap).has_value();
}

inline bool exists_dl(const RootDatum& rd, i64 q, i64 cap = kDefaultSearchCap) {
    WeylGroup w = enumerate_weyl(rd);
    return exists_dl(w, twisted_classes(w), q, cap);
}

inline bool exists_sd_dl(const RootDatum& rd, i64 q, i64 cap = kDefaultSearchCap) {
    WeylGroup w = enumerate_weyl(rd);
    return exists_sd_dl(w, twisted_classes(w), q, cap);
}

}  // namespace cusp

#endif
