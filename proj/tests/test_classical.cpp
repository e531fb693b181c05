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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cusp/classical.hpp"
#include <set>

#include "cusp/toruschar.hpp"

using namespace cusp;

namespace {

std::vector<std::vector<int>> part_lists(const std::vector<TorusShape>& shapes) {
    std::vector<std::vector<int>> out;
    for (const auto& s : shapes) out.push_back(s.parts);
    return out;
}

/// Is there a csd+gp element at SU level for this unitary shape?
bool su_sweep_finds(const ProductL& L) {
    SUQuotient su = restrict_to_SU(L);
    bool found = false;
    su.group.for_each([&](const std::vector<i64>& v) {
        if (su_is_conjugate_self_dual(L, su, v) && su_is_general_position(L, su, v)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace

TEST_CASE("shape enumeration") {
    CHECK(part_lists(enumerate_shapes(TorusKind::Unitary, 3)) == std::vector<std::vector<int>>{{3}, {1, 1, 1}});
    CHECK(part_lists(enumerate_shapes(TorusKind::Unitary, 4)) == std::vector<std::vector<int>>{{3, 1}, {1, 1, 1, 1}});
    CHECK(part_lists(enumerate_shapes(TorusKind::OrthogonalNonsplit, 5)) ==
          std::vector<std::vector<int>>{{5}, {3, 1, 1}, {2, 2, 1}, {1, 1, 1, 1, 1}});
    // every unitary part odd; every orthogonal shape has an odd number of parts
    for (const auto& s : enumerate_shapes(TorusKind::Unitary, 9))
        for (int d : s.parts) CHECK(d % 2 == 1);
    for (const auto& s : enumerate_shapes(TorusKind::OrthogonalNonsplit, 6)) CHECK(s.parts.size() % 2 == 1);
}

TEST_CASE("build_product_L fixtures") {
    {
        // (1,1,1) at q=4: (Z/5)^3 with S_3 permutations, trivial factor action
        ProductL L = build_product_L({TorusKind::Unitary, {1, 1, 1}}, 4);
        CHECK(L.orders == std::vector<i64>{5, 5, 5});
        CHECK(L.group.size() == 6);
        for (const ProductAut& g : L.group)
            for (i64 m : g.mult) CHECK(m == 1);
    }
    {
        // (3) at q=2: Z/9 with multiplication by 4
        ProductL L = build_product_L({TorusKind::Unitary, {3}}, 2);
        CHECK(L.orders == std::vector<i64>{9});
        CHECK(L.group.size() == 3);  // <x4> has order 3 mod 9
    }
    {
        // orthogonal (2,2,1) at q=2: Z/5 x Z/5 x Z/3
        ProductL L = build_product_L({TorusKind::OrthogonalNonsplit, {2, 2, 1}}, 2);
        CHECK(L.orders == std::vector<i64>{5, 5, 3});
        CHECK(L.action_model_flag);
    }
    CHECK_THROWS_AS(build_product_L({TorusKind::Unitary, {2, 1}}, 2), ShapeMismatch);
    CHECK_THROWS_AS(build_product_L({TorusKind::OrthogonalNonsplit, {2, 1}}, 2), ShapeMismatch);
}

TEST_CASE("v-element on paired shapes") {
    {
        // (T2, T2) pair at q=3 inside the orthogonal (2,2,1) shape:
        // v = (v2, 3*v2, 0) with v2 of order 5 in Z/10
        ProductL L = build_product_L({TorusKind::OrthogonalNonsplit, {2, 2, 1}}, 3);
        std::vector<i64> v = construct_v_element(L);
        CHECK(v == std::vector<i64>{2, 6, 0});
        CHECK(is_conjugate_self_dual(L, v));
        CHECK(is_general_position(L, v));
        CHECK(L.orders[0] / gcd_i64(v[0], L.orders[0]) == 5);
    }
    {
        // (T3, T3) at q=2: generator pair of Z/9
        TorusShape s{TorusKind::Unitary, {3, 3}};
        ProductL L = build_product_L(s, 2);
        std::vector<i64> v = construct_v_element(L);
        CHECK(v == std::vector<i64>{1, 8});
        CHECK(is_conjugate_self_dual(L, v));
        CHECK(is_general_position(L, v));
    }
    {
        // (T1, T1, T1): (g, -g, 0)
        TorusShape s{TorusKind::Unitary, {1, 1, 1}};
        for (i64 q : {2, 3, 4, 5}) {
            ProductL L = build_product_L(s, q);
            std::vector<i64> v = construct_v_element(L);
            CHECK(v == std::vector<i64>{1, q, 0});
            CHECK(is_conjugate_self_dual(L, v));
            CHECK(is_general_position(L, v));
        }
    }
    // shape mismatches
    CHECK_THROWS_AS(construct_v_element(build_product_L({TorusKind::Unitary, {3, 3, 3}}, 2)), ShapeMismatch);
    CHECK_THROWS_AS(construct_v_element(build_product_L({TorusKind::Unitary, {1, 1, 1, 1, 1}}, 2)), ShapeMismatch);
}

TEST_CASE("v-element across k <= 5 at q in {2,3}") {
    for (i64 q : {2, 3}) {
        for (int k : {2, 3, 4, 5}) {
            for (int r : {0, 1, 2, 3}) {
                std::vector<int> parts{k, k};
                for (int i = 0; i < r; ++i) parts.push_back(1);
                TorusKind kind = (k % 2 == 1) ? TorusKind::Unitary : TorusKind::OrthogonalNonsplit;
                if (kind == TorusKind::OrthogonalNonsplit && parts.size() % 2 == 0) parts.push_back(1);
                TorusShape s{kind, parts};
                if (!s.valid()) continue;
                ProductL L = build_product_L(s, q);
                std::vector<i64> v = construct_v_element(L);
                CHECK(is_conjugate_self_dual(L, v));
                CHECK(is_general_position(L, v));
            }
        }
        // two distinct pairs
        ProductL L2 = build_product_L({TorusKind::Unitary, {5, 5, 3, 3}}, q);
        std::vector<i64> v2 = construct_v_element(L2);
        CHECK(is_conjugate_self_dual(L2, v2));
        CHECK(is_general_position(L2, v2));
    }
}

TEST_CASE("good shapes produce odd-order orbits") {
    // (2,2,1) orthogonal: the nonsplit SO(10) route needs an odd-order character
    for (i64 q : {2, 3}) {
        ProductL L = build_product_L({TorusKind::OrthogonalNonsplit, {2, 2, 1}}, q);
        std::vector<i64> v = construct_v_element(L);
        for (const ProductAut& g : L.group) {
            std::vector<i64> u = L.apply(g, v);
            i64 o = 1;
            for (int j = 0; j < L.nfactors(); ++j) {
                i64 oj = L.orders[j] / gcd_i64(u[j], L.orders[j]);
                o = o / gcd_i64(o, oj) * oj;
            }
            CHECK(o % 2 == 1);
            if (q != 2) CHECK(gcd_i64(o, q + 1) == 1);
        }
    }
}

TEST_CASE("crude U(n) element") {
    {
        auto [L, v] = construct_u_crude(3, 4);
        CHECK(v == std::vector<i64>{0, 1, 4});
        CHECK(is_conjugate_self_dual(L, v));
        CHECK(is_general_position(L, v));
    }
    {
        auto [L, v] = construct_u_crude(4, 4);
        CHECK(v == std::vector<i64>{1, 4, 2, 3});
        CHECK(is_general_position(L, v));
    }
    {
        // q even, n odd boundary: q = n - 1 passes at U level
        auto [L, v] = construct_u_crude(3, 2);
        CHECK(v == std::vector<i64>{0, 1, 2});
        CHECK(is_conjugate_self_dual(L, v));
        CHECK(is_general_position(L, v));
        // ... but the SU restriction is not in general position
        SUQuotient su = restrict_to_SU(L);
        CHECK(!su_is_general_position(L, su, su.project(v)));
    }
    CHECK_THROWS_AS(construct_u_crude(4, 3), FieldTooSmall);
    CHECK_THROWS_AS(construct_u_crude(5, 3), FieldTooSmall);
}

TEST_CASE("SU restriction fixtures") {
    {
        // n=3, q=4: image stays in general position
        auto [L, v] = construct_u_crude(3, 4);
        SUQuotient su = restrict_to_SU(L);
        CHECK(su.group.order() == 125 / 5);
        CHECK(su_is_general_position(L, su, su.project(v)));
        CHECK(su_is_conjugate_self_dual(L, su, su.project(v)));
    }
    {
        // n=4, q=5: q = n+1 failure, image invariant under the order-2 shift
        auto [L, v] = construct_u_crude(4, 5);
        SUQuotient su = restrict_to_SU(L);
        CHECK(!su_is_general_position(L, su, su.project(v)));
    }
}

TEST_CASE("sum-zero subgroup") {
    {
        ProductL L = build_product_L({TorusKind::Unitary, {1, 1, 1}}, 2);
        auto elems = sum_zero_elements(L);
        CHECK(elems.size() == 9);  // kernel of the sum map on (Z/3)^3
        SumZeroSubgroup sz = sum_zero_subgroup(L);
        // closed under the action
        for (const auto& v : elems)
            for (const ProductAut& g : L.group) CHECK(sz.contains(L.apply(g, v)));
    }
    {
        ProductL L = build_product_L({TorusKind::Unitary, {3, 3, 1, 1}}, 2);
        SumZeroSubgroup sz = sum_zero_subgroup(L);
        // contains (c, -c, d, -d)
        CHECK(sz.contains({1, 8, 1, 2}));
        CHECK(!sz.contains({1, 0, 0, 0}));
    }
    {
        ProductL L = build_product_L({TorusKind::Unitary, {1, 1, 1, 1, 1}}, 4);
        auto [Lc, v] = construct_u_crude(5, 4);
        CHECK(sum_zero_subgroup(L).contains(v));
    }
}

TEST_CASE("SU(8) and SU(12) constructions verify") {
    for (i64 q : {2, 3}) {
        for (int n : {8, 12}) {
            Su812Result r = construct_su8_12(n, q);
            CHECK(is_conjugate_self_dual(r.L, r.v));
            CHECK(is_general_position(r.L, r.v));
            CHECK(sum_zero_subgroup(r.L).contains(r.v));
            CHECK(su_is_general_position(r.L, r.su, r.v_su));
            CHECK(su_is_conjugate_self_dual(r.L, r.su, r.v_su));
        }
    }
    // n=8, q=2 has no prime order coprime to q+1 in Z/9: fallback search
    CHECK(!construct_su8_12(8, 2).scripted);
    CHECK(construct_su8_12(12, 2).scripted);
    CHECK(construct_su8_12(8, 3).scripted);
}

TEST_CASE("cross-model agreement for 2A3") {
    // matrix model existence == product model existence after SU
    // restriction, over the two elliptic shapes of SU(4)
    for (i64 q : {2, 3}) {
        WeylGroup w = enumerate_weyl(build_root_datum(Series::A, 3, 2, Isogeny::sc()));
        auto classes = twisted_classes(w);
        bool matrix_verdict = exists_sd_dl(w, classes, q);

        bool product_verdict = false;
        for (const TorusShape& s : enumerate_shapes(TorusKind::Unitary, 4))
            if (su_sweep_finds(build_product_L(s, q))) product_verdict = true;
        CHECK(matrix_verdict == product_verdict);
    }
}

TEST_CASE("per-shape order agreement between the two models for 2A3") {
    // the elliptic class whose characteristic polynomial matches a
    // shape has |L| = prod (q^{d_i}+1) / (q+1) at the SU level
    for (i64 q : {2, 3}) {
        WeylGroup w = enumerate_weyl(build_root_datum(Series::A, 3, 2, Isogeny::sc()));
        auto classes = twisted_classes(w);
        std::multiset<i64> matrix_orders;
        for (const auto& c : classes)
            if (c.elliptic) matrix_orders.insert(to_i64(abs(poly_eval(c.charpoly, Int(static_cast<long>(q))))));
        std::multiset<i64> product_orders;
        for (const TorusShape& s : enumerate_shapes(TorusKind::Unitary, 4)) {
            ProductL L = build_product_L(s, q);
            product_orders.insert(restrict_to_SU(L).group.order());
        }
        CHECK(matrix_orders == product_orders);
    }
}
