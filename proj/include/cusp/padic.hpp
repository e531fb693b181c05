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

#ifndef CUSP_PADIC_HPP
#define CUSP_PADIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "cusp/errors.hpp"
#include "cusp/existence.hpp"
#include "cusp/rootdatum.hpp"

namespace cusp {

namespace rules {
inline constexpr const char* kDepthZeroAlways = "rule:depth-zero-unconditional";
inline constexpr const char* kRegularViaQuotient = "rule:regular-depth-zero-via-quotient";
inline constexpr const char* kSdRegularDepthZero = "rule:sd-regular-depth-zero";
inline constexpr const char* kAEvenIsotropicInnerSplit = "rule:a-even-isotropic-inner-split";
inline constexpr const char* kP2SelfDual = "rule:p2-self-dual";
inline constexpr const char* kP2Q2SmallUnitary = "rule:p2-q2-small-unitary-exclusion";
inline constexpr const char* kOutsideTorusHyp = "rule:outside-torus-hypothesis";
inline constexpr const char* kAEvenRegularGap = "rule:a-even-regular-undetermined";
inline constexpr const char* kAnisotropicAEven = "note:anisotropic-a-even-self-duals-not-regular";
}  // namespace rules

enum class Ramification { Unramified, RamifiedTame, Wild };

inline const char* to_string(Ramification r) {
    switch (r) {
        case Ramification::Unramified: return "unramified";
        case Ramification::RamifiedTame: return "ramified";
        case Ramification::Wild: return "wild";
    }
    return "?";
}

/// One F-almost-simple factor of a p-adic group.  `ramification`
/// describes the splitting of the twist; `residue_degree` is the
/// residual degree of the restriction-of-scalars field, so the
/// reductive quotient at an absolutely special vertex lives over
/// q^residue_degree.
struct PadicFactor {
    Series series = Series::A;
    int rank = 1;
    int twist = 1;
    Ramification ramification = Ramification::Unramified;
    bool inner_form = false;
    bool isotropic = true;
    int residue_degree = 1;
    Isogeny isogeny = Isogeny::sc();

    std::string label() const {
        std::string s;
        if (twist > 1) s += static_cast<char>('0' + twist);
        s += static_cast<char>(series);
        s += std::to_string(rank);
        if (ramification != Ramification::Unramified) s += std::string(":") + to_string(ramification);
        return s;
    }
};

struct PadicSpec {
    i64 p = 2;
    i64 q = 2;
    std::vector<PadicFactor> factors;
};

inline void validate_padic_spec(const PadicSpec& spec) {
    if (!is_prime_i64(spec.p)) throw SpecError("residue characteristic must be prime");
    i64 q = spec.q;
    while (q > 1 && q % spec.p == 0) q /= spec.p;
    if (q != 1 || spec.q < 2) throw SpecError("residue field size must be a power of p");
    if (spec.factors.empty()) throw SpecError("the group needs at least one factor");
    for (const PadicFactor& f : spec.factors) {
        if (f.residue_degree < 1) throw SpecError("residue degree must be positive");
        try {
            cartan_matrix(f.series, f.rank);
            diagram_automorphism(f.series, f.rank, f.twist);
        } catch (const UnsupportedType& e) {
            throw SpecError(std::string("factor ") + f.label() + ": " + e.what());
        }
        if (!f.inner_form && !f.isotropic) throw SpecError("quasi-split semisimple factors are isotropic");
        if (!f.isotropic && (f.series != Series::A || f.twist != 1))
            throw SpecError("anisotropic factors only occur in inner type A");
    }
}

/// The type of the corresponding factor of the reductive quotient at
/// an absolutely special vertex of the quasi-split inner form.
/// Unramified factors keep their type over the residue extension;
/// ramified twists land in non-simply-laced types, which is all any
/// rule needs to know about them.
struct QuotientType {
    bool non_simply_laced = false;
    GroupFactor finite;  // meaningful only when !non_simply_laced
};

inline QuotientType reductive_quotient_type(const PadicFactor& f) {
    QuotientType out;
    if (f.twist > 1 && f.ramification != Ramification::Unramified) {
        out.non_simply_laced = true;
        return out;
    }
    out.finite.series = f.series;
    out.finite.rank = f.rank;
    out.finite.twist = f.twist;
    out.finite.scalars_degree = f.residue_degree;
    out.finite.isogeny = f.isogeny;
    return out;
}

/// Finite-engine spec for the reductive quotient; only available when
/// every factor is unramified.
inline GroupSpec finite_quotient_spec(const PadicSpec& spec) {
    GroupSpec g;
    g.q = spec.q;
    for (const PadicFactor& f : spec.factors) {
        QuotientType qt = reductive_quotient_type(f);
        if (qt.non_simply_laced) throw SpecError("ramified factors have no unramified finite avatar");
        g.factors.push_back(qt.finite);
    }
    return g;
}

enum class TorusHypCase { UnramifiedSplitting = 1, WildSplitting, SimplyConnected, Unitary, ResidueCharTwo };

struct TorusHypStatus {
    bool satisfied = false;
    std::optional<TorusHypCase> matched;
};

/// The torus-decomposition hypothesis holds in five recognized
/// situations, checked in order; anything else is Unknown.
inline TorusHypStatus torus_hypothesis_status(const PadicFactor& f, i64 p) {
    if (f.ramification == Ramification::Unramified) return {true, TorusHypCase::UnramifiedSplitting};
    if (f.ramification == Ramification::Wild) return {true, TorusHypCase::WildSplitting};
    if (f.isogeny.kind == IsogenyKind::SimplyConnected) return {true, TorusHypCase::SimplyConnected};
    if (f.series == Series::A && f.twist == 2) return {true, TorusHypCase::Unitary};
    if (p == 2) return {true, TorusHypCase::ResidueCharTwo};
    return {false, std::nullopt};
}

struct PadicDecision {
    Verdict depth0_sc = Verdict::Yes;
    Verdict regular_depth0_sc = Verdict::OutsideHypotheses;
    Verdict sd_sc = Verdict::OutsideHypotheses;
    Verdict sd_regular_depth0_sc = Verdict::OutsideHypotheses;
    HypothesisStatus hyp;      // finite hypotheses on the reductive quotient types
    bool torus_hyp_all = false;
    std::vector<std::pair<std::string, std::string>> citations;
    std::vector<std::string> annotations;
};

inline PadicDecision decide_padic(const PadicSpec& spec) {
    validate_padic_spec(spec);
    PadicDecision d;

    d.depth0_sc = Verdict::Yes;
    d.citations.emplace_back("depth0_sc", rules::kDepthZeroAlways);

    // hypotheses are evaluated on the reductive quotient types with
    // their effective residue fields
    GroupSpec quotient;
    quotient.q = spec.q;
    for (const PadicFactor& f : spec.factors) {
        QuotientType qt = reductive_quotient_type(f);
        if (!qt.non_simply_laced) quotient.factors.push_back(qt.finite);
    }
    if (!quotient.factors.empty())
        d.hyp = check_hypotheses(quotient);

    d.torus_hyp_all = true;
    for (const PadicFactor& f : spec.factors)
        if (!torus_hypothesis_status(f, spec.p).satisfied) d.torus_hyp_all = false;

    bool a_even = false, a_even_isotropic_inner_split = false, a_even_anisotropic = false;
    for (const PadicFactor& f : spec.factors) {
        if (f.series != Series::A || f.twist != 1 || f.rank % 2 != 0) continue;
        a_even = true;
        if (f.isotropic)
            a_even_isotropic_inner_split = true;  // every inner type A factor is inner of split
        else
            a_even_anisotropic = true;
    }

    if (d.hyp.hyp_a) {
        d.regular_depth0_sc = Verdict::Yes;
        d.citations.emplace_back("regular_depth0_sc", rules::kRegularViaQuotient);
    } else {
        d.regular_depth0_sc = Verdict::OutsideHypotheses;
        d.citations.emplace_back("regular_depth0_sc", rules::kOutsideHypA);
    }

    const char* outside_rule = !d.hyp.hyp_a   ? rules::kOutsideHypA
                               : !d.hyp.hyp_b ? rules::kOutsideHypB
                               : !d.torus_hyp_all ? rules::kOutsideTorusHyp
                                                  : rules::kAEvenRegularGap;

    // self-dual regular depth zero
    if (spec.p % 2 == 1 && a_even_isotropic_inner_split) {
        d.sd_regular_depth0_sc = Verdict::No;
        d.citations.emplace_back("sd_regular_depth0_sc", rules::kAEvenIsotropicInnerSplit);
    } else if (!a_even && d.hyp.hyp_a && d.hyp.hyp_b && d.torus_hyp_all) {
        d.sd_regular_depth0_sc = Verdict::Yes;
        d.citations.emplace_back("sd_regular_depth0_sc", rules::kSdRegularDepthZero);
    } else {
        d.sd_regular_depth0_sc = Verdict::OutsideHypotheses;
        d.citations.emplace_back("sd_regular_depth0_sc", outside_rule);
    }

    // self-dual supercuspidal of any depth
    if (spec.p == 2) {
        bool small_unitary_block = false;
        for (const PadicFactor& f : spec.factors) {
            if (f.series != Series::A || f.twist != 2 || f.ramification != Ramification::Unramified) continue;
            if ((f.rank == 3 || f.rank == 4) && effective_q(spec.q, f.residue_degree) == std::optional<i64>(2))
                small_unitary_block = true;
        }
        if (small_unitary_block) {
            d.sd_sc = Verdict::OutsideHypotheses;
            d.citations.emplace_back("sd_sc", rules::kP2Q2SmallUnitary);
        } else {
            d.sd_sc = Verdict::Yes;
            d.citations.emplace_back("sd_sc", rules::kP2SelfDual);
        }
    } else {
        if (a_even_isotropic_inner_split) {
            d.sd_sc = Verdict::No;
            d.citations.emplace_back("sd_sc", rules::kAEvenIsotropicInnerSplit);
        } else if (d.sd_regular_depth0_sc == Verdict::Yes) {
            d.sd_sc = Verdict::Yes;
            d.citations.emplace_back("sd_sc", rules::kSdRegularDepthZero);
        } else {
            d.sd_sc = Verdict::OutsideHypotheses;
            d.citations.emplace_back("sd_sc", outside_rule);
        }
    }

    if (a_even_anisotropic)
        d.annotations.push_back(std::string(rules::kAnisotropicAEven) +
                                ": anisotropic inner type A factors carry self-dual supercuspidals "
                                "(the trivial representation among them), none regular");
    for (const GroupFactor& f : quotient.factors)
        if (f.series == Series::A && f.twist == 2 && f.rank == 2)
            d.annotations.push_back(std::string(rules::kSu3Unipotent) + ": reductive quotient factor " + f.label() +
                                    " has a self-dual cuspidal unipotent representation");
    return d;
}

}  // namespace cusp

#endif
