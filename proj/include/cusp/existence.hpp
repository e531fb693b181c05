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

#ifndef CUSP_EXISTENCE_HPP
#define CUSP_EXISTENCE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cusp/classical.hpp"
#include "cusp/errors.hpp"
#include "cusp/rootdatum.hpp"
#include "cusp/toruschar.hpp"
#include "cusp/zsygmondy.hpp"

namespace cusp {

enum class Verdict { Yes, No, OutsideHypotheses };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::OutsideHypotheses: return "outside-hypotheses";
    }
    return "?";
}

/// Stable identifiers for the decision rules; reports cite these.
namespace rules {
inline constexpr const char* kCuspidalAlways = "rule:cuspidal-unconditional";
inline constexpr const char* kDlUnderHypA = "rule:dl-under-hyp-a";
inline constexpr const char* kOutsideHypA = "rule:outside-hyp-a";
inline constexpr const char* kAEvenExclusion = "rule:a-even-exclusion";
inline constexpr const char* kSdUnderHypAB = "rule:sd-under-hyp-ab";
inline constexpr const char* kOutsideHypB = "rule:outside-hyp-b";
inline constexpr const char* kSu3Unipotent = "note:su3-unipotent-self-dual";
inline constexpr const char* kIsogenyTrivialKernel = "rule:isogeny-trivial-kernel";
inline constexpr const char* kIsogenyOddKernelSd = "rule:isogeny-odd-kernel-sd";
inline constexpr const char* kIsogenyOddKernelDlForward = "rule:isogeny-odd-kernel-dl-forward";
}  // namespace rules

/// Effective field size q^n, or nothing on overflow.
inline std::optional<i64> effective_q(i64 q, int scalars_degree) {
    i64 r = 1;
    for (int i = 0; i < scalars_degree; ++i) {
        if (r > (static_cast<i64>(1) << 60) / q) return std::nullopt;
        r *= q;
    }
    return r;
}

inline void validate_spec(const GroupSpec& spec) {
    if (spec.q < 2) throw SpecError("field size must be at least 2");
    if (spec.factors.empty()) throw SpecError("the group needs at least one factor");
    for (const GroupFactor& f : spec.factors) {
        if (f.scalars_degree < 1) throw SpecError("restriction-of-scalars degree must be positive");
        try {
            cartan_matrix(f.series, f.rank);
            diagram_automorphism(f.series, f.rank, f.twist);
        } catch (const UnsupportedType& e) {
            throw SpecError(std::string("factor ") + f.label() + ": " + e.what());
        }
    }
}

/// Hypothesis gates on small unitary factors: (a) no 2A2 over F_2;
/// (b) none of 2A2/F_3,F_4, 2A3/F_2,F_3,F_5, 2A4/F_2..F_5.
struct HypothesisStatus {
    bool hyp_a = true;
    bool hyp_b = true;
    std::vector<std::string> violations_a;
    std::vector<std::string> violations_b;
};

inline bool is_bad_unitary_b(int k, i64 qi) {
    if (k == 2) return qi == 3 || qi == 4;
    if (k == 3) return qi == 2 || qi == 3 || qi == 5;
    if (k == 4) return qi >= 2 && qi <= 5;
    return false;
}

inline HypothesisStatus check_hypotheses(const GroupSpec& spec) {
    HypothesisStatus h;
    for (const GroupFactor& f : spec.factors) {
        if (f.series != Series::A || f.twist != 2) continue;
        auto qi = effective_q(spec.q, f.scalars_degree);
        if (!qi) continue;  // enormous field: no small-field exclusion applies
        std::string tag = f.label() + "(" + std::to_string(*qi) + ")";
        if (f.rank == 2 && *qi == 2) {
            h.hyp_a = false;
            h.violations_a.push_back(tag);
        }
        if (is_bad_unitary_b(f.rank, *qi)) {
            h.hyp_b = false;
            h.violations_b.push_back(tag);
        }
    }
    return h;
}

inline bool has_a_even_factor(const GroupSpec& spec) {
    for (const GroupFactor& f : spec.factors)
        if (f.series == Series::A && f.twist == 1 && f.rank % 2 == 0) return true;
    return false;
}

/// Is ell coprime to the center order of the simply connected form?
inline bool center_coprimality(Series s, int rank, i64 /*q*/, i64 ell) {
    RootDatum rd = build_root_datum(s, rank, 1, Isogeny::sc());
    return gcd_i64(ell, rd.center_order) == 1;
}

struct FiniteDecision {
    Verdict cuspidal = Verdict::Yes;
    Verdict dl_cuspidal = Verdict::OutsideHypotheses;
    Verdict sd_cuspidal = Verdict::OutsideHypotheses;
    Verdict sd_dl_cuspidal = Verdict::OutsideHypotheses;
    HypothesisStatus hyp;
    std::vector<std::pair<std::string, std::string>> citations;  // (verdict, rule)
    std::vector<std::string> annotations;
};

inline FiniteDecision decide_finite(const GroupSpec& spec) {
    validate_spec(spec);
    FiniteDecision d;
    d.hyp = check_hypotheses(spec);

    d.cuspidal = Verdict::Yes;
    d.citations.emplace_back("cuspidal", rules::kCuspidalAlways);

    if (d.hyp.hyp_a) {
        d.dl_cuspidal = Verdict::Yes;
        d.citations.emplace_back("dl_cuspidal", rules::kDlUnderHypA);
    } else {
        d.dl_cuspidal = Verdict::OutsideHypotheses;
        d.citations.emplace_back("dl_cuspidal", rules::kOutsideHypA);
    }

    if (has_a_even_factor(spec)) {
        d.sd_cuspidal = d.sd_dl_cuspidal = Verdict::No;
        d.citations.emplace_back("sd_cuspidal", rules::kAEvenExclusion);
        d.citations.emplace_back("sd_dl_cuspidal", rules::kAEvenExclusion);
    } else if (d.hyp.hyp_a && d.hyp.hyp_b) {
        d.sd_cuspidal = d.sd_dl_cuspidal = Verdict::Yes;
        d.citations.emplace_back("sd_cuspidal", rules::kSdUnderHypAB);
        d.citations.emplace_back("sd_dl_cuspidal", rules::kSdUnderHypAB);
    } else {
        d.sd_cuspidal = d.sd_dl_cuspidal = Verdict::OutsideHypotheses;
        d.citations.emplace_back("sd_cuspidal", d.hyp.hyp_a ? rules::kOutsideHypB : rules::kOutsideHypA);
        d.citations.emplace_back("sd_dl_cuspidal", d.hyp.hyp_a ? rules::kOutsideHypB : rules::kOutsideHypA);
    }

    for (const GroupFactor& f : spec.factors)
        if (f.series == Series::A && f.twist == 2 && f.rank == 2)
            d.annotations.push_back(std::string(rules::kSu3Unipotent) + ": factor " + f.label() +
                                    " has a self-dual cuspidal unipotent representation");
    return d;
}

// ---------------------------------------------------------------------------
// isogeny transfer

enum class KernelKind { NoRationalPoints, OddOrder, EvenOrMixed, Unknown };

/// Verdicts transported along a central isogeny G -> G'.  `forward`
/// means the target of the transfer is G'.  Fields left empty mean
/// the rules are silent.
struct TransferResult {
    std::optional<Verdict> cuspidal;
    std::optional<Verdict> dl_cuspidal;
    std::optional<Verdict> sd_cuspidal;
    std::optional<Verdict> sd_dl_cuspidal;
    std::vector<std::string> rules_applied;
};

inline TransferResult transfer_rules(const FiniteDecision& source, KernelKind kernel, bool forward) {
    TransferResult t;
    switch (kernel) {
        case KernelKind::Unknown: throw UnknownKernel("isogeny kernel data is missing");
        case KernelKind::NoRationalPoints:
            // rational points are isomorphic: everything moves, both ways
            t.cuspidal = source.cuspidal;
            t.dl_cuspidal = source.dl_cuspidal;
            t.sd_cuspidal = source.sd_cuspidal;
            t.sd_dl_cuspidal = source.sd_dl_cuspidal;
            t.rules_applied.push_back(rules::kIsogenyTrivialKernel);
            break;
        case KernelKind::OddOrder:
            // self-dual cuspidal existence is an iff; the DL refinement
            // only pushes forward
            t.sd_cuspidal = source.sd_cuspidal;
            t.rules_applied.push_back(rules::kIsogenyOddKernelSd);
            if (forward && source.sd_dl_cuspidal == Verdict::Yes) {
                t.sd_dl_cuspidal = Verdict::Yes;
                t.rules_applied.push_back(rules::kIsogenyOddKernelDlForward);
            }
            break;
        case KernelKind::EvenOrMixed:
            break;  // rules are silent
    }
    return t;
}

// ---------------------------------------------------------------------------
// rule-vs-oracle verification

struct FactorOracle {
    std::string label;
    i64 q_eff = 0;
    bool dl_exists = false;
    bool sd_dl_exists = false;
    std::optional<SweepHit> dl_hit;
    std::optional<SweepHit> sd_hit;
    Mat class_repr;  // representative of the witnessing class (sd if found, else dl)
};

struct OracleRecord {
    std::vector<FactorOracle> factors;
    bool dl_exists = true;     // product has a gp character iff every factor does
    bool sd_dl_exists = true;  // likewise with self-duality
    bool agree = true;
    std::vector<std::string> disagreements;
};

/// Runs the brute-force sweeps behind decide_finite and records
/// agreement.  Factors beyond the enumeration or search limits raise
/// OracleInfeasible naming the offender.
inline OracleRecord verify_decision(const GroupSpec& spec, i64 cap = kDefaultSearchCap) {
    validate_spec(spec);
    FiniteDecision rule = decide_finite(spec);
    OracleRecord rec;
    for (const GroupFactor& f : spec.factors) {
        FactorOracle fo;
        fo.label = f.label();
        auto qi = effective_q(spec.q, f.scalars_degree);
        if (!qi) throw OracleInfeasible("factor " + f.label() + ": effective field size overflows");
        fo.q_eff = *qi;
        RootDatum rd;
        WeylGroup w;
        try {
            rd = build_root_datum(f.series, f.rank, f.twist, f.isogeny);
            w = enumerate_weyl(rd);
        } catch (const TooLarge& e) {
            throw OracleInfeasible("factor " + f.label() + ": " + e.what());
        }
        auto classes = twisted_classes(w);
        try {
            auto dl = sweep_elliptic_classes(w, classes, fo.q_eff, false, cap);
            auto sd = sweep_elliptic_classes(w, classes, fo.q_eff, true, cap);
            fo.dl_exists = dl.has_value();
            fo.sd_dl_exists = sd.has_value();
            fo.dl_hit = dl;
            fo.sd_hit = sd;
            if (sd)
                fo.class_repr = w.elems[classes[sd->class_index].repr];
            else if (dl)
                fo.class_repr = w.elems[classes[dl->class_index].repr];
        } catch (const CapExceeded& e) {
            throw OracleInfeasible("factor " + f.label() + ": " + e.what());
        }
        rec.dl_exists = rec.dl_exists && fo.dl_exists;
        rec.sd_dl_exists = rec.sd_dl_exists && fo.sd_dl_exists;
        rec.factors.push_back(std::move(fo));
    }

    auto mismatch = [&](const std::string& what) {
        rec.agree = false;
        rec.disagreements.push_back(what);
    };
    if (rule.dl_cuspidal == Verdict::Yes && !rec.dl_exists) mismatch("rule says DL cuspidals exist; sweep found none");
    if (rule.sd_dl_cuspidal == Verdict::Yes && !rec.sd_dl_exists)
        mismatch("rule says self-dual DL cuspidals exist; sweep found none");
    if (rule.sd_dl_cuspidal == Verdict::No && rec.sd_dl_exists)
        mismatch("rule says no self-dual DL cuspidals; sweep found one");
    return rec;
}

}  // namespace cusp

#endif
