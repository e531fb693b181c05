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

#include "cusp/report.hpp"

using namespace cusp;

TEST_CASE("type token parsing") {
    CHECK(parse_type_token("A") == std::make_pair(1, Series::A));
    CHECK(parse_type_token("2A") == std::make_pair(2, Series::A));
    CHECK(parse_type_token("3D") == std::make_pair(3, Series::D));
    CHECK(parse_type_token("G") == std::make_pair(1, Series::G));
    CHECK_THROWS_AS(parse_type_token("X"), SpecError);
    CHECK_THROWS_AS(parse_type_token(""), SpecError);
}

TEST_CASE("group spec JSON round trip") {
    GroupSpec spec;
    spec.q = 3;
    GroupFactor f1;
    f1.series = Series::A;
    f1.rank = 4;
    f1.twist = 2;
    f1.scalars_degree = 2;
    GroupFactor f2;
    f2.series = Series::D;
    f2.rank = 4;
    f2.twist = 3;
    f2.isogeny = Isogeny::adjoint();
    spec.factors = {f1, f2};

    Json j = spec_to_json(spec);
    GroupSpec back = spec_from_json(j);
    CHECK(back.q == spec.q);
    REQUIRE(back.factors.size() == 2);
    CHECK(back.factors[0].label() == "2A4");
    CHECK(back.factors[0].scalars_degree == 2);
    CHECK(back.factors[1].label() == "3D4");
    CHECK(back.factors[1].isogeny.kind == IsogenyKind::Adjoint);
    CHECK(spec_to_json(back) == j);
}

TEST_CASE("padic spec JSON round trip") {
    PadicSpec spec;
    spec.p = 2;
    spec.q = 4;
    PadicFactor f;
    f.series = Series::A;
    f.rank = 4;
    f.twist = 2;
    f.ramification = Ramification::RamifiedTame;
    f.inner_form = true;
    f.isotropic = true;
    f.residue_degree = 2;
    spec.factors = {f};
    Json j = padic_spec_to_json(spec);
    PadicSpec back = padic_spec_from_json(j);
    CHECK(back.p == 2);
    CHECK(back.factors[0].ramification == Ramification::RamifiedTame);
    CHECK(back.factors[0].inner_form);
    CHECK(padic_spec_to_json(back) == j);
}

TEST_CASE("analyze report carries verdicts and re-verifies") {
    GroupFactor g2;
    g2.series = Series::G;
    g2.rank = 2;
    GroupSpec spec{{g2}, 2};
    Json report = analyze_finite(spec, true);
    CHECK(report.at("schema") == kReportSchema);
    CHECK(report.at("verdicts").at("sd_dl_cuspidal") == "yes");
    CHECK(report.at("oracle").at("agree") == true);
    // the G2(2) certificate lives in Z/7
    const Json& cert = report.at("oracle").at("factors").at(0).at("certificate");
    CHECK(cert.at("invariant_factors") == Json::array({7}));
    CHECK(cert.at("conjugate_self_dual") == true);

    // serialized form re-verifies
    Json reloaded = Json::parse(report.dump());
    CHECK(reverify_report(reloaded));

    // a tampered certificate fails
    Json bad = reloaded;
    bad["oracle"]["factors"][0]["certificate"]["general_position"] = false;
    CHECK(!reverify_report(bad));
}

TEST_CASE("analyze fixtures from the interface contract") {
    {
        // rank 2 split A at q=5: self-dual No
        GroupFactor f;
        f.series = Series::A;
        f.rank = 2;
        Json report = analyze_finite(GroupSpec{{f}, 5}, false);
        CHECK(report.at("verdicts").at("sd_cuspidal") == "no");
    }
    {
        // p=2 q=2 2A4 unramified: outside hypotheses
        PadicFactor f;
        f.series = Series::A;
        f.rank = 4;
        f.twist = 2;
        Json report = analyze_padic(PadicSpec{2, 2, {f}}, false);
        CHECK(report.at("verdicts").at("sd_sc") == "outside-hypotheses");
    }
}

TEST_CASE("table rows and determinism at small rank") {
    auto rows = table_rows(2);
    std::vector<std::string> labels;
    for (const auto& r : rows) labels.push_back(r.label());
    CHECK(labels == std::vector<std::string>{"A1", "A2", "2A2", "B2", "C2", "G2"});

    TableResult t1 = cmd_table(2, {2, 3});
    TableResult t2 = cmd_table(2, {2, 3});
    CHECK(t1.text == t2.text);
    CHECK(t1.csv == t2.csv);
    CHECK(!t1.disagreement);
    // the 2A2 row renders the q=2 cell as outside-hypotheses
    CHECK(t1.text.find("OUT") != std::string::npos);
    // A-even rows are all no
    std::istringstream lines(t1.csv);
    std::string line;
    bool saw_a2 = false;
    while (std::getline(lines, line)) {
        if (line.rfind("A2,", 0) == 0) {
            saw_a2 = true;
            CHECK(line == "A2,no*,no*");
        }
    }
    CHECK(saw_a2);
}

TEST_CASE("report for a forced oracle on an infeasible factor raises") {
    GroupFactor f;
    f.series = Series::E;
    f.rank = 7;
    CHECK_THROWS_AS(analyze_finite(GroupSpec{{f}, 2}, true), OracleInfeasible);
    // without the oracle the decision engine handles E7 fine
    Json report = analyze_finite(GroupSpec{{f}, 2}, false);
    CHECK(report.at("verdicts").at("sd_dl_cuspidal") == "yes");
}
