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

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cusp/cusp.hpp"

namespace {

using namespace cusp;

i64 default_cap() {
    if (const char* env = std::getenv("CUSP_CAP")) {
        i64 cap = std::atoll(env);
        if (cap > 0) return cap;
    }
    return kDefaultSearchCap;
}

/// "2A4" -> (twist 2, series A, rank 4)
GroupFactor parse_inline_type(const std::string& type, int rank) {
    auto [twist, series] = parse_type_token(type);
    GroupFactor f;
    f.series = series;
    f.rank = rank;
    f.twist = twist;
    return f;
}

/// "2A4:unramified[:inner][:anisotropic][:adjoint|:sc][:res=N]"
PadicFactor parse_padic_factor(const std::string& str) {
    std::vector<std::string> parts;
    std::stringstream ss(str);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw SpecError("empty factor descriptor");

    const std::string& head = parts[0];
    size_t i = 0;
    if (i < head.size() && (head[i] == '2' || head[i] == '3')) ++i;
    if (i < head.size() && std::isalpha(static_cast<unsigned char>(head[i]))) ++i;
    if (i >= head.size() || !std::isdigit(static_cast<unsigned char>(head[i])))
        throw SpecError("factor descriptor needs a rank: '" + str + "'");
    auto [twist, series] = parse_type_token(head.substr(0, i));
    PadicFactor f;
    f.series = series;
    f.twist = twist;
    f.rank = std::atoi(head.c_str() + i);

    for (size_t k = 1; k < parts.size(); ++k) {
        const std::string& tok = parts[k];
        if (tok == "unramified" || tok == "ramified" || tok == "wild")
            f.ramification = ramification_from_string(tok);
        else if (tok == "inner")
            f.inner_form = true;
        else if (tok == "anisotropic")
            f.isotropic = false;
        else if (tok == "sc")
            f.isogeny = Isogeny::sc();
        else if (tok == "adjoint")
            f.isogeny = Isogeny::adjoint();
        else if (tok.rfind("res=", 0) == 0)
            f.residue_degree = std::atoi(tok.c_str() + 4);
        else
            throw SpecError("unknown factor attribute '" + tok + "'");
    }
    return f;
}

void print_verdict_block(const Json& report) {
    const Json& verdicts = report.at("verdicts");
    const Json& citations = report.at("citations");
    for (auto& [name, verdict] : verdicts.items()) {
        std::ostringstream line;
        line << "  " << name << std::string(name.size() < 24 ? 24 - name.size() : 1, ' ')
             << verdict.get<std::string>();
        if (citations.contains(name)) {
            line << "   [";
            bool first = true;
            for (const Json& rule : citations.at(name)) {
                if (!first) line << ", ";
                line << rule.get<std::string>();
                first = false;
            }
            line << "]";
        }
        std::cout << line.str() << "\n";
    }
}

void print_report(const Json& report) {
    std::cout << report.at("schema").get<std::string>() << " (" << report.at("kind").get<std::string>() << ")\n";
    std::cout << "input: " << report.at("input").dump() << "\n";
    std::cout << "verdicts:\n";
    print_verdict_block(report);
    const Json& hyp = report.at("hypotheses");
    std::cout << "hypotheses: a=" << (hyp.at("hyp_a").get<bool>() ? "ok" : "violated")
              << " b=" << (hyp.at("hyp_b").get<bool>() ? "ok" : "violated");
    if (hyp.contains("torus_hyp_all"))
        std::cout << " torus-decomposition=" << (hyp.at("torus_hyp_all").get<bool>() ? "ok" : "unknown");
    std::cout << "\n";
    for (const Json& a : report.at("annotations")) std::cout << "note: " << a.get<std::string>() << "\n";
    if (report.contains("oracle")) {
        const Json& oracle = report.at("oracle");
        std::cout << "oracle: agree=" << (oracle.at("agree").get<bool>() ? "yes" : "NO")
                  << " dl=" << (oracle.at("dl_exists").get<bool>() ? "yes" : "no")
                  << " sd_dl=" << (oracle.at("sd_dl_exists").get<bool>() ? "yes" : "no") << "\n";
        for (const Json& jf : oracle.at("factors")) {
            std::cout << "  factor " << jf.at("factor").get<std::string>() << " over F_" << jf.at("q_eff").get<i64>()
                      << ": dl=" << (jf.at("dl_exists").get<bool>() ? "yes" : "no")
                      << " sd_dl=" << (jf.at("sd_dl_exists").get<bool>() ? "yes" : "no");
            if (jf.contains("certificate")) {
                const Json& c = jf.at("certificate");
                std::cout << "  certificate: |L|=" << c.at("l_order").get<i64>()
                          << " invariants=" << c.at("invariant_factors").dump()
                          << " element=" << c.at("element").dump();
            }
            std::cout << "\n";
        }
    }
}

struct AnalyzeOptions {
    std::string spec_path;
    std::string type;
    int rank = 0;
    i64 q = 0;
    std::string isogeny = "sc";
    int scalars = 1;
    bool padic = false;
    i64 p = 0;
    std::vector<std::string> factors;
    bool force_oracle = false;
    std::string json_path;
    i64 cap = 0;
};

int run_analyze(const AnalyzeOptions& opt) {
    Json report;
    i64 cap = opt.cap > 0 ? opt.cap : default_cap();
    if (!opt.spec_path.empty()) {
        std::ifstream in(opt.spec_path);
        if (!in) throw SpecError("cannot open spec file '" + opt.spec_path + "'");
        Json j = Json::parse(in, nullptr, true, true);
        if (j.contains("p"))
            report = analyze_padic(padic_spec_from_json(j), opt.force_oracle, cap);
        else
            report = analyze_finite(spec_from_json(j), opt.force_oracle, cap);
    } else if (opt.padic) {
        if (opt.p < 2 || opt.q < 2) throw SpecError("p-adic analysis needs --p and --q");
        PadicSpec spec;
        spec.p = opt.p;
        spec.q = opt.q;
        for (const std::string& fs : opt.factors) spec.factors.push_back(parse_padic_factor(fs));
        report = analyze_padic(spec, opt.force_oracle, cap);
    } else {
        if (opt.type.empty() || opt.rank <= 0 || opt.q < 2)
            throw SpecError("inline analysis needs --type, --rank and --q");
        GroupFactor f = parse_inline_type(opt.type, opt.rank);
        if (opt.isogeny == "sc")
            f.isogeny = Isogeny::sc();
        else if (opt.isogeny == "adjoint")
            f.isogeny = Isogeny::adjoint();
        else
            throw SpecError("unknown isogeny '" + opt.isogeny + "'");
        f.scalars_degree = opt.scalars;
        report = analyze_finite(GroupSpec{{f}, opt.q}, opt.force_oracle, cap);
    }
    print_report(report);
    if (!opt.json_path.empty()) {
        std::ofstream out(opt.json_path);
        out << report.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"existence of (self-dual) cuspidal and depth-zero supercuspidal representations"};
    app.require_subcommand(1);

    AnalyzeOptions aopt;
    CLI::App* analyze = app.add_subcommand("analyze", "decide one group spec and optionally run the oracle");
    analyze->add_option("--spec", aopt.spec_path, "JSON spec file (finite or p-adic)");
    analyze->add_option("--type", aopt.type, "type token, e.g. A, 2A, G");
    analyze->add_option("--rank", aopt.rank, "rank of the type");
    analyze->add_option("--q", aopt.q, "field (or residue field) size");
    analyze->add_option("--isogeny", aopt.isogeny, "sc | adjoint (default sc)");
    analyze->add_option("--scalars", aopt.scalars, "restriction-of-scalars degree (default 1)");
    analyze->add_flag("--padic", aopt.padic, "decide a p-adic spec given by --p/--q/--factor");
    analyze->add_option("--p", aopt.p, "residue characteristic");
    analyze->add_option("--factor", aopt.factors, "p-adic factor descriptor, e.g. 2A4:unramified");
    analyze->add_flag("--force-oracle", aopt.force_oracle, "run the brute-force verification sweeps");
    analyze->add_option("--json", aopt.json_path, "write the JSON report here");
    analyze->add_option("--cap", aopt.cap, "search cap on |L| (default 10^6, or CUSP_CAP)");

    int rank_max = 4;
    std::string q_list = "2,3,4,5";
    std::string csv_path;
    CLI::App* table = app.add_subcommand("table", "verdict table with oracle agreement marks");
    table->add_option("--rank-max", rank_max, "largest rank to include (default 4)");
    table->add_option("--q-list", q_list, "comma-separated field sizes (default 2,3,4,5)");
    table->add_option("--csv", csv_path, "also write the table as CSV here");

    i64 zq = 0, zh = 0;
    CLI::App* zs = app.add_subcommand("zsygmondy", "smallest prime with multiplicative order h mod q");
    zs->add_option("base", zq, "the base q")->required();
    zs->add_option("order", zh, "the required multiplicative order h")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(aopt);
        if (table->parsed()) {
            std::vector<i64> qs;
            std::stringstream ss(q_list);
            std::string item;
            while (std::getline(ss, item, ',')) qs.push_back(std::atoll(item.c_str()));
            if (qs.empty()) throw cusp::SpecError("empty q list");
            cusp::TableResult t = cusp::cmd_table(rank_max, qs, default_cap());
            std::cout << t.text;
            if (!csv_path.empty()) {
                std::ofstream out(csv_path);
                out << t.csv;
            }
            return t.disagreement ? 4 : 0;
        }
        if (zs->parsed()) {
            auto ell = cusp::zsygmondy(zq, zh);
            if (ell)
                std::cout << *ell << "\n";
            else
                std::cout << "NONE\n";
            return 0;
        }
    } catch (const cusp::OracleInfeasible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cusp::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cusp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
