/*
   Copyright 2026 The coinv authors

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

// Command line front end. Exit codes: 0 = success / all laws pass,
// 1 = a checked law failed, 2 = usage or infrastructure error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coinv/davenport.hpp"
#include "coinv/invariants.hpp"
#include "coinv/laws.hpp"
#include "coinv/polarization.hpp"

namespace {

using coinv::AnyGroup;
using nlohmann::ordered_json;

AnyGroup copies_of(const AnyGroup& g, long long m) {
    return std::visit(
        [&](const auto& grp) -> AnyGroup {
            return coinv::vector_copies(grp, static_cast<Eigen::Index>(m));
        },
        g);
}

/// COINV_CAP overrides every default cap (group closure and Davenport search).
std::optional<long long> env_cap() {
    const char* env = std::getenv("COINV_CAP");
    if (!env || !*env) return std::nullopt;
    return std::atoll(env);
}

std::vector<long long> parse_factors(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw std::invalid_argument("davenport: no invariant factors given");
    return out;
}

std::string join(const std::vector<long long>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

struct ComputeArgs {
    std::string spec;
    long long field = -1;  // -1 = take the field from the spec itself
    long long copies = 1;
    long long cap = -1;
    bool json = false;
};

int run_compute(const ComputeArgs& a) {
    std::optional<long long> fieldChar;
    if (a.field >= 0) fieldChar = a.field;
    const ordered_json spec = coinv::repspec_from_shorthand(a.spec, fieldChar);
    const long long closureCap =
        a.cap > 0 ? a.cap : env_cap().value_or(coinv::kDefaultClosureCap);
    AnyGroup g = coinv::build_rep(spec, closureCap);
    if (a.copies > 1) g = copies_of(g, a.copies);
    const auto [summary, degrees] = std::visit(
        [&](const auto& grp) {
            auto ideal = coinv::hilbert_ideal(grp);
            return std::pair{coinv::quotient_summary(ideal.groebner), ideal.generatorDegrees};
        },
        g);
    if (a.json) {
        ordered_json out;
        out["dim"] = summary.dimension;
        out["topdeg"] = summary.topDegree;
        out["series"] = summary.hilbertSeries;
        out["idealGeneratorDegrees"] = degrees;
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << coinv::summary_text(summary) << "\n";
    std::string degreeText;
    for (size_t i = 0; i < degrees.size(); ++i)
        degreeText += (i ? "," : "") + std::to_string(degrees[i]);
    std::cout << "ideal generator degrees: " << degreeText << "\n";
    return 0;
}

struct DavenportArgs {
    std::string factors;
    bool exact = false;
    bool formula = false;
    bool witness = false;
};

int run_davenport(const DavenportArgs& a) {
    const auto g = coinv::FiniteAbelianGroup::from_factors(parse_factors(a.factors));
    const long long cap = env_cap().value_or(coinv::kDefaultDavenportCap);
    long long s = 0;
    if (a.formula) {
        const auto value = coinv::olson_formula(g);
        if (!value) {
            std::cerr << "error: no closed formula applies to Z_" << join(g.invariantFactors)
                      << " (rank > 2 and not a p-group)\n";
            return 2;
        }
        s = *value;
    } else {
        s = coinv::davenport_exact(g, cap);
    }
    std::cout << "S=" << s << "\n";
    if (a.witness) {
        const auto seq = coinv::davenport_witness(g, cap);
        std::string line;
        for (const auto& e : seq.elements) line += (line.empty() ? "(" : " (") + join(e) + ")";
        std::cout << "witness=" << line << "\n";
    }
    return 0;
}

struct PolarizeArgs {
    std::string spec;
    long long copies = 2;
    long long cap = -1;
    bool checkLemma = false;
};

template <class K>
int polarize_on(const coinv::MatrixGroup<K>& g, const PolarizeArgs& a) {
    if (a.checkLemma) {
        const auto idealA = coinv::hilbert_ideal(g);
        const auto idealB =
            coinv::hilbert_ideal(coinv::vector_copies(g, static_cast<Eigen::Index>(a.copies)))
                .groebner;
        size_t failures = 0;
        for (const auto& f : idealA.generators)
            if (!coinv::verify_polarization_lemma(g, static_cast<int>(a.copies), f, idealB,
                                                  &idealA.groebner))
                ++failures;
        std::cout << "checked " << idealA.generators.size() << " ideal generators, m=" << a.copies
                  << ": " << (failures == 0 ? "all polarization coefficients lie in I_B"
                                            : std::to_string(failures) + " failures")
                  << "\n";
        return failures == 0 ? 0 : 1;
    }
    const auto report = coinv::pure_power_topdeg_check(g, static_cast<int>(a.copies));
    if (!report.applicable) {
        std::cout << "pure-power criterion not applicable to this instance\n";
        return 0;
    }
    std::cout << "pure-power lead terms with exponents ";
    for (size_t i = 0; i < report.exponents.size(); ++i)
        std::cout << (i ? "," : "") << report.exponents[i];
    std::cout << ": predicted topdeg=" << report.predicted << " measured=" << report.measured
              << (report.match ? " (match)" : " (MISMATCH)") << "\n";
    return report.match ? 0 : 1;
}

int run_polarize(const PolarizeArgs& a) {
    const ordered_json spec = coinv::repspec_from_shorthand(a.spec);
    const long long closureCap =
        a.cap > 0 ? a.cap : env_cap().value_or(coinv::kDefaultClosureCap);
    AnyGroup g = coinv::build_rep(spec, closureCap);
    return std::visit([&](const auto& grp) { return polarize_on(grp, a); }, g);
}

struct VerifyArgs {
    std::string suite = "all";
    bool json = false;
    bool noExploration = false;
};

int run_verify(const VerifyArgs& a) {
    coinv::SuiteConfig cfg;
    if (const auto cap = env_cap()) cfg.closureCap = *cap;
    cfg.exploration = !a.noExploration;
    if (a.suite != "all") {
        std::stringstream ss(a.suite);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            bool known = false;
            for (int i = 1; i <= 13 && !known; ++i) known = item == "L" + std::to_string(i);
            if (!known) {
                std::cerr << "error: unknown suite id " << item << " (expected all or L1..L13)\n";
                return 2;
            }
            cfg.laws.push_back(item);
        }
    }
    const auto report = coinv::run_law_suite(cfg);
    if (a.json) {
        std::cout << coinv::report_to_json(report).dump(2) << "\n";
    } else {
        for (const auto& c : report.cases)
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.lawId << " " << c.instance << ": "
                      << c.observed << "\n";
        for (const auto& note : report.exploration) std::cout << note << "\n";
        std::cout << "verdict: " << (report.verdict ? "pass" : "fail") << "\n";
    }
    return report.verdict ? 0 : 1;
}

struct NoetherArgs {
    std::string spec;
    long long bound = -1;
    long long cap = -1;
};

int run_noether(const NoetherArgs& a) {
    const ordered_json spec = coinv::repspec_from_shorthand(a.spec);
    const long long closureCap =
        a.cap > 0 ? a.cap : env_cap().value_or(coinv::kDefaultClosureCap);
    AnyGroup g = coinv::build_rep(spec, closureCap);
    const int beta = std::visit(
        [&](const auto& grp) { return coinv::noether_number(grp, static_cast<int>(a.bound)); },
        g);
    std::cout << "beta=" << beta << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coinvariant algebras of finite group representations over exact fields"};
    app.require_subcommand(1);

    ComputeArgs computeArgs;
    auto* compute = app.add_subcommand(
        "compute", "dimension, top degree and Hilbert series of the coinvariant algebra");
    compute->add_option("repspec", computeArgs.spec,
                        "representation spec (shorthand, inline JSON, or a .json path)")
        ->required();
    compute->add_option("--field", computeArgs.field, "field characteristic override (0 = Q)");
    compute->add_option("--copies", computeArgs.copies, "replace V by m parallel copies");
    compute->add_option("--cap", computeArgs.cap, "group closure cap");
    compute->add_flag("--json", computeArgs.json, "machine readable output");

    DavenportArgs davenportArgs;
    auto* davenport =
        app.add_subcommand("davenport", "Davenport constant of a finite abelian group");
    davenport->add_option("factors", davenportArgs.factors,
                          "invariant factors, comma separated (e.g. 2,4)")
        ->required();
    auto* exactFlag = davenport->add_flag("--exact", davenportArgs.exact,
                                          "exhaustive zero-sum-free search (default)");
    davenport->add_flag("--formula", davenportArgs.formula,
                        "closed formula (p-groups and rank <= 2 only)")
        ->excludes(exactFlag);
    davenport->add_flag("--witness", davenportArgs.witness,
                        "also print a maximal zero-sum-free sequence");

    PolarizeArgs polarizeArgs;
    auto* polarize = app.add_subcommand("polarize", "polarization checks on vector copies");
    polarize->add_option("repspec", polarizeArgs.spec, "representation spec")->required();
    polarize->add_option("--copies", polarizeArgs.copies, "number of copies m")->required();
    polarize->add_option("--cap", polarizeArgs.cap, "group closure cap");
    polarize->add_flag("--check-lemma", polarizeArgs.checkLemma,
                       "verify that polarizations of ideal generators land in the copied ideal");

    VerifyArgs verifyArgs;
    auto* verify = app.add_subcommand("verify", "run the relation suite over built-in instances");
    verify->add_option("--suite", verifyArgs.suite, "all or a comma list of L1..L13");
    verify->add_flag("--json", verifyArgs.json, "machine readable report");
    verify->add_flag("--no-exploration", verifyArgs.noExploration,
                     "skip the informational copy-stability survey");

    NoetherArgs noetherArgs;
    auto* noether =
        app.add_subcommand("noether", "largest degree of a minimal invariant generator");
    noether->add_option("repspec", noetherArgs.spec, "representation spec")->required();
    noether->add_option("--bound", noetherArgs.bound, "search degree bound");
    noether->add_option("--cap", noetherArgs.cap, "group closure cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return run_compute(computeArgs);
        if (davenport->parsed()) return run_davenport(davenportArgs);
        if (polarize->parsed()) return run_polarize(polarizeArgs);
        if (verify->parsed()) return run_verify(verifyArgs);
        if (noether->parsed()) return run_noether(noetherArgs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
