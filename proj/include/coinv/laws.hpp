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

#ifndef COINV_LAWS_HPP
#define COINV_LAWS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coinv/groebner.hpp"
#include "coinv/repspec.hpp"

namespace coinv {

inline constexpr const char* kCoinvVersion = "1.0.0";

/// One checked relation on one concrete instance. The pass flag is a pure
/// function of the observed values; the repspec field makes the instance
/// re-runnable in isolation.
struct LawCase {
    std::string lawId;
    std::string instance;
    std::string expected;
    std::string observed;
    bool pass = false;
    nlohmann::ordered_json repspec;
    double elapsedSeconds = 0.0;
};

struct RunReport {
    std::string version = kCoinvVersion;
    std::vector<LawCase> cases;
    std::vector<std::string> exploration;  // informational lines, never asserted
    bool verdict = false;                  // all cases pass
};

struct SuiteConfig {
    std::vector<std::string> laws;  // subset of {"L1",...,"L13"}; empty = all
    long long closureCap = kDefaultClosureCap;
    long long degreeCap = -1;  // forwarded to hilbert_ideal; -1 = per-group default
    bool exploration = true;   // run the copy-stability survey on non-modular cases
    uint64_t seed = 20260822;  // drives the sampled-law generators
};

/// Runs the selected law families over their built-in instance sets.
/// Individual case failures are recorded in the report; infrastructure
/// errors abort only the affected case (recorded as a failure with the
/// error text in observed).
RunReport run_law_suite(const SuiteConfig& config = {});

/// Deterministic serialization: {version, cases: [{lawId, instance, expected,
/// observed, pass}], verdict}, plus exploration notes when present. Timings
/// are deliberately left out so identical configs yield identical bytes.
nlohmann::ordered_json report_to_json(const RunReport& report);

/// Tally for one (family, copies) cell of the polarization battery.
struct PolarizationSample {
    std::string family;
    int copies = 0;
    size_t checked = 0;
    size_t passed = 0;
};

/// Seeded sampling battery behind the polarization law: for each built-in
/// family and m in {2,3}, checks every Hilbert-ideal generator plus random
/// homogeneous combinations of them. Identical seeds give identical tallies.
std::vector<PolarizationSample> polarization_battery(long long closureCap = kDefaultClosureCap,
                                                     long long degreeCap = -1,
                                                     uint64_t seed = 20260822);

/// Formats a quotient summary as "dim=6 topdeg=3 series=1,2,2,1".
std::string summary_text(const CoinvariantSummary& summary);

}  // namespace coinv

#endif  // COINV_LAWS_HPP
