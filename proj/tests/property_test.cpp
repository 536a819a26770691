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

#include "doctest.h"

#include "test_support.hpp"

TEST_CASE("randomized algebra and action batteries") {
    const auto tally = coinv_tests::run_property_battery(coinv_tests::kPropertySeed);
    std::string notes;
    for (const auto& note : tally.notes) notes += note + "\n";
    INFO("cases: " << tally.cases << "\n" << notes);
    CHECK(tally.cases >= 1000);
    CHECK(tally.failures == 0);
}

TEST_CASE("the batteries are seed-deterministic") {
    const auto a = coinv_tests::run_property_battery(7);
    const auto b = coinv_tests::run_property_battery(7);
    CHECK(a.cases == b.cases);
    CHECK(a.failures == b.failures);
}
