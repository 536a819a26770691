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

#ifndef COINV_REPSPEC_HPP
#define COINV_REPSPEC_HPP

#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "coinv/rep_builders.hpp"

namespace coinv {

/// A built representation over whichever field the spec requested.
using AnyGroup = std::variant<MatrixGroup<Rational>, MatrixGroup<Fp>>;

inline const FieldSpec& field_of(const AnyGroup& g) {
    return std::visit([](const auto& m) -> const FieldSpec& { return m.field; }, g);
}
inline size_t order_of(const AnyGroup& g) {
    return std::visit([](const auto& m) { return m.order(); }, g);
}
inline Eigen::Index dimension_of(const AnyGroup& g) {
    return std::visit([](const auto& m) { return m.dimension; }, g);
}

/// Builds a representation from its JSON description:
///   {"field": {"char": q},
///    "constructor": "symmetric" | "jordan" | "diagonal" | "regular" |
///                   "matrices" | "vector_copies" | "direct_sum",
///    "params": {...},
///    "matrices": [...]}          (row-major integer-string entries)
/// Nested specs appear under params.of / params.summands.
AnyGroup build_rep(const nlohmann::json& spec, long long cap = kDefaultClosureCap);

/// Expands CLI shorthand ("symmetric:3", "jordan:2,2", "diagonal:2,4",
/// "cyclic:4", "negid:2", "regular:<inner>", or inline JSON / a .json path)
/// into the JSON form build_rep accepts. fieldChar overrides the field when
/// the shorthand leaves it open; diagonal picks the least usable prime itself.
nlohmann::ordered_json repspec_from_shorthand(const std::string& text,
                                              std::optional<long long> fieldChar = std::nullopt);

/// Least prime p with p = 1 (mod m); p > m, so p never divides m.
long long smallest_suitable_prime(long long m);

/// Canonical re-serialization (stable key order) for reports and fixtures.
nlohmann::ordered_json canonical_repspec(const nlohmann::json& spec);

}  // namespace coinv

#endif  // COINV_REPSPEC_HPP
