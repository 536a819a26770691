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

#include "coinv/repspec.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coinv {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

FieldSpec parse_field(const json& spec, std::optional<long long> fallbackChar) {
    long long q = fallbackChar.value_or(0);
    if (spec.contains("field")) {
        const json& f = spec.at("field");
        if (!f.is_object() || !f.contains("char"))
            throw std::invalid_argument("repspec: field must be {\"char\": q}");
        q = f.at("char").get<long long>();
    }
    if (q == 0) return FieldSpec::rationals();
    if (!is_prime(q)) throw std::invalid_argument("repspec: field characteristic must be 0 or prime");
    return FieldSpec::prime(q);
}

long long int_param(const json& spec, const char* name) {
    if (!spec.contains("params") || !spec.at("params").contains(name))
        throw std::invalid_argument(std::string("repspec: missing params.") + name);
    const json& v = spec.at("params").at(name);
    if (v.is_string()) return std::stoll(v.get<std::string>());
    return v.get<long long>();
}

long long entry_value(const json& v) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        size_t pos = 0;
        const long long out = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("repspec: bad matrix entry '" + s + "'");
        return out;
    }
    if (v.is_number_integer()) return v.get<long long>();
    throw std::invalid_argument("repspec: matrix entries must be integer strings");
}

template <typename K>
DenseMatrix<K> parse_matrix(const json& m, const FieldSpec& field) {
    std::vector<long long> entries;
    if (!m.is_array()) throw std::invalid_argument("repspec: matrix must be an array");
    if (!m.empty() && m.front().is_array()) {
        for (const json& row : m)
            for (const json& v : row) entries.push_back(entry_value(v));
    } else {
        for (const json& v : m) entries.push_back(entry_value(v));
    }
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(double(entries.size()))));
    if (n < 1 || static_cast<size_t>(n) * static_cast<size_t>(n) != entries.size())
        throw std::invalid_argument("repspec: matrix entry count is not a square");
    DenseMatrix<K> out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out(i, j) = field_element<K>(field, entries[static_cast<size_t>(i * n + j)]);
    return out;
}

std::vector<long long> int_list(const json& v) {
    std::vector<long long> out;
    for (const json& e : v) out.push_back(entry_value(e));
    return out;
}

json nested_spec(const json& spec, const char* key) {

    if (!spec.contains("params") || !spec.at("params").contains(key))
        throw std::invalid_argument(std::string("repspec: missing params.") + key);
    return spec.at("params").at(key);
}

template <typename K>
MatrixGroup<K> build_typed(const json& spec, const FieldSpec& field, long long cap);

AnyGroup build_with_field(const json& spec, const FieldSpec& field, long long cap) {
    if (field.is_rational()) return build_typed<Rational>(spec, field, cap);
    return build_typed<Fp>(spec, field, cap);
}

template <typename K>
MatrixGroup<K> build_typed(const json& spec, const FieldSpec& field, long long cap) {
    const std::string ctor = spec.value("constructor", std::string());
    if (ctor == "symmetric") {
        return symmetric_rep<K>(field, static_cast<Eigen::Index>(int_param(spec, "n")), cap);
    }
    if (ctor == "diagonal") {
        if (!spec.contains("params") || !spec.at("params").contains("orders"))
            throw std::invalid_argument("repspec: diagonal needs params.orders");
        const auto orders = int_list(spec.at("params").at("orders"));
        if (spec.at("params").contains("weights")) {
            std::vector<std::vector<long long>> weights;
            for (const json& row : spec.at("params").at("weights")) weights.push_back(int_list(row));
            return diagonal_rep<K>(field, orders, weights, cap);
        }
        return diagonal_rep<K>(field, orders, cap);
    }
    if (ctor == "matrices") {
        if (!spec.contains("matrices"))
            throw std::invalid_argument("repspec: matrices constructor needs a matrices list");
        std::vector<DenseMatrix<K>> gens;
        for (const json& m : spec.at("matrices")) gens.push_back(parse_matrix<K>(m, field));
        return close_group(gens, field, cap);
    }
    if (ctor == "vector_copies") {
        const auto m = static_cast<Eigen::Index>(int_param(spec, "m"));
        json inner = nested_spec(spec, "of");
        if (!inner.contains("field")) inner["field"] = {{"char", field.characteristic}};
        AnyGroup base = build_rep(inner, cap);
        if (!std::holds_alternative<MatrixGroup<K>>(base))
            throw std::invalid_argument("repspec: vector_copies base must share the outer field");
        return vector_copies(std::get<MatrixGroup<K>>(base), m);
    }
    if (ctor == "direct_sum") {
        if (!spec.contains("params") || !spec.at("params").contains("summands"))
            throw std::invalid_argument("repspec: direct_sum needs params.summands");
        std::vector<std::vector<DenseMatrix<K>>> summandGens;
        for (json inner : spec.at("params").at("summands")) {
            if (!inner.contains("field")) inner["field"] = {{"char", field.characteristic}};
            AnyGroup base = build_rep(inner, cap);
            if (!std::holds_alternative<MatrixGroup<K>>(base))
                throw std::invalid_argument("repspec: direct_sum summands must share the outer field");
            summandGens.push_back(generator_matrices(std::get<MatrixGroup<K>>(base)));
        }
        return direct_sum_rep<K>(field, summandGens, cap);
    }
    if (ctor == "regular") {
        // The base only contributes its multiplication table, so it defaults
        // to the rationals where every constructor is available.
        json inner = nested_spec(spec, "of");
        AnyGroup base = build_rep(inner, cap);
        return std::visit(
            [&](const auto& b) {
                return regular_rep<typename std::decay_t<decltype(b)>::Scalar, K>(field, b, cap);
            },
            base);
    }
    throw std::invalid_argument("repspec: unknown constructor '" + ctor + "'");
}

std::vector<long long> split_ints(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty()) throw std::invalid_argument("repspec: empty number in '" + text + "'");
        out.push_back(std::stoll(piece));
    }
    if (out.empty()) throw std::invalid_argument("repspec: no numbers in '" + text + "'");
    return out;
}

ordered_json field_json(long long q) { return ordered_json{{"char", q}}; }

}  // namespace

AnyGroup build_rep(const json& spec, long long cap) {
    if (!spec.is_object()) throw std::invalid_argument("repspec: expected a JSON object");
    const std::string ctor = spec.value("constructor", std::string());
    if (ctor == "jordan") {
        const long long p = int_param(spec, "p");
        const long long k = int_param(spec, "k");
        if (spec.contains("field")) {
            const FieldSpec f = parse_field(spec, std::nullopt);
            if (f.characteristic != p)
                throw std::invalid_argument("repspec: jordan field must have characteristic p");
        }
        return jordan_rep(p, static_cast<Eigen::Index>(k), cap);
    }
    return build_with_field(spec, parse_field(spec, 0), cap);
}

long long smallest_suitable_prime(long long m) {
    if (m <= 1) return 2;
    for (long long p = m + 1;; p += m)
        if (is_prime(p)) return p;
}

nlohmann::ordered_json repspec_from_shorthand(const std::string& text,
                                              std::optional<long long> fieldChar) {
    if (!text.empty() && text.front() == '{') return ordered_json::parse(text);
    if (text.size() > 5 && text.substr(text.size() - 5) == ".json") {
        std::ifstream in(text);
        if (!in) throw std::invalid_argument("repspec: cannot open " + text);
        return ordered_json::parse(in);
    }
    const size_t colon = text.find(':');
    const std::string tag = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? std::string() : text.substr(colon + 1);
    ordered_json out;
    if (tag == "symmetric") {
        out["field"] = field_json(fieldChar.value_or(0));
        out["constructor"] = "symmetric";
        out["params"] = {{"n", split_ints(rest).at(0)}};
        return out;
    }
    if (tag == "jordan") {
        const auto v = split_ints(rest);
        if (v.size() != 2) throw std::invalid_argument("repspec: jordan wants p,k");
        out["field"] = field_json(v[0]);
        out["constructor"] = "jordan";
        out["params"] = {{"p", v[0]}, {"k", v[1]}};
        return out;
    }
    if (tag == "diagonal") {
        const auto orders = split_ints(rest);
        long long q = fieldChar.value_or(0);
        if (!fieldChar.has_value()) {
            long long ex = 1;
            for (long long d : orders) ex = std::lcm(ex, d);
            q = ex <= 2 ? 0 : smallest_suitable_prime(ex);
        }
        out["field"] = field_json(q);
        out["constructor"] = "diagonal";
        out["params"] = {{"orders", orders}};
        return out;
    }
    if (tag == "cyclic") {
        // Cyclic permutation action, expressed through the explicit-matrix
        // constructor so it works over any field.
        const long long n = split_ints(rest).at(0);
        if (n < 1) throw std::invalid_argument("repspec: cyclic wants n >= 1");
        std::vector<std::string> entries(static_cast<size_t>(n * n), "0");
        for (long long j = 0; j < n; ++j)
            entries[static_cast<size_t>(((j + 1) % n) * n + j)] = "1";
        out["field"] = field_json(fieldChar.value_or(0));
        out["constructor"] = "matrices";
        out["matrices"] = ordered_json::array({entries});
        return out;
    }
    if (tag == "negid") {
        const long long n = split_ints(rest).at(0);
        if (n < 1) throw std::invalid_argument("repspec: negid wants n >= 1");
        std::vector<std::string> entries(static_cast<size_t>(n * n), "0");
        for (long long i = 0; i < n; ++i) entries[static_cast<size_t>(i * n + i)] = "-1";
        out["field"] = field_json(fieldChar.value_or(0));
        out["constructor"] = "matrices";
        out["matrices"] = ordered_json::array({entries});
        return out;
    }
    if (tag == "regular") {
        out["field"] = field_json(fieldChar.value_or(0));
        out["constructor"] = "regular";
        out["params"] = {{"of", repspec_from_shorthand(rest)}};
        return out;
    }
    throw std::invalid_argument("repspec: unrecognized spec '" + text + "'");
}

nlohmann::ordered_json canonical_repspec(const json& spec) {
    ordered_json out;
    out["field"] =
        field_json(spec.contains("field") ? spec.at("field").value("char", (long long)0) : 0);
    const std::string ctor = spec.value("constructor", std::string());
    out["constructor"] = ctor;
    if (ctor == "jordan") out["field"] = field_json(int_param(spec, "p"));
    if (spec.contains("params")) {
        const json& p = spec.at("params");
        ordered_json cp;
        for (const char* key : {"n", "p", "k", "m"})
            if (p.contains(key)) cp[key] = entry_value(p.at(key));
        if (p.contains("orders")) cp["orders"] = int_list(p.at("orders"));
        if (p.contains("weights")) {
            ordered_json w = ordered_json::array();
            for (const json& row : p.at("weights")) w.push_back(int_list(row));
            cp["weights"] = w;
        }
        if (p.contains("of")) cp["of"] = canonical_repspec(p.at("of"));
        if (p.contains("summands")) {
            ordered_json s = ordered_json::array();
            for (const json& inner : p.at("summands")) s.push_back(canonical_repspec(inner));
            cp["summands"] = s;
        }
        out["params"] = cp;
    }
    if (spec.contains("matrices")) {
        ordered_json ms = ordered_json::array();
        for (const json& m : spec.at("matrices")) {
            ordered_json flat = ordered_json::array();
            if (!m.empty() && m.front().is_array()) {
                for (const json& row : m)
                    for (const json& v : row) flat.push_back(std::to_string(entry_value(v)));
            } else {
                for (const json& v : m) flat.push_back(std::to_string(entry_value(v)));
            }
            ms.push_back(flat);
        }
        out["matrices"] = ms;
    }
    return out;
}

}  // namespace coinv
