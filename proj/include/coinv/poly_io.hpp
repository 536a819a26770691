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

#ifndef COINV_POLY_IO_HPP
#define COINV_POLY_IO_HPP

#include <cctype>
#include <sstream>
#include <string>

#include "coinv/polynomial.hpp"
#include "json.hpp"

namespace coinv {

// --- text format ---
//
// A polynomial prints as a sum of terms in the canonical (descending identity
// lex) order, e.g. "2*x1^2*x2 - 1/3*x3". Variables are 1-based. The parser
// accepts the same grammar with arbitrary spacing and factor order inside a
// term.

inline std::string monomial_text(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (m.exps[i] > 1) os << "^" << m.exps[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

namespace detail {

inline bool rational_is_negative(const Rational& c) { return c < Rational(0); }
inline bool rational_is_negative(const Fp&) { return false; }

inline Rational abs_value(const Rational& c) { return rational_is_negative(c) ? -c : c; }
inline Fp abs_value(const Fp& c) { return c; }

template <typename K>
std::string coeff_text(const K& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

}  // namespace detail

template <typename K>
std::string to_text(const Polynomial<K>& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms) {
        bool neg = detail::rational_is_negative(c);
        K mag = detail::abs_value(c);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << detail::coeff_text(mag);
        } else if (mag.is_one()) {
            os << monomial_text(m);
        } else {
            os << detail::coeff_text(mag) << "*" << monomial_text(m);
        }
    }
    return os.str();
}

template <typename K>
std::ostream& operator<<(std::ostream& os, const Polynomial<K>& p) {
    return os << to_text(p);
}

namespace detail {

class PolyTextParser {
   public:
    PolyTextParser(std::string text, size_t nvars) : s_(std::move(text)), nvars_(nvars) {}

    /// Runs the grammar, reporting each term as (monomial, numerator,
    /// denominator, sign). The caller assembles field coefficients.
    template <typename Emit>
    void parse(Emit&& emit) {
        skip_ws();
        if (eof()) throw std::invalid_argument("polynomial text: empty input");
        bool first = true;
        while (!eof()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = (get() == '-') ? -1 : 1;
                skip_ws();
            } else if (!first) {
                throw std::invalid_argument("polynomial text: expected '+' or '-' at position " +
                                            std::to_string(pos_));
            }
            parse_term(sign, emit);
            skip_ws();
            first = false;
        }
    }

   private:
    template <typename Emit>
    void parse_term(int sign, Emit&& emit) {
        Monomial m(nvars_);
        long long num = 1, den = 1;
        bool sawFactor = false;
        while (true) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                num *= parse_uint();
                skip_ws();
                if (!eof() && peek() == '/') {
                    get();
                    skip_ws();
                    den *= parse_uint();
                }
                sawFactor = true;
            } else if (c == 'x') {
                get();
                long long idx = parse_uint();
                if (idx < 1 || static_cast<size_t>(idx) > nvars_)
                    throw std::invalid_argument("polynomial text: variable x" + std::to_string(idx) +
                                                " outside ring with " + std::to_string(nvars_) +
                                                " variables");
                long long e = 1;
                skip_ws();
                if (!eof() && peek() == '^') {
                    get();
                    skip_ws();
                    e = parse_uint();
                }
                m.exps[static_cast<size_t>(idx - 1)] += static_cast<int32_t>(e);
                sawFactor = true;
            } else {
                throw std::invalid_argument(std::string("polynomial text: unexpected '") + c +
                                            "' at position " + std::to_string(pos_));
            }
            skip_ws();
            if (!eof() && peek() == '*') {
                get();
                continue;
            }
            break;
        }
        if (!sawFactor) throw std::invalid_argument("polynomial text: empty term");
        emit(m, sign * num, den);
    }

    long long parse_uint() {
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw std::invalid_argument("polynomial text: expected a number at position " +
                                        std::to_string(pos_));
        long long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > (1LL << 62)) throw std::invalid_argument("polynomial text: number too large");
        }
        return v;
    }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::string s_;
    size_t nvars_;
    size_t pos_ = 0;
};

}  // namespace detail

template <typename K>
Polynomial<K> parse_polynomial(const PolyRing& ring, const std::string& text) {
    Polynomial<K> out(ring);
    detail::PolyTextParser parser(text, ring.nvars);
    parser.parse([&](const Monomial& m, long long num, long long den) {
        if (den == 0) throw std::invalid_argument("polynomial text: zero denominator");
        K c = field_element<K>(ring.field, num) / field_element<K>(ring.field, den);
        out.add_term(m, c);
    });
    return out;
}

// --- canonical JSON form ---
//
// {"terms": [{"exps": [..], "coeff": "num/den" | "k mod p"}]}, terms in
// canonical descending order.

namespace detail {

inline std::string coeff_json(const Rational& c) {
    return c.str();  // "num" or "num/den", canonicalized
}
inline std::string coeff_json(const Fp& c) {
    return std::to_string(c.residue()) + " mod " + std::to_string(c.modulus());
}

}  // namespace detail

template <typename K>
nlohmann::ordered_json poly_to_json(const Polynomial<K>& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms) {
        nlohmann::ordered_json t;
        t["exps"] = m.exps;
        t["coeff"] = detail::coeff_json(c);
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json j;
    j["terms"] = std::move(terms);
    return j;
}

template <typename K>
Polynomial<K> poly_from_json(const PolyRing& ring, const nlohmann::json& j) {
    if (!j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("polynomial json: missing terms array");
    Polynomial<K> out(ring);
    for (const auto& t : j["terms"]) {
        std::vector<int32_t> exps = t.at("exps").get<std::vector<int32_t>>();
        if (exps.size() != ring.nvars)
            throw std::invalid_argument("polynomial json: exps length mismatch");
        std::string coeff = t.at("coeff").get<std::string>();
        K c = field_zero<K>(ring.field);
        if (auto modPos = coeff.find(" mod "); modPos != std::string::npos) {
            long long k = std::stoll(coeff.substr(0, modPos));
            long long p = std::stoll(coeff.substr(modPos + 5));
            if (p != ring.field.characteristic)
                throw std::invalid_argument("polynomial json: coefficient modulus " +
                                            std::to_string(p) + " does not match the ring");
            c = field_element<K>(ring.field, k);
        } else if (auto slash = coeff.find('/'); slash != std::string::npos) {
            long long num = std::stoll(coeff.substr(0, slash));
            long long den = std::stoll(coeff.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("polynomial json: zero denominator");
            c = field_element<K>(ring.field, num) / field_element<K>(ring.field, den);
        } else {
            c = field_element<K>(ring.field, std::stoll(coeff));
        }
        out.add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

}  // namespace coinv

#endif  // COINV_POLY_IO_HPP
