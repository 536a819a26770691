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

#include "coinv/laws.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "coinv/davenport.hpp"
#include "coinv/invariants.hpp"
#include "coinv/polarization.hpp"

namespace coinv {
namespace {

using nlohmann::ordered_json;

// ---------- instance descriptions ----------

ordered_json spec_symmetric(long long n, long long q = 0) {
    return ordered_json{{"field", {{"char", q}}}, {"constructor", "symmetric"}, {"params", {{"n", n}}}};
}

ordered_json spec_jordan(long long p, long long k) {
    return ordered_json{
        {"field", {{"char", p}}}, {"constructor", "jordan"}, {"params", {{"p", p}, {"k", k}}}};
}

ordered_json spec_diagonal(long long q, const std::vector<long long>& orders) {
    return ordered_json{
        {"field", {{"char", q}}}, {"constructor", "diagonal"}, {"params", {{"orders", orders}}}};
}

ordered_json spec_diagonal(long long q, const std::vector<long long>& orders,
                           const std::vector<std::vector<long long>>& weights) {
    return ordered_json{{"field", {{"char", q}}},
                        {"constructor", "diagonal"},
                        {"params", {{"orders", orders}, {"weights", weights}}}};
}

ordered_json spec_trivial(long long q = 0) {
    return ordered_json{{"field", {{"char", q}}},
                        {"constructor", "matrices"},
                        {"matrices", ordered_json::array({ordered_json::array({"1"})})}};
}

ordered_json spec_negid(long long n, long long q = 0) {
    return repspec_from_shorthand("negid:" + std::to_string(n), q);
}

ordered_json spec_regular(const ordered_json& inner, long long q) {
    return ordered_json{
        {"field", {{"char", q}}}, {"constructor", "regular"}, {"params", {{"of", inner}}}};
}

ordered_json spec_copies(const ordered_json& inner, long long m) {
    const long long q = inner.contains("field") ? inner.at("field").value("char", (long long)0) : 0;
    return ordered_json{{"field", {{"char", q}}},
                        {"constructor", "vector_copies"},
                        {"params", {{"of", inner}, {"m", m}}}};
}

ordered_json spec_direct_sum(const std::vector<ordered_json>& inners, long long q) {
    ordered_json summands = ordered_json::array();
    for (const auto& s : inners) summands.push_back(s);
    return ordered_json{{"field", {{"char", q}}},
                        {"constructor", "direct_sum"},
                        {"params", {{"summands", summands}}}};
}

// ---------- visitors over AnyGroup ----------

CoinvariantSummary summary_of(const AnyGroup& g, long long degreeCap) {
    return std::visit([&](const auto& m) { return coinvariant_summary(m, degreeCap); }, g);
}

int noether_of(const AnyGroup& g, int bound = -1) {
    return std::visit([&](const auto& m) { return noether_number(m, bound); }, g);
}

SteinbergReport steinberg_of(const AnyGroup& g, long long degreeCap) {
    return std::visit([&](const auto& m) { return steinberg_check(m, degreeCap); }, g);
}

AnyGroup copies_of(const AnyGroup& g, Eigen::Index m) {
    return std::visit([&](const auto& grp) -> AnyGroup { return vector_copies(grp, m); }, g);
}

// ---------- formatting ----------

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// ---------- case plumbing ----------

template <class Fn>
LawCase make_case(const std::string& lawId, const std::string& instance,
                  const std::string& expected, ordered_json spec, Fn&& fn) {
    LawCase c;
    c.lawId = lawId;
    c.instance = instance;
    c.expected = expected;
    c.repspec = std::move(spec);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        fn(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.observed = std::string("error: ") + e.what();
    }
    c.elapsedSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

/// Runs case factories concurrently, preserving their given order.
std::vector<LawCase> run_concurrent(std::vector<std::function<LawCase()>> tasks) {
    std::vector<std::future<LawCase>> futures;
    futures.reserve(tasks.size());
    for (auto& t : tasks) futures.push_back(std::async(std::launch::async, std::move(t)));
    std::vector<LawCase> out;
    out.reserve(futures.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

// ---------- law families ----------

std::vector<LawCase> law_subgroup_monotonicity(const SuiteConfig& cfg) {
    std::vector<LawCase> out;
    out.push_back(make_case(
        "L1", "symmetric n=3 over Q, subgroup generated by the first transposition",
        "subgroup dim <= group dim and subgroup topdeg <= group topdeg", spec_symmetric(3),
        [&](LawCase& c) {
            auto G = std::get<MatrixGroup<Rational>>(build_rep(spec_symmetric(3), cfg.closureCap));
            auto H = subgroup_generated(G, {G.generatorIndices.at(0)});
            const auto sg = coinvariant_summary(G, cfg.degreeCap);
            const auto sh = coinvariant_summary(H, cfg.degreeCap);
            c.pass = sh.dimension <= sg.dimension && sh.topDegree <= sg.topDegree;
            c.observed = "H: " + summary_text(sh) + "; G: " + summary_text(sg);
        }));
    out.push_back(make_case(
        "L1", "symmetric n=4 over Q, subgroup generated by the first two transpositions",
        "subgroup dim <= group dim and subgroup topdeg <= group topdeg", spec_symmetric(4),
        [&](LawCase& c) {
            auto G = std::get<MatrixGroup<Rational>>(build_rep(spec_symmetric(4), cfg.closureCap));
            auto H = subgroup_generated(G, {G.generatorIndices.at(0), G.generatorIndices.at(1)});
            const auto sg = coinvariant_summary(G, cfg.degreeCap);
            const auto sh = coinvariant_summary(H, cfg.degreeCap);
            c.pass = sh.dimension <= sg.dimension && sh.topDegree <= sg.topDegree;
            c.observed = "H: " + summary_text(sh) + "; G: " + summary_text(sg);
        }));
    out.push_back(make_case(
        "L1", "Jordan block p=2 k=2, trivial subgroup",
        "subgroup dim <= group dim and subgroup topdeg <= group topdeg", spec_jordan(2, 2),
        [&](LawCase& c) {
            auto G = std::get<MatrixGroup<Fp>>(build_rep(spec_jordan(2, 2), cfg.closureCap));
            auto H = subgroup_generated(G, {});
            const auto sg = coinvariant_summary(G, cfg.degreeCap);
            const auto sh = coinvariant_summary(H, cfg.degreeCap);
            c.pass = sh.dimension <= sg.dimension && sh.topDegree <= sg.topDegree;
            c.observed = "H: " + summary_text(sh) + "; G: " + summary_text(sg);
        }));
    return out;
}

std::vector<LawCase> law_submodule_monotonicity(const SuiteConfig& cfg) {
    // Each case compares a module with a submodule of it, both faithful for
    // the same group, computed as separate matrix instances.
    std::vector<LawCase> out;
    auto compare = [&](const std::string& instance, const ordered_json& sub,
                       const ordered_json& whole) {
        return make_case("L2", instance, "submodule topdeg <= module topdeg", whole,
                         [&](LawCase& c) {
                             const auto su = summary_of(build_rep(sub, cfg.closureCap), cfg.degreeCap);
                             const auto sv =
                                 summary_of(build_rep(whole, cfg.closureCap), cfg.degreeCap);
                             c.pass = su.topDegree <= sv.topDegree;
                             c.observed = "U: topdeg=" + std::to_string(su.topDegree) +
                                          "; V: topdeg=" + std::to_string(sv.topDegree);
                         });
    };
    out.push_back(compare("Jordan p=3: V_2 inside V_3", spec_jordan(3, 2), spec_jordan(3, 3)));
    ordered_json fixedLine{{"field", {{"char", 2}}},
                           {"constructor", "matrices"},
                           {"matrices", ordered_json::array({ordered_json::array({"1"})})}};
    out.push_back(compare("Jordan p=2: fixed line inside V_2", fixedLine, spec_jordan(2, 2)));
    out.push_back(compare("Z_4 over F_5: weight-1 line inside the weight-(1,2) plane",
                          spec_diagonal(5, {4}, {{1}}), spec_diagonal(5, {4}, {{1}, {2}})));
    return out;
}

std::vector<LawCase> law_direct_sum_subadditivity(const SuiteConfig& cfg) {
    std::vector<LawCase> out;
    auto subadd = [&](const std::string& instance, const ordered_json& a, const ordered_json& b,
                      long long q) {
        const ordered_json sum = spec_direct_sum({a, b}, q);
        return make_case("L3", instance, "topdeg(V (+) W) <= topdeg(V) + topdeg(W)", sum,
                         [&, sum](LawCase& c) {
                             const auto sa = summary_of(build_rep(a, cfg.closureCap), cfg.degreeCap);
                             const auto sb = summary_of(build_rep(b, cfg.closureCap), cfg.degreeCap);
                             const auto ss =
                                 summary_of(build_rep(sum, cfg.closureCap), cfg.degreeCap);
                             c.pass = ss.topDegree <= sa.topDegree + sb.topDegree;
                             c.observed = "V: " + std::to_string(sa.topDegree) +
                                          ", W: " + std::to_string(sb.topDegree) +
                                          ", V(+)W: " + std::to_string(ss.topDegree);
                         });
    };
    out.push_back(subadd("S_2 natural plus itself over Q", spec_symmetric(2), spec_symmetric(2), 0));
    out.push_back(subadd("S_2 natural plus the sign line over Q", spec_symmetric(2),
                         spec_negid(1), 0));
    out.push_back(
        subadd("Jordan p=2: V_2 plus V_2 over F_2", spec_jordan(2, 2), spec_jordan(2, 2), 2));
    return out;
}

std::vector<LawCase> law_regular_rep_bound(const SuiteConfig& cfg) {
    auto bound = [&cfg](const std::string& instance, const ordered_json& v, long long q) {
        return [instance, v, q, &cfg]() {
            const ordered_json reg = spec_regular(v, q);
            return make_case("L4", instance, "topdeg(V) <= dim(V) * topdeg(V_reg)", reg,
                             [&](LawCase& c) {
                                 AnyGroup gv = build_rep(v, cfg.closureCap);
                                 const auto sv = summary_of(gv, cfg.degreeCap);
                                 const auto sr =
                                     summary_of(build_rep(reg, cfg.closureCap), cfg.degreeCap);
                                 const auto dim = static_cast<long long>(dimension_of(gv));
                                 c.pass = sv.topDegree <= dim * sr.topDegree;
                                 c.observed = "topdeg(V)=" + std::to_string(sv.topDegree) +
                                              " dim(V)=" + std::to_string(dim) +
                                              " topdeg(V_reg)=" + std::to_string(sr.topDegree);
                             });
        };
    };
    std::vector<std::function<LawCase()>> list = {
        bound("Z_2 sign line over Q against its regular representation", spec_negid(1), 0),
        bound("Z_3 weight-1 line over F_7 against its regular representation",
              spec_diagonal(7, {3}), 7),
        bound("Z_4 weight-1 line over F_5 against its regular representation",
              spec_diagonal(5, {4}), 5),
        bound("S_3 natural over Q against its regular representation", spec_symmetric(3), 0)};
    return run_concurrent(std::move(list));
}

std::vector<LawCase> law_dim_exceeds_topdeg(const SuiteConfig& cfg) {
    std::vector<LawCase> out;
    const std::vector<std::pair<std::string, ordered_json>> instances = {
        {"trivial group on one variable over Q", spec_trivial()},
        {"symmetric n=2 over Q", spec_symmetric(2)},
        {"symmetric n=3 over Q", spec_symmetric(3)},
        {"Jordan p=2 k=2", spec_jordan(2, 2)},
        {"Jordan p=3 k=2", spec_jordan(3, 2)},
        {"minus identity on two variables over Q", spec_negid(2)},
        {"Z_3 scaling two variables over F_7", spec_diagonal(7, {3}, {{1}, {1}})},
        {"Z_2 x Z_2 diagonal over Q", spec_diagonal(0, {2, 2})}};
    for (const auto& [name, spec] : instances)
        out.push_back(make_case("L5", name, "dim >= topdeg + 1", spec, [&, spec](LawCase& c) {
            const auto s = summary_of(build_rep(spec, cfg.closureCap), cfg.degreeCap);
            c.pass = s.dimension >= s.topDegree + 1;
            c.observed = summary_text(s);
        }));
    return out;
}

std::vector<LawCase> law_modular_growth(const SuiteConfig& cfg) {
    std::vector<std::function<LawCase()>> tasks;
    for (long long p : {2, 3})
        for (long long m : {1, 2, 3})
            tasks.push_back([p, m, &cfg]() {
                const ordered_json spec = spec_copies(spec_jordan(p, 2), m);
                const long long want = m * (p - 1);
                return make_case(
                    "L6",
                    "Jordan V_2 for p=" + std::to_string(p) + ", m=" + std::to_string(m) +
                        " copies",
                    "topdeg = m(p-1) = " + std::to_string(want) + ", hence >= m", spec,
                    [&](LawCase& c) {
                        const auto s = summary_of(build_rep(spec, cfg.closureCap), cfg.degreeCap);
                        c.pass = s.topDegree == want && s.topDegree >= m;
                        c.observed = "topdeg=" + std::to_string(s.topDegree);
                    });
            });
    return run_concurrent(std::move(tasks));
}

std::vector<LawCase> law_dimension_growth(const SuiteConfig& cfg) {
    std::vector<std::function<LawCase()>> tasks;
    tasks.reserve(6);
    const std::vector<std::pair<std::string, ordered_json>> bases = {
        {"minus identity on two variables over Q", spec_negid(2)},
        {"Jordan V_2 for p=2", spec_jordan(2, 2)}};
    for (const auto& [name, base] : bases)
        for (long long m : {1, 2, 3})
            tasks.push_back([name = name, base = base, m, &cfg]() {
                const ordered_json spec = spec_copies(base, m);
                return make_case("L7", name + ", m=" + std::to_string(m) + " copies",
                                 "dim >= m", spec, [&](LawCase& c) {
                                     const auto s =
                                         summary_of(build_rep(spec, cfg.closureCap), cfg.degreeCap);
                                     c.pass = s.dimension >= m;
                                     c.observed = "dim=" + std::to_string(s.dimension);
                                 });
            });
    return run_concurrent(std::move(tasks));
}

std::vector<LawCase> law_noether_chain(const SuiteConfig& cfg) {
    std::vector<LawCase> out;
    const std::vector<std::pair<std::string, ordered_json>> instances = {
        {"symmetric n=2 over Q", spec_symmetric(2)},
        {"symmetric n=3 over Q", spec_symmetric(3)},
        {"minus identity on two variables over Q", spec_negid(2)},
        {"Z_3 scaling two variables over F_7", spec_diagonal(7, {3}, {{1}, {1}})},
        {"Z_4 weight-1 line over F_5", spec_diagonal(5, {4})},
        {"Z_2 x Z_2 diagonal over Q", spec_diagonal(0, {2, 2})}};
    for (const auto& [name, spec] : instances)
        out.push_back(make_case("L8", name, "beta <= topdeg + 1 <= |G| (non-modular)", spec,
                                [&, spec](LawCase& c) {
                                    AnyGroup g = build_rep(spec, cfg.closureCap);
                                    const auto s = summary_of(g, cfg.degreeCap);
                                    const int beta = noether_of(g);
                                    const auto order = static_cast<long long>(order_of(g));
                                    c.pass = beta <= s.topDegree + 1 && s.topDegree + 1 <= order;
                                    c.observed = "beta=" + std::to_string(beta) +
                                                 " topdeg+1=" + std::to_string(s.topDegree + 1) +
                                                 " |G|=" + std::to_string(order);
                                }));
    return out;
}

template <class K>
bool is_normal_subgroup(const MatrixGroup<K>& G, const MatrixGroup<K>& H) {
    for (size_t gi : G.generatorIndices) {
        const auto inv = invert(G.elements[gi], G.field);
        if (!inv) return false;
        for (size_t hi : H.generatorIndices) {
            DenseMatrix<K> conj = G.elements[gi] * H.elements[hi] * (*inv);
            if (!find_element(H, conj)) return false;
        }
    }
    return true;
}

std::vector<LawCase> law_relative_bound(const SuiteConfig& cfg) {
    std::vector<LawCase> out;
    out.push_back(make_case(
        "L9", "symmetric n=3 over Q with the normal alternating subgroup",
        "H normal and topdeg(G) + 1 <= (G:H) * (topdeg(H) + 1)", spec_symmetric(3),
        [&](LawCase& c) {
            auto G = std::get<MatrixGroup<Rational>>(build_rep(spec_symmetric(3), cfg.closureCap));
            DenseMatrix<Rational> threeCycle = G.elements[G.generatorIndices.at(0)] *
                                               G.elements[G.generatorIndices.at(1)];
            auto idx = find_element(G, threeCycle);
            if (!idx) throw std::runtime_error("three-cycle not found in closure");
            auto H = subgroup_generated(G, {*idx});
            if (!is_normal_subgroup(G, H)) {
                c.pass = false;
                c.observed = "subgroup is not normal";
                return;
            }
            const auto sg = coinvariant_summary(G, cfg.degreeCap);
            const auto sh = coinvariant_summary(H, cfg.degreeCap);
            const auto index = static_cast<long long>(G.order() / H.order());
            c.pass = sg.topDegree + 1 <= index * (sh.topDegree + 1);
            c.observed = "normal, (G:H)=" + std::to_string(index) +
                         " topdeg(G)+1=" + std::to_string(sg.topDegree + 1) +
                         " topdeg(H)+1=" + std::to_string(sh.topDegree + 1);
        }));
    out.push_back(make_case(
        "L9", "Z_4 weight-1 line over F_5 with its order-2 subgroup",
        "H normal and topdeg(G) + 1 <= (G:H) * (topdeg(H) + 1)", spec_diagonal(5, {4}),
        [&](LawCase& c) {
            auto G = std::get<MatrixGroup<Fp>>(build_rep(spec_diagonal(5, {4}), cfg.closureCap));
            const size_t gen = G.generatorIndices.at(0);
            auto table = multiplication_table(G);
            auto H = subgroup_generated(G, {table[gen][gen]});
            if (!is_normal_subgroup(G, H)) {
                c.pass = false;
                c.observed = "subgroup is not normal";
                return;
            }
            const auto sg = coinvariant_summary(G, cfg.degreeCap);
            const auto sh = coinvariant_summary(H, cfg.degreeCap);
            const auto index = static_cast<long long>(G.order() / H.order());
            c.pass = sg.topDegree + 1 <= index * (sh.topDegree + 1);
            c.observed = "normal, (G:H)=" + std::to_string(index) +
                         " topdeg(G)+1=" + std::to_string(sg.topDegree + 1) +
                         " topdeg(H)+1=" + std::to_string(sh.topDegree + 1);
        }));
    return out;
}

// ---------- polarization sampling (shared with the acceptance battery) ----------

template <class K>
K random_unit(const FieldSpec& field, std::mt19937_64& rng) {
    const long long q = field.characteristic == 0 ? 8 : field.characteristic;
    return field_element<K>(field, 1 + static_cast<long long>(rng() % (q - 1)));
}

Monomial random_monomial(const PolyRing& ring, int degree, std::mt19937_64& rng) {
    std::vector<int32_t> exps(ring.nvars, 0);
    for (int i = 0; i < degree; ++i) ++exps[rng() % ring.nvars];
    return Monomial(std::move(exps));
}

template <class K>
PolarizationSample sample_polarization_family(const MatrixGroup<K>& g, const std::string& name,
                                              int m, uint64_t seed, long long degreeCap,
                                              size_t target) {
    PolarizationSample out;
    out.family = name;
    out.copies = m;
    const auto idealA = hilbert_ideal(g, degreeCap);
    const auto idealB = hilbert_ideal(vector_copies(g, m), degreeCap).groebner;
    std::mt19937_64 rng(seed);
    std::vector<Polynomial<K>> samples = idealA.generators;  // every generator first
    while (samples.size() < target) {
        const auto& f1 = idealA.generators[rng() % idealA.generators.size()];
        const auto& f2 = idealA.generators[rng() % idealA.generators.size()];
        const int d = std::max(f1.degree(), f2.degree()) + static_cast<int>(rng() % 2);
        auto lift = [&](const Polynomial<K>& f) {
            const Monomial u = random_monomial(f.ring, d - f.degree(), rng);
            return Polynomial<K>::monomial_term(f.ring, u, random_unit<K>(f.ring.field, rng)) * f;
        };
        Polynomial<K> f = lift(f1) + lift(f2);
        if (!f.is_zero_poly()) samples.push_back(std::move(f));
    }
    for (const auto& f : samples) {
        ++out.checked;
        if (verify_polarization_lemma(g, m, f, idealB, &idealA.groebner)) ++out.passed;
    }
    return out;
}

PolarizationSample sample_polarization(const ordered_json& spec, const std::string& name, int m,
                                       uint64_t seed, long long closureCap, long long degreeCap,
                                       size_t target) {
    AnyGroup g = build_rep(spec, closureCap);
    return std::visit(
        [&](const auto& grp) {
            return sample_polarization_family(grp, name, m, seed, degreeCap, target);
        },
        g);
}

std::vector<std::pair<std::string, ordered_json>> polarization_families() {
    return {{"symmetric n=2 over Q", spec_symmetric(2)},
            {"symmetric n=3 over Q", spec_symmetric(3)},
            {"Jordan p=2 k=2", spec_jordan(2, 2)},
            {"Jordan p=3 k=2", spec_jordan(3, 2)},
            {"minus identity on two variables over Q", spec_negid(2)},
            {"Z_3 scaling two variables over F_7", spec_diagonal(7, {3}, {{1}, {1}})}};
}

std::vector<LawCase> law_polarization(const SuiteConfig& cfg) {
    std::vector<std::function<LawCase()>> tasks;
    for (const auto& [name, spec] : polarization_families())
        for (int m : {2, 3})
            tasks.push_back([name = name, spec = spec, m, &cfg]() {
                return make_case(
                    "L10", name + ", m=" + std::to_string(m) + " copies",
                    "all polarization coefficients of sampled Hilbert-ideal members lie in I_B",
                    spec, [&](LawCase& c) {
                        const auto s = sample_polarization(
                            spec, name, m, cfg.seed ^ fnv1a(name + "#" + std::to_string(m)),
                            cfg.closureCap, cfg.degreeCap, 18);
                        c.pass = s.passed == s.checked;
                        c.observed = std::to_string(s.passed) + "/" + std::to_string(s.checked) +
                                     " samples verified";
                    });
            });
    return run_concurrent(std::move(tasks));
}

std::vector<LawCase> law_pure_powers(const SuiteConfig& cfg) {
    std::vector<std::function<LawCase()>> tasks;
    struct Item {
        std::string name;
        ordered_json spec;
        int m;
        bool expectApplicable;
    };
    std::vector<Item> items;
    for (int m : {1, 2, 3}) {
        items.push_back({"symmetric n=2 over Q", spec_symmetric(2), m, true});
        items.push_back({"symmetric n=3 over Q", spec_symmetric(3), m, true});
        items.push_back({"Z_2 sign line over Q", spec_negid(1), m, true});
    }
    items.push_back({"symmetric n=4 over Q", spec_symmetric(4), 1, true});
    items.push_back({"Jordan p=2 k=2", spec_jordan(2, 2), 1, false});
    for (const auto& item : items)
        tasks.push_back([item, &cfg]() {
            const std::string expected =
                item.expectApplicable
                    ? "lead terms are pure powers; topdeg of the m-copy coinvariants equals "
                      "sum(a_i - 1)"
                    : "pure-power hypothesis fails (exponent reaches the characteristic); no "
                      "prediction made";
            return make_case(
                "L11", item.name + ", m=" + std::to_string(item.m) + " copies", expected,
                item.spec, [&](LawCase& c) {
                    AnyGroup g = build_rep(item.spec, cfg.closureCap);
                    const auto report = std::visit(
                        [&](const auto& grp) {
                            return pure_power_topdeg_check(grp, item.m, cfg.degreeCap);
                        },
                        g);
                    if (!item.expectApplicable) {
                        c.pass = !report.applicable;
                        c.observed = report.applicable ? "unexpectedly applicable"
                                                      : "hypothesis fails as expected";
                        return;
                    }
                    c.pass = report.applicable && report.match;
                    c.observed = "predicted=" + std::to_string(report.predicted) +
                                 " measured=" + std::to_string(report.measured);
                });
        });
    return run_concurrent(std::move(tasks));
}

std::vector<LawCase> law_steinberg(const SuiteConfig& cfg) {
    std::vector<std::function<LawCase()>> tasks;
    const std::vector<std::pair<std::string, ordered_json>> instances = {
        {"trivial group on one variable over Q", spec_trivial()},
        {"symmetric n=2 over Q", spec_symmetric(2)},
        {"symmetric n=3 over Q", spec_symmetric(3)},
        {"symmetric n=4 over Q", spec_symmetric(4)},
        {"minus identity on two variables over Q", spec_negid(2)},
        {"Z_3 scaling two variables by the square character over F_7",
         spec_diagonal(7, {3}, {{2}, {2}})},
        {"Z_4 weight-1 line over F_5", spec_diagonal(5, {4})},
        {"Z_2 x Z_2 diagonal over Q", spec_diagonal(0, {2, 2})},
        {"Jordan p=2 k=2", spec_jordan(2, 2)},
        {"Jordan p=3 k=2", spec_jordan(3, 2)}};
    for (const auto& [name, spec] : instances)
        tasks.push_back([name = name, spec = spec, &cfg]() {
            return make_case("L12", name,
                             "|G| <= dim, with equality exactly when the invariant ring is "
                             "polynomial",
                             spec, [&](LawCase& c) {
                                 const auto r = steinberg_of(build_rep(spec, cfg.closureCap),
                                                             cfg.degreeCap);
                                 c.pass = r.coinvariantDim >= r.groupOrder && r.consistent;
                                 c.observed = "dim=" + std::to_string(r.coinvariantDim) +
                                              " |G|=" + std::to_string(r.groupOrder) +
                                              " generators=" +
                                              std::to_string(r.minimalGeneratorCount) +
                                              (r.isPolynomial ? " polynomial" : " not polynomial");
                             });
        });
    return run_concurrent(std::move(tasks));
}

std::vector<LawCase> law_davenport_bridge(const SuiteConfig& cfg) {
    std::vector<std::function<LawCase()>> tasks;
    const std::vector<std::vector<long long>> groups = {{2}, {3}, {4}, {2, 2}, {6}, {2, 4}};
    for (const auto& factors : groups)
        tasks.push_back([factors, &cfg]() {
            const auto g = FiniteAbelianGroup::from_factors(factors);
            std::string name = "Z_" + std::to_string(g.invariantFactors.empty()
                                                         ? 1
                                                         : g.invariantFactors.front());
            for (size_t i = 1; i < g.invariantFactors.size(); ++i)
                name += " x Z_" + std::to_string(g.invariantFactors[i]);
            const long long p = smallest_suitable_prime(g.exponent());
            return make_case(
                "L13", name + " realized diagonally over F_" + std::to_string(p),
                "S(G) = topdeg + 1 = noether number on the maximal non-shortenable zero sum",
                ordered_json(), [&](LawCase& c) {
                    const long long S = davenport_exact(g);
                    const auto seq = complete_to_zero_sum(g, davenport_witness(g));
                    auto rep = rep_from_sequence(g, seq, p);
                    c.repspec = spec_diagonal(p, g.invariantFactors, seq.elements);
                    const auto s = coinvariant_summary(rep, cfg.degreeCap);
                    const int beta = noether_number(rep);
                    c.pass = s.topDegree + 1 == S && beta == S;
                    c.observed = "S=" + std::to_string(S) +
                                 " topdeg+1=" + std::to_string(s.topDegree + 1) +
                                 " beta=" + std::to_string(beta);
                });
        });
    return run_concurrent(std::move(tasks));
}

// ---------- copy-stability survey (informational only) ----------

std::vector<std::string> exploration_survey(const SuiteConfig& cfg) {
    std::vector<std::string> notes;
    notes.push_back(
        "copy-stability survey (informational, not asserted): does topdeg change under vector "
        "copies in the non-modular case?");
    struct Item {
        std::string name;
        ordered_json spec;
        long long m;
    };
    const std::vector<Item> items = {{"symmetric n=2 over Q", spec_symmetric(2), 2},
                                     {"symmetric n=2 over Q", spec_symmetric(2), 3},
                                     {"symmetric n=3 over Q", spec_symmetric(3), 2},
                                     {"minus identity on two variables over Q", spec_negid(2), 2},
                                     {"minus identity on two variables over Q", spec_negid(2), 3},
                                     {"Z_3 scaling two variables over F_7",
                                      spec_diagonal(7, {3}, {{1}, {1}}), 2}};
    for (const auto& item : items) {
        try {
            AnyGroup g = build_rep(item.spec, cfg.closureCap);
            const auto base = summary_of(g, cfg.degreeCap);
            const auto copied = summary_of(copies_of(g, item.m), cfg.degreeCap);
            notes.push_back("  " + item.name + ", m=" + std::to_string(item.m) +
                            ": topdeg(V)=" + std::to_string(base.topDegree) + ", topdeg(V^m)=" +
                            std::to_string(copied.topDegree) +
                            (base.topDegree == copied.topDegree ? " (unchanged)" : " (changed)"));
        } catch (const std::exception& e) {
            notes.push_back("  " + item.name + ", m=" + std::to_string(item.m) +
                            ": error: " + e.what());
        }
    }
    return notes;
}

}  // namespace

std::string summary_text(const CoinvariantSummary& summary) {
    std::ostringstream os;
    os << "dim=" << summary.dimension << " topdeg=" << summary.topDegree << " series=";
    for (size_t i = 0; i < summary.hilbertSeries.size(); ++i)
        os << (i ? "," : "") << summary.hilbertSeries[i];
    return os.str();
}

std::vector<PolarizationSample> polarization_battery(long long closureCap, long long degreeCap,
                                                     uint64_t seed) {
    std::vector<std::future<PolarizationSample>> futures;
    for (const auto& [name, spec] : polarization_families())
        for (int m : {2, 3})
            futures.push_back(std::async(
                std::launch::async, [name = name, spec = spec, m, closureCap, degreeCap, seed]() {
                    return sample_polarization(spec, name, m,
                                               seed ^ fnv1a(name + "#" + std::to_string(m)),
                                               closureCap, degreeCap, 18);
                }));
    std::vector<PolarizationSample> out;
    out.reserve(futures.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

RunReport run_law_suite(const SuiteConfig& config) {
    using Family = std::function<std::vector<LawCase>(const SuiteConfig&)>;
    const std::vector<std::pair<std::string, Family>> families = {
        {"L1", law_subgroup_monotonicity}, {"L2", law_submodule_monotonicity},
        {"L3", law_direct_sum_subadditivity}, {"L4", law_regular_rep_bound},
        {"L5", law_dim_exceeds_topdeg}, {"L6", law_modular_growth},
        {"L7", law_dimension_growth}, {"L8", law_noether_chain},
        {"L9", law_relative_bound}, {"L10", law_polarization},
        {"L11", law_pure_powers}, {"L12", law_steinberg},
        {"L13", law_davenport_bridge}};

    auto selected = [&](const std::string& id) {
        return config.laws.empty() ||
               std::find(config.laws.begin(), config.laws.end(), id) != config.laws.end();
    };

    std::vector<std::pair<std::string, std::future<std::vector<LawCase>>>> futures;
    for (const auto& [id, fn] : families)
        if (selected(id))
            futures.emplace_back(id, std::async(std::launch::async, fn, std::cref(config)));

    RunReport report;
    for (auto& [id, fut] : futures) {
        auto cases = fut.get();
        for (auto& c : cases) report.cases.push_back(std::move(c));
    }
    report.verdict = std::all_of(report.cases.begin(), report.cases.end(),
                                 [](const LawCase& c) { return c.pass; });
    if (config.exploration) report.exploration = exploration_survey(config);
    return report;
}

nlohmann::ordered_json report_to_json(const RunReport& report) {
    ordered_json j;
    j["version"] = report.version;
    ordered_json cases = ordered_json::array();
    for (const auto& c : report.cases) {
        ordered_json item;
        item["lawId"] = c.lawId;
        item["instance"] = c.instance;
        item["expected"] = c.expected;
        item["observed"] = c.observed;
        item["pass"] = c.pass;
        if (!c.pass && !c.repspec.is_null()) item["repspec"] = c.repspec;
        cases.push_back(item);
    }
    j["cases"] = cases;
    if (!report.exploration.empty()) j["exploration"] = report.exploration;
    j["verdict"] = report.verdict ? "pass" : "fail";
    return j;
}

}  // namespace coinv
