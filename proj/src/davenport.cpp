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

#include "coinv/davenport.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace coinv {
namespace {

/// order -> (prime -> exponent), by trial division.
std::map<long long, int> factorize(long long n) {
    std::map<long long, int> out;
    for (long long p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

long long power_of(long long p, int e) {
    long long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

/// Shared exact-search state: elements indexed in lexicographic tuple order
/// (identity at 0), reachable sub-multiset sums kept as a 64-bit mask.
struct DavenportSearch {
    std::vector<long long> radix;
    size_t count = 1;
    std::vector<std::vector<uint8_t>> add;
    size_t best = 0;
    std::vector<size_t> stack;
    std::vector<size_t> witness;

    explicit DavenportSearch(const FiniteAbelianGroup& g) {
        radix = g.invariantFactors;
        for (long long d : radix) count *= static_cast<size_t>(d);
        add.assign(count, std::vector<uint8_t>(count));
        std::vector<long long> a(radix.size(), 0), b(radix.size(), 0);
        for (size_t i = 0; i < count; ++i) {
            unpack(i, a);
            for (size_t j = 0; j < count; ++j) {
                unpack(j, b);
                size_t s = 0;
                for (size_t t = 0; t < radix.size(); ++t)
                    s = s * static_cast<size_t>(radix[t]) +
                        static_cast<size_t>((a[t] + b[t]) % radix[t]);
                add[i][j] = static_cast<uint8_t>(s);
            }
        }
    }

    void unpack(size_t index, std::vector<long long>& tuple) const {
        for (size_t t = radix.size(); t-- > 0;) {
            tuple[t] = static_cast<long long>(index % static_cast<size_t>(radix[t]));
            index /= static_cast<size_t>(radix[t]);
        }
    }

    uint64_t translate(uint64_t mask, size_t e) const {
        uint64_t out = 0;
        while (mask != 0) {
            const int i = __builtin_ctzll(mask);
            mask &= mask - 1;
            out |= uint64_t{1} << add[static_cast<size_t>(i)][e];
        }
        return out;
    }

    void dfs(size_t minElement, uint64_t reachable) {
        if (stack.size() > best) {
            best = stack.size();
            witness = stack;
        }
        for (size_t e = minElement; e < count; ++e) {
            const uint64_t next = reachable | translate(reachable, e) | (uint64_t{1} << e);
            if ((next & 1u) != 0) continue;
            stack.push_back(e);
            dfs(e, next);
            stack.pop_back();
        }
    }

    void run(long long orderCap) {
        if (static_cast<long long>(count) > orderCap)
            throw std::runtime_error("davenport_exact: group order " + std::to_string(count) +
                                     " exceeds cap " + std::to_string(orderCap));
        if (count > 64)
            throw std::runtime_error("davenport_exact: group order beyond the 64-element search limit");
        dfs(1, 0);
    }
};

void validate(const FiniteAbelianGroup& g) {
    for (size_t i = 0; i < g.invariantFactors.size(); ++i) {
        if (g.invariantFactors[i] < 2)
            throw std::invalid_argument("FiniteAbelianGroup: invariant factors must be at least 2");
        if (i > 0 && g.invariantFactors[i] % g.invariantFactors[i - 1] != 0)
            throw std::invalid_argument("FiniteAbelianGroup: factors must form a divisibility chain");
    }
}

std::vector<long long> reduce_element(const FiniteAbelianGroup& g,
                                      const std::vector<long long>& e) {
    if (e.size() != g.rank())
        throw std::invalid_argument("sequence element has wrong tuple length");
    std::vector<long long> out(e.size());
    for (size_t t = 0; t < e.size(); ++t) {
        const long long d = g.invariantFactors[t];
        out[t] = ((e[t] % d) + d) % d;
    }
    return out;
}

/// Integer partitions of e, parts non-increasing, lexicographically decreasing.
void partitions_into(int e, int maxPart, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(e, maxPart); part >= 1; --part) {
        cur.push_back(part);
        partitions_into(e - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

FiniteAbelianGroup FiniteAbelianGroup::from_factors(const std::vector<long long>& factors) {
    // Per prime, collect cyclic p-power exponents; invariant factor i (from the
    // top) multiplies together each prime's i-th largest power.
    std::map<long long, std::vector<int>> primeExps;
    size_t chain = 0;
    for (long long f : factors) {
        if (f < 1) throw std::invalid_argument("group factors must be positive");
        if (f == 1) continue;
        for (const auto& [p, e] : factorize(f)) {
            primeExps[p].push_back(e);
            chain = std::max(chain, primeExps[p].size());
        }
    }
    for (auto& [p, exps] : primeExps) std::sort(exps.begin(), exps.end());
    FiniteAbelianGroup g;
    g.invariantFactors.assign(chain, 1);
    for (const auto& [p, exps] : primeExps)
        for (size_t i = 0; i < exps.size(); ++i)
            g.invariantFactors[chain - exps.size() + i] *= power_of(p, exps[i]);
    return g;
}

bool FiniteAbelianGroup::is_p_group(long long* prime) const {
    if (invariantFactors.empty()) return false;
    const auto f = factorize(invariantFactors.back());
    if (f.size() != 1) return false;
    if (prime != nullptr) *prime = f.begin()->first;
    return true;
}

bool is_zero_sum_free(const FiniteAbelianGroup& g, const ZeroSumSequence& seq) {
    validate(g);
    const size_t n = static_cast<size_t>(g.order());
    std::vector<char> reachable(n, 0);
    std::vector<long long> tuple(g.rank());
    for (const auto& raw : seq.elements) {
        const auto e = reduce_element(g, raw);
        size_t idx = 0;
        for (size_t t = 0; t < e.size(); ++t)
            idx = idx * static_cast<size_t>(g.invariantFactors[t]) + static_cast<size_t>(e[t]);
        std::vector<char> next = reachable;
        next[idx] = 1;
        for (size_t i = 0; i < n; ++i) {
            if (!reachable[i]) continue;
            size_t rem = i, sum = 0;
            for (size_t t = g.rank(); t-- > 0;) {
                tuple[t] = static_cast<long long>(rem % static_cast<size_t>(g.invariantFactors[t]));
                rem /= static_cast<size_t>(g.invariantFactors[t]);
            }
            for (size_t t = 0; t < g.rank(); ++t)
                sum = sum * static_cast<size_t>(g.invariantFactors[t]) +
                      static_cast<size_t>((tuple[t] + e[t]) % g.invariantFactors[t]);
            next[sum] = 1;
        }
        reachable = std::move(next);
        if (reachable[0]) return false;
    }
    return true;
}

long long davenport_exact(const FiniteAbelianGroup& g, long long orderCap) {
    validate(g);
    if (g.invariantFactors.empty()) return 1;
    DavenportSearch search(g);
    search.run(orderCap);
    return static_cast<long long>(search.best) + 1;
}

ZeroSumSequence davenport_witness(const FiniteAbelianGroup& g, long long orderCap) {
    validate(g);
    ZeroSumSequence seq;
    if (g.invariantFactors.empty()) return seq;
    DavenportSearch search(g);
    search.run(orderCap);
    std::vector<long long> tuple(g.rank());
    for (size_t idx : search.witness) {
        search.unpack(idx, tuple);
        seq.elements.push_back(tuple);
    }
    return seq;
}

ZeroSumSequence complete_to_zero_sum(const FiniteAbelianGroup& g, const ZeroSumSequence& seq) {
    validate(g);
    ZeroSumSequence out;
    std::vector<long long> sum(g.rank(), 0);
    for (const auto& raw : seq.elements) {
        const auto e = reduce_element(g, raw);
        for (size_t t = 0; t < g.rank(); ++t) sum[t] = (sum[t] + e[t]) % g.invariantFactors[t];
        out.elements.push_back(e);
    }
    for (size_t t = 0; t < g.rank(); ++t)
        sum[t] = (g.invariantFactors[t] - sum[t]) % g.invariantFactors[t];
    out.elements.push_back(std::move(sum));
    return out;
}

std::optional<long long> olson_formula(const FiniteAbelianGroup& g) {
    validate(g);
    if (g.rank() <= 2) {
        const long long a = g.rank() >= 1 ? g.invariantFactors[0] : 1;
        const long long b = g.rank() >= 2 ? g.invariantFactors[1] : 1;
        return a + b - 1;
    }
    if (g.is_p_group()) {
        long long s = 1;
        for (long long d : g.invariantFactors) s += d - 1;
        return s;
    }
    return std::nullopt;
}

std::vector<FiniteAbelianGroup> all_abelian_groups(long long maxOrder) {
    std::vector<FiniteAbelianGroup> out;
    for (long long n = 1; n <= maxOrder; ++n) {
        // One group per choice of partition of each prime's exponent.
        std::vector<std::vector<std::vector<int>>> perPrime;
        std::vector<long long> primes;
        for (const auto& [p, e] : factorize(n)) {
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            partitions_into(e, e, cur, parts);
            perPrime.push_back(std::move(parts));
            primes.push_back(p);
        }
        std::vector<FiniteAbelianGroup> groups;
        std::vector<size_t> choice(perPrime.size(), 0);
        while (true) {
            std::vector<long long> factors;
            for (size_t t = 0; t < perPrime.size(); ++t)
                for (int e : perPrime[t][choice[t]]) factors.push_back(power_of(primes[t], e));
            groups.push_back(FiniteAbelianGroup::from_factors(factors));
            size_t t = 0;
            while (t < choice.size() && ++choice[t] == perPrime[t].size()) choice[t++] = 0;
            if (t == choice.size()) break;
        }
        std::sort(groups.begin(), groups.end(),
                  [](const FiniteAbelianGroup& x, const FiniteAbelianGroup& y) {
                      return x.invariantFactors < y.invariantFactors;
                  });
        for (auto& g : groups) out.push_back(std::move(g));
    }
    return out;
}

MatrixGroup<Fp> rep_from_sequence(const FiniteAbelianGroup& g, const ZeroSumSequence& seq,
                                  long long p) {
    validate(g);
    if (!is_prime(p)) throw std::invalid_argument("rep_from_sequence: p must be prime");
    if ((p - 1) % g.exponent() != 0)
        throw std::invalid_argument("rep_from_sequence: p must be 1 mod the group exponent");
    if (g.order() % p == 0)
        throw std::invalid_argument("rep_from_sequence: p must not divide the group order");
    const FieldSpec field = FieldSpec::prime(p);
    if (g.rank() == 0 || seq.elements.empty())
        return trivial_rep<Fp>(field, static_cast<Eigen::Index>(std::max<size_t>(seq.length(), 1)));
    std::vector<std::vector<long long>> weights;
    weights.reserve(seq.elements.size());
    for (const auto& e : seq.elements) weights.push_back(reduce_element(g, e));
    return diagonal_rep<Fp>(field, g.invariantFactors, weights);
}

}  // namespace coinv
