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

#ifndef COINV_FIELDS_HPP
#define COINV_FIELDS_HPP

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <Eigen/Core>

namespace coinv {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// The coefficient field: the rationals (characteristic 0) or a prime field F_p.
struct FieldSpec {
    long long characteristic = 0;

    FieldSpec() = default;
    explicit FieldSpec(long long ch) : characteristic(ch) {
        if (ch != 0 && !is_prime(ch))
            throw std::invalid_argument("FieldSpec: characteristic must be 0 or prime, got " +
                                        std::to_string(ch));
    }
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime(long long p) {
        if (!is_prime(p)) throw std::invalid_argument("FieldSpec: not a prime: " + std::to_string(p));
        return FieldSpec(p);
    }
    bool is_rational() const { return characteristic == 0; }
    bool operator==(const FieldSpec&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const FieldSpec& f) {
    if (f.characteristic == 0) return os << "Q";
    return os << "F_" << f.characteristic;
}

/// Arbitrary-precision rational scalar. Wraps GMP's mpq_class behind plain
/// value-returning operators so it can serve as an Eigen matrix scalar.
class Rational {
   public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) {}
    /// Parses "a" or "a/b".
    explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    const mpq_class& value() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    std::string str() const { return v_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

   private:
    mpq_class v_;
};

/// Element of a prime field F_p with the modulus carried per value.
///
/// A default-constructed or int-constructed element has modulus 0 and acts as
/// an unattached integer constant; it adopts the modulus of the first attached
/// operand it meets. Eigen injects such literals (Scalar(0), Scalar(1)) into
/// products and fills, which is the reason for the rule.
class Fp {
   public:
    Fp() : v_(0), p_(0) {}
    Fp(long long n) : v_(n), p_(0) {}
    Fp(long long n, long long p) : v_(0), p_(p) {
        if (p <= 0) throw std::invalid_argument("Fp: modulus must be positive");
        v_ = n % p;
        if (v_ < 0) v_ += p;
    }

    long long residue() const { return v_; }
    long long modulus() const { return p_; }
    bool attached() const { return p_ != 0; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const {
        if (p_ == 1) return true;  // F_1 never occurs; guard anyway
        return v_ == 1;
    }

    Fp operator-() const {
        if (!attached()) return Fp(-v_);
        return Fp(p_ - v_, p_);
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        long long p = joint_modulus(a, b);
        if (p == 0) return Fp(a.v_ + b.v_);
        return Fp(a.reduced(p) + b.reduced(p), p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        long long p = joint_modulus(a, b);
        if (p == 0) return Fp(a.v_ - b.v_);
        return Fp(a.reduced(p) - b.reduced(p), p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        long long p = joint_modulus(a, b);
        if (p == 0) return Fp(a.v_ * b.v_);
        __int128 prod = static_cast<__int128>(a.reduced(p)) * b.reduced(p);
        return Fp(static_cast<long long>(prod % p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inverse() const {
        if (!attached()) {
            if (v_ == 1 || v_ == -1) return *this;
            throw std::domain_error("Fp: inverse of unattached constant");
        }
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        long long a = v_, m = p_, x0 = 0, x1 = 1;
        while (a > 1) {
            long long q = a / m;
            long long t = m;
            m = a % m;
            a = t;
            t = x0;
            x0 = x1 - q * x0;
            x1 = t;
        }
        return Fp(x1, p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        long long p = joint_modulus(a, b);
        if (p == 0) return a.v_ == b.v_;
        return a.reduced(p) == b.reduced(p);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    /// Ordering of residues, used only for canonical sorting of containers.
    friend bool operator<(const Fp& a, const Fp& b) {
        long long p = joint_modulus(a, b);
        if (p == 0) return a.v_ < b.v_;
        return a.reduced(p) < b.reduced(p);
    }
    friend bool operator>(const Fp& a, const Fp& b) { return b < a; }

    std::string str() const { return std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

   private:
    static long long joint_modulus(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw std::invalid_argument("Fp: mixed moduli " + std::to_string(a.p_) + " and " +
                                        std::to_string(b.p_));
        return a.p_ != 0 ? a.p_ : b.p_;
    }
    long long reduced(long long p) const {
        long long r = v_ % p;
        return r < 0 ? r + p : r;
    }

    long long v_;
    long long p_;
};

// --- uniform scalar construction from a FieldSpec ---

template <class K>
K field_element(const FieldSpec& field, long long n);

template <>
inline Rational field_element<Rational>(const FieldSpec& field, long long n) {
    if (!field.is_rational())
        throw std::invalid_argument("field_element<Rational>: field has positive characteristic");
    return Rational(n);
}

template <>
inline Fp field_element<Fp>(const FieldSpec& field, long long n) {
    if (field.is_rational())
        throw std::invalid_argument("field_element<Fp>: field has characteristic 0");
    return Fp(n, field.characteristic);
}

template <class K>
K field_zero(const FieldSpec& field) {
    return field_element<K>(field, 0);
}
template <class K>
K field_one(const FieldSpec& field) {
    return field_element<K>(field, 1);
}

template <class K>
bool scalar_matches_field(const FieldSpec& field);
template <>
inline bool scalar_matches_field<Rational>(const FieldSpec& field) {
    return field.is_rational();
}
template <>
inline bool scalar_matches_field<Fp>(const FieldSpec& field) {
    return !field.is_rational();
}

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

/// Least primitive root mod p, deterministic.
inline long long primitive_root(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("primitive_root: not a prime");
    if (p == 2) return 1;
    long long phi = p - 1;
    std::vector<long long> primeFactors;
    long long n = phi;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            primeFactors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) primeFactors.push_back(n);
    for (long long g = 2; g < p; ++g) {
        bool ok = true;
        for (long long q : primeFactors) {
            // g^(phi/q) mod p
            long long e = phi / q;
            __int128 acc = 1, base = g;
            long long ee = e;
            while (ee > 0) {
                if (ee & 1) acc = acc * base % p;
                base = base * base % p;
                ee >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

/// Fixed primitive d-th root of unity in F (d must divide p-1; over Q only d <= 2).
template <class K>
K root_of_unity(const FieldSpec& field, long long d);

template <>
inline Rational root_of_unity<Rational>(const FieldSpec&, long long d) {
    if (d == 1) return Rational(1);
    if (d == 2) return Rational(-1);
    throw std::invalid_argument("root_of_unity: Q contains no primitive " + std::to_string(d) +
                                "-th root of unity");
}

template <>
inline Fp root_of_unity<Fp>(const FieldSpec& field, long long d) {
    long long p = field.characteristic;
    if (p == 0 || (p - 1) % d != 0)
        throw std::invalid_argument("root_of_unity: F_" + std::to_string(p) +
                                    " contains no primitive " + std::to_string(d) +
                                    "-th root of unity");
    Fp g(primitive_root(p), p);
    long long e = (p - 1) / d;
    Fp acc(1, p), base = g;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace coinv

namespace Eigen {

template <>
struct NumTraits<coinv::Rational> {
    using Real = coinv::Rational;
    using NonInteger = coinv::Rational;
    using Literal = coinv::Rational;
    using Nested = coinv::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 30
    };
    static inline Real epsilon() { return coinv::Rational(0); }
    static inline Real dummy_precision() { return coinv::Rational(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<coinv::Fp> {
    using Real = coinv::Fp;
    using NonInteger = coinv::Fp;
    using Literal = coinv::Fp;
    using Nested = coinv::Fp;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 4,
        MulCost = 8
    };
    static inline Real epsilon() { return coinv::Fp(0); }
    static inline Real dummy_precision() { return coinv::Fp(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // COINV_FIELDS_HPP
