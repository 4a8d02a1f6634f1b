/* Copyright (C) 2026 the circulant authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/numeric.hpp"

namespace circulant {

/*
 * Dense univariate polynomial over an exact coefficient ring; the index of a
 * coefficient is its exponent. Canonical form: the zero polynomial is the
 * empty coefficient vector, otherwise the leading coefficient is nonzero.
 * degree() of zero is the empty optional, never -1.
 *
 * Values are immutable in spirit: every operation returns a fresh polynomial,
 * so instances can be shared freely between threads.
 */
template <typename T>
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<T> cs) : coeffs_(cs) { trim(); }
    explicit Poly(std::vector<T> cs) : coeffs_(std::move(cs)) { trim(); }

    static Poly monomial(std::size_t exponent, T c = T(1)) {
        if (c == 0) return Poly();
        std::vector<T> cs(exponent + 1, T(0));
        cs.back() = std::move(c);
        return Poly(std::move(cs));
    }

    /// x^n - 1
    static Poly x_pow_minus_one(std::size_t n) {
        std::vector<T> cs(n + 1, T(0));
        cs[0] = T(-1);
        cs[n] = T(1);
        return Poly(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// 0 for the zero polynomial, degree + 1 otherwise.
    std::size_t size() const { return coeffs_.size(); }

    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
    const std::vector<T>& coeffs() const { return coeffs_; }

    const T& leading() const { return coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Value at x = 1, the coefficient sum.
    T weight() const {
        T s(0);
        for (const T& c : coeffs_) s += c;
        return s;
    }

    T operator()(const T& x) const {
        T v(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            v *= x;
            v += *it;
        }
        return v;
    }

    /// Every coefficient in {0, ..., d}.
    bool is_bounded(long d) const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [d](const T& c) { return c >= 0 && c <= d; });
    }
    bool is_unital() const { return is_bounded(1); }

    Poly& operator+=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Poly operator-() const {
        std::vector<T> cs(coeffs_);
        for (T& c : cs) c = -c;
        return Poly(std::move(cs));
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(r));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Poly& a, const T& s) {
        if (s == 0) return Poly();
        std::vector<T> cs(a.coeffs_);
        for (T& c : cs) c *= s;
        return Poly(std::move(cs));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }

    bool operator==(const Poly&) const = default;

  private:
    std::vector<T> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rat> cs;
    cs.reserve(p.size());
    for (const Int& c : p.coeffs()) cs.emplace_back(c);
    return RatPoly(std::move(cs));
}

/// Requires every coefficient to be an integer.
inline IntPoly to_integer(const RatPoly& p) {
    std::vector<Int> cs;
    cs.reserve(p.size());
    for (const Rat& c : p.coeffs()) {
        if (c.get_den() != 1) throw NotDivisible("coefficient is not an integer: " + rat_string(c));
        cs.push_back(c.get_num());
    }
    return IntPoly(std::move(cs));
}

template <typename T>
struct DivRem {
    Poly<T> quotient;
    Poly<T> remainder;
};

/// Euclidean division over the rationals: a = q*b + r with deg r < deg b.
inline DivRem<Rat> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    std::vector<Rat> r(a.coeffs());
    std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    const auto& bc = b.coeffs();
    while (r.size() >= b.size()) {
        Rat c = r.back() / bc.back();
        std::size_t k = r.size() - b.size();
        q[k] = c;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) r[k + i] -= c * bc[i];
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

/// Division by a monic integer polynomial stays in Z[x].
inline DivRem<Int> divrem_monic(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    if (!b.is_monic()) throw NotMonic("divisor must be monic");
    std::vector<Int> r(a.coeffs());
    std::vector<Int> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    const auto& bc = b.coeffs();
    while (r.size() >= b.size()) {
        Int c = r.back();
        std::size_t k = r.size() - b.size();
        q[k] = c;
        if (c != 0)
            for (std::size_t i = 0; i + 1 < b.size(); ++i) r[k + i] -= c * bc[i];
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

/// Exact quotient a / b for monic b; the remainder must vanish.
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divrem_monic(a, b);
    if (!r.is_zero()) throw NotDivisible("nonzero remainder in exact division");
    return q;
}

struct Xgcd {
    RatPoly gcd;  // monic, or zero when both inputs are zero
    RatPoly s, t;  // s*a + t*b = gcd
};

inline Xgcd xgcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0{Rat(1)}, s1;
    RatPoly t0, t1{Rat(1)};
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        r0 = std::exchange(r1, r2);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (!r0.is_zero()) {
        Rat inv = Rat(1) / r0.leading();
        r0 = r0 * inv;
        s0 = s0 * inv;
        t0 = t0 * inv;
    }
    return {r0, s0, t0};
}

struct XgcdMulti {
    RatPoly gcd;  // monic
    std::vector<RatPoly> cofactors;  // sum cofactors[i]*polys[i] = gcd
};

/// Left fold of pairwise extended gcd, renormalized monic at every step.
inline XgcdMulti xgcd_multi(std::span<const RatPoly> polys) {
    if (std::all_of(polys.begin(), polys.end(), [](const RatPoly& p) { return p.is_zero(); }))
        throw AllZero("gcd of an all-zero family");
    RatPoly g;
    std::vector<RatPoly> cofs;
    bool first = true;
    for (const RatPoly& p : polys) {
        if (first) {
            first = false;
            if (p.is_zero()) {
                g = RatPoly();
                cofs.push_back(RatPoly());
            } else {
                Rat inv = Rat(1) / p.leading();
                g = p * inv;
                cofs.push_back(RatPoly{inv});
            }
            continue;
        }
        Xgcd step = xgcd(g, p);
        for (RatPoly& c : cofs) c = c * step.s;
        cofs.push_back(step.t);
        g = step.gcd;
    }
    return {g, std::move(cofs)};
}

inline XgcdMulti xgcd_multi(const std::vector<RatPoly>& polys) {
    return xgcd_multi(std::span<const RatPoly>(polys));
}

/// Residue modulo x^n - 1: exponents folded mod n.
template <typename T>
Poly<T> reduce_mod_xn_minus_1(const Poly<T>& a, std::size_t n) {
    std::vector<T> r(n, T(0));
    const auto& cs = a.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) r[i % n] += cs[i];
    return Poly<T>(std::move(r));
}

/*
 * res(A, B) = lc(A)^deg B * prod_{A(alpha)=0} B(alpha), computed by the
 * Euclidean remainder sequence with exact bookkeeping of leading-coefficient
 * powers. For monic A this is exactly prod B(alpha) over the roots of A.
 */
inline Rat resultant(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    RatPoly A = a, B = b;
    Rat res(1);
    while (true) {
        const std::size_t m = *A.degree();
        const std::size_t k = *B.degree();
        if (k == 0) {
            Rat base = B.coeff(0);
            Rat acc(1);
            for (std::size_t i = 0; i < m; ++i) acc *= base;
            return res * acc;
        }
        RatPoly R = divrem(A, B).remainder;
        if (R.is_zero()) return Rat(0);
        const std::size_t r = *R.degree();
        if ((m * k) % 2 == 1) res = -res;
        Rat lead = B.leading();
        for (std::size_t i = 0; i < m - r; ++i) res *= lead;
        A = std::exchange(B, R);
    }
}

namespace detail {

inline std::string coeff_str(const Int& c) { return c.get_str(); }
inline std::string coeff_str(const Rat& c) { return rat_string(c); }
inline bool coeff_is_one(const Int& c) { return c == 1; }
inline bool coeff_is_one(const Rat& c) { return c == 1; }

}  // namespace detail

/// "c0 + c1*x + ... + ck*x^k" with zero terms omitted; "0" for zero.
template <typename T>
std::string to_text(const Poly<T>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        const bool negative = cs[i] < 0;
        T mag = negative ? T(-cs[i]) : cs[i];
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = detail::coeff_is_one(mag);
        if (i == 0) {
            out += detail::coeff_str(mag);
        } else {
            if (!unit) out += detail::coeff_str(mag) + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

/// Compact form: one decimal string per coefficient, index = exponent.
template <typename T>
std::vector<std::string> coeff_strings(const Poly<T>& p) {
    std::vector<std::string> out;
    out.reserve(p.size());
    for (const T& c : p.coeffs()) out.push_back(detail::coeff_str(c));
    return out;
}

}  // namespace circulant
