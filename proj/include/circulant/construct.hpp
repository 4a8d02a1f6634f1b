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
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "circulant/cyclo.hpp"
#include "circulant/errors.hpp"
#include "circulant/matrix.hpp"

namespace circulant {

/*
 * Trichotomy of odd orders n = 2k+1: a prime power, a product of two
 * distinct primes, or p*q*r with p < q the two smallest distinct prime
 * factors and odd r = n/(p*q) >= 3 (then p <= r). Only the last class
 * admits singular matrices with k ones.
 */
struct OrderClass {
    enum class Kind { PrimePower, TwoPrimes, Composite };
    long n = 0;
    Kind kind = Kind::PrimePower;
    long p = 0;
    int e = 0;   // PrimePower exponent
    long q = 0;  // TwoPrimes / Composite
    long r = 0;  // Composite
};

inline OrderClass classify(long k) {
    if (k < 1) throw OutOfRange("classify: k must be positive");
    const long n = 2 * k + 1;
    FactoredOrder fo = factorize(n);
    OrderClass oc;
    oc.n = n;
    if (fo.prime_powers.size() == 1) {
        oc.kind = OrderClass::Kind::PrimePower;
        oc.p = fo.prime_powers[0].first;
        oc.e = fo.prime_powers[0].second;
        return oc;
    }
    oc.p = fo.prime_powers[0].first;
    oc.q = fo.prime_powers[1].first;
    if (fo.prime_powers.size() == 2 && fo.prime_powers[0].second == 1 &&
        fo.prime_powers[1].second == 1) {
        oc.kind = OrderClass::Kind::TwoPrimes;
        return oc;
    }
    oc.kind = OrderClass::Kind::Composite;
    oc.r = n / (oc.p * oc.q);
    return oc;
}

struct Construction {
    long k = 0, n = 0;
    long p = 0, q = 0, r = 0;
    long a = 0, b = 0;  // a*p + b*q = k with 1 <= b <= p-1
    std::vector<long> r_set;  // the chosen exponent set R_a
    CirculantSpec spec;
};

namespace detail {

inline std::pair<long, long> solve_weight_split(long k, long p, long q) {
    std::optional<long> found;
    for (long b = 1; b <= p - 1; ++b) {
        long rest = k - b * q;
        if (rest > 0 && rest % p == 0) {
            if (found) throw Error("weight split (a, b) is not unique");
            found = b;
        }
    }
    if (!found) throw Error("no weight split a*p + b*q = k with 1 <= b <= p-1");
    return {(k - *found * q) / p, *found};
}

inline std::vector<long> eligible_exponents(long q, long r) {
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(q * r - q));
    for (long j = 0; j < q * r; ++j)
        if (j % r != 0) out.push_back(j);
    return out;
}

}  // namespace detail

/// q*r - q - a, the number of eligible exponents left over; positive for
/// every composite order, which is what makes R_a choosable.
inline long feasibility_margin(long k) {
    OrderClass oc = classify(k);
    if (oc.kind != OrderClass::Kind::Composite)
        throw NoSingularGuarantee("order 2k+1 = " + std::to_string(oc.n) +
                                  " admits no singular matrix of this type");
    auto [a, b] = detail::solve_weight_split(k, oc.p, oc.q);
    return oc.q * oc.r - oc.q - a;
}

namespace detail {

inline Construction construct_with_r_set(long k, const OrderClass& oc, std::vector<long> r_set,
                                         CyclotomicCache& cache) {
    Construction c;
    c.k = k;
    c.n = oc.n;
    c.p = oc.p;
    c.q = oc.q;
    c.r = oc.r;
    std::tie(c.a, c.b) = solve_weight_split(k, oc.p, oc.q);
    c.r_set = std::move(r_set);

    IntPoly lead;
    for (long i = 0; i < c.b; ++i) lead += IntPoly::monomial(static_cast<std::size_t>(i * c.r));
    IntPoly tail;
    for (long j : c.r_set) tail += IntPoly::monomial(static_cast<std::size_t>(j));
    IntPoly f = lead * fundamental_recurrent(c.n, c.p * c.r) +
                tail * fundamental_recurrent(c.n, c.q * c.r);

    if (!f.is_unital() || f.weight() != k)
        throw Error("internal: constructed row is not unital of weight k");
    if (!divides_cyclotomic(f, c.n, cache))
        throw Error("internal: constructed row is not divisible by Phi_n");
    c.spec = CirculantSpec::from_row(c.n, std::move(f));
    return c;
}

}  // namespace detail

/*
 * Explicit singular unital matrix of weight k for composite 2k+1 = p*q*r:
 * b copies of G(n, p*r) spaced by r plus G(n, q*r) shifted to a exponents
 * avoiding the multiples of r. Deterministic default: the a smallest
 * eligible exponents.
 */
inline Construction construct_singular(long k, CyclotomicCache& cache) {
    OrderClass oc = classify(k);
    if (oc.kind != OrderClass::Kind::Composite)
        throw NoSingularGuarantee("order 2k+1 = " + std::to_string(oc.n) +
                                  " is a prime power or a product of two distinct primes; "
                                  "every such matrix is nonsingular");
    auto [a, b] = detail::solve_weight_split(k, oc.p, oc.q);
    std::vector<long> eligible = detail::eligible_exponents(oc.q, oc.r);
    if (a > static_cast<long>(eligible.size()))
        throw Error("internal: feasibility margin violated");
    eligible.resize(static_cast<std::size_t>(a));
    return detail::construct_with_r_set(k, oc, std::move(eligible), cache);
}

/// Seeded variant: R_a drawn uniformly among eligible exponent sets.
inline Construction construct_singular(long k, CyclotomicCache& cache, std::uint64_t seed) {
    OrderClass oc = classify(k);
    if (oc.kind != OrderClass::Kind::Composite)
        throw NoSingularGuarantee("order 2k+1 = " + std::to_string(oc.n) +
                                  " is a prime power or a product of two distinct primes; "
                                  "every such matrix is nonsingular");
    auto [a, b] = detail::solve_weight_split(k, oc.p, oc.q);
    std::vector<long> eligible = detail::eligible_exponents(oc.q, oc.r);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < static_cast<std::size_t>(a); ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (eligible.size() - i));
        std::swap(eligible[i], eligible[j]);
    }
    eligible.resize(static_cast<std::size_t>(a));
    std::sort(eligible.begin(), eligible.end());
    return detail::construct_with_r_set(k, oc, std::move(eligible), cache);
}

}  // namespace circulant
