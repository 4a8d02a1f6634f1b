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
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/poly.hpp"

namespace circulant {

/// All divisors of n, increasing.
inline std::vector<long> divisors(long n) {
    if (n < 1) throw OutOfRange("divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

struct FactoredOrder {
    long n = 0;
    std::vector<std::pair<long, int>> prime_powers;  // ascending primes

    std::vector<long> primes() const {
        std::vector<long> ps;
        ps.reserve(prime_powers.size());
        for (auto& [p, e] : prime_powers) ps.push_back(p);
        return ps;
    }

    long totient() const {
        long t = 1;
        for (auto& [p, e] : prime_powers) {
            long pe = 1;
            for (int i = 1; i < e; ++i) pe *= p;
            t *= pe * (p - 1);
        }
        return t;
    }
};

/// Trial division; ample for the orders in scope.
inline FactoredOrder factorize(long n) {
    if (n < 2) throw OutOfRange("factorize: n must be at least 2");
    FactoredOrder f;
    f.n = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.prime_powers.emplace_back(p, e);
    }
    if (m > 1) f.prime_powers.emplace_back(m, 1);
    return f;
}

inline long totient(long n) {
    if (n < 1) throw OutOfRange("totient: n must be positive");
    return n == 1 ? 1 : factorize(n).totient();
}

/*
 * Memoized cyclotomic polynomials. Phi_n is obtained by exact division of
 * x^n - 1 by all Phi_d with d | n, d < n. Concurrent readers share the map;
 * a racing duplicate computation is discarded on insert.
 */
class CyclotomicCache {
  public:
    const IntPoly& get(long n) {
        if (n < 1) throw OutOfRange("cyclotomic: n must be positive");
        {
            std::shared_lock lock(mutex_);
            if (auto it = memo_.find(n); it != memo_.end()) return it->second;
        }
        IntPoly value = compute(n);
        std::unique_lock lock(mutex_);
        auto [it, inserted] = memo_.emplace(n, std::move(value));
        return it->second;
    }

  private:
    IntPoly compute(long n) {
        if (n == 1) return IntPoly{-1, 1};
        IntPoly num = IntPoly::x_pow_minus_one(static_cast<std::size_t>(n));
        for (long d : divisors(n))
            if (d < n) num = exact_div(num, get(d));
        return num;
    }

    std::map<long, IntPoly> memo_;
    std::shared_mutex mutex_;
};

inline const IntPoly& cyclotomic(long n, CyclotomicCache& cache) { return cache.get(n); }

/// G(n, r; x) = (x^n - 1)/(x^r - 1) = 1 + x^r + ... + x^{n-r}, for r | n, r < n.
inline IntPoly fundamental_recurrent(long n, long r) {
    if (r < 1 || r >= n || n % r != 0)
        throw NotProperDivisor("fundamental_recurrent: r must be a proper divisor of n");
    std::vector<Int> cs(static_cast<std::size_t>(n - r + 1), Int(0));
    for (long j = 0; j <= n - r; j += r) cs[static_cast<std::size_t>(j)] = 1;
    return IntPoly(std::move(cs));
}

inline bool divides_cyclotomic(const IntPoly& f, long d, CyclotomicCache& cache) {
    return divrem_monic(f, cache.get(d)).remainder.is_zero();
}

/// { d : d | n and Phi_d | f }
inline std::set<long> cyclotomic_divisors_of(const IntPoly& f, long n, CyclotomicCache& cache) {
    std::set<long> out;
    for (long d : divisors(n))
        if (divides_cyclotomic(f, d, cache)) out.insert(d);
    return out;
}

}  // namespace circulant
