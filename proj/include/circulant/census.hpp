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
#include <array>
#include <bit>
#include <cstdint>
#include <future>
#include <thread>
#include <utility>
#include <vector>

#include "circulant/cyclo.hpp"
#include "circulant/errors.hpp"
#include "circulant/matrix.hpp"
#include "circulant/poly.hpp"
#include "circulant/subsets.hpp"

namespace circulant {

namespace detail {

inline int default_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 4 : static_cast<int>(hw);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline IntPoly poly_from_mask(std::uint64_t mask, long n) {
    std::vector<Int> cs(static_cast<std::size_t>(n), Int(0));
    for (long j = 0; j < n; ++j)
        if (mask >> j & 1) cs[static_cast<std::size_t>(j)] = 1;
    return IntPoly(std::move(cs));
}

/// Remainder of g by a monic small-coefficient divisor, in place; true when
/// it vanishes. Coefficient growth is bounded by the caller.
inline bool remainder_is_zero(std::vector<long long>& g, const std::vector<long long>& phi) {
    const int m = static_cast<int>(phi.size()) - 1;
    for (int top = static_cast<int>(g.size()) - 1; top >= m; --top) {
        const long long c = g[static_cast<std::size_t>(top)];
        if (c != 0) {
            for (int i = 0; i < m; ++i)
                g[static_cast<std::size_t>(top - m + i)] -= c * phi[static_cast<std::size_t>(i)];
            g[static_cast<std::size_t>(top)] = 0;
        }
    }
    for (long long v : g)
        if (v != 0) return false;
    return true;
}

/*
 * Per-order singularity tester for unital rows. Folding first modulo
 * x^d - 1 and then reducing modulo Phi_d is equivalent to testing
 * Phi_d | f directly, and keeps all arithmetic in machine words whenever
 * the precomputed growth bound allows it.
 */
class UnitalKernel {
  public:
    static UnitalKernel build(long n, CyclotomicCache& cache) {
        UnitalKernel k;
        k.n_ = n;
        for (long d : divisors(n)) {
            if (d < 2) continue;
            Check c;
            c.d = d;
            c.phi_exact = cache.get(d);
            long maxphi = 0;
            for (const Int& co : c.phi_exact.coeffs()) {
                if (!co.fits_slong_p()) {
                    maxphi = -1;
                    break;
                }
                c.phi.push_back(co.get_si());
                maxphi = std::max(maxphi, std::labs(co.get_si()));
            }
            if (maxphi < 0) {
                c.fast = false;
            } else {
                Int bound(n);
                const long steps = d - static_cast<long>(c.phi_exact.size()) + 1;
                for (long s = 0; s < steps; ++s) bound *= (1 + maxphi);
                c.fast = bound < (Int(1) << 61);
            }
            k.checks_.push_back(std::move(c));
        }
        return k;
    }

    long order() const { return n_; }

    /// Exponent multiset of a unital row; weight-zero rows are singular.
    bool is_singular_exponents(std::span<const int> exponents) const {
        if (exponents.empty()) return true;
        for (const Check& c : checks_) {
            fold_.assign(static_cast<std::size_t>(c.d), 0);
            for (int e : exponents) ++fold_[static_cast<std::size_t>(e % c.d)];
            if (divisible(c)) return true;
        }
        return false;
    }

    bool is_singular_mask(std::uint64_t mask) const {
        if (mask == 0) return true;
        for (const Check& c : checks_) {
            fold_.assign(static_cast<std::size_t>(c.d), 0);
            std::uint64_t m = mask;
            while (m) {
                int j = std::countr_zero(m);
                m &= m - 1;
                ++fold_[static_cast<std::size_t>(j % c.d)];
            }
            if (divisible(c)) return true;
        }
        return false;
    }

  private:
    struct Check {
        long d = 0;
        std::vector<long long> phi;
        IntPoly phi_exact;
        bool fast = true;
    };

    bool divisible(const Check& c) const {
        if (c.fast) return remainder_is_zero(fold_, c.phi);
        std::vector<Int> cs;
        cs.reserve(fold_.size());
        for (long long v : fold_) cs.emplace_back(static_cast<long>(v));
        return divrem_monic(IntPoly(std::move(cs)), c.phi_exact).remainder.is_zero();
    }

    long n_ = 0;
    std::vector<Check> checks_;
    mutable std::vector<long long> fold_;
};

}  // namespace detail

struct ExhaustiveResult {
    std::uint64_t checked = 0;
    std::uint64_t singular = 0;
};

/*
 * Count singular matrices among all C(n, k) unital supports. Workers scan
 * contiguous lexicographic rank ranges; each maintains, per divisor d of n,
 * a 64-bit linear fingerprint of the residue of f modulo Phi_d, updated
 * incrementally as the combination advances. A zero residue forces a zero
 * fingerprint, so candidates are rechecked exactly and false fingerprint
 * collisions are filtered out; nothing is ever missed.
 */
inline ExhaustiveResult exhaustive_singular_count(long n, long k, CyclotomicCache& cache,
                                                  int threads = 0) {
    if (n < 1 || n > 64 || k < 1 || k > n)
        throw OutOfRange("exhaustive scan requires 1 <= k <= n <= 64");
    const detail::UnitalKernel kernel = detail::UnitalKernel::build(n, cache);

    // fingerprint tables: u[d][j] = lambda_d . (x^j mod Phi_d)
    std::vector<std::vector<std::uint64_t>> tables;
    for (long d : divisors(n)) {
        if (d < 2) continue;
        const IntPoly& phi = cache.get(d);
        const std::size_t deg = phi.size() - 1;
        std::vector<std::uint64_t> lambda(deg);
        for (std::size_t i = 0; i < deg; ++i)
            lambda[i] = detail::splitmix64(0x5eedULL * 0x10001ULL + static_cast<std::uint64_t>(d) * 0x100000001ULL +
                                           i);
        std::vector<std::uint64_t> u(static_cast<std::size_t>(n), 0);
        for (long j = 0; j < n; ++j) {
            IntPoly residue =
                divrem_monic(IntPoly::monomial(static_cast<std::size_t>(j % d)), phi).remainder;
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < residue.size(); ++i) {
                long long ci = residue.coeff(i).get_si();
                acc += static_cast<std::uint64_t>(ci) * lambda[i];
            }
            u[static_cast<std::size_t>(j)] = acc;
        }
        tables.push_back(std::move(u));
    }
    const std::size_t dcount = tables.size();

    const std::uint64_t total = choose_u64(n, k);
    auto worker = [&, kernel](IndexRange range) -> std::uint64_t {
        std::vector<int> c = combination_from_rank(range.begin, static_cast<int>(n),
                                                   static_cast<int>(k));
        std::vector<std::uint64_t> acc(dcount, 0);
        for (std::size_t di = 0; di < dcount; ++di)
            for (int j : c) acc[di] += tables[di][static_cast<std::size_t>(j)];
        std::uint64_t singular = 0;
        const int kk = static_cast<int>(k);
        const int nn = static_cast<int>(n);
        for (std::uint64_t it = range.begin; it < range.end; ++it) {
            for (std::size_t di = 0; di < dcount; ++di) {
                if (acc[di] == 0) {
                    if (kernel.is_singular_exponents(std::span<const int>(c))) ++singular;
                    break;
                }
            }
            if (it + 1 == range.end) break;
            int i = kk - 1;
            while (c[static_cast<std::size_t>(i)] == nn - kk + i) --i;
            for (int j = i; j < kk; ++j)
                for (std::size_t di = 0; di < dcount; ++di)
                    acc[di] -= tables[di][static_cast<std::size_t>(c[static_cast<std::size_t>(j)])];
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < kk; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            for (int j = i; j < kk; ++j)
                for (std::size_t di = 0; di < dcount; ++di)
                    acc[di] += tables[di][static_cast<std::size_t>(c[static_cast<std::size_t>(j)])];
        }
        return singular;
    };

    ExhaustiveResult result;
    result.checked = total;
    std::vector<std::future<std::uint64_t>> futs;
    for (IndexRange range : split_ranges(total, detail::default_threads(threads)))
        futs.push_back(std::async(std::launch::async, worker, range));
    for (auto& f : futs) result.singular += f.get();
    return result;
}

// ---------------------------------------------------------------------------
// The order-45, weight-22 census.
// ---------------------------------------------------------------------------

struct Case1Count {
    long one_c_class = 0;    // exactly one residue class holds 1s of h9
    long two_c_classes = 0;  // two residue classes do
    long total = 0;
};

/*
 * Unital pairs (h15, h9) with h15(1) = 4, h9(1) = 2, min B_s = 0 for every
 * class s mod 3, and no class where both h15 and h9 carry a 1. These pairs
 * are exactly the uniformized decompositions of the weight-22 rows divisible
 * by Phi_45, counted one per row.
 */
inline Case1Count count_case1() {
    Case1Count out;
    std::array<std::uint32_t, 3> m15{}, m9{};
    for (int s = 0; s < 3; ++s) {
        for (int l = 0; l < 5; ++l) m15[static_cast<std::size_t>(s)] |= 1u << (3 * l + s);
        for (int l = 0; l < 3; ++l) m9[static_cast<std::size_t>(s)] |= 1u << (3 * l + s);
    }
    for (std::uint32_t h15 = 0; h15 < (1u << 15); ++h15) {
        if (std::popcount(h15) != 4) continue;
        bool ok = true;
        for (int s = 0; s < 3 && ok; ++s)
            ok = (h15 & m15[static_cast<std::size_t>(s)]) != m15[static_cast<std::size_t>(s)];
        if (!ok) continue;
        for (std::uint32_t h9 = 0; h9 < (1u << 9); ++h9) {
            if (std::popcount(h9) != 2) continue;
            int c_classes = 0;
            bool valid = true;
            for (int s = 0; s < 3 && valid; ++s) {
                const bool b1 = (h15 & m15[static_cast<std::size_t>(s)]) != 0;
                const bool c1 = (h9 & m9[static_cast<std::size_t>(s)]) != 0;
                if (c1) ++c_classes;
                valid = !(b1 && c1);
            }
            if (!valid) continue;
            if (c_classes == 1)
                ++out.one_c_class;
            else
                ++out.two_c_classes;
        }
    }
    out.total = out.one_c_class + out.two_c_classes;
    return out;
}

/*
 * Independent Case-1 oracle: scan all 2^15 * 2^9 unital pairs, keep the
 * rows h15*G(45,15) + h9*G(45,9) that are unital of weight 22, and dedup.
 * Tiling the multipliers turns the products into bit masks.
 */
inline std::vector<std::uint64_t> enumerate_case1_masks(int threads = 0) {
    std::vector<std::uint64_t> tile15(1u << 15), tile9(1u << 9);
    for (std::uint64_t h = 0; h < (1u << 15); ++h) tile15[h] = h | h << 15 | h << 30;
    for (std::uint64_t h = 0; h < (1u << 9); ++h)
        tile9[h] = h | h << 9 | h << 18 | h << 27 | h << 36;

    auto worker = [&](std::uint32_t lo, std::uint32_t hi) {
        std::vector<std::uint64_t> found;
        for (std::uint32_t h15 = lo; h15 < hi; ++h15) {
            const std::uint64_t t15 = tile15[h15];
            for (std::uint32_t h9 = 0; h9 < (1u << 9); ++h9) {
                const std::uint64_t t9 = tile9[h9];
                if ((t15 & t9) != 0) continue;
                const std::uint64_t f = t15 | t9;
                if (std::popcount(f) == 22) found.push_back(f);
            }
        }
        return found;
    };

    const int nthreads = detail::default_threads(threads);
    std::vector<std::future<std::vector<std::uint64_t>>> futs;
    const std::uint32_t span = (1u << 15) / static_cast<std::uint32_t>(nthreads) + 1;
    for (std::uint32_t lo = 0; lo < (1u << 15); lo += span)
        futs.push_back(std::async(std::launch::async, worker, lo,
                                  std::min<std::uint32_t>(lo + span, 1u << 15)));
    std::vector<std::uint64_t> all;
    for (auto& f : futs) {
        auto part = f.get();
        all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

inline std::vector<IntPoly> enumerate_case1_bruteforce(int threads = 0) {
    std::vector<IntPoly> out;
    for (std::uint64_t mask : enumerate_case1_masks(threads))
        out.push_back(detail::poly_from_mask(mask, 45));
    return out;
}

/*
 * Closed-form Case-2 count: value profiles of the uniformized pair (h5, h3)
 * of the residue row f mod (x^15 - 1) -- b sums to 4 with a zero entry,
 * c sums to 2, max b + max c <= 3 -- weighted by arrangements and by the
 * number of unital lifts prod_j C(3, d_j) of the residue vector d.
 */
inline Int count_case2() {
    auto profiles = [](int slots, int sum, int maxval) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int left, int prev, int depth) -> void {
            if (depth == slots) {
                if (left == 0) out.push_back(cur);
                return;
            }
            for (int v = std::min(prev, left); v >= 0; --v) {
                cur.push_back(v);
                self(self, left - v, v, depth + 1);
                cur.pop_back();
            }
        };
        rec(rec, sum, maxval, 0);
        return out;
    };
    auto arrangements = [](const std::vector<int>& profile) {
        long fact = 1;
        for (std::size_t i = 2; i <= profile.size(); ++i) fact *= static_cast<long>(i);
        long denom = 1;
        int count = 1;
        for (std::size_t i = 1; i <= profile.size(); ++i) {
            if (i < profile.size() && profile[i] == profile[i - 1]) {
                ++count;
            } else {
                for (int j = 2; j <= count; ++j) denom *= j;
                count = 1;
            }
        }
        return fact / denom;
    };

    Int total = 0;
    for (const auto& b : profiles(5, 4, 3)) {
        if (b.back() != 0) continue;  // min B_0 = 0
        for (const auto& c : profiles(3, 2, 3)) {
            if (b.front() + c.front() > 3) continue;  // keeps every d_j <= 3
            Int lifts = 1;
            for (int j = 0; j < 15; ++j) {
                const int dj = b[static_cast<std::size_t>(j % 5)] + c[static_cast<std::size_t>(j % 3)];
                lifts *= binomial(3, static_cast<unsigned long>(dj));
            }
            total += Int(arrangements(b)) * Int(arrangements(c)) * lifts;
        }
    }
    return total;
}

struct Case2Enumeration {
    Int weighted_count;  // number of unital weight-22 rows with Phi_15 | row
    std::vector<std::array<int, 15>> residue_vectors;
};

/*
 * Independent Case-2 oracle over residue vectors d in {0..3}^15 with
 * sum 22 and Phi_15 | d, met in the middle: the residue of the low eight
 * coefficients is the coefficient vector itself, so each assignment of the
 * high seven digits forces the low part. Every vector found is weighted by
 * its number of unital lifts.
 */
inline Case2Enumeration enumerate_case2_bruteforce(CyclotomicCache& cache) {
    const IntPoly& phi15 = cache.get(15);
    std::array<std::array<long long, 8>, 7> highres{};
    for (int i = 0; i < 7; ++i) {
        IntPoly r = divrem_monic(IntPoly::monomial(static_cast<std::size_t>(8 + i)), phi15).remainder;
        for (std::size_t b = 0; b < 8; ++b)
            highres[static_cast<std::size_t>(i)][b] = r.coeff(b).get_si();
    }
    const std::array<int, 4> lifts{1, 3, 3, 1};

    Case2Enumeration out;
    out.weighted_count = 0;
    std::array<int, 7> high{};
    while (true) {
        int hsum = 0;
        for (int v : high) hsum += v;
        if (hsum <= 22) {
            std::array<long long, 8> v{};
            for (int i = 0; i < 7; ++i) {
                const int d = high[static_cast<std::size_t>(i)];
                if (d == 0) continue;
                for (std::size_t b = 0; b < 8; ++b)
                    v[b] += d * highres[static_cast<std::size_t>(i)][b];
            }
            bool ok = true;
            int lsum = 0;
            std::array<int, 8> low{};
            for (std::size_t b = 0; b < 8 && ok; ++b) {
                const long long c = -v[b];
                ok = c >= 0 && c <= 3;
                low[b] = static_cast<int>(c);
                lsum += static_cast<int>(c);
            }
            if (ok && lsum + hsum == 22) {
                std::array<int, 15> d{};
                Int mult = 1;
                for (int j = 0; j < 8; ++j) {
                    d[static_cast<std::size_t>(j)] = low[static_cast<std::size_t>(j)];
                    mult *= lifts[static_cast<std::size_t>(low[static_cast<std::size_t>(j)])];
                }
                for (int j = 0; j < 7; ++j) {
                    d[static_cast<std::size_t>(8 + j)] = high[static_cast<std::size_t>(j)];
                    mult *= lifts[static_cast<std::size_t>(high[static_cast<std::size_t>(j)])];
                }
                out.residue_vectors.push_back(d);
                out.weighted_count += mult;
            }
        }
        int i = 6;
        while (i >= 0 && high[static_cast<std::size_t>(i)] == 3) {
            high[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++high[static_cast<std::size_t>(i)];
    }
    std::sort(out.residue_vectors.begin(), out.residue_vectors.end());
    return out;
}

struct DoubleCount {
    long count = 0;  // Case-1 rows additionally divisible by Phi_15
    bool weight_equation_unsolvable = false;  // 4 = 3a + 5b has no solution
};

inline DoubleCount count_double(CyclotomicCache& cache, int threads = 0) {
    DoubleCount out;
    for (std::uint64_t mask : enumerate_case1_masks(threads))
        if (divides_cyclotomic(detail::poly_from_mask(mask, 45), 15, cache)) ++out.count;
    bool solvable = false;
    for (long a = 0; 3 * a <= 4; ++a)
        for (long b = 0; 3 * a + 5 * b <= 4; ++b)
            if (3 * a + 5 * b == 4) solvable = true;
    out.weight_equation_unsolvable = !solvable;
    return out;
}

struct CensusReport {
    long n = 0, k = 0;
    Int count_phi_n;    // rows divisible by Phi_n
    Int count_phi_sub;  // rows divisible by a proper cyclotomic witness
    Int count_both;     // double counts
    Int total;          // inclusion-exclusion
    Int universe;       // C(n, k)
    Rat probability;    // total / universe, exact
};

inline CensusReport census_45(CyclotomicCache& cache, int threads = 0) {
    CensusReport r;
    r.n = 45;
    r.k = 22;
    r.count_phi_n = count_case1().total;
    r.count_phi_sub = count_case2();
    r.count_both = count_double(cache, threads).count;
    r.total = r.count_phi_n + r.count_phi_sub - r.count_both;
    r.universe = binomial(45, 22);
    r.probability = Rat(r.total) / Rat(r.universe);
    return r;
}

struct SampleResult {
    long hits = 0;
    long trials = 0;
};

/// Seeded Monte-Carlo estimate of the singularity probability at (n, k).
inline SampleResult sample_singularity(long n, long k, long trials, std::uint64_t seed,
                                       CyclotomicCache& cache) {
    if (n < 3 || n % 2 == 0) throw OutOfRange("sample: n must be odd and at least 3");
    if (k != (n - 1) / 2) throw OutOfRange("sample: k must equal (n - 1) / 2");
    if (trials < 1) throw OutOfRange("sample: trials must be positive");
    const detail::UnitalKernel kernel = detail::UnitalKernel::build(n, cache);
    SeededSampler sampler(seed);
    SampleResult out;
    out.trials = trials;
    std::vector<int> exponents;
    for (long t = 0; t < trials; ++t) {
        exponents = sampler.subset_indices(static_cast<int>(n), static_cast<int>(k));
        if (kernel.is_singular_exponents(std::span<const int>(exponents))) ++out.hits;
    }
    return out;
}

/*
 * Census for other two-prime orders n = p^e1 * q^e2 at weight k = (n-1)/2.
 * Neither p nor q divides k, so the possible witnesses are the divisors of
 * n that contain both primes. The Phi_n family is enumerated as tiled
 * unital multiplier pairs; a proper witness d is enumerated over residue
 * vectors modulo x^d - 1 exactly as in the order-45 case; double counts
 * come from filtering the Phi_n family. Validated against the closed-form
 * census at n = 45 only.
 */
inline CensusReport experimental_census(long n, long k, CyclotomicCache& cache, int threads = 0) {
    FactoredOrder fo = factorize(n);
    if (fo.prime_powers.size() != 2)
        throw NotTwoPrimeOrder("experimental census requires n = p^e1 * q^e2");
    if (n % 2 == 0 || k != (n - 1) / 2)
        throw OutOfRange("experimental census requires odd n and k = (n - 1) / 2");
    const long p = fo.prime_powers[0].first, q = fo.prime_powers[1].first;
    const long np = n / p, nq = n / q;
    if (n > 64 || np + nq > 26)
        throw EnumerationTooLarge("experimental census is limited to n <= 64 with n/p + n/q <= 26");

    std::vector<long> witnesses;
    for (long d : divisors(n))
        if (d % (p * q) == 0) witnesses.push_back(d);
    if (witnesses.size() > 2)
        throw EnumerationTooLarge("more than one proper witness divisor is out of scope");

    // Phi_n family: dedup unital rows h_{n/p} G(n, n/p) + h_{n/q} G(n, n/q).
    std::vector<std::uint64_t> family;
    for (std::uint64_t hp = 0; hp < (std::uint64_t(1) << np); ++hp) {
        std::uint64_t tp = 0;
        for (long c = 0; c < p; ++c) tp |= hp << (c * np);
        for (std::uint64_t hq = 0; hq < (std::uint64_t(1) << nq); ++hq) {
            std::uint64_t tq = 0;
            for (long c = 0; c < q; ++c) tq |= hq << (c * nq);
            if ((tp & tq) != 0) continue;
            const std::uint64_t f = tp | tq;
            if (std::popcount(f) == k) family.push_back(f);
        }
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());

    CensusReport r;
    r.n = n;
    r.k = k;
    r.count_phi_n = Int(static_cast<unsigned long>(family.size()));
    r.count_phi_sub = 0;
    r.count_both = 0;

    for (long d : witnesses) {
        if (d == n) continue;
        const IntPoly& phi = cache.get(d);
        const long deg = static_cast<long>(phi.size()) - 1;
        const long alphabet = n / d;  // residue digits lie in {0..alphabet}
        double scan_size = 1;
        for (long i = 0; i < d - deg; ++i) scan_size *= static_cast<double>(alphabet + 1);
        if (scan_size > 1e8) throw EnumerationTooLarge("residue scan too large");

        std::vector<std::vector<long long>> highres(static_cast<std::size_t>(d - deg));
        for (long i = 0; i < d - deg; ++i) {
            IntPoly res = divrem_monic(IntPoly::monomial(static_cast<std::size_t>(deg + i)), phi)
                              .remainder;
            highres[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(deg), 0);
            for (long b = 0; b < deg; ++b)
                highres[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] =
                    res.coeff(static_cast<std::size_t>(b)).get_si();
        }

        std::vector<int> high(static_cast<std::size_t>(d - deg), 0);
        Int dcount = 0;
        while (true) {
            long hsum = 0;
            for (int v : high) hsum += v;
            if (hsum <= k) {
                std::vector<long long> v(static_cast<std::size_t>(deg), 0);
                for (long i = 0; i < d - deg; ++i) {
                    const int dig = high[static_cast<std::size_t>(i)];
                    if (dig == 0) continue;
                    for (long b = 0; b < deg; ++b)
                        v[static_cast<std::size_t>(b)] +=
                            dig * highres[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
                }
                bool ok = true;
                long lsum = 0;
                for (long b = 0; b < deg && ok; ++b) {
                    const long long c = -v[static_cast<std::size_t>(b)];
                    ok = c >= 0 && c <= alphabet;
                    lsum += static_cast<long>(c);
                }
                if (ok && lsum + hsum == k) {
                    Int mult = 1;
                    for (long b = 0; b < deg; ++b)
                        mult *= binomial(static_cast<unsigned long>(alphabet),
                                         static_cast<unsigned long>(-v[static_cast<std::size_t>(b)]));
                    for (int dig : high)
                        mult *= binomial(static_cast<unsigned long>(alphabet),
                                         static_cast<unsigned long>(dig));
                    dcount += mult;
                }
            }
            long i = d - deg - 1;
            while (i >= 0 && high[static_cast<std::size_t>(i)] == alphabet) {
                high[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++high[static_cast<std::size_t>(i)];
        }
        r.count_phi_sub += dcount;

        for (std::uint64_t mask : family)
            if (divides_cyclotomic(detail::poly_from_mask(mask, n), d, cache)) r.count_both += 1;
    }

    r.total = r.count_phi_n + r.count_phi_sub - r.count_both;
    r.universe = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    r.probability = Rat(r.total) / Rat(r.universe);
    (void)threads;
    return r;
}

}  // namespace circulant
