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

#include <cstdint>
#include <random>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/numeric.hpp"

namespace circulant {

/// C(n, k) as a u64; the enumeration sizes in scope all fit.
inline std::uint64_t choose_u64(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int b = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!b.fits_ulong_p()) throw OutOfRange("binomial exceeds 64 bits");
    return static_cast<std::uint64_t>(b.get_ui());
}

/// Advance ascending index vector c to the next k-combination of {0..n-1}
/// in lexicographic order; false when exhausted. Returns the leftmost
/// changed position through `changed_from` for incremental consumers.
inline bool next_combination(std::vector<int>& c, int n, int* changed_from = nullptr) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    if (changed_from) *changed_from = i;
    return true;
}

/*
 * Combination with the given rank in lexicographic order on ascending index
 * vectors; rank in [0, C(n,k)). Used to split exhaustive scans into
 * contiguous per-worker ranges.
 */
inline std::vector<int> combination_from_rank(std::uint64_t rank, int n, int k) {
    std::vector<int> c(static_cast<std::size_t>(k));
    int v = 0;
    for (int i = 0; i < k; ++i) {
        while (true) {
            std::uint64_t block = choose_u64(n - v - 1, k - i - 1);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        c[static_cast<std::size_t>(i)] = v++;
    }
    return c;
}

struct IndexRange {
    std::uint64_t begin = 0, end = 0;
};

inline std::vector<IndexRange> split_ranges(std::uint64_t total, int parts) {
    if (parts < 1) parts = 1;
    std::vector<IndexRange> out;
    std::uint64_t chunk = total / static_cast<std::uint64_t>(parts);
    std::uint64_t extra = total % static_cast<std::uint64_t>(parts);
    std::uint64_t at = 0;
    for (int i = 0; i < parts; ++i) {
        std::uint64_t len = chunk + (static_cast<std::uint64_t>(i) < extra ? 1 : 0);
        if (len == 0) continue;
        out.push_back({at, at + len});
        at += len;
    }
    return out;
}

/*
 * Deterministic uniform k-subset sampler. The bounded draw is rejection
 * sampling on mt19937_64 output, so identical seeds give identical streams
 * on every platform and standard library.
 */
class SeededSampler {
  public:
    explicit SeededSampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = rng_();
        } while (v >= limit);
        return v % bound;
    }

    /// Floyd's algorithm; uniform over k-subsets of {0..n-1}, n <= 64.
    std::uint64_t subset_mask(int n, int k) {
        std::uint64_t mask = 0;
        for (int j = n - k; j < n; ++j) {
            std::uint64_t t = below(static_cast<std::uint64_t>(j) + 1);
            std::uint64_t bit = std::uint64_t(1) << t;
            if (mask & bit)
                mask |= std::uint64_t(1) << j;
            else
                mask |= bit;
        }
        return mask;
    }

    /// Floyd's algorithm on index vectors; any n.
    std::vector<int> subset_indices(int n, int k) {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(k));
        chosen_.assign(static_cast<std::size_t>(n), false);
        for (int j = n - k; j < n; ++j) {
            int t = static_cast<int>(below(static_cast<std::uint64_t>(j) + 1));
            if (chosen_[static_cast<std::size_t>(t)]) {
                chosen_[static_cast<std::size_t>(j)] = true;
                out.push_back(j);
            } else {
                chosen_[static_cast<std::size_t>(t)] = true;
                out.push_back(t);
            }
        }
        return out;
    }

  private:
    std::mt19937_64 rng_;
    std::vector<bool> chosen_;
};

}  // namespace circulant
