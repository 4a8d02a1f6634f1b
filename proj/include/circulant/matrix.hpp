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
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "circulant/cyclo.hpp"
#include "circulant/errors.hpp"
#include "circulant/poly.hpp"

namespace circulant {

/*
 * An n x n circulant matrix, held as its order together with the associated
 * polynomial of the first row. Row i is the first row rotated right i times,
 * so entry (i, j) = a_{(j - i) mod n}.
 */
struct CirculantSpec {
    long n = 0;
    IntPoly row;  // deg row < n

    static CirculantSpec from_row(long n, IntPoly row) {
        if (n < 1) throw OutOfRange("circulant order must be positive");
        if (row.size() > static_cast<std::size_t>(n))
            throw DegreeTooLarge("row polynomial degree must be below the order");
        return {n, std::move(row)};
    }

    static CirculantSpec from_support(long n, std::span<const long> support) {
        if (n < 1) throw OutOfRange("circulant order must be positive");
        std::vector<Int> cs(static_cast<std::size_t>(n), Int(0));
        for (long j : support) {
            if (j < 0 || j >= n) throw IndexOutOfRange("support element out of [0, n)");
            cs[static_cast<std::size_t>(j)] = 1;
        }
        return {n, IntPoly(std::move(cs))};
    }

    static CirculantSpec from_support(long n, const std::vector<long>& support) {
        return from_support(n, std::span<const long>(support));
    }

    bool is_unital() const { return row.is_unital(); }
};

struct SingularityVerdict {
    bool singular = false;
    std::set<long> witnesses;  // divisors d of n with Phi_d | row
};

/// Singularity decided by cyclotomic divisibility, never by a determinant.
inline SingularityVerdict is_singular(const CirculantSpec& spec, CyclotomicCache& cache) {
    SingularityVerdict v;
    v.witnesses = cyclotomic_divisors_of(spec.row, spec.n, cache);
    v.singular = !v.witnesses.empty();
    return v;
}

/*
 * det C = prod_j f(omega_j) over the n-th roots of unity, i.e. the resultant
 * of the monic x^n - 1 with f; exact, no floating point.
 */
inline Int det_resultant(const CirculantSpec& spec) {
    Rat r = resultant(RatPoly::x_pow_minus_one(static_cast<std::size_t>(spec.n)),
                      to_rational(spec.row));
    if (r.get_den() != 1) throw Error("resultant of integer inputs must be integral");
    return r.get_num();
}

inline constexpr long kEliminationOracleBound = 64;

/// Independent oracle: fraction-free (Bareiss) elimination on the
/// materialized n x n matrix.
inline Int det_elimination(const CirculantSpec& spec, long bound = kEliminationOracleBound) {
    const long n = spec.n;
    if (n > bound) throw OracleBoundExceeded("order exceeds the elimination oracle bound");
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(n),
                                    std::vector<Int>(static_cast<std::size_t>(n)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) a[i][j] = spec.row.coeff(static_cast<std::size_t>(((j - i) % n + n) % n));

    int sign = 1;
    Int prev(1);
    for (long k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            long pivot = -1;
            for (long i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Int(0);
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

/// Proper divisors r of n with the first row constant on residues mod r.
inline std::set<long> recurrence_divisors(const CirculantSpec& spec) {
    std::set<long> out;
    for (long r : divisors(spec.n)) {
        if (r == spec.n) continue;
        bool recurrent = true;
        for (long j = 0; j < spec.n && recurrent; ++j)
            recurrent = spec.row.coeff(static_cast<std::size_t>(j)) ==
                        spec.row.coeff(static_cast<std::size_t>(j % r));
        if (recurrent) out.insert(r);
    }
    return out;
}

}  // namespace circulant
