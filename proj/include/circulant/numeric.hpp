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

#include <gmpxx.h>

#include <cstdio>
#include <string>

namespace circulant {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow10_int(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

/// Exact rational as a reduced fraction, e.g. "3/7", or "5" when integral.
inline std::string rat_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

/// Scientific notation with `sig` significant digits, round-half-up,
/// computed exactly from the rational. decimal_string(1/3, 3) == "3.33e-01".
inline std::string decimal_string(const Rat& value, int sig) {
    if (sig < 1) sig = 1;
    if (value == 0) return "0";
    const bool neg = value < 0;
    Int a = abs(value.get_num());
    Int b = value.get_den();

    // exponent e with 10^e <= a/b < 10^{e+1}
    auto at_least_pow = [&](long e) {
        if (e >= 0) return a >= b * pow10_int(static_cast<unsigned long>(e));
        return a * pow10_int(static_cast<unsigned long>(-e)) >= b;
    };
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
    while (!at_least_pow(e)) --e;
    while (at_least_pow(e + 1)) ++e;

    const long shift = sig - 1 - e;
    Int num = a, den = b;
    if (shift >= 0)
        num *= pow10_int(static_cast<unsigned long>(shift));
    else
        den *= pow10_int(static_cast<unsigned long>(-shift));
    Int digits = (2 * num + den) / (2 * den);
    if (digits >= pow10_int(static_cast<unsigned long>(sig))) {
        digits = pow10_int(static_cast<unsigned long>(sig - 1));
        ++e;
    }

    std::string ds = digits.get_str();
    std::string mantissa = ds.substr(0, 1);
    if (sig > 1) mantissa += "." + ds.substr(1);
    char exp[16];
    std::snprintf(exp, sizeof exp, "e%+03ld", e);
    return (neg ? "-" : "") + mantissa + exp;
}

}  // namespace circulant
