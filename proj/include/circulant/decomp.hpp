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
#include <map>
#include <utility>
#include <vector>

#include "circulant/cyclo.hpp"
#include "circulant/errors.hpp"
#include "circulant/poly.hpp"

namespace circulant {

/*
 * A recurrent decomposition of f with respect to n: one multiplier h_{n/p}
 * per distinct prime factor p of n, with deg h_{n/p} < n/p and
 *
 *     f = sum_p h_{n/p}(x) * G(n, n/p; x).
 */
struct Decomposition {
    long n = 0;
    std::map<long, RatPoly> parts;  // prime p -> h_{n/p}

    RatPoly reconstruct() const {
        RatPoly f;
        for (const auto& [p, h] : parts)
            f += h * to_rational(fundamental_recurrent(n, n / p));
        return f;
    }

    bool degree_bounds_ok() const {
        for (const auto& [p, h] : parts)
            if (h.size() > static_cast<std::size_t>(n / p)) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& [p, h] : parts)
            for (const Rat& c : h.coeffs())
                if (c.get_den() != 1) return false;
        return true;
    }

    bool is_bounded(long d) const {
        for (const auto& [p, h] : parts)
            if (!h.is_bounded(d)) return false;
        return true;
    }

    bool is_unital() const { return is_bounded(1); }
};

/*
 * Constructive existence: express Phi_n as a combination of the G(n, n/p)
 * via the extended Euclidean algorithm, scale by q = f / Phi_n, and push
 * every multiplier below its degree bound by reducing modulo x^{n/p} - 1.
 */
inline Decomposition decompose_rational(const IntPoly& f, long n, CyclotomicCache& cache) {
    if (n < 2) throw OutOfRange("decompose: n must be at least 2");
    if (f.size() > static_cast<std::size_t>(n))
        throw DegreeTooLarge("decompose: deg f must be below n");
    auto [q, rem] = divrem_monic(f, cache.get(n));
    if (!rem.is_zero()) throw NotDivisibleByPhiN("decompose: Phi_n does not divide f");

    const std::vector<long> primes = factorize(n).primes();
    std::vector<RatPoly> gs;
    gs.reserve(primes.size());
    for (long p : primes) gs.push_back(to_rational(fundamental_recurrent(n, n / p)));
    XgcdMulti certificate = xgcd_multi(gs);

    const RatPoly qr = to_rational(q);
    Decomposition dec;
    dec.n = n;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        long p = primes[i];
        dec.parts[p] = reduce_mod_xn_minus_1(qr * certificate.cofactors[i],
                                             static_cast<std::size_t>(n / p));
    }
    return dec;
}

namespace detail {

inline std::array<long, 2> two_primes_of(long n) {
    FactoredOrder fo = factorize(n);
    if (fo.prime_powers.size() != 2)
        throw NotTwoPrimeOrder("order must have exactly two distinct prime factors");
    return {fo.prime_powers[0].first, fo.prime_powers[1].first};
}

inline std::vector<Rat> padded_coeffs(const RatPoly& h, std::size_t len) {
    std::vector<Rat> v(h.coeffs());
    v.resize(len, Rat(0));
    return v;
}

}  // namespace detail

/*
 * Shift the pair (h_{n/p}, h_{n/q}) by g(x) = sum_s min(B_s) x^s along the
 * exchange family (h_{n/p} - g*G(n/p, n/pq), h_{n/q} + g*G(n/q, n/pq)) so
 * that every coefficient group B_s of the p-part has minimum zero. This is
 * the unique such decomposition of f; the map is idempotent.
 */
inline Decomposition uniformize_p(const Decomposition& dec) {
    auto [p, q] = detail::two_primes_of(dec.n);
    const long n = dec.n;
    const long npq = n / (p * q);

    const std::vector<Rat> hp =
        detail::padded_coeffs(dec.parts.at(p), static_cast<std::size_t>(n / p));
    std::vector<Rat> mins(static_cast<std::size_t>(npq));
    for (long s = 0; s < npq; ++s) {
        Rat m = hp[static_cast<std::size_t>(s)];
        for (long l = 1; l < q; ++l) m = std::min(m, hp[static_cast<std::size_t>(l * npq + s)]);
        mins[static_cast<std::size_t>(s)] = m;
    }
    const RatPoly g{std::vector<Rat>(mins)};
    const RatPoly gp = to_rational(fundamental_recurrent(n / p, npq));
    const RatPoly gq = to_rational(fundamental_recurrent(n / q, npq));

    Decomposition out;
    out.n = n;
    out.parts[p] = dec.parts.at(p) - g * gp;
    out.parts[q] = dec.parts.at(q) + g * gq;
    return out;
}

/*
 * Decomposition with both multipliers in {0, ..., d}: rational decomposition
 * followed by p-uniformization; boundedness of the result is guaranteed for
 * bounded f when n has exactly two distinct prime factors.
 */
inline Decomposition decompose_bounded(const IntPoly& f, long n, long d, CyclotomicCache& cache) {
    detail::two_primes_of(n);
    if (!f.is_bounded(d))
        throw CoefficientsOutOfRange("decompose_bounded: input coefficients exceed the bound");
    Decomposition dec = uniformize_p(decompose_rational(f, n, cache));
    if (!dec.is_integral() || !dec.is_bounded(d))
        throw Error("internal: uniformized decomposition left the coefficient bound");
    return dec;
}

/*
 * The shift polynomial delta with
 *   dec2.h_{n/p} = dec1.h_{n/p} - delta * G(n/p, n/pq)
 *   dec2.h_{n/q} = dec1.h_{n/q} + delta * G(n/q, n/pq)
 * Two in-bound decompositions of the same f differ by exactly such a shift.
 */
inline RatPoly ambiguity_delta(const Decomposition& dec1, const Decomposition& dec2) {
    if (dec1.n != dec2.n) throw NotSameF("decompositions have different orders");
    auto [p, q] = detail::two_primes_of(dec1.n);
    const long n = dec1.n;
    const long npq = n / (p * q);
    if (!dec1.degree_bounds_ok() || !dec2.degree_bounds_ok())
        throw NoDeltaExists("degree bounds violated; no shift polynomial exists");
    if (dec1.reconstruct() != dec2.reconstruct())
        throw NotSameF("decompositions reconstruct different polynomials");

    const RatPoly gp = to_rational(fundamental_recurrent(n / p, npq));
    const RatPoly gq = to_rational(fundamental_recurrent(n / q, npq));
    auto [dp, rp] = divrem(dec1.parts.at(p) - dec2.parts.at(p), gp);
    auto [dq, rq] = divrem(dec2.parts.at(q) - dec1.parts.at(q), gq);
    if (!rp.is_zero() || !rq.is_zero() || dp != dq)
        throw NotSameF("multiplier differences are not a consistent shift");
    return dp;
}

/*
 * Coefficient groups of a decomposition against the decomposed polynomial:
 * for each residue s mod n/pq, a holds the pq coefficients of f in that
 * class, b the q coefficients of h_{n/p}, c the p coefficients of h_{n/q},
 * indexed by their class position l.
 */
struct CoefficientGrouping {
    long s = 0;
    std::vector<Rat> a, b, c;
};

inline std::vector<CoefficientGrouping> coefficient_groupings(const IntPoly& f,
                                                              const Decomposition& dec) {
    auto [p, q] = detail::two_primes_of(dec.n);
    const long n = dec.n;
    const long npq = n / (p * q);
    const std::vector<Rat> fa = detail::padded_coeffs(to_rational(f), static_cast<std::size_t>(n));
    const std::vector<Rat> hb =
        detail::padded_coeffs(dec.parts.at(p), static_cast<std::size_t>(n / p));
    const std::vector<Rat> hc =
        detail::padded_coeffs(dec.parts.at(q), static_cast<std::size_t>(n / q));

    std::vector<CoefficientGrouping> out;
    out.reserve(static_cast<std::size_t>(npq));
    for (long s = 0; s < npq; ++s) {
        CoefficientGrouping grp;
        grp.s = s;
        for (long l = 0; l < p * q; ++l) grp.a.push_back(fa[static_cast<std::size_t>(l * npq + s)]);
        for (long l = 0; l < q; ++l) grp.b.push_back(hb[static_cast<std::size_t>(l * npq + s)]);
        for (long l = 0; l < p; ++l) grp.c.push_back(hc[static_cast<std::size_t>(l * npq + s)]);
        out.push_back(std::move(grp));
    }
    return out;
}

/// a_{l} = b_{l mod q} + c_{l mod p} positionwise in every residue class.
inline bool sum_law_holds(const IntPoly& f, const Decomposition& dec) {
    auto [p, q] = detail::two_primes_of(dec.n);
    for (const CoefficientGrouping& grp : coefficient_groupings(f, dec))
        for (long l = 0; l < p * q; ++l)
            if (grp.a[static_cast<std::size_t>(l)] !=
                grp.b[static_cast<std::size_t>(l % q)] + grp.c[static_cast<std::size_t>(l % p)])
                return false;
    return true;
}

/*
 * Evidence that the explicit degree-100 unital polynomial of weight 16,
 * divisible by Phi_105, admits no unital recurrent decomposition: its
 * residues at the three relevant cyclotomic factors are nonzero, yet every
 * nonnegative solution of the weight equation 16 = 3a + 5b + 7c forces one
 * of the lower two multipliers to vanish.
 */
struct Evidence105 {
    IntPoly f;
    bool identity_matches = false;  // G-combination expansion reproduces f
    Int weight;
    bool divisible_by_phi105 = false;
    IntPoly residue_mod_phi35;
    IntPoly residue_mod_phi21;
    IntPoly residue_mod_phi15;
    // (a, b, c) = (h35(1), h21(1), h15(1)) with 3a + 5b + 7c = 16
    std::vector<std::array<long, 3>> weight_solutions;
    bool every_solution_contradicted = false;
};

inline Evidence105 verify_no_unital_decomposition_105(CyclotomicCache& cache) {
    Evidence105 ev;
    std::vector<Int> cs(101, Int(0));
    for (long e : {5L, 6L, 10L, 25L, 27L, 35L, 40L, 48L, 50L, 65L, 69L, 70L, 80L, 85L, 95L, 100L})
        cs[static_cast<std::size_t>(e)] = 1;
    ev.f = IntPoly(std::move(cs));
    ev.weight = ev.f.weight();

    IntPoly lead;
    for (long e : {0L, 5L, 10L, 15L, 25L, 30L}) lead += IntPoly::monomial(static_cast<std::size_t>(e));
    IntPoly expansion = lead * fundamental_recurrent(105, 35) +
                        IntPoly::monomial(6) * fundamental_recurrent(105, 21) -
                        fundamental_recurrent(105, 15);
    ev.identity_matches = expansion == ev.f;

    ev.divisible_by_phi105 = divides_cyclotomic(ev.f, 105, cache);
    ev.residue_mod_phi35 = divrem_monic(ev.f, cache.get(35)).remainder;
    ev.residue_mod_phi21 = divrem_monic(ev.f, cache.get(21)).remainder;
    ev.residue_mod_phi15 = divrem_monic(ev.f, cache.get(15)).remainder;

    for (long a = 0; 3 * a <= 16; ++a)
        for (long b = 0; 3 * a + 5 * b <= 16; ++b)
            for (long c = 0; 3 * a + 5 * b + 7 * c <= 16; ++c)
                if (3 * a + 5 * b + 7 * c == 16) ev.weight_solutions.push_back({a, b, c});

    // A unital h with h(1) = 0 is zero, so the solution kills the
    // corresponding G-term; f would then vanish at that cyclotomic factor.
    ev.every_solution_contradicted = !ev.weight_solutions.empty();
    for (const auto& [a, b, c] : ev.weight_solutions) {
        bool contradicted = (b == 0 && !ev.residue_mod_phi21.is_zero()) ||
                            (c == 0 && !ev.residue_mod_phi15.is_zero());
        if (!contradicted) ev.every_solution_contradicted = false;
    }
    return ev;
}

}  // namespace circulant
