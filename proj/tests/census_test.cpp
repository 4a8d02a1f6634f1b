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
#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "circulant/census.hpp"
#include "circulant/decomp.hpp"

using namespace circulant;

namespace {

std::uint64_t e22_mask() {
    std::uint64_t m = 0;
    for (long j : {0, 9, 18, 27, 36, 3, 12, 21, 30, 39, 1, 16, 31, 2, 17, 32, 4, 19, 34, 5, 20, 35})
        m |= std::uint64_t(1) << j;
    return m;
}

}  // namespace

TEST_CASE("closed-form counting of the Phi_45 family") {
    Case1Count c = count_case1();
    CHECK(c.one_c_class == 1890);
    CHECK(c.two_c_classes == 135);
    CHECK(c.total == 2025);
}

TEST_CASE("the Phi_45 family by brute force") {
    auto masks = enumerate_case1_masks();
    CHECK(masks.size() == 2025);
    CHECK(std::binary_search(masks.begin(), masks.end(), e22_mask()));

    CyclotomicCache cache;
    for (std::uint64_t m : masks) {
        IntPoly f = detail::poly_from_mask(m, 45);
        REQUIRE(f.is_unital());
        REQUIRE(f.weight() == 22);
        REQUIRE(divides_cyclotomic(f, 45, cache));
    }

    SECTION("spot-checked verdicts carry witness 45 and never 15") {
        for (std::size_t i = 0; i < masks.size(); i += 101) {
            SingularityVerdict v = is_singular(
                CirculantSpec::from_row(45, detail::poly_from_mask(masks[i], 45)), cache);
            REQUIRE(v.singular);
            REQUIRE(v.witnesses.count(45) == 1);
            REQUIRE(v.witnesses.count(15) == 0);
        }
    }

    SECTION("polynomial form agrees with the mask form") {
        auto polys = enumerate_case1_bruteforce();
        REQUIRE(polys.size() == masks.size());
        CHECK(polys.front() == detail::poly_from_mask(masks.front(), 45));
    }
}

TEST_CASE("the Phi_15 family three ways") {
    CyclotomicCache cache;
    const Int closed = count_case2();
    CHECK(closed == Int("88179840"));

    Case2Enumeration mim = enumerate_case2_bruteforce(cache);
    CHECK(mim.weighted_count == closed);
    CHECK(mim.residue_vectors.size() == 150);

    SECTION("every residue vector checks out and lifts correctly") {
        for (const auto& d : mim.residue_vectors) {
            int sum = 0;
            std::vector<Int> cs(15);
            for (int j = 0; j < 15; ++j) {
                REQUIRE((d[static_cast<std::size_t>(j)] >= 0 && d[static_cast<std::size_t>(j)] <= 3));
                sum += d[static_cast<std::size_t>(j)];
                cs[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(j)];
            }
            REQUIRE(sum == 22);
            IntPoly dp(std::move(cs));
            REQUIRE(divides_cyclotomic(dp, 15, cache));
            Decomposition dec = decompose_bounded(dp, 15, 3, cache);
            REQUIRE(dec.parts.at(3).weight() == 4);
            REQUIRE(dec.parts.at(5).weight() == 2);
        }
    }

    SECTION("raw multiplier-pair scan gives the same family") {
        // every (b, c) in {0..3}^5 x {0..3}^3 with sum 4 / sum 2, a zero
        // entry in b, and max b + max c <= 3
        Int weighted = 0;
        std::set<std::array<int, 15>> vectors;
        std::array<int, 5> b{};
        while (true) {
            int bsum = 0, bmin = 4, bmax = 0;
            for (int v : b) {
                bsum += v;
                bmin = std::min(bmin, v);
                bmax = std::max(bmax, v);
            }
            if (bsum == 4 && bmin == 0) {
                std::array<int, 3> c{};
                while (true) {
                    int csum = 0, cmax = 0;
                    for (int v : c) {
                        csum += v;
                        cmax = std::max(cmax, v);
                    }
                    if (csum == 2 && bmax + cmax <= 3) {
                        std::array<int, 15> d{};
                        Int lift = 1;
                        for (int j = 0; j < 15; ++j) {
                            d[static_cast<std::size_t>(j)] =
                                b[static_cast<std::size_t>(j % 5)] + c[static_cast<std::size_t>(j % 3)];
                            lift *= binomial(3, static_cast<unsigned long>(d[static_cast<std::size_t>(j)]));
                        }
                        vectors.insert(d);
                        weighted += lift;
                    }
                    int i = 2;
                    while (i >= 0 && c[static_cast<std::size_t>(i)] == 3) c[static_cast<std::size_t>(i--)] = 0;
                    if (i < 0) break;
                    ++c[static_cast<std::size_t>(i)];
                }
            }
            int i = 4;
            while (i >= 0 && b[static_cast<std::size_t>(i)] == 3) b[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
            ++b[static_cast<std::size_t>(i)];
        }
        CHECK(weighted == closed);
        CHECK(vectors.size() == 150);
        std::set<std::array<int, 15>> from_mim(mim.residue_vectors.begin(),
                                               mim.residue_vectors.end());
        CHECK(vectors == from_mim);
    }
}

TEST_CASE("no weight-22 row is divisible by both witnesses") {
    CyclotomicCache cache;
    DoubleCount d = count_double(cache);
    CHECK(d.count == 0);
    CHECK(d.weight_equation_unsolvable);
}

TEST_CASE("the full order-45 census") {
    CyclotomicCache cache;
    CensusReport r = census_45(cache);
    CHECK(r.count_phi_n == 2025);
    CHECK(r.count_phi_sub == Int("88179840"));
    CHECK(r.count_both == 0);
    CHECK(r.total == Int("88181865"));
    CHECK(r.total == r.count_phi_n + r.count_phi_sub - r.count_both);
    CHECK(r.universe == Int("4116715363800"));
    CHECK(r.probability.get_num() == Int("653199"));
    CHECK(r.probability.get_den() == Int("30494187880"));
    CHECK(decimal_string(r.probability, 3) == "2.14e-05");
    CHECK(decimal_string(r.probability, 4) == "2.142e-05");
}

TEST_CASE("rows outside the singular family have nonzero determinant") {
    CyclotomicCache cache;
    auto masks = enumerate_case1_masks();
    SeededSampler rng(6061);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        std::uint64_t mask = rng.subset_mask(45, 22);
        IntPoly f = detail::poly_from_mask(mask, 45);
        CirculantSpec spec = CirculantSpec::from_row(45, std::move(f));
        if (is_singular(spec, cache).singular) {
            // singular samples must be in one of the two counted families
            REQUIRE((std::binary_search(masks.begin(), masks.end(), mask) ||
                     divides_cyclotomic(spec.row, 15, cache)));
            continue;
        }
        ++checked;
        REQUIRE(det_resultant(spec) != 0);
    }
    CHECK(checked > 900);
}

TEST_CASE("exhaustive scan agrees with per-row verdicts") {
    CyclotomicCache cache;
    for (auto [n, k] : std::vector<std::pair<long, long>>{{9, 4}, {15, 7}, {11, 5}, {12, 5}}) {
        ExhaustiveResult fast = exhaustive_singular_count(n, k, cache);
        std::uint64_t slow_singular = 0, slow_checked = 0;
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (long i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = static_cast<int>(i);
        do {
            ++slow_checked;
            std::vector<long> support(idx.begin(), idx.end());
            if (is_singular(CirculantSpec::from_support(n, support), cache).singular)
                ++slow_singular;
        } while (next_combination(idx, static_cast<int>(n)));
        REQUIRE(fast.checked == slow_checked);
        REQUIRE(fast.singular == slow_singular);
    }
}

TEST_CASE("sampling is deterministic and respects the nonsingular orders") {
    CyclotomicCache cache;
    SampleResult a = sample_singularity(45, 22, 20000, 4242, cache);
    SampleResult b = sample_singularity(45, 22, 20000, 4242, cache);
    CHECK(a.hits == b.hits);
    CHECK(a.trials == 20000);

    CHECK(sample_singularity(9, 4, 20000, 7, cache).hits == 0);
    CHECK(sample_singularity(15, 7, 20000, 7, cache).hits == 0);

    CHECK_THROWS_AS(sample_singularity(45, 21, 10, 1, cache), OutOfRange);
    CHECK_THROWS_AS(sample_singularity(44, 22, 10, 1, cache), OutOfRange);
    CHECK_THROWS_AS(sample_singularity(45, 22, 0, 1, cache), OutOfRange);
}

TEST_CASE("experimental census") {
    CyclotomicCache cache;

    SECTION("matches the closed form at order 45") {
        CensusReport a = experimental_census(45, 22, cache);
        CensusReport b = census_45(cache);
        CHECK(a.count_phi_n == b.count_phi_n);
        CHECK(a.count_phi_sub == b.count_phi_sub);
        CHECK(a.count_both == b.count_both);
        CHECK(a.total == b.total);
        CHECK(a.universe == b.universe);
    }

    SECTION("two-prime products have empty censuses") {
        CHECK(experimental_census(15, 7, cache).total == 0);
        CHECK(experimental_census(21, 10, cache).total == 0);
        CHECK(experimental_census(35, 17, cache).total == 0);
    }

    SECTION("out-of-scope orders are rejected") {
        CHECK_THROWS_AS(experimental_census(105, 52, cache), NotTwoPrimeOrder);
        CHECK_THROWS_AS(experimental_census(9, 4, cache), NotTwoPrimeOrder);
        CHECK_THROWS_AS(experimental_census(75, 37, cache), EnumerationTooLarge);
        CHECK_THROWS_AS(experimental_census(45, 21, cache), OutOfRange);
    }
}
