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

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "circulant/census.hpp"
#include "circulant/construct.hpp"
#include "circulant/decomp.hpp"
#include "circulant/matrix.hpp"

namespace circulant::cli {

inline constexpr const char* kVersion = "circulant 1.0.0";

struct RunResult {
    int exit_code = 0;
    std::string out;  // stdout payload
    std::string err;  // diagnostics only
};

namespace detail {

inline std::vector<long> parse_support(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("--support", "empty element in support list");
        std::size_t pos = 0;
        long v = std::stol(item, &pos);
        if (pos != item.size())
            throw CLI::ValidationError("--support", "not an integer: '" + item + "'");
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw CLI::ValidationError("--support", "duplicate support elements");
    return out;
}

inline nlohmann::json coeff_json(const RatPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const std::string& s : coeff_strings(p)) arr.push_back(s);
    return arr;
}

inline nlohmann::json coeff_json(const IntPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const std::string& s : coeff_strings(p)) arr.push_back(s);
    return arr;
}

}  // namespace detail

/*
 * Dispatch one invocation. Exit code 0 on success, 1 on usage errors,
 * 2 on domain errors; --json prints a single JSON object on stdout, with
 * large integers rendered as decimal strings.
 */
inline RunResult run(const std::vector<std::string>& argv) {
    RunResult result;
    std::ostringstream out;

    CLI::App app{"Exact singularity toolkit for circulant 0/1 matrices"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    CyclotomicCache cache;

    // cyclotomic <n>
    long cyc_n = 0;
    bool cyc_json = false;
    CLI::App* cyc = app.add_subcommand("cyclotomic", "Print the n-th cyclotomic polynomial");
    cyc->add_option("n", cyc_n, "index n >= 1")->required();
    cyc->add_flag("--json", cyc_json, "emit JSON");
    cyc->callback([&] {
        const IntPoly& phi = cache.get(cyc_n);
        if (cyc_json) {
            nlohmann::json j;
            j["coefficients"] = detail::coeff_json(phi);
            j["degree"] = phi.is_zero() ? -1 : static_cast<long>(*phi.degree());
            j["n"] = cyc_n;
            out << j.dump() << "\n";
        } else {
            out << "Phi_" << cyc_n << "(x) = " << to_text(phi) << "\n";
        }
    });

    // check --n --support
    long check_n = 0;
    std::string check_support;
    bool check_json = false;
    CLI::App* chk = app.add_subcommand("check", "Decide singularity of a unital circulant matrix");
    chk->add_option("--n", check_n, "order")->required();
    chk->add_option("--support", check_support, "comma-separated exponents of the 1s")->required();
    chk->add_flag("--json", check_json, "emit JSON");
    chk->callback([&] {
        CirculantSpec spec = CirculantSpec::from_support(check_n, detail::parse_support(check_support));
        SingularityVerdict v = is_singular(spec, cache);
        if (check_json) {
            nlohmann::json j;
            j["singular"] = v.singular;
            j["weight"] = spec.row.weight().get_si();
            j["witnesses"] = v.witnesses;
            out << j.dump() << "\n";
        } else {
            out << "singular: " << (v.singular ? "true" : "false") << "\n";
            out << "witnesses:";
            for (long d : v.witnesses) out << " " << d;
            out << "\n";
            out << "weight: " << spec.row.weight().get_str() << "\n";
        }
    });

    // det --n --support [--method]
    long det_n = 0;
    std::string det_support;
    std::string det_method = "resultant";
    bool det_json = false;
    CLI::App* det = app.add_subcommand("det", "Exact determinant of a unital circulant matrix");
    det->add_option("--n", det_n, "order")->required();
    det->add_option("--support", det_support, "comma-separated exponents of the 1s")->required();
    det->add_option("--method", det_method, "resultant | elimination | both")
        ->check(CLI::IsMember({"resultant", "elimination", "both"}));
    det->add_flag("--json", det_json, "emit JSON");
    det->callback([&] {
        CirculantSpec spec = CirculantSpec::from_support(det_n, detail::parse_support(det_support));
        nlohmann::json j;
        std::vector<std::pair<std::string, std::string>> lines;
        if (det_method == "resultant" || det_method == "both")
            lines.emplace_back("resultant", det_resultant(spec).get_str());
        if (det_method == "elimination" || det_method == "both")
            lines.emplace_back("elimination", det_elimination(spec).get_str());
        if (det_json) {
            for (auto& [k, v] : lines) j[k] = v;
            out << j.dump() << "\n";
        } else {
            for (auto& [k, v] : lines) out << k << ": " << v << "\n";
        }
    });

    // decompose --n --support [--bound d]
    long dec_n = 0;
    std::string dec_support;
    long dec_bound = -1;
    bool dec_json = false;
    CLI::App* dec = app.add_subcommand("decompose",
                                       "Recurrent decomposition of the row polynomial");
    dec->add_option("--n", dec_n, "order")->required();
    dec->add_option("--support", dec_support, "comma-separated exponents of the 1s")->required();
    dec->add_option("--bound", dec_bound, "coefficient bound d; uniformizes the result");
    dec->add_flag("--json", dec_json, "emit JSON");
    dec->callback([&] {
        CirculantSpec spec = CirculantSpec::from_support(dec_n, detail::parse_support(dec_support));
        Decomposition d = dec_bound >= 0
                              ? decompose_bounded(spec.row, dec_n, dec_bound, cache)
                              : decompose_rational(spec.row, dec_n, cache);
        const bool uniformized = dec_bound >= 0;
        if (dec_json) {
            nlohmann::json parts;
            for (const auto& [p, h] : d.parts) parts[std::to_string(p)] = detail::coeff_json(h);
            nlohmann::json j;
            j["parts"] = parts;
            j["uniformized"] = uniformized;
            j["unital"] = d.is_unital();
            out << j.dump() << "\n";
        } else {
            for (const auto& [p, h] : d.parts)
                out << "h_" << (dec_n / p) << " = " << to_text(h) << "\n";
            out << "uniformized: " << (uniformized ? "true" : "false") << "\n";
            out << "unital: " << (d.is_unital() ? "true" : "false") << "\n";
        }
    });

    // construct --k [--seed]
    long con_k = 0;
    std::uint64_t con_seed = 0;
    bool con_has_seed = false;
    bool con_json = false;
    CLI::App* con = app.add_subcommand("construct",
                                       "Build a singular unital matrix with k ones, order 2k+1");
    con->add_option("--k", con_k, "number of ones")->required();
    CLI::Option* seed_opt = con->add_option("--seed", con_seed, "randomize the exponent set R_a");
    con->add_flag("--json", con_json, "emit JSON");
    con->callback([&] {
        con_has_seed = seed_opt->count() > 0;
        Construction c = con_has_seed ? construct_singular(con_k, cache, con_seed)
                                      : construct_singular(con_k, cache);
        std::vector<long> support;
        for (std::size_t i = 0; i < c.spec.row.size(); ++i)
            if (c.spec.row.coeff(i) == 1) support.push_back(static_cast<long>(i));
        if (con_json) {
            nlohmann::json j;
            j["R_a"] = c.r_set;
            j["a"] = c.a;
            j["b"] = c.b;
            j["n"] = c.n;
            j["p"] = c.p;
            j["q"] = c.q;
            j["r"] = c.r;
            j["singular"] = true;
            j["support"] = support;
            out << j.dump() << "\n";
        } else {
            out << "n = " << c.n << " = " << c.p << " * " << c.q << " * " << c.r << "\n";
            out << "a = " << c.a << ", b = " << c.b << "\n";
            out << "R_a =";
            for (long j : c.r_set) out << " " << j;
            out << "\n";
            out << "support =";
            for (long j : support) out << " " << j;
            out << "\n";
        }
    });

    // count --n --k [--verify-bruteforce] [--experimental]
    long cnt_n = 45, cnt_k = 22;
    bool cnt_verify = false, cnt_json = false, cnt_experimental = false;
    CLI::App* cnt = app.add_subcommand("count", "Exact census of singular matrices at (n, k)");
    cnt->add_option("--n", cnt_n, "order (default 45)");
    cnt->add_option("--k", cnt_k, "weight (default 22)");
    cnt->add_flag("--verify-bruteforce", cnt_verify, "cross-check with enumeration oracles");
    cnt->add_flag("--experimental", cnt_experimental,
                  "allow two-prime orders other than 45 (documented extension)");
    cnt->add_flag("--json", cnt_json, "emit JSON");
    cnt->callback([&] {
        CensusReport r;
        if (cnt_n == 45 && cnt_k == 22) {
            r = census_45(cache);
        } else if (cnt_experimental) {
            r = experimental_census(cnt_n, cnt_k, cache);
        } else {
            throw OutOfRange("the closed-form census covers (n, k) = (45, 22); "
                             "pass --experimental for other two-prime orders");
        }
        bool oracles_agree = false;
        if (cnt_verify && cnt_n == 45) {
            auto case1 = enumerate_case1_bruteforce();
            auto case2 = enumerate_case2_bruteforce(cache);
            oracles_agree = Int(static_cast<unsigned long>(case1.size())) == r.count_phi_n &&
                            case2.weighted_count == r.count_phi_sub;
        }
        const std::string fraction = r.total.get_str() + "/" + r.universe.get_str();
        if (cnt_json) {
            nlohmann::json j;
            j["count_both"] = r.count_both.get_str();
            j["count_phi_n"] = r.count_phi_n.get_str();
            j["count_phi_sub"] = r.count_phi_sub.get_str();
            j["k"] = r.k;
            j["n"] = r.n;
            j["probability_decimal"] = decimal_string(r.probability, 4);
            j["probability_fraction"] = fraction;
            j["total"] = r.total.get_str();
            j["universe"] = r.universe.get_str();
            if (cnt_verify) j["bruteforce_agrees"] = oracles_agree;
            out << j.dump() << "\n";
        } else {
            out << "count_phi_n   = " << r.count_phi_n.get_str() << "\n";
            out << "count_phi_sub = " << r.count_phi_sub.get_str() << "\n";
            out << "count_both    = " << r.count_both.get_str() << "\n";
            out << "total         = " << r.total.get_str() << "\n";
            out << "universe      = " << r.universe.get_str() << "\n";
            out << "probability   = " << fraction << " ~ " << decimal_string(r.probability, 4)
                << "\n";
            if (cnt_verify)
                out << "bruteforce    = " << (oracles_agree ? "agrees" : "DISAGREES") << "\n";
        }
    });

    // sample --n --k --trials --seed
    long smp_n = 0, smp_k = 0;
    long smp_trials = 0;
    std::uint64_t smp_seed = 0;
    bool smp_json = false;
    CLI::App* smp = app.add_subcommand("sample", "Seeded Monte-Carlo singularity frequency");
    smp->add_option("--n", smp_n, "order")->required();
    smp->add_option("--k", smp_k, "weight, must be (n-1)/2")->required();
    smp->add_option("--trials", smp_trials, "number of samples")->required();
    smp->add_option("--seed", smp_seed, "generator seed")->required();
    smp->add_flag("--json", smp_json, "emit JSON");
    smp->callback([&] {
        SampleResult s = sample_singularity(smp_n, smp_k, smp_trials, smp_seed, cache);
        Rat rate = Rat(Int(s.hits)) / Rat(Int(s.trials));
        if (smp_json) {
            nlohmann::json j;
            j["hits"] = s.hits;
            j["k"] = smp_k;
            j["n"] = smp_n;
            j["rate_decimal"] = s.hits == 0 ? "0" : decimal_string(rate, 4);
            j["seed"] = smp_seed;
            j["trials"] = s.trials;
            out << j.dump() << "\n";
        } else {
            out << "hits: " << s.hits << " / " << s.trials << "\n";
            out << "rate: " << (s.hits == 0 ? "0" : decimal_string(rate, 4)) << "\n";
        }
    });

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
        result.out = out.str();
        result.exit_code = 0;
    } catch (const CLI::ParseError& e) {
        std::ostringstream help, diag;
        int code = app.exit(e, help, diag);
        result.out = help.str();
        result.err = diag.str();
        result.exit_code = code == 0 ? 0 : 1;
    } catch (const Error& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    }
    return result;
}

}  // namespace circulant::cli
