#pragma once

// Command-line surface. run_cli is separated from main() so the test
// suite can drive subcommands in-process and pin their exact output.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "jmwg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

namespace jmwg::cli {

namespace detail {

inline std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

struct Emitter {
    bool json = false;
    std::string command;
    std::ostream& out;

    void table(const std::vector<std::pair<std::string, std::string>>& rows) const {
        if (json) {
            nlohmann::json j;
            j["command"] = command;
            j["rows"] = nlohmann::json::array();
            for (const auto& [k, v] : rows) j["rows"].push_back({{"key", k}, {"value", v}});
            out << j.dump(2) << "\n";
        } else {
            for (const auto& [k, v] : rows) out << k << '\t' << v << "\n";
        }
    }

    void scalar(const std::string& value) const {
        if (json) {
            nlohmann::json j;
            j["command"] = command;
            j["value"] = value;
            out << j.dump(2) << "\n";
        } else {
            out << value << "\n";
        }
    }
};

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symmetric functions in odd Jucys-Murphy elements, Jack-Plancherel "
                 "averages, and orthogonal Weingarten calculus"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of TSV");

    // expand
    auto* expand = app.add_subcommand("expand", "brute-force class/coset expansion of F at JM elements");
    std::string expandF, expandJm = "odd";
    int expandN = 0;
    bool exhaustive = false;
    expand->add_option("--F", expandF, "symmetric function, e.g. \"h[3]\"")->required();
    expand->add_option("--n", expandN, "level n")->required();
    expand->add_option("--jm", expandJm, "odd: F(J_1,J_3,...)P_n in S_2n; all: F(J_1..J_n) in S_n")
        ->check(CLI::IsMember({"odd", "all"}));
    expand->add_flag("--exhaustive", exhaustive, "verify invariance over the full group");

    // avg
    auto* avg = app.add_subcommand("avg", "Jack-Plancherel average of F");
    std::string avgF, avgMu = "0", avgAlpha = "1";
    int avgN = -1;
    bool avgPoly = false;
    avg->add_option("--F", avgF)->required();
    avg->add_option("--mu", avgMu, "reduced type, e.g. \"1\" or \"2,1\" or \"0\"");
    avg->add_option("--alpha", avgAlpha, "positive rational, e.g. \"1/2\"");
    avg->add_option("--n", avgN, "evaluate at this n");
    avg->add_flag("--poly", avgPoly, "extract the polynomial in n");

    // jack
    auto* jack = app.add_subcommand("jack", "Jack coefficient tables and the measure");
    auto* jackTheta = jack->add_subcommand("theta", "power-sum coefficient table");
    auto* jackMeasure = jack->add_subcommand("measure", "Jack-Plancherel probabilities");
    int jackN = 0;
    std::string jackAlpha = "1";
    for (auto* sub : {jackTheta, jackMeasure}) {
        sub->add_option("--n", jackN)->required();
        sub->add_option("--alpha", jackAlpha);
    }

    // wg
    auto* wg = app.add_subcommand("wg", "orthogonal Weingarten function");
    auto* wgExact = wg->add_subcommand("exact", "exact values at integer N");
    auto* wgSeries = wg->add_subcommand("series", "1/N expansion coefficients");
    auto* wgIntegrate = wg->add_subcommand("integrate", "Haar moment of a monomial in entries");
    auto* wgMc = wg->add_subcommand("mc", "Monte Carlo estimate vs the exact moment");
    int wgN = 0, wgOrder = 6;
    long wgBigN = 0, wgSamples = 100000;
    std::uint64_t wgSeed = 42;
    std::string wgCoset = "0", wgI, wgJ;
    wgExact->add_option("--n", wgN)->required();
    wgExact->add_option("--N", wgBigN)->required();
    wgSeries->add_option("--n", wgN)->required();
    wgSeries->add_option("--coset", wgCoset, "reduced coset type");
    wgSeries->add_option("--order", wgOrder);
    wgIntegrate->add_option("--i", wgI, "row indices, comma separated")->required();
    wgIntegrate->add_option("--j", wgJ, "column indices, comma separated")->required();
    wgIntegrate->add_option("--N", wgBigN)->required();
    wgMc->add_option("--i", wgI)->required();
    wgMc->add_option("--j", wgJ)->required();
    wgMc->add_option("--N", wgBigN)->required();
    wgMc->add_option("--samples", wgSamples);
    wgMc->add_option("--seed", wgSeed);

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites;
    int maxK = 4;
    long vSamples = 100000;
    std::uint64_t vSeed = 42;
    verify->add_option("suites", suites,
                       "props-3 props-4 props-5 props-8 tables-9-1 tables-9-2 conjectures mc all");
    verify->add_option("--max-k", maxK, "largest k for the conjecture harness");
    verify->add_option("--samples", vSamples);
    verify->add_option("--seed", vSeed);

    std::vector<std::string> argv = args;
    std::vector<const char*> ptrs{"jmwg"};
    for (const std::string& a : argv) ptrs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (expand->parsed()) {
            detail::Emitter em{json, "expand", out};
            SymFunc F = SymFunc::parse(expandF);
            VerifyMode mode = exhaustive ? VerifyMode::exhaustive : VerifyMode::sampled;
            std::vector<std::pair<std::string, std::string>> rows;
            if (expandJm == "odd") {
                GroupAlgebraElement el =
                    eval_symfunc_at_odd_jm(F, expandN) * hyperoctahedral_sum(expandN);
                HeckeElement expanded = coset_expansion(el, mode);
                for (const auto& [mu, c] : expanded.coefficients())
                    rows.emplace_back(mu.str(), c.get_str());
            } else {
                for (const auto& [mu, c] : class_expansion(eval_symfunc_at_all_jm(F, expandN), mode))
                    rows.emplace_back(mu.str(), c.get_str());
            }
            em.table(rows);
            return 0;
        }
        if (avg->parsed()) {
            detail::Emitter em{json, "avg", out};
            SymFunc F = SymFunc::parse(avgF);
            Partition mu = Partition::parse(avgMu);
            Rational alpha = rational_from_string(avgAlpha);
            if (avgPoly) {
                em.scalar(average_poly(F, mu, alpha).str());
            } else {
                if (avgN < 0) {
                    err << "avg: provide --n or --poly\n";
                    return 2;
                }
                em.scalar(average_at(F, mu, alpha, avgN).get_str());
            }
            return 0;
        }
        if (jackTheta->parsed()) {
            detail::Emitter em{json, "jack theta", out};
            Rational alpha = rational_from_string(jackAlpha);
            auto table = JackTable::get(jackN, alpha);
            auto lams = partitions_of(jackN);
            std::vector<std::pair<std::string, std::string>> rows;
            {
                std::ostringstream head;
                for (const Partition& rho : lams) head << '\t' << rho.str();
                rows.emplace_back("lambda\\rho", head.str().empty() ? "" : head.str().substr(1));
            }
            for (const Partition& la : lams) {
                std::ostringstream line;
                for (std::size_t i = 0; i < lams.size(); ++i)
                    line << (i ? "\t" : "") << table->theta(la, lams[i]).get_str();
                rows.emplace_back(la.str(), line.str());
            }
            em.table(rows);
            return 0;
        }
        if (jackMeasure->parsed()) {
            detail::Emitter em{json, "jack measure", out};
            Rational alpha = rational_from_string(jackAlpha);
            std::vector<std::pair<std::string, std::string>> rows;
            for (const Partition& la : partitions_of(jackN))
                rows.emplace_back(la.str(), jack_plancherel(la, alpha).get_str());
            em.table(rows);
            return 0;
        }
        if (wgExact->parsed()) {
            detail::Emitter em{json, "wg exact", out};
            std::vector<std::pair<std::string, std::string>> rows;
            for (const auto& [mu, c] : wg_exact(wgN, wgBigN).coefficients())
                rows.emplace_back(mu.str(), c.get_str());
            em.table(rows);
            return 0;
        }
        if (wgSeries->parsed()) {
            detail::Emitter em{json, "wg series", out};
            Partition mu = Partition::parse(wgCoset);
            WgSeries s = wg_series(wgN, mu, wgOrder);
            std::vector<std::pair<std::string, std::string>> rows;
            for (int g = 0; g <= wgOrder; ++g)
                rows.emplace_back("N^-" + std::to_string(s.power(g)),
                                  s.signed_coefficient(g).get_str());
            em.table(rows);
            return 0;
        }
        if (wgIntegrate->parsed()) {
            detail::Emitter em{json, "wg integrate", out};
            std::vector<int> iIdx = detail::parse_index_list(wgI);
            std::vector<int> jIdx = detail::parse_index_list(wgJ);
            if (iIdx.size() == jIdx.size() && iIdx.size() % 2 != 0) {
                err << "note: odd-degree moments vanish by sign symmetry\n";
                em.scalar("0");
                return 0;
            }
            em.scalar(integrate_monomial(iIdx, jIdx, wgBigN).get_str());
            return 0;
        }
        if (wgMc->parsed()) {
            detail::Emitter em{json, "wg mc", out};
            std::vector<int> iIdx = detail::parse_index_list(wgI);
            std::vector<int> jIdx = detail::parse_index_list(wgJ);
            Rational exact = integrate_monomial(iIdx, jIdx, static_cast<int>(wgBigN));
            McEstimate est = mc_moment(iIdx, jIdx, static_cast<int>(wgBigN), wgSamples, wgSeed);
            double z = est.stderr_ > 0 ? (est.mean - exact.get_d()) / est.stderr_ : 0.0;
            std::ostringstream mean, se, zs;
            mean.precision(10);
            se.precision(6);
            zs.precision(4);
            mean << est.mean;
            se << est.stderr_;
            zs << z;
            em.table({{"mean", mean.str()},
                      {"stderr", se.str()},
                      {"exact", exact.get_str()},
                      {"z", zs.str()}});
            return 0;
        }
        if (verify->parsed()) {
            if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end())
                suites = {"props-3", "props-4",   "props-5",    "props-8",
                          "tables-9-1", "tables-9-2", "conjectures", "mc"};
            std::vector<CheckResult> results;
            for (const std::string& s : suites) {
                std::vector<CheckResult> part;
                if (s == "props-3") part = verify_props3();
                else if (s == "props-4") part = verify_props4();
                else if (s == "props-5") part = verify_props5();
                else if (s == "props-8") part = verify_props8();
                else if (s == "tables-9-1") part = verify_tables91();
                else if (s == "tables-9-2") part = verify_tables92();
                else if (s == "conjectures") part = verify_conjectures(maxK);
                else if (s == "mc") part = verify_mc(vSamples, vSeed);
                else {
                    err << "unknown suite: " << s << "\n";
                    return 2;
                }
                for (auto& r : part) results.push_back(std::move(r));
            }
            bool allPass = true;
            if (json) {
                nlohmann::json j;
                j["command"] = "verify";
                j["results"] = nlohmann::json::array();
                for (const CheckResult& r : results) {
                    allPass = allPass && r.pass;
                    j["results"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                }
                out << j.dump(2) << "\n";
            } else {
                for (const CheckResult& r : results) {
                    allPass = allPass && r.pass;
                    out << (r.pass ? "ok   " : "FAIL ") << r.name;
                    if (!r.pass && !r.detail.empty()) out << "  [" << r.detail << "]";
                    out << "\n";
                }
            }
            return allPass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace jmwg::cli
