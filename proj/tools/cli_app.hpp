#pragma once

// Command-line front end. One verb per computation; all output goes through
// the provided streams so the whole app is testable in-process.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "ctab/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

namespace ctab::cli {

namespace detail {

inline Shape shape_from_flags(const std::string& shape_text, const std::string& state_text) {
    if (!shape_text.empty() && !state_text.empty())
        throw CLI::ValidationError("pass either --shape or --state, not both");
    if (!shape_text.empty()) return Shape::parse(shape_text);
    if (!state_text.empty()) return state_to_shape(TasepState::parse(state_text));
    throw CLI::ValidationError("one of --shape or --state is required");
}

inline std::vector<int> parse_sites(const std::string& text) {
    std::vector<int> sites;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        sites.push_back(std::stoi(text.substr(i, j - i)));
        i = j + 1;
    }
    return sites;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact steady-state combinatorics of the open-boundary TASEP"};
    app.require_subcommand(1);

    std::string state_text, shape_text, sites_text, alpha_text, beta_text, spec_text = "qq";
    int n = 0, k = 0, max_semi = 8;
    bool symbolic = false, as_json = false;
    std::uint64_t horizon = 1000000, seed = 1;

    auto add_rates = [&](CLI::App* cmd, bool required) {
        auto* a = cmd->add_option("--alpha", alpha_text, "entry rate, p/q or integer");
        auto* b = cmd->add_option("--beta", beta_text, "exit rate, p/q or integer");
        if (required) {
            a->required();
            b->required();
        }
    };

    auto* genfun_cmd = app.add_subcommand("genfun", "weight generating function of a shape");
    genfun_cmd->add_option("--shape", shape_text, "partition as parts/cols, e.g. 3,2,2/4");
    genfun_cmd->add_option("--state", state_text, "occupation word over 0/1");
    genfun_cmd->add_flag("--json", as_json);

    auto* prob_cmd = app.add_subcommand("prob", "stationary probability of a state");
    prob_cmd->add_option("--state", state_text)->required();
    prob_cmd->add_flag("--symbolic", symbolic, "print numerator and normalizer polynomials");
    add_rates(prob_cmd, false);
    prob_cmd->add_flag("--json", as_json);

    auto* locations_cmd =
        app.add_subcommand("prob-locations", "un-normalized weight of fixed particle sites");
    locations_cmd->add_option("--n", n, "lattice size")->required();
    locations_cmd->add_option("--sites", sites_text, "comma-separated sites, increasing");
    locations_cmd->add_flag("--json", as_json);

    auto* probk_cmd = app.add_subcommand("prob-k", "probability of exactly k particles");
    probk_cmd->add_option("--n", n)->required();
    probk_cmd->add_option("--k", k)->required();
    probk_cmd->add_flag("--symbolic", symbolic);
    add_rates(probk_cmd, false);
    probk_cmd->add_flag("--json", as_json);

    auto* narayana_cmd =
        app.add_subcommand("narayana-count", "Narayana number, or path count of a shape");
    narayana_cmd->add_option("--n", n);
    narayana_cmd->add_option("--k", k);
    narayana_cmd->add_option("--shape", shape_text);
    narayana_cmd->add_flag("--json", as_json);

    auto* table_cmd = app.add_subcommand("table", "q-specialized rectangle polynomials");
    table_cmd->add_option("--n", n)->required();
    table_cmd->add_option("--spec", spec_text, "qq, q1 or 1q");
    table_cmd->add_flag("--json", as_json);

    auto* zn_cmd = app.add_subcommand("partition-function", "total weight of all size-n fillings");
    zn_cmd->add_option("--n", n)->required();
    add_rates(zn_cmd, false);
    zn_cmd->add_flag("--json", as_json);

    auto* solve_cmd = app.add_subcommand("solve", "exact stationary distribution");
    solve_cmd->add_option("--n", n)->required();
    add_rates(solve_cmd, true);
    solve_cmd->add_flag("--json", as_json);

    auto* sim_cmd = app.add_subcommand("simulate", "event simulation of the process");
    sim_cmd->add_option("--n", n)->required();
    add_rates(sim_cmd, true);
    sim_cmd->add_option("--horizon", horizon, "number of events");
    sim_cmd->add_option("--seed", seed, "generator seed");
    sim_cmd->add_flag("--json", as_json);

    auto* verify_cmd = app.add_subcommand("verify", "run the cross-validation suite");
    verify_cmd->add_option("--max-semiperimeter", max_semi, "bound for shape sweeps");
    verify_cmd->add_flag("--json", as_json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        auto rate_spec = [&](int size) {
            if (alpha_text.empty() || beta_text.empty())
                throw CLI::ValidationError("--alpha and --beta are required here");
            return RateSpec(size, parse_rat(alpha_text), parse_rat(beta_text));
        };

        if (genfun_cmd->parsed()) {
            Shape sh = detail::shape_from_flags(shape_text, state_text);
            BivarPoly p = genfun(sh);
            if (as_json)
                out << nlohmann::json{{"shape", sh.str()}, {"genfun", p.to_json()}}.dump()
                    << "\n";
            else
                out << p.format() << "\n";
        } else if (prob_cmd->parsed()) {
            TasepState tau = TasepState::parse(state_text);
            if (tau.size() == 0) throw CLI::ValidationError("--state must be nonempty");
            SymbolicStateProb sp = prob_state(tau);
            if (symbolic) {
                if (as_json)
                    out << nlohmann::json{{"state", tau.str()},
                                          {"shape", state_to_shape(tau).str()},
                                          {"numerator", sp.numerator.to_json()},
                                          {"z", sp.z.to_json()}}
                               .dump()
                        << "\n";
                else {
                    out << "state = " << tau.str() << "\n";
                    out << "shape = " << state_to_shape(tau).str() << "\n";
                    out << "numerator = " << sp.numerator.format() << "\n";
                    out << "Z_" << tau.size() << " = " << sp.z.format() << "\n";
                }
            } else {
                RateSpec spec = rate_spec(tau.size());
                Rat p = prob_state(tau, spec);
                if (as_json)
                    out << nlohmann::json{{"state", tau.str()}, {"prob", rat_str(p)}}.dump()
                        << "\n";
                else
                    out << rat_str(p) << "\n";
            }
        } else if (locations_cmd->parsed()) {
            std::vector<int> sites = detail::parse_sites(sites_text);
            BivarPoly p = prob_locations(n, sites);
            if (as_json)
                out << nlohmann::json{{"n", n}, {"sites", sites}, {"weight", p.to_json()}}.dump()
                    << "\n";
            else
                out << p.format() << "\n";
        } else if (probk_cmd->parsed()) {
            if (symbolic) {
                if (k < 0 || k > n)
                    throw CLI::ValidationError("prob-k requires 0 <= k <= n");
                BivarPoly num = n_mk(n - k, k), z = z_n(n);
                if (as_json)
                    out << nlohmann::json{{"n", n},
                                          {"k", k},
                                          {"numerator", num.to_json()},
                                          {"z", z.to_json()}}
                               .dump()
                        << "\n";
                else {
                    out << "numerator = " << num.format() << "\n";
                    out << "Z_" << n << " = " << z.format() << "\n";
                }
            } else {
                Rat p = prob_k_particles(n, k, rate_spec(n));
                if (as_json)
                    out << nlohmann::json{{"n", n}, {"k", k}, {"prob", rat_str(p)}}.dump()
                        << "\n";
                else
                    out << rat_str(p) << "\n";
            }
        } else if (narayana_cmd->parsed()) {
            BigInt value;
            if (!shape_text.empty()) {
                value = narayana_path_count(Shape::parse(shape_text));
            } else if (narayana_cmd->count("--n") && narayana_cmd->count("--k")) {
                value = narayana_number(n, k);
            } else {
                throw CLI::ValidationError("narayana-count needs --shape or both --n and --k");
            }
            if (as_json)
                out << nlohmann::json{{"count", value.str()}}.dump() << "\n";
            else
                out << value.str() << "\n";
        } else if (table_cmd->parsed()) {
            QSubst mode = qsubst_from_string(spec_text);
            std::vector<UniPoly> rows = q_table(n, mode);
            if (as_json) {
                nlohmann::json arr = nlohmann::json::array();
                for (int kk = 1; kk <= (int)rows.size(); ++kk)
                    arr.push_back({{"k", kk}, {"poly", rows[kk - 1].format()}});
                out << nlohmann::json{{"n", n}, {"spec", spec_text}, {"rows", arr}}.dump()
                    << "\n";
            } else {
                out << "n=" << n << " spec=" << spec_text << "\n";
                for (int kk = 1; kk <= (int)rows.size(); ++kk)
                    out << "k=" << kk << ": " << rows[kk - 1].format() << "\n";
            }
        } else if (zn_cmd->parsed()) {
            BivarPoly z = z_n(n);
            if (!alpha_text.empty() || !beta_text.empty()) {
                RateSpec spec = rate_spec(std::max(n, 1));
                Rat v = z.eval(spec.alpha, spec.beta);
                if (as_json)
                    out << nlohmann::json{{"n", n}, {"value", rat_str(v)}}.dump() << "\n";
                else
                    out << rat_str(v) << "\n";
            } else if (as_json) {
                out << nlohmann::json{{"n", n}, {"z", z.to_json()}}.dump() << "\n";
            } else {
                out << z.format() << "\n";
            }
        } else if (solve_cmd->parsed()) {
            RateSpec spec = rate_spec(n);
            Distribution d = stationary(spec);
            if (as_json)
                out << distribution_to_json(spec, d).dump() << "\n";
            else
                for (const auto& [word, p] : d.pi) out << word << " " << rat_str(p) << "\n";
        } else if (sim_cmd->parsed()) {
            RateSpec spec = rate_spec(n);
            SimulationResult res = simulate(spec, horizon, seed);
            if (as_json) {
                nlohmann::json occ = nlohmann::json::object(), se = nlohmann::json::object();
                for (const auto& [word, f] : res.occupation) occ[word] = f;
                for (const auto& [word, s] : res.standard_error) se[word] = s;
                out << nlohmann::json{{"n", n},
                                      {"events", res.events},
                                      {"seed", res.seed},
                                      {"total_time", res.total_time},
                                      {"occupation", occ},
                                      {"standard_error", se}}
                           .dump()
                    << "\n";
            } else {
                out << "events=" << res.events << " seed=" << res.seed
                    << " total_time=" << std::setprecision(17) << res.total_time << "\n";
                for (const auto& [word, f] : res.occupation)
                    out << word << " " << std::setprecision(17) << f << " se="
                        << res.standard_error.at(word) << "\n";
            }
        } else if (verify_cmd->parsed()) {
            VerifyOptions opt;
            opt.max_semi_perimeter = max_semi;
            std::vector<CheckResult> results = run_all_checks(opt);
            bool all_pass = true;
            nlohmann::json arr = nlohmann::json::array();
            for (const CheckResult& res : results) {
                all_pass = all_pass && res.pass;
                if (as_json)
                    arr.push_back({{"name", res.name},
                                   {"pass", res.pass},
                                   {"detail", res.detail},
                                   {"seconds", res.seconds}});
                else
                    out << (res.pass ? "PASS " : "FAIL ") << res.name << ": " << res.detail
                        << "\n";
            }
            if (as_json) out << arr.dump() << "\n";
            if (!all_pass) return 1;
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ctab::cli
