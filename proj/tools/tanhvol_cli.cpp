// Command-line front end: pricing, implied volatility, the error sweeps and
// the baseline freeze/check workflow. Exit codes: 0 success, 2 validation
// error, 3 baseline regression.
#include "tanhvol/baseline.hpp"
#include "tanhvol/black_scholes.hpp"
#include "tanhvol/comparators.hpp"
#include "tanhvol/csv.hpp"
#include "tanhvol/errors.hpp"
#include "tanhvol/implied_vol.hpp"
#include "tanhvol/sweeps.hpp"
#include "tanhvol/tanh_surrogate.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

struct CsvSink {
    std::unique_ptr<std::ofstream> file;
    std::ostream* stream = nullptr;
};

CsvSink open_csv(const std::string& path) {
    CsvSink sink;
    if (path.empty()) {
        sink.stream = &std::cout;
        return sink;
    }
    sink.file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*sink.file) throw tanhvol::config_error("cannot open output file " + path);
    sink.stream = sink.file.get();
    return sink;
}

tanhvol::AtmKind parse_atm_kind(const std::string& name) {
    if (name == "atm0") return tanhvol::AtmKind::Theta0;
    if (name == "atm1") return tanhvol::AtmKind::Theta1;
    return tanhvol::AtmKind::Theta2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Black-Scholes calls, tanh-sigmoid approximations and closed-form implied volatility"};
    app.require_subcommand(1);

    // ---- price
    double spot = 0, strike = 0, rate = 0, maturity = 0, vol = 0, price_in = 0;
    int digits = 4;
    auto* price_cmd = app.add_subcommand("price", "Black-Scholes call price");
    price_cmd->add_option("--spot", spot)->required();
    price_cmd->add_option("--strike", strike)->required();
    price_cmd->add_option("--rate", rate)->default_val(0.0);
    price_cmd->add_option("--maturity", maturity)->required();
    price_cmd->add_option("--vol", vol)->required();
    price_cmd->add_option("--digits", digits)->default_val(4);

    // ---- iv
    std::string method = "auto";
    auto* iv_cmd = app.add_subcommand("iv", "implied volatility of a call quote");
    iv_cmd->add_option("--spot", spot)->required();
    iv_cmd->add_option("--strike", strike)->required();
    iv_cmd->add_option("--rate", rate)->default_val(0.0);
    iv_cmd->add_option("--maturity", maturity)->required();
    iv_cmd->add_option("--price", price_in)->required();
    iv_cmd->add_option("--method", method, "auto|tanh|atm0|atm1|atm2|oracle|brenner|corrado-miller|li")
        ->default_val("auto");

    // ---- sweep
    tanhvol::SweepSpec sweep;
    std::string out_path;
    int threads = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo sweep of chi - chi_hat");
    sweep_cmd->add_option("--t", sweep.maturity)->default_val(0.25);
    sweep_cmd->add_option("--seed", sweep.seed)->default_val(42);
    sweep_cmd->add_option("--sigma-lo", sweep.sigma_lo)->default_val(0.0);
    sweep_cmd->add_option("--sigma-hi", sweep.sigma_hi)->default_val(1.25);
    sweep_cmd->add_option("--sigma-samples", sweep.sigma_samples)->default_val(500);
    sweep_cmd->add_option("--moneyness-samples", sweep.moneyness_samples)->default_val(10000);
    sweep_cmd->add_option("--moneyness-lo", sweep.moneyness_lo)->default_val(0.5);
    sweep_cmd->add_option("--moneyness-hi", sweep.moneyness_hi)->default_val(2.0);
    sweep_cmd->add_option("--threads", threads, "0 = all, 1 = serial reference")->default_val(0);
    sweep_cmd->add_option("--out", out_path, "CSV path (default stdout)");

    // ---- erf-study
    tanhvol::LatticeSpec lattice;
    auto* erf_cmd = app.add_subcommand("erf-study", "erf vs Theta approximations on the (sigma,T) lattice");
    erf_cmd->add_option("--seed", lattice.seed)->default_val(42);
    erf_cmd->add_option("--samples-per-cell", lattice.samples_per_cell)->default_val(10000);
    erf_cmd->add_option("--threads", threads)->default_val(0);
    erf_cmd->add_option("--out", out_path);

    // ---- iv-compare
    tanhvol::IvCompareSpec ivgrid;
    auto* cmp_cmd = app.add_subcommand("iv-compare", "closed-form IV methods vs the Newton oracle");
    cmp_cmd->add_option("--spot", ivgrid.spot)->default_val(100.0);
    cmp_cmd->add_option("--seed", ivgrid.seed)->default_val(42);
    cmp_cmd->add_option("--moneyness-steps", ivgrid.moneyness_steps)->default_val(9);
    cmp_cmd->add_option("--t-steps", ivgrid.t_steps)->default_val(15);
    cmp_cmd->add_option("--sigma-steps", ivgrid.sigma_steps)->default_val(23);
    cmp_cmd->add_option("--threads", threads)->default_val(0);
    cmp_cmd->add_option("--out", out_path);

    // ---- baseline freeze|check
    std::string baseline_path = "baselines/baseline.txt";
    std::uint64_t baseline_seed = 42;
    auto* base_cmd = app.add_subcommand("baseline", "freeze or check the regression baseline");
    auto* freeze_cmd = base_cmd->add_subcommand("freeze", "recompute metrics and write the baseline file");
    auto* check_cmd = base_cmd->add_subcommand("check", "recompute metrics and compare (10% relative slack)");
    for (auto* sub : {freeze_cmd, check_cmd}) {
        sub->add_option("--file", baseline_path)->default_val("baselines/baseline.txt");
        sub->add_option("--seed", baseline_seed)->default_val(42);
        sub->add_option("--threads", threads)->default_val(0);
    }
    base_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*price_cmd) {
            const auto terms = tanhvol::normalize({spot, strike, rate, maturity});
            std::printf("%.*f\n", digits, tanhvol::bs_call(terms, vol));
            return 0;
        }

        if (*iv_cmd) {
            const auto terms = tanhvol::normalize({spot, strike, rate, maturity});
            const tanhvol::CallQuote quote{terms, price_in};
            double sigma_hat = 0.0;
            std::string used = method;
            if (method == "auto") {
                const auto est = tanhvol::implied_vol(quote);
                sigma_hat = est.sigma_hat;
                used = tanhvol::method_name(est.method);
            } else if (method == "tanh") {
                const auto est = tanhvol::implied_vol_tanh(quote);
                sigma_hat = est.sigma_hat;
                used = tanhvol::method_name(est.method);
            } else if (method == "atm0" || method == "atm1" || method == "atm2") {
                const auto est =
                    tanhvol::atm_implied_vol(parse_atm_kind(method), spot, maturity, price_in);
                sigma_hat = est.sigma_hat;
                used = tanhvol::method_name(est.method);
            } else if (method == "oracle") {
                tanhvol::validate(quote);
                sigma_hat = tanhvol::iv_oracle(quote);
                used = tanhvol::method_name(tanhvol::Method::OracleNewton);
            } else if (method == "brenner" || method == "corrado-miller" || method == "li") {
                const auto kind = method == "brenner" ? tanhvol::ComparatorKind::BrennerSubrahmanyam
                                  : method == "li"    ? tanhvol::ComparatorKind::Li
                                                      : tanhvol::ComparatorKind::CorradoMiller;
                const auto est = tanhvol::comparator_iv(kind, quote);
                if (!est) {
                    std::printf("unavailable (domain condition failed)\n");
                    return 0;
                }
                sigma_hat = est->sigma_hat;
                used = tanhvol::method_name(est->method);
            } else {
                std::fprintf(stderr, "error: unknown method '%s'\n", method.c_str());
                return 2;
            }
            std::printf("%s  method=%s\n", tanhvol::format_sig(sigma_hat).c_str(), used.c_str());
            return 0;
        }

        if (*sweep_cmd) {
            auto sink = open_csv(out_path);
            tanhvol::run_moneyness_sweep(sweep, sink.stream, threads);
            return 0;
        }

        if (*erf_cmd) {
            auto sink = open_csv(out_path);
            tanhvol::run_lattice_erf_study(lattice, sink.stream, threads);
            return 0;
        }

        if (*cmp_cmd) {
            auto sink = open_csv(out_path);
            tanhvol::run_iv_comparison(ivgrid, sink.stream, threads);
            return 0;
        }

        if (*freeze_cmd) {
            const auto doc = tanhvol::compute_baseline_metrics(baseline_seed, threads);
            tanhvol::write_baseline(baseline_path, doc,
                                    "tanhvol regression baseline\nformat v1\nseed=" + std::to_string(baseline_seed));
            std::printf("froze %zu metrics to %s\n", doc.size(), baseline_path.c_str());
            return 0;
        }

        if (*check_cmd) {
            const auto frozen = tanhvol::read_baseline(baseline_path);
            const auto current = tanhvol::compute_baseline_metrics(baseline_seed, threads);
            const auto violations = tanhvol::check_baseline(current, frozen, 0.10);
            if (violations.empty()) {
                std::printf("baseline check passed (%zu metrics)\n", frozen.size());
                return 0;
            }
            for (const auto& v : violations) std::fprintf(stderr, "regression: %s\n", v.c_str());
            return 3;
        }
    } catch (const tanhvol::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
