#include "tanhvol/sweeps.hpp"

#include "tanhvol/black_scholes.hpp"
#include "tanhvol/comparators.hpp"
#include "tanhvol/csv.hpp"
#include "tanhvol/errors.hpp"
#include "tanhvol/implied_vol.hpp"
#include "tanhvol/rng.hpp"
#include "tanhvol/special_functions.hpp"
#include "tanhvol/standardized_call.hpp"
#include "tanhvol/tanh_surrogate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tanhvol {

namespace {

constexpr std::int64_t kChunkRows = 1 << 15;

constexpr std::uint64_t kStreamSigma = 0;
constexpr std::uint64_t kStreamMoneyness = 1;
constexpr std::uint64_t kStreamLatticeBase = 16;

int worker_count(int threads) {
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

// Fixed-size text slots keep parallel row formatting allocation-free.
struct RowBuffer {
    std::vector<std::array<char, 224>> text;
    std::vector<int> len;
    explicit RowBuffer(std::int64_t n) : text(static_cast<std::size_t>(n)), len(static_cast<std::size_t>(n), 0) {}
};

void flush_rows(std::ostream& out, const RowBuffer& buf, std::int64_t n) {
    for (std::int64_t i = 0; i < n; ++i) out.write(buf.text[static_cast<std::size_t>(i)].data(), buf.len[static_cast<std::size_t>(i)]);
}

void write_stat_line(std::ostream& out, const std::string& name, double value) {
    out << "# stat " << name << "=" << format_sig(value) << "\n";
}

void write_stats_block(std::ostream& out, const std::string& prefix, const ErrorStats& st) {
    out << "# stat " << prefix << "count=" << st.count << "\n";
    write_stat_line(out, prefix + "max_abs", st.max_abs);
    write_stat_line(out, prefix + "mean_abs", st.mean_abs);
    write_stat_line(out, prefix + "rmse", st.rmse);
    write_stat_line(out, prefix + "q50", st.q50);
    write_stat_line(out, prefix + "q90", st.q90);
    write_stat_line(out, prefix + "q99", st.q99);
}

// ---------------------------------------------------------------- sweep --

struct SweepContext {
    SweepSpec spec;
    double sqrt_t = 0.0;
    std::vector<double> sigma;
    std::vector<int> part;
    std::vector<double> moneyness;
    std::vector<double> alpha;
    std::vector<SurrogateCoefficients> coeffs;
};

void validate_spec(const SweepSpec& s) {
    if (s.sigma_samples < 1 || s.moneyness_samples < 1)
        throw config_error("sweep: sample counts must be positive");
    if (!(s.sigma_lo >= 0.0 && s.sigma_lo <= s.sigma_hi && s.sigma_hi <= 1.25))
        throw config_error("sweep: sigma interval must satisfy 0 <= lo <= hi <= 1.25");
    if (s.sigma_lo == 0.0 && s.sigma_hi == 0.0)
        throw config_error("sweep: sigma interval collapsed onto zero");
    if (!(s.moneyness_lo > 0.0 && s.moneyness_lo <= s.moneyness_hi))
        throw config_error("sweep: moneyness interval must satisfy 0 < lo <= hi");
    if (!(s.maturity > 0.0)) throw config_error("sweep: maturity must be positive");
}

SweepContext make_sweep_context(const SweepSpec& spec) {
    validate_spec(spec);

    SweepContext ctx;
    ctx.spec = spec;
    ctx.sqrt_t = std::sqrt(spec.maturity);

    const CounterRng rng(spec.seed);
    ctx.sigma.resize(static_cast<std::size_t>(spec.sigma_samples));
    ctx.part.resize(static_cast<std::size_t>(spec.sigma_samples));
    const double width = spec.sigma_hi - spec.sigma_lo;
    for (int i = 0; i < spec.sigma_samples; ++i) {
        const double s = rng.uniform(kStreamSigma, static_cast<std::uint64_t>(i), spec.sigma_lo, spec.sigma_hi);
        ctx.sigma[static_cast<std::size_t>(i)] = s;
        ctx.part[static_cast<std::size_t>(i)] =
            width > 0.0 ? std::min(4, static_cast<int>((s - spec.sigma_lo) / width * 5.0)) : 0;
    }

    const double log_lo = std::log(spec.moneyness_lo);
    const double log_hi = std::log(spec.moneyness_hi);
    ctx.moneyness.resize(static_cast<std::size_t>(spec.moneyness_samples));
    ctx.alpha.resize(static_cast<std::size_t>(spec.moneyness_samples));
    ctx.coeffs.resize(static_cast<std::size_t>(spec.moneyness_samples));
    for (int j = 0; j < spec.moneyness_samples; ++j) {
        double lm = log_lo + rng.uniform_open(kStreamMoneyness, static_cast<std::uint64_t>(j)) * (log_hi - log_lo);
        // Draws inside the sampling band are nudged to the band edge; the
        // alpha -> 0 regime belongs to the ATM branch, not to this sweep.
        if (std::fabs(lm) < kSweepAtmBand) lm = lm >= 0.0 ? kSweepAtmBand : -kSweepAtmBand;
        ctx.moneyness[static_cast<std::size_t>(j)] = std::exp(lm);
        ctx.alpha[static_cast<std::size_t>(j)] = std::sqrt(2.0 * std::fabs(lm));
        ctx.coeffs[static_cast<std::size_t>(j)] = coefficients(ctx.alpha[static_cast<std::size_t>(j)]);
    }
    return ctx;
}

struct SweepRowValues {
    double alpha, x, sigma, maturity, moneyness, exact, approx, abs_err;
};

SweepRowValues sweep_row(const SweepContext& ctx, std::int64_t r) {
    const auto j = static_cast<std::size_t>(r / ctx.spec.sigma_samples);
    const auto i = static_cast<std::size_t>(r % ctx.spec.sigma_samples);

    SweepRowValues v{};
    v.alpha = ctx.alpha[j];
    v.sigma = ctx.sigma[i];
    v.maturity = ctx.spec.maturity;
    v.moneyness = ctx.moneyness[j];
    v.x = v.sigma * ctx.sqrt_t / v.alpha;
    v.exact = chi(v.alpha, v.x);
    v.approx = chi_hat(ctx.coeffs[j], v.x);
    v.abs_err = csv_round(std::fabs(v.exact - v.approx));
    return v;
}

int format_sweep_row(const SweepRowValues& v, char* buf, std::size_t cap) {
    return std::snprintf(buf, cap, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                         v.alpha, v.x, v.sigma, v.maturity, v.moneyness, v.exact, v.approx, v.abs_err);
}

void sweep_header(std::ostream& out, const SweepSpec& s) {
    out << "# tanhvol moneyness sweep\n";
    out << "# seed=" << s.seed << "\n";
    out << "# maturity=" << format_sig(s.maturity) << "\n";
    out << "# sigma_interval=[" << format_sig(s.sigma_lo) << "," << format_sig(s.sigma_hi)
        << "] sigma_samples=" << s.sigma_samples << "\n";
    out << "# moneyness=[" << format_sig(s.moneyness_lo) << "," << format_sig(s.moneyness_hi)
        << "] moneyness_samples=" << s.moneyness_samples << " atm_band=" << format_sig(kSweepAtmBand)
        << "\n";
    out << "alpha,x,sigma,T,moneyness,exact,approx,abs_err\n";
}

SweepResult assemble_sweep_stats(const SweepContext& ctx, const std::vector<double>& errs) {
    SweepResult res;
    res.stats = compute_error_stats(errs);

    std::array<std::vector<double>, 5> part_errs;
    for (std::size_t r = 0; r < errs.size(); ++r) {
        const auto i = static_cast<std::size_t>(r % static_cast<std::size_t>(ctx.spec.sigma_samples));
        part_errs[static_cast<std::size_t>(ctx.part[i])].push_back(errs[r]);
    }
    for (int k = 0; k < 5; ++k) res.parts[static_cast<std::size_t>(k)] = compute_error_stats(std::move(part_errs[static_cast<std::size_t>(k)]));
    return res;
}

void sweep_footer(std::ostream& out, const SweepResult& res) {
    write_stats_block(out, "", res.stats);
    for (int k = 0; k < 5; ++k)
        write_stat_line(out, "part" + std::to_string(k + 1) + ".max_abs", res.parts[static_cast<std::size_t>(k)].max_abs);
}

// ----------------------------------------------------------- erf study --

void validate_spec(const LatticeSpec& s) {
    if (!(s.sigma_step > 0.0) || s.sigma_count < 1) throw config_error("erf study: bad sigma lattice");
    if (!(s.month_lo >= 1 && s.month_lo <= s.month_hi)) throw config_error("erf study: bad maturity range");
    if (s.samples_per_cell < 1) throw config_error("erf study: samples_per_cell must be positive");
}

struct ErfRowValues {
    int theta;
    double sigma, maturity, z, exact, approx, abs_err;
};

ErfRowValues erf_row(const LatticeSpec& spec, const CounterRng& rng, std::int64_t r) {
    const std::int64_t per_cell = static_cast<std::int64_t>(spec.samples_per_cell) * 3;
    const auto cell = static_cast<int>(r / per_cell);
    const auto rem = r % per_cell;
    const auto sample = static_cast<std::uint64_t>(rem / 3);
    const auto t = static_cast<int>(rem % 3);

    const int month = spec.month_lo + cell;
    const double maturity = month / 12.0;
    const auto j = rng.uniform_index(kStreamLatticeBase + static_cast<std::uint64_t>(month), sample,
                                     static_cast<std::uint64_t>(spec.sigma_count));
    const double sigma = spec.sigma_step * static_cast<double>(j);
    const double z = sigma * std::sqrt(0.125 * maturity);

    ErfRowValues v{};
    v.theta = t;
    v.sigma = sigma;
    v.maturity = maturity;
    v.z = z;
    v.exact = tanhvol::erf(z);
    v.approx = theta(static_cast<AtmKind>(t), z);
    v.abs_err = csv_round(std::fabs(v.exact - v.approx));
    return v;
}

int format_erf_row(const ErfRowValues& v, char* buf, std::size_t cap) {
    return std::snprintf(buf, cap, "theta%d,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", v.theta, v.sigma,
                         v.maturity, v.z, v.exact, v.approx, v.abs_err);
}

void erf_header(std::ostream& out, const LatticeSpec& s) {
    out << "# tanhvol erf study\n";
    out << "# seed=" << s.seed << "\n";
    out << "# lattice sigma=" << format_sig(s.sigma_step) << "*j j=1.." << s.sigma_count
        << " T=k/12 k=" << s.month_lo << ".." << s.month_hi << "\n";
    out << "# samples_per_cell=" << s.samples_per_cell << "\n";
    out << "theta,sigma,T,z,exact,approx,abs_err\n";
}

ErfStudyResult assemble_erf_stats(const LatticeSpec& spec, const std::vector<double>& errs) {
    ErfStudyResult res;
    std::array<std::vector<double>, 3> per_theta;
    for (auto& v : per_theta) v.reserve(errs.size() / 3);
    for (std::size_t r = 0; r < errs.size(); ++r) per_theta[r % 3].push_back(errs[r]);
    (void)spec;
    for (int t = 0; t < 3; ++t) res.per_theta[static_cast<std::size_t>(t)] = compute_error_stats(std::move(per_theta[static_cast<std::size_t>(t)]));
    return res;
}

void erf_footer(std::ostream& out, const ErfStudyResult& res) {
    for (int t = 0; t < 3; ++t)
        write_stats_block(out, "theta" + std::to_string(t) + ".", res.per_theta[static_cast<std::size_t>(t)]);
}

// -------------------------------------------------------- iv comparison --

void validate_spec(const IvCompareSpec& s) {
    if (!(s.spot > 0.0)) throw config_error("iv comparison: spot must be positive");
    if (s.moneyness_steps < 1 || s.t_steps < 1 || s.sigma_steps < 1)
        throw config_error("iv comparison: step counts must be positive");
    if (!(s.moneyness_lo > 0.0 && s.moneyness_lo <= s.moneyness_hi))
        throw config_error("iv comparison: bad moneyness range");
    if (!(s.t_lo > 0.0 && s.t_lo <= s.t_hi)) throw config_error("iv comparison: bad maturity range");
    if (!(s.sigma_lo > 0.0 && s.sigma_lo <= s.sigma_hi))
        throw config_error("iv comparison: bad sigma range");
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
    std::vector<double> g(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        g[static_cast<std::size_t>(i)] = steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    return g;
}

struct IvContext {
    IvCompareSpec spec;
    std::vector<double> moneyness;  // S/X, log-spaced
    std::vector<double> maturities;
    std::vector<double> sigmas;
};

IvContext make_iv_context(const IvCompareSpec& spec) {
    validate_spec(spec);
    IvContext ctx;
    ctx.spec = spec;
    const auto logs = linear_grid(std::log(spec.moneyness_lo), std::log(spec.moneyness_hi), spec.moneyness_steps);
    ctx.moneyness.reserve(logs.size());
    for (double lm : logs) ctx.moneyness.push_back(std::exp(lm));
    ctx.maturities = linear_grid(spec.t_lo, spec.t_hi, spec.t_steps);
    ctx.sigmas = linear_grid(spec.sigma_lo, spec.sigma_hi, spec.sigma_steps);
    return ctx;
}

struct IvCell {
    double spot, strike, maturity, sigma_true, price;
    bool admissible;
    std::optional<double> hat, li, bs, cm, oracle;
};

IvCell iv_cell(const IvContext& ctx, std::int64_t c) {
    const auto n_sig = static_cast<std::int64_t>(ctx.sigmas.size());
    const auto n_t = static_cast<std::int64_t>(ctx.maturities.size());
    const auto im = static_cast<std::size_t>(c / (n_t * n_sig));
    const auto it = static_cast<std::size_t>((c / n_sig) % n_t);
    const auto is = static_cast<std::size_t>(c % n_sig);

    IvCell cell{};
    cell.spot = ctx.spec.spot;
    cell.strike = ctx.spec.spot / ctx.moneyness[im];
    cell.maturity = ctx.maturities[it];
    cell.sigma_true = ctx.sigmas[is];

    const NormalizedTerms terms{cell.spot, cell.strike, cell.maturity};
    cell.price = bs_call(terms, cell.sigma_true);

    // Cells whose price sits at the arbitrage bound at double resolution, or
    // whose vega is below the identifiability floor, carry no invertible
    // information and are excluded from the comparison.
    const double payoff = intrinsic_value(terms);
    cell.admissible = cell.price - payoff >= 1e-9 * cell.spot &&
                      cell.spot - cell.price >= 1e-9 * cell.spot &&
                      bs_vega(terms, cell.sigma_true) >= 2e-4 * cell.spot;
    if (!cell.admissible) return cell;

    const CallQuote quote{terms, cell.price};
    cell.hat = implied_vol(quote).sigma_hat;
    if (const auto est = comparator_iv(ComparatorKind::Li, quote)) cell.li = est->sigma_hat;
    if (const auto est = comparator_iv(ComparatorKind::BrennerSubrahmanyam, quote)) cell.bs = est->sigma_hat;
    if (const auto est = comparator_iv(ComparatorKind::CorradoMiller, quote)) cell.cm = est->sigma_hat;
    try {
        cell.oracle = iv_oracle(quote);
    } catch (const no_convergence&) {
        cell.oracle.reset();
    }
    return cell;
}

int format_iv_row(const IvCell& cell, char* buf, std::size_t cap) {
    const auto field = [](const std::optional<double>& v) { return v ? format_sig(*v) : std::string(); };
    std::string flags;
    if (!cell.admissible) {
        flags = "x";
    } else {
        if (cell.hat) flags += 'h';
        if (cell.li) flags += 'l';
        if (cell.bs) flags += 'b';
        if (cell.cm) flags += 'c';
        if (cell.oracle) flags += 'o';
    }
    return std::snprintf(buf, cap, "%.12g,%.12g,%.12g,%.12g,%.12g,%s,%s,%s,%s,%s,%s\n", cell.spot,
                         cell.strike, cell.maturity, cell.sigma_true, cell.price,
                         field(cell.hat).c_str(), field(cell.li).c_str(), field(cell.bs).c_str(),
                         field(cell.cm).c_str(), field(cell.oracle).c_str(), flags.c_str());
}

void iv_header(std::ostream& out, const IvCompareSpec& s) {
    out << "# tanhvol iv comparison\n";
    out << "# seed=" << s.seed << "\n";
    out << "# spot=" << format_sig(s.spot) << " moneyness=[" << format_sig(s.moneyness_lo) << ","
        << format_sig(s.moneyness_hi) << "] steps=" << s.moneyness_steps << "\n";
    out << "# T=[" << format_sig(s.t_lo) << "," << format_sig(s.t_hi) << "] steps=" << s.t_steps
        << " sigma=[" << format_sig(s.sigma_lo) << "," << format_sig(s.sigma_hi)
        << "] steps=" << s.sigma_steps << "\n";
    out << "S,X,T,sigma_true,C,sigma_hat,sigma_li,sigma_bs,sigma_cm,sigma_oracle,availability_flags\n";
}

IvCompareResult assemble_iv_stats(const std::vector<IvCell>& cells) {
    IvCompareResult res;
    res.cells_total = static_cast<std::int64_t>(cells.size());

    std::vector<double> err_hat, err_li, err_bs, err_cm;
    for (const IvCell& cell : cells) {
        if (!cell.admissible) {
            ++res.cells_excluded;
            continue;
        }
        ++res.cells_admissible;
        const auto record = [&](const std::optional<double>& est, std::vector<double>& sink,
                                IvMethodStats& st) {
            if (est)
                sink.push_back(csv_round(std::fabs(*est - cell.sigma_true)));
            else
                ++st.unavailable;
        };
        record(cell.hat, err_hat, res.tanh_hat);
        record(cell.li, err_li, res.li);
        record(cell.bs, err_bs, res.brenner);
        record(cell.cm, err_cm, res.corrado_miller);
        if (cell.oracle)
            res.oracle_max_abs = std::max(res.oracle_max_abs, std::fabs(*cell.oracle - cell.sigma_true));
    }

    const auto finish = [](const std::vector<double>& errs, IvMethodStats& st) {
        if (errs.empty()) return;
        st.max_abs = *std::max_element(errs.begin(), errs.end());
        st.mean_abs = pairwise_sum(errs) / static_cast<double>(errs.size());
    };
    finish(err_hat, res.tanh_hat);
    finish(err_li, res.li);
    finish(err_bs, res.brenner);
    finish(err_cm, res.corrado_miller);
    return res;
}

void iv_footer(std::ostream& out, const IvCompareResult& res) {
    out << "# stat cells_total=" << res.cells_total << "\n";
    out << "# stat cells_admissible=" << res.cells_admissible << "\n";
    out << "# stat cells_excluded=" << res.cells_excluded << "\n";
    const auto block = [&](const char* name, const IvMethodStats& st) {
        write_stat_line(out, std::string(name) + ".max_abs", st.max_abs);
        write_stat_line(out, std::string(name) + ".mean_abs", st.mean_abs);
        out << "# stat " << name << ".unavailable=" << st.unavailable << "\n";
    };
    block("tanh", res.tanh_hat);
    block("li", res.li);
    block("bs", res.brenner);
    block("cm", res.corrado_miller);
    write_stat_line(out, "oracle.max_abs", res.oracle_max_abs);
}

}  // namespace

// ------------------------------------------------------------- drivers --

SweepResult run_moneyness_sweep_serial(const SweepSpec& spec, std::ostream* csv) {
    const SweepContext ctx = make_sweep_context(spec);
    const std::int64_t n = static_cast<std::int64_t>(spec.sigma_samples) * spec.moneyness_samples;

    std::vector<double> errs(static_cast<std::size_t>(n));
    if (csv) sweep_header(*csv, spec);
    char buf[224];
    for (std::int64_t r = 0; r < n; ++r) {
        const SweepRowValues v = sweep_row(ctx, r);
        errs[static_cast<std::size_t>(r)] = v.abs_err;
        if (csv) csv->write(buf, format_sweep_row(v, buf, sizeof buf));
    }
    const SweepResult res = assemble_sweep_stats(ctx, errs);
    if (csv) sweep_footer(*csv, res);
    return res;
}

SweepResult run_moneyness_sweep_parallel(const SweepSpec& spec, std::ostream* csv, int threads) {
    const SweepContext ctx = make_sweep_context(spec);
    const std::int64_t n = static_cast<std::int64_t>(spec.sigma_samples) * spec.moneyness_samples;
    const int nth = worker_count(threads);

    std::vector<double> errs(static_cast<std::size_t>(n));
    if (csv) sweep_header(*csv, spec);
    RowBuffer buf(csv ? std::min(n, kChunkRows) : 0);

    for (std::int64_t base = 0; base < n; base += kChunkRows) {
        const std::int64_t m = std::min(kChunkRows, n - base);
#pragma omp parallel for schedule(static) num_threads(nth)
        for (std::int64_t t = 0; t < m; ++t) {
            const SweepRowValues v = sweep_row(ctx, base + t);
            errs[static_cast<std::size_t>(base + t)] = v.abs_err;
            if (csv)
                buf.len[static_cast<std::size_t>(t)] =
                    format_sweep_row(v, buf.text[static_cast<std::size_t>(t)].data(), buf.text[static_cast<std::size_t>(t)].size());
        }
        if (csv) flush_rows(*csv, buf, m);
    }
    const SweepResult res = assemble_sweep_stats(ctx, errs);
    if (csv) sweep_footer(*csv, res);
    return res;
}

SweepResult run_moneyness_sweep(const SweepSpec& spec, std::ostream* csv, int threads) {
    if (threads == 1) return run_moneyness_sweep_serial(spec, csv);
    return run_moneyness_sweep_parallel(spec, csv, threads);
}

ErfStudyResult run_lattice_erf_study_serial(const LatticeSpec& spec, std::ostream* csv) {
    validate_spec(spec);
    const CounterRng rng(spec.seed);
    const std::int64_t n =
        static_cast<std::int64_t>(spec.month_hi - spec.month_lo + 1) * spec.samples_per_cell * 3;

    std::vector<double> errs(static_cast<std::size_t>(n));
    if (csv) erf_header(*csv, spec);
    char buf[224];
    for (std::int64_t r = 0; r < n; ++r) {
        const ErfRowValues v = erf_row(spec, rng, r);
        errs[static_cast<std::size_t>(r)] = v.abs_err;
        if (csv) csv->write(buf, format_erf_row(v, buf, sizeof buf));
    }
    const ErfStudyResult res = assemble_erf_stats(spec, errs);
    if (csv) erf_footer(*csv, res);
    return res;
}

ErfStudyResult run_lattice_erf_study_parallel(const LatticeSpec& spec, std::ostream* csv, int threads) {
    validate_spec(spec);
    const CounterRng rng(spec.seed);
    const std::int64_t n =
        static_cast<std::int64_t>(spec.month_hi - spec.month_lo + 1) * spec.samples_per_cell * 3;
    const int nth = worker_count(threads);

    std::vector<double> errs(static_cast<std::size_t>(n));
    if (csv) erf_header(*csv, spec);
    RowBuffer buf(csv ? std::min(n, kChunkRows) : 0);

    for (std::int64_t base = 0; base < n; base += kChunkRows) {
        const std::int64_t m = std::min(kChunkRows, n - base);
#pragma omp parallel for schedule(static) num_threads(nth)
        for (std::int64_t t = 0; t < m; ++t) {
            const ErfRowValues v = erf_row(spec, rng, base + t);
            errs[static_cast<std::size_t>(base + t)] = v.abs_err;
            if (csv)
                buf.len[static_cast<std::size_t>(t)] =
                    format_erf_row(v, buf.text[static_cast<std::size_t>(t)].data(), buf.text[static_cast<std::size_t>(t)].size());
        }
        if (csv) flush_rows(*csv, buf, m);
    }
    const ErfStudyResult res = assemble_erf_stats(spec, errs);
    if (csv) erf_footer(*csv, res);
    return res;
}

ErfStudyResult run_lattice_erf_study(const LatticeSpec& spec, std::ostream* csv, int threads) {
    if (threads == 1) return run_lattice_erf_study_serial(spec, csv);
    return run_lattice_erf_study_parallel(spec, csv, threads);
}

IvCompareResult run_iv_comparison_serial(const IvCompareSpec& spec, std::ostream* csv) {
    const IvContext ctx = make_iv_context(spec);
    const std::int64_t n = static_cast<std::int64_t>(spec.moneyness_steps) * spec.t_steps * spec.sigma_steps;

    std::vector<IvCell> cells(static_cast<std::size_t>(n));
    if (csv) iv_header(*csv, spec);
    char buf[320];
    for (std::int64_t c = 0; c < n; ++c) {
        cells[static_cast<std::size_t>(c)] = iv_cell(ctx, c);
        if (csv) csv->write(buf, format_iv_row(cells[static_cast<std::size_t>(c)], buf, sizeof buf));
    }
    const IvCompareResult res = assemble_iv_stats(cells);
    if (csv) iv_footer(*csv, res);
    return res;
}

IvCompareResult run_iv_comparison_parallel(const IvCompareSpec& spec, std::ostream* csv, int threads) {
    const IvContext ctx = make_iv_context(spec);
    const std::int64_t n = static_cast<std::int64_t>(spec.moneyness_steps) * spec.t_steps * spec.sigma_steps;
    const int nth = worker_count(threads);

    std::vector<IvCell> cells(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) num_threads(nth)
    for (std::int64_t c = 0; c < n; ++c) cells[static_cast<std::size_t>(c)] = iv_cell(ctx, c);

    if (csv) {
        iv_header(*csv, spec);
        char buf[320];
        for (std::int64_t c = 0; c < n; ++c)
            csv->write(buf, format_iv_row(cells[static_cast<std::size_t>(c)], buf, sizeof buf));
    }
    const IvCompareResult res = assemble_iv_stats(cells);
    if (csv) iv_footer(*csv, res);
    return res;
}

IvCompareResult run_iv_comparison(const IvCompareSpec& spec, std::ostream* csv, int threads) {
    if (threads == 1) return run_iv_comparison_serial(spec, csv);
    return run_iv_comparison_parallel(spec, csv, threads);
}

BaselineDoc compute_baseline_metrics(std::uint64_t seed, int threads) {
    BaselineDoc doc;

    SweepSpec sweep;
    sweep.seed = seed;
    const SweepResult sw = run_moneyness_sweep(sweep, nullptr, threads);
    doc["sweep.full.max_abs"] = sw.stats.max_abs;
    doc["sweep.full.mean_abs"] = sw.stats.mean_abs;
    doc["sweep.full.rmse"] = sw.stats.rmse;
    doc["sweep.full.q50"] = sw.stats.q50;
    doc["sweep.full.q90"] = sw.stats.q90;
    doc["sweep.full.q99"] = sw.stats.q99;
    for (int k = 0; k < 5; ++k)
        doc["sweep.part" + std::to_string(k + 1) + ".max_abs"] = sw.parts[static_cast<std::size_t>(k)].max_abs;

    LatticeSpec lattice;
    lattice.seed = seed;
    const ErfStudyResult erf = run_lattice_erf_study(lattice, nullptr, threads);
    for (int t = 0; t < 3; ++t) {
        const std::string prefix = "erf.theta" + std::to_string(t) + ".";
        doc[prefix + "max_abs"] = erf.per_theta[static_cast<std::size_t>(t)].max_abs;
        doc[prefix + "mean_abs"] = erf.per_theta[static_cast<std::size_t>(t)].mean_abs;
        doc[prefix + "rmse"] = erf.per_theta[static_cast<std::size_t>(t)].rmse;
    }

    IvCompareSpec iv;
    iv.seed = seed;
    const IvCompareResult cmp = run_iv_comparison(iv, nullptr, threads);
    doc["ivcmp.cells_admissible"] = static_cast<double>(cmp.cells_admissible);
    doc["ivcmp.cells_excluded"] = static_cast<double>(cmp.cells_excluded);
    const auto method = [&](const char* name, const IvMethodStats& st) {
        doc[std::string("ivcmp.") + name + ".max_abs"] = st.max_abs;
        doc[std::string("ivcmp.") + name + ".mean_abs"] = st.mean_abs;
        doc[std::string("ivcmp.") + name + ".unavailable"] = static_cast<double>(st.unavailable);
    };
    method("tanh", cmp.tanh_hat);
    method("li", cmp.li);
    method("bs", cmp.brenner);
    method("cm", cmp.corrado_miller);

    return doc;
}

}  // namespace tanhvol
