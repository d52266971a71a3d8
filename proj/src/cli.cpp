#include "ftn/cli.hpp"

#include "ftn/parallel.hpp"
#include "ftn/wavesim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

namespace ftn::cli {

namespace {

constexpr const char* kVersion = "1.0.0";

std::string sig12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_meta(std::ostream& out, const std::string& command,
                const std::vector<std::pair<std::string, std::string>>& meta) {
    out << "# ftn " << command << " v" << kVersion << "\n";
    for (const auto& [key, value] : meta)
        out << "# " << key << ": " << value << "\n";
}

std::string join(const std::vector<double>& values) {
    std::string s;
    for (double v : values) {
        if (!s.empty())
            s += ",";
        s += sig12(v);
    }
    return s;
}

std::string grid_str(const Grid& g) {
    return sig12(g.start) + ":" + sig12(g.stop) + ":" + std::to_string(g.steps);
}

const char* case_name(OffsetCase c) {
    switch (c) {
    case OffsetCase::NoOverlap: return "no-overlap";
    case OffsetCase::CosineOnly: return "cosine-only";
    case OffsetCase::CosineOverFlat: return "cosine-over-flat";
    case OffsetCase::FlatOverlap: return "flat-overlap";
    }
    return "?";
}

double snr_from_db(double db) { return std::pow(10.0, db / 10.0); }

} // namespace

Grid Grid::parse(const std::string& spec) {
    Grid g;
    char trailing;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d%c", &g.start, &g.stop, &g.steps, &trailing) != 3)
        throw std::invalid_argument("grid must be start:stop:steps");
    g.validate();
    return g;
}

void Grid::validate() const {
    if (!(start < stop))
        throw std::invalid_argument("grid start must be below stop");
    if (steps < 2)
        throw std::invalid_argument("grid needs at least 2 steps");
}

std::vector<double> Grid::values() const {
    validate();
    std::vector<double> v(steps);
    for (int i = 0; i < steps; ++i)
        v[i] = start + (stop - start) * i / (steps - 1);
    return v;
}

void cmd_capacity(const CapacityOptions& opt, std::ostream& out) {
    for (double a : opt.alphas)
        if (!(a >= 0.0 && a <= 1.0))
            throw std::invalid_argument("capacity: roll-off must lie in [0,1]");
    const std::vector<double> snrs = opt.snr_db.values();
    const QuadratureSettings q{opt.tol, 1e-14, 4096};

    write_meta(out, "capacity",
               {{"alpha", join(opt.alphas)},
                {"snr_db", grid_str(opt.snr_db)},
                {"W", sig12(opt.nyquist_bw)},
                {"N0", sig12(opt.noise_density)}});
    out << "snr_db,alpha,c_closed,c_quadrature,eta\n";

    struct Row {
        double snr_db, alpha, closed, quad, eta;
    };
    std::vector<Row> rows(opt.alphas.size() * snrs.size());
    parallel_for_index(rows.size(), [&](std::size_t i) {
        const double alpha = opt.alphas[i / snrs.size()];
        const double db = snrs[i % snrs.size()];
        const double power = snr_from_db(db) * opt.nyquist_bw * opt.noise_density;
        const ChannelParams ch = ChannelParams::make(power, opt.noise_density, opt.nyquist_bw);
        const PulseSpectrum pulse = PulseSpectrum::rrc(alpha, opt.nyquist_bw);
        rows[i] = Row{db, alpha, ftn_capacity_closed(alpha, ch).value,
                      ftn_capacity_quadrature(pulse, ch, q).value,
                      mac_rate_closed_bw(alpha, ch).value / opt.nyquist_bw};
    });
    for (const Row& r : rows)
        out << sig12(r.snr_db) << ',' << sig12(r.alpha) << ',' << sig12(r.closed) << ','
            << sig12(r.quad) << ',' << sig12(r.eta) << '\n';
}

void cmd_sharing(const SharingOptions& opt, std::ostream& out) {
    if (!(opt.alpha >= 0.0 && opt.alpha <= 1.0))
        throw std::invalid_argument("sharing: roll-off must lie in [0,1]");
    if (opt.offset_b && opt.offset_grid)
        throw std::invalid_argument("sharing: pass either --offset-b or --grid, not both");
    const double w = opt.nyquist_bw;

    std::vector<double> offsets;
    std::string grid_meta;
    if (opt.offset_b) {
        if (!(*opt.offset_b >= 0.0))
            throw std::invalid_argument("sharing: offset must be non-negative");
        offsets = {*opt.offset_b};
        grid_meta = sig12(*opt.offset_b);
    } else {
        Grid grid = opt.offset_grid.value_or(
            Grid{0.5 * (1.0 + opt.alpha) * w, (1.0 + opt.alpha) * w, 101});
        offsets = grid.values();
        grid_meta = grid_str(grid);
    }

    const double rho = snr_from_db(opt.snr_db);
    const double power = rho * w * opt.noise_density;
    const double density = opt.ref_density.value_or(power / w);
    const PowerMode mode =
        opt.fixed_density ? PowerMode::density(density) : PowerMode::per_user();
    const UserCount users =
        opt.users ? UserCount::finite(*opt.users) : UserCount::asymptotic();
    const PulseSpectrum pulse = PulseSpectrum::rrc(opt.alpha, w);
    const ChannelParams ch = ChannelParams::make(power, opt.noise_density, w);
    const QuadratureSettings q{opt.tol, 1e-14, 4096};

    if (!opt.users && offsets.front() <= 0.0)
        throw std::invalid_argument("sharing: asymptotic users need positive offsets");

    write_meta(out, "sharing",
               {{"alpha", sig12(opt.alpha)},
                {"snr_db", sig12(opt.snr_db)},
                {"offsets", grid_meta},
                {"power_mode", opt.fixed_density ? "density" : "per-user"},
                {"users", opt.users ? std::to_string(*opt.users) : "asymptotic"},
                {"W", sig12(w)},
                {"N0", sig12(opt.noise_density)}});
    out << "B,eta,case,bound\n";

    struct Row {
        double b, eta, bound;
        std::string region;
    };
    std::vector<Row> rows(offsets.size());
    parallel_for_index(rows.size(), [&](std::size_t i) {
        const double b = offsets[i];
        const SharingConfig cfg = SharingConfig::make(pulse, b, users, power, mode);
        std::string region = "quadrature";
        if (b >= 0.5 * absolute_bandwidth(pulse))
            region = case_name(classify_region(opt.alpha, b, w).region);
        rows[i] = Row{b, spectral_efficiency(cfg, ch, q).value, sinc_upper_bound_for(cfg, ch),
                      region};
    });
    for (const Row& r : rows)
        out << sig12(r.b) << ',' << sig12(r.eta) << ',' << r.region << ',' << sig12(r.bound)
            << '\n';
}

void cmd_gap(const GapOptions& opt, std::ostream& out) {
    const std::vector<double> alphas = opt.alphas.values();
    if (alphas.front() < 0.0 || alphas.back() > 1.0)
        throw std::invalid_argument("gap: roll-off grid must lie in [0,1]");

    write_meta(out, "gap", {{"alpha", grid_str(opt.alphas)}});
    out << "alpha,gap_bits,gap_db,gap_normalized_bits\n";
    for (double a : alphas) {
        const double gap = high_snr_gap(a);
        out << sig12(a) << ',' << sig12(gap) << ',' << sig12(gap_to_db(gap)) << ','
            << sig12(high_snr_gap_normalized(a)) << '\n';
    }
}

void cmd_simulate(const SimulateOptions& opt, std::ostream& out) {
    if (!(opt.alpha >= 0.0 && opt.alpha <= 1.0))
        throw std::invalid_argument("simulate: roll-off must lie in [0,1]");
    if (opt.freq_points < 2)
        throw std::invalid_argument("simulate: need at least 2 frequency points");

    const double w = opt.nyquist_bw;
    const PulseSpectrum pulse = PulseSpectrum::rrc(opt.alpha, w);
    const double power = snr_from_db(opt.snr_db) * w * opt.noise_density;
    FtnWaveformConfig cfg;
    cfg.pulse = pulse;
    cfg.tau = opt.tau;
    cfg.num_symbols = opt.symbols;
    cfg.sample_rate = 8.0 * absolute_bandwidth(pulse);
    cfg.seed = opt.seed;
    cfg.symbol_power = power;

    // sample the band interior, staying clear of the outer roll-off tail
    const double f_max = 0.45 * absolute_bandwidth(pulse);
    std::vector<double> freqs(opt.freq_points);
    for (int i = 0; i < opt.freq_points; ++i)
        freqs[i] = -f_max + 2.0 * f_max * i / (opt.freq_points - 1);

    const SnrEstimate est = estimate_snr_density(cfg, opt.noise_density, opt.trials, freqs);

    write_meta(out, "simulate",
               {{"alpha", sig12(opt.alpha)},
                {"tau", sig12(opt.tau)},
                {"symbols", std::to_string(opt.symbols)},
                {"trials", std::to_string(opt.trials)},
                {"seed", std::to_string(opt.seed)},
                {"snr_db", sig12(opt.snr_db)},
                {"W", sig12(w)},
                {"N0", sig12(opt.noise_density)}});
    out << "f,estimate,std_err,analytic\n";
    const ChannelParams ch = ChannelParams::make(power, opt.noise_density, w);
    for (std::size_t i = 0; i < est.freqs.size(); ++i)
        out << sig12(est.freqs[i]) << ',' << sig12(est.estimate[i]) << ','
            << sig12(est.std_err[i]) << ',' << sig12(snr_density(pulse, ch, est.freqs[i]))
            << '\n';
}

namespace {

struct Check {
    std::string name;
    bool passed;
    double max_dev;
    double tol;
};

double rel_dev(double x, double reference) {
    const double scale = std::max(std::fabs(reference), 1e-30);
    return std::fabs(x - reference) / scale;
}

} // namespace

int cmd_validate(const ValidateOptions& opt, std::ostream& out) {
    if (!(opt.tol > 0.0))
        throw std::invalid_argument("validate: tolerance must be positive");
    // integration always runs at its achievable precision; opt.tol only
    // moves the pass/fail line of the agreement checks
    const QuadratureSettings q{1e-11, 1e-15, 8192};
    std::vector<Check> checks;
    const std::vector<double> rhos = {0.01, 0.1, 1.0, 10.0, 100.0, 1000.0};

    { // capacity quadrature against the closed form, full grid
        double worst = 0.0;
        for (int ai = 0; ai <= 10; ++ai) {
            const double alpha = ai / 10.0;
            const PulseSpectrum pulse = PulseSpectrum::rrc(alpha);
            for (double rho : rhos) {
                const ChannelParams ch = ChannelParams::from_snr(rho);
                worst = std::max(worst, rel_dev(ftn_capacity_quadrature(pulse, ch, q).value,
                                                ftn_capacity_closed(alpha, ch).value));
            }
        }
        checks.push_back({"closed-vs-quadrature", worst <= opt.tol, worst, opt.tol});
    }

    { // B = W: closed form vs case expression vs direct quadrature
        double worst = 0.0;
        for (int ai = 0; ai <= 10; ++ai) {
            const double alpha = ai / 10.0;
            const PulseSpectrum pulse = PulseSpectrum::rrc(alpha);
            for (double rho : rhos) {
                const ChannelParams ch = ChannelParams::from_snr(rho);
                const SharingConfig cfg =
                    SharingConfig::make(pulse, 1.0, UserCount::asymptotic(), rho);
                const double closed = mac_rate_closed_bw(alpha, ch).value;
                worst = std::max(worst, rel_dev(mac_rate_cases(cfg, ch, q).value, closed));
                worst = std::max(worst, rel_dev(mac_rate_quadrature(cfg, ch, q).value, closed));
            }
        }
        checks.push_back({"offset-w-triple-agreement", worst <= opt.tol, worst, opt.tol});
    }

    { // interior of cases 2-4 against direct quadrature
        double worst = 0.0;
        const double rho_grid[] = {0.1, 10.0};
        const double alphas[] = {0.1, 0.25, 1.0 / 3.0, 0.5, 0.75, 1.0};
        for (double alpha : alphas) {
            const PulseSpectrum pulse = PulseSpectrum::rrc(alpha);
            const double lo = 0.5 * (1.0 + alpha);
            for (double rho : rho_grid) {
                const ChannelParams ch = ChannelParams::from_snr(rho);
                for (int i = 0; i <= 12; ++i) {
                    const double b = lo + (1.0 + alpha - lo) * i / 12.0;
                    const SharingConfig cfg =
                        SharingConfig::make(pulse, b, UserCount::asymptotic(), rho);
                    worst = std::max(worst, rel_dev(mac_rate_cases(cfg, ch, q).value,
                                                    mac_rate_quadrature(cfg, ch, q).value));
                }
            }
        }
        checks.push_back({"case-formulas-vs-quadrature", worst <= opt.tol, worst, opt.tol});
    }

    { // adjacent case expressions at every shared edge
        double worst = 0.0;
        const double alphas[] = {0.1, 0.25, 1.0 / 3.0, 0.5, 1.0};
        for (double alpha : alphas) {
            const PulseSpectrum pulse = PulseSpectrum::rrc(alpha);
            const ChannelParams ch = ChannelParams::from_snr(10.0);
            std::vector<double> edges = {(1.0 + alpha), 1.0,
                                         std::max((1.0 - alpha), 0.5 * (1.0 + alpha)),
                                         0.5 * (1.0 + alpha)};
            if (alpha <= 1.0 / 3.0)
                edges.push_back(1.0 - alpha);
            for (double b : edges) {
                const SharingConfig cfg =
                    SharingConfig::make(pulse, b, UserCount::asymptotic(), 10.0);
                worst = std::max(worst, rel_dev(mac_rate_cases(cfg, ch, q).value,
                                                mac_rate_quadrature(cfg, ch, q).value));
            }
        }
        checks.push_back({"case-boundary-continuity", worst <= opt.tol, worst, opt.tol});
    }

    { // capacity plus the B = W shared rate is twice the Shannon rate
        double worst = 0.0;
        for (int ai = 0; ai <= 10; ++ai) {
            const double alpha = ai / 10.0;
            for (double rho : rhos) {
                const ChannelParams ch = ChannelParams::from_snr(rho);
                const double sum =
                    ftn_capacity_closed(alpha, ch).value + mac_rate_closed_bw(alpha, ch).value;
                worst = std::max(worst, rel_dev(sum, 2.0 * awgn_capacity(ch).value));
            }
        }
        checks.push_back({"capacity-sum-identity", worst <= 1e-12, worst, 1e-12});
    }

    { // Jensen bound dominates every random configuration
        std::mt19937_64 rng(opt.seed);
        auto uniform = [&](double lo, double hi) {
            return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        };
        double worst_slack = 0.0; // most negative (bound - eta)
        for (int i = 0; i < 200; ++i) {
            const double alpha = uniform(0.0, 1.0);
            const double b = uniform(0.5 * (1.0 + alpha), 1.5 * (1.0 + alpha));
            const double rho = std::pow(10.0, uniform(-2.0, 3.0));
            const int k = 2 * static_cast<int>(uniform(0.0, 5.0)) + 1;
            const SharingConfig cfg = SharingConfig::make(
                PulseSpectrum::rrc(alpha), b, UserCount::finite(k), rho);
            const ChannelParams ch = ChannelParams::from_snr(rho);
            const double slack =
                sinc_upper_bound_for(cfg, ch) - spectral_efficiency(cfg, ch, q).value;
            worst_slack = std::min(worst_slack, slack);
        }
        // sinc pulses at A = B = W meet the bound exactly
        const SharingConfig sinc_cfg = SharingConfig::make(PulseSpectrum::sinc(1.0), 1.0,
                                                           UserCount::finite(5), 2.0);
        const ChannelParams ch = ChannelParams::from_snr(2.0);
        const double equality_gap = std::fabs(sinc_upper_bound_for(sinc_cfg, ch) -
                                              spectral_efficiency(sinc_cfg, ch, q).value);
        const bool ok = worst_slack >= -1e-9 && equality_gap <= 1e-9;
        checks.push_back({"sinc-bound-dominance", ok,
                          std::max(-worst_slack, equality_gap), 1e-9});
    }

    if (!opt.skip_wavesim) { // SNR(f) must not depend on the FTN rate
        FtnWaveformConfig cfg;
        cfg.pulse = PulseSpectrum::rrc(0.5);
        cfg.num_symbols = 256;
        cfg.sample_rate = 12.0;
        cfg.seed = opt.seed;
        std::vector<double> freqs(8);
        for (int i = 0; i < 8; ++i)
            freqs[i] = -0.6 + 1.2 * i / 7.0;
        const double taus[] = {0.5, 0.7, 1.0};
        std::vector<SnrEstimate> runs;
        for (double tau : taus) {
            cfg.tau = tau;
            runs.push_back(estimate_snr_density(cfg, 1.0, 120, freqs));
        }
        double worst_sigma = 0.0;
        for (std::size_t a = 0; a < runs.size(); ++a)
            for (std::size_t b = a + 1; b < runs.size(); ++b)
                for (std::size_t i = 0; i < freqs.size(); ++i) {
                    const double diff = std::fabs(runs[a].estimate[i] - runs[b].estimate[i]);
                    const double sigma = std::hypot(runs[a].std_err[i], runs[b].std_err[i]);
                    worst_sigma = std::max(worst_sigma, diff / sigma);
                }
        checks.push_back({"wavesim-tau-independence", worst_sigma <= 3.0, worst_sigma, 3.0});
    }

    bool all_passed = true;
    for (const Check& c : checks) {
        all_passed = all_passed && c.passed;
        char line[160];
        std::snprintf(line, sizeof(line), "%-4s %-28s max dev %.3e (tol %.1e)",
                      c.passed ? "PASS" : "FAIL", c.name.c_str(), c.max_dev, c.tol);
        out << line << "\n";
    }
    out << (all_passed ? "all checks passed" : "VALIDATION FAILED") << "\n";
    return all_passed ? 0 : 1;
}

namespace {

// Writes a gnuplot companion that renders the CSV just produced.
void write_plot_script(const std::string& script_path, const std::string& csv_path,
                       const std::string& subcommand) {
    std::ofstream s(script_path);
    if (!s)
        throw std::runtime_error("cannot open plot script file: " + script_path);
    s << "set datafile separator ','\n"
      << "set datafile commentschars '#'\n"
      << "set key left top\n"
      << "set grid\n";
    if (subcommand == "capacity") {
        s << "set xlabel 'SNR [dB]'\nset ylabel 'bits/s/Hz'\n"
          << "plot '" << csv_path << "' skip 1 using 1:($3) with points title 'C/W', \\\n"
          << "     '" << csv_path << "' skip 1 using 1:($5) with points title 'eta(B=W)'\n";
    } else if (subcommand == "sharing") {
        s << "set xlabel 'offset B [Hz]'\nset ylabel 'bits/s/Hz'\n"
          << "plot '" << csv_path << "' skip 1 using 1:2 with lines title 'eta', \\\n"
          << "     '" << csv_path << "' skip 1 using 1:4 with lines title 'sinc bound'\n";
    } else if (subcommand == "gap") {
        s << "set xlabel 'roll-off'\nset ylabel 'bits/s/Hz'\n"
          << "plot '" << csv_path << "' skip 1 using 1:2 with lines title 'gap', \\\n"
          << "     '" << csv_path << "' skip 1 using 1:4 with lines title 'normalized gap'\n";
    } else {
        s << "set xlabel 'f [Hz]'\nset ylabel 'SNR(f)'\n"
          << "plot '" << csv_path << "' skip 1 using 1:2:($3*3) with yerrorbars title 'estimate', \\\n"
          << "     '" << csv_path << "' skip 1 using 1:4 with lines title 'analytic'\n";
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"faster-than-Nyquist capacity and spectrum-sharing calculator"};
    app.require_subcommand(1);

    std::string out_path;
    std::string plot_path;

    CapacityOptions cap;
    std::string cap_grid;
    auto* capacity = app.add_subcommand("capacity", "single-user capacity sweep over SNR");
    capacity->add_option("--alpha", cap.alphas, "roll-off factors")
        ->check(CLI::Range(0.0, 1.0));
    capacity->add_option("--grid", cap_grid, "SNR sweep in dB, start:stop:steps");
    capacity->add_option("--bandwidth-w", cap.nyquist_bw, "Nyquist bandwidth, Hz")
        ->check(CLI::PositiveNumber);
    capacity->add_option("--noise-n0", cap.noise_density, "noise density, W/Hz")
        ->check(CLI::PositiveNumber);
    capacity->add_option("--tol", cap.tol, "quadrature relative tolerance")
        ->check(CLI::PositiveNumber);

    SharingOptions sh;
    std::string sh_grid, sh_users, sh_mode;
    auto* sharing = app.add_subcommand("sharing", "spectral efficiency against the offset B");
    sharing->add_option("--alpha", sh.alpha, "roll-off factor")->check(CLI::Range(0.0, 1.0));
    sharing->add_option("--snr-db", sh.snr_db, "per-user SNR, dB");
    sharing->add_option("--grid", sh_grid, "offset sweep, start:stop:steps");
    sharing->add_option("--offset-b", sh.offset_b, "single offset instead of a sweep, Hz");
    sharing->add_option("--power-mode", sh_mode, "per-user or density")
        ->check(CLI::IsMember({"per-user", "density"}));
    sharing->add_option("--density", sh.ref_density, "reference density, W/Hz (density mode)");
    sharing->add_option("--users", sh_users, "asymptotic or an odd user count");
    sharing->add_option("--bandwidth-w", sh.nyquist_bw, "Nyquist bandwidth, Hz")
        ->check(CLI::PositiveNumber);
    sharing->add_option("--noise-n0", sh.noise_density, "noise density, W/Hz")
        ->check(CLI::PositiveNumber);
    sharing->add_option("--tol", sh.tol, "quadrature relative tolerance")
        ->check(CLI::PositiveNumber);

    GapOptions gap;
    std::string gap_grid;
    auto* gapcmd = app.add_subcommand("gap", "high-SNR additive gaps against the roll-off");
    gapcmd->add_option("--grid", gap_grid, "roll-off sweep, start:stop:steps");

    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo SNR density estimate");
    simulate->add_option("--alpha", sim.alpha, "roll-off factor")->check(CLI::Range(0.0, 1.0));
    simulate->add_option("--tau", sim.tau, "FTN compression factor")
        ->check(CLI::Range(1e-3, 1.0));
    simulate->add_option("--symbols", sim.symbols, "symbols per waveform")
        ->check(CLI::Range(64, 1 << 20));
    simulate->add_option("--trials", sim.trials, "ensemble size")->check(CLI::Range(100, 1 << 20));
    simulate->add_option("--freqs", sim.freq_points, "number of sampled frequencies")
        ->check(CLI::Range(2, 4096));
    simulate->add_option("--seed", sim.seed, "RNG seed");
    simulate->add_option("--snr-db", sim.snr_db, "symbol SNR, dB");

    ValidateOptions val;
    auto* validate = app.add_subcommand("validate", "cross-validation report");
    validate->add_option("--tol", val.tol, "relative tolerance for agreement checks")
        ->check(CLI::PositiveNumber);
    validate->add_option("--seed", val.seed, "RNG seed for randomized checks");
    validate->add_flag("--skip-wavesim", val.skip_wavesim, "skip the Monte-Carlo check");

    for (auto* sub : {capacity, sharing, gapcmd, simulate}) {
        sub->add_option("--out", out_path, "write CSV to a file instead of stdout");
        sub->add_option("--plot", plot_path, "also write a gnuplot script (needs --out)");
    }

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (!cap_grid.empty())
            cap.snr_db = Grid::parse(cap_grid);
        if (!sh_grid.empty())
            sh.offset_grid = Grid::parse(sh_grid);
        if (!gap_grid.empty())
            gap.alphas = Grid::parse(gap_grid);
        sh.fixed_density = sh_mode == "density";
        if (!sh_users.empty() && sh_users != "asymptotic")
            sh.users = std::stoi(sh_users);
        if (!plot_path.empty() && out_path.empty())
            throw std::invalid_argument("--plot needs --out");

        std::ofstream file;
        std::ostream* sink = &out;
        const bool needs_file = !out_path.empty() && !validate->parsed();
        if (needs_file) {
            file.open(out_path);
            if (!file)
                throw std::invalid_argument("cannot open output file: " + out_path);
            sink = &file;
        }

        int status = 0;
        std::string subname;
        if (capacity->parsed()) {
            cmd_capacity(cap, *sink);
            subname = "capacity";
        } else if (sharing->parsed()) {
            cmd_sharing(sh, *sink);
            subname = "sharing";
        } else if (gapcmd->parsed()) {
            cmd_gap(gap, *sink);
            subname = "gap";
        } else if (simulate->parsed()) {
            cmd_simulate(sim, *sink);
            subname = "simulate";
        } else if (validate->parsed()) {
            status = cmd_validate(val, out);
        }
        if (!plot_path.empty())
            write_plot_script(plot_path, out_path, subname);
        return status;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace ftn::cli
