// Acceptance suite: runs every exit criterion end to end and prints one
// pass/fail line per criterion. Exits non-zero if any criterion fails.

#include "ftn/asymptotics.hpp"
#include "ftn/cli.hpp"
#include "ftn/sharing.hpp"
#include "ftn/wavesim.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ftn;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool passed;
    std::string detail;
};

std::vector<Criterion> g_results;

void record(int id, const std::string& name, bool passed, const std::string& detail) {
    g_results.push_back({id, name, passed, detail});
}

std::string fmt(const char* format, ...) {
    char buf[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SharingConfig asym(double alpha, double b, double power,
                   PowerMode mode = PowerMode::per_user()) {
    return SharingConfig::make(PulseSpectrum::rrc(alpha), b, UserCount::asymptotic(), power,
                               mode);
}

// --- criterion 1: closed form vs quadrature, full grid, under a second ---
void criterion_closed_vs_quadrature() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int ai = 0; ai <= 10; ++ai) {
        const double alpha = ai / 10.0;
        const PulseSpectrum pulse = PulseSpectrum::rrc(alpha);
        for (double rho : {0.01, 0.1, 1.0, 10.0, 100.0, 1000.0}) {
            const ChannelParams ch = ChannelParams::from_snr(rho);
            const double closed = ftn_capacity_closed(alpha, ch).value;
            const double numeric = ftn_capacity_quadrature(pulse, ch).value;
            worst = std::max(worst, std::fabs(numeric - closed) / closed);
        }
    }
    const double elapsed = seconds_since(start);
    record(1, "capacity closed form vs quadrature", worst <= 1e-8 && elapsed < 1.0,
           fmt("max rel dev %.2e (tol 1e-8), %.2f s (limit 1 s)", worst, elapsed));
}

// --- criterion 2: B = W triple agreement ---
void criterion_triple_agreement() {
    double worst = 0.0;
    for (int ai = 0; ai <= 10; ++ai) {
        const double alpha = ai / 10.0;
        const PulseSpectrum pulse = PulseSpectrum::rrc(alpha);
        for (double rho : {0.01, 0.1, 1.0, 10.0, 100.0, 1000.0}) {
            const ChannelParams ch = ChannelParams::from_snr(rho);
            const SharingConfig cfg =
                SharingConfig::make(pulse, 1.0, UserCount::asymptotic(), rho);
            const double closed = mac_rate_closed_bw(alpha, ch).value;
            const double via_case = mac_rate_cases(cfg, ch).value;
            const double numeric = mac_rate_quadrature(cfg, ch).value;
            worst = std::max(worst, std::fabs(via_case - closed) / closed);
            worst = std::max(worst, std::fabs(numeric - closed) / closed);
        }
    }
    record(2, "offset-W closed form vs case expression vs quadrature", worst <= 1e-8,
           fmt("max rel dev %.2e (tol 1e-8)", worst));
}

// --- criterion 3: cosine-over-flat and flat-overlap cases, edge continuity ---
void criterion_overlap_cases() {
    double worst = 0.0;
    // grids covering cases 3 and 4 (alpha = 0.25 exercises the flat overlap)
    const struct {
        double alpha;
        double b_lo, b_hi;
    } spans[] = {
        {0.25, 0.625, 0.75}, // case 4
        {0.2, 0.6, 0.8},     // case 4
        {0.25, 0.75, 1.0},   // case 3
        {0.5, 0.75, 1.0},    // case 3
        {0.75, 0.875, 1.0},  // case 3
    };
    for (const auto& span : spans) {
        for (double rho : {0.1, 10.0, 100.0}) {
            const ChannelParams ch = ChannelParams::from_snr(rho);
            for (int i = 0; i <= 8; ++i) {
                const double b = span.b_lo + (span.b_hi - span.b_lo) * i / 8.0;
                const SharingConfig cfg = asym(span.alpha, b, rho);
                const double cases = mac_rate_cases(cfg, ch).value;
                const double numeric = mac_rate_quadrature(cfg, ch).value;
                worst = std::max(worst, std::fabs(cases - numeric) / numeric);
            }
        }
    }

    // continuity at all four case edges
    double worst_edge = 0.0;
    const double eps = 1e-10;
    for (double alpha : {0.1, 0.25, 1.0 / 3.0, 0.5, 0.75, 1.0}) {
        const ChannelParams ch = ChannelParams::from_snr(10.0);
        std::vector<double> edges = {1.0 + alpha, 1.0,
                                     std::max(1.0 - alpha, 0.5 * (1.0 + alpha)),
                                     0.5 * (1.0 + alpha)};
        if (alpha <= 1.0 / 3.0)
            edges.push_back(1.0 - alpha);
        for (double edge : edges) {
            const double at = mac_rate_cases(asym(alpha, edge, 10.0), ch).value;
            for (double side : {edge - eps, edge + eps}) {
                if (side < 0.5 * (1.0 + alpha) || side > 1.0 + alpha)
                    continue;
                const double next = mac_rate_cases(asym(alpha, side, 10.0), ch).value;
                worst_edge = std::max(worst_edge, std::fabs(next - at) / at);
            }
        }
    }
    record(3, "overlap case expressions and edge continuity",
           worst <= 1e-8 && worst_edge <= 1e-8,
           fmt("max rel dev %.2e interior, %.2e edges (tol 1e-8)", worst, worst_edge));
}

// --- criterion 4: the reference gap values ---
void criterion_gap_numbers() {
    bool ok = true;
    std::string why;
    const auto expect = [&](bool cond, const char* what) {
        if (!cond) {
            ok = false;
            why += std::string(why.empty() ? "" : "; ") + what;
        }
    };
    expect(high_snr_gap(0.5) == 4.0 / 3.0, "gap(0.5) != 4/3");
    expect(high_snr_gap(1.0) == 2.0, "gap(1) != 2");
    const double db_half = gap_to_db(4.0 / 3.0);
    expect(db_half >= 4.00 && db_half <= 4.02, "dB(4/3) outside [4.00, 4.02]");
    const double db_one = gap_to_db(2.0);
    expect(db_one >= 6.01 && db_one <= 6.03, "dB(2) outside [6.01, 6.03]");
    // 4/3 - log2(3/2) = 0.7484, quoted as 0.75; its dB equivalent 2.253
    // confirms the quote is rounded to two decimals
    const double norm_half = high_snr_gap_normalized(0.5);
    expect(norm_half == 4.0 / 3.0 - std::log2(1.5), "normalized gap(0.5) != 4/3 - log2(3/2)");
    expect(std::fabs(norm_half - 0.75) < 0.005, "normalized gap(0.5) not 0.75 at 2 decimals");
    const double db_norm = gap_to_db(0.75);
    expect(db_norm >= 2.25 && db_norm <= 2.27, "dB(0.75) outside [2.25, 2.27]");
    expect(std::fabs(high_snr_gap_normalized(1.0) - 1.0) < 1e-14, "normalized gap(1) != 1");
    record(4, "high-SNR gap numbers and dB equivalents", ok,
           ok ? fmt("4/3 -> %.3f dB, 2 -> %.3f dB, 0.75 (exact %.4f) -> %.3f dB", db_half,
                    db_one, norm_half, db_norm)
              : why);
}

// --- criterion 5: asymptotic convergence of the exact efficiency ---
void criterion_asymptotics() {
    bool ok = true;

    // high SNR: additive gap against log2(rho) at B = (1+a)W
    double worst_gap = 0.0;
    for (double alpha : {0.25, 0.5, 1.0}) {
        const double rho = 1e6;
        const ChannelParams ch = ChannelParams::from_snr(rho);
        const double eta = spectral_efficiency(asym(alpha, 1.0 + alpha, rho), ch).value;
        worst_gap = std::max(worst_gap,
                             std::fabs(std::log2(rho) - eta - high_snr_gap(alpha)));
    }
    ok = ok && worst_gap <= 0.01;

    // pre-log at B = W: the coefficient of log2(rho), measured as the local
    // slope of the exact efficiency around rho = 1e7 (the ratio eta/log2(rho)
    // carries the additive 4a/(1+a) offset and converges only as 1/log(rho))
    double worst_prelog = 0.0;
    double worst_ratio = 0.0;
    for (double alpha : {0.25, 0.5, 1.0}) {
        const double eta_lo =
            spectral_efficiency(asym(alpha, 1.0, 5e6), ChannelParams::from_snr(5e6)).value;
        const double eta_hi =
            spectral_efficiency(asym(alpha, 1.0, 2e7), ChannelParams::from_snr(2e7)).value;
        const double slope = (eta_hi - eta_lo) / 2.0;
        worst_prelog = std::max(worst_prelog, std::fabs(slope - (1.0 - alpha)));
        const double eta =
            spectral_efficiency(asym(alpha, 1.0, 1e7), ChannelParams::from_snr(1e7)).value;
        worst_ratio =
            std::max(worst_ratio, std::fabs(eta / std::log2(1e7) - (1.0 - alpha)));
    }
    ok = ok && worst_prelog <= 0.005;

    // low SNR: eta * B N0 / P approaches log2(e)
    double worst_low = 0.0;
    for (double alpha : {0.25, 0.5, 1.0}) {
        const double rho = 1e-4;
        const ChannelParams ch = ChannelParams::from_snr(rho);
        for (double b : {0.5 * (1.0 + alpha), 1.0, 1.0 + alpha}) {
            const double eta = spectral_efficiency(asym(alpha, b, rho), ch).value;
            worst_low = std::max(worst_low,
                                 std::fabs(eta * b / rho - std::log2(M_E)) / std::log2(M_E));
        }
    }
    ok = ok && worst_low <= 0.02;

    record(5, "asymptotic convergence (gap, pre-log slope, low-SNR limit)", ok,
           fmt("gap dev %.2e (tol 0.01), pre-log slope dev %.2e (tol 0.005, "
               "raw ratio dev %.2f), low-SNR dev %.2e (tol 0.02)",
               worst_gap, worst_prelog, worst_ratio, worst_low));
}

// --- criterion 6: sinc optimality over random configurations ---
void criterion_sinc_optimality() {
    std::mt19937_64 rng(20140314);
    auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };
    double worst_slack = 1e300;
    for (int i = 0; i < 200; ++i) {
        const double alpha = uniform(0.0, 1.0);
        const double b = uniform(0.5 * (1.0 + alpha), 1.5 * (1.0 + alpha));
        const double rho = std::pow(10.0, uniform(-2.0, 3.0));
        const int k = 2 * static_cast<int>(uniform(0.0, 5.0)) + 1;
        const SharingConfig cfg =
            SharingConfig::make(PulseSpectrum::rrc(alpha), b, UserCount::finite(k), rho);
        const ChannelParams ch = ChannelParams::from_snr(rho);
        worst_slack = std::min(worst_slack, sinc_upper_bound_for(cfg, ch) -
                                                spectral_efficiency(cfg, ch).value);
    }

    double equality_gap = 0.0;
    for (int k : {1, 3, 9}) {
        const SharingConfig cfg =
            SharingConfig::make(PulseSpectrum::sinc(1.0), 1.0, UserCount::finite(k), 2.0);
        const ChannelParams ch = ChannelParams::from_snr(2.0);
        equality_gap = std::max(equality_gap,
                                std::fabs(sinc_upper_bound_for(cfg, ch) -
                                          spectral_efficiency(cfg, ch).value));
    }
    record(6, "sinc bound dominance and equality", worst_slack >= -1e-9 && equality_gap <= 1e-9,
           fmt("min slack %.2e (>= -1e-9), sinc equality gap %.2e (<= 1e-9)", worst_slack,
               equality_gap));
}

// --- criterion 7: monotonicity of the solid and dashed curves ---
void criterion_monotonicity() {
    bool ok = true;
    for (double rho : {1.0, 10.0, 100.0}) {
        const ChannelParams ch = ChannelParams::from_snr(rho);
        double c_prev = -1.0, eta_prev = 1e300;
        for (int i = 0; i <= 20; ++i) {
            const double alpha = i / 20.0;
            const double c = ftn_capacity_closed(alpha, ch).value;
            const double eta = spectral_efficiency(asym(alpha, 1.0, rho), ch).value;
            ok = ok && c > c_prev && eta < eta_prev;
            c_prev = c;
            eta_prev = eta;
        }
    }
    record(7, "capacity ascends / shared efficiency descends with roll-off", ok,
           "21-point roll-off grid at rho in {1, 10, 100}");
}

// --- criterion 8: Monte-Carlo SNR density ---
void criterion_wavesim() {
    const auto start = std::chrono::steady_clock::now();

    FtnWaveformConfig cfg;
    cfg.pulse = PulseSpectrum::rrc(0.5, 1.0);
    cfg.num_symbols = 512;
    cfg.sample_rate = 12.0;
    cfg.seed = 6294;
    cfg.symbol_power = 1.0;

    std::vector<double> freqs(16);
    for (int i = 0; i < 16; ++i)
        freqs[i] = -0.6 + 1.2 * i / 15.0; // in-band, |H|^2 >= 0.1/W

    cfg.tau = 0.7;
    const SnrEstimate ftn_run = estimate_snr_density(cfg, 1.0, 500, freqs);
    cfg.tau = 1.0;
    const SnrEstimate nyquist_run = estimate_snr_density(cfg, 1.0, 500, freqs);

    const ChannelParams ch = ChannelParams::make(1.0, 1.0, 1.0);
    double worst_rel = 0.0;
    double worst_sigma = 0.0;
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        const double analytic = snr_density(cfg.pulse, ch, freqs[i]);
        worst_rel = std::max(worst_rel, std::fabs(ftn_run.estimate[i] - analytic) / analytic);
        worst_rel = std::max(worst_rel,
                             std::fabs(nyquist_run.estimate[i] - analytic) / analytic);
        const double diff = std::fabs(ftn_run.estimate[i] - nyquist_run.estimate[i]);
        const double sigma = std::hypot(ftn_run.std_err[i], nyquist_run.std_err[i]);
        worst_sigma = std::max(worst_sigma, diff / sigma);
    }
    const double elapsed = seconds_since(start);
    record(8, "Monte-Carlo SNR density matches P|H(f)|^2/N0 and is tau-independent",
           worst_rel <= 0.05 && worst_sigma <= 3.0 && elapsed < 30.0,
           fmt("max rel dev %.3f (tol 0.05), tau diff %.2f sigma (tol 3), %.1f s (limit 30 s)",
               worst_rel, worst_sigma, elapsed));
}

// --- criterion 9: curve data from the CLI commands ---
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    double num(std::size_t row, const std::string& col) const {
        for (std::size_t c = 0; c < columns.size(); ++c)
            if (columns[c] == col)
                return std::stod(rows[row][c]);
        throw std::out_of_range(col);
    }
};

Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> cells;
        std::istringstream cs(line);
        std::string cell;
        while (std::getline(cs, cell, ','))
            cells.push_back(cell);
        if (t.columns.empty())
            t.columns = cells;
        else
            t.rows.push_back(cells);
    }
    return t;
}

void criterion_curves() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;
    const auto expect = [&](bool cond, const char* what) {
        if (!cond) {
            ok = false;
            why += std::string(why.empty() ? "" : "; ") + what;
        }
    };

    { // capacity curves: solid ascend with alpha, dashed descend, dashed below solid
        cli::CapacityOptions opt;
        opt.alphas = {0.0, 0.25, 0.5, 0.75, 1.0};
        opt.snr_db = cli::Grid{-10.0, 40.0, 11};
        std::ostringstream out;
        cli::cmd_capacity(opt, out);
        const Table t = parse_csv(out.str());
        std::map<double, std::vector<std::pair<double, double>>> by_snr;
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            by_snr[t.num(r, "snr_db")].push_back(
                {t.num(r, "c_closed"), t.num(r, "eta")});
        for (auto& [snr, series] : by_snr)
            for (std::size_t i = 1; i < series.size(); ++i) {
                expect(series[i].first > series[i - 1].first, "solid curves not ascending");
                expect(series[i].second < series[i - 1].second, "dashed curves not descending");
                expect(series[i].second < series[i].first, "dashed not below solid");
            }
    }

    { // sharing at fixed per-user power, low SNR: small offsets win
        cli::SharingOptions opt;
        opt.alpha = 0.5;
        opt.snr_db = -30.0;
        opt.offset_grid = cli::Grid{0.75, 1.5, 16};
        std::ostringstream out;
        cli::cmd_sharing(opt, out);
        const Table t = parse_csv(out.str());
        for (std::size_t r = 1; r < t.rows.size(); ++r)
            expect(t.num(r, "eta") < t.num(r - 1, "eta"), "per-user eta not decreasing in B");
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            expect(t.num(r, "eta") <= t.num(r, "bound") + 1e-9, "eta above the sinc bound");
    }

    { // sharing at fixed density, low SNR: flat within 1%
        cli::SharingOptions opt;
        opt.alpha = 0.5;
        opt.snr_db = -30.0;
        opt.offset_grid = cli::Grid{0.75, 1.5, 16};
        opt.fixed_density = true;
        std::ostringstream out;
        cli::cmd_sharing(opt, out);
        const Table t = parse_csv(out.str());
        double lo = 1e300, hi = 0.0;
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            lo = std::min(lo, t.num(r, "eta"));
            hi = std::max(hi, t.num(r, "eta"));
        }
        expect(hi - lo <= 0.01 * hi, "density-normalized eta not flat at low SNR");
    }

    { // gap curves increase over the roll-off grid
        cli::GapOptions opt;
        opt.alphas = cli::Grid{0.0, 1.0, 21};
        std::ostringstream out;
        cli::cmd_gap(opt, out);
        const Table t = parse_csv(out.str());
        for (std::size_t r = 1; r < t.rows.size(); ++r) {
            expect(t.num(r, "gap_bits") > t.num(r - 1, "gap_bits"), "gap not increasing");
            expect(t.num(r, "gap_normalized_bits") > t.num(r - 1, "gap_normalized_bits"),
                   "normalized gap not increasing");
        }
    }

    const double elapsed = seconds_since(start);
    expect(elapsed < 5.0, "curve reproduction exceeded 5 s");
    record(9, "curve ordering and shape of the CLI tables", ok,
           ok ? fmt("capacity/sharing/gap tables verified, %.2f s (limit 5 s)", elapsed) : why);
}

} // namespace

int main() {
    criterion_closed_vs_quadrature();
    criterion_triple_agreement();
    criterion_overlap_cases();
    criterion_gap_numbers();
    criterion_asymptotics();
    criterion_sinc_optimality();
    criterion_monotonicity();
    criterion_wavesim();
    criterion_curves();

    bool all = true;
    for (const auto& c : g_results) {
        all = all && c.passed;
        std::printf("%s  criterion %d: %s — %s\n", c.passed ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), c.detail.c_str());
    }
    std::printf("%s\n", all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
    return all ? 0 : 1;
}
