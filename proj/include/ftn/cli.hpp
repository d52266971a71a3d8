#pragma once

#include "ftn/asymptotics.hpp"
#include "ftn/sharing.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ftn::cli {

/// Inclusive sweep start:stop:steps, at least two points.
struct Grid {
    double start = 0.0;
    double stop = 1.0;
    int steps = 2;

    static Grid parse(const std::string& spec); // throws std::invalid_argument
    void validate() const;
    std::vector<double> values() const;
};

struct CapacityOptions {
    std::vector<double> alphas = {0.0, 0.25, 0.5, 0.75, 1.0};
    Grid snr_db{-10.0, 40.0, 101};
    double nyquist_bw = 1.0;
    double noise_density = 1.0;
    double tol = 1e-10;
};

struct SharingOptions {
    double alpha = 0.5;
    double snr_db = 10.0;
    std::optional<Grid> offset_grid;      // defaults to [(1+a)W/2, (1+a)W], 101 points
    std::optional<double> offset_b;       // single offset instead of a sweep
    bool fixed_density = false;           // false: fixed per-user power
    std::optional<double> ref_density;    // defaults to P/W
    std::optional<int> users;             // odd K; absent means asymptotic
    double nyquist_bw = 1.0;
    double noise_density = 1.0;
    double tol = 1e-10;
};

struct GapOptions {
    Grid alphas{0.0, 1.0, 101};
};

struct SimulateOptions {
    double alpha = 0.5;
    double tau = 0.7;
    int symbols = 512;
    int trials = 500;
    int freq_points = 16;
    std::uint64_t seed = 42;
    double snr_db = 0.0;
    double nyquist_bw = 1.0;
    double noise_density = 1.0;
};

struct ValidateOptions {
    double tol = 1e-8;
    std::uint64_t seed = 42;
    bool skip_wavesim = false; // skip the slow Monte-Carlo cross-check
};

/// Single-user capacity sweep: columns snr_db, alpha, c_closed,
/// c_quadrature, eta (the B = W shared-band efficiency).
void cmd_capacity(const CapacityOptions& opt, std::ostream& out);

/// Spectral efficiency against the offset: columns B, eta, case, bound.
void cmd_sharing(const SharingOptions& opt, std::ostream& out);

/// High-SNR gaps: columns alpha, gap_bits, gap_db, gap_normalized_bits.
void cmd_gap(const GapOptions& opt, std::ostream& out);

/// Monte-Carlo SNR density against the analytic curve: columns f,
/// estimate, std_err, analytic.
void cmd_simulate(const SimulateOptions& opt, std::ostream& out);

/// Cross-validation report; returns 0 when every check passes, 1 otherwise.
int cmd_validate(const ValidateOptions& opt, std::ostream& out);

/// Full command-line front end. Returns 0 on success, 1 on failed
/// validation, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ftn::cli
