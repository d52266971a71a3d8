#pragma once

#include "ftn/pulses.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace ftn {

/// Time-domain FTN waveform setup. Symbols are spaced tau*T apart with
/// T = 1/W, so tau = 1 is Nyquist-rate signaling and tau < 1 is FTN.
struct FtnWaveformConfig {
    PulseSpectrum pulse;
    double tau = 1.0;          // compression factor, 0 < tau <= 1
    int num_symbols = 512;     // L
    double sample_rate = 8.0;  // Hz, must be >= 2*A; 4*A or more recommended
    std::uint64_t seed = 1;    // RNG seed; trial seeds are derived from it
    double symbol_power = 1.0; // P, symbol variance, Watts

    void validate() const;
    double symbol_period() const { return 1.0 / pulse.nyquist_bw; }
};

struct Waveform {
    double t0 = 0.0; // time of samples[0], seconds
    double dt = 0.0; // sample spacing, seconds
    std::vector<std::complex<double>> samples;
};

/// Monte-Carlo estimate of SNR(f) across an ensemble of waveforms.
struct SnrEstimate {
    std::vector<double> freqs;
    std::vector<double> estimate; // dimensionless SNR at each frequency
    std::vector<double> std_err;  // per-frequency standard error of the mean
    int trials = 0;
};

/// Zero-phase (real, even) impulse response h(t) of the pulse, the inverse
/// transform of sqrt(|H(f)|^2). Total over all t; unit energy.
double impulse_response(const PulseSpectrum& pulse, double t);

/// h(t) sampled symmetrically around t = 0 over the given duration.
/// Throws if the duration covers fewer than 32 symbol periods of decay per
/// side or the sample rate is below 2*A.
std::vector<double> synthesize_pulse(const PulseSpectrum& pulse, double sample_rate,
                                     double duration);

/// Superpose the given symbols on shifted pulses:
/// S(t) = sum_k symbols[k] * h(t - k*tau*T). The waveform is padded with
/// 32 symbol periods of pulse decay on each side.
Waveform generate_ftn(const FtnWaveformConfig& cfg,
                      std::span<const std::complex<double>> symbols);

/// Same with num_symbols i.i.d. proper complex Gaussian symbols of
/// variance symbol_power drawn deterministically from the seed.
Waveform generate_ftn(const FtnWaveformConfig& cfg);

/// Riemann approximation of the continuous Fourier transform
/// integral S(t) exp(-j 2 pi f t) dt of a sampled waveform.
std::complex<double> continuous_transform(const Waveform& wave, double f);

/// Monte-Carlo average of |transform|^2/(L*N0) over fresh waveform
/// ensembles, one derived seed per trial. Converges to
/// P*|H(f)|^2/N0 as L and trials grow. Requires trials >= 100.
SnrEstimate estimate_snr_density(const FtnWaveformConfig& cfg, double noise_density, int trials,
                                 std::span<const double> freqs);

} // namespace ftn
