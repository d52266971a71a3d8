#pragma once

#include <stdexcept>
#include <vector>

namespace ftn {

enum class PulseKind {
    Rrc,  // square-root raised cosine, roll-off alpha in [0,1]
    Sinc, // brick-wall spectrum of width W
};

/// Energy spectral density |H(f)|^2 of a unit-energy pulse, described in the
/// frequency domain. W is the Nyquist (3 dB) bandwidth; the absolute
/// bandwidth is (1+alpha)*W for RRC and W for sinc.
struct PulseSpectrum {
    PulseKind kind = PulseKind::Rrc;
    double alpha = 0.0;      // roll-off factor, sinc behaves as alpha = 0
    double nyquist_bw = 1.0; // W, Hz

    static PulseSpectrum rrc(double alpha, double nyquist_bw = 1.0);
    static PulseSpectrum sinc(double nyquist_bw = 1.0);

    double roll_off() const { return kind == PulseKind::Sinc ? 0.0 : alpha; }
};

/// Per-user channel parameters. snr() is the dimensionless ratio
/// rho = P / (W * N0) that all normalized results depend on.
struct ChannelParams {
    double power = 1.0;         // P, Watts
    double noise_density = 1.0; // N0, Watts/Hz, one-sided
    double nyquist_bw = 1.0;    // reference W, Hz

    static ChannelParams make(double power, double noise_density, double nyquist_bw);
    /// Normalized construction: W = 1, N0 = 1, P = rho.
    static ChannelParams from_snr(double rho);

    double snr() const { return power / (nyquist_bw * noise_density); }
};

/// |H(f)|^2 at frequency f. Total over all real f; zero outside the
/// absolute bandwidth. Exact band-edge frequencies take the inner branch.
double psd(const PulseSpectrum& pulse, double f);

/// Width of the pulse's spectral support: (1+alpha)W for RRC, W for sinc.
double absolute_bandwidth(const PulseSpectrum& pulse);

/// SNR(f) = P*|H(f)|^2 / N0. Independent of any symbol-rate choice.
double snr_density(const PulseSpectrum& pulse, const ChannelParams& ch, double f);

/// Non-negative frequencies where the spectrum changes branch, in
/// ascending order, ending at the band edge. Used to pre-split
/// integration panels.
std::vector<double> spectrum_breakpoints(const PulseSpectrum& pulse);

} // namespace ftn
