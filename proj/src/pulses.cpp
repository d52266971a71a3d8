#include "ftn/pulses.hpp"

#include <cmath>

namespace ftn {

PulseSpectrum PulseSpectrum::rrc(double alpha, double nyquist_bw) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("rrc: roll-off must lie in [0,1]");
    if (!(nyquist_bw > 0.0))
        throw std::invalid_argument("rrc: Nyquist bandwidth must be positive");
    return PulseSpectrum{PulseKind::Rrc, alpha, nyquist_bw};
}

PulseSpectrum PulseSpectrum::sinc(double nyquist_bw) {
    if (!(nyquist_bw > 0.0))
        throw std::invalid_argument("sinc: Nyquist bandwidth must be positive");
    return PulseSpectrum{PulseKind::Sinc, 0.0, nyquist_bw};
}

ChannelParams ChannelParams::make(double power, double noise_density, double nyquist_bw) {
    if (!(power >= 0.0))
        throw std::invalid_argument("ChannelParams: power must be non-negative");
    if (!(noise_density > 0.0))
        throw std::invalid_argument("ChannelParams: noise density must be positive");
    if (!(nyquist_bw > 0.0))
        throw std::invalid_argument("ChannelParams: bandwidth must be positive");
    return ChannelParams{power, noise_density, nyquist_bw};
}

ChannelParams ChannelParams::from_snr(double rho) {
    return make(rho, 1.0, 1.0);
}

double psd(const PulseSpectrum& pulse, double f) {
    const double w = pulse.nyquist_bw;
    const double af = std::fabs(f);
    if (pulse.kind == PulseKind::Sinc)
        return af <= 0.5 * w ? 1.0 / w : 0.0;

    const double a = pulse.alpha;
    const double inner = 0.5 * (1.0 - a) * w;
    const double outer = 0.5 * (1.0 + a) * w;
    // alpha = 0 leaves an empty cosine interval and the spectrum is brick-wall.
    if (af <= inner)
        return 1.0 / w;
    if (af <= outer)
        return 0.5 / w * (1.0 + std::cos(M_PI / (a * w) * (af - inner)));
    return 0.0;
}

double absolute_bandwidth(const PulseSpectrum& pulse) {
    if (pulse.kind == PulseKind::Sinc)
        return pulse.nyquist_bw;
    return (1.0 + pulse.alpha) * pulse.nyquist_bw;
}

double snr_density(const PulseSpectrum& pulse, const ChannelParams& ch, double f) {
    return ch.power * psd(pulse, f) / ch.noise_density;
}

std::vector<double> spectrum_breakpoints(const PulseSpectrum& pulse) {
    const double w = pulse.nyquist_bw;
    if (pulse.kind == PulseKind::Sinc || pulse.alpha == 0.0)
        return {0.5 * w};
    if (pulse.alpha == 1.0)
        return {w};
    return {0.5 * (1.0 - pulse.alpha) * w, 0.5 * (1.0 + pulse.alpha) * w};
}

} // namespace ftn
