#include "ftn/asymptotics.hpp"

#include <cmath>

namespace ftn {

namespace {
constexpr double kLog2E = 1.4426950408889634073599246810019;
constexpr double kDbPerBit = 3.0102999566398119521373889472449; // 10*log10(2)

void check_roll_off(double alpha, const char* who) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error(std::string(who) + ": roll-off must lie in [0,1]");
}
} // namespace

double low_snr_eta(double offset_b, const ChannelParams& ch) {
    if (!(offset_b > 0.0))
        throw std::domain_error("low_snr_eta: offset must be positive");
    return ch.power / (offset_b * ch.noise_density) * kLog2E;
}

double high_snr_eta(double alpha, double offset_b, const ChannelParams& ch) {
    check_roll_off(alpha, "high_snr_eta");
    const double w = ch.nyquist_bw;
    const double lo = 0.5 * (1.0 + alpha) * w;
    const double hi = (1.0 + alpha) * w;
    if (!(offset_b >= lo && offset_b <= hi))
        throw std::domain_error("high_snr_eta: offset outside [(1+a)W/2, (1+a)W]");
    return (2.0 * offset_b - hi) / offset_b * std::log2(ch.snr());
}

double high_snr_gap(double alpha) {
    check_roll_off(alpha, "high_snr_gap");
    return 4.0 * alpha / (1.0 + alpha);
}

double high_snr_gap_normalized(double alpha) {
    check_roll_off(alpha, "high_snr_gap_normalized");
    return 4.0 * alpha / (1.0 + alpha) - std::log2(1.0 + alpha);
}

double gap_to_db(double gap_bits) {
    if (!(gap_bits >= 0.0))
        throw std::domain_error("gap_to_db: gap must be non-negative");
    return gap_bits * kDbPerBit;
}

std::optional<SnrRegime> classify_snr_regime(double rho, const SnrRegimeThresholds& t) {
    if (!(rho >= 0.0))
        throw std::domain_error("classify_snr_regime: rho must be non-negative");
    if (!(t.low_max > 0.0 && t.high_min > t.low_max))
        throw std::invalid_argument("classify_snr_regime: thresholds must be ordered");
    if (rho <= t.low_max)
        return SnrRegime::Low;
    if (rho >= t.high_min)
        return SnrRegime::High;
    return std::nullopt;
}

SnrRegimeReport snr_regime_report(SnrRegime regime, double alpha, double offset_b,
                                  const ChannelParams& ch, const QuadratureSettings& q) {
    check_roll_off(alpha, "snr_regime_report");
    const double approx = regime == SnrRegime::Low ? low_snr_eta(offset_b, ch)
                                                   : high_snr_eta(alpha, offset_b, ch);
    const SharingConfig cfg =
        SharingConfig::make(PulseSpectrum::rrc(alpha, ch.nyquist_bw), offset_b,
                            UserCount::asymptotic(), ch.power);
    const double exact = spectral_efficiency(cfg, ch, q).value;
    return SnrRegimeReport{regime, approx, exact, std::fabs(approx - exact)};
}

OffsetOptimum optimize_offset(double alpha, const ChannelParams& ch, const PowerMode& mode,
                              const OffsetGrid& grid, const QuadratureSettings& q) {
    check_roll_off(alpha, "optimize_offset");
    if (grid.points < 1)
        throw std::invalid_argument("optimize_offset: grid needs at least one point");
    const double w = ch.nyquist_bw;
    const double lo = 0.5 * (1.0 + alpha) * w;
    const double hi = (1.0 + alpha) * w;
    if (!(grid.b_min >= lo && grid.b_max <= hi && grid.b_min <= grid.b_max))
        throw std::invalid_argument("optimize_offset: grid outside [(1+a)W/2, (1+a)W]");

    const PulseSpectrum pulse = PulseSpectrum::rrc(alpha, w);
    OffsetOptimum best{grid.b_min, -1.0};
    for (int i = 0; i < grid.points; ++i) {
        const double b = grid.points == 1
                             ? grid.b_min
                             : grid.b_min + (grid.b_max - grid.b_min) * i / (grid.points - 1);
        const SharingConfig cfg =
            SharingConfig::make(pulse, b, UserCount::asymptotic(), ch.power, mode);
        const double eta = spectral_efficiency(cfg, ch, q).value;
        if (eta >= best.eta) { // ties go to the larger offset
            best = OffsetOptimum{b, eta};
        }
    }
    return best;
}

} // namespace ftn
