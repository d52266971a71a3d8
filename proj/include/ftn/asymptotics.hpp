#pragma once

#include "ftn/sharing.hpp"

#include <optional>

namespace ftn {

/// Low-SNR spectral efficiency (P/(B*N0))*log2(e), bits/s/Hz. Valid for
/// any positive offset, including B > A.
double low_snr_eta(double offset_b, const ChannelParams& ch);

/// High-SNR spectral efficiency ((2B - (1+a)W)/B)*log2(rho), bits/s/Hz.
/// Requires (1+a)W/2 <= B <= (1+a)W.
double high_snr_eta(double alpha, double offset_b, const ChannelParams& ch);

/// Additive gap 4a/(1+a) of the interference-free spectral efficiency
/// below log2(rho) at high SNR, bits/s/Hz.
double high_snr_gap(double alpha);

/// The gap after normalizing transmit power per Hertz:
/// 4a/(1+a) - log2(1+a), bits/s/Hz.
double high_snr_gap_normalized(double alpha);

/// Energy-efficiency loss equivalent of an additive rate gap:
/// gap * 10*log10(2) dB (one bit/s/Hz at high SNR costs about 3.01 dB).
double gap_to_db(double gap_bits);

enum class SnrRegime { Low, High };

/// Side-by-side comparison of the regime approximation against the exact
/// spectral efficiency at one operating point, bits/s/Hz.
struct SnrRegimeReport {
    SnrRegime regime;
    double approx_value;
    double exact_value;
    double deviation; // |approx - exact|
};

/// Regime thresholds on rho for automatic report selection.
struct SnrRegimeThresholds {
    double low_max = 0.01;
    double high_min = 1e4;
};

/// Which approximation applies at this SNR, if any.
std::optional<SnrRegime> classify_snr_regime(double rho, const SnrRegimeThresholds& t = {});

/// Evaluate the named approximation and the exact efficiency at the same
/// operating point.
SnrRegimeReport snr_regime_report(SnrRegime regime, double alpha, double offset_b,
                                  const ChannelParams& ch, const QuadratureSettings& q = {});

struct OffsetGrid {
    double b_min, b_max;
    int points = 200;
};

struct OffsetOptimum {
    double offset_b;
    double eta; // bits/s/Hz
};

/// Grid argmax of the asymptotic spectral efficiency over the offset,
/// under the given power mode. Exact ties resolve toward the larger
/// offset. The grid must lie within [(1+a)W/2, (1+a)W].
OffsetOptimum optimize_offset(double alpha, const ChannelParams& ch, const PowerMode& mode,
                              const OffsetGrid& grid, const QuadratureSettings& q = {});

} // namespace ftn
