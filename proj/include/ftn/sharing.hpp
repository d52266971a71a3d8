#pragma once

#include "ftn/pulses.hpp"
#include "ftn/quadrature.hpp"
#include "ftn/singleuser.hpp"

namespace ftn {

/// Number of users in the shared band: a finite odd count, or the
/// asymptotic regime where the user of interest has both neighbors at
/// every multiple of the offset.
class UserCount {
public:
    static UserCount asymptotic() { return UserCount(0); }
    static UserCount finite(int k);

    bool is_asymptotic() const { return count_ == 0; }
    int count() const;

private:
    explicit UserCount(int c) : count_(c) {}
    int count_;
};

/// How per-user transmit power scales with the spectral offset B.
/// FixedPerUser keeps the configured power; FixedDensity holds the power
/// per Hertz constant, so the effective power is ref_density * B.
struct PowerMode {
    enum class Kind { FixedPerUser, FixedDensity };
    Kind kind = Kind::FixedPerUser;
    double ref_density = 0.0; // Watts/Hz, FixedDensity only

    static PowerMode per_user() { return PowerMode{Kind::FixedPerUser, 0.0}; }
    static PowerMode density(double watts_per_hz);
};

/// Spectrum-sharing layout: identical pulses centered at multiples of the
/// offset B, equal per-user power.
struct SharingConfig {
    PulseSpectrum pulse;
    double offset_b = 1.0; // B, Hz, >= 0
    UserCount users = UserCount::asymptotic();
    double per_user_power = 1.0; // P, Watts
    PowerMode power_mode = PowerMode::per_user();

    static SharingConfig make(PulseSpectrum pulse, double offset_b, UserCount users,
                              double per_user_power, PowerMode mode = PowerMode::per_user());

    /// Per-user power after the power mode is applied.
    double effective_power() const;
};

/// The four offset ranges with distinct interference geometry, ordered by
/// decreasing B.
enum class OffsetCase {
    NoOverlap,      // B >= (1+a)W
    CosineOnly,     // W <= B <= (1+a)W: only roll-off skirts overlap
    CosineOverFlat, // max[(1-a)W, (1+a)W/2] <= B <= W
    FlatOverlap,    // (1+a)W/2 <= B <= (1-a)W, needs a <= 1/3
};

struct BRegion {
    OffsetCase region;
    bool on_boundary; // B equals a case edge; adjacent formulas agree there
};

/// Power spectral density of the superposed received signal at frequency f:
/// N0 plus every user's shifted pulse, Watts/Hz.
double received_psd(const SharingConfig& cfg, const ChannelParams& ch, double f);

/// SINR of the centered user at frequency f with all other users treated
/// as noise.
double sinr(const SharingConfig& cfg, const ChannelParams& ch, double f);

/// Classify the offset into one of the four cases. B on a shared edge
/// resolves to the lower-numbered case. Throws std::domain_error for
/// B < (1+a)W/2, where more than one interferer can hit a frequency and
/// no case formula applies.
BRegion classify_region(double alpha, double offset_b, double nyquist_bw);

/// Rate of the centered user, bits/s, by direct quadrature of
/// log2(1 + SINR(f)) over the pulse support. Valid for any B >= 0; panels
/// are pre-split at every breakpoint of the user's and the interferers'
/// spectra.
RateResult mac_rate_quadrature(const SharingConfig& cfg, const ChannelParams& ch,
                               const QuadratureSettings& q = {});

/// Rate of the centered user via the case-specific expressions (closed
/// flat-band terms plus reduced-interval integrals). Requires the offset
/// to classify into one of the four cases. Models an interior user with
/// both neighbors present, which matches any odd K >= 3 in this offset
/// range.
RateResult mac_rate_cases(const SharingConfig& cfg, const ChannelParams& ch,
                          const QuadratureSettings& q = {});

/// Closed form of the shared rate at B = W, bits/s:
/// (1+a)W log2(1+rho) - 2aW log2((1 + rho/2 + sqrt(1+rho))/2).
RateResult mac_rate_closed_bw(double alpha, const ChannelParams& ch);

/// Per-user rate with the cheapest valid evaluation: capacity when there
/// is a single user, case formulas when the offset classifies, quadrature
/// otherwise.
RateResult mac_rate(const SharingConfig& cfg, const ChannelParams& ch,
                    const QuadratureSettings& q = {});

/// Sum rate normalized by occupied bandwidth, bits/s/Hz. Finite K uses
/// K*rate / (A + (K-1)B); the asymptotic regime uses rate/B and rejects
/// B = 0.
RateResult spectral_efficiency(const SharingConfig& cfg, const ChannelParams& ch,
                               const QuadratureSettings& q = {});

/// Upper bound log2(1 + P_tot/(B_tot*N0)) on the spectral efficiency of
/// any pulse, offset and receiver under a total power constraint,
/// bits/s/Hz. Sinc pulses at A = B = W meet it with equality.
double sinc_upper_bound(double total_power, double total_bandwidth, double noise_density);

/// The bound above with P_tot and B_tot matched to a sharing config:
/// K*P and A + (K-1)B for finite K, the per-Hz limit P/B for the
/// asymptotic regime.
double sinc_upper_bound_for(const SharingConfig& cfg, const ChannelParams& ch);

} // namespace ftn
