#pragma once

#include "ftn/pulses.hpp"
#include "ftn/quadrature.hpp"

namespace ftn {

enum class RateMethod { ClosedForm, Quadrature, MonteCarlo, Asymptotic };

/// A rate in bits/s (or bits/s/Hz where documented) together with how it
/// was obtained and an absolute error bound in the same units.
struct RateResult {
    double value = 0.0;
    RateMethod method = RateMethod::ClosedForm;
    double err_estimate = 0.0;
};

/// Shannon capacity W*log2(1 + P/(W*N0)) of the bandlimited AWGN channel,
/// bits/s. Dividing by W gives the spectral efficiency.
RateResult awgn_capacity(const ChannelParams& ch);

/// Value of the definite integral of ln(a + b*cos x) over [0, pi]:
/// pi * ln((a + sqrt(a^2 - b^2)) / 2), valid for a >= |b| > 0.
double log_cos_integral(double a, double b);

/// Capacity of a single FTN user, bits/s: integral of
/// log2(1 + P*|H(f)|^2/N0) over the pulse's spectral support, evaluated by
/// adaptive quadrature with panels pre-split at the spectrum breakpoints.
RateResult ftn_capacity_quadrature(const PulseSpectrum& pulse, const ChannelParams& ch,
                                   const QuadratureSettings& q = {});

/// Same capacity for an RRC pulse in closed form:
/// (1-a)W log2(1+rho) + 2aW log2((1 + rho/2 + sqrt(1+rho))/2).
RateResult ftn_capacity_closed(double alpha, const ChannelParams& ch);

/// High-SNR slope of the single-user capacity against log2(rho): the
/// absolute bandwidth (1+alpha)*W, Hz.
double high_snr_prelog(double alpha, double nyquist_bw);

namespace detail {
/// log2((1 + rho/2 + sqrt(1+rho))/2), evaluated without cancellation for
/// small rho. This is the per-Hz rate of the cosine roll-off band.
double log2_rolloff_term(double rho);
} // namespace detail

} // namespace ftn
