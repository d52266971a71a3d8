#include "ftn/singleuser.hpp"

#include <cmath>

namespace ftn {

namespace {
constexpr double kInvLn2 = 1.4426950408889634073599246810019;

double log2_1p(double x) { return std::log1p(x) * kInvLn2; }
} // namespace

namespace detail {

double log2_rolloff_term(double rho) {
    // (1 + rho/2 + sqrt(1+rho))/2 = 1 + (rho/2 + (sqrt(1+rho) - 1))/2,
    // with sqrt(1+rho)-1 rewritten as rho/(1+sqrt(1+rho)).
    const double sq = std::sqrt(1.0 + rho);
    return log2_1p(0.5 * (0.5 * rho + rho / (1.0 + sq)));
}

} // namespace detail

RateResult awgn_capacity(const ChannelParams& ch) {
    const double value = ch.nyquist_bw * log2_1p(ch.snr());
    return RateResult{value, RateMethod::ClosedForm, 0.0};
}

double log_cos_integral(double a, double b) {
    if (b == 0.0 || a < std::fabs(b))
        throw std::domain_error("log_cos_integral requires a >= |b| > 0");
    // sqrt(a^2 - b^2) as sqrt((a-b)(a+b)) to keep precision near a = |b|.
    const double root = std::sqrt((a - b) * (a + b));
    return M_PI * std::log(0.5 * (a + root));
}

RateResult ftn_capacity_quadrature(const PulseSpectrum& pulse, const ChannelParams& ch,
                                   const QuadratureSettings& q) {
    const double half_support = 0.5 * absolute_bandwidth(pulse);
    const auto integrand = [&](double f) { return log2_1p(snr_density(pulse, ch, f)); };

    std::vector<double> splits;
    for (double bp : spectrum_breakpoints(pulse)) {
        splits.push_back(-bp);
        splits.push_back(bp);
    }
    splits.push_back(0.0);

    const QuadratureResult r = integrate(integrand, -half_support, half_support, splits, q);
    return RateResult{r.value, RateMethod::Quadrature, r.error};
}

RateResult ftn_capacity_closed(double alpha, const ChannelParams& ch) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("ftn_capacity_closed: roll-off must lie in [0,1]");
    const double w = ch.nyquist_bw;
    const double rho = ch.snr();
    const double value =
        (1.0 - alpha) * w * log2_1p(rho) + 2.0 * alpha * w * detail::log2_rolloff_term(rho);
    return RateResult{value, RateMethod::ClosedForm, 0.0};
}

double high_snr_prelog(double alpha, double nyquist_bw) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("high_snr_prelog: roll-off must lie in [0,1]");
    return (1.0 + alpha) * nyquist_bw;
}

} // namespace ftn
