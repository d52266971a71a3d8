#include "ftn/sharing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ftn {

namespace {

constexpr double kInvLn2 = 1.4426950408889634073599246810019;

double log2_1p(double x) { return std::log1p(x) * kInvLn2; }

// Interferer indices whose shifted support can contain f, clipped to the
// configured user set. Empty range when B = 0 (handled by callers).
struct KRange {
    long lo, hi;
};

KRange interferer_range(const SharingConfig& cfg, double f) {
    const double half = 0.5 * absolute_bandwidth(cfg.pulse);
    const double b = cfg.offset_b;
    long lo = static_cast<long>(std::floor((f - half) / b));
    long hi = static_cast<long>(std::ceil((f + half) / b));
    if (!cfg.users.is_asymptotic()) {
        const long side = (cfg.users.count() - 1) / 2;
        lo = std::max(lo, -side);
        hi = std::min(hi, side);
    }
    return {lo, hi};
}

// Sum of shifted interferer spectra from every user k != 0 at frequency f.
double interference_psd_sum(const SharingConfig& cfg, double f) {
    if (cfg.offset_b == 0.0) {
        if (cfg.users.is_asymptotic())
            return psd(cfg.pulse, f) > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
        return (cfg.users.count() - 1) * psd(cfg.pulse, f);
    }
    if (cfg.users.is_asymptotic() &&
        cfg.offset_b < absolute_bandwidth(cfg.pulse) / 1024.0)
        throw std::invalid_argument(
            "sharing: offset too small to enumerate the interferer set; use B = 0 or a "
            "larger offset");
    const KRange range = interferer_range(cfg, f);
    double sum = 0.0;
    for (long k = range.lo; k <= range.hi; ++k) {
        if (k == 0)
            continue;
        sum += psd(cfg.pulse, f - static_cast<double>(k) * cfg.offset_b);
    }
    return sum;
}

} // namespace

UserCount UserCount::finite(int k) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("UserCount: finite user count must be odd and positive");
    return UserCount(k);
}

int UserCount::count() const {
    if (is_asymptotic())
        throw std::logic_error("UserCount: asymptotic regime has no finite count");
    return count_;
}

PowerMode PowerMode::density(double watts_per_hz) {
    if (!(watts_per_hz >= 0.0))
        throw std::invalid_argument("PowerMode: reference density must be non-negative");
    return PowerMode{Kind::FixedDensity, watts_per_hz};
}

SharingConfig SharingConfig::make(PulseSpectrum pulse, double offset_b, UserCount users,
                                  double per_user_power, PowerMode mode) {
    if (!(offset_b >= 0.0))
        throw std::invalid_argument("SharingConfig: offset must be non-negative");
    if (!(per_user_power >= 0.0))
        throw std::invalid_argument("SharingConfig: power must be non-negative");
    return SharingConfig{pulse, offset_b, users, per_user_power, mode};
}

double SharingConfig::effective_power() const {
    if (power_mode.kind == PowerMode::Kind::FixedDensity)
        return power_mode.ref_density * offset_b;
    return per_user_power;
}

double received_psd(const SharingConfig& cfg, const ChannelParams& ch, double f) {
    const double p = cfg.effective_power();
    if (p == 0.0)
        return ch.noise_density; // avoids 0 * inf against a co-channel crowd
    return ch.noise_density + p * (psd(cfg.pulse, f) + interference_psd_sum(cfg, f));
}

double sinr(const SharingConfig& cfg, const ChannelParams& ch, double f) {
    const double p = cfg.effective_power();
    const double signal = p * psd(cfg.pulse, f);
    if (signal == 0.0)
        return 0.0;
    const double interference = p * interference_psd_sum(cfg, f);
    return signal / (ch.noise_density + interference);
}

BRegion classify_region(double alpha, double offset_b, double nyquist_bw) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("classify_region: roll-off must lie in [0,1]");
    if (!(nyquist_bw > 0.0))
        throw std::invalid_argument("classify_region: bandwidth must be positive");

    const double w = nyquist_bw;
    const double b = offset_b;
    const double lower_limit = 0.5 * (1.0 + alpha) * w; // at most one interferer per frequency
    if (b < lower_limit)
        throw std::domain_error("classify_region: offset below (1+alpha)W/2 has no case formula");

    const double no_overlap_edge = (1.0 + alpha) * w;
    const double flat_edge = (1.0 - alpha) * w;
    const double cosine_over_flat_edge = std::max(flat_edge, lower_limit);
    const bool flat_overlap_possible = alpha <= 1.0 / 3.0;

    bool on_boundary = b == no_overlap_edge || b == w || b == cosine_over_flat_edge ||
                       b == lower_limit || (flat_overlap_possible && b == flat_edge);

    OffsetCase region;
    if (b >= no_overlap_edge)
        region = OffsetCase::NoOverlap;
    else if (b >= w)
        region = OffsetCase::CosineOnly;
    else if (b >= cosine_over_flat_edge)
        region = OffsetCase::CosineOverFlat;
    else
        region = OffsetCase::FlatOverlap;
    return BRegion{region, on_boundary};
}

RateResult mac_rate_quadrature(const SharingConfig& cfg, const ChannelParams& ch,
                               const QuadratureSettings& q) {
    const double half = 0.5 * absolute_bandwidth(cfg.pulse);
    const auto integrand = [&](double f) { return log2_1p(sinr(cfg, ch, f)); };

    std::vector<double> splits{0.0};
    for (double bp : spectrum_breakpoints(cfg.pulse)) {
        splits.push_back(bp);
        splits.push_back(-bp);
    }
    if (cfg.offset_b > 0.0) {
        const KRange lo_range = interferer_range(cfg, -half);
        const KRange hi_range = interferer_range(cfg, half);
        for (long k = lo_range.lo; k <= hi_range.hi; ++k) {
            if (k == 0)
                continue;
            const double center = static_cast<double>(k) * cfg.offset_b;
            splits.push_back(center);
            for (double bp : spectrum_breakpoints(cfg.pulse)) {
                splits.push_back(center - bp);
                splits.push_back(center + bp);
            }
        }
    }

    const QuadratureResult r = integrate(integrand, -half, half, splits, q);
    return RateResult{r.value, RateMethod::Quadrature, r.error};
}

RateResult mac_rate_cases(const SharingConfig& cfg, const ChannelParams& ch,
                          const QuadratureSettings& q) {
    if (cfg.pulse.kind == PulseKind::Sinc || cfg.pulse.roll_off() == 0.0) {
        // Brick-wall spectra: overlap regions are flat, no integrals needed.
        const double w = cfg.pulse.nyquist_bw;
        const double b = cfg.offset_b;
        const BRegion region = classify_region(0.0, b, w);
        const double p = cfg.effective_power();
        const double rho = p / (w * ch.noise_density);
        if (region.region == OffsetCase::NoOverlap)
            return RateResult{w * log2_1p(rho), RateMethod::ClosedForm, 0.0};
        const double overlapped = w - b;
        const double value = (2.0 * b - w) * log2_1p(rho) +
                             2.0 * overlapped * log2_1p(p / (w * ch.noise_density + p));
        return RateResult{value, RateMethod::ClosedForm, 0.0};
    }

    const double a = cfg.pulse.roll_off();
    const double w = cfg.pulse.nyquist_bw;
    const double b = cfg.offset_b;
    const double p = cfg.effective_power();
    const double n0 = ch.noise_density;
    const double rho = p / (w * n0);
    const BRegion region = classify_region(a, b, w);

    const ChannelParams eff = ChannelParams::make(p, n0, w);
    if (region.region == OffsetCase::NoOverlap)
        return ftn_capacity_closed(a, eff);

    const double aw = a * w;
    const auto own_cosine = [&](double g) { return 1.0 + std::cos(M_PI * g / aw); };

    double value = 0.0;
    double err = 0.0;
    const auto add_integral = [&](const std::function<double(double)>& fn, double lo, double hi) {
        if (hi <= lo)
            return;
        const QuadratureResult r = integrate(fn, lo, hi, q);
        value += 2.0 * r.value;
        err += 2.0 * r.error;
    };

    if (region.region == OffsetCase::CosineOnly) {
        value += (1.0 - a) * w * log2_1p(rho);
        // interference-free part of the roll-off skirt
        add_integral([&](double g) { return log2_1p(0.5 * p / (w * n0) * own_cosine(g)); },
                     0.0, b - w);
        // skirt against the neighbor's skirt
        add_integral(
            [&](double g) {
                const double interferer = 1.0 + std::cos(M_PI * (g - b + (1.0 - a) * w) / aw);
                return log2_1p(p * own_cosine(g) / (2.0 * w * n0 + p * interferer));
            },
            b - w, aw);
        return RateResult{value, RateMethod::Quadrature, err};
    }

    value += (2.0 * b - (1.0 + a) * w) * log2_1p(rho);
    const auto neighbor_skirt = [&](double u) { return 1.0 + std::cos(M_PI * (u - aw) / aw); };
    const auto own_skirt = [&](double u) { return 1.0 + std::cos(M_PI * (u + b - w) / aw); };
    const auto flat_over_skirt = [&](double u) {
        return log2_1p(2.0 * p / (2.0 * w * n0 + p * neighbor_skirt(u)));
    };
    const auto skirt_over_flat = [&](double u) {
        return log2_1p(p * own_skirt(u) / (2.0 * w * n0 + 2.0 * p));
    };

    if (region.region == OffsetCase::CosineOverFlat) {
        add_integral(flat_over_skirt, 0.0, w - b);
        add_integral(
            [&](double u) {
                return log2_1p(p * own_skirt(u) / (2.0 * w * n0 + p * neighbor_skirt(u)));
            },
            w - b, aw);
        add_integral(skirt_over_flat, aw, (1.0 + a) * w - b);
    } else { // FlatOverlap
        add_integral(flat_over_skirt, 0.0, aw);
        value += 2.0 * ((1.0 - a) * w - b) * log2_1p(p / (w * n0 + p));
        add_integral(skirt_over_flat, w - b, (1.0 + a) * w - b);
    }
    return RateResult{value, RateMethod::Quadrature, err};
}

RateResult mac_rate_closed_bw(double alpha, const ChannelParams& ch) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("mac_rate_closed_bw: roll-off must lie in [0,1]");
    const double w = ch.nyquist_bw;
    const double rho = ch.snr();
    const double value =
        (1.0 + alpha) * w * log2_1p(rho) - 2.0 * alpha * w * detail::log2_rolloff_term(rho);
    return RateResult{value, RateMethod::ClosedForm, 0.0};
}

RateResult mac_rate(const SharingConfig& cfg, const ChannelParams& ch,
                    const QuadratureSettings& q) {
    const double p = cfg.effective_power();
    const ChannelParams eff = ChannelParams::make(p, ch.noise_density, cfg.pulse.nyquist_bw);
    if (!cfg.users.is_asymptotic() && cfg.users.count() == 1)
        return ftn_capacity_closed(cfg.pulse.roll_off(), eff);
    const double lower_limit = 0.5 * absolute_bandwidth(cfg.pulse);
    if (cfg.offset_b >= lower_limit)
        return mac_rate_cases(cfg, ch, q);
    return mac_rate_quadrature(cfg, ch, q);
}

RateResult spectral_efficiency(const SharingConfig& cfg, const ChannelParams& ch,
                               const QuadratureSettings& q) {
    const RateResult rate = mac_rate(cfg, ch, q);
    if (cfg.users.is_asymptotic()) {
        if (cfg.offset_b == 0.0)
            throw std::domain_error("spectral_efficiency: asymptotic users need a positive offset");
        return RateResult{rate.value / cfg.offset_b, rate.method,
                          rate.err_estimate / cfg.offset_b};
    }
    const int k = cfg.users.count();
    const double total_bw = absolute_bandwidth(cfg.pulse) + (k - 1) * cfg.offset_b;
    return RateResult{k * rate.value / total_bw, rate.method, k * rate.err_estimate / total_bw};
}

double sinc_upper_bound(double total_power, double total_bandwidth, double noise_density) {
    if (!(total_bandwidth > 0.0))
        throw std::invalid_argument("sinc_upper_bound: total bandwidth must be positive");
    if (!(noise_density > 0.0))
        throw std::invalid_argument("sinc_upper_bound: noise density must be positive");
    if (!(total_power >= 0.0))
        throw std::invalid_argument("sinc_upper_bound: total power must be non-negative");
    return log2_1p(total_power / (total_bandwidth * noise_density));
}

double sinc_upper_bound_for(const SharingConfig& cfg, const ChannelParams& ch) {
    const double p = cfg.effective_power();
    if (cfg.users.is_asymptotic()) {
        if (cfg.offset_b == 0.0)
            throw std::domain_error("sinc_upper_bound_for: asymptotic users need a positive offset");
        return sinc_upper_bound(p, cfg.offset_b, ch.noise_density);
    }
    const int k = cfg.users.count();
    const double total_bw = absolute_bandwidth(cfg.pulse) + (k - 1) * cfg.offset_b;
    return sinc_upper_bound(k * p, total_bw, ch.noise_density);
}

} // namespace ftn
