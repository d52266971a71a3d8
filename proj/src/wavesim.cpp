#include "ftn/wavesim.hpp"

#include "ftn/parallel.hpp"

#include <cmath>
#include <random>

namespace ftn {

namespace {

constexpr double kDecaySymbols = 32.0; // pulse extent kept per side, in symbol periods

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Proper complex Gaussian symbols, variance `power`, via explicit
// Box-Muller so the stream is identical on every platform.
std::vector<std::complex<double>> draw_symbols(std::uint64_t seed, int count, double power) {
    std::mt19937_64 rng(seed);
    const double sigma = std::sqrt(0.5 * power);
    auto uniform01 = [&rng] {
        // (0, 1]: never feeds log() a zero
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    };
    std::vector<std::complex<double>> symbols(count);
    for (auto& s : symbols) {
        const double radius = std::sqrt(-2.0 * std::log(uniform01()));
        const double angle = 2.0 * M_PI * uniform01();
        s = {sigma * radius * std::cos(angle), sigma * radius * std::sin(angle)};
    }
    return symbols;
}

} // namespace

void FtnWaveformConfig::validate() const {
    if (!(tau > 0.0 && tau <= 1.0))
        throw std::invalid_argument("FtnWaveformConfig: tau must lie in (0, 1]");
    if (!(symbol_power >= 0.0))
        throw std::invalid_argument("FtnWaveformConfig: symbol power must be non-negative");
    if (sample_rate < 2.0 * absolute_bandwidth(pulse))
        throw std::invalid_argument("FtnWaveformConfig: sample rate below 2*A aliases");
}

double impulse_response(const PulseSpectrum& pulse, double t) {
    const double w = pulse.nyquist_bw;
    const double amp = std::sqrt(w);
    const double x = t * w; // time in symbol periods
    const double a = pulse.roll_off();

    if (a == 0.0) {
        if (std::fabs(x) < 1e-6)
            return amp;
        return amp * std::sin(M_PI * x) / (M_PI * x);
    }
    if (std::fabs(x) < 1e-6)
        return amp * (1.0 - a + 4.0 * a / M_PI);
    const double four_ax = 4.0 * a * std::fabs(x);
    if (std::fabs(four_ax - 1.0) < 1e-5) {
        const double phase = M_PI / (4.0 * a);
        return amp * a / std::sqrt(2.0) *
               ((1.0 + 2.0 / M_PI) * std::sin(phase) + (1.0 - 2.0 / M_PI) * std::cos(phase));
    }
    const double numer = std::sin(M_PI * x * (1.0 - a)) + 4.0 * a * x * std::cos(M_PI * x * (1.0 + a));
    const double denom = M_PI * x * (1.0 - four_ax * four_ax);
    return amp * numer / denom;
}

std::vector<double> synthesize_pulse(const PulseSpectrum& pulse, double sample_rate,
                                     double duration) {
    if (sample_rate < 2.0 * absolute_bandwidth(pulse))
        throw std::invalid_argument("synthesize_pulse: sample rate below 2*A aliases");
    const double period = 1.0 / pulse.nyquist_bw;
    if (duration < 2.0 * kDecaySymbols * period)
        throw std::invalid_argument("synthesize_pulse: duration under 32 symbol periods per side");

    const auto count = static_cast<std::size_t>(std::llround(duration * sample_rate)) + 1;
    std::vector<double> samples(count);
    const double dt = 1.0 / sample_rate;
    const double t0 = -0.5 * static_cast<double>(count - 1) * dt;
    for (std::size_t n = 0; n < count; ++n)
        samples[n] = impulse_response(pulse, t0 + static_cast<double>(n) * dt);
    return samples;
}

Waveform generate_ftn(const FtnWaveformConfig& cfg,
                      std::span<const std::complex<double>> symbols) {
    cfg.validate();
    if (symbols.empty())
        throw std::invalid_argument("generate_ftn: need at least one symbol");

    const double period = cfg.symbol_period();
    const double spacing = cfg.tau * period;
    const double pad = kDecaySymbols * period;
    const double dt = 1.0 / cfg.sample_rate;
    const double t0 = -pad;
    const double t_end = static_cast<double>(symbols.size() - 1) * spacing + pad;
    const auto count = static_cast<std::size_t>(std::llround((t_end - t0) / dt)) + 1;

    Waveform wave{t0, dt, std::vector<std::complex<double>>(count)};
    for (std::size_t k = 0; k < symbols.size(); ++k) {
        const double center = static_cast<double>(k) * spacing;
        const auto first = static_cast<std::size_t>(
            std::max(0.0, std::ceil((center - pad - t0) / dt)));
        const auto last = std::min<std::size_t>(
            count - 1, static_cast<std::size_t>(std::floor((center + pad - t0) / dt)));
        for (std::size_t n = first; n <= last; ++n) {
            const double t = t0 + static_cast<double>(n) * dt;
            wave.samples[n] += symbols[k] * impulse_response(cfg.pulse, t - center);
        }
    }
    return wave;
}

Waveform generate_ftn(const FtnWaveformConfig& cfg) {
    cfg.validate();
    if (cfg.num_symbols < 64)
        throw std::invalid_argument("generate_ftn: need at least 64 symbols");
    const auto symbols = draw_symbols(cfg.seed, cfg.num_symbols, cfg.symbol_power);
    return generate_ftn(cfg, symbols);
}

std::complex<double> continuous_transform(const Waveform& wave, double f) {
    // e^{-j 2 pi f t_n} by recurrence over the sample index
    const std::complex<double> step = std::polar(1.0, -2.0 * M_PI * f * wave.dt);
    std::complex<double> phase = std::polar(1.0, -2.0 * M_PI * f * wave.t0);
    std::complex<double> acc{0.0, 0.0};
    std::size_t n = 0;
    for (const auto& s : wave.samples) {
        acc += s * phase;
        phase *= step;
        if (++n % 4096 == 0) // keep |phase| from drifting
            phase = std::polar(1.0, -2.0 * M_PI * f * (wave.t0 + static_cast<double>(n) * wave.dt));
    }
    return acc * wave.dt;
}

SnrEstimate estimate_snr_density(const FtnWaveformConfig& cfg, double noise_density, int trials,
                                 std::span<const double> freqs) {
    cfg.validate();
    if (cfg.num_symbols < 64)
        throw std::invalid_argument("estimate_snr_density: need at least 64 symbols");
    if (trials < 100)
        throw std::invalid_argument("estimate_snr_density: need at least 100 trials");
    if (!(noise_density > 0.0))
        throw std::invalid_argument("estimate_snr_density: noise density must be positive");

    const std::size_t num_freqs = freqs.size();
    const auto num_trials = static_cast<std::size_t>(trials);
    const auto num_symbols = static_cast<std::size_t>(cfg.num_symbols);
    const double length = static_cast<double>(cfg.num_symbols);

    // The pulse grid and the DFT phases are trial-independent; precompute
    // them once. The per-trial arithmetic mirrors generate_ftn and
    // continuous_transform.
    const double period = cfg.symbol_period();
    const double spacing = cfg.tau * period;
    const double pad = kDecaySymbols * period;
    const double dt = 1.0 / cfg.sample_rate;
    const double t0 = -pad;
    const double t_end = static_cast<double>(num_symbols - 1) * spacing + pad;
    const auto count = static_cast<std::size_t>(std::llround((t_end - t0) / dt)) + 1;

    struct PulseSlice {
        std::size_t first;
        std::vector<double> values;
    };
    std::vector<PulseSlice> slices(num_symbols);
    for (std::size_t k = 0; k < num_symbols; ++k) {
        const double center = static_cast<double>(k) * spacing;
        const auto first = static_cast<std::size_t>(
            std::max(0.0, std::ceil((center - pad - t0) / dt)));
        const auto last = std::min<std::size_t>(
            count - 1, static_cast<std::size_t>(std::floor((center + pad - t0) / dt)));
        slices[k].first = first;
        slices[k].values.resize(last - first + 1);
        for (std::size_t n = first; n <= last; ++n) {
            const double t = t0 + static_cast<double>(n) * dt;
            slices[k].values[n - first] = impulse_response(cfg.pulse, t - center);
        }
    }

    std::vector<std::vector<std::complex<double>>> twiddles(num_freqs);
    for (std::size_t i = 0; i < num_freqs; ++i) {
        auto& tw = twiddles[i];
        tw.resize(count);
        const std::complex<double> step = std::polar(1.0, -2.0 * M_PI * freqs[i] * dt);
        std::complex<double> phase = std::polar(1.0, -2.0 * M_PI * freqs[i] * t0);
        for (std::size_t n = 0; n < count; ++n) {
            tw[n] = phase;
            phase *= step;
            if ((n + 1) % 4096 == 0)
                phase = std::polar(
                    1.0, -2.0 * M_PI * freqs[i] * (t0 + static_cast<double>(n + 1) * dt));
        }
    }

    // gamma[trial * num_freqs + i]: per-trial periodogram values
    std::vector<double> gamma(num_trials * num_freqs);
    parallel_for_index(num_trials, [&](std::size_t trial) {
        const std::uint64_t trial_seed =
            splitmix64(cfg.seed ^ (0x9E3779B97F4A7C15ull * (trial + 1)));
        const auto symbols = draw_symbols(trial_seed, cfg.num_symbols, cfg.symbol_power);
        std::vector<std::complex<double>> samples(count);
        for (std::size_t k = 0; k < num_symbols; ++k) {
            const auto& slice = slices[k];
            for (std::size_t m = 0; m < slice.values.size(); ++m)
                samples[slice.first + m] += symbols[k] * slice.values[m];
        }
        for (std::size_t i = 0; i < num_freqs; ++i) {
            const auto& tw = twiddles[i];
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t n = 0; n < count; ++n)
                acc += samples[n] * tw[n];
            gamma[trial * num_freqs + i] = std::norm(acc * dt) / length;
        }
    });

    SnrEstimate out;
    out.freqs.assign(freqs.begin(), freqs.end());
    out.estimate.resize(num_freqs);
    out.std_err.resize(num_freqs);
    out.trials = trials;
    for (std::size_t i = 0; i < num_freqs; ++i) {
        double mean = 0.0;
        for (std::size_t t = 0; t < num_trials; ++t)
            mean += gamma[t * num_freqs + i];
        mean /= static_cast<double>(num_trials);
        double var = 0.0;
        for (std::size_t t = 0; t < num_trials; ++t) {
            const double d = gamma[t * num_freqs + i] - mean;
            var += d * d;
        }
        var /= static_cast<double>(num_trials - 1);
        out.estimate[i] = mean / noise_density;
        out.std_err[i] = std::sqrt(var / static_cast<double>(num_trials)) / noise_density;
    }
    return out;
}

} // namespace ftn
