#include "txident/simulate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace txident {

namespace {
// Sub-stream tags under a capture seed.
constexpr uint64_t kBitsStream = 1;
constexpr uint64_t kChannelStream = 2;
constexpr uint64_t kNoiseStream = 3;
}  // namespace

void TxConfig::validate() const {
    if (n_tx < 1 || n_rx < 1) {
        throw std::invalid_argument("antenna counts must be >= 1");
    }
    if (n_symbols < 1) {
        throw std::invalid_argument("n_symbols must be > 0");
    }
    if (std::isnan(snr_db)) {
        throw std::invalid_argument("snr_db must not be NaN");
    }
    if (channel_override &&
        (channel_override->n_rx() != n_rx || channel_override->n_tx() != n_tx)) {
        throw std::invalid_argument("channel override dimensions mismatch");
    }
}

double noise_variance(double snr_db, Modulation mod, double signal_power) {
    if (std::isinf(snr_db) && snr_db > 0) return 0.0;
    const double snr_lin = std::pow(10.0, snr_db / 10.0);
    return signal_power / (snr_lin * bits_per_symbol(mod));
}

SignalCapture transmit(const TxConfig& config) {
    config.validate();

    Rng bits_rng(derive_seed(config.seed, kBitsStream));
    Rng noise_rng(derive_seed(config.seed, kNoiseStream));

    ChannelMatrix h;
    if (config.channel_override) {
        h = *config.channel_override;
    } else {
        Rng chan_rng(derive_seed(config.seed, kChannelStream));
        h = draw_channel(config.n_rx, config.n_tx, chan_rng);
    }

    const auto table = build_constellation(config.modulation);
    const uint64_t order = table.size();

    SignalCapture cap;
    cap.config = config;
    cap.channel = h;
    cap.samples.assign(static_cast<size_t>(config.n_rx) * config.n_symbols, cplx(0.0, 0.0));

    // y = H x per symbol instant; uniform i.i.d. bits make the symbol draw a
    // uniform pick from the table regardless of the Gray labelling.
    double signal_power = 0.0;
    for (int s = 0; s < config.n_symbols; ++s) {
        for (int t = 0; t < config.n_tx; ++t) {
            const cplx x = table[bits_rng.uniform_below(order)].point;
            for (int r = 0; r < config.n_rx; ++r) {
                cap.at(r, s) += h.at(r, t) * x;
            }
        }
    }
    for (const cplx& v : cap.samples) signal_power += std::norm(v);
    signal_power /= static_cast<double>(cap.samples.size());

    cap.noise_power = noise_variance(config.snr_db, config.modulation, signal_power);
    if (cap.noise_power > 0.0) {
        const double comp_std = std::sqrt(cap.noise_power / 2.0);
        for (cplx& v : cap.samples) {
            v += cplx(comp_std * noise_rng.gaussian(), comp_std * noise_rng.gaussian());
        }
    }
    return cap;
}

}  // namespace txident
