#pragma once

#include <optional>
#include <vector>

#include "txident/channel.hpp"
#include "txident/modulation.hpp"

namespace txident {

// One simulated transmission. Every stochastic ingredient (bits, channel,
// noise) is drawn from a sub-stream derived from `seed`, so captures are
// reproducible as a whole and component by component.
struct TxConfig {
    Modulation modulation = Modulation::BPSK;
    int n_tx = 1;
    int n_rx = 1;
    double snr_db = 20.0;     // +infinity disables noise
    int n_symbols = 1024;
    uint64_t seed = 0;
    // When set, used instead of a fresh Rayleigh draw (e.g. a unit channel for
    // calibration tests, or a shared realization pool at dataset level).
    std::optional<ChannelMatrix> channel_override;

    void validate() const;    // throws std::invalid_argument
};

// Received baseband block: n_rx streams of n_symbols samples plus the
// generation metadata (realized channel and noise power).
struct SignalCapture {
    std::vector<cplx> samples;   // row-major, n_rx x n_symbols
    TxConfig config;
    ChannelMatrix channel;
    double noise_power = 0.0;    // sigma^2 per receive antenna

    int n_rx() const { return config.n_rx; }
    int n_symbols() const { return config.n_symbols; }
    cplx& at(int rx, int s) { return samples[static_cast<size_t>(rx) * config.n_symbols + s]; }
    const cplx& at(int rx, int s) const {
        return samples[static_cast<size_t>(rx) * config.n_symbols + s];
    }
};

// Noise variance per receive antenna for a capture whose measured noiseless
// received power is `signal_power`: sigma^2 = P / (10^(snr_db/10) * log2(M)).
// The SNR axis is bit-energy-referenced against the measured signal power, so
// the realized per-sample SNR is snr_db + 10*log10(log2 M) regardless of the
// fading realization.
double noise_variance(double snr_db, Modulation mod, double signal_power);

// Spatial multiplexing over a quasi-static channel: one channel realization
// per capture, independent uniform symbol streams per transmit antenna,
// per-sample AWGN.
SignalCapture transmit(const TxConfig& config);

}  // namespace txident
