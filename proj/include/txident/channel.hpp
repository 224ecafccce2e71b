#pragma once

#include <vector>

#include "txident/modulation.hpp"
#include "txident/rng.hpp"

namespace txident {

// Flat-fading MIMO channel matrix, n_rx x n_tx, row-major.
class ChannelMatrix {
public:
    ChannelMatrix() = default;
    ChannelMatrix(int n_rx, int n_tx)
        : n_rx_(n_rx), n_tx_(n_tx), h_(static_cast<size_t>(n_rx) * n_tx) {}

    int n_rx() const { return n_rx_; }
    int n_tx() const { return n_tx_; }
    cplx& at(int rx, int tx) { return h_[static_cast<size_t>(rx) * n_tx_ + tx]; }
    const cplx& at(int rx, int tx) const { return h_[static_cast<size_t>(rx) * n_tx_ + tx]; }

    bool operator==(const ChannelMatrix& other) const {
        return n_rx_ == other.n_rx_ && n_tx_ == other.n_tx_ && h_ == other.h_;
    }

    // Identity-like matrix of ones; with n_tx=n_rx=1 this is the unit channel.
    static ChannelMatrix ones(int n_rx, int n_tx) {
        ChannelMatrix m(n_rx, n_tx);
        for (auto& v : m.h_) v = cplx(1.0, 0.0);
        return m;
    }

private:
    int n_rx_ = 0;
    int n_tx_ = 0;
    std::vector<cplx> h_;
};

// Rayleigh fading draw: each entry i.i.d. circular complex Gaussian with unit
// total variance (real and imaginary parts ~ N(0, 1/2)).
ChannelMatrix draw_channel(int n_rx, int n_tx, Rng& rng);

}  // namespace txident
