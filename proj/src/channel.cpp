#include "txident/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace txident {

ChannelMatrix draw_channel(int n_rx, int n_tx, Rng& rng) {
    if (n_rx < 1 || n_tx < 1) {
        throw std::invalid_argument("channel dimensions must be >= 1");
    }
    const double comp_std = std::sqrt(0.5);
    ChannelMatrix h(n_rx, n_tx);
    for (int r = 0; r < n_rx; ++r) {
        for (int t = 0; t < n_tx; ++t) {
            h.at(r, t) = cplx(comp_std * rng.gaussian(), comp_std * rng.gaussian());
        }
    }
    return h;
}

}  // namespace txident
