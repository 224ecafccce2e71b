#include "txident/modulation.hpp"

#include <cmath>
#include <stdexcept>

namespace txident {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// gray(k) = k ^ (k >> 1); adjacent k differ in exactly one bit of gray(k).
uint32_t gray_code(uint32_t k) { return k ^ (k >> 1); }

// M-PSK: point k sits at angle 2*pi*k/M + offset and carries label gray(k).
// QPSK uses a pi/4 offset so the points land on (+-1 +- 1j)/sqrt(2).
std::vector<ConstellationPoint> psk_constellation(int order, double offset) {
    std::vector<ConstellationPoint> table(order);
    for (int k = 0; k < order; ++k) {
        const double angle = 2.0 * kPi * k / order + offset;
        const uint32_t label = gray_code(static_cast<uint32_t>(k));
        table[label] = {label, cplx(std::cos(angle), std::sin(angle))};
    }
    return table;
}

// Square M-QAM: independent Gray codes on the I and Q axes over the odd-integer
// grid {+-1, +-3, ...}, scaled to unit average energy. The first half of the
// bits selects the I level, the second half the Q level.
std::vector<ConstellationPoint> qam_constellation(int order) {
    const int side = static_cast<int>(std::lround(std::sqrt(double(order))));
    const int bits_per_axis = static_cast<int>(std::lround(std::log2(double(side))));
    // E[|x|^2] over the unscaled grid is 2*(side^2 - 1)/3.
    const double scale = std::sqrt(3.0 / (2.0 * (side * side - 1)));

    std::vector<ConstellationPoint> table(order);
    for (int i = 0; i < side; ++i) {
        const uint32_t gi = gray_code(static_cast<uint32_t>(i));
        const double re = (2 * i - (side - 1)) * scale;
        for (int q = 0; q < side; ++q) {
            const uint32_t gq = gray_code(static_cast<uint32_t>(q));
            const double im = (2 * q - (side - 1)) * scale;
            const uint32_t label = (gi << bits_per_axis) | gq;
            table[label] = {label, cplx(re, im)};
        }
    }
    return table;
}

}  // namespace

int constellation_order(Modulation mod) {
    switch (mod) {
        case Modulation::BPSK:   return 2;
        case Modulation::QPSK:   return 4;
        case Modulation::PSK8:   return 8;
        case Modulation::QAM16:  return 16;
        case Modulation::QAM64:  return 64;
        case Modulation::QAM256: return 256;
    }
    throw std::invalid_argument("unknown modulation");
}

int bits_per_symbol(Modulation mod) {
    int m = constellation_order(mod);
    int b = 0;
    while (m > 1) {
        m >>= 1;
        ++b;
    }
    return b;
}

ModulationFamily modulation_family(Modulation mod) {
    switch (mod) {
        case Modulation::BPSK:
        case Modulation::QPSK:
        case Modulation::PSK8:
            return ModulationFamily::PSK;
        default:
            return ModulationFamily::QAM;
    }
}

std::string modulation_name(Modulation mod) {
    switch (mod) {
        case Modulation::BPSK:   return "BPSK";
        case Modulation::QPSK:   return "QPSK";
        case Modulation::PSK8:   return "8PSK";
        case Modulation::QAM16:  return "16QAM";
        case Modulation::QAM64:  return "64QAM";
        case Modulation::QAM256: return "256QAM";
    }
    throw std::invalid_argument("unknown modulation");
}

Modulation modulation_from_name(const std::string& name) {
    for (Modulation mod : kAllModulations) {
        if (modulation_name(mod) == name) return mod;
    }
    throw std::invalid_argument("unknown modulation name: " + name);
}

std::vector<ConstellationPoint> build_constellation(Modulation mod) {
    switch (mod) {
        case Modulation::BPSK:   return psk_constellation(2, 0.0);
        case Modulation::QPSK:   return psk_constellation(4, kPi / 4.0);
        case Modulation::PSK8:   return psk_constellation(8, 0.0);
        case Modulation::QAM16:  return qam_constellation(16);
        case Modulation::QAM64:  return qam_constellation(64);
        case Modulation::QAM256: return qam_constellation(256);
    }
    throw std::invalid_argument("unknown modulation");
}

std::vector<cplx> modulate(const std::vector<uint8_t>& bits, Modulation mod) {
    const int bps = bits_per_symbol(mod);
    if (bits.size() % bps != 0) {
        throw std::invalid_argument("bit count not divisible by bits per symbol");
    }
    const auto table = build_constellation(mod);
    std::vector<cplx> symbols;
    symbols.reserve(bits.size() / bps);
    for (size_t i = 0; i < bits.size(); i += bps) {
        uint32_t pattern = 0;
        for (int b = 0; b < bps; ++b) {
            pattern = (pattern << 1) | (bits[i + b] & 1u);
        }
        symbols.push_back(table[pattern].point);
    }
    return symbols;
}

}  // namespace txident
