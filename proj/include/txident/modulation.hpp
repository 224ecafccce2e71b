#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace txident {

using cplx = std::complex<double>;

enum class Modulation { BPSK, QPSK, PSK8, QAM16, QAM64, QAM256 };

inline constexpr Modulation kAllModulations[] = {
    Modulation::BPSK,  Modulation::QPSK,  Modulation::PSK8,
    Modulation::QAM16, Modulation::QAM64, Modulation::QAM256,
};
inline constexpr int kNumModulations = 6;

enum class ModulationFamily { PSK, QAM };

int constellation_order(Modulation mod);        // M
int bits_per_symbol(Modulation mod);            // log2(M)
ModulationFamily modulation_family(Modulation mod);
std::string modulation_name(Modulation mod);    // "BPSK" ... "256QAM"
Modulation modulation_from_name(const std::string& name);

// One constellation entry: the Gray-coded bit pattern and its baseband point.
struct ConstellationPoint {
    uint32_t bits;
    cplx point;
};

// All M points of the constellation, indexed by bit pattern (entry i carries
// bits == i). Unit average symbol energy; Gray adjacency between neighbours.
std::vector<ConstellationPoint> build_constellation(Modulation mod);

// Map a bit stream (values 0/1, MSB first within each symbol) onto
// constellation points. Throws std::invalid_argument if the length is not a
// multiple of bits_per_symbol(mod).
std::vector<cplx> modulate(const std::vector<uint8_t>& bits, Modulation mod);

}  // namespace txident
