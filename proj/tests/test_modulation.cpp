#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "txident/modulation.hpp"

using namespace txident;

namespace {

int hamming(uint32_t a, uint32_t b) { return __builtin_popcount(a ^ b); }

}  // namespace

TEST_CASE("BPSK maps 0 -> +1 and 1 -> -1") {
    const auto table = build_constellation(Modulation::BPSK);
    REQUIRE(table.size() == 2);
    CHECK(std::abs(table[0].point - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(table[1].point - cplx(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("QPSK points are (+-1 +- 1j)/sqrt(2)") {
    const auto table = build_constellation(Modulation::QPSK);
    REQUIRE(table.size() == 4);
    const double s = 1.0 / std::sqrt(2.0);
    for (const auto& entry : table) {
        CHECK(std::abs(std::abs(entry.point.real()) - s) < 1e-12);
        CHECK(std::abs(std::abs(entry.point.imag()) - s) < 1e-12);
    }
}

TEST_CASE("16QAM grid scale is 1/sqrt(10)") {
    // E|x|^2 over the raw {+-1,+-3}^2 grid is 10, so the smallest point
    // magnitude must be sqrt(2)/sqrt(10).
    const auto table = build_constellation(Modulation::QAM16);
    double min_abs = 1e9;
    for (const auto& entry : table) min_abs = std::min(min_abs, std::abs(entry.point));
    CHECK(min_abs == doctest::Approx(std::sqrt(2.0 / 10.0)).epsilon(1e-12));
}

TEST_CASE("constellations: size, distinctness, unit energy, labels") {
    for (Modulation mod : kAllModulations) {
        CAPTURE(modulation_name(mod));
        const auto table = build_constellation(mod);
        const size_t order = static_cast<size_t>(constellation_order(mod));
        REQUIRE(table.size() == order);

        std::set<std::pair<double, double>> distinct;
        double energy = 0.0;
        for (size_t i = 0; i < table.size(); ++i) {
            CHECK(table[i].bits == i);
            distinct.insert({table[i].point.real(), table[i].point.imag()});
            energy += std::norm(table[i].point);
        }
        CHECK(distinct.size() == order);
        CHECK(energy / static_cast<double>(order) == doctest::Approx(1.0).epsilon(1e-12));

        if (modulation_family(mod) == ModulationFamily::PSK) {
            for (const auto& entry : table) {
                CHECK(std::abs(entry.point) == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("PSK Gray property: angular neighbours differ in one bit") {
    for (Modulation mod : {Modulation::BPSK, Modulation::QPSK, Modulation::PSK8}) {
        CAPTURE(modulation_name(mod));
        auto table = build_constellation(mod);
        std::sort(table.begin(), table.end(), [](const auto& a, const auto& b) {
            return std::arg(a.point) < std::arg(b.point);
        });
        const int order = static_cast<int>(table.size());
        for (int i = 0; i < order; ++i) {
            CHECK(hamming(table[i].bits, table[(i + 1) % order].bits) == 1);
        }
    }
}

TEST_CASE("QAM Gray property: grid neighbours differ in one bit") {
    for (Modulation mod : {Modulation::QAM16, Modulation::QAM64, Modulation::QAM256}) {
        CAPTURE(modulation_name(mod));
        const auto table = build_constellation(mod);
        const int side = static_cast<int>(std::lround(std::sqrt(double(table.size()))));
        // Scan each axis-aligned neighbour pair via nearest distinct re/im levels.
        const double step = 2.0 * std::sqrt(3.0 / (2.0 * (side * side - 1)));
        for (const auto& a : table) {
            for (const auto& b : table) {
                const double dre = std::abs(a.point.real() - b.point.real());
                const double dim = std::abs(a.point.imag() - b.point.imag());
                const bool adjacent = (dre < 1e-9 && std::abs(dim - step) < 1e-9) ||
                                      (dim < 1e-9 && std::abs(dre - step) < 1e-9);
                if (adjacent) CHECK(hamming(a.bits, b.bits) == 1);
            }
        }
    }
}

TEST_CASE("modulate maps bits through the Gray table") {
    const auto table = build_constellation(Modulation::QPSK);
    const auto symbols = modulate({0, 0, 0, 1, 1, 1}, Modulation::QPSK);
    REQUIRE(symbols.size() == 3);
    CHECK(symbols[0] == table[0b00].point);
    CHECK(symbols[1] == table[0b01].point);
    CHECK(symbols[2] == table[0b11].point);

    const auto bpsk = modulate({0}, Modulation::BPSK);
    REQUIRE(bpsk.size() == 1);
    CHECK(std::abs(bpsk[0] - cplx(1.0, 0.0)) < 1e-15);

    CHECK(modulate({}, Modulation::QAM64).empty());
    CHECK_THROWS_AS(modulate({0, 1, 0}, Modulation::QPSK), std::invalid_argument);
}

TEST_CASE("modulation names round-trip") {
    for (Modulation mod : kAllModulations) {
        CHECK(modulation_from_name(modulation_name(mod)) == mod);
    }
    CHECK_THROWS(modulation_from_name("QAM32"));
}
