#pragma once

#include <array>
#include <span>
#include <vector>

#include "txident/modulation.hpp"
#include "txident/simulate.hpp"

namespace txident {

// Sample estimate of M_pq = E[y^(p-q) * conj(y)^q], 0 <= q <= p.
// Throws std::invalid_argument on empty input or bad (p, q).
cplx compute_moment(std::span<const cplx> samples, int p, int q);

// The eleven moments feeding the cumulant formulas.
struct MomentSet {
    cplx m20, m21, m22;
    cplx m40, m41, m42, m43;
    cplx m60, m61, m62, m63;
};
MomentSet compute_moments(std::span<const cplx> samples);

// Second/fourth/sixth-order cumulants of the received samples.
struct RawCumulants {
    cplx c20, c21;
    cplx c40, c41, c42;
    cplx c60, c61, c62, c63;
};

// Cumulants from the moment estimates. The default C41/C42 forms are
//   C41 = M40 - 3*M20*M21
//   C42 = M42 + |M40|^2 - 2*M21^2
// With TextbookC41C42 the conventional definitions are used instead:
//   C41 = M41 - 3*M21*M20
//   C42 = M42 - |M20|^2 - 2*M21^2
RawCumulants cumulants_from_moments(const MomentSet& m, bool textbook_c41_c42);

template <bool TextbookC41C42 = false>
RawCumulants compute_cumulants(std::span<const cplx> samples) {
    return cumulants_from_moments(compute_moments(samples), TextbookC41C42);
}

// Nine non-negative features in the fixed order
// C20, C21, C40, C41, C42, C60, C61, C62, C63.
using FeatureVector = std::array<double, 9>;
inline constexpr int kNumFeatures = 9;
inline constexpr const char* kFeatureNames[kNumFeatures] = {
    "C20", "C21", "C40", "C41", "C42", "C60", "C61", "C62", "C63",
};

// |C|^(2/p) per cumulant, p being its order (2, 4 or 6).
FeatureVector normalize_cumulants(const RawCumulants& raw);

// Flattens all receive streams into one pooled sample vector, then
// moments -> cumulants -> normalized magnitudes.
FeatureVector extract_features(const SignalCapture& capture);

// Degree-2 polynomial expansion with bias:
// [1, x1..x9, xi*xj for i <= j] -> 55 values.
inline constexpr int kExpandedFeatures = 1 + kNumFeatures + kNumFeatures * (kNumFeatures + 1) / 2;
std::vector<double> polynomial_expand(const FeatureVector& fv);

}  // namespace txident
