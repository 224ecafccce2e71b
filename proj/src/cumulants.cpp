#include "txident/cumulants.hpp"

#include <cmath>
#include <stdexcept>

namespace txident {

cplx compute_moment(std::span<const cplx> samples, int p, int q) {
    if (samples.empty()) throw std::invalid_argument("empty sample vector");
    if (q < 0 || q > p) throw std::invalid_argument("moment requires 0 <= q <= p");
    cplx acc(0.0, 0.0);
    for (const cplx& y : samples) {
        cplx term(1.0, 0.0);
        for (int i = 0; i < p - q; ++i) term *= y;
        const cplx yc = std::conj(y);
        for (int i = 0; i < q; ++i) term *= yc;
        acc += term;
    }
    return acc / static_cast<double>(samples.size());
}

MomentSet compute_moments(std::span<const cplx> samples) {
    if (samples.empty()) throw std::invalid_argument("empty sample vector");
    MomentSet m{};
    // One pass, building powers incrementally per sample.
    for (const cplx& y : samples) {
        const cplx yc = std::conj(y);
        const cplx y2 = y * y, y3 = y2 * y, y4 = y3 * y;
        const cplx y5 = y4 * y, y6 = y5 * y;
        const cplx yc2 = yc * yc, yc3 = yc2 * yc;
        m.m20 += y2;
        m.m21 += y * yc;
        m.m22 += yc2;
        m.m40 += y4;
        m.m41 += y3 * yc;
        m.m42 += y2 * yc2;
        m.m43 += y * yc3;
        m.m60 += y6;
        m.m61 += y5 * yc;
        m.m62 += y4 * yc2;
        m.m63 += y3 * yc3;
    }
    const double inv = 1.0 / static_cast<double>(samples.size());
    for (cplx* v : {&m.m20, &m.m21, &m.m22, &m.m40, &m.m41, &m.m42, &m.m43,
                    &m.m60, &m.m61, &m.m62, &m.m63}) {
        *v *= inv;
    }
    return m;
}

RawCumulants cumulants_from_moments(const MomentSet& m, bool textbook_c41_c42) {
    RawCumulants c{};
    c.c20 = m.m20;
    c.c21 = m.m21;
    c.c40 = m.m40 - 3.0 * m.m20 * m.m20;
    if (textbook_c41_c42) {
        c.c41 = m.m41 - 3.0 * m.m21 * m.m20;
        c.c42 = m.m42 - std::norm(m.m20) - 2.0 * m.m21 * m.m21;
    } else {
        c.c41 = m.m40 - 3.0 * m.m20 * m.m21;
        c.c42 = m.m42 + std::norm(m.m40) - 2.0 * m.m21 * m.m21;
    }
    c.c60 = m.m60 - 15.0 * m.m20 * m.m40 + 30.0 * m.m20 * m.m20 * m.m20;
    c.c61 = m.m61 - 5.0 * m.m21 * m.m40 - 10.0 * m.m20 * m.m41 +
            30.0 * m.m20 * m.m20 * m.m21;
    c.c62 = m.m62 - 6.0 * m.m20 * m.m42 - 8.0 * m.m21 * m.m41 - m.m22 * m.m40 +
            6.0 * m.m20 * m.m20 * m.m22 + 24.0 * m.m21 * m.m21 * m.m20;
    c.c63 = m.m63 - 9.0 * m.m21 * m.m42 + 12.0 * m.m21 * m.m21 * m.m21 -
            3.0 * m.m20 * m.m43 - 3.0 * m.m22 * m.m41 +
            18.0 * m.m20 * m.m21 * m.m22;
    return c;
}

FeatureVector normalize_cumulants(const RawCumulants& raw) {
    const auto norm = [](const cplx& c, int order) {
        return std::pow(std::abs(c), 2.0 / order);
    };
    return FeatureVector{
        norm(raw.c20, 2), norm(raw.c21, 2),
        norm(raw.c40, 4), norm(raw.c41, 4), norm(raw.c42, 4),
        norm(raw.c60, 6), norm(raw.c61, 6), norm(raw.c62, 6), norm(raw.c63, 6),
    };
}

FeatureVector extract_features(const SignalCapture& capture) {
    return normalize_cumulants(compute_cumulants(std::span<const cplx>(capture.samples)));
}

std::vector<double> polynomial_expand(const FeatureVector& fv) {
    std::vector<double> out;
    out.reserve(kExpandedFeatures);
    out.push_back(1.0);
    for (double x : fv) out.push_back(x);
    for (int i = 0; i < kNumFeatures; ++i) {
        for (int j = i; j < kNumFeatures; ++j) {
            out.push_back(fv[i] * fv[j]);
        }
    }
    return out;
}

}  // namespace txident
