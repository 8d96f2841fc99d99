// SPDX-License-Identifier: Apache-2.0
#include "stfa/framing.hpp"

#include <cmath>
#include <stdexcept>

namespace stfa {

Window gaussian_window(Eigen::Index m, double sigma) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("gaussian_window: m must be odd and >= 3");
    if (sigma <= 0.0) throw std::invalid_argument("gaussian_window: sigma must be positive");
    Window w;
    w.weights.resize(m);
    const double center = static_cast<double>(m - 1) / 2.0;
    for (Eigen::Index k = 0; k < m; ++k) {
        const double d = static_cast<double>(k) - center;
        w.weights[k] = std::exp(-(d * d) / (2.0 * sigma * sigma));
    }
    return w;
}

Eigen::VectorXcd pad_signal(const ComplexSignal& s, Eigen::Index m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("pad_signal: m must be odd");
    const Eigen::Index n = s.size();
    const Eigen::Index half = (m - 1) / 2;
    Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(n + m - 1);
    padded.segment(half, n) = s.samples;
    return padded;
}

Frame extract_frame(const Eigen::VectorXcd& padded, Eigen::Index i, Eigen::Index m) {
    const Eigen::Index n = padded.size() - (m - 1);
    if (i < 0 || i >= n) throw std::invalid_argument("extract_frame: index out of range");
    Frame frame;
    frame.center_index = i;
    frame.y = padded.segment(i, m);
    return frame;
}

Frame weight_frame(const Frame& frame, const Window& w) {
    if (frame.y.size() != w.m())
        throw std::invalid_argument("weight_frame: frame and window lengths differ");
    Frame out;
    out.center_index = frame.center_index;
    out.y = frame.y.cwiseProduct(w.weights.cast<std::complex<double>>());
    return out;
}

}  // namespace stfa
