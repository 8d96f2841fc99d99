// SPDX-License-Identifier: Apache-2.0
#ifndef STFA_FRAMING_HPP
#define STFA_FRAMING_HPP

#include "stfa/types.hpp"

namespace stfa {

/// Symmetric analysis window of odd length with peak value 1 at the center.
struct Window {
    Eigen::VectorXd weights;

    Eigen::Index m() const { return weights.size(); }
};

/// One length-m observation extracted around time index center_index.
struct Frame {
    Eigen::VectorXcd y;
    Eigen::Index center_index = 0;
};

/// Gaussian window w[k] = exp(-(k - (m-1)/2)^2 / (2 sigma^2)), m odd >= 3.
Window gaussian_window(Eigen::Index m, double sigma);

/// Default window width in samples for an m-tap window.
inline double default_sigma(Eigen::Index m) { return static_cast<double>(m - 1) / 5.0; }

/// Prepends and appends (m-1)/2 zeros so every frame has full length.
Eigen::VectorXcd pad_signal(const ComplexSignal& s, Eigen::Index m);

/// Frame i of the padded signal: y[k] = padded[i + k], k = 0..m-1. The
/// center element equals the original sample at index i.
Frame extract_frame(const Eigen::VectorXcd& padded, Eigen::Index i, Eigen::Index m);

/// Componentwise product of frame and window.
Frame weight_frame(const Frame& frame, const Window& w);

}  // namespace stfa

#endif  // STFA_FRAMING_HPP
