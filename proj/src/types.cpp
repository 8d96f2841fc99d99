// SPDX-License-Identifier: Apache-2.0
#include "stfa/types.hpp"

#include <cmath>
#include <stdexcept>

namespace stfa {

TimeFreqAxes TimeFreqAxes::make(Eigen::Index n, double fs, double t0) {
    if (n < 2) throw std::invalid_argument("TimeFreqAxes: need at least two bins");
    if (fs <= 0.0) throw std::invalid_argument("TimeFreqAxes: fs must be positive");
    TimeFreqAxes axes;
    axes.times.resize(n);
    axes.freqs.resize(n);
    const double df = fs / static_cast<double>(n);
    const Eigen::Index half = n / 2;
    for (Eigen::Index k = 0; k < n; ++k) {
        axes.times[k] = t0 + static_cast<double>(k) / fs;
        axes.freqs[k] = static_cast<double>(k - half) * df;
    }
    return axes;
}

Eigen::Index nearest_freq_bin(const TimeFreqAxes& axes, double f) {
    const Eigen::Index n = axes.size();
    const double df = axes.freqs[1] - axes.freqs[0];
    // round half down so ties go to the lower bin
    const double pos = (f - axes.freqs[0]) / df;
    Eigen::Index j = static_cast<Eigen::Index>(std::ceil(pos - 0.5));
    if (j < 0) j = 0;
    if (j > n - 1) j = n - 1;
    return j;
}

bool in_band(const TimeFreqAxes& axes, double f) {
    const double half = axes.fs() / 2.0;
    return f >= -half && f < half;
}

}  // namespace stfa
