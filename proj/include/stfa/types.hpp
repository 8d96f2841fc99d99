// SPDX-License-Identifier: Apache-2.0
#ifndef STFA_TYPES_HPP
#define STFA_TYPES_HPP

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <utility>

namespace stfa {

/// A uniformly sampled complex-valued time series.
struct ComplexSignal {
    Eigen::VectorXcd samples;
    double t0 = 0.0;  // start time [s]
    double fs = 1.0;  // sampling rate [Hz]

    Eigen::Index size() const { return samples.size(); }
};

/// Time axis t_k = t0 + k/fs and centered frequency axis
/// f_j = (j - n/2) * fs / n, j = 0..n-1, spanning [-fs/2, fs/2).
struct TimeFreqAxes {
    Eigen::VectorXd times;
    Eigen::VectorXd freqs;

    static TimeFreqAxes make(Eigen::Index n, double fs, double t0);
    static TimeFreqAxes for_signal(const ComplexSignal& s) {
        return make(s.size(), s.fs, s.t0);
    }

    Eigen::Index size() const { return freqs.size(); }
    double fs() const { return (freqs[1] - freqs[0]) * static_cast<double>(size()); }
};

/// Index of the frequency row nearest to f; ties break toward the lower bin.
/// The result is clamped to the existing rows.
Eigen::Index nearest_freq_bin(const TimeFreqAxes& axes, double f);

/// True when f lies in the representable band [-fs/2, fs/2).
bool in_band(const TimeFreqAxes& axes, double f);

/// Nonnegative time-frequency magnitude grid.
/// Rows are frequency bins in centered (low-to-high) order, columns are
/// time indices; values(r, c) is the magnitude at freqs[r], times[c].
struct TFDGrid {
    Eigen::MatrixXd values;
    TimeFreqAxes axes;
};

/// An analytic instantaneous-frequency trajectory. When `domain` is set the
/// track only exists on the half-open time interval [first, second).
struct IFTrack {
    std::function<double(double)> f_of_t;
    double amplitude = 1.0;
    std::optional<std::pair<double, double>> domain;

    bool covers(double t) const {
        return !domain || (t >= domain->first && t < domain->second);
    }
};

}  // namespace stfa

#endif  // STFA_TYPES_HPP
