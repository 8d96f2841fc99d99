// SPDX-License-Identifier: Apache-2.0
#include "stfa/signal_model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace stfa {

namespace {

constexpr double kPi = std::numbers::pi;

ComplexSignal sample_phase(double t0, double fs, Eigen::Index n,
                           const std::function<std::complex<double>(double)>& value) {
    if (n <= 0) throw std::invalid_argument("signal generator: n must be positive");
    if (fs <= 0.0) throw std::invalid_argument("signal generator: fs must be positive");
    ComplexSignal s;
    s.t0 = t0;
    s.fs = fs;
    s.samples.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double t = t0 + static_cast<double>(k) / fs;
        s.samples[k] = value(t);
    }
    return s;
}

std::complex<double> cis(double phase) {
    return {std::cos(phase), std::sin(phase)};
}

}  // namespace

ComplexSignal gen_lfm(double t0, double fs, Eigen::Index n) {
    return sample_phase(t0, fs, n, [](double t) { return cis(kPi * t * t); });
}

ComplexSignal gen_parabola(double t0, double fs, Eigen::Index n) {
    return sample_phase(t0, fs, n, [](double t) { return cis(kPi * t * t * t / 12.0); });
}

ComplexSignal gen_multicomponent(double t0, double fs, Eigen::Index n) {
    return sample_phase(t0, fs, n, [](double t) {
        const double cubic = kPi * t * t * t / 12.0;
        return cis(cubic) + cis(-cubic) + cis(-8.0 * kPi * t) +
               cis(-kPi * (14.0 * t + std::cos(2.0 * t)));
    });
}

TFDGrid ideal_tfd(const std::vector<IFTrack>& tracks, const TimeFreqAxes& axes) {
    const Eigen::Index n = axes.size();
    TFDGrid grid;
    grid.axes = axes;
    grid.values = Eigen::MatrixXd::Zero(n, n);
    for (const IFTrack& track : tracks) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const double t = axes.times[k];
            if (!track.covers(t)) continue;
            const double f = track.f_of_t(t);
            if (!in_band(axes, f)) {
                std::ostringstream msg;
                msg << "ideal_tfd: track frequency " << f << " Hz out of band at t=" << t << " s";
                throw std::out_of_range(msg.str());
            }
            grid.values(nearest_freq_bin(axes, f), k) = 1.0;
        }
    }
    return grid;
}

IFTrack clip_track_to_band(const IFTrack& track, const TimeFreqAxes& axes) {
    const Eigen::Index n = axes.size();
    Eigen::Index first = -1, last = -1;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double t = axes.times[k];
        if (!track.covers(t)) continue;
        if (in_band(axes, track.f_of_t(t))) {
            if (first < 0) first = k;
            last = k;
        }
    }
    if (first < 0) throw std::invalid_argument("clip_track_to_band: track out of band everywhere");
    for (Eigen::Index k = first; k <= last; ++k) {
        const double t = axes.times[k];
        if (track.covers(t) && !in_band(axes, track.f_of_t(t)))
            throw std::invalid_argument("clip_track_to_band: in-band samples are not contiguous");
    }
    IFTrack clipped = track;
    const double dt = axes.times[1] - axes.times[0];
    clipped.domain = {axes.times[first], axes.times[last] + dt / 2.0};
    return clipped;
}

std::vector<IFTrack> lfm_tracks(const TimeFreqAxes& axes) {
    IFTrack t{[](double x) { return x; }, 1.0, std::nullopt};
    return {clip_track_to_band(t, axes)};
}

std::vector<IFTrack> parabola_tracks(const TimeFreqAxes& axes) {
    IFTrack t{[](double x) { return x * x / 8.0; }, 1.0, std::nullopt};
    return {clip_track_to_band(t, axes)};
}

std::vector<IFTrack> multicomponent_tracks(const TimeFreqAxes& axes) {
    IFTrack up{[](double x) { return x * x / 8.0; }, 1.0, std::nullopt};
    IFTrack down{[](double x) { return -x * x / 8.0; }, 1.0, std::nullopt};
    IFTrack tone{[](double) { return -4.0; }, 1.0, std::nullopt};
    IFTrack wobble{[](double x) { return -7.0 + std::sin(2.0 * x); }, 1.0, std::nullopt};
    return {clip_track_to_band(up, axes), clip_track_to_band(down, axes),
            clip_track_to_band(tone, axes), clip_track_to_band(wobble, axes)};
}

}  // namespace stfa
