// SPDX-License-Identifier: Apache-2.0
#ifndef STFA_SIGNAL_MODEL_HPP
#define STFA_SIGNAL_MODEL_HPP

#include <vector>

#include "stfa/types.hpp"

namespace stfa {

/// Linear frequency modulated test signal s(t) = exp(j*pi*t^2),
/// sampled at t_k = t0 + k/fs. Instantaneous frequency f(t) = t.
ComplexSignal gen_lfm(double t0, double fs, Eigen::Index n);

/// Parabola frequency modulated signal s(t) = exp(j*pi*t^3/12),
/// instantaneous frequency f(t) = t^2/8.
ComplexSignal gen_parabola(double t0, double fs, Eigen::Index n);

/// Four-component signal: the two parabola FM components
/// exp(+-j*pi*t^3/12), the stationary tone exp(-j*8*pi*t) and the fast
/// oscillating component exp(-j*pi*(14 t + cos 2t)).
ComplexSignal gen_multicomponent(double t0, double fs, Eigen::Index n);

/// Rasterizes analytic IF tracks into a binary reference grid: for every
/// time column and every track covering that time, the nearest frequency
/// row (ties toward the lower bin) is set to 1. Overlaps stay 1.
/// Throws std::out_of_range naming the time if a covered sample falls
/// outside [-fs/2, fs/2).
TFDGrid ideal_tfd(const std::vector<IFTrack>& tracks, const TimeFreqAxes& axes);

/// Returns a copy of the track whose domain is narrowed to the contiguous
/// run of sample times with in-band instantaneous frequency. Throws
/// std::invalid_argument if the in-band samples are not contiguous or the
/// track is out of band everywhere.
IFTrack clip_track_to_band(const IFTrack& track, const TimeFreqAxes& axes);

/// The ideal IF tracks of the three generator signals on the given axes
/// (out-of-band samples clipped, matching the reference grids used for
/// PSNR and RE comparisons).
std::vector<IFTrack> lfm_tracks(const TimeFreqAxes& axes);
std::vector<IFTrack> parabola_tracks(const TimeFreqAxes& axes);
std::vector<IFTrack> multicomponent_tracks(const TimeFreqAxes& axes);

}  // namespace stfa

#endif  // STFA_SIGNAL_MODEL_HPP
