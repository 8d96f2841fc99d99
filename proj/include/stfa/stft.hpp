// SPDX-License-Identifier: Apache-2.0
#ifndef STFA_STFT_HPP
#define STFA_STFT_HPP

#include "stfa/framing.hpp"
#include "stfa/types.hpp"

namespace stfa {

/// Plain short-time Fourier transform baseline. Shares the framing and
/// window path of stfa_lps: per time index, the length-m frame is
/// weighted, zero-padded to n, transformed, and the fftshifted magnitude
/// becomes column i. Requires n == s.size() so both methods produce the
/// same n x n grid.
TFDGrid stft(const ComplexSignal& s, const Window& window, Eigen::Index n,
             int threads = 0);

}  // namespace stfa

#endif  // STFA_STFT_HPP
