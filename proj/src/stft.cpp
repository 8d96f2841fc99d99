// SPDX-License-Identifier: Apache-2.0
#include "stfa/stft.hpp"

#include <sstream>
#include <stdexcept>

#include "stfa/fft.hpp"
#include "stfa/solver.hpp"
#include "parallel.hpp"

namespace stfa {

TFDGrid stft(const ComplexSignal& s, const Window& window, Eigen::Index n, int threads) {
    const Eigen::Index m = window.m();
    if (m % 2 == 0 || m < 1) throw std::invalid_argument("stft: window length must be odd");
    if (m > n) throw std::invalid_argument("stft: window longer than the transform size");
    if (n != s.size())
        throw std::invalid_argument("stft: n must equal the signal length for a square grid");

    const Eigen::VectorXcd padded = pad_signal(s, m);
    const Fft fft(n);

    TFDGrid grid;
    grid.axes = TimeFreqAxes::for_signal(s);
    grid.values.resize(n, n);

    detail::parallel_for_index(n, threads, [&](Eigen::Index i) {
        try {
            const Frame frame = weight_frame(extract_frame(padded, i, m), window);
            Eigen::VectorXcd ext = Eigen::VectorXcd::Zero(n);
            ext.head(m) = frame.y;
            grid.values.col(i) = fftshift(Eigen::VectorXd(fft.forward(ext).cwiseAbs()));
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "stft: frame at time index " << i << ": " << e.what();
            throw std::runtime_error(msg.str());
        }
    });
    return grid;
}

}  // namespace stfa
