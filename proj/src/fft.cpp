// SPDX-License-Identifier: Apache-2.0
#include "stfa/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace stfa {

namespace {
// The FFTW planner is not reentrant; plan creation/destruction is serialized.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft::Fft(Eigen::Index n) : n_(n), fwd_plan_(nullptr), bwd_plan_(nullptr) {
    if (n <= 0) throw std::invalid_argument("Fft: size must be positive");
    Eigen::VectorXcd scratch_in(n), scratch_out(n);
    auto* in = reinterpret_cast<fftw_complex*>(scratch_in.data());
    auto* out = reinterpret_cast<fftw_complex*>(scratch_out.data());
    std::lock_guard<std::mutex> lock(planner_mutex());
    // FFTW_UNALIGNED lets the same plan run on any caller buffer, which
    // keeps new-array execution valid and the algorithm choice fixed.
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fwd_plan_ = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_FORWARD, flags);
    bwd_plan_ = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_BACKWARD, flags);
    if (fwd_plan_ == nullptr || bwd_plan_ == nullptr)
        throw std::runtime_error("Fft: plan creation failed");
}

Fft::~Fft() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (fwd_plan_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(fwd_plan_));
    if (bwd_plan_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(bwd_plan_));
}

Eigen::VectorXcd Fft::forward(const Eigen::VectorXcd& x) const {
    if (x.size() != n_) throw std::invalid_argument("Fft::forward: length mismatch");
    Eigen::VectorXcd out(n_);
    // out-of-place c2c transforms leave the input untouched
    fftw_execute_dft(static_cast<fftw_plan>(fwd_plan_),
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(x.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

Eigen::VectorXcd Fft::backward(const Eigen::VectorXcd& x) const {
    if (x.size() != n_) throw std::invalid_argument("Fft::backward: length mismatch");
    Eigen::VectorXcd out(n_);
    fftw_execute_dft(static_cast<fftw_plan>(bwd_plan_),
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(x.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

Eigen::VectorXcd Fft::inverse(const Eigen::VectorXcd& x) const {
    return backward(x) / static_cast<double>(n_);
}

}  // namespace stfa
