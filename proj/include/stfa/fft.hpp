// SPDX-License-Identifier: Apache-2.0
#ifndef STFA_FFT_HPP
#define STFA_FFT_HPP

#include <Eigen/Dense>

namespace stfa {

/// Fixed-size complex FFT pair (FFTW backed).
///
/// forward(x)[a]  = sum_b x[b] exp(-2*pi*i*a*b/n)   (matches the DFT matrix)
/// backward(x)[a] = sum_b x[b] exp(+2*pi*i*a*b/n)   (unnormalized)
/// inverse(x)     = backward(x) / n
///
/// Plans are created once per instance; the apply methods are const,
/// allocate their own buffers and are safe to call from many threads.
class Fft {
public:
    explicit Fft(Eigen::Index n);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    Eigen::Index size() const { return n_; }

    Eigen::VectorXcd forward(const Eigen::VectorXcd& x) const;
    Eigen::VectorXcd backward(const Eigen::VectorXcd& x) const;
    Eigen::VectorXcd inverse(const Eigen::VectorXcd& x) const;

private:
    Eigen::Index n_;
    void* fwd_plan_;
    void* bwd_plan_;
};

}  // namespace stfa

#endif  // STFA_FFT_HPP
