// SPDX-License-Identifier: Apache-2.0
#include "stfa/dictionary.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace stfa {

Eigen::MatrixXcd dft_matrix(Eigen::Index n) {
    if (n < 1) throw std::invalid_argument("dft_matrix: n must be >= 1");
    Eigen::MatrixXcd f(n, n);
    const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            // exponent reduced mod n to keep the angle small
            const double angle = step * static_cast<double>((a * b) % n);
            f(a, b) = {std::cos(angle), std::sin(angle)};
        }
    }
    return f;
}

DictionaryOp::DictionaryOp(Eigen::Index n, Eigen::Index m, DictionaryMode mode)
    : n_(n), m_(m), mode_(mode), fft_(std::make_shared<Fft>(n > 0 ? n : 1)) {
    if (n < 1) throw std::invalid_argument("DictionaryOp: n must be >= 1");
    if (m < 1 || m > n) throw std::invalid_argument("DictionaryOp: need 1 <= m <= n");
    if (m % 2 == 0) throw std::invalid_argument("DictionaryOp: m must be odd");
    if (mode_ == DictionaryMode::kExplicitMatrix) {
        const Eigen::MatrixXcd f_inv = dft_matrix(n).conjugate() / static_cast<double>(n);
        theta_ = f_inv.topRows(m);  // S = [I O] selects the first m rows
    }
}

Eigen::VectorXcd DictionaryOp::apply_theta(const Eigen::VectorXcd& x) const {
    if (x.size() != n_) throw std::invalid_argument("apply_theta: length mismatch");
    if (mode_ == DictionaryMode::kExplicitMatrix) return theta_ * x;
    return fft_->inverse(x).head(m_);
}

Eigen::VectorXcd DictionaryOp::apply_theta_h(const Eigen::VectorXcd& y) const {
    if (y.size() != m_) throw std::invalid_argument("apply_theta_h: length mismatch");
    if (mode_ == DictionaryMode::kExplicitMatrix) return theta_.adjoint() * y;
    Eigen::VectorXcd ext = Eigen::VectorXcd::Zero(n_);
    ext.head(m_) = y;
    return fft_->forward(ext) / static_cast<double>(n_);
}

Eigen::VectorXcd DictionaryOp::apply_normal(const Eigen::VectorXcd& v) const {
    if (v.size() != n_) throw std::invalid_argument("apply_normal: length mismatch");
    if (mode_ == DictionaryMode::kExplicitMatrix) return theta_.adjoint() * (theta_ * v);
    Eigen::VectorXcd t = fft_->backward(v);
    t.tail(n_ - m_).setZero();
    return fft_->forward(t) / (static_cast<double>(n_) * static_cast<double>(n_));
}

Eigen::VectorXcd DictionaryOp::regularized_inverse_apply(const Eigen::VectorXcd& v,
                                                         double beta) const {
    if (beta <= 0.0)
        throw std::invalid_argument("regularized_inverse_apply: beta must be positive");
    if (v.size() != n_) throw std::invalid_argument("regularized_inverse_apply: length mismatch");
    const double nd = static_cast<double>(n_);
    if (mode_ == DictionaryMode::kExplicitMatrix) {
        // generic Woodbury with the m x m solve kept dense
        Eigen::MatrixXcd small = Eigen::MatrixXcd::Identity(m_, m_) +
                                 (theta_ * theta_.adjoint()) / beta;
        Eigen::VectorXcd w = small.llt().solve(theta_ * v);
        return v / beta - (theta_.adjoint() * w) / (beta * beta);
    }
    // Theta Theta^H = (1/n) I_m collapses the m x m solve to a scalar:
    // result = v/beta - Theta^H Theta v * n / (beta (beta n + 1))
    Eigen::VectorXcd t = fft_->backward(v);
    t.tail(n_ - m_).setZero();
    const double scale = 1.0 / (beta * nd * (beta * nd + 1.0));
    return v / beta - fft_->forward(t) * scale;
}

}  // namespace stfa
