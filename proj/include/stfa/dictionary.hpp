// SPDX-License-Identifier: Apache-2.0
#ifndef STFA_DICTIONARY_HPP
#define STFA_DICTIONARY_HPP

#include <memory>

#include "stfa/fft.hpp"

namespace stfa {

/// Unnormalized DFT matrix F[a][b] = W^(a*b), W = exp(-2*pi*i/n).
/// Its inverse is conj(F)/n.
Eigen::MatrixXcd dft_matrix(Eigen::Index n);

enum class DictionaryMode {
    kExplicitMatrix,  // dense m x n matrix, reference path
    kFastTransform,   // FFT backed, O(n log n), no dense matrix built
};

/// The partial inverse-DFT dictionary Theta = S * F^-1 mapping a length-n
/// spectrum to the first m samples of its inverse DFT (S = [I O]).
///
/// Key identities (per the conventions above):
///   Theta^H y          = F * zeroext(y) / n
///   Theta Theta^H      = (1/n) I_m
///   Theta^H Theta      = (1/n) F P_m F^-1   with P_m zeroing samples >= m
///
/// Both modes produce identical results; the explicit mode exists as the
/// dense reference the fast path is checked against. Instances are
/// immutable and safe for concurrent use.
class DictionaryOp {
public:
    DictionaryOp(Eigen::Index n, Eigen::Index m, DictionaryMode mode);

    Eigen::Index n() const { return n_; }
    Eigen::Index m() const { return m_; }
    DictionaryMode mode() const { return mode_; }
    const Fft& fft() const { return *fft_; }

    /// Theta x: first m samples of the inverse DFT of x.
    Eigen::VectorXcd apply_theta(const Eigen::VectorXcd& x) const;

    /// Theta^H y: forward DFT of the zero-extended frame, divided by n.
    Eigen::VectorXcd apply_theta_h(const Eigen::VectorXcd& y) const;

    /// Theta^H Theta v.
    Eigen::VectorXcd apply_normal(const Eigen::VectorXcd& v) const;

    /// (Theta^H Theta + beta J)^-1 v.
    ///
    /// Fast mode collapses the Woodbury identity
    ///   (A + B C)^-1 = A^-1 - A^-1 B (I + C A^-1 B)^-1 C A^-1
    /// using Theta Theta^H = (1/n) I_m, so the m x m solve becomes the
    /// scalar 1/(1 + 1/(beta n)). Explicit mode keeps the generic m x m
    /// dense solve as the reference.
    Eigen::VectorXcd regularized_inverse_apply(const Eigen::VectorXcd& v, double beta) const;

private:
    Eigen::Index n_;
    Eigen::Index m_;
    DictionaryMode mode_;
    std::shared_ptr<const Fft> fft_;
    Eigen::MatrixXcd theta_;  // explicit mode only
};

}  // namespace stfa

#endif  // STFA_DICTIONARY_HPP
