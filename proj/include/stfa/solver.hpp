// SPDX-License-Identifier: Apache-2.0
#ifndef STFA_SOLVER_HPP
#define STFA_SOLVER_HPP

#include <complex>
#include <vector>

#include "stfa/dictionary.hpp"
#include "stfa/framing.hpp"
#include "stfa/types.hpp"

namespace stfa {

/// Parameters of one ADMM run.
struct SolverParams {
    double p = 0.1;      // quasinorm exponent, in (0, 1]
    double beta = 1.0;   // penalty coefficient
    double mu = 0.5;     // sparsity weight
    double gamma = 1.0;  // dual learning rate
    Eigen::Index m = 11; // window length, odd
    int max_iter = 25;   // fixed iteration count, no early exit

    /// Throws std::invalid_argument naming the offending parameter.
    void validate() const;
};

/// Sparse spectrum recovered for one frame plus the per-iteration
/// primal gap ||x - z||_2 (diagnostic only).
struct FrameSolution {
    Eigen::VectorXcd spectrum;
    std::vector<double> residual_history;
};

/// Complex p-shrinkage: magnitude max{|xi| - tau^(2-p) |xi|^(p-1), 0},
/// phase preserved; shrink_p(0, ., .) = 0. Reduces to soft thresholding
/// at p = 1. Total function (no validation).
std::complex<double> shrink_p(std::complex<double> xi, double tau, double p);

/// Swaps the low and high halves of a spectrum so that the zero-frequency
/// bin lands at index floor(n/2), matching TimeFreqAxes::freqs ordering.
Eigen::VectorXcd fftshift(const Eigen::VectorXcd& v);
Eigen::VectorXd fftshift(const Eigen::VectorXd& v);

/// ADMM on one weighted frame: from x = z = zdual = 0, runs exactly
/// max_iter iterations of
///   x     <- (A^H A + beta J)^-1 (A^H y + beta (z - zdual))
///   z     <- shrink_p(x + zdual, mu/beta)
///   zdual <- zdual + gamma beta (x - z)
/// where A is the dictionary with columns rescaled to unit norm
/// (A = (n/sqrt(m)) Theta), so the x-update reduces to
///   x <- (1/beta) (rhs - c/(beta+c) * G rhs),  c = n/m,
/// with G = F P_m F^-1 the projector onto first-m-sample signals. The
/// returned spectrum is the final sparse iterate z.
FrameSolution admm_frame(const Frame& y, const DictionaryOp& op, const SolverParams& params);

/// Whole-signal analysis: every time index yields one Gaussian-weighted
/// frame, solved independently; column i of the grid is the fftshifted
/// magnitude of the recovered spectrum. Frames may be solved on `threads`
/// workers (0 = hardware concurrency); the result is bitwise independent
/// of the thread count. Frame/solver errors are rethrown with the
/// offending time index attached.
TFDGrid stfa_lps(const ComplexSignal& s, const SolverParams& params, double sigma,
                 int threads = 0);

}  // namespace stfa

#endif  // STFA_SOLVER_HPP
