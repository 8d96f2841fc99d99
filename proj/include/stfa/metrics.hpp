// SPDX-License-Identifier: Apache-2.0
#ifndef STFA_METRICS_HPP
#define STFA_METRICS_HPP

#include "stfa/types.hpp"

namespace stfa {

/// Concentration measurement sum|TF|^4 / (sum|TF|^2)^2 over all cells
/// (unit cell measure). Scale invariant; larger is more concentrated.
/// Throws std::domain_error on an all-zero grid.
double cm(const Eigen::MatrixXd& tf);
inline double cm(const TFDGrid& tf) { return cm(tf.values); }

/// Renyi entropy in bits of the grid normalized to unit sum:
/// 1/(1-alpha) * log2 sum P^alpha. Lower is sharper.
double renyi(const Eigen::MatrixXd& tf, double alpha = 3.0);
inline double renyi(const TFDGrid& tf, double alpha = 3.0) { return renyi(tf.values, alpha); }

/// PSNR in dB between grids normalized to their own maxima,
/// 10 log10(1 / MSE); +infinity for identical grids.
double psnr(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y_ideal);
inline double psnr(const TFDGrid& x, const TFDGrid& y) { return psnr(x.values, y.values); }

/// Relative error ||x - y||_2 / ||x||_2 (the estimate x in the
/// denominator). Throws std::domain_error when ||x|| = 0.
double rel_err(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y);

/// One comparison row: all four functionals plus a wall-clock time.
struct MetricReport {
    double psnr_db = 0.0;
    double renyi_bits = 0.0;
    double cm = 0.0;
    double re = 0.0;
    double elapsed_s = 0.0;
};

MetricReport evaluate_tfd(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y_ideal,
                          double elapsed_s = 0.0);

}  // namespace stfa

#endif  // STFA_METRICS_HPP
