// SPDX-License-Identifier: Apache-2.0
#include "stfa/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace stfa {

double cm(const Eigen::MatrixXd& tf) {
    const double e2 = tf.array().square().sum();
    if (e2 == 0.0) throw std::domain_error("cm: all-zero grid");
    const double e4 = tf.array().square().square().sum();
    return e4 / (e2 * e2);
}

double renyi(const Eigen::MatrixXd& tf, double alpha) {
    if (alpha == 1.0) throw std::invalid_argument("renyi: alpha must differ from 1");
    const double total = tf.sum();
    if (total == 0.0) throw std::domain_error("renyi: all-zero grid");
    const double s = (tf.array() / total).pow(alpha).sum();
    return std::log2(s) / (1.0 - alpha);
}

double psnr(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y_ideal) {
    if (x.rows() != y_ideal.rows() || x.cols() != y_ideal.cols())
        throw std::invalid_argument("psnr: shape mismatch");
    if (y_ideal.maxCoeff() == 0.0) throw std::domain_error("psnr: all-zero reference grid");
    const double xmax = x.maxCoeff();
    const Eigen::MatrixXd xn = xmax > 0.0 ? Eigen::MatrixXd(x / xmax) : x;
    const Eigen::MatrixXd yn = y_ideal / y_ideal.maxCoeff();
    const double mse = (xn - yn).array().square().mean();
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(1.0 / mse);
}

double rel_err(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("rel_err: shape mismatch");
    const double nx = x.norm();
    if (nx == 0.0) throw std::domain_error("rel_err: zero-norm estimate");
    return (x - y).norm() / nx;
}

MetricReport evaluate_tfd(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y_ideal,
                          double elapsed_s) {
    MetricReport r;
    r.psnr_db = psnr(x, y_ideal);
    r.renyi_bits = renyi(x);
    r.cm = cm(x);
    r.re = rel_err(x, y_ideal);
    r.elapsed_s = elapsed_s;
    return r;
}

}  // namespace stfa
