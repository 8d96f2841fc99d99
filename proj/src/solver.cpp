// SPDX-License-Identifier: Apache-2.0
#include "stfa/solver.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"

namespace stfa {

void SolverParams::validate() const {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in (0, 1]");
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    if (mu <= 0.0) throw std::invalid_argument("mu must be positive");
    if (gamma <= 0.0) throw std::invalid_argument("gamma must be positive");
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("m must be odd and >= 3");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
}

std::complex<double> shrink_p(std::complex<double> xi, double tau, double p) {
    const double mag = std::abs(xi);
    if (mag == 0.0) return {0.0, 0.0};
    const double shrunk = mag - std::pow(tau, 2.0 - p) * std::pow(mag, p - 1.0);
    if (shrunk <= 0.0) return {0.0, 0.0};
    return xi * (shrunk / mag);  // rescaling the input keeps the phase exact
}

Eigen::VectorXcd fftshift(const Eigen::VectorXcd& v) {
    const Eigen::Index n = v.size();
    const Eigen::Index shift = (n + 1) / 2;
    Eigen::VectorXcd out(n);
    for (Eigen::Index j = 0; j < n; ++j) out[j] = v[(j + shift) % n];
    return out;
}

Eigen::VectorXd fftshift(const Eigen::VectorXd& v) {
    const Eigen::Index n = v.size();
    const Eigen::Index shift = (n + 1) / 2;
    Eigen::VectorXd out(n);
    for (Eigen::Index j = 0; j < n; ++j) out[j] = v[(j + shift) % n];
    return out;
}

namespace {

// G v = F P_m F^-1 v: projector onto spectra of signals supported on the
// first m time samples.
Eigen::VectorXcd project_first_m(const Fft& fft, const Eigen::VectorXcd& v, Eigen::Index m) {
    Eigen::VectorXcd t = fft.backward(v);
    t.tail(fft.size() - m).setZero();
    return fft.forward(t) / static_cast<double>(fft.size());
}

}  // namespace

FrameSolution admm_frame(const Frame& y, const DictionaryOp& op, const SolverParams& params) {
    params.validate();
    const Eigen::Index n = op.n();
    const Eigen::Index m = op.m();
    if (y.y.size() != m) throw std::invalid_argument("admm_frame: frame length != op.m");

    // Unit-norm synthesis atoms: A = (n/sqrt(m)) Theta, so A^H A = (n/m) G
    // and A^H y is the plain DFT of the zero-extended frame over sqrt(m).
    const double c = static_cast<double>(n) / static_cast<double>(m);
    Eigen::VectorXcd ext = Eigen::VectorXcd::Zero(n);
    ext.head(m) = y.y;
    const Eigen::VectorXcd data = op.fft().forward(ext) / std::sqrt(static_cast<double>(m));

    const double beta = params.beta;
    const double tau = params.mu / beta;
    const double xgain = c / (beta + c);

    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n);
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(n);
    Eigen::VectorXcd zdual = Eigen::VectorXcd::Zero(n);

    FrameSolution sol;
    sol.residual_history.reserve(static_cast<size_t>(params.max_iter));
    for (int k = 0; k < params.max_iter; ++k) {
        const Eigen::VectorXcd rhs = data + beta * (z - zdual);
        x = (rhs - xgain * project_first_m(op.fft(), rhs, m)) / beta;
        for (Eigen::Index j = 0; j < n; ++j) z[j] = shrink_p(x[j] + zdual[j], tau, params.p);
        zdual += params.gamma * beta * (x - z);
        sol.residual_history.push_back((x - z).norm());
    }
    sol.spectrum = std::move(z);
    return sol;
}

TFDGrid stfa_lps(const ComplexSignal& s, const SolverParams& params, double sigma, int threads) {
    params.validate();
    const Eigen::Index n = s.size();
    if (n < params.m)
        throw std::invalid_argument("stfa_lps: signal shorter than the window");
    if (sigma <= 0.0) throw std::invalid_argument("stfa_lps: sigma must be positive");

    const Window window = gaussian_window(params.m, sigma);
    const Eigen::VectorXcd padded = pad_signal(s, params.m);
    const DictionaryOp op(n, params.m, DictionaryMode::kFastTransform);

    TFDGrid grid;
    grid.axes = TimeFreqAxes::for_signal(s);
    grid.values.resize(n, n);

    detail::parallel_for_index(n, threads, [&](Eigen::Index i) {
        try {
            const Frame frame = weight_frame(extract_frame(padded, i, params.m), window);
            const FrameSolution sol = admm_frame(frame, op, params);
            grid.values.col(i) = fftshift(Eigen::VectorXd(sol.spectrum.cwiseAbs()));
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "stfa_lps: frame at time index " << i << ": " << e.what();
            throw std::runtime_error(msg.str());
        }
    });
    return grid;
}

}  // namespace stfa
