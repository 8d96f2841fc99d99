// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stfa/signal_model.hpp"
#include "stfa/solver.hpp"
#include "stfa/stft.hpp"

using namespace stfa;

TEST_SUITE("stft") {

TEST_CASE("constant signal peaks at the zero-frequency row everywhere") {
    ComplexSignal s;
    s.samples = Eigen::VectorXcd::Ones(64);
    s.fs = 16.0;
    s.t0 = 0.0;
    const TFDGrid grid = stft(s, gaussian_window(11, 2.0), 64, 1);
    REQUIRE(grid.values.rows() == 64);
    REQUIRE(grid.values.cols() == 64);
    CHECK(grid.values.minCoeff() >= 0.0);
    for (Eigen::Index i = 0; i < 64; ++i) {
        Eigen::Index row = -1;
        grid.values.col(i).maxCoeff(&row);
        CHECK(row == 32);
    }
}

TEST_CASE("pure tone at -4 Hz peaks at the right bin") {
    const Eigen::Index n = 256;
    ComplexSignal s;
    s.fs = 16.0;
    s.t0 = -8.0;
    s.samples.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double t = s.t0 + static_cast<double>(k) / s.fs;
        const double phase = -8.0 * std::numbers::pi * t;
        s.samples[k] = {std::cos(phase), std::sin(phase)};
    }
    const TFDGrid grid = stft(s, gaussian_window(11, 2.0), n, 0);
    const Eigen::Index target = nearest_freq_bin(grid.axes, -4.0);
    CHECK(target == 64);
    for (Eigen::Index i = 5; i < n - 5; ++i) {
        Eigen::Index row = -1;
        grid.values.col(i).maxCoeff(&row);
        CHECK(row == target);
    }
}

TEST_CASE("column energy is invariant under fftshift") {
    const ComplexSignal s = gen_lfm(-8.0, 16.0, 64);
    const TFDGrid grid = stft(s, gaussian_window(11, 2.0), 64, 1);
    // the unshifted magnitudes of column 32 have the same energy
    for (Eigen::Index i : {0L, 32L, 63L}) {
        const Eigen::VectorXd col = grid.values.col(i);
        const Eigen::VectorXd unshifted = fftshift(fftshift(col));  // even n: identity
        CHECK(col.squaredNorm() == doctest::Approx(unshifted.squaredNorm()));
    }
}

TEST_CASE("thread count does not change the result") {
    const ComplexSignal s = gen_multicomponent(-8.0, 16.0, 64);
    const Window w = gaussian_window(11, 2.0);
    CHECK(stft(s, w, 64, 1).values == stft(s, w, 64, 4).values);
}

TEST_CASE("window/transform size constraints") {
    ComplexSignal s;
    s.samples = Eigen::VectorXcd::Ones(8);
    CHECK_THROWS_AS(stft(s, gaussian_window(11, 2.0), 8, 1), std::invalid_argument);
    CHECK_THROWS_AS(stft(s, gaussian_window(5, 1.0), 16, 1), std::invalid_argument);
}

}  // TEST_SUITE
