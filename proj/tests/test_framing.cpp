// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "stfa/framing.hpp"

using namespace stfa;

TEST_SUITE("framing") {

TEST_CASE("gaussian window values and symmetry") {
    const Window w = gaussian_window(11, 2.0);
    REQUIRE(w.m() == 11);
    CHECK(w.weights[5] == 1.0);
    // exp(-25/8)
    CHECK(w.weights[0] == doctest::Approx(0.04393693362340741).epsilon(1e-12));
    for (Eigen::Index k = 0; k < 11; ++k) {
        CHECK(w.weights[k] == doctest::Approx(w.weights[10 - k]).epsilon(1e-15));
        CHECK(w.weights[k] > 0.0);
    }
}

TEST_CASE("very wide window approaches all-ones") {
    const Window w = gaussian_window(3, 1e6);
    for (Eigen::Index k = 0; k < 3; ++k) CHECK(std::abs(w.weights[k] - 1.0) < 1e-6);
}

TEST_CASE("window rejects even or short m") {
    CHECK_THROWS_AS(gaussian_window(4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_window(1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_window(11, 0.0), std::invalid_argument);
}

TEST_CASE("padding surrounds the signal with zeros") {
    ComplexSignal s;
    s.samples.resize(2);
    s.samples << std::complex<double>(1, 2), std::complex<double>(3, 4);
    const Eigen::VectorXcd padded = pad_signal(s, 3);
    REQUIRE(padded.size() == 4);
    CHECK(padded[0] == std::complex<double>(0, 0));
    CHECK(padded[1] == s.samples[0]);
    CHECK(padded[2] == s.samples[1]);
    CHECK(padded[3] == std::complex<double>(0, 0));
    CHECK(padded.squaredNorm() == doctest::Approx(s.samples.squaredNorm()));
}

TEST_CASE("frames center on the original samples") {
    ComplexSignal s;
    s.samples.resize(3);
    s.samples << std::complex<double>(1, 0), std::complex<double>(2, 0),
        std::complex<double>(3, 0);
    const Eigen::VectorXcd padded = pad_signal(s, 3);
    const Frame f0 = extract_frame(padded, 0, 3);
    CHECK(f0.y[0] == std::complex<double>(0, 0));
    CHECK(f0.y[1] == s.samples[0]);
    CHECK(f0.y[2] == s.samples[1]);
    const Frame last = extract_frame(padded, 2, 3);
    CHECK(last.y[2] == std::complex<double>(0, 0));
    for (Eigen::Index i = 0; i < 3; ++i)
        CHECK(extract_frame(padded, i, 3).y[1] == s.samples[i]);
    CHECK_THROWS_AS(extract_frame(padded, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(extract_frame(padded, -1, 3), std::invalid_argument);
}

TEST_CASE("weighting is the componentwise product") {
    Frame f;
    f.y = Eigen::VectorXcd::Ones(3);
    Window w;
    w.weights.resize(3);
    w.weights << 0.5, 1.0, 0.5;
    const Frame out = weight_frame(f, w);
    CHECK(out.y[0] == std::complex<double>(0.5, 0));
    CHECK(out.y[1] == std::complex<double>(1.0, 0));
    CHECK(out.y[2] == std::complex<double>(0.5, 0));

    Window ones;
    ones.weights = Eigen::VectorXd::Ones(3);
    CHECK(weight_frame(f, ones).y == f.y);

    Window bad;
    bad.weights = Eigen::VectorXd::Ones(5);
    CHECK_THROWS_AS(weight_frame(f, bad), std::invalid_argument);
}

TEST_CASE("framing is linear and preserves zero patterns") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const Eigen::Index n = 17, m = 5;
    ComplexSignal a, b;
    a.samples.resize(n);
    b.samples.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a.samples[i] = {dist(rng), dist(rng)};
        b.samples[i] = {dist(rng), dist(rng)};
    }
    ComplexSignal sum;
    sum.samples = 2.0 * a.samples + 3.0 * b.samples;
    const auto pa = pad_signal(a, m), pb = pad_signal(b, m), ps = pad_signal(sum, m);
    const Window w = gaussian_window(m, 1.5);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Frame fa = weight_frame(extract_frame(pa, i, m), w);
        const Frame fb = weight_frame(extract_frame(pb, i, m), w);
        const Frame fs = weight_frame(extract_frame(ps, i, m), w);
        CHECK((fs.y - 2.0 * fa.y - 3.0 * fb.y).norm() < 1e-12);
        for (Eigen::Index k = 0; k < m; ++k)
            if (extract_frame(pa, i, m).y[k] == std::complex<double>(0, 0))
                CHECK(fa.y[k] == std::complex<double>(0, 0));
    }
}

}  // TEST_SUITE
