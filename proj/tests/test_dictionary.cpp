// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <complex>
#include <random>

#include "stfa/dictionary.hpp"

using namespace stfa;

namespace {

Eigen::VectorXcd random_cvec(Eigen::Index n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = {dist(rng), dist(rng)};
    return v;
}

// dense Theta = S F^-1 built directly from the matrix definitions
Eigen::MatrixXcd dense_theta(Eigen::Index n, Eigen::Index m) {
    return (dft_matrix(n).conjugate() / static_cast<double>(n)).topRows(m);
}

}  // namespace

TEST_SUITE("dictionary") {

TEST_CASE("dft matrix small cases") {
    CHECK(dft_matrix(1)(0, 0) == std::complex<double>(1, 0));
    const Eigen::MatrixXcd f2 = dft_matrix(2);
    CHECK(std::abs(f2(0, 0) - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(f2(0, 1) - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(f2(1, 0) - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(f2(1, 1) - std::complex<double>(-1, 0)) < 1e-15);
}

TEST_CASE("conj(F)/n inverts F") {
    const Eigen::Index n = 8;
    const Eigen::MatrixXcd f = dft_matrix(n);
    const Eigen::MatrixXcd prod = f * (f.conjugate() / static_cast<double>(n));
    CHECK((prod - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("theta of all-ones and of an impulse") {
    for (auto mode : {DictionaryMode::kExplicitMatrix, DictionaryMode::kFastTransform}) {
        const DictionaryOp op(4, 3, mode);
        const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(4);
        const Eigen::VectorXcd out = op.apply_theta(ones);
        REQUIRE(out.size() == 3);
        CHECK(std::abs(out[0] - std::complex<double>(1, 0)) < 1e-14);
        CHECK(std::abs(out[1]) < 1e-14);
        CHECK(std::abs(out[2]) < 1e-14);

        Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(4);
        e0[0] = 1.0;
        const Eigen::VectorXcd imp = op.apply_theta(e0);
        for (Eigen::Index k = 0; k < 3; ++k)
            CHECK(std::abs(imp[k] - std::complex<double>(0.25, 0)) < 1e-14);
    }
}

TEST_CASE("theta is linear") {
    std::mt19937 rng(11);
    const DictionaryOp op(16, 5, DictionaryMode::kFastTransform);
    const Eigen::VectorXcd x1 = random_cvec(16, rng), x2 = random_cvec(16, rng);
    const std::complex<double> a(0.7, -0.3), b(-1.1, 0.4);
    const Eigen::VectorXcd lhs = op.apply_theta(a * x1 + b * x2);
    const Eigen::VectorXcd rhs = a * op.apply_theta(x1) + b * op.apply_theta(x2);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("adjoint identity <Theta x, y> == <x, Theta^H y>") {
    std::mt19937 rng(12);
    for (auto mode : {DictionaryMode::kExplicitMatrix, DictionaryMode::kFastTransform}) {
        const DictionaryOp op(16, 5, mode);
        for (int trial = 0; trial < 10; ++trial) {
            const Eigen::VectorXcd x = random_cvec(16, rng);
            const Eigen::VectorXcd y = random_cvec(5, rng);
            const std::complex<double> lhs = op.apply_theta(x).dot(y);
            const std::complex<double> rhs = x.dot(op.apply_theta_h(y));
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("theta_h of zeros is zeros") {
    const DictionaryOp op(8, 3, DictionaryMode::kFastTransform);
    CHECK(op.apply_theta_h(Eigen::VectorXcd::Zero(3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("explicit and fast modes agree") {
    std::mt19937 rng(13);
    const DictionaryOp fast(16, 5, DictionaryMode::kFastTransform);
    const DictionaryOp expl(16, 5, DictionaryMode::kExplicitMatrix);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::VectorXcd x = random_cvec(16, rng);
        const Eigen::VectorXcd y = random_cvec(5, rng);
        CHECK((fast.apply_theta(x) - expl.apply_theta(x)).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((fast.apply_theta_h(y) - expl.apply_theta_h(y)).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((fast.regularized_inverse_apply(x, 0.7) - expl.regularized_inverse_apply(x, 0.7))
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
    }
}

TEST_CASE("regularized inverse matches a dense solve") {
    std::mt19937 rng(14);
    const Eigen::Index n = 16, m = 5;
    const double beta = 1.0;
    const Eigen::MatrixXcd theta = dense_theta(n, m);
    const Eigen::MatrixXcd full =
        theta.adjoint() * theta + beta * Eigen::MatrixXcd::Identity(n, n);
    for (auto mode : {DictionaryMode::kExplicitMatrix, DictionaryMode::kFastTransform}) {
        const DictionaryOp op(n, m, mode);
        const Eigen::VectorXcd v = random_cvec(n, rng);
        const Eigen::VectorXcd expected = full.fullPivLu().solve(v);
        CHECK((op.regularized_inverse_apply(v, beta) - expected).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("Theta Theta^H is I/n") {
    const Eigen::Index n = 8, m = 3;
    const Eigen::MatrixXcd theta = dense_theta(n, m);
    const Eigen::MatrixXcd gram = theta * theta.adjoint();
    const Eigen::MatrixXcd expected =
        Eigen::MatrixXcd::Identity(m, m) / static_cast<double>(n);
    CHECK((gram - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("m = n collapses to a diagonal closed form") {
    std::mt19937 rng(15);
    const Eigen::Index n = 15;  // odd so m = n is a valid odd window
    const double beta = 0.8;
    const DictionaryOp op(n, n, DictionaryMode::kFastTransform);
    const Eigen::VectorXcd v = random_cvec(n, rng);
    const Eigen::VectorXcd expected = v / (1.0 / static_cast<double>(n) + beta);
    CHECK((op.regularized_inverse_apply(v, beta) - expected).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("applying the regularized matrix to its inverse restores the input") {
    std::mt19937 rng(16);
    for (const double beta : {0.1, 1.0, 10.0}) {
        for (const Eigen::Index n : {8, 16, 32}) {
            const Eigen::Index m = n / 2 - 1;  // odd for even n
            const DictionaryOp op(n, m, DictionaryMode::kFastTransform);
            const Eigen::VectorXcd v = random_cvec(n, rng);
            const Eigen::VectorXcd inv = op.regularized_inverse_apply(v, beta);
            const Eigen::VectorXcd back = op.apply_normal(inv) + beta * inv;
            CHECK((back - v).cwiseAbs().maxCoeff() < 1e-8);
        }
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(DictionaryOp(8, 4, DictionaryMode::kFastTransform), std::invalid_argument);
    CHECK_THROWS_AS(DictionaryOp(8, 9, DictionaryMode::kFastTransform), std::invalid_argument);
    const DictionaryOp op(8, 3, DictionaryMode::kFastTransform);
    CHECK_THROWS_AS(op.apply_theta(Eigen::VectorXcd::Zero(4)), std::invalid_argument);
    CHECK_THROWS_AS(op.apply_theta_h(Eigen::VectorXcd::Zero(4)), std::invalid_argument);
    CHECK_THROWS_AS(op.regularized_inverse_apply(Eigen::VectorXcd::Zero(8), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(op.regularized_inverse_apply(Eigen::VectorXcd::Zero(8), -1.0),
                    std::invalid_argument);
}

}  // TEST_SUITE
