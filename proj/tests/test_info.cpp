#include "qic/info.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace qic;
using doctest::Approx;

TEST_CASE("information_content") {
    CHECK(information_content(1.0) == 0.0);
    CHECK(information_content(0.5) == Approx(1.0));
    CHECK(information_content(0.125) == Approx(3.0));
    CHECK_THROWS_AS(information_content(0.0), ValidationError);
    CHECK_THROWS_AS(information_content(1.5), ValidationError);
    CHECK_THROWS_AS(information_content(-0.1), ValidationError);
}

TEST_CASE("shannon_entropy") {
    CHECK(shannon_entropy(ProbabilityDistribution({1.0, 0.0})) == 0.0);
    CHECK(shannon_entropy(ProbabilityDistribution({0.5, 0.5})) == Approx(1.0));
    CHECK(shannon_entropy(ProbabilityDistribution({0.25, 0.25, 0.25, 0.25})) == Approx(2.0));
    CHECK_THROWS_AS(ProbabilityDistribution({0.5, 0.6}), ValidationError);
    CHECK_THROWS_AS(ProbabilityDistribution({1.1, -0.1}), ValidationError);
}

TEST_CASE("shannon_entropy is permutation invariant and bounded") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = qic::testing::random_simplex(rng, 2 + trial % 7);
        const double h = shannon_entropy(ProbabilityDistribution(p));
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(std::abs(shannon_entropy(ProbabilityDistribution(p)) - h) < 1e-12);
        CHECK(h >= 0.0);
        CHECK(h <= std::log2(static_cast<double>(p.size())) + 1e-12);
    }
}

TEST_CASE("binary entropy peaks at 1/2 on a 0.01 grid") {
    int best = -1;
    double best_h = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double p = i / 100.0;
        const double h = shannon_entropy(ProbabilityDistribution({p, 1.0 - p}));
        if (h > best_h) {
            best_h = h;
            best = i;
        }
    }
    CHECK(best == 50);
}

TEST_CASE("spectral_entropy") {
    ComplexMatrix pure = ComplexMatrix::Zero(2, 2);
    pure(1, 1) = 1.0;
    CHECK(spectral_entropy(DensityMatrix(pure)) == Approx(0.0));
    CHECK(spectral_entropy(DensityMatrix(ComplexMatrix::Identity(2, 2) / 2.0)) == Approx(1.0));
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d.diagonal() << 0.75, 0.25;
    CHECK(spectral_entropy(DensityMatrix(d)) == Approx(2.0 - 0.75 * std::log2(3.0)).epsilon(1e-14));
}

TEST_CASE("spectral_entropy is unitarily invariant") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index n = 2 + trial % 5;
        const ComplexMatrix rho = qic::testing::random_density(rng, n, 1 + trial % 3);
        const ComplexMatrix u = qic::testing::random_unitary(rng, n);
        const ComplexMatrix rotated = u * rho * u.adjoint();
        CHECK(std::abs(spectral_entropy(DensityMatrix(rho)) -
                       spectral_entropy(DensityMatrix((rotated + rotated.adjoint()) / 2.0))) < 1e-9);
    }
}
