#include "qic/core.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace qic;
using doctest::Approx;

namespace {

ComplexVector vec2(Complex a, Complex b) {
    ComplexVector v(2);
    v << a, b;
    return v;
}

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

TEST_CASE("qubit_state evaluates the Bloch parametrization") {
    const double r2 = 1.0 / std::sqrt(2.0);
    CHECK(max_abs_diff(qubit_state(0, 0).amplitudes(), vec2(1, 0)) < 1e-15);
    CHECK(max_abs_diff(qubit_state(std::numbers::pi, 0).amplitudes(), vec2(0, 1)) < 1e-15);
    CHECK(max_abs_diff(qubit_state(std::numbers::pi / 2, std::numbers::pi / 2).amplitudes(),
                       vec2(r2, Complex(0, r2))) < 1e-15);
    // periodicity: θ → θ + 4π is the identity
    CHECK(max_abs_diff(qubit_state(0.3 + 4 * std::numbers::pi, 1.1).amplitudes(),
                       qubit_state(0.3, 1.1).amplitudes()) < 1e-12);
}

TEST_CASE("StateVector rejects unnormalized or non-finite input") {
    CHECK_THROWS_AS(StateVector(vec2(1, 1)), ValidationError);
    CHECK_THROWS_AS(StateVector(vec2(std::numeric_limits<double>::quiet_NaN(), 0)), ValidationError);
    CHECK_THROWS_AS(make_scalar(std::numeric_limits<double>::infinity(), 0), ValidationError);
    CHECK_NOTHROW(StateVector(vec2(1 + 1e-10, 0)));
}

TEST_CASE("density_from_mixture") {
    const StateVector e0(vec2(1, 0)), e1(vec2(0, 1));
    const StateVector plus = StateVector::normalized(vec2(1, 1));

    SUBCASE("pure projector") {
        const double w[] = {1.0};
        const StateVector v[] = {e0};
        CHECK(max_abs_diff(density_from_mixture(w, v).matrix(), mat2(1, 0, 0, 0)) < 1e-15);
    }
    SUBCASE("classical mix") {
        const double w[] = {0.5, 0.5};
        const StateVector v[] = {e0, e1};
        CHECK(max_abs_diff(density_from_mixture(w, v).matrix(), mat2(0.5, 0, 0, 0.5)) < 1e-15);
    }
    SUBCASE("non-orthogonal mix") {
        const double w[] = {0.5, 0.5};
        const StateVector v[] = {e0, plus};
        CHECK(max_abs_diff(density_from_mixture(w, v).matrix(), mat2(0.75, 0.25, 0.25, 0.25)) < 1e-15);
    }
    SUBCASE("errors") {
        const double bad_sum[] = {0.5, 0.4};
        const double negative[] = {1.5, -0.5};
        const StateVector v[] = {e0, e1};
        CHECK_THROWS_AS(density_from_mixture(bad_sum, v), ValidationError);
        CHECK_THROWS_AS(density_from_mixture(negative, v), ValidationError);
        const double one[] = {1.0};
        CHECK_THROWS_AS(density_from_mixture(one, v), ValidationError);
        ComplexVector v3 = ComplexVector::Zero(3);
        v3(0) = 1;
        const StateVector mixed_dims[] = {e0, StateVector(v3)};
        const double half[] = {0.5, 0.5};
        CHECK_THROWS_AS(density_from_mixture(half, mixed_dims), ValidationError);
    }
}

TEST_CASE("DensityMatrix validation names the violated invariant") {
    auto invariant_of = [](const ComplexMatrix& m) {
        try {
            DensityMatrix d(m);
        } catch (const ValidationError& e) {
            return e.invariant();
        }
        return std::string("none");
    };
    CHECK(invariant_of(mat2(0.5, 0.1, 0.2, 0.5)) == "hermitian");
    CHECK(invariant_of(mat2(0.5, 0, 0, 0.6)) == "unit trace");
    CHECK(invariant_of(mat2(1.5, 0, 0, -0.5)) == "positive semidefinite");
    CHECK(invariant_of(mat2(0.5, 0, 0, 0.5)) == "none");
}

TEST_CASE("spectrum examples") {
    CHECK(spectrum(DensityMatrix(mat2(0.3, 0, 0, 0.7))).eigenvalues[0] == Approx(0.7).epsilon(1e-14));
    CHECK(spectrum(DensityMatrix(mat2(0.7, 0, 0, 0.3))).eigenvalues[1] == Approx(0.3).epsilon(1e-14));

    const Spectrum mm = spectrum(DensityMatrix(ComplexMatrix::Identity(5, 5) / 5.0));
    for (double l : mm.eigenvalues) CHECK(std::abs(l - 0.2) < 1e-14);

    // characteristic polynomial λ² − λ + 1/8 = 0
    const Spectrum s = spectrum(DensityMatrix(mat2(0.75, 0.25, 0.25, 0.25)));
    CHECK(std::abs(s.eigenvalues[0] - (2 + std::sqrt(2.0)) / 4) < 1e-14);
    CHECK(std::abs(s.eigenvalues[1] - (2 - std::sqrt(2.0)) / 4) < 1e-14);
}

TEST_CASE("spectrum invariants on random states") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 1 + trial % 8;
        const DensityMatrix rho(qic::testing::random_density(rng, n, 1 + trial % 4));
        const Spectrum& s = rho.spectrum();
        double sum = 0.0;
        for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
            sum += s.eigenvalues[k];
            if (k > 0) CHECK(s.eigenvalues[k - 1] >= s.eigenvalues[k]);
        }
        CHECK(std::abs(sum - 1.0) < 1e-9);
        CHECK(max_abs_diff(s.reconstruct(), rho.matrix()) < 1e-9);
        for (std::size_t a = 0; a < s.eigenvectors.size(); ++a) {
            for (std::size_t b = 0; b < s.eigenvectors.size(); ++b) {
                const Complex ip = s.eigenvectors[a].amplitudes().dot(s.eigenvectors[b].amplitudes());
                CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-12);
            }
        }
        double sq = 0.0;
        for (double l : s.eigenvalues) sq += l * l;
        CHECK(std::abs(purity(rho) - sq) < 1e-9);
    }
}

TEST_CASE("mixture of orthonormal vectors recovers its weights") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index n = 2 + trial % 6;
        const ComplexMatrix u = qic::testing::random_unitary(rng, n);
        std::vector<double> w = qic::testing::random_simplex(rng, static_cast<std::size_t>(n));
        std::vector<StateVector> vs;
        for (Eigen::Index k = 0; k < n; ++k) vs.emplace_back(u.col(k));
        const DensityMatrix rho = density_from_mixture(w, vs);
        std::sort(w.rbegin(), w.rend());
        for (std::size_t k = 0; k < w.size(); ++k) CHECK(std::abs(rho.spectrum().eigenvalues[k] - w[k]) < 1e-9);
    }
}

TEST_CASE("degenerate eigenbasis is deterministic") {
    std::mt19937_64 rng(3);
    // same operator, different unitary frames inside the degenerate block
    ComplexMatrix base = ComplexMatrix::Zero(4, 4);
    base.diagonal() << 0.4, 0.4, 0.1, 0.1;
    const Spectrum first = hermitian_spectrum(base);
    ComplexMatrix rot = ComplexMatrix::Identity(4, 4);
    rot.topLeftCorner(2, 2) = qic::testing::random_unitary(rng, 2);
    const Spectrum second = hermitian_spectrum(rot * base * rot.adjoint());
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(max_abs_diff(first.eigenvectors[k].amplitudes(), second.eigenvectors[k].amplitudes()) < 1e-12);
    }
    // standard basis order inside each degenerate block
    CHECK(std::abs(first.eigenvectors[0][0] - 1.0) < 1e-12);
    CHECK(std::abs(first.eigenvectors[1][1] - 1.0) < 1e-12);
}

TEST_CASE("degeneracy_classes") {
    using Classes = DegeneracyClasses;
    const double a[] = {0.5, 0.5, 0.0, 0.0};
    CHECK(degeneracy_classes(a, 1e-9) == Classes{{0, 1}, {2, 3}});
    const double b[] = {1.0, 0.0, 0.0, 0.0};
    CHECK(degeneracy_classes(b, 1e-9) == Classes{{0}, {1, 2, 3}});
    const double c[] = {0.4, 0.4 + 1e-12, 0.2 - 1e-12};
    CHECK(degeneracy_classes(c, 1e-9) == Classes{{0, 1}, {2}});
    // transitive closure joins a chain whose ends differ by more than tol
    const double chain[] = {0.0, 0.6e-9, 1.2e-9};
    CHECK(degeneracy_classes(chain, 1e-9) == Classes{{0, 1, 2}});
    CHECK_THROWS_AS(degeneracy_classes(a, 0.0), ValidationError);
}

TEST_CASE("degeneracy_classes is a partition") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> level(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> v(1 + trial % 9);
        for (double& x : v) x = level(rng) * 0.25;
        const auto groups = degeneracy_classes(v, 1e-9);
        std::vector<int> seen(v.size(), 0);
        for (const auto& g : groups)
            for (auto i : g) ++seen[i];
        for (int s : seen) CHECK(s == 1);
    }
}

TEST_CASE("purity") {
    CHECK(purity(DensityMatrix(mat2(1, 0, 0, 0))) == Approx(1.0));
    CHECK(purity(DensityMatrix(ComplexMatrix::Identity(3, 3) / 3.0)) == Approx(1.0 / 3.0));
    CHECK(purity(DensityMatrix(mat2(0.7, 0, 0, 0.3))) == Approx(0.58));
}
