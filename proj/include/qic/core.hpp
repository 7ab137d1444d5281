// core.hpp: complex linear algebra substrate: state vectors, density matrices, spectra

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qic {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Validation tolerances shared across modules.
inline constexpr double kNormTol = 1e-9;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kHermitianTol = 1e-12;

/// Raised when an input violates a documented invariant. what() names the invariant.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string invariant, const std::string& detail)
        : std::invalid_argument(invariant + ": " + detail), invariant_(std::move(invariant)) {}

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

/// Raised when the eigensolver fails to converge.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws ValidationError unless re and im are finite.
Complex make_scalar(double re, double im);

/// Normalized state vector. Basis index i (0-based) is the label k = i + 1;
/// in representation contexts the magnetic label is m = k - (1 + N) / 2.
class StateVector {
public:
    // Validates finiteness and unit norm (within kNormTol).
    explicit StateVector(ComplexVector amplitudes);

    // Rescales a nonzero vector to unit norm.
    static StateVector normalized(const ComplexVector& v);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
    const ComplexVector& amplitudes() const noexcept { return amps_; }
    Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

    ComplexMatrix projector() const { return amps_ * amps_.adjoint(); }

private:
    ComplexVector amps_;
};

struct Spectrum {
    std::vector<double> eigenvalues;        // descending
    std::vector<StateVector> eigenvectors;  // orthonormal, aligned with eigenvalues

    // Σ λ_k |v_k⟩⟨v_k|
    ComplexMatrix reconstruct() const;
};

/// Hermitian, unit-trace, positive-semidefinite matrix. The spectrum is computed
/// once during validation and cached.
class DensityMatrix {
public:
    explicit DensityMatrix(const ComplexMatrix& m);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    const ComplexMatrix& matrix() const noexcept { return m_; }
    Complex operator()(std::size_t i, std::size_t j) const {
        return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    const Spectrum& spectrum() const noexcept { return spectrum_; }

private:
    ComplexMatrix m_;
    Spectrum spectrum_;
};

// Hermitian eigendecomposition with descending eigenvalues and a deterministic
// basis inside degenerate subspaces. Does not require unit trace.
Spectrum hermitian_spectrum(const ComplexMatrix& h);

StateVector qubit_state(double theta, double phi);

DensityMatrix density_from_mixture(std::span<const double> weights,
                                   std::span<const StateVector> vectors);

Spectrum spectrum(const DensityMatrix& rho);

using DegeneracyClasses = std::vector<std::vector<std::size_t>>;

// Groups indices whose values agree within rel_tol * max(1, |λ|), closed under
// transitivity. Groups are ordered by their smallest index.
DegeneracyClasses degeneracy_classes(std::span<const double> values, double rel_tol);
DegeneracyClasses degeneracy_classes(const Spectrum& spec, double rel_tol);

double purity(const DensityMatrix& rho);

// max_{ij} |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qic
