#include "qic/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace qic {

namespace {

// Eigenvalues closer than this are treated as one subspace when building the
// deterministic eigenbasis.
constexpr double kSubspaceTol = 1e-10;
constexpr double kPhaseTol = 1e-10;

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

bool all_finite(const ComplexMatrix& m) {
    return m.array().real().allFinite() && m.array().imag().allFinite();
}

// Rotate the global phase so the first non-negligible component is real positive.
void fix_phase(ComplexVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > kPhaseTol) {
            v *= std::conj(v(i)) / std::abs(v(i));
            v(i) = std::abs(v(i));
            return;
        }
    }
}

// Descending lexicographic order on (re, im) of the components.
bool lex_greater(const ComplexVector& a, const ComplexVector& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double dr = a(i).real() - b(i).real();
        if (std::abs(dr) > kPhaseTol) return dr > 0;
        const double di = a(i).imag() - b(i).imag();
        if (std::abs(di) > kPhaseTol) return di > 0;
    }
    return false;
}

// Replaces the solver's arbitrary basis of a degenerate subspace by the
// pivoted Gram-Schmidt image of the standard basis vectors.
std::vector<ComplexVector> canonical_subspace_basis(const ComplexMatrix& vecs) {
    const Eigen::Index dim = vecs.rows();
    const Eigen::Index rank = vecs.cols();
    const ComplexMatrix proj = vecs * vecs.adjoint();

    std::vector<ComplexVector> basis;
    std::vector<bool> used(static_cast<std::size_t>(dim), false);
    while (static_cast<Eigen::Index>(basis.size()) < rank) {
        Eigen::Index best = -1;
        double best_norm = -1.0;
        ComplexVector best_vec;
        for (Eigen::Index i = 0; i < dim; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            ComplexVector r = proj.col(i);
            for (const auto& b : basis) r -= b * b.dot(r);
            const double n = r.norm();
            if (n > best_norm + 1e-12) {
                best_norm = n;
                best = i;
                best_vec = std::move(r);
            }
        }
        used[static_cast<std::size_t>(best)] = true;
        best_vec /= best_norm;
        // second pass keeps the set orthonormal to machine precision
        for (const auto& b : basis) best_vec -= b * b.dot(best_vec);
        best_vec.normalize();
        basis.push_back(std::move(best_vec));
    }
    return basis;
}

}  // namespace

Complex make_scalar(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ValidationError("finite scalar", "non-finite complex component");
    }
    return {re, im};
}

StateVector::StateVector(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() == 0) throw ValidationError("positive dimension", "empty state vector");
    if (!all_finite(amps_)) throw ValidationError("finite scalar", "state vector has non-finite entries");
    const double n = amps_.norm();
    if (std::abs(n - 1.0) > kNormTol) {
        throw ValidationError("unit norm", "state vector norm is " + fmt_double(n));
    }
}

StateVector StateVector::normalized(const ComplexVector& v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw ValidationError("unit norm", "cannot normalize zero vector");
    return StateVector(v / n);
}

ComplexMatrix Spectrum::reconstruct() const {
    const auto n = static_cast<Eigen::Index>(eigenvectors.empty() ? 0 : eigenvectors.front().dim());
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
        m += eigenvalues[k] * eigenvectors[k].projector();
    }
    return m;
}

Spectrum hermitian_spectrum(const ComplexMatrix& h) {
    if (h.rows() != h.cols() || h.rows() == 0) {
        throw ValidationError("square matrix", "expected a nonempty square matrix");
    }
    const ComplexMatrix herm = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("hermitian_spectrum: eigensolver did not converge");
    }
    const Eigen::Index n = h.rows();
    const Eigen::VectorXd& vals = solver.eigenvalues();  // ascending
    const ComplexMatrix& vecs = solver.eigenvectors();

    Spectrum out;
    out.eigenvalues.reserve(static_cast<std::size_t>(n));
    out.eigenvectors.reserve(static_cast<std::size_t>(n));

    Eigen::Index hi = n - 1;
    while (hi >= 0) {
        Eigen::Index lo = hi;
        while (lo > 0 && std::abs(vals(lo - 1) - vals(hi)) <= kSubspaceTol * std::max(1.0, std::abs(vals(hi)))) {
            --lo;
        }
        const Eigen::Index size = hi - lo + 1;
        std::vector<ComplexVector> group;
        if (size == 1) {
            group.push_back(vecs.col(hi));
        } else {
            group = canonical_subspace_basis(vecs.middleCols(lo, size));
        }
        for (auto& v : group) fix_phase(v);
        std::stable_sort(group.begin(), group.end(), lex_greater);
        for (Eigen::Index k = hi; k >= lo; --k) {
            out.eigenvalues.push_back(vals(k));
        }
        for (auto& v : group) out.eigenvectors.emplace_back(StateVector::normalized(v));
        hi = lo - 1;
    }
    return out;
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw ValidationError("square matrix", "density matrix must be nonempty and square");
    }
    if (!all_finite(m)) throw ValidationError("finite scalar", "density matrix has non-finite entries");
    const double herm = max_abs_diff(m, m.adjoint());
    if (herm > kHermitianTol) {
        throw ValidationError("hermitian", "max |rho - rho^dagger| = " + fmt_double(herm));
    }
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw ValidationError("unit trace", "trace is " + fmt_double(tr));
    }
    m_ = (m + m.adjoint()) / 2.0;
    spectrum_ = hermitian_spectrum(m_);
    const double min_eig = spectrum_.eigenvalues.back();
    if (min_eig < -kPsdTol) {
        throw ValidationError("positive semidefinite", "minimum eigenvalue " + fmt_double(min_eig));
    }
}

StateVector qubit_state(double theta, double phi) {
    ComplexVector v(2);
    v << std::cos(theta / 2.0), std::polar(1.0, phi) * std::sin(theta / 2.0);
    return StateVector(std::move(v));
}

DensityMatrix density_from_mixture(std::span<const double> weights,
                                   std::span<const StateVector> vectors) {
    if (weights.size() != vectors.size()) {
        throw ValidationError("dimension match", "weights and vectors differ in length");
    }
    if (vectors.empty()) throw ValidationError("nonempty mixture", "no components given");
    const std::size_t dim = vectors.front().dim();
    double total = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (vectors[k].dim() != dim) {
            throw ValidationError("dimension match", "mixture vectors have differing dimensions");
        }
        if (!std::isfinite(weights[k]) || weights[k] < 0.0) {
            throw ValidationError("nonnegative weight", "weight " + std::to_string(k) + " is negative");
        }
        total += weights[k];
    }
    if (std::abs(total - 1.0) > kNormTol) {
        throw ValidationError("weights sum to 1", "sum is " + fmt_double(total));
    }
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix rho = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k < weights.size(); ++k) {
        rho += weights[k] * vectors[k].projector();
    }
    return DensityMatrix(rho);
}

Spectrum spectrum(const DensityMatrix& rho) { return rho.spectrum(); }

DegeneracyClasses degeneracy_classes(std::span<const double> values, double rel_tol) {
    if (!(rel_tol > 0.0)) throw ValidationError("positive tolerance", "rel_tol must be > 0");
    const std::size_t n = values.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(values[i] - values[j]) <= rel_tol * std::max(1.0, std::abs(values[i]))) {
                const auto ri = find(i);
                const auto rj = find(j);
                if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
            }
        }
    }
    DegeneracyClasses groups;
    std::vector<std::ptrdiff_t> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<std::ptrdiff_t>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return groups;
}

DegeneracyClasses degeneracy_classes(const Spectrum& spec, double rel_tol) {
    return degeneracy_classes(std::span<const double>(spec.eigenvalues), rel_tol);
}

double purity(const DensityMatrix& rho) {
    // tr(ρ²) = Σ |ρ_ij|² for Hermitian ρ
    return rho.matrix().squaredNorm();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError("dimension match", "matrices differ in shape");
    }
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

}  // namespace qic
