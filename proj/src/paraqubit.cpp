#include "qic/paraqubit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qic {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Spectral weights below this are solver noise on an exact zero.
constexpr double kSpectralClip = 1e-14;

StateVector basis_vector(Eigen::Index i) {
    ComplexVector v = ComplexVector::Zero(4);
    v(i) = 1.0;
    return StateVector(std::move(v));
}

}  // namespace

SingletTriplet singlet_triplet_basis() {
    ComplexVector s(4), z(4);
    s << 0.0, -kInvSqrt2, kInvSqrt2, 0.0;
    z << 0.0, kInvSqrt2, kInvSqrt2, 0.0;
    return {StateVector(s), basis_vector(0), StateVector(z), basis_vector(3)};
}

TripletCoefficients::TripletCoefficients(Complex a_, Complex b_, Complex c_) : a(a_), b(b_), c(c_) {
    const double n = std::norm(a) + std::norm(b) + std::norm(c);
    if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTol) {
        throw ValidationError("unit norm", "|a|^2 + |b|^2 + |c|^2 = " + std::to_string(n));
    }
}

StateVector TripletCoefficients::assemble() const {
    ComplexVector v(4);
    v << a, b * kInvSqrt2, b * kInvSqrt2, c;
    return StateVector(std::move(v));
}

TripletCoefficients triplet_product_family(Complex k) {
    if (!std::isfinite(k.real()) || !std::isfinite(k.imag())) {
        throw ValidationError("finite scalar", "family parameter must be finite; use the point at infinity");
    }
    const double c = 1.0 / (1.0 + std::norm(k));
    return {k * k * c, std::sqrt(2.0) * k * c, Complex(c, 0.0)};
}

TripletCoefficients triplet_product_family_at_infinity() { return {1.0, 0.0, 0.0}; }

bool is_product_triplet(const TripletCoefficients& t, double tol) {
    return std::abs(t.b * t.b - 2.0 * t.a * t.c) <= tol;
}

ParaqubitWeights::ParaqubitWeights(double s, double zero, double d, double u) : p_s(s), p_0(zero), p_d(d), p_u(u) {
    for (double p : {p_s, p_0, p_d, p_u}) {
        if (!std::isfinite(p) || p < 0.0) throw ValidationError("nonnegative weight", "paraqubit weight < 0");
    }
    const double total = p_s + p_0 + p_d + p_u;
    if (std::abs(total - 1.0) > kNormTol) {
        throw ValidationError("weights sum to 1", "paraqubit weights sum to " + std::to_string(total));
    }
}

CoupledWeights ParaqubitWeights::to_coupled() const {
    return CoupledWeights(SpinLabel(1), SpinLabel(1), {{0, 0, p_s}, {2, -2, p_d}, {2, 0, p_0}, {2, 2, p_u}});
}

BipartiteState paraqubit_density(const ParaqubitWeights& w) {
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = w.p_d;
    rho(1, 1) = rho(2, 2) = (w.p_0 + w.p_s) / 2.0;
    rho(3, 3) = w.p_u;
    rho(1, 2) = rho(2, 1) = (w.p_0 - w.p_s) / 2.0;
    return {BipartiteDims(2, 2), DensityMatrix(rho)};
}

bool degeneracy_criterion(const ParaqubitWeights& w, double tol) { return std::abs(w.p_s - w.p_0) <= tol; }

double concurrence(const BipartiteState& state) {
    if (state.dims() != BipartiteDims(2, 2)) {
        throw ValidationError("two-qubit dims", "concurrence needs dims (2,2)");
    }
    // λ_i are the singular values of τ_ij = ψ_i^T (σy⊗σy) ψ_j over the
    // subnormalized eigen-ensemble ψ_i = √μ_i v_i.
    Eigen::Matrix4d flip = Eigen::Matrix4d::Zero();
    flip(0, 3) = flip(3, 0) = -1.0;
    flip(1, 2) = flip(2, 1) = 1.0;

    const Spectrum& spec = state.rho().spectrum();
    ComplexMatrix psi(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        const double mu = spec.eigenvalues[static_cast<std::size_t>(i)];
        const double w = mu > kSpectralClip ? std::sqrt(mu) : 0.0;
        psi.col(i) = w * spec.eigenvectors[static_cast<std::size_t>(i)].amplitudes();
    }
    const ComplexMatrix tau = psi.transpose() * flip.cast<Complex>() * psi;
    Eigen::JacobiSVD<ComplexMatrix> svd(tau);
    const Eigen::VectorXd& l = svd.singularValues();
    return std::clamp(l(0) - l(1) - l(2) - l(3), 0.0, 1.0);
}

double concurrence_closed_form(const ParaqubitWeights& w) {
    return std::max(0.0, std::abs(w.p_0 - w.p_s) - 2.0 * std::sqrt(w.p_d * w.p_u));
}

ScanReport phase_diagram_scan(double resolution, double tol) {
    if (!(resolution > 0.0) || resolution > 0.25) {
        throw ValidationError("resolution range", "resolution must lie in (0, 0.25]");
    }
    ScanReport report;
    report.steps = static_cast<std::size_t>(std::llround(1.0 / resolution));
    report.resolution = 1.0 / static_cast<double>(report.steps);
    const std::size_t n = report.steps;
    const double dn = static_cast<double>(n);

    for (std::size_t is = 0; is <= n; ++is) {
        for (std::size_t i0 = 0; is + i0 <= n; ++i0) {
            for (std::size_t id = 0; is + i0 + id <= n; ++id) {
                const std::size_t iu = n - is - i0 - id;
                ScanPoint pt;
                pt.weights = ParaqubitWeights(is / dn, i0 / dn, id / dn, iu / dn);
                const BipartiteState state = paraqubit_density(pt.weights);
                pt.criterion = degeneracy_criterion(pt.weights, tol);
                pt.concurrence = concurrence(state);
                pt.concurrence_closed_form = concurrence_closed_form(pt.weights);
                const ChannelClass cls = classify(state, tol);
                pt.ppt_min_eigenvalue = cls.ppt_min_eigenvalue;
                pt.label = cls.label;
                const double w[] = {pt.weights.p_s, pt.weights.p_0, pt.weights.p_d, pt.weights.p_u};
                pt.degeneracy = degeneracy_classes(w, tol);
                report.points.push_back(std::move(pt));
            }
        }
    }

    ScanSummary& sum = report.summary;
    sum.points = report.points.size();
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        const ScanPoint& pt = report.points[i];
        const bool sep = pt.oracle_separable();
        if (pt.criterion && sep) ++sum.agree_separable;
        if (!pt.criterion && !sep) ++sum.agree_entangled;
        if (!pt.criterion && sep) ++sum.criterion_gap;
        if (pt.criterion && !sep) ++sum.criterion_violations;
        if (pt.criterion != sep) report.disagreements.push_back(i);

        if (!pt.criterion && !sep) {
            const bool other_pair = std::any_of(pt.degeneracy.begin(), pt.degeneracy.end(),
                                                [](const auto& g) { return g.size() >= 2; });
            if (other_pair) ++sum.other_pair_entangled;
        }
    }
    return report;
}

}  // namespace qic
