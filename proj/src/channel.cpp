#include "qic/channel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace qic {

BipartiteDims::BipartiteDims(std::size_t a, std::size_t b) : na(a), nb(b) {
    if (na == 0 || nb == 0) throw ValidationError("positive dimension", "subchannel dimensions must be >= 1");
}

std::size_t induced_index(std::size_t m, std::size_t n, const BipartiteDims& dims) {
    if (m >= dims.na || n >= dims.nb) {
        throw ValidationError("index range", "(" + std::to_string(m) + ", " + std::to_string(n) +
                                                 ") outside " + std::to_string(dims.na) + "x" +
                                                 std::to_string(dims.nb));
    }
    return m * dims.nb + n;
}

BipartiteState::BipartiteState(BipartiteDims dims, DensityMatrix rho) : dims_(dims), rho_(std::move(rho)) {
    if (rho_.dim() != dims_.total()) {
        throw ValidationError("dimension match", "density matrix of dim " + std::to_string(rho_.dim()) +
                                                     " for dims " + std::to_string(dims_.na) + "x" +
                                                     std::to_string(dims_.nb));
    }
}

BipartiteState tensor_product(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
    return {BipartiteDims(rho_a.dim(), rho_b.dim()), DensityMatrix(kron(rho_a.matrix(), rho_b.matrix()))};
}

DensityMatrix partial_trace_b(const BipartiteState& state) {
    const auto na = static_cast<Eigen::Index>(state.dims().na);
    const auto nb = static_cast<Eigen::Index>(state.dims().nb);
    const ComplexMatrix& rho = state.rho().matrix();
    ComplexMatrix out = ComplexMatrix::Zero(na, na);
    for (Eigen::Index m = 0; m < na; ++m) {
        for (Eigen::Index mp = 0; mp < na; ++mp) {
            for (Eigen::Index n = 0; n < nb; ++n) out(m, mp) += rho(m * nb + n, mp * nb + n);
        }
    }
    return DensityMatrix(out);
}

DensityMatrix partial_trace_a(const BipartiteState& state) {
    const auto na = static_cast<Eigen::Index>(state.dims().na);
    const auto nb = static_cast<Eigen::Index>(state.dims().nb);
    const ComplexMatrix& rho = state.rho().matrix();
    ComplexMatrix out = ComplexMatrix::Zero(nb, nb);
    for (Eigen::Index n = 0; n < nb; ++n) {
        for (Eigen::Index np = 0; np < nb; ++np) {
            for (Eigen::Index m = 0; m < na; ++m) out(n, np) += rho(m * nb + n, m * nb + np);
        }
    }
    return DensityMatrix(out);
}

CoupledWeights::CoupledWeights(SpinLabel l, SpinLabel s, const std::vector<CoupledWeightEntry>& entries)
    : table_(coupled_basis(l, s)), weights_(table_.dim(), 0.0) {
    std::set<std::pair<int, int>> seen;
    double total = 0.0;
    for (const auto& e : entries) {
        if (!seen.insert({e.two_j, e.two_m}).second) {
            throw ValidationError("unique coupled label", "weight for (" + std::to_string(e.two_j) + ", " +
                                                              std::to_string(e.two_m) + ") given twice");
        }
        if (!std::isfinite(e.p) || e.p < 0.0) {
            throw ValidationError("nonnegative weight", "coupled weight is negative or non-finite");
        }
        weights_[table_.row(e.two_j, e.two_m)] = e.p;
        total += e.p;
    }
    if (std::abs(total - 1.0) > kNormTol) {
        throw ValidationError("weights sum to 1", "coupled weights sum to " + std::to_string(total));
    }
}

double CoupledWeights::weight(int two_j, int two_m) const {
    if (std::abs(two_m) > two_j) return 0.0;
    const int j_min = std::abs(l().two_j - s().two_j);
    if (two_j < j_min || two_j > l().two_j + s().two_j || (two_j - j_min) % 2 != 0) return 0.0;
    return weights_[table_.row(two_j, two_m)];
}

BipartiteDims CoupledWeights::dims() const { return {s().multiplicity(), l().multiplicity()}; }

std::vector<CoupledWeightEntry> CoupledWeights::entries() const {
    std::vector<CoupledWeightEntry> out;
    for (std::size_t r = 0; r < weights_.size(); ++r) {
        if (weights_[r] != 0.0) out.push_back({table_.states[r].two_j, table_.states[r].two_m, weights_[r]});
    }
    return out;
}

std::size_t coupled_to_channel_index(const CGTable& table, std::size_t cg_index) {
    const std::size_t ns = table.s.multiplicity();
    const std::size_t nl = table.l.multiplicity();
    const std::size_t il = cg_index / ns;
    const std::size_t is = cg_index % ns;
    return is * nl + il;
}

StateVector coupled_vector_in_channel(const CGTable& table, std::size_t row) {
    const auto dim = static_cast<Eigen::Index>(table.dim());
    ComplexVector v(dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        v(static_cast<Eigen::Index>(coupled_to_channel_index(table, static_cast<std::size_t>(c)))) =
            table.unitary(static_cast<Eigen::Index>(row), c);
    }
    return StateVector(std::move(v));
}

BipartiteState coupled_mixture(const CoupledWeights& cw) {
    const CGTable& t = cw.table();
    const auto dim = static_cast<Eigen::Index>(t.dim());
    // ρ = Σ_r p_r |v_r><v_r| with v_r the rows of the unitary
    Eigen::VectorXd p(dim);
    for (Eigen::Index r = 0; r < dim; ++r) p(r) = cw.weights()[static_cast<std::size_t>(r)];
    const ComplexMatrix rho_cg = t.unitary.transpose() * p.asDiagonal() * t.unitary.conjugate();

    ComplexMatrix rho(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const auto ci = static_cast<Eigen::Index>(coupled_to_channel_index(t, static_cast<std::size_t>(i)));
        for (Eigen::Index j = 0; j < dim; ++j) {
            const auto cj = static_cast<Eigen::Index>(coupled_to_channel_index(t, static_cast<std::size_t>(j)));
            rho(ci, cj) = rho_cg(i, j);
        }
    }
    return {cw.dims(), DensityMatrix(rho)};
}

JointDistribution::JointDistribution(BipartiteDims dims, std::vector<double> table)
    : dims_(dims), p_(std::move(table)) {
    if (p_.size() != dims_.total()) throw ValidationError("dimension match", "joint table has wrong size");
    double total = 0.0;
    for (double& v : p_) {
        if (!std::isfinite(v) || v < -kPsdTol) throw ValidationError("nonnegative probability", "negative cell");
        v = std::max(v, 0.0);
        total += v;
    }
    if (std::abs(total - 1.0) > kNormTol) {
        throw ValidationError("probabilities sum to 1", "joint table sums to " + std::to_string(total));
    }
}

std::vector<double> JointDistribution::row_sums() const {
    std::vector<double> out(dims_.na, 0.0);
    for (std::size_t a = 0; a < dims_.na; ++a) {
        for (std::size_t b = 0; b < dims_.nb; ++b) out[a] += (*this)(a, b);
    }
    return out;
}

std::vector<double> JointDistribution::col_sums() const {
    std::vector<double> out(dims_.nb, 0.0);
    for (std::size_t a = 0; a < dims_.na; ++a) {
        for (std::size_t b = 0; b < dims_.nb; ++b) out[b] += (*this)(a, b);
    }
    return out;
}

namespace {

// P over (m_s index, m_l index) from Σ_j p_{j, m_l+m_s} C²_{j, m_l; m_s}.
std::vector<double> coupled_joint_table(const CoupledWeights& cw) {
    const SpinLabel l = cw.l(), s = cw.s();
    const std::size_t nl = l.multiplicity();
    std::vector<double> p(cw.dims().total(), 0.0);
    const int j_min = std::abs(l.two_j - s.two_j);
    for (int two_ms = -s.two_j; two_ms <= s.two_j; two_ms += 2) {
        for (int two_ml = -l.two_j; two_ml <= l.two_j; two_ml += 2) {
            double acc = 0.0;
            for (int two_j = j_min; two_j <= l.two_j + s.two_j; two_j += 2) {
                const double c = clebsch_gordan(l, s, SpinLabel(two_j), two_ml, two_ms);
                acc += cw.weight(two_j, two_ml + two_ms) * c * c;
            }
            const auto a = static_cast<std::size_t>((two_ms + s.two_j) / 2);
            const auto b = static_cast<std::size_t>((two_ml + l.two_j) / 2);
            p[a * nl + b] = acc;
        }
    }
    return p;
}

}  // namespace

std::pair<ProbabilityDistribution, ProbabilityDistribution> subchannel_probs(const CoupledWeights& cw) {
    const SpinLabel l = cw.l(), s = cw.s();
    std::vector<double> pa(s.multiplicity(), 0.0);
    std::vector<double> pb(l.multiplicity(), 0.0);
    const int j_min = std::abs(l.two_j - s.two_j);
    for (int two_j = j_min; two_j <= l.two_j + s.two_j; two_j += 2) {
        const SpinLabel j(two_j);
        for (int two_ms = -s.two_j; two_ms <= s.two_j; two_ms += 2) {
            for (int two_ml = -l.two_j; two_ml <= l.two_j; two_ml += 2) {
                const double p = cw.weight(two_j, two_ml + two_ms);
                if (p == 0.0) continue;
                const double c = clebsch_gordan(l, s, j, two_ml, two_ms);
                pa[static_cast<std::size_t>((two_ms + s.two_j) / 2)] += p * c * c;
                pb[static_cast<std::size_t>((two_ml + l.two_j) / 2)] += p * c * c;
            }
        }
    }
    return {ProbabilityDistribution(std::move(pa)), ProbabilityDistribution(std::move(pb))};
}

JointDistribution joint_distribution(const CoupledWeights& cw) {
    return {cw.dims(), coupled_joint_table(cw)};
}

JointDistribution joint_distribution(const BipartiteState& state) {
    const auto n = state.dims().total();
    std::vector<double> p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = state.rho()(k, k).real();
    return {state.dims(), std::move(p)};
}

ParameterCount parameter_counting(const BipartiteDims& dims) {
    const auto na = static_cast<long long>(dims.na);
    const auto nb = static_cast<long long>(dims.nb);
    const long long n = na * nb;
    ParameterCount out;
    out.pure_full = n - 1;
    out.pure_product = n - na - nb + 1;
    out.mixed_full = n * n - 1;
    out.mixed_product_sum = (na * na - 1) + (nb * nb - 1);
    out.missing = n * n + 1 - na * na - nb * nb;
    return out;
}

ComplexMatrix partial_transpose_b(const BipartiteState& state) {
    const auto na = static_cast<Eigen::Index>(state.dims().na);
    const auto nb = static_cast<Eigen::Index>(state.dims().nb);
    const ComplexMatrix& rho = state.rho().matrix();
    ComplexMatrix out(na * nb, na * nb);
    for (Eigen::Index m = 0; m < na; ++m) {
        for (Eigen::Index n = 0; n < nb; ++n) {
            for (Eigen::Index mp = 0; mp < na; ++mp) {
                for (Eigen::Index np = 0; np < nb; ++np) {
                    out(m * nb + n, mp * nb + np) = rho(m * nb + np, mp * nb + n);
                }
            }
        }
    }
    return out;
}

double ppt_min_eigenvalue(const BipartiteState& state) {
    const ComplexMatrix pt = partial_transpose_b(state);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((pt + pt.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("ppt_min_eigenvalue: eigensolver did not converge");
    }
    return solver.eigenvalues()(0);
}

std::string_view to_string(ChannelLabel label) {
    switch (label) {
        case ChannelLabel::Product: return "Product";
        case ChannelLabel::SeparableMix: return "SeparableMix";
        case ChannelLabel::Entangled: return "Entangled";
        case ChannelLabel::Undetermined: return "Undetermined";
    }
    return "Undetermined";
}

ChannelClass classify(const BipartiteState& state, double tol) {
    if (!(tol > 0.0)) throw ValidationError("positive tolerance", "classify tolerance must be > 0");
    ChannelClass out;
    const DensityMatrix rho_a = partial_trace_b(state);
    const DensityMatrix rho_b = partial_trace_a(state);
    out.factorization_residual = max_abs_diff(state.rho().matrix(), kron(rho_a.matrix(), rho_b.matrix()));
    out.ppt_min_eigenvalue = ppt_min_eigenvalue(state);
    const auto [na, nb] = std::minmax(state.dims().na, state.dims().nb);
    // PPT is necessary and sufficient when na·nb <= 6 (trivially so if one side is 1)
    out.ppt_conclusive = na == 1 || (na == 2 && nb <= 3);

    if (out.factorization_residual <= tol) {
        out.label = ChannelLabel::Product;
    } else if (out.ppt_min_eigenvalue < -tol) {
        out.label = ChannelLabel::Entangled;
    } else if (out.ppt_conclusive) {
        out.label = ChannelLabel::SeparableMix;
    } else {
        out.label = ChannelLabel::Undetermined;
    }
    return out;
}

}  // namespace qic
