// channel.hpp: paired (bipartite) channel states: induced basis, partial traces,
// coupled-basis mixtures, detection statistics and the three-type classification.

#pragma once

#include "qic/core.hpp"
#include "qic/info.hpp"
#include "qic/repr.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace qic {

struct BipartiteDims {
    std::size_t na = 1;
    std::size_t nb = 1;

    BipartiteDims() = default;
    BipartiteDims(std::size_t a, std::size_t b);

    std::size_t total() const noexcept { return na * nb; }
    friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

// k = m·nb + n; A is the slow index.
std::size_t induced_index(std::size_t m, std::size_t n, const BipartiteDims& dims);

class BipartiteState {
public:
    BipartiteState(BipartiteDims dims, DensityMatrix rho);

    const BipartiteDims& dims() const noexcept { return dims_; }
    const DensityMatrix& rho() const noexcept { return rho_; }

private:
    BipartiteDims dims_;
    DensityMatrix rho_;
};

BipartiteState tensor_product(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

// Traces out B and returns the na×na state of subchannel A.
DensityMatrix partial_trace_b(const BipartiteState& state);
// Traces out A and returns the nb×nb state of subchannel B.
DensityMatrix partial_trace_a(const BipartiteState& state);

struct CoupledWeightEntry {
    int two_j = 0;
    int two_m = 0;
    double p = 0.0;
};

/// Weights p_{j,m} on the coupled basis of l ⊗ s.
///
/// The channel built from these weights has subchannel A carrying spin s and
/// subchannel B carrying spin l: na = 2s + 1, nb = 2l + 1. Basis index within
/// each subchannel is m + j (ascending m).
class CoupledWeights {
public:
    // Unlisted (j, m) pairs get weight 0. Duplicate pairs are rejected.
    CoupledWeights(SpinLabel l, SpinLabel s, const std::vector<CoupledWeightEntry>& entries);

    SpinLabel l() const noexcept { return table_.l; }
    SpinLabel s() const noexcept { return table_.s; }
    const CGTable& table() const noexcept { return table_; }
    // Aligned with table().states.
    const std::vector<double>& weights() const noexcept { return weights_; }
    double weight(int two_j, int two_m) const;
    BipartiteDims dims() const;
    std::vector<CoupledWeightEntry> entries() const;

private:
    CGTable table_;
    std::vector<double> weights_;
};

// Maps an index of the CGTable ordering (l slow) to the channel ordering (s = A slow).
std::size_t coupled_to_channel_index(const CGTable& table, std::size_t cg_index);

// Coupled basis vector `row` of the table, expressed in the channel induced basis.
StateVector coupled_vector_in_channel(const CGTable& table, std::size_t row);

BipartiteState coupled_mixture(const CoupledWeights& cw);

/// Joint detection probabilities P[a][b], a over subchannel A, b over B.
class JointDistribution {
public:
    JointDistribution(BipartiteDims dims, std::vector<double> table);

    const BipartiteDims& dims() const noexcept { return dims_; }
    double operator()(std::size_t a, std::size_t b) const { return p_[a * dims_.nb + b]; }
    const std::vector<double>& flat() const noexcept { return p_; }
    std::vector<double> row_sums() const;
    std::vector<double> col_sums() const;

    friend bool operator==(const JointDistribution&, const JointDistribution&) = default;

private:
    BipartiteDims dims_;
    std::vector<double> p_;
};

// (probs over A, probs over B), evaluated from the squared Clebsch-Gordan sums.
std::pair<ProbabilityDistribution, ProbabilityDistribution> subchannel_probs(const CoupledWeights& cw);

JointDistribution joint_distribution(const CoupledWeights& cw);

// Detection statistics of an arbitrary state: the induced-basis diagonal.
JointDistribution joint_distribution(const BipartiteState& state);

struct ParameterCount {
    long long pure_full = 0;
    long long pure_product = 0;
    long long mixed_full = 0;
    long long mixed_product_sum = 0;
    long long missing = 0;
};

ParameterCount parameter_counting(const BipartiteDims& dims);

ComplexMatrix partial_transpose_b(const BipartiteState& state);

double ppt_min_eigenvalue(const BipartiteState& state);

enum class ChannelLabel { Product, SeparableMix, Entangled, Undetermined };

std::string_view to_string(ChannelLabel label);

struct ChannelClass {
    ChannelLabel label = ChannelLabel::Undetermined;
    double factorization_residual = 0.0;  // ‖ρ − ρ_A⊗ρ_B‖_max
    double ppt_min_eigenvalue = 0.0;
    bool ppt_conclusive = false;  // dims (2,2), (2,3) or (3,2)
};

inline constexpr double kDefaultClassifyTol = 1e-9;

ChannelClass classify(const BipartiteState& state, double tol = kDefaultClassifyTol);

}  // namespace qic
