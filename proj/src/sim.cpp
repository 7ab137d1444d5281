#include "qic/sim.hpp"

#include "qic/info.hpp"
#include "qic/philox.hpp"

#include <algorithm>
#include <thread>

namespace qic {

namespace {

struct Ensemble {
    BipartiteDims dims;
    std::vector<double> weight_cdf;
    std::vector<std::vector<double>> outcome_cdf;  // per component, over induced index
};

std::vector<double> cumulative(const std::vector<double>& p) {
    std::vector<double> cdf(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) cdf[i] = acc += p[i];
    return cdf;
}

// First index whose cumulative mass exceeds u; zero-mass entries are never hit.
std::size_t sample(const std::vector<double>& cdf, double u) {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it != cdf.end()) return static_cast<std::size_t>(it - cdf.begin());
    // u landed in the rounding slack above the total; take the last positive entry
    std::size_t i = cdf.size() - 1;
    while (i > 0 && cdf[i] == cdf[i - 1]) --i;
    return i;
}

void add_component(Ensemble& e, double weight, const StateVector& v, std::vector<double>& weights) {
    std::vector<double> probs(v.dim());
    for (std::size_t k = 0; k < v.dim(); ++k) probs[k] = std::norm(v[k]);
    weights.push_back(weight);
    e.outcome_cdf.push_back(cumulative(probs));
}

Ensemble build_ensemble(const CoupledWeights& cw) {
    Ensemble e;
    e.dims = cw.dims();
    std::vector<double> weights;
    for (std::size_t r = 0; r < cw.weights().size(); ++r) {
        if (cw.weights()[r] > 0.0) add_component(e, cw.weights()[r], coupled_vector_in_channel(cw.table(), r), weights);
    }
    e.weight_cdf = cumulative(weights);
    return e;
}

Ensemble build_ensemble(const BipartiteState& state) {
    // the eigenvectors are the pure states the source emits, eigenvalues their rates
    Ensemble e;
    e.dims = state.dims();
    std::vector<double> weights;
    const Spectrum& spec = state.rho().spectrum();
    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        if (spec.eigenvalues[k] > 0.0) add_component(e, spec.eigenvalues[k], spec.eigenvectors[k], weights);
    }
    e.weight_cdf = cumulative(weights);
    return e;
}

void run_shard(const Ensemble& e, std::uint64_t seed, std::uint64_t first, std::uint64_t last,
               std::vector<std::uint64_t>& counts) {
    const auto key = Philox4x32::key_from_seed(seed);
    for (std::uint64_t shot = first; shot < last; ++shot) {
        const auto r = Philox4x32::block(
            {static_cast<std::uint32_t>(shot), static_cast<std::uint32_t>(shot >> 32), 0u, 0u}, key);
        const std::size_t component = sample(e.weight_cdf, Philox4x32::to_unit(r[0], r[1]));
        const std::size_t outcome = sample(e.outcome_cdf[component], Philox4x32::to_unit(r[2], r[3]));
        ++counts[outcome];
    }
}

}  // namespace

SimulationReport run_simulation(const SimulationConfig& cfg) {
    if (cfg.shots == 0) throw ValidationError("positive shots", "shots must be >= 1");
    const Ensemble ensemble = std::visit([](const auto& s) { return build_ensemble(s); }, cfg.state);
    const JointDistribution analytic =
        std::visit([](const auto& s) { return joint_distribution(s); }, cfg.state);

    const std::size_t cells = ensemble.dims.total();
    const unsigned workers = std::max(1u, cfg.workers);
    std::vector<std::vector<std::uint64_t>> shard_counts(workers, std::vector<std::uint64_t>(cells, 0));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t first = cfg.shots * w / workers;
            const std::uint64_t last = cfg.shots * (w + 1) / workers;
            pool.emplace_back([&, w, first, last] { run_shard(ensemble, cfg.seed, first, last, shard_counts[w]); });
        }
    }

    SimulationReport rep{.generator = Philox4x32::kName,
                         .seed = cfg.seed,
                         .shots = cfg.shots,
                         .dims = ensemble.dims,
                         .counts = std::vector<std::uint64_t>(cells, 0),
                         .marginal_a = std::vector<double>(ensemble.dims.na, 0.0),
                         .marginal_b = std::vector<double>(ensemble.dims.nb, 0.0),
                         .analytic = analytic,
                         .deviation = std::vector<double>(cells, 0.0),
                         .empirical_entropy = 0.0};
    for (const auto& sc : shard_counts) {
        for (std::size_t k = 0; k < cells; ++k) rep.counts[k] += sc[k];
    }

    const double total = static_cast<double>(cfg.shots);
    std::vector<double> freq(cells);
    for (std::size_t a = 0; a < rep.dims.na; ++a) {
        for (std::size_t b = 0; b < rep.dims.nb; ++b) {
            const std::size_t k = a * rep.dims.nb + b;
            freq[k] = static_cast<double>(rep.counts[k]) / total;
            rep.marginal_a[a] += freq[k];
            rep.marginal_b[b] += freq[k];
            rep.deviation[k] = freq[k] - analytic(a, b);
        }
    }
    rep.empirical_entropy = shannon_entropy(ProbabilityDistribution(freq));
    return rep;
}

double deviation_statistic(const SimulationReport& report) {
    const double shots = static_cast<double>(report.shots);
    double stat = 0.0;
    for (std::size_t k = 0; k < report.counts.size(); ++k) {
        const double expected = shots * report.analytic.flat()[k];
        if (expected <= 0.0) continue;
        const double d = static_cast<double>(report.counts[k]) - expected;
        stat += d * d / expected;
    }
    return stat;
}

}  // namespace qic
