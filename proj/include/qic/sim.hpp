// sim.hpp: seeded Monte-Carlo of source → channel → two detectors.

#pragma once

#include "qic/channel.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace qic {

using SourceSpec = std::variant<CoupledWeights, BipartiteState>;

struct SimulationConfig {
    SourceSpec state;
    std::uint64_t shots = 100000;
    std::uint64_t seed = 0;
    // Shots are split into contiguous shards; results do not depend on this.
    unsigned workers = 1;
};

struct SimulationReport {
    std::string generator;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    BipartiteDims dims;
    std::vector<std::uint64_t> counts;  // na×nb, row-major, A slow
    std::vector<double> marginal_a;     // empirical
    std::vector<double> marginal_b;
    JointDistribution analytic;
    std::vector<double> deviation;  // empirical frequency − analytic, per cell
    double empirical_entropy = 0.0;  // bits, over the na·nb outcomes

    std::uint64_t count(std::size_t a, std::size_t b) const { return counts[a * dims.nb + b]; }
    double frequency(std::size_t a, std::size_t b) const {
        return static_cast<double>(count(a, b)) / static_cast<double>(shots);
    }
    friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

// Shot i draws two uniforms from Philox4x32-10 block (counter = i, key = seed):
// the first picks a source pure state by mixture weight, the second picks the
// induced-basis outcome by squared amplitude.
SimulationReport run_simulation(const SimulationConfig& cfg);

// Σ (observed − expected)² / expected over cells with expected > 0, in counts.
double deviation_statistic(const SimulationReport& report);

}  // namespace qic
