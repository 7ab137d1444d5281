#include "qic/sim.hpp"

#include "qic/philox.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

using namespace qic;
using doctest::Approx;

namespace {

CoupledWeights singlet() { return CoupledWeights(SpinLabel(1), SpinLabel(1), {{0, 0, 1.0}}); }

// Regression anchor: singlet, 10^5 shots, seed 42.
constexpr double kPinnedSingletStatistic = 0.01936;
constexpr std::uint64_t kPinnedPlusMinus = 50022;

}  // namespace

TEST_CASE("philox4x32-10 known-answer vectors") {
    using B = Philox4x32::Counter;
    CHECK(Philox4x32::block(B{0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::block(B{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::block(B{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
    CHECK(Philox4x32::to_unit(0, 0) == 0.0);
    CHECK(Philox4x32::to_unit(0xffffffff, 0xffffffff) < 1.0);
}

TEST_CASE("singlet simulation") {
    const SimulationReport r = run_simulation({singlet(), 100000, 42, 1});
    CHECK(r.generator == Philox4x32::kName);
    CHECK(std::accumulate(r.counts.begin(), r.counts.end(), std::uint64_t{0}) == 100000);
    CHECK(r.count(0, 0) == 0);
    CHECK(r.count(1, 1) == 0);
    CHECK(std::abs(r.frequency(1, 0) - 0.5) < 0.01);
    CHECK(std::abs(r.empirical_entropy - 1.0) < 0.02);
    CHECK(r.marginal_a.size() == 2);
    CHECK(r.analytic(0, 1) == Approx(0.5));
    CHECK(r.count(1, 0) == kPinnedPlusMinus);
    // two cells, each off by the same amount from 50000
    const double off = static_cast<double>(r.count(1, 0)) - 50000.0;
    CHECK(deviation_statistic(r) == Approx(2 * off * off / 50000.0).epsilon(1e-12));
    CHECK(deviation_statistic(r) == Approx(kPinnedSingletStatistic).epsilon(1e-12));
}

TEST_CASE("simulation is deterministic and independent of worker count") {
    std::mt19937_64 rng(41);
    const BipartiteState st({2, 3}, DensityMatrix(qic::testing::random_density(rng, 6, 3)));
    const SimulationReport one = run_simulation({st, 20000, 7, 1});
    CHECK(one == run_simulation({st, 20000, 7, 1}));
    CHECK(one == run_simulation({st, 20000, 7, 4}));
    CHECK(one == run_simulation({st, 20000, 7, 13}));
    CHECK_FALSE(one == run_simulation({st, 20000, 8, 1}));
}

TEST_CASE("stretch state puts every shot in one cell") {
    const CoupledWeights stretch(SpinLabel(2), SpinLabel(1), {{3, 3, 1.0}});
    const SimulationReport r = run_simulation({stretch, 5000, 3, 2});
    CHECK(r.count(1, 2) == 5000);
    CHECK(deviation_statistic(r) == 0.0);
}

TEST_CASE("single shot and zero shots") {
    const SimulationReport r = run_simulation({singlet(), 1, 0, 1});
    CHECK(std::accumulate(r.counts.begin(), r.counts.end(), std::uint64_t{0}) == 1);
    CHECK_THROWS_AS(run_simulation({singlet(), 0, 0, 1}), ValidationError);
}

TEST_CASE("empirical frequencies converge to the analytic table") {
    std::mt19937_64 rng(42);
    const CoupledWeights cw(SpinLabel(2), SpinLabel(1), {{3, 1, 0.3}, {1, 1, 0.5}, {3, -3, 0.2}});
    const SimulationReport r = run_simulation({cw, 200000, 11, 3});
    const JointDistribution analytic = joint_distribution(cw);
    CHECK(r.analytic == analytic);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            const double p = analytic(a, b);
            const double sigma = std::sqrt(p * (1 - p) / 200000.0);
            CHECK(std::abs(r.frequency(a, b) - p) <= 6 * sigma + 1e-12);
            if (p == 0.0) CHECK(r.count(a, b) == 0);
        }
    }
    // mean of the statistic is (cells − 1); 6 cells with support 4 here
    CHECK(deviation_statistic(r) < 30.0);
}
