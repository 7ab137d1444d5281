// info.hpp: Shannon information measures (bits)

#pragma once

#include "qic/core.hpp"

#include <span>
#include <vector>

namespace qic {

/// Discrete probability distribution; entries nonnegative and summing to 1 within 1e-9.
class ProbabilityDistribution {
public:
    explicit ProbabilityDistribution(std::vector<double> probs);

    std::size_t size() const noexcept { return probs_.size(); }
    const std::vector<double>& probs() const noexcept { return probs_; }
    double operator[](std::size_t i) const { return probs_[i]; }

private:
    std::vector<double> probs_;
};

// -log2(p) for 0 < p <= 1.
double information_content(double p);

// -Σ p log2 p with 0·log 0 = 0.
double shannon_entropy(const ProbabilityDistribution& d);

// Shannon entropy of the eigenvalues; tiny negative eigenvalues are clipped to 0.
double spectral_entropy(const DensityMatrix& rho);

}  // namespace qic
