#include "qic/info.hpp"

#include <algorithm>
#include <cmath>

namespace qic {

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw ValidationError("nonempty distribution", "no probabilities given");
    double total = 0.0;
    for (double p : probs_) {
        if (!std::isfinite(p) || p < 0.0) {
            throw ValidationError("nonnegative probability", "entry is negative or non-finite");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kNormTol) {
        throw ValidationError("probabilities sum to 1", "sum is " + std::to_string(total));
    }
}

double information_content(double p) {
    if (!(p > 0.0) || p > 1.0) {
        throw ValidationError("probability in (0, 1]", "got " + std::to_string(p));
    }
    return -std::log2(p);
}

double shannon_entropy(const ProbabilityDistribution& d) {
    double h = 0.0;
    for (double p : d.probs()) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return std::max(h, 0.0);
}

double spectral_entropy(const DensityMatrix& rho) {
    std::vector<double> lambda = rho.spectrum().eigenvalues;
    double total = 0.0;
    for (double& l : lambda) {
        l = std::max(l, 0.0);
        total += l;
    }
    // clipping moves the sum by at most N·kPsdTol; renormalize to stay a distribution
    for (double& l : lambda) l /= total;
    return shannon_entropy(ProbabilityDistribution(std::move(lambda)));
}

}  // namespace qic
