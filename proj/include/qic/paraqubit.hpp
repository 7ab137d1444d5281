// paraqubit.hpp: the two-qubit paired channel: singlet/triplet algebra, the
// product-state triplet family, the degeneracy criterion and concurrence.

#pragma once

#include "qic/channel.hpp"

#include <vector>

namespace qic {

/// Induced basis of the paraqubit, A slow, |-> = index 0, |+> = index 1:
///   0: |--⟩  1: |-+⟩  2: |+-⟩  3: |++⟩
struct SingletTriplet {
    StateVector singlet;  // (|+-⟩ - |-+⟩)/√2
    StateVector down;     // |--⟩
    StateVector zero;     // (|+-⟩ + |-+⟩)/√2
    StateVector up;       // |++⟩
};

SingletTriplet singlet_triplet_basis();

/// Amplitudes on |d⟩, |0⟩, |u⟩.
struct TripletCoefficients {
    Complex a;
    Complex b;
    Complex c;

    TripletCoefficients(Complex a_, Complex b_, Complex c_);

    // a|d⟩ + b|0⟩ + c|u⟩ in the induced basis
    StateVector assemble() const;
};

// (k²c, √2·k·c, c) with c = 1/(1 + |k|²).
TripletCoefficients triplet_product_family(Complex k);
// The k → ∞ member, |d⟩.
TripletCoefficients triplet_product_family_at_infinity();

bool is_product_triplet(const TripletCoefficients& t, double tol);

struct ParaqubitWeights {
    double p_s = 0.0;
    double p_0 = 0.0;
    double p_d = 0.0;
    double p_u = 0.0;

    ParaqubitWeights() = default;
    ParaqubitWeights(double s, double zero, double d, double u);

    CoupledWeights to_coupled() const;
};

BipartiteState paraqubit_density(const ParaqubitWeights& w);

// True when |p_s - p_0| <= tol.
bool degeneracy_criterion(const ParaqubitWeights& w, double tol);

// Wootters concurrence of a 2×2 state.
double concurrence(const BipartiteState& state);

// max(0, |p_0 - p_s| - 2√(p_d p_u))
double concurrence_closed_form(const ParaqubitWeights& w);

inline constexpr double kDefaultScanResolution = 0.05;
inline constexpr double kSeparableTol = 1e-9;

struct ScanPoint {
    ParaqubitWeights weights;
    bool criterion = false;  // p_s = p_0 within tol
    double concurrence = 0.0;
    double concurrence_closed_form = 0.0;
    double ppt_min_eigenvalue = 0.0;
    ChannelLabel label = ChannelLabel::Undetermined;
    // Over the weight vector (p_s, p_0, p_d, p_u), indices 0..3 in that order.
    DegeneracyClasses degeneracy;

    bool oracle_separable() const noexcept { return concurrence <= kSeparableTol; }
};

struct ScanSummary {
    std::size_t points = 0;
    std::size_t agree_separable = 0;     // criterion true, oracle separable
    std::size_t agree_entangled = 0;     // criterion false, oracle entangled
    std::size_t criterion_gap = 0;       // criterion false, oracle separable
    std::size_t criterion_violations = 0;  // criterion true, oracle entangled
    // Points where a pair other than (p_s, p_0) coincides yet the state is entangled.
    std::size_t other_pair_entangled = 0;
};

struct ScanReport {
    double resolution = 0.0;  // effective step 1/steps
    std::size_t steps = 0;
    std::vector<ScanPoint> points;  // grid order: p_s, p_0, p_d outer to inner
    ScanSummary summary;
    std::vector<std::size_t> disagreements;  // indices of criterion_gap and violation points
};

// Sweeps the 3-simplex at step 1/round(1/resolution).
ScanReport phase_diagram_scan(double resolution = kDefaultScanResolution, double tol = kDefaultClassifyTol);

}  // namespace qic
