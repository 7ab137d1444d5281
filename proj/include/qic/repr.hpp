// repr.hpp: ladder operators, Casimir, spectral operator functions,
// Clebsch-Gordan coupling and Schmidt decomposition.

#pragma once

#include "qic/core.hpp"

#include <span>
#include <vector>

namespace qic {

/// Raising/lowering/diagonal triple on an N-dimensional space.
///
/// Basis index i (0-based) carries m = i - (N - 1)/2. With
///   J+ |i> = sqrt((N - 1 - i)(i + 1)) |i + 1>,  J- = J+^dagger,
///   J3 = diag(m),
/// the algebra closes as [J3, J±] = ±J± and [J+, J-] = 2 J3.
struct LadderSet {
    std::size_t dim = 0;
    ComplexMatrix j_plus;
    ComplexMatrix j_minus;
    ComplexMatrix j3;
};

LadderSet ladder_ops(std::size_t n);

// J3² + (J+J- + J-J+)/2; equals j(j+1)·I with j = (N-1)/2.
ComplexMatrix casimir(const LadderSet& ops);

/// Unit direction for n·J = n3 J3 + conj(n_plus) J+ + n_plus J-.
/// Normalization n3² + 4|n_plus|² = 1 makes the spectrum of n·J equal to
/// that of J3.
struct Direction {
    double n3 = 1.0;
    Complex n_plus{0.0, 0.0};
};

ComplexMatrix direction_operator(std::size_t n, const Direction& dir);

// p(n·J): the eigenvector of n·J with eigenvalue m_k = k - (N-1)/2 (k 0-based)
// carries weight p_values[k].
DensityMatrix spectral_operator(std::size_t n, const Direction& dir, std::span<const double> p_values);

/// Angular momentum label stored doubled, so j = two_j / 2 is exact.
struct SpinLabel {
    int two_j = 0;

    constexpr SpinLabel() = default;
    constexpr explicit SpinLabel(int doubled) : two_j(doubled) {
        if (doubled < 0) throw ValidationError("nonnegative spin", "two_j must be >= 0");
    }
    constexpr double value() const noexcept { return two_j / 2.0; }
    constexpr std::size_t multiplicity() const noexcept { return static_cast<std::size_t>(two_j + 1); }
    friend constexpr bool operator==(SpinLabel, SpinLabel) = default;
};

// <l m_l; s m_s | j m_l+m_s> with Condon-Shortley phases (Racah closed form).
// All magnetic numbers doubled. Throws on malformed labels; returns 0 when
// |m_l + m_s| > j.
double clebsch_gordan(SpinLabel l, SpinLabel s, SpinLabel j, int two_ml, int two_ms);

struct CoupledState {
    int two_j = 0;
    int two_m = 0;
};

/// Coupled basis of l ⊗ s.
///
/// Induced basis ordering: |l, m_l> ⊗ |s, m_s> with l the slow index and each
/// factor ascending in m, so the flat index is (m_l + l)(2s + 1) + (m_s + s).
/// Row r of `unitary` is the coupled vector states[r] in that basis. Rows are
/// grouped by descending j, then descending m.
struct CGTable {
    SpinLabel l;
    SpinLabel s;
    std::vector<CoupledState> states;
    ComplexMatrix unitary;

    std::size_t dim() const noexcept { return states.size(); }
    // Row of (two_j, two_m); throws if absent.
    std::size_t row(int two_j, int two_m) const;
    double coefficient(int two_j, int two_ml, int two_ms) const;
    std::size_t induced_index(int two_ml, int two_ms) const;
    StateVector vector(std::size_t row) const;
};

CGTable coupled_basis(SpinLabel l, SpinLabel s);

// Composed ladder operators J_a = L_a ⊗ I + I ⊗ S_a in the CGTable induced ordering.
LadderSet composed_ladder_ops(SpinLabel l, SpinLabel s);

struct SchmidtResult {
    std::size_t rank = 0;
    std::vector<double> singular_values;  // descending
};

inline constexpr double kSchmidtTol = 1e-9;

// Reshapes v into an na×nb amplitude matrix (row-major, A slow) and counts
// singular values above 1e-9.
SchmidtResult schmidt_rank(const StateVector& v, std::size_t na, std::size_t nb);

}  // namespace qic
