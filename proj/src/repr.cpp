#include "qic/repr.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

namespace qic {

namespace {

constexpr std::size_t kMaxFactorial = 1000;

const std::array<long double, kMaxFactorial + 1>& factorials() {
    static const auto table = [] {
        std::array<long double, kMaxFactorial + 1> t{};
        t[0] = 1.0L;
        for (std::size_t i = 1; i <= kMaxFactorial; ++i) t[i] = t[i - 1] * static_cast<long double>(i);
        return t;
    }();
    return table;
}

long double fact(int n) {
    if (n < 0 || static_cast<std::size_t>(n) > kMaxFactorial) {
        throw ValidationError("spin label range", "factorial argument out of range");
    }
    return factorials()[static_cast<std::size_t>(n)];
}

void check_magnetic(SpinLabel j, int two_m, const char* name) {
    if (std::abs(two_m) > j.two_j || (j.two_j - two_m) % 2 != 0) {
        throw ValidationError("magnetic quantum number bounds",
                              std::string(name) + " = " + std::to_string(two_m) + "/2 invalid for 2j = " +
                                  std::to_string(j.two_j));
    }
}

}  // namespace

LadderSet ladder_ops(std::size_t n) {
    if (n == 0) throw ValidationError("positive dimension", "ladder operators need N >= 1");
    const auto dim = static_cast<Eigen::Index>(n);
    LadderSet ops;
    ops.dim = n;
    ops.j_plus = ComplexMatrix::Zero(dim, dim);
    ops.j3 = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        // 1-based label k = i + 1
        const double k = static_cast<double>(i + 1);
        const double nn = static_cast<double>(n);
        ops.j3(i, i) = k - (1.0 + nn) / 2.0;
        if (i + 1 < dim) ops.j_plus(i + 1, i) = std::sqrt((nn - k) * k);
    }
    ops.j_minus = ops.j_plus.adjoint();
    return ops;
}

ComplexMatrix casimir(const LadderSet& ops) {
    return ops.j3 * ops.j3 + (ops.j_plus * ops.j_minus + ops.j_minus * ops.j_plus) / 2.0;
}

ComplexMatrix direction_operator(std::size_t n, const Direction& dir) {
    const double norm = dir.n3 * dir.n3 + 4.0 * std::norm(dir.n_plus);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTol) {
        throw ValidationError("unit direction", "n3^2 + 4|n+|^2 = " + std::to_string(norm));
    }
    const LadderSet ops = ladder_ops(n);
    return dir.n3 * ops.j3 + std::conj(dir.n_plus) * ops.j_plus + dir.n_plus * ops.j_minus;
}

DensityMatrix spectral_operator(std::size_t n, const Direction& dir, std::span<const double> p_values) {
    if (p_values.size() != n) {
        throw ValidationError("dimension match", "need one p value per basis state");
    }
    double total = 0.0;
    for (double p : p_values) {
        if (!std::isfinite(p) || p < 0.0) throw ValidationError("nonnegative weight", "p value negative");
        total += p;
    }
    if (std::abs(total - 1.0) > kNormTol) {
        throw ValidationError("weights sum to 1", "p values sum to " + std::to_string(total));
    }
    const ComplexMatrix nj = direction_operator(n, dir);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(nj);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("spectral_operator: eigensolver did not converge");
    }
    // eigenvalues are m_k = k - (N-1)/2 in ascending order, spacing 1
    const auto dim = static_cast<Eigen::Index>(n);
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const ComplexVector v = solver.eigenvectors().col(k);
        rho += p_values[static_cast<std::size_t>(k)] * (v * v.adjoint());
    }
    return DensityMatrix(rho);
}

double clebsch_gordan(SpinLabel l, SpinLabel s, SpinLabel j, int two_ml, int two_ms) {
    check_magnetic(l, two_ml, "m_l");
    check_magnetic(s, two_ms, "m_s");
    if (j.two_j < std::abs(l.two_j - s.two_j) || j.two_j > l.two_j + s.two_j ||
        (l.two_j + s.two_j + j.two_j) % 2 != 0) {
        throw ValidationError("triangle inequality", "j = " + std::to_string(j.two_j) + "/2 cannot couple l = " +
                                                         std::to_string(l.two_j) + "/2 and s = " +
                                                         std::to_string(s.two_j) + "/2");
    }
    const int two_m = two_ml + two_ms;
    if (std::abs(two_m) > j.two_j) return 0.0;

    // integer arguments; all halves are exact by the parity checks above
    const int j1 = l.two_j, j2 = s.two_j, jj = j.two_j;
    const int a1 = (jj + j1 - j2) / 2;
    const int a2 = (jj - j1 + j2) / 2;
    const int a3 = (j1 + j2 - jj) / 2;
    const int a4 = (j1 + j2 + jj) / 2 + 1;
    const int jpm = (jj + two_m) / 2, jmm = (jj - two_m) / 2;
    const int l_minus = (j1 - two_ml) / 2, l_plus = (j1 + two_ml) / 2;
    const int s_minus = (j2 - two_ms) / 2, s_plus = (j2 + two_ms) / 2;

    const long double norm = (jj + 1) * fact(a1) * fact(a2) * fact(a3) / fact(a4) * fact(jpm) * fact(jmm) *
                             fact(l_minus) * fact(l_plus) * fact(s_minus) * fact(s_plus);

    // k runs where every factorial argument is nonnegative
    const int b5 = (jj - j2 + two_ml) / 2;  // j - s + m_l
    const int b6 = (jj - j1 - two_ms) / 2;  // j - l - m_s
    const int k_min = std::max({0, -b5, -b6});
    const int k_max = std::min({a3, l_minus, s_plus});
    long double sum = 0.0L;
    for (int k = k_min; k <= k_max; ++k) {
        const long double term =
            1.0L / (fact(k) * fact(a3 - k) * fact(l_minus - k) * fact(s_plus - k) * fact(b5 + k) * fact(b6 + k));
        sum += (k % 2 == 0) ? term : -term;
    }
    return static_cast<double>(std::sqrt(norm) * sum);
}

std::size_t CGTable::row(int two_j, int two_m) const {
    for (std::size_t r = 0; r < states.size(); ++r) {
        if (states[r].two_j == two_j && states[r].two_m == two_m) return r;
    }
    throw ValidationError("coupled label", "no coupled state (" + std::to_string(two_j) + "/2, " +
                                               std::to_string(two_m) + "/2)");
}

std::size_t CGTable::induced_index(int two_ml, int two_ms) const {
    check_magnetic(l, two_ml, "m_l");
    check_magnetic(s, two_ms, "m_s");
    return static_cast<std::size_t>((two_ml + l.two_j) / 2) * s.multiplicity() +
           static_cast<std::size_t>((two_ms + s.two_j) / 2);
}

double CGTable::coefficient(int two_j, int two_ml, int two_ms) const {
    const std::size_t r = row(two_j, two_ml + two_ms);
    return unitary(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(induced_index(two_ml, two_ms))).real();
}

StateVector CGTable::vector(std::size_t r) const {
    return StateVector(unitary.row(static_cast<Eigen::Index>(r)).transpose());
}

CGTable coupled_basis(SpinLabel l, SpinLabel s) {
    CGTable table;
    table.l = l;
    table.s = s;
    const auto dim = static_cast<Eigen::Index>(l.multiplicity() * s.multiplicity());
    table.unitary = ComplexMatrix::Zero(dim, dim);
    const int j_min = std::abs(l.two_j - s.two_j);
    for (int two_j = l.two_j + s.two_j; two_j >= j_min; two_j -= 2) {
        for (int two_m = two_j; two_m >= -two_j; two_m -= 2) {
            const auto r = static_cast<Eigen::Index>(table.states.size());
            table.states.push_back({two_j, two_m});
            for (int two_ml = -l.two_j; two_ml <= l.two_j; two_ml += 2) {
                const int two_ms = two_m - two_ml;
                if (std::abs(two_ms) > s.two_j) continue;
                const auto c = static_cast<Eigen::Index>(table.induced_index(two_ml, two_ms));
                table.unitary(r, c) = clebsch_gordan(l, s, SpinLabel(two_j), two_ml, two_ms);
            }
        }
    }
    return table;
}

LadderSet composed_ladder_ops(SpinLabel l, SpinLabel s) {
    const LadderSet lo = ladder_ops(l.multiplicity());
    const LadderSet so = ladder_ops(s.multiplicity());
    const ComplexMatrix il = ComplexMatrix::Identity(lo.j3.rows(), lo.j3.cols());
    const ComplexMatrix is = ComplexMatrix::Identity(so.j3.rows(), so.j3.cols());
    LadderSet out;
    out.dim = lo.dim * so.dim;
    out.j_plus = kron(lo.j_plus, is) + kron(il, so.j_plus);
    out.j_minus = kron(lo.j_minus, is) + kron(il, so.j_minus);
    out.j3 = kron(lo.j3, is) + kron(il, so.j3);
    return out;
}

SchmidtResult schmidt_rank(const StateVector& v, std::size_t na, std::size_t nb) {
    if (na == 0 || nb == 0 || v.dim() != na * nb) {
        throw ValidationError("dimension match", "state of dim " + std::to_string(v.dim()) + " is not " +
                                                     std::to_string(na) + "x" + std::to_string(nb));
    }
    const auto rows = static_cast<Eigen::Index>(na);
    const auto cols = static_cast<Eigen::Index>(nb);
    ComplexMatrix amp(rows, cols);
    for (Eigen::Index a = 0; a < rows; ++a) {
        for (Eigen::Index b = 0; b < cols; ++b) amp(a, b) = v.amplitudes()(a * cols + b);
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(amp);
    SchmidtResult out;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double sv = svd.singularValues()(i);
        out.singular_values.push_back(sv);
        if (sv > kSchmidtTol) ++out.rank;
    }
    return out;
}

}  // namespace qic
