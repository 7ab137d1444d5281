// cli.hpp: command layer behind the `qic` binary.
//
// Every command builds a JSON report; --json prints it verbatim, otherwise a
// text rendering is printed. Exit codes: 0 ok, 1 validation failure, 2 parse failure.

#pragma once

#include "qic/paraqubit.hpp"
#include "qic/sim.hpp"
#include "qic/state_spec.hpp"

#include <ostream>

namespace qic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitParse = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

nlohmann::json classify_report(const BipartiteState& state, double tol);
nlohmann::json paraqubit_report(const ParaqubitWeights& w, double tol);
nlohmann::json couple_report(SpinLabel l, SpinLabel s);
nlohmann::json ladder_report(std::size_t dim, bool verify);
nlohmann::json simulation_report_json(const SimulationReport& rep);
nlohmann::json scan_report_json(const ScanReport& rep);
nlohmann::json counting_report(const BipartiteDims& dims);
nlohmann::json entropy_report(const BipartiteState& state);
nlohmann::json entropy_report(const ProbabilityDistribution& d);

}  // namespace qic::cli
