#include "qic/cli.hpp"

#include "qic/info.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <string>

namespace qic::cli {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- formatting

std::string num(double v) {
    if (std::abs(v) < 5e-13) v = 0.0;  // no "-0" or 1e-17 noise in tables
    return fmt::format("{:.6g}", v);
}

std::string cnum(Complex z) {
    const double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
    if (im == 0.0) return num(re);
    if (re == 0.0) return num(im) + "i";
    return fmt::format("{}{}{}i", num(re), im < 0 ? "-" : "+", num(std::abs(im)));
}

std::string half(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

void print_matrix(std::ostream& out, const ComplexMatrix& m, const std::string& indent = "  ") {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            cells.push_back(cnum(m(i, k)));
            width = std::max(width, cells.back().size());
        }
    }
    std::size_t c = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << indent;
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            out << fmt::format("{:>{}}", cells[c++], width + 2);
        }
        out << '\n';
    }
}

void kv(std::ostream& out, const std::string& key, const std::string& value) {
    out << fmt::format("{:<28}{}\n", key, value);
}

std::string list(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
    return s + "]";
}

json to_json(const DegeneracyClasses& d) {
    json out = json::array();
    for (const auto& g : d) out.push_back(g);
    return out;
}

ComplexMatrix json_matrix(const json& j) {
    ComplexMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(j.empty() ? 0 : j[0].size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        for (std::size_t k = 0; k < j[i].size(); ++k) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = {j[i][k][0].get<double>(),
                                                                              j[i][k][1].get<double>()};
        }
    }
    return m;
}

json subsystem_json(const DensityMatrix& rho) {
    return {{"matrix", matrix_json(rho.matrix())},
            {"eigenvalues", rho.spectrum().eigenvalues},
            {"purity", purity(rho)},
            {"entropy_bits", spectral_entropy(rho)}};
}

json class_json(const ChannelClass& c) {
    return {{"label", std::string(to_string(c.label))},
            {"factorization_residual", c.factorization_residual},
            {"ppt_min_eigenvalue", c.ppt_min_eigenvalue},
            {"ppt_conclusive", c.ppt_conclusive}};
}

void print_class(std::ostream& out, const json& c) {
    kv(out, "class", c["label"].get<std::string>());
    kv(out, "factorization residual", num(c["factorization_residual"].get<double>()));
    kv(out, "PPT min eigenvalue", num(c["ppt_min_eigenvalue"].get<double>()));
    kv(out, "PPT conclusive", c["ppt_conclusive"].get<bool>() ? "yes" : "no");
}

std::string classes_text(const json& groups) {
    std::string s;
    for (const auto& g : groups) {
        s += "{";
        for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + g[i].dump();
        s += "} ";
    }
    return s;
}

// ---------------------------------------------------------------- text renderers

void print_classify(std::ostream& out, const json& r) {
    kv(out, "dims", fmt::format("{} x {}", r["dims"][0].get<int>(), r["dims"][1].get<int>()));
    print_class(out, r["class"]);
    if (r.contains("concurrence")) kv(out, "concurrence", num(r["concurrence"].get<double>()));
    kv(out, "spectrum", list(r["spectrum"].get<std::vector<double>>()));
    kv(out, "degeneracy classes", classes_text(r["degeneracy_classes"]));
    kv(out, "purity", num(r["purity"].get<double>()));
    for (const char* side : {"rho_a", "rho_b"}) {
        const json& s = r[side];
        out << side << " (purity " << num(s["purity"].get<double>()) << ", entropy "
            << num(s["entropy_bits"].get<double>()) << " bits)\n";
        print_matrix(out, json_matrix(s["matrix"]));
    }
}

void print_paraqubit(std::ostream& out, const json& r) {
    const json& w = r["weights"];
    kv(out, "weights (s, 0, d, u)",
       fmt::format("{}, {}, {}, {}", num(w["p_s"].get<double>()), num(w["p_0"].get<double>()),
                   num(w["p_d"].get<double>()), num(w["p_u"].get<double>())));
    out << "density matrix (induced basis |--⟩ |-+⟩ |+-⟩ |++⟩)\n";
    print_matrix(out, json_matrix(r["matrix"]));
    kv(out, "spectrum", list(r["spectrum"].get<std::vector<double>>()));
    kv(out, "degeneracy criterion", r["degeneracy_criterion"].get<bool>() ? "true (p_s = p_0)" : "false");
    kv(out, "concurrence", num(r["concurrence"].get<double>()));
    kv(out, "concurrence (closed form)", num(r["concurrence_closed_form"].get<double>()));
    print_class(out, r["class"]);
}

void print_couple(std::ostream& out, const json& r) {
    const int two_l = r["two_l"].get<int>();
    const int two_s = r["two_s"].get<int>();
    out << "coupling l = " << half(two_l) << " with s = " << half(two_s) << '\n';
    std::vector<std::string> heads;
    std::size_t width = 6;
    for (const auto& ib : r["induced_basis"]) {
        heads.push_back(half(ib["two_ml"].get<int>()) + "," + half(ib["two_ms"].get<int>()));
        width = std::max(width, heads.back().size());
    }
    for (const auto& row : r["rows"]) {
        for (const auto& c : row["coefficients"]) width = std::max(width, num(c.get<double>()).size());
    }
    width += 2;
    out << fmt::format("{:>6}{:>6}", "j", "m");
    for (const auto& h : heads) out << fmt::format("{:>{}}", h, width);
    out << "  schmidt\n";
    for (const auto& row : r["rows"]) {
        out << fmt::format("{:>6}{:>6}", half(row["two_j"].get<int>()), half(row["two_m"].get<int>()));
        for (const auto& c : row["coefficients"]) out << fmt::format("{:>{}}", num(c.get<double>()), width);
        out << fmt::format("  {}{}\n", row["schmidt_rank"].get<int>(), row["product"].get<bool>() ? "  product" : "");
    }
    kv(out, "unitarity residual", num(r["unitarity_residual"].get<double>()));
}

void print_ladder(std::ostream& out, const json& r) {
    out << "N = " << r["dim"].get<int>() << '\n';
    for (const char* name : {"j_plus", "j_minus", "j3"}) {
        out << name << '\n';
        print_matrix(out, json_matrix(r[name]));
    }
    if (r.contains("residuals")) {
        for (const auto& [k, v] : r["residuals"].items()) kv(out, k, num(v.get<double>()));
    }
}

void print_simulation(std::ostream& out, const json& r) {
    kv(out, "generator", r["generator"].get<std::string>());
    kv(out, "seed", std::to_string(r["seed"].get<std::uint64_t>()));
    kv(out, "shots", std::to_string(r["shots"].get<std::uint64_t>()));
    const auto na = r["dims"][0].get<std::size_t>();
    const auto nb = r["dims"][1].get<std::size_t>();
    out << fmt::format("{:>6}{:>6}{:>12}{:>14}{:>14}{:>14}\n", "a", "b", "count", "empirical", "analytic", "deviation");
    for (std::size_t a = 0; a < na; ++a) {
        for (std::size_t b = 0; b < nb; ++b) {
            const std::size_t k = a * nb + b;
            out << fmt::format("{:>6}{:>6}{:>12}{:>14}{:>14}{:>14}\n", a, b, r["counts"][k].get<std::uint64_t>(),
                               num(r["empirical"][k].get<double>()), num(r["analytic"][k].get<double>()),
                               num(r["deviation"][k].get<double>()));
        }
    }
    kv(out, "marginal A (empirical)", list(r["marginal_a"].get<std::vector<double>>()));
    kv(out, "marginal B (empirical)", list(r["marginal_b"].get<std::vector<double>>()));
    kv(out, "empirical entropy (bits)", num(r["empirical_entropy_bits"].get<double>()));
    kv(out, "analytic entropy (bits)", num(r["analytic_entropy_bits"].get<double>()));
    kv(out, "deviation statistic", num(r["deviation_statistic"].get<double>()));
}

void print_scan_summary(std::ostream& out, const json& r) {
    const json& s = r["summary"];
    kv(out, "resolution", num(r["resolution"].get<double>()));
    for (const char* k : {"points", "agree_separable", "agree_entangled", "criterion_gap", "criterion_violations",
                          "other_pair_entangled"}) {
        kv(out, k, std::to_string(s[k].get<std::size_t>()));
    }
    for (const char* k : {"example_gap", "example_other_pair"}) {
        if (!r.contains(k)) continue;
        const json& p = r[k];
        kv(out, k,
           fmt::format("p=({}, {}, {}, {}) concurrence {}", num(p["p_s"].get<double>()), num(p["p_0"].get<double>()),
                       num(p["p_d"].get<double>()), num(p["p_u"].get<double>()), num(p["concurrence"].get<double>())));
    }
}

void print_counting(std::ostream& out, const json& r) {
    kv(out, "dims", fmt::format("{} x {}", r["na"].get<int>(), r["nb"].get<int>()));
    for (const char* k : {"pure_full", "pure_product", "mixed_full", "mixed_product_sum", "missing"}) {
        kv(out, k, std::to_string(r[k].get<long long>()));
    }
}

void print_entropy(std::ostream& out, const json& r) {
    for (const auto& [k, v] : r.items()) {
        if (k == "command") continue;
        if (v.is_number()) kv(out, k, num(v.get<double>()));
        else if (v.is_array()) kv(out, k, list(v.get<std::vector<double>>()));
    }
}

// ---------------------------------------------------------------- logging

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto logger = std::make_shared<spdlog::logger>("qic", sink);
    logger->set_pattern("[qic %l] %v");
    spdlog::level::level_enum level = spdlog::level::warn;
    if (const char* env = std::getenv("QIC_LOG")) {
        const std::string v = env;
        if (v == "error") level = spdlog::level::err;
        else if (v == "warn") level = spdlog::level::warn;
        else if (v == "info") level = spdlog::level::info;
        else if (v == "debug") level = spdlog::level::debug;
    }
    logger->set_level(level);
    return logger;
}

}  // namespace

// ---------------------------------------------------------------- reports

json classify_report(const BipartiteState& state, double tol) {
    const ChannelClass cls = classify(state, tol);
    json r{{"command", "classify"},
           {"dims", {state.dims().na, state.dims().nb}},
           {"class", class_json(cls)},
           {"spectrum", state.rho().spectrum().eigenvalues},
           {"degeneracy_classes", to_json(degeneracy_classes(state.rho().spectrum(), tol))},
           {"purity", purity(state.rho())},
           {"entropy_bits", spectral_entropy(state.rho())},
           {"rho_a", subsystem_json(partial_trace_b(state))},
           {"rho_b", subsystem_json(partial_trace_a(state))}};
    if (state.dims() == BipartiteDims(2, 2)) r["concurrence"] = concurrence(state);
    return r;
}

json paraqubit_report(const ParaqubitWeights& w, double tol) {
    const BipartiteState state = paraqubit_density(w);
    return {{"command", "paraqubit"},
            {"weights", {{"p_s", w.p_s}, {"p_0", w.p_0}, {"p_d", w.p_d}, {"p_u", w.p_u}}},
            {"matrix", matrix_json(state.rho().matrix())},
            {"spectrum", state.rho().spectrum().eigenvalues},
            {"degeneracy_criterion", degeneracy_criterion(w, tol)},
            {"concurrence", concurrence(state)},
            {"concurrence_closed_form", concurrence_closed_form(w)},
            {"class", class_json(classify(state, tol))},
            {"state_spec", state_spec_json(state)}};
}

json couple_report(SpinLabel l, SpinLabel s) {
    const CGTable t = coupled_basis(l, s);
    json induced = json::array();
    for (int two_ml = -l.two_j; two_ml <= l.two_j; two_ml += 2) {
        for (int two_ms = -s.two_j; two_ms <= s.two_j; two_ms += 2) {
            induced.push_back({{"two_ml", two_ml}, {"two_ms", two_ms}});
        }
    }
    json rows = json::array();
    for (std::size_t r = 0; r < t.dim(); ++r) {
        std::vector<double> coeffs;
        for (Eigen::Index c = 0; c < t.unitary.cols(); ++c) coeffs.push_back(t.unitary(static_cast<Eigen::Index>(r), c).real());
        const auto sr = schmidt_rank(t.vector(r), l.multiplicity(), s.multiplicity());
        rows.push_back({{"two_j", t.states[r].two_j},
                        {"two_m", t.states[r].two_m},
                        {"coefficients", coeffs},
                        {"schmidt_rank", sr.rank},
                        {"product", sr.rank == 1}});
    }
    const auto n = t.unitary.rows();
    return {{"command", "couple"},
            {"two_l", l.two_j},
            {"two_s", s.two_j},
            {"induced_basis", std::move(induced)},
            {"rows", std::move(rows)},
            {"unitarity_residual", max_abs_diff(t.unitary * t.unitary.adjoint(), ComplexMatrix::Identity(n, n))}};
}

json ladder_report(std::size_t dim, bool verify) {
    const LadderSet ops = ladder_ops(dim);
    json r{{"command", "ladder"},
           {"dim", dim},
           {"j_plus", matrix_json(ops.j_plus)},
           {"j_minus", matrix_json(ops.j_minus)},
           {"j3", matrix_json(ops.j3)}};
    if (verify) {
        const double j = (static_cast<double>(dim) - 1.0) / 2.0;
        const auto n = static_cast<Eigen::Index>(dim);
        const ComplexMatrix c2 = casimir(ops);
        const ComplexMatrix zero = ComplexMatrix::Zero(n, n);
        r["residuals"] = {
            {"[J3,J+] - J+", max_abs_diff(commutator(ops.j3, ops.j_plus), ops.j_plus)},
            {"[J3,J-] + J-", max_abs_diff(commutator(ops.j3, ops.j_minus), -ops.j_minus)},
            {"[J+,J-] - 2J3", max_abs_diff(commutator(ops.j_plus, ops.j_minus), 2.0 * ops.j3)},
            {"J- - J+^dagger", max_abs_diff(ops.j_minus, ops.j_plus.adjoint())},
            {"casimir - j(j+1)I", max_abs_diff(c2, j * (j + 1.0) * ComplexMatrix::Identity(n, n))},
            {"[casimir,J+]", max_abs_diff(commutator(c2, ops.j_plus), zero)},
            {"[casimir,J3]", max_abs_diff(commutator(c2, ops.j3), zero)},
        };
    }
    return r;
}

json simulation_report_json(const SimulationReport& rep) {
    std::vector<double> empirical(rep.counts.size());
    for (std::size_t k = 0; k < rep.counts.size(); ++k) {
        empirical[k] = static_cast<double>(rep.counts[k]) / static_cast<double>(rep.shots);
    }
    return {{"command", "simulate"},
            {"generator", rep.generator},
            {"seed", rep.seed},
            {"shots", rep.shots},
            {"dims", {rep.dims.na, rep.dims.nb}},
            {"counts", rep.counts},
            {"empirical", empirical},
            {"analytic", rep.analytic.flat()},
            {"deviation", rep.deviation},
            {"marginal_a", rep.marginal_a},
            {"marginal_b", rep.marginal_b},
            {"analytic_marginal_a", rep.analytic.row_sums()},
            {"analytic_marginal_b", rep.analytic.col_sums()},
            {"empirical_entropy_bits", rep.empirical_entropy},
            {"analytic_entropy_bits", shannon_entropy(ProbabilityDistribution(rep.analytic.flat()))},
            {"deviation_statistic", deviation_statistic(rep)}};
}

namespace {

json point_json(const ScanPoint& p) {
    static const char* names[] = {"p_s", "p_0", "p_d", "p_u"};
    json groups = json::array();
    for (const auto& g : p.degeneracy) {
        json names_g = json::array();
        for (auto i : g) names_g.push_back(names[i]);
        groups.push_back(std::move(names_g));
    }
    return {{"p_s", p.weights.p_s},
            {"p_0", p.weights.p_0},
            {"p_d", p.weights.p_d},
            {"p_u", p.weights.p_u},
            {"degeneracy_criterion", p.criterion},
            {"concurrence", p.concurrence},
            {"concurrence_closed_form", p.concurrence_closed_form},
            {"ppt_min_eigenvalue", p.ppt_min_eigenvalue},
            {"label", std::string(to_string(p.label))},
            {"degeneracy_classes", std::move(groups)}};
}

}  // namespace

json scan_report_json(const ScanReport& rep) {
    const ScanSummary& s = rep.summary;
    json r{{"command", "scan-paraqubit"},
           {"resolution", rep.resolution},
           {"steps", rep.steps},
           {"summary",
            {{"points", s.points},
             {"agree_separable", s.agree_separable},
             {"agree_entangled", s.agree_entangled},
             {"criterion_gap", s.criterion_gap},
             {"criterion_violations", s.criterion_violations},
             {"other_pair_entangled", s.other_pair_entangled}}},
           {"disagreements", rep.disagreements}};
    json points = json::array();
    for (const auto& p : rep.points) points.push_back(point_json(p));
    r["points"] = std::move(points);
    for (const auto& p : rep.points) {
        if (!p.criterion && p.oracle_separable()) {
            r["example_gap"] = point_json(p);
            break;
        }
    }
    for (const auto& p : rep.points) {
        const bool other = std::any_of(p.degeneracy.begin(), p.degeneracy.end(), [](const auto& g) { return g.size() >= 2; });
        if (!p.criterion && other && !p.oracle_separable()) {
            r["example_other_pair"] = point_json(p);
            break;
        }
    }
    return r;
}

json counting_report(const BipartiteDims& dims) {
    const ParameterCount c = parameter_counting(dims);
    return {{"command", "counting"},
            {"na", dims.na},
            {"nb", dims.nb},
            {"pure_full", c.pure_full},
            {"pure_product", c.pure_product},
            {"mixed_full", c.mixed_full},
            {"mixed_product_sum", c.mixed_product_sum},
            {"missing", c.missing}};
}

json entropy_report(const BipartiteState& state) {
    const JointDistribution joint = joint_distribution(state);
    return {{"command", "entropy"},
            {"spectral_entropy_bits", spectral_entropy(state.rho())},
            {"entropy_a_bits", spectral_entropy(partial_trace_b(state))},
            {"entropy_b_bits", spectral_entropy(partial_trace_a(state))},
            {"detection_entropy_bits", shannon_entropy(ProbabilityDistribution(joint.flat()))},
            {"detection_probabilities", joint.flat()}};
}

json entropy_report(const ProbabilityDistribution& d) {
    // −log p is unbounded at p = 0; JSON has no infinity, so those entries are null
    json ic = json::array();
    for (double p : d.probs()) ic.push_back(p > 0.0 ? json(information_content(p)) : json(nullptr));
    return {{"command", "entropy"},
            {"shannon_entropy_bits", shannon_entropy(d)},
            {"probabilities", d.probs()},
            {"information_content_bits", std::move(ic)}};
}

// ---------------------------------------------------------------- driver

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    auto log = make_logger(err);

    CLI::App app{"Paired quantum channel analysis: ladder operators, Clebsch-Gordan coupling,\n"
                 "partial traces, detection statistics and entanglement classification.\n"
                 "Half-integer spins are passed doubled (two_l = 2l)."};
    app.require_subcommand(1);

    bool as_json = false;
    double tol = kDefaultClassifyTol;
    std::string input;
    std::string out_path;
    std::uint64_t seed = 0;
    std::uint64_t shots = 100000;
    unsigned workers = 1;
    double resolution = kDefaultScanResolution;
    std::vector<double> weights4;
    int two_l = 0, two_s = 0;
    std::size_t dim = 0;
    bool verify = false;
    std::size_t na = 1, nb = 1;
    std::vector<double> probs;

    auto add_json = [&](CLI::App* c) { c->add_flag("--json", as_json, "Emit a single JSON document"); };
    auto add_tol = [&](CLI::App* c) {
        c->add_option("--tol", tol, "Classification tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    };

    auto* c_classify = app.add_subcommand("classify", "Classify a paired channel state");
    c_classify->add_option("--input", input, "State spec JSON file")->required();
    add_tol(c_classify);
    add_json(c_classify);

    auto* c_para = app.add_subcommand("paraqubit", "Analyse p_s, p_0, p_d, p_u paraqubit mixture");
    c_para->add_option("weights", weights4, "p_s p_0 p_d p_u")->required()->expected(4);
    add_tol(c_para);
    add_json(c_para);

    auto* c_couple = app.add_subcommand("couple", "Clebsch-Gordan table of l (x) s");
    c_couple->add_option("two_l", two_l, "2l")->required();
    c_couple->add_option("two_s", two_s, "2s (<= 2l)")->required();
    add_json(c_couple);

    auto* c_ladder = app.add_subcommand("ladder", "Ladder operators for dimension N");
    c_ladder->add_option("dim", dim, "N")->required();
    c_ladder->add_flag("--verify", verify, "Report commutator and Casimir residuals");
    add_json(c_ladder);

    auto* c_sim = app.add_subcommand("simulate", "Monte-Carlo detection statistics");
    c_sim->add_option("--input", input, "State spec JSON file")->required();
    c_sim->add_option("--shots", shots, "Number of shots")->capture_default_str();
    c_sim->add_option("--seed", seed, "Generator seed")->capture_default_str();
    c_sim->add_option("--workers", workers, "Worker threads (output does not depend on it)")->capture_default_str();
    add_json(c_sim);

    auto* c_scan = app.add_subcommand("scan-paraqubit", "Sweep the paraqubit weight simplex");
    c_scan->add_option("--resolution", resolution, "Grid step")->capture_default_str();
    c_scan->add_option("--out", out_path, "Path of the JSON grid report")->required();
    add_tol(c_scan);
    add_json(c_scan);

    auto* c_count = app.add_subcommand("counting", "Parameter counts for dims na x nb");
    c_count->add_option("na", na, "na")->required();
    c_count->add_option("nb", nb, "nb")->required();
    add_json(c_count);

    auto* c_entropy = app.add_subcommand("entropy", "Shannon / spectral entropies");
    auto* opt_in = c_entropy->add_option("--input", input, "State spec JSON file");
    auto* opt_p = c_entropy->add_option("--probs", probs, "Probability distribution");
    opt_in->excludes(opt_p);
    add_json(c_entropy);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitParse;
    }

    try {
        json report;
        void (*render)(std::ostream&, const json&) = nullptr;

        if (*c_classify) {
            log->debug("classify {}", input);
            report = classify_report(load_state_spec(input).to_state(), tol);
            render = print_classify;
        } else if (*c_para) {
            report = paraqubit_report(ParaqubitWeights(weights4[0], weights4[1], weights4[2], weights4[3]), tol);
            render = print_paraqubit;
        } else if (*c_couple) {
            if (two_l < 0 || two_s < 0 || two_s > two_l) {
                throw ValidationError("spin labels", "need 0 <= two_s <= two_l");
            }
            report = couple_report(SpinLabel(two_l), SpinLabel(two_s));
            render = print_couple;
        } else if (*c_ladder) {
            report = ladder_report(dim, verify);
            render = print_ladder;
        } else if (*c_sim) {
            const StateSpec spec = load_state_spec(input);
            log->info("simulating {} shots, seed {}", shots, seed);
            report = simulation_report_json(
                run_simulation(SimulationConfig{spec.to_source(), shots, seed, workers}));
            render = print_simulation;
        } else if (*c_scan) {
            const ScanReport scan = phase_diagram_scan(resolution, tol);
            report = scan_report_json(scan);
            std::ofstream f(out_path);
            if (!f) throw ValidationError("writable output", "cannot open " + out_path);
            f << report.dump(2) << '\n';
            if (!f) throw ValidationError("writable output", "failed writing " + out_path);
            log->info("wrote {} grid points to {}", scan.points.size(), out_path);
            report.erase("points");
            report["out"] = out_path;
            render = print_scan_summary;
        } else if (*c_count) {
            report = counting_report(BipartiteDims(na, nb));
            render = print_counting;
        } else if (*c_entropy) {
            if (!input.empty()) {
                report = entropy_report(load_state_spec(input).to_state());
            } else if (!probs.empty()) {
                report = entropy_report(ProbabilityDistribution(probs));
            } else {
                throw ParseError("entropy needs --input or --probs");
            }
            render = print_entropy;
        }

        if (as_json) {
            out << report.dump() << '\n';
        } else {
            render(out, report);
        }
        return kExitOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    }
}

}  // namespace qic::cli
