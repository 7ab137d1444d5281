#include "qic/state_spec.hpp"

#include <fstream>
#include <sstream>

namespace qic {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return obj.at(key);
}

double as_number(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
    return j.get<double>();
}

long long as_integer(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<long long>();
}

Complex parse_complex(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("complex numbers must be [re, im] pairs");
    return make_scalar(as_number(j[0], "re"), as_number(j[1], "im"));
}

MixtureSpec parse_mixture(const json& root) {
    const json& dims = require(root, "dims");
    if (!dims.is_array() || dims.size() != 2) throw ParseError("\"dims\" must be [na, nb]");
    const long long na = as_integer(dims[0], "dims[0]");
    const long long nb = as_integer(dims[1], "dims[1]");
    if (na < 1 || nb < 1) throw ValidationError("positive dimension", "dims must be >= 1");

    MixtureSpec spec{BipartiteDims(static_cast<std::size_t>(na), static_cast<std::size_t>(nb)), {}, {}};
    const json& mix = require(root, "mixture");
    if (!mix.is_array() || mix.empty()) throw ParseError("\"mixture\" must be a nonempty array");
    for (const json& comp : mix) {
        spec.weights.push_back(as_number(require(comp, "weight"), "weight"));
        const json& vec = require(comp, "vector");
        if (!vec.is_array()) throw ParseError("\"vector\" must be an array of [re, im] pairs");
        ComplexVector v(static_cast<Eigen::Index>(vec.size()));
        for (std::size_t i = 0; i < vec.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_complex(vec[i]);
        if (static_cast<std::size_t>(v.size()) != spec.dims.total()) {
            throw ValidationError("dimension match", "vector length " + std::to_string(v.size()) +
                                                         " does not match dims product " +
                                                         std::to_string(spec.dims.total()));
        }
        spec.vectors.emplace_back(std::move(v));
    }
    return spec;
}

CoupledWeights parse_coupled(const json& c) {
    const long long two_l = as_integer(require(c, "two_l"), "two_l");
    const long long two_s = as_integer(require(c, "two_s"), "two_s");
    if (two_l < 0 || two_s < 0 || two_l > 200 || two_s > 200) {
        throw ValidationError("spin label range", "two_l and two_s must lie in [0, 200]");
    }
    const json& ws = require(c, "weights");
    if (!ws.is_array()) throw ParseError("\"weights\" must be an array");
    std::vector<CoupledWeightEntry> entries;
    for (const json& w : ws) {
        entries.push_back({static_cast<int>(as_integer(require(w, "two_j"), "two_j")),
                           static_cast<int>(as_integer(require(w, "two_m"), "two_m")),
                           as_number(require(w, "p"), "p")});
    }
    return CoupledWeights(SpinLabel(static_cast<int>(two_l)), SpinLabel(static_cast<int>(two_s)), entries);
}

}  // namespace

BipartiteState StateSpec::to_state() const {
    if (const auto* m = std::get_if<MixtureSpec>(&form)) {
        return {m->dims, density_from_mixture(m->weights, m->vectors)};
    }
    return coupled_mixture(std::get<CoupledWeights>(form));
}

SourceSpec StateSpec::to_source() const {
    if (const auto* cw = std::get_if<CoupledWeights>(&form)) return *cw;
    return to_state();
}

StateSpec parse_state_spec(const json& j) {
    if (!j.is_object()) throw ParseError("state spec must be a JSON object");
    const bool has_mixture = j.contains("mixture") || j.contains("dims");
    const bool has_coupled = j.contains("coupled");
    if (has_mixture == has_coupled) {
        throw ParseError("state spec needs exactly one of {dims, mixture} or {coupled}");
    }
    if (has_coupled) return {parse_coupled(j.at("coupled"))};
    return {parse_mixture(j)};
}

StateSpec parse_state_spec_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_state_spec(j);
}

StateSpec load_state_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read input file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_spec_text(buf.str());
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json state_spec_json(const BipartiteState& state) {
    const Spectrum& spec = state.rho().spectrum();
    json mix = json::array();
    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        if (spec.eigenvalues[k] <= 0.0) continue;
        json vec = json::array();
        const ComplexVector& v = spec.eigenvectors[k].amplitudes();
        for (Eigen::Index i = 0; i < v.size(); ++i) vec.push_back(complex_json(v(i)));
        mix.push_back({{"weight", spec.eigenvalues[k]}, {"vector", std::move(vec)}});
    }
    return {{"dims", {state.dims().na, state.dims().nb}}, {"mixture", std::move(mix)}};
}

json state_spec_json(const CoupledWeights& cw) {
    json ws = json::array();
    for (const auto& e : cw.entries()) ws.push_back({{"two_j", e.two_j}, {"two_m", e.two_m}, {"p", e.p}});
    return {{"coupled", {{"two_l", cw.l().two_j}, {"two_s", cw.s().two_j}, {"weights", std::move(ws)}}}};
}

}  // namespace qic
