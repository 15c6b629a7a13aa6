#include "rkhs/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace rkhs {

void require_keys(const json& obj, const std::vector<std::string>& allowed,
                  const std::string& where) {
    if (!obj.is_object()) throw std::invalid_argument(where + ": expected a JSON object");
    for (const auto& item : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            throw std::invalid_argument(where + ": unknown key '" + item.key() + "'");
    }
}

json to_json(const KernelSpec& spec) {
    json params = json::object();
    for (const auto& [name, value] : spec.params) params[name] = value;
    return json{{"kind", to_string(spec.kind)}, {"params", params}};
}

KernelSpec kernel_spec_from_json(const json& j) {
    require_keys(j, {"kind", "params"}, "kernel");
    if (!j.contains("kind")) throw std::invalid_argument("kernel: missing 'kind'");
    KernelSpec spec;
    spec.kind = kernel_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("params")) {
        if (!j.at("params").is_object())
            throw std::invalid_argument("kernel: 'params' must be an object");
        for (const auto& item : j.at("params").items())
            spec.params[item.key()] = item.value().get<double>();
    }
    spec.validate();
    return spec;
}

json to_json(const Point& p) { return json(p.coords); }

Point point_from_json(const json& j) {
    if (j.is_number()) return Point::scalar(j.get<double>());
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("point: expected a nonempty coordinate array");
    Point p;
    for (const auto& c : j) p.coords.push_back(c.get<double>());
    return p;
}

json to_json(const PointSet& ps) {
    json arr = json::array();
    for (const auto& p : ps.points) arr.push_back(to_json(p));
    return arr;
}

PointSet point_set_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("points: expected a nonempty array of points");
    PointSet ps;
    for (const auto& pj : j) ps.points.push_back(point_from_json(pj));
    return ps;
}

json to_json(const SignedMeasure& m) {
    if (m.form == SignedMeasure::Form::atomic) {
        json weights = json::array();
        for (Eigen::Index i = 0; i < m.weights.size(); ++i) weights.push_back(m.weights[i]);
        return json{{"form", "atomic"}, {"points", to_json(m.points)}, {"weights", weights}};
    }
    json density = json::array(), quad = json::array();
    for (Eigen::Index i = 0; i < m.density.size(); ++i) {
        density.push_back(m.density[i]);
        quad.push_back(m.quad_weights[i]);
    }
    return json{{"form", "grid_density"},
                {"nodes", to_json(m.nodes)},
                {"density", density},
                {"quad_weights", quad},
                {"rule", to_string(m.rule)}};
}

SignedMeasure signed_measure_from_json(const json& j) {
    if (!j.is_object() || !j.contains("form"))
        throw std::invalid_argument("measure: expected an object with 'form'");
    const std::string form = j.at("form").get<std::string>();
    if (form == "atomic") {
        require_keys(j, {"form", "points", "weights"}, "measure");
        return SignedMeasure::atomic(point_set_from_json(j.at("points")),
                                     j.at("weights").get<std::vector<double>>());
    }
    if (form == "grid_density") {
        require_keys(j, {"form", "nodes", "density", "quad_weights", "rule"}, "measure");
        return SignedMeasure::grid(point_set_from_json(j.at("nodes")),
                                   j.at("density").get<std::vector<double>>(),
                                   j.at("quad_weights").get<std::vector<double>>(),
                                   quad_kind_from_string(j.at("rule").get<std::string>()));
    }
    throw std::invalid_argument("measure: unknown form '" + form + "'");
}

json to_json(const PdReport& r) {
    return json{{"min_eigenvalue", r.min_eigenvalue}, {"pass", r.pass}};
}

json to_json(const PairingResult& r) {
    return json{{"value", r.value},
                {"finiteness_flag", r.finiteness_flag},
                {"quadrature_error_estimate", r.quadrature_error_estimate}};
}

json to_json(const DualNormReport& r) {
    return json{{"sup_over_candidates", r.sup_over_candidates},
                {"self_value", r.self_value},
                {"gap", r.gap}};
}

json to_json(const IsometryReport& r) {
    return json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"gap", r.gap}};
}

json to_json(const LipschitzReport& r) {
    return json{{"max_ratio", r.max_ratio}, {"bound", r.bound}, {"pass", r.pass}};
}

json to_json(const HausdorffReport& r) {
    return json{{"best_witness_gap", r.best_witness_gap},
                {"rkhs_dist", r.rkhs_dist},
                {"pass", r.pass}};
}

json to_json(const NormTrace& t) {
    json stages = json::array();
    for (const auto& st : t.stages)
        stages.push_back(json{{"set_size", st.set_size},
                              {"norm_sq", st.norm_sq},
                              {"condition_estimate", st.condition_estimate},
                              {"flags", st.flags}});
    return json{{"stages", stages},
                {"verdict", to_string(t.verdict)},
                {"sup_estimate", t.sup_estimate}};
}

json to_json(const MomentMembershipReport& r) {
    json series = json::array();
    for (std::size_t n = 0; n < r.partial_sums.size(); ++n)
        series.push_back(json{{"n", n}, {"partial_sum", r.partial_sums[n]}});
    return json{{"series", series}, {"verdict", to_string(r.verdict)}};
}

DiscreteRandomVariable random_variable_from_json(const json& j) {
    require_keys(j, {"probabilities", "values"}, "rv");
    if (!j.contains("probabilities") || !j.contains("values"))
        throw std::invalid_argument("rv: needs 'probabilities' and 'values'");
    DiscreteRandomVariable rv;
    const auto probs = j.at("probabilities").get<std::vector<double>>();
    rv.probabilities =
        Eigen::Map<const Eigen::VectorXd>(probs.data(), static_cast<Eigen::Index>(probs.size()));
    rv.values = point_set_from_json(j.at("values"));
    rv.validate();
    return rv;
}

FunctionSource function_from_json(const Kernel& k, const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("function: expected an object with 'type'");
    const std::string type = j.at("type").get<std::string>();
    if (type == "constant") {
        require_keys(j, {"type", "value"}, "function");
        return FunctionSource::constant(j.at("value").get<double>());
    }
    if (type == "coordinate") {
        require_keys(j, {"type", "axis"}, "function");
        return FunctionSource::coordinate(j.value("axis", 0));
    }
    if (type == "kernel_section") {
        require_keys(j, {"type", "at"}, "function");
        return FunctionSource::kernel_section(k, point_from_json(j.at("at")));
    }
    if (type == "values") {
        require_keys(j, {"type", "points", "values"}, "function");
        return FunctionSource::from_values(point_set_from_json(j.at("points")),
                                           j.at("values").get<std::vector<double>>());
    }
    if (type == "combination") {
        require_keys(j, {"type", "points", "coeffs"}, "function");
        const auto coeffs = j.at("coeffs").get<std::vector<double>>();
        RkhsFunction f{k, point_set_from_json(j.at("points")),
                       Eigen::Map<const Eigen::VectorXd>(coeffs.data(),
                                                         static_cast<Eigen::Index>(coeffs.size()))};
        if (f.support.size() != coeffs.size())
            throw std::invalid_argument("function: points/coeffs length mismatch");
        return f.as_source();
    }
    throw std::invalid_argument("function: unknown type '" + type + "'");
}

}  // namespace rkhs
