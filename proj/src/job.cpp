#include "rkhs/job.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "rkhs/applications.hpp"
#include "rkhs/csv.hpp"
#include "rkhs/fbm.hpp"
#include "rkhs/gaussian.hpp"
#include "rkhs/gram.hpp"
#include "rkhs/measures.hpp"
#include "rkhs/projection.hpp"
#include "rkhs/serialize.hpp"
#include "rkhs/verify.hpp"

namespace rkhs {

namespace {

const std::vector<std::string> kCommands = {
    "gram", "interp", "norm-trace", "membership", "metric", "pair",
    "embed", "distance", "verify-suite", "fbm-compare", "gaussian-check", "isometry-check"};

bool known_command(const std::string& c) {
    for (const auto& k : kCommands)
        if (k == c) return true;
    return false;
}

std::string infer_format(const std::string& path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return "csv";
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return "json";
    throw std::invalid_argument("cannot infer output format from path '" + path +
                                "'; set output.format");
}

void write_artifact(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("failed writing artifact '" + path + "'");
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

Kernel kernel_from(const JobConfig& cfg) {
    if (cfg.kernel.is_null())
        throw std::invalid_argument("command '" + cfg.command + "' requires a 'kernel' entry");
    return Kernel::from_spec(kernel_spec_from_json(cfg.kernel));
}

std::vector<PointSet> chain_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("chain: expected an object with 'type'");
    const std::string type = j.at("type").get<std::string>();
    if (type == "dyadic") {
        require_keys(j, {"type", "a", "b", "levels", "include_left"}, "chain");
        return dyadic_chain(j.at("a").get<double>(), j.at("b").get<double>(),
                            j.at("levels").get<int>(), j.value("include_left", true));
    }
    if (type == "prefix") {
        require_keys(j, {"type", "points", "sizes"}, "chain");
        return prefix_chain(point_set_from_json(j.at("points")),
                            j.at("sizes").get<std::vector<std::size_t>>());
    }
    if (type == "explicit") {
        require_keys(j, {"type", "sets"}, "chain");
        std::vector<PointSet> chain;
        for (const auto& s : j.at("sets")) chain.push_back(point_set_from_json(s));
        if (chain.empty()) throw std::invalid_argument("chain: 'sets' is empty");
        return chain;
    }
    throw std::invalid_argument("chain: unknown type '" + type + "'");
}

DensityOnGrid density_from_json(const json& j, double padding_factor) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("density: expected an object with 'type'");
    const std::string type = j.at("type").get<std::string>();
    DensityOnGrid g;
    if (type == "gaussian_bump") {
        require_keys(j, {"type", "a", "b", "n"}, "density");
        g = DensityOnGrid::gaussian_bump(j.at("a").get<double>(), j.at("b").get<double>(),
                                         j.at("n").get<std::size_t>());
    } else if (type == "csv") {
        require_keys(j, {"type", "path"}, "density");
        std::ifstream in(j.at("path").get<std::string>());
        if (!in)
            throw std::runtime_error("cannot open density CSV '" +
                                     j.at("path").get<std::string>() + "'");
        g = DensityOnGrid::from_csv(in);
    } else {
        throw std::invalid_argument("density: unknown type '" + type + "'");
    }
    g.padding_factor = padding_factor;
    return g;
}

// ---- command handlers ----------------------------------------------------

JobOutcome run_metric(const JobConfig& cfg) {
    require_keys(cfg.payload, {"points"}, "metric payload");
    const Kernel k = kernel_from(cfg);
    const PointSet pts = point_set_from_json(cfg.payload.at("points"));
    std::ostringstream csv;
    json rows = json::array();
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double d = dk_metric(k, pts[i], pts[j]);
            ++pairs;
            if (cfg.output_format == "csv") {
                std::vector<double> row = pts[i].coords;
                row.insert(row.end(), pts[j].coords.begin(), pts[j].coords.end());
                row.push_back(d);
                write_csv_row(csv, row);
            } else {
                rows.push_back(json{{"t", to_json(pts[i])}, {"s", to_json(pts[j])}, {"d_k", d}});
            }
        }
    write_artifact(cfg.output_path,
                   cfg.output_format == "csv" ? csv.str() : dump_json(rows));
    return {kExitOk, "metric: " + std::to_string(pairs) + " pair(s) written", cfg.output_path};
}

JobOutcome run_gram(const JobConfig& cfg) {
    require_keys(cfg.payload, {"points"}, "gram payload");
    const Kernel k = kernel_from(cfg);
    const PointSet pts = point_set_from_json(cfg.payload.at("points"));
    const GramFactor G = build_gram(k, pts, cfg.tolerance("rank_tol", 1e-11));
    if (cfg.output_format == "csv") {
        std::ostringstream csv;
        write_gram_csv(csv, G.matrix());
        write_artifact(cfg.output_path, csv.str());
    } else {
        json matrix = json::array();
        for (Eigen::Index i = 0; i < G.matrix().rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < G.matrix().cols(); ++j) row.push_back(G.matrix()(i, j));
            matrix.push_back(row);
        }
        write_artifact(cfg.output_path,
                       dump_json(json{{"matrix", matrix},
                                      {"numerical_rank", G.numerical_rank()},
                                      {"factor_kind", G.factor_kind() == FactorKind::cholesky
                                                          ? "cholesky"
                                                          : "eigen_pinv"}}));
    }
    return {kExitOk,
            "gram: " + std::to_string(pts.size()) + "x" + std::to_string(pts.size()) +
                " matrix, rank " + std::to_string(G.numerical_rank()),
            cfg.output_path};
}

JobOutcome run_interp(const JobConfig& cfg) {
    require_keys(cfg.payload, {"points", "function", "probes"}, "interp payload");
    const Kernel k = kernel_from(cfg);
    const PointSet pts = point_set_from_json(cfg.payload.at("points"));
    const FunctionSource f = function_from_json(k, cfg.payload.at("function"));
    const RkhsFunction qf = qf_project(k, pts, f);
    const double norm_sq = qf_norm_sq(k, pts, f);
    if (cfg.output_format == "csv") {
        std::ostringstream csv;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            std::vector<double> row = pts[j].coords;
            row.push_back(qf.coeffs[static_cast<Eigen::Index>(j)]);
            write_csv_row(csv, row);
        }
        write_artifact(cfg.output_path, csv.str());
    } else {
        json probes = json::array();
        if (cfg.payload.contains("probes")) {
            for (const auto& pj : cfg.payload.at("probes")) {
                const Point p = point_from_json(pj);
                probes.push_back(json{{"point", to_json(p)}, {"value", qf(p)}});
            }
        }
        json coeffs = json::array();
        for (Eigen::Index j = 0; j < qf.coeffs.size(); ++j) coeffs.push_back(qf.coeffs[j]);
        write_artifact(cfg.output_path, dump_json(json{{"support", to_json(pts)},
                                                       {"coeffs", coeffs},
                                                       {"norm_sq", norm_sq},
                                                       {"probes", probes}}));
    }
    std::ostringstream s;
    s << "interp: " << pts.size() << " coefficients, norm_sq " << format_double(norm_sq);
    return {kExitOk, s.str(), cfg.output_path};
}

JobOutcome run_norm_trace(const JobConfig& cfg) {
    require_keys(cfg.payload, {"chain", "function"}, "norm-trace payload");
    const Kernel k = kernel_from(cfg);
    const auto chain = chain_from_json(cfg.payload.at("chain"));
    const FunctionSource f = function_from_json(k, cfg.payload.at("function"));
    TraceOptions opt;
    opt.plateau_tol = cfg.tolerance("plateau_tol", opt.plateau_tol);
    opt.divergence_slope = cfg.tolerance("divergence_slope", opt.divergence_slope);
    const NormTrace trace = norm_sup_estimate(k, chain, f, opt);
    if (cfg.output_format == "csv") {
        std::ostringstream csv;
        write_norm_trace_csv(csv, trace);
        write_artifact(cfg.output_path, csv.str());
    } else {
        write_artifact(cfg.output_path, dump_json(to_json(trace)));
    }
    return {kExitOk,
            "norm-trace: " + std::to_string(trace.stages.size()) + " stage(s), verdict " +
                to_string(trace.verdict),
            cfg.output_path};
}

JobOutcome run_membership(const JobConfig& cfg) {
    require_keys(cfg.payload, {"measure", "N"}, "membership payload");
    const SignedMeasure mu = signed_measure_from_json(cfg.payload.at("measure"));
    const int n = cfg.payload.value("N", 40);
    const MomentMembershipReport report = moment_membership(mu, n);
    if (cfg.output_format == "csv") {
        std::ostringstream csv;
        csv << "n,partial_sum\n";
        for (std::size_t i = 0; i < report.partial_sums.size(); ++i)
            csv << i << ',' << format_double(report.partial_sums[i]) << '\n';
        write_artifact(cfg.output_path, csv.str());
    } else {
        write_artifact(cfg.output_path, dump_json(to_json(report)));
    }
    return {kExitOk, "membership: verdict " + to_string(report.verdict), cfg.output_path};
}

JobOutcome run_pair(const JobConfig& cfg) {
    require_keys(cfg.payload, {"xi", "eta"}, "pair payload");
    const Kernel k = kernel_from(cfg);
    const PairingResult r = measure_pair(k, signed_measure_from_json(cfg.payload.at("xi")),
                                         signed_measure_from_json(cfg.payload.at("eta")));
    if (cfg.output_format == "csv") {
        std::ostringstream csv;
        csv << "value,finiteness_flag,quadrature_error_estimate\n";
        csv << format_double(r.value) << ',' << (r.finiteness_flag ? 1 : 0) << ','
            << format_double(r.quadrature_error_estimate) << '\n';
        write_artifact(cfg.output_path, csv.str());
    } else {
        write_artifact(cfg.output_path, dump_json(to_json(r)));
    }
    return {kExitOk, "pair: value " + format_double(r.value), cfg.output_path};
}

JobOutcome run_embed(const JobConfig& cfg) {
    require_keys(cfg.payload, {"measure", "points"}, "embed payload");
    const Kernel k = kernel_from(cfg);
    const SignedMeasure mu = signed_measure_from_json(cfg.payload.at("measure"));
    const PointSet pts = point_set_from_json(cfg.payload.at("points"));
    const FunctionSource tk_mu = embed(k, mu);
    std::ostringstream csv;
    json rows = json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double v = tk_mu(pts[i]);
        if (cfg.output_format == "csv") {
            std::vector<double> row = pts[i].coords;
            row.push_back(v);
            write_csv_row(csv, row);
        } else {
            rows.push_back(json{{"point", to_json(pts[i])}, {"value", v}});
        }
    }
    write_artifact(cfg.output_path, cfg.output_format == "csv" ? csv.str() : dump_json(rows));
    return {kExitOk, "embed: evaluated at " + std::to_string(pts.size()) + " point(s)",
            cfg.output_path};
}

JobOutcome run_distance(const JobConfig& cfg) {
    require_keys(cfg.payload, {"mu", "nu"}, "distance payload");
    const Kernel k = kernel_from(cfg);
    const double d = rkhs_distance(k, signed_measure_from_json(cfg.payload.at("mu")),
                                   signed_measure_from_json(cfg.payload.at("nu")));
    if (cfg.output_format == "csv") {
        write_artifact(cfg.output_path, "rkhs_distance\n" + format_double(d) + "\n");
    } else {
        write_artifact(cfg.output_path, dump_json(json{{"rkhs_distance", d}}));
    }
    return {kExitOk, "distance: " + format_double(d), cfg.output_path};
}

JobOutcome run_verify_suite_cmd(const JobConfig& cfg) {
    require_keys(cfg.payload, {}, "verify-suite payload");
    const auto results = run_verify_suite(cfg.seed);
    if (cfg.output_format == "csv") {
        std::ostringstream csv;
        write_verify_csv(csv, results);
        write_artifact(cfg.output_path, csv.str());
    } else {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back(json{{"property", r.name},
                               {"trials", r.trials},
                               {"max_violation", r.max_violation},
                               {"tolerance", r.tolerance},
                               {"pass", r.pass}});
        write_artifact(cfg.output_path, dump_json(arr));
    }
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.pass ? 1 : 0;
    const bool ok = passed == results.size();
    return {ok ? kExitOk : kExitVerdict,
            "verify-suite: " + std::to_string(passed) + "/" + std::to_string(results.size()) +
                " properties passed (seed " + std::to_string(cfg.seed) + ")",
            cfg.output_path};
}

JobOutcome run_fbm_compare(const JobConfig& cfg) {
    require_keys(cfg.payload, {"density", "hurst", "padding_factor"}, "fbm-compare payload");
    if (!cfg.payload.contains("density") || !cfg.payload.contains("hurst"))
        throw std::invalid_argument("fbm-compare payload needs 'density' and 'hurst'");
    const double padding = cfg.payload.value("padding_factor", 8.0);
    const DensityOnGrid g = density_from_json(cfg.payload.at("density"), padding);
    const auto hursts = cfg.payload.at("hurst").get<std::vector<double>>();
    const double rel_tol = cfg.tolerance("rel_tol", 0.01);
    std::ostringstream csv;
    csv << "hurst,spatial,spectral,rel_gap,pass\n";
    json rows = json::array();
    bool all_ok = true;
    for (double H : hursts) {
        const double spatial = fbm_energy_spatial(g, H);
        const double spectral = fbm_energy_spectral(g, H);
        const double rel = std::abs(spatial - spectral) / std::max(std::abs(spatial), 1e-300);
        const bool ok = rel <= rel_tol;
        all_ok = all_ok && ok;
        csv << format_double(H) << ',' << format_double(spatial) << ',' << format_double(spectral)
            << ',' << format_double(rel) << ',' << (ok ? 1 : 0) << '\n';
        rows.push_back(json{{"hurst", H},
                            {"spatial", spatial},
                            {"spectral", spectral},
                            {"rel_gap", rel},
                            {"pass", ok}});
    }
    write_artifact(cfg.output_path, cfg.output_format == "csv" ? csv.str() : dump_json(rows));
    return {all_ok ? kExitOk : kExitVerdict,
            std::string("fbm-compare: ") + (all_ok ? "all" : "NOT all") + " H values within " +
                format_double(rel_tol),
            cfg.output_path};
}

JobOutcome run_gaussian_check(const JobConfig& cfg) {
    require_keys(cfg.payload, {"h_norms", "gh_order", "series_truncation"},
                 "gaussian-check payload");
    if (!cfg.payload.contains("h_norms"))
        throw std::invalid_argument("gaussian-check payload needs 'h_norms'");
    const auto norms = cfg.payload.at("h_norms").get<std::vector<double>>();
    const std::size_t gh_order = cfg.payload.value("gh_order", 40);
    const int series = cfg.payload.value("series_truncation", 60);
    const double rel_tol = cfg.tolerance("rel_tol", 1e-6);
    const Kernel k = Kernel::from_spec(KernelSpec::bessel(series));
    std::ostringstream csv;
    csv << "h1,h2,closed_form,quadrature,rel_err,pass\n";
    json rows = json::array();
    bool all_ok = true;
    for (double h1 : norms) {
        const SignedMeasure m1 = materialize_gaussian({h1, gh_order});
        for (double h2 : norms) {
            const SignedMeasure m2 = materialize_gaussian({h2, gh_order});
            const double closed = bessel_pairing_closed_form(h1, h2, series);
            const double quad = measure_pair(k, m1, m2).value;
            const double rel = std::abs(closed - quad) / std::abs(closed);
            const bool ok = rel <= rel_tol;
            all_ok = all_ok && ok;
            csv << format_double(h1) << ',' << format_double(h2) << ',' << format_double(closed)
                << ',' << format_double(quad) << ',' << format_double(rel) << ',' << (ok ? 1 : 0)
                << '\n';
            rows.push_back(json{{"h1", h1},
                                {"h2", h2},
                                {"closed_form", closed},
                                {"quadrature", quad},
                                {"rel_err", rel},
                                {"pass", ok}});
        }
    }
    write_artifact(cfg.output_path, cfg.output_format == "csv" ? csv.str() : dump_json(rows));
    return {all_ok ? kExitOk : kExitVerdict,
            std::string("gaussian-check: ") + (all_ok ? "all" : "NOT all") + " pairings within " +
                format_double(rel_tol) + " relative",
            cfg.output_path};
}

JobOutcome run_isometry_check(const JobConfig& cfg) {
    require_keys(cfg.payload, {"rv"}, "isometry-check payload");
    if (!cfg.payload.contains("rv"))
        throw std::invalid_argument("isometry-check payload needs 'rv'");
    const Kernel k = kernel_from(cfg);
    const IsometryReport r = isometry_check(k, random_variable_from_json(cfg.payload.at("rv")));
    const double tol = cfg.tolerance("gap_tol", 1e-12);
    if (cfg.output_format == "csv") {
        std::ostringstream csv;
        csv << "lhs,rhs,gap\n"
            << format_double(r.lhs) << ',' << format_double(r.rhs) << ',' << format_double(r.gap)
            << '\n';
        write_artifact(cfg.output_path, csv.str());
    } else {
        write_artifact(cfg.output_path, dump_json(to_json(r)));
    }
    const bool ok = r.gap <= tol;
    return {ok ? kExitOk : kExitVerdict, "isometry-check: gap " + format_double(r.gap),
            cfg.output_path};
}

}  // namespace

JobConfig JobConfig::load(const std::string& config_path, const std::string& command_from_cli,
                          const std::string& output_override, const std::uint64_t* seed_override) {
    if (!known_command(command_from_cli))
        throw std::invalid_argument("unknown command '" + command_from_cli + "'");
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config '" + config_path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config is not valid JSON: " + std::string(e.what()));
    }
    require_keys(j, {"kernel", "command", "payload", "output", "tolerances", "seed"}, "config");

    JobConfig cfg;
    cfg.command = command_from_cli;
    if (j.contains("command")) {
        const std::string c = j.at("command").get<std::string>();
        if (c != command_from_cli)
            throw std::invalid_argument("config command '" + c + "' does not match CLI command '" +
                                        command_from_cli + "'");
    }
    if (j.contains("kernel")) cfg.kernel = j.at("kernel");
    cfg.payload = j.value("payload", json::object());
    if (!cfg.payload.is_object()) throw std::invalid_argument("config: 'payload' must be an object");
    cfg.tolerances = j.value("tolerances", json::object());
    if (!cfg.tolerances.is_object())
        throw std::invalid_argument("config: 'tolerances' must be an object");
    for (const auto& item : cfg.tolerances.items())
        if (!item.value().is_number())
            throw std::invalid_argument("config: tolerance '" + item.key() + "' must be a number");
    cfg.seed = j.value("seed", 0ULL);
    if (seed_override) cfg.seed = *seed_override;

    if (j.contains("output")) {
        require_keys(j.at("output"), {"path", "format"}, "output");
        cfg.output_path = j.at("output").value("path", "");
        cfg.output_format = j.at("output").value("format", "");
    }
    if (!output_override.empty()) cfg.output_path = output_override;
    if (cfg.output_path.empty())
        throw std::invalid_argument("no output path: set output.path in the config or --output");
    if (cfg.output_format.empty()) cfg.output_format = infer_format(cfg.output_path);
    if (cfg.output_format != "csv" && cfg.output_format != "json")
        throw std::invalid_argument("output format must be 'csv' or 'json'");
    return cfg;
}

double JobConfig::tolerance(const std::string& name, double fallback) const {
    if (tolerances.contains(name)) return tolerances.at(name).get<double>();
    return fallback;
}

JobOutcome run_job(const JobConfig& cfg) {
    if (cfg.command == "metric") return run_metric(cfg);
    if (cfg.command == "gram") return run_gram(cfg);
    if (cfg.command == "interp") return run_interp(cfg);
    if (cfg.command == "norm-trace") return run_norm_trace(cfg);
    if (cfg.command == "membership") return run_membership(cfg);
    if (cfg.command == "pair") return run_pair(cfg);
    if (cfg.command == "embed") return run_embed(cfg);
    if (cfg.command == "distance") return run_distance(cfg);
    if (cfg.command == "verify-suite") return run_verify_suite_cmd(cfg);
    if (cfg.command == "fbm-compare") return run_fbm_compare(cfg);
    if (cfg.command == "gaussian-check") return run_gaussian_check(cfg);
    if (cfg.command == "isometry-check") return run_isometry_check(cfg);
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

}  // namespace rkhs
