// Command-line front end: generator construction, coherent states, kernels,
// distribution evaluation, identity verification, density recovery, and
// Werner negativity scans, with JSON/CSV outputs.
//
// Exit codes: 0 success, 1 validation or usage error, 2 numerical-quality
// failure (verify residual above tolerance, kernel conversion conditioning).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sunqps/io.hpp"

using nlohmann::json;

namespace {

struct GlobalOptions {
    int threads = 1;
};

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << doc.dump(2) << "\n";
}

sunqps::PhasePoint point_from_flags(int n, const std::string& theta_list,
                                    const std::string& phi_list) {
    sunqps::PhasePoint pt{sunqps::parse_angle_list(theta_list, "--theta"),
                          sunqps::parse_angle_list(phi_list, "--phi")};
    sunqps::validate_phase_point(n, pt);
    return pt;
}

json samples_document(int n, int m, int s, const sunqps::QuadratureGrid& grid,
                      const sunqps::DensityMatrix& rho) {
    const sunqps::KernelEngine engine(n, m);
    json values = json::array();
    for (sunqps::Index flat = 0; flat < grid.point_count(); ++flat) {
        const sunqps::PhasePoint pt = grid.point(flat);
        values.push_back(
            (rho.matrix * engine.kernel_matrix(s, engine.point_data(pt))).trace().real());
    }
    json doc;
    doc["n"] = n;
    doc["m"] = m;
    doc["s"] = s;
    doc["grid_theta"] = grid.theta_points;
    doc["grid_phi"] = grid.phi_points;
    doc["values"] = std::move(values);
    return doc;
}

// Injects config-file entries as trailing long options so subcommand parsing
// sees them; explicit command-line flags win because CLI11 keeps the first
// occurrence for non-repeatable options.
std::vector<std::string> apply_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config_path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
            break;
        }
    }
    if (config_path.empty()) return args;

    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config file: " + config_path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument("config file " + config_path + ": " + err.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("config file " + config_path + ": expected a JSON object");
    for (const auto& [key, value] : doc.items()) {
        const std::string flag = "--" + key;
        if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
        args.push_back(flag);
        if (value.is_boolean()) {
            if (!value.get<bool>()) args.pop_back();
        } else if (value.is_string()) {
            args.push_back(value.get<std::string>());
        } else {
            args.push_back(value.dump());
        }
    }
    return args;
}

int run(int argc, char** argv) {
    CLI::App app{"SU(N)-symmetric quasi-probability toolkit"};
    app.require_subcommand(1);
    GlobalOptions global;
    app.add_option("--threads", global.threads, "worker thread cap for quadrature and scans")
        ->envname("SUNQPS_THREADS")
        ->check(CLI::PositiveNumber);

    int n = 2, m = 1, s = 0;
    std::string theta_list, phi_list, state_path, samples_path, out_path;
    int grid_theta = 0, grid_phi = 0;
    double tolerance = 1e-10;

    auto* generators = app.add_subcommand("generators", "emit the generator set as JSON");
    generators->add_option("--n", n, "group index N")->required();
    generators->add_option("--m", m, "representation label M")->required();
    generators->add_option("--out", out_path, "output file (default stdout)");

    auto* coherent = app.add_subcommand("coherent", "evaluate a coherent state");
    coherent->add_option("--n", n)->required();
    coherent->add_option("--m", m)->required();
    coherent->add_option("--theta", theta_list, "comma-separated radians")->required();
    coherent->add_option("--phi", phi_list, "comma-separated radians")->required();
    coherent->add_option("--out", out_path);

    auto* kernel = app.add_subcommand("kernel", "evaluate a generating kernel");
    kernel->add_option("--n", n)->required();
    kernel->add_option("--m", m)->required();
    kernel->add_option("--s", s, "ordering: -1 (P), 0 (Wigner), 1 (Q)")->required();
    kernel->add_option("--theta", theta_list)->required();
    kernel->add_option("--phi", phi_list)->required();
    kernel->add_option("--out", out_path);

    bool eval_grid = false;
    auto* distribution = app.add_subcommand("distribution", "evaluate f^s of a state");
    distribution->add_option("--n", n)->required();
    distribution->add_option("--m", m)->required();
    distribution->add_option("--s", s)->required();
    distribution->add_option("--state", state_path, "density matrix JSON file")->required();
    distribution->add_option("--theta", theta_list);
    distribution->add_option("--phi", phi_list);
    distribution->add_flag("--eval-grid", eval_grid,
                           "evaluate on a quadrature grid and emit a samples document");
    distribution->add_option("--grid-theta", grid_theta, "theta points per dimension");
    distribution->add_option("--grid-phi", grid_phi, "phi points per dimension");
    distribution->add_option("--out", out_path);

    std::string samples_from = "exact";
    auto* recover = app.add_subcommand("recover", "reconstruct a density matrix from f^s");
    recover->add_option("--n", n)->required();
    recover->add_option("--m", m)->required();
    recover->add_option("--s", s, "ordering of the sampled distribution")->required();
    recover->add_option("--samples-from", samples_from, "exact | file")
        ->check(CLI::IsMember({"exact", "file"}));
    recover->add_option("--state", state_path, "density file (samples-from=exact)");
    recover->add_option("--samples", samples_path, "samples file (samples-from=file)");
    recover->add_option("--grid-theta", grid_theta);
    recover->add_option("--grid-phi", grid_phi);
    recover->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run the quadrature identity suite");
    verify->add_option("--n", n)->required();
    verify->add_option("--m", m)->required();
    verify->add_option("--grid-theta", grid_theta, "default: resolution for (n, m)");
    verify->add_option("--grid-phi", grid_phi);
    verify->add_option("--tolerance", tolerance, "residual tolerance");
    verify->add_option("--out", out_path);

    double gamma = 0.0, tol = 1e-3;
    int resolution = 64;
    std::string phi_case_name = "aligned";
    auto* werner_scan = app.add_subcommand("werner-scan", "negativity lattice scan");
    werner_scan->add_option("--s", s)->required();
    werner_scan->add_option("--gamma", gamma, "purity parameter in [0, 1]")->required();
    werner_scan->add_option("--phi-case", phi_case_name, "aligned | anti")
        ->check(CLI::IsMember({"aligned", "anti"}));
    werner_scan->add_option("--resolution", resolution, "lattice points per axis (>= 8)");
    werner_scan->add_option("--out", out_path, "CSV output file (default stdout)");

    auto* werner_threshold = app.add_subcommand("werner-threshold", "critical gamma by bisection");
    werner_threshold->add_option("--s", s, "-1 (P) or 0 (Wigner)")->required();
    werner_threshold->add_option("--phi-case", phi_case_name)
        ->check(CLI::IsMember({"aligned", "anti"}));
    werner_threshold->add_option("--tol", tol, "bisection width");

    const std::vector<std::string> args = apply_config(argc, argv);
    std::vector<const char*> arg_ptrs;
    arg_ptrs.push_back("sunqps");
    for (const auto& a : args) arg_ptrs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(arg_ptrs.size()), arg_ptrs.data());
    } catch (const CLI::ParseError& err) {
        return app.exit(err);
    }

    if (generators->parsed()) {
        emit(sunqps::generator_set_to_json(sunqps::build_generators(n, m)), out_path);
        return 0;
    }

    if (coherent->parsed()) {
        const auto pt = point_from_flags(n, theta_list, phi_list);
        emit(sunqps::coherent_state_to_json(sunqps::coherent_state(n, m, pt)), out_path);
        return 0;
    }

    if (kernel->parsed()) {
        const auto pt = point_from_flags(n, theta_list, phi_list);
        emit(sunqps::kernel_to_json(sunqps::KernelEngine(n, m).kernel(s, pt)), out_path);
        return 0;
    }

    if (distribution->parsed()) {
        const sunqps::DensityMatrix rho = sunqps::load_density_file(state_path);
        if (eval_grid) {
            auto [p, q] = sunqps::default_resolution(n, m);
            if (grid_theta > 0) p = grid_theta;
            if (grid_phi > 0) q = grid_phi;
            const auto grid = sunqps::build_grid(n, p, q);
            emit(samples_document(n, m, s, grid, rho), out_path);
            return 0;
        }
        if (theta_list.empty() || phi_list.empty())
            throw std::invalid_argument(
                "distribution: --theta and --phi are required unless --eval-grid is given");
        const auto pt = point_from_flags(n, theta_list, phi_list);
        const auto sample = sunqps::eval_distribution(rho, n, m, s, pt);
        json doc;
        doc["s"] = sample.s;
        doc["value"] = sample.value;
        emit(doc, out_path);
        return 0;
    }

    if (recover->parsed()) {
        auto [p, q] = sunqps::default_resolution(n, m);
        if (grid_theta > 0) p = grid_theta;
        if (grid_phi > 0) q = grid_phi;

        sunqps::RecoveryReport report;
        if (samples_from == "exact") {
            if (state_path.empty())
                throw std::invalid_argument("recover --samples-from exact requires --state");
            const sunqps::DensityMatrix rho = sunqps::load_density_file(state_path);
            const auto grid = sunqps::build_grid(n, p, q);
            const sunqps::KernelEngine engine(n, m);
            report = sunqps::recover_density(
                [&](const sunqps::PhasePoint& pt) {
                    return (rho.matrix * engine.kernel_matrix(s, engine.point_data(pt)))
                        .trace()
                        .real();
                },
                n, m, s, grid, global.threads);
        } else {
            if (samples_path.empty())
                throw std::invalid_argument("recover --samples-from file requires --samples");
            std::ifstream in(samples_path);
            if (!in) throw std::invalid_argument("cannot open samples file: " + samples_path);
            json doc = json::parse(in);
            for (const char* field : {"n", "m", "s", "grid_theta", "grid_phi", "values"})
                if (!doc.contains(field))
                    throw std::invalid_argument(std::string("samples file: missing field \"") +
                                                field + "\"");
            if (doc["n"].get<int>() != n || doc["m"].get<int>() != m || doc["s"].get<int>() != s)
                throw std::invalid_argument("samples file does not match --n/--m/--s");
            p = doc["grid_theta"].get<int>();
            q = doc["grid_phi"].get<int>();
            const auto grid = sunqps::build_grid(n, p, q);
            const auto& values = doc["values"];
            if (static_cast<sunqps::Index>(values.size()) != grid.point_count())
                throw std::invalid_argument("samples file: expected " +
                                            std::to_string(grid.point_count()) + " values, got " +
                                            std::to_string(values.size()));
            const std::vector<double> table(values.begin(), values.end());
            report = sunqps::recover_density_samples(table, n, m, s, grid, global.threads);
        }
        if (report.positivity_warning)
            std::cerr << "warning: recovered matrix has min eigenvalue " << report.min_eigenvalue
                      << " below -1e-8 (quadrature noise or undersampling)\n";
        emit(sunqps::recovery_report_to_json(report), out_path);
        return 0;
    }

    if (verify->parsed()) {
        auto [p, q] = sunqps::default_resolution(n, m);
        if (grid_theta > 0) p = grid_theta;
        if (grid_phi > 0) q = grid_phi;
        const auto report = sunqps::run_identity_suite(n, m, p, q, tolerance, 20120115,
                                                       global.threads);
        emit(sunqps::verify_report_to_json(report), out_path);
        return report.pass ? 0 : 2;
    }

    const sunqps::PhiCase phi_case =
        phi_case_name == "anti" ? sunqps::PhiCase::Anti : sunqps::PhiCase::Aligned;

    if (werner_scan->parsed()) {
        const sunqps::WernerParams params{gamma};
        if (out_path.empty()) {
            sunqps::write_scan_csv(std::cout, params, s, phi_case, resolution);
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
            sunqps::write_scan_csv(out, params, s, phi_case, resolution);
        }
        return 0;
    }

    if (werner_threshold->parsed()) {
        if (s == 1)
            throw std::invalid_argument(
                "werner-threshold: the Q-function has no sign change; use --s -1 or --s 0");
        const auto result = sunqps::threshold_bisect(s, phi_case, tol);
        json doc;
        doc["s"] = s;
        doc["phi_case"] = phi_case_name;
        doc["found"] = result.found;
        if (result.found) doc["gamma_critical"] = result.gamma_critical;
        emit(doc, out_path);
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sunqps::ConditioningError& err) {
        std::cerr << "numerical-quality failure: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
