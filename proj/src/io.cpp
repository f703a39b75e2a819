#include "sunqps/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace sunqps {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& matrix) {
    json rows = json::array();
    for (Index i = 0; i < matrix.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < matrix.cols(); ++j)
            row.push_back({matrix(i, j).real(), matrix(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& node, const std::string& context) {
    if (!node.is_array() || node.empty())
        throw std::invalid_argument(context + ": expected a non-empty array of rows");
    const Index rows = static_cast<Index>(node.size());
    Index cols = -1;
    ComplexMatrix out;
    for (Index i = 0; i < rows; ++i) {
        const json& row = node[static_cast<std::size_t>(i)];
        if (!row.is_array())
            throw std::invalid_argument(context + ": row " + std::to_string(i) + " is not an array");
        if (cols < 0) {
            cols = static_cast<Index>(row.size());
            out.resize(rows, cols);
        }
        if (static_cast<Index>(row.size()) != cols) {
            std::ostringstream msg;
            msg << context << ": row " << i << " has " << row.size() << " entries, expected "
                << cols;
            throw std::invalid_argument(msg.str());
        }
        for (Index j = 0; j < cols; ++j) {
            const json& entry = row[static_cast<std::size_t>(j)];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number()) {
                std::ostringstream msg;
                msg << context << ": entry (" << i << ", " << j << ") must be an [re, im] pair";
                throw std::invalid_argument(msg.str());
            }
            out(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return out;
}

json vector_to_json(const ComplexVector& vector) {
    json out = json::array();
    for (Index i = 0; i < vector.size(); ++i)
        out.push_back({vector(i).real(), vector(i).imag()});
    return out;
}

namespace {

const char* kind_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::OffDiagSym: return "offdiag-sym";
        case GeneratorKind::OffDiagAntisym: return "offdiag-antisym";
        default: return "diagonal";
    }
}

json angles_to_json(const RealVector& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

}  // namespace

json generator_set_to_json(const GeneratorSet& gens) {
    json doc;
    doc["n"] = gens.n;
    doc["m"] = gens.m;
    doc["dim"] = gens.dim;
    json list = json::array();
    for (int k = 1; k <= static_cast<int>(gens.count()); ++k) {
        const GeneratorLabel& label = gens.label(k);
        json item;
        item["k"] = k;
        item["kind"] = kind_name(label.kind);
        if (label.kind == GeneratorKind::Diagonal) {
            item["c"] = label.c;
        } else {
            item["a"] = label.a;
            item["b"] = label.b;
        }
        item["matrix"] = matrix_to_json(gens.lambda(k));
        list.push_back(std::move(item));
    }
    doc["generators"] = std::move(list);
    return doc;
}

json coherent_state_to_json(const CoherentState& state) {
    json doc;
    doc["n"] = state.n;
    doc["m"] = state.m;
    doc["theta"] = angles_to_json(state.point.thetas);
    doc["phi"] = angles_to_json(state.point.phis);
    doc["amplitudes"] = vector_to_json(state.amplitudes);
    return doc;
}

json kernel_to_json(const Kernel& kernel) {
    json doc;
    doc["n"] = kernel.n;
    doc["m"] = kernel.m;
    doc["s"] = kernel.s;
    doc["theta"] = angles_to_json(kernel.point.thetas);
    doc["phi"] = angles_to_json(kernel.point.phis);
    doc["matrix"] = matrix_to_json(kernel.matrix);
    return doc;
}

json density_to_json(const DensityMatrix& rho) {
    json doc;
    doc["dim"] = rho.dim;
    doc["matrix"] = matrix_to_json(rho.matrix);
    return doc;
}

DensityMatrix density_from_json(const json& node) {
    if (!node.is_object()) throw std::invalid_argument("density document: expected an object");
    if (!node.contains("dim") || !node["dim"].is_number_integer())
        throw std::invalid_argument("density document: missing integer field \"dim\"");
    if (!node.contains("matrix"))
        throw std::invalid_argument("density document: missing field \"matrix\"");
    const Index dim = node["dim"].get<Index>();
    const ComplexMatrix matrix = matrix_from_json(node["matrix"], "density document field \"matrix\"");
    if (matrix.rows() != dim || matrix.cols() != dim) {
        std::ostringstream msg;
        msg << "density document: \"dim\" is " << dim << " but \"matrix\" is " << matrix.rows()
            << "x" << matrix.cols();
        throw std::invalid_argument(msg.str());
    }
    return make_density_matrix(matrix);
}

DensityMatrix load_density_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open density file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument("density file " + path + ": " + err.what());
    }
    try {
        return density_from_json(doc);
    } catch (const std::invalid_argument& err) {
        throw std::invalid_argument("density file " + path + ": " + err.what());
    }
}

json verify_report_to_json(const VerifyReport& report) {
    json doc;
    doc["n"] = report.n;
    doc["m"] = report.m;
    doc["grid"] = {{"theta", report.grid_theta}, {"phi", report.grid_phi}};
    doc["seed"] = report.seed;
    json identities = json::array();
    for (const auto& identity : report.identities) {
        json item;
        item["name"] = identity.name;
        if (identity.s_applies) item["s"] = identity.s;
        item["residual"] = identity.residual;
        item["tolerance"] = identity.tolerance;
        item["pass"] = identity.pass;
        identities.push_back(std::move(item));
    }
    doc["identities"] = std::move(identities);
    doc["pass"] = report.pass;
    return doc;
}

json recovery_report_to_json(const RecoveryReport& report) {
    json doc;
    doc["dim"] = report.rho.dim;
    doc["matrix"] = matrix_to_json(report.rho.matrix);
    doc["hermiticity_residual"] = report.hermiticity_residual;
    doc["trace_residual"] = report.trace_residual;
    doc["min_eigenvalue"] = report.min_eigenvalue;
    doc["positivity_warning"] = report.positivity_warning;
    return doc;
}

void write_scan_csv(std::ostream& out, const WernerParams& params, int s, PhiCase phi_case,
                    int resolution) {
    out << "theta1,theta2,theta3,value,negative\n";
    out.precision(17);
    visit_scan_lattice(params, s, phi_case, resolution,
                       [&](const NegativityCell& cell, bool negative) {
                           out << cell.theta1 << ',' << cell.theta2 << ',' << cell.theta3 << ','
                               << cell.value << ',' << (negative ? 1 : 0) << '\n';
                       });
}

RealVector parse_angle_list(const std::string& text, const std::string& flag_name) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t consumed = 0;
            const double value = std::stod(token, &consumed);
            while (consumed < token.size() && std::isspace(static_cast<unsigned char>(token[consumed])))
                ++consumed;
            if (consumed != token.size()) throw std::invalid_argument(token);
            values.push_back(value);
        } catch (const std::exception&) {
            throw std::invalid_argument(flag_name + ": cannot parse \"" + token +
                                        "\" as a number in \"" + text + "\"");
        }
    }
    if (values.empty())
        throw std::invalid_argument(flag_name + ": expected a comma-separated list of radians");
    RealVector out(static_cast<Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) out(static_cast<Index>(i)) = values[i];
    return out;
}

}  // namespace sunqps
