#pragma once

// Stable file formats: complex matrices as row-major [[re, im], ...] pair
// lists, generator-set and state documents, density matrices with
// validation on load, verify reports, and negativity-scan CSVs.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sunqps/algebra.hpp"
#include "sunqps/coherent.hpp"
#include "sunqps/verify.hpp"
#include "sunqps/werner.hpp"

namespace sunqps {

nlohmann::json matrix_to_json(const ComplexMatrix& matrix);
ComplexMatrix matrix_from_json(const nlohmann::json& node, const std::string& context);

nlohmann::json vector_to_json(const ComplexVector& vector);

nlohmann::json generator_set_to_json(const GeneratorSet& gens);

nlohmann::json coherent_state_to_json(const CoherentState& state);

nlohmann::json kernel_to_json(const Kernel& kernel);

nlohmann::json density_to_json(const DensityMatrix& rho);
/// Parses {"dim": d, "matrix": [...]}; validates shape, Hermiticity, trace,
/// and positivity.  Errors name the offending field.
DensityMatrix density_from_json(const nlohmann::json& node);

DensityMatrix load_density_file(const std::string& path);

nlohmann::json verify_report_to_json(const VerifyReport& report);

nlohmann::json recovery_report_to_json(const RecoveryReport& report);

/// CSV columns: theta1,theta2,theta3,value,negative with one row per lattice
/// cell in scan order.
void write_scan_csv(std::ostream& out, const WernerParams& params, int s, PhiCase phi_case,
                    int resolution);

/// Comma-separated radians, e.g. "0.3,0.7,1.1".
RealVector parse_angle_list(const std::string& text, const std::string& flag_name);

}  // namespace sunqps
