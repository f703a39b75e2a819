#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sunqps {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Thrown when a matrix inversion required by a kernel conversion is not
/// numerically trustworthy at the requested phase-space point.
class ConditioningError : public std::runtime_error {
public:
    ConditioningError(const std::string& what, double min_eigenvalue, double condition)
        : std::runtime_error(what), min_eigenvalue_(min_eigenvalue), condition_(condition) {}

    double min_eigenvalue() const { return min_eigenvalue_; }
    double condition() const { return condition_; }

private:
    double min_eigenvalue_;
    double condition_;
};

}  // namespace sunqps
