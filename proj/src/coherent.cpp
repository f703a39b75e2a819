#include "sunqps/coherent.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace sunqps {

namespace {

constexpr double kPi = std::numbers::pi;

RealVector real_diagonal(const ComplexMatrix& mat) {
    return mat.diagonal().real();
}

ComplexVector unit_phases(const RealVector& diag, double angle) {
    ComplexVector out(diag.size());
    for (Index i = 0; i < diag.size(); ++i)
        out(i) = std::polar(1.0, diag(i) * angle);
    return out;
}

}  // namespace

void validate_phase_point(int n, const PhasePoint& point) {
    if (n < 2) throw std::domain_error("phase point: n must be >= 2");
    if (point.thetas.size() != n - 1 || point.phis.size() != n - 1) {
        std::ostringstream msg;
        msg << "phase point for n = " << n << " needs " << (n - 1)
            << " thetas and phis, got " << point.thetas.size() << " and " << point.phis.size();
        throw std::domain_error(msg.str());
    }
    for (Index i = 0; i < point.thetas.size(); ++i)
        if (!(point.thetas(i) >= 0.0 && point.thetas(i) <= kPi / 2)) {
            std::ostringstream msg;
            msg << "theta_" << (i + 1) << " = " << point.thetas(i)
                << " outside [0, pi/2]; angles are rejected, not wrapped";
            throw std::domain_error(msg.str());
        }
    for (Index i = 0; i < point.phis.size(); ++i)
        if (!(point.phis(i) >= 0.0 && point.phis(i) <= 2 * kPi)) {
            std::ostringstream msg;
            msg << "phi_" << (i + 1) << " = " << point.phis(i)
                << " outside [0, 2*pi]; angles are rejected, not wrapped";
            throw std::domain_error(msg.str());
        }
}

CoherentEngine::CoherentEngine(int n, int m)
    : n_(n), m_(m), dim_(rep_dimension(n, m)), gens_(build_generators(n, m)) {
    eigvecs_.reserve(static_cast<std::size_t>(n_ - 1));
    eigvals_.reserve(static_cast<std::size_t>(n_ - 1));
    for (int y = 2; y <= n_; ++y) {
        const int k_antisym = (y - 1) * (y - 1) + 1;
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gens_.lambda(k_antisym));
        eigvecs_.push_back(solver.eigenvectors());
        eigvals_.push_back(solver.eigenvalues());
    }
    phase_diag_ = real_diagonal(gens_.lambda(3));
    global_phase_diag_ = real_diagonal(gens_.lambda(n_ * n_ - 1));
}

ComplexMatrix CoherentEngine::factor_exponential(int idx, double theta) const {
    const ComplexMatrix& v = eigvecs_[static_cast<std::size_t>(idx)];
    const RealVector& w = eigvals_[static_cast<std::size_t>(idx)];
    return v * unit_phases(w, theta).asDiagonal() * v.adjoint();
}

ComplexMatrix CoherentEngine::unitary(const PhasePoint& point) const {
    validate_phase_point(n_, point);
    ComplexMatrix u = ComplexMatrix::Identity(dim_, dim_);
    for (int y = 2; y <= n_; ++y) {
        ComplexMatrix factor = factor_exponential(y - 2, point.thetas(y - 2));
        factor = unit_phases(phase_diag_, point.phis(y - 2)).asDiagonal() * factor;
        u = u * factor;
    }
    return u;
}

ComplexVector CoherentEngine::state(const PhasePoint& point) const {
    return unitary(point).col(dim_ - 1);
}

ComplexMatrix CoherentEngine::full_unitary(const EulerAngles& angles) const {
    const Index theta_count = static_cast<Index>(n_) * (n_ - 1) / 2;
    const Index phi_count = theta_count + (n_ - 1);
    if (angles.thetas.size() != theta_count || angles.phis.size() != phi_count) {
        std::ostringstream msg;
        msg << "full Euler angle set for n = " << n_ << " needs " << theta_count
            << " thetas and " << phi_count << " phis, got " << angles.thetas.size() << " and "
            << angles.phis.size();
        throw std::domain_error(msg.str());
    }

    ComplexMatrix u = ComplexMatrix::Identity(dim_, dim_);
    for (int z = n_; z >= 2; --z) {
        int j = 0;
        if (z != n_)
            for (int i = 1; i <= n_ - z; ++i) j += n_ - i;
        for (int y = 2; y <= z; ++y) {
            const Index slot = (y - 1) + j;  // 1-based angle slot
            ComplexMatrix factor = factor_exponential(y - 2, angles.thetas(slot - 1));
            factor = unit_phases(phase_diag_, angles.phis(slot - 1)).asDiagonal() * factor;
            u = u * factor;
        }
    }
    for (int c = 1; c <= n_ - 1; ++c) {
        const RealVector diag = real_diagonal(gens_.lambda((c + 1) * (c + 1) - 1));
        const Index slot = static_cast<Index>(n_) * (n_ - 1) / 2 + c;
        u = u * unit_phases(diag, angles.phis(slot - 1)).asDiagonal();
    }
    return u;
}

ComplexMatrix euler_unitary(int n, int m, const PhasePoint& point) {
    return CoherentEngine(n, m).unitary(point);
}

ComplexMatrix euler_unitary(int n, int m, const EulerAngles& angles) {
    return CoherentEngine(n, m).full_unitary(angles);
}

CoherentState coherent_state(int n, int m, const PhasePoint& point) {
    CoherentEngine engine(n, m);
    return CoherentState{n, m, point, engine.state(point)};
}

double volume_weight(int n, const PhasePoint& point) {
    validate_phase_point(n, point);
    double w = std::sin(2.0 * point.thetas(0));
    for (int y = 3; y <= n; ++y) {
        const double theta = point.thetas(y - 2);
        if (y == n)
            w *= std::cos(theta) * std::pow(std::sin(theta), 2 * n - 3);
        else
            w *= std::pow(std::cos(theta), 2 * y - 3) * std::sin(theta);
    }
    return w;
}

double normalization_constant(int n, int m) {
    rep_dimension(n, m);  // argument validation
    double factorial_ratio = 1.0;  // (n+m-1)! / m!
    for (int i = m + 1; i <= n + m - 1; ++i) factorial_ratio *= i;
    return factorial_ratio / (2.0 * std::pow(kPi, n - 1));
}

}  // namespace sunqps
