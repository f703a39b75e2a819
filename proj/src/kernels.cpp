#include "sunqps/kernels.hpp"

#include <cmath>
#include <sstream>

namespace sunqps {

void validate_s_order(int s) {
    if (s != -1 && s != 0 && s != 1)
        throw std::domain_error("s must be one of -1, 0, +1; got " + std::to_string(s));
}

double omega_m1(int s, int n) {
    validate_s_order(s);
    if (n < 2) throw std::domain_error("omega_m1: n must be >= 2");
    switch (s) {
        case 0: return std::sqrt(n + 1.0);
        case 1: return 1.0;
        default: return n + 1.0;
    }
}

double omega_m2(int s, int c, int n) {
    validate_s_order(s);
    if (c != 1 && c != 2)
        throw std::domain_error("omega_m2: c must be 1 or 2, got " + std::to_string(c));
    if (n < 2) throw std::domain_error("omega_m2: n must be >= 2");
    const double b1 = rep_dimension(n + 2, 1);  // C(n+2, 1)
    const double b2 = rep_dimension(n + 2, 2);  // C(n+3, 2)
    switch (s) {
        case 0:
            if (c == 1) return 0.5 * std::sqrt(b2);
            return (std::sqrt(b1 / 2.0) - std::sqrt(b2)) / (2.0 * b1);
        case 1:
            return c == 1 ? 0.5 : 0.0;
        default:
            return c == 1 ? 0.5 * b2 : -0.25 * b1;
    }
}

KernelEngine::KernelEngine(int n, int m)
    : n_(n), m_(m), dim_(rep_dimension(n, m)), coherent_(n, m) {
    if (m != 1 && m != 2)
        throw std::domain_error("kernels are available for m = 1 and m = 2 only");
    if (m == 1) {
        families_.push_back(build_generators(n, 1));
    } else {
        families_.push_back(build_generators(static_cast<int>(dim_), 1));
        families_.push_back(build_generators(n, 2));
    }
}

double KernelEngine::family_coefficient(int s, std::size_t idx) const {
    if (m_ == 1) return 0.5 * omega_m1(s, n_);
    return omega_m2(s, static_cast<int>(idx) + 1, n_);
}

KernelEngine::PointData KernelEngine::point_data(const PhasePoint& point) const {
    PointData data;
    data.state = coherent_.state(point);
    data.moments.reserve(families_.size());
    for (const auto& family : families_) {
        RealVector moments(family.count());
        for (Index k = 0; k < family.count(); ++k)
            moments(k) =
                (data.state.adjoint() * family.matrices[static_cast<std::size_t>(k)] * data.state)(0)
                    .real();
        data.moments.push_back(std::move(moments));
    }
    return data;
}

ComplexMatrix KernelEngine::kernel_matrix(int s, const PointData& data) const {
    validate_s_order(s);
    ComplexMatrix f = ComplexMatrix::Identity(dim_, dim_) / static_cast<double>(dim_);
    for (std::size_t idx = 0; idx < families_.size(); ++idx) {
        const double coeff = family_coefficient(s, idx);
        if (coeff == 0.0) continue;
        const auto& family = families_[idx];
        const RealVector& moments = data.moments[idx];
        for (Index k = 0; k < family.count(); ++k)
            f += coeff * moments(k) * family.matrices[static_cast<std::size_t>(k)];
    }
    return f;
}

Kernel KernelEngine::kernel(int s, const PhasePoint& point) const {
    return Kernel{n_, m_, s, point, kernel_matrix(s, point_data(point))};
}

Kernel KernelEngine::convert(const Kernel& src, int target_s, double condition_cap) const {
    validate_s_order(target_s);
    if (src.n != n_ || src.m != m_)
        throw std::invalid_argument("convert: kernel does not belong to this engine");

    const ComplexMatrix center = ComplexMatrix::Identity(dim_, dim_) / static_cast<double>(dim_);
    const ComplexMatrix src_tilde = src.matrix - center;

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(src_tilde);
    const RealVector& ev = solver.eigenvalues();
    const double min_abs = ev.cwiseAbs().minCoeff();
    const double max_abs = ev.cwiseAbs().maxCoeff();
    const double condition = min_abs > 0.0 ? max_abs / min_abs : std::numeric_limits<double>::infinity();
    if (min_abs < 1e-12 || condition > condition_cap) {
        std::ostringstream msg;
        msg << "kernel conversion: traceless part is numerically singular at point (theta =";
        for (Index i = 0; i < src.point.thetas.size(); ++i) msg << " " << src.point.thetas(i);
        msg << ", phi =";
        for (Index i = 0; i < src.point.phis.size(); ++i) msg << " " << src.point.phis(i);
        msg << "); min |eigenvalue| = " << min_abs << ", condition = " << condition;
        throw ConditioningError(msg.str(), min_abs, condition);
    }

    const ComplexMatrix inverse =
        solver.eigenvectors() * ev.cwiseInverse().asDiagonal() * solver.eigenvectors().adjoint();
    const ComplexMatrix target_tilde = kernel_matrix(target_s, point_data(src.point)) - center;
    const ComplexMatrix upsilon = target_tilde * inverse;

    Kernel out = src;
    out.s = target_s;
    out.matrix = upsilon * src.matrix +
                 (ComplexMatrix::Identity(dim_, dim_) - upsilon) / static_cast<double>(dim_);
    return out;
}

Kernel kernel_m1(int n, int s, const PhasePoint& point) {
    return KernelEngine(n, 1).kernel(s, point);
}

Kernel kernel_m2(int n, int s, const PhasePoint& point) {
    return KernelEngine(n, 2).kernel(s, point);
}

Kernel convert_kernel_m1(const Kernel& src, int target_s) {
    validate_s_order(target_s);
    if (src.m != 1) throw std::domain_error("convert_kernel_m1: kernel must have m = 1");
    const double ratio = omega_m1(target_s, src.n) / omega_m1(src.s, src.n);
    Kernel out = src;
    out.s = target_s;
    out.matrix = ratio * src.matrix +
                 (1.0 - ratio) / src.n *
                     ComplexMatrix::Identity(src.matrix.rows(), src.matrix.cols());
    return out;
}

Kernel convert_kernel_m2(const Kernel& src, int target_s, double condition_cap) {
    if (src.m != 2) throw std::domain_error("convert_kernel_m2: kernel must have m = 2");
    return KernelEngine(src.n, 2).convert(src, target_s, condition_cap);
}

}  // namespace sunqps
