#include "sunqps/distributions.hpp"

#include <cmath>
#include <sstream>

namespace sunqps {

namespace {

void check_fundamental(const GeneratorSet& gens, Index dim, const char* who) {
    if (gens.m != 1)
        throw std::invalid_argument(std::string(who) + ": generator set must be fundamental (m=1)");
    if (gens.dim != dim) {
        std::ostringstream msg;
        msg << who << ": dimension mismatch, generators are " << gens.dim << "-dimensional, state is "
            << dim;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

DensityMatrix make_density_matrix(const ComplexMatrix& matrix, double herm_tol, double trace_tol,
                                  double psd_tol) {
    if (matrix.rows() != matrix.cols())
        throw std::invalid_argument("density matrix must be square");
    const double herm = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    if (herm > herm_tol) {
        std::ostringstream msg;
        msg << "density matrix is not Hermitian: max |rho - rho^dagger| = " << herm;
        throw std::invalid_argument(msg.str());
    }
    const Complex tr = matrix.trace();
    if (std::abs(tr - 1.0) > trace_tol) {
        std::ostringstream msg;
        msg << "density matrix trace is " << tr.real() << " + " << tr.imag() << "i, expected 1";
        throw std::invalid_argument(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix);
    const double min_ev = solver.eigenvalues().minCoeff();
    if (min_ev < -psd_tol) {
        std::ostringstream msg;
        msg << "density matrix is not positive semidefinite: min eigenvalue = " << min_ev;
        throw std::invalid_argument(msg.str());
    }
    return DensityMatrix{matrix.rows(), matrix};
}

BlochVector bloch_decompose(const DensityMatrix& rho, const GeneratorSet& gens) {
    check_fundamental(gens, rho.dim, "bloch_decompose");
    const int n = gens.n;
    const double scale = std::sqrt(n / (2.0 * (n - 1)));
    RealVector components(gens.count());
    for (Index k = 0; k < gens.count(); ++k)
        components(k) =
            scale * (rho.matrix * gens.matrices[static_cast<std::size_t>(k)]).trace().real();
    return BlochVector{n, std::move(components)};
}

DensityMatrix bloch_compose(const BlochVector& bloch, const GeneratorSet& gens) {
    check_fundamental(gens, gens.dim, "bloch_compose");
    if (bloch.components.size() != gens.count())
        throw std::invalid_argument("bloch_compose: component count must be n^2 - 1 = " +
                                    std::to_string(gens.count()));
    const int n = gens.n;
    ComplexMatrix rho = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
    const double scale = std::sqrt((n - 1) / (2.0 * n));
    for (Index k = 0; k < gens.count(); ++k)
        rho += scale * bloch.components(k) * gens.matrices[static_cast<std::size_t>(k)];
    return DensityMatrix{gens.dim, std::move(rho)};
}

DistributionSample eval_distribution(const DensityMatrix& rho, int n, int m, int s,
                                     const PhasePoint& point) {
    const Index d = rep_dimension(n, m);
    if (rho.dim != d) {
        std::ostringstream msg;
        msg << "eval_distribution: state is " << rho.dim << "-dimensional but (n, m) = (" << n
            << ", " << m << ") needs dimension " << d;
        throw std::invalid_argument(msg.str());
    }
    const Kernel kernel = KernelEngine(n, m).kernel(s, point);
    const Complex value = (rho.matrix * kernel.matrix).trace();
    return DistributionSample{s, point, value.real()};
}

DistributionSample eval_distribution_bloch(const BlochVector& bloch, int s,
                                           const PhasePoint& point) {
    const int n = bloch.n;
    const KernelEngine engine(n, 1);
    const auto data = engine.point_data(point);
    const double scale = std::sqrt((n - 1) / (2.0 * n)) * omega_m1(s, n);
    const double value = 1.0 / n + scale * data.moments[0].dot(bloch.components);
    return DistributionSample{s, point, value};
}

namespace {

template <class SampleAt>  // double(Index, const PhasePoint&)
RecoveryReport recover_core(const SampleAt& sample_at, int n, int m, int s,
                            const QuadratureGrid& grid, int threads) {
    validate_s_order(s);
    const KernelEngine engine(n, m);
    const auto eval = [&](Index flat) -> ComplexMatrix {
        const PhasePoint pt = grid.point(flat);
        return grid.weight(flat) * sample_at(flat, pt) *
               engine.kernel_matrix(-s, engine.point_data(pt));
    };
    const ComplexMatrix raw =
        normalization_constant(n, m) *
        detail::pairwise_sum<ComplexMatrix>(0, grid.point_count(), eval,
                                            detail::parallel_levels_for(threads));

    RecoveryReport report;
    report.hermiticity_residual = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
    report.trace_residual = std::abs(raw.trace() - Complex(1.0));
    ComplexMatrix hermitized = 0.5 * (raw + raw.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitized);
    report.min_eigenvalue = solver.eigenvalues().minCoeff();
    report.positivity_warning = report.min_eigenvalue < -1e-8;
    report.rho = DensityMatrix{hermitized.rows(), std::move(hermitized)};
    return report;
}

}  // namespace

RecoveryReport recover_density(const std::function<double(const PhasePoint&)>& f_plus_s, int n,
                               int m, int s, const QuadratureGrid& grid, int threads) {
    return recover_core([&](Index, const PhasePoint& pt) { return f_plus_s(pt); }, n, m, s, grid,
                        threads);
}

RecoveryReport recover_density_samples(const std::vector<double>& samples, int n, int m, int s,
                                       const QuadratureGrid& grid, int threads) {
    if (static_cast<Index>(samples.size()) != grid.point_count())
        throw std::invalid_argument("recover_density_samples: expected " +
                                    std::to_string(grid.point_count()) + " samples, got " +
                                    std::to_string(samples.size()));
    return recover_core(
        [&](Index flat, const PhasePoint&) { return samples[static_cast<std::size_t>(flat)]; }, n,
        m, s, grid, threads);
}

}  // namespace sunqps
