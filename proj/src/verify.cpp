#include "sunqps/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace sunqps {

namespace {

constexpr double kPi = std::numbers::pi;

IdentityResidual make_residual(std::string name, int s, bool s_applies, double residual,
                               double tolerance) {
    return IdentityResidual{std::move(name), s, s_applies, residual, tolerance,
                            residual < tolerance};
}

}  // namespace

DensityMatrix random_mixed_state(Index dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix a(dim, dim);
    for (Index i = 0; i < dim; ++i)
        for (Index j = 0; j < dim; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
    ComplexMatrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix{dim, std::move(rho)};
}

ComplexVector random_pure_state(Index dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector psi(dim);
    for (Index i = 0; i < dim; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
    psi.normalize();
    return psi;
}

PhasePoint random_phase_point(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> theta(0.0, kPi / 2.0);
    std::uniform_real_distribution<double> phi(0.0, 2.0 * kPi);
    PhasePoint pt{RealVector(n - 1), RealVector(n - 1)};
    for (Index i = 0; i < n - 1; ++i) pt.thetas(i) = theta(rng);
    for (Index i = 0; i < n - 1; ++i) pt.phis(i) = phi(rng);
    return pt;
}

VerifyReport run_identity_suite(int n, int m, int grid_theta, int grid_phi, double tolerance,
                                std::uint64_t seed, int threads) {
    const Index d = rep_dimension(n, m);
    const QuadratureGrid grid = build_grid(n, grid_theta, grid_phi);
    const KernelEngine engine(n, m);
    const double norm = normalization_constant(n, m);
    const ComplexMatrix identity = ComplexMatrix::Identity(d, d);
    const DensityMatrix rho = random_mixed_state(d, seed);

    VerifyReport report;
    report.n = n;
    report.m = m;
    report.grid_theta = grid_theta;
    report.grid_phi = grid_phi;
    report.seed = seed;

    // Resolution of unity: norm * integral |cs><cs| dV = I.
    {
        const ComplexMatrix projector_integral = integrate_matrix(
            grid,
            [&](const PhasePoint& pt) -> ComplexMatrix {
                const ComplexVector cs = engine.coherent().state(pt);
                return cs * cs.adjoint();
            },
            threads);
        report.identities.push_back(make_residual(
            "resolution_of_unity", 0, false,
            (norm * projector_integral - identity).cwiseAbs().maxCoeff(), tolerance));
    }

    // First moments: norm * integral <cs|L_k|cs> dV = 0 for every generator
    // in every family of the kernel construction.
    {
        double worst = 0.0;
        for (std::size_t fam = 0; fam < engine.family_count(); ++fam) {
            ComplexMatrix moments_integral = integrate_matrix(
                grid,
                [&](const PhasePoint& pt) -> ComplexMatrix {
                    const auto data = engine.point_data(pt);
                    return data.moments[fam].cast<Complex>();
                },
                threads);
            worst = std::max(worst, norm * moments_integral.cwiseAbs().maxCoeff());
        }
        report.identities.push_back(make_residual("first_moments_zero", 0, false, worst, tolerance));
    }

    // Second moments (fundamental representation only):
    // norm * integral <L_a><L_b> dV = 2/(n+1) delta_ab.
    if (m == 1) {
        const Index count = engine.family(0).count();
        const ComplexMatrix second = integrate_matrix(
            grid,
            [&](const PhasePoint& pt) -> ComplexMatrix {
                const auto data = engine.point_data(pt);
                const RealVector& mom = data.moments[0];
                return (mom * mom.transpose()).cast<Complex>();
            },
            threads);
        const ComplexMatrix target = 2.0 / (n + 1.0) * ComplexMatrix::Identity(count, count);
        report.identities.push_back(make_residual(
            "second_moments", 0, false, (norm * second - target).cwiseAbs().maxCoeff(), tolerance));
    }

    for (int s : {-1, 0, 1}) {
        // Kernel normalization: norm * integral F^s dV = I.
        const ComplexMatrix kernel_integral = integrate_matrix(
            grid,
            [&](const PhasePoint& pt) -> ComplexMatrix {
                return engine.kernel_matrix(s, engine.point_data(pt));
            },
            threads);
        report.identities.push_back(
            make_residual("kernel_normalization", s, true,
                          (norm * kernel_integral - identity).cwiseAbs().maxCoeff(), tolerance));

        // Distribution normalization: norm * integral Tr[rho F^s] dV = 1.
        const double dist_integral = integrate_scalar(
            grid,
            [&](const PhasePoint& pt) {
                return (rho.matrix * engine.kernel_matrix(s, engine.point_data(pt)))
                    .trace()
                    .real();
            },
            threads);
        report.identities.push_back(make_residual("distribution_normalization", s, true,
                                                  std::abs(norm * dist_integral - 1.0), tolerance));

        // Recovery: norm * integral f^{(+s)} F^{(-s)} dV = rho.
        const auto report_recovery = recover_density(
            [&](const PhasePoint& pt) {
                return (rho.matrix * engine.kernel_matrix(s, engine.point_data(pt)))
                    .trace()
                    .real();
            },
            n, m, s, grid, threads);
        report.identities.push_back(
            make_residual("density_recovery", s, true,
                          (report_recovery.rho.matrix - rho.matrix).norm(), tolerance));
    }

    report.pass = true;
    for (const auto& identity : report.identities) report.pass = report.pass && identity.pass;
    return report;
}

}  // namespace sunqps
