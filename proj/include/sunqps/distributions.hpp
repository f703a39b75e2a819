#pragma once

// Quasi-distribution values f^s(theta, phi) = Tr[rho F^s], Bloch-vector
// views of fundamental-representation density matrices, and density-matrix
// recovery by quadrature against the opposite-ordering kernel.

#include <functional>

#include "sunqps/kernels.hpp"
#include "sunqps/quadrature.hpp"
#include "sunqps/types.hpp"

namespace sunqps {

struct DensityMatrix {
    Index dim = 0;
    ComplexMatrix matrix;
};

/// Validates Hermiticity, unit trace, and positive semidefiniteness
/// (eigenvalues >= -psd_tol) and returns the wrapped matrix.
DensityMatrix make_density_matrix(const ComplexMatrix& matrix, double herm_tol = 1e-12,
                                  double trace_tol = 1e-12, double psd_tol = 1e-10);

struct BlochVector {
    int n = 0;
    RealVector components;  // length n^2 - 1; slot k-1 pairs with Lambda(k)
};

struct DistributionSample {
    int s = 0;
    PhasePoint point;
    double value = 0.0;
};

/// n_k = sqrt(n / (2(n-1))) Tr[rho Lambda(k)]; gens must be fundamental and
/// match rho's dimension.
BlochVector bloch_decompose(const DensityMatrix& rho, const GeneratorSet& gens);

/// I/n + sqrt((n-1)/(2n)) sum_k n_k Lambda(k).  Hermitian with unit trace by
/// construction; positivity is not checked (intermediate vectors may be
/// unphysical).
DensityMatrix bloch_compose(const BlochVector& bloch, const GeneratorSet& gens);

DistributionSample eval_distribution(const DensityMatrix& rho, int n, int m, int s,
                                     const PhasePoint& point);

/// M = 1 fast form: 1/n + sqrt((n-1)/(2n)) Omega(s) sum_k <cs|L_k|cs> n_k.
DistributionSample eval_distribution_bloch(const BlochVector& bloch, int s,
                                           const PhasePoint& point);

struct RecoveryReport {
    DensityMatrix rho;             // hermitized quadrature estimate
    double hermiticity_residual;   // max |rho_hat - rho_hat^dagger| before hermitizing
    double trace_residual;         // |Tr rho_hat - 1|
    double min_eigenvalue;
    bool positivity_warning;       // min eigenvalue < -1e-8
};

/// rho_hat = normalization * sum_grid w f^{(+s)}(pt) F^{(-s)}(pt).  The
/// sampled distribution must correspond to ordering s; the kernel uses -s.
RecoveryReport recover_density(const std::function<double(const PhasePoint&)>& f_plus_s, int n,
                               int m, int s, const QuadratureGrid& grid, int threads = 1);

/// Same reconstruction from precomputed samples in grid flat-index order.
RecoveryReport recover_density_samples(const std::vector<double>& samples, int n, int m, int s,
                                       const QuadratureGrid& grid, int threads = 1);

}  // namespace sunqps
