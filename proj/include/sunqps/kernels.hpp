#pragma once

// Phase-space generating kernels F^s for the three distribution orderings
// s = +1 (Q), 0 (Wigner), -1 (P), in the M = 1 and M = 2 representations.
//
// Every kernel has the shape  F = I/d + sum over generator families of
// coefficient(s) * sum_k <cs|L_k|cs> L_k.  For M = 1 there is one family
// (the fundamental set) with coefficient Omega(s)/2; for M = 2 there are
// two: the fundamental set of SU(d) acting on the M = 2 coherent state, and
// the M = 2 set of SU(N), with the omega_m2 coefficient table.

#include <vector>

#include "sunqps/algebra.hpp"
#include "sunqps/coherent.hpp"
#include "sunqps/types.hpp"

namespace sunqps {

/// Distribution ordering label; the only admitted values are -1, 0, +1.
void validate_s_order(int s);

struct Kernel {
    int n = 0;
    int m = 0;
    int s = 0;
    PhasePoint point;
    ComplexMatrix matrix;  // Hermitian, unit trace
};

/// Omega(s): sqrt(n+1) for s=0, 1 for s=+1, n+1 for s=-1.
double omega_m1(int s, int n);

/// M = 2 family coefficients, c = 1 for the SU(d) fundamental family and
/// c = 2 for the SU(n) M=2 family.
double omega_m2(int s, int c, int n);

/// Precomputed generator families and coherent-state machinery for one
/// (n, m).  Immutable after construction; usable concurrently.
class KernelEngine {
public:
    KernelEngine(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }
    Index dim() const { return dim_; }
    const CoherentEngine& coherent() const { return coherent_; }

    std::size_t family_count() const { return families_.size(); }
    const GeneratorSet& family(std::size_t idx) const { return families_[idx]; }
    double family_coefficient(int s, std::size_t idx) const;

    /// Coherent state and per-family expectation vectors <cs|L_k|cs> at a
    /// point; shared by all three s values.
    struct PointData {
        ComplexVector state;
        std::vector<RealVector> moments;
    };
    PointData point_data(const PhasePoint& point) const;

    ComplexMatrix kernel_matrix(int s, const PointData& data) const;
    Kernel kernel(int s, const PhasePoint& point) const;

    /// Matrix-ratio conversion: rebuilds the target kernel at src.point from
    /// Upsilon = Ftilde_target Ftilde_src^{-1} with Ftilde = F - I/d.
    /// Throws ConditioningError if Ftilde_src has an eigenvalue below 1e-12
    /// in magnitude or condition number above the cap.
    Kernel convert(const Kernel& src, int target_s, double condition_cap = 1e8) const;

private:
    int n_;
    int m_;
    Index dim_;
    CoherentEngine coherent_;
    std::vector<GeneratorSet> families_;
};

Kernel kernel_m1(int n, int s, const PhasePoint& point);
Kernel kernel_m2(int n, int s, const PhasePoint& point);

/// Scalar conversion (Omega(s')/Omega(s)) F + (1 - Omega(s')/Omega(s)) I/n.
Kernel convert_kernel_m1(const Kernel& src, int target_s);

Kernel convert_kernel_m2(const Kernel& src, int target_s, double condition_cap = 1e8);

}  // namespace sunqps
