#pragma once

// SU(N) coherent states from the Euler-angle product decomposition.
//
// The full group element is an ordered product of two-parameter factors
// A(y, j(z)) = exp(i L3(3) phi) exp(i L2(1,y) theta) over blocks z = N..2,
// followed by the diagonal phases B.  Coherent states are the orbit of the
// lowest-weight state |0,...,0,M>, i.e. the last column of the unitary.
//
// Only the first block (z = N) and the final diagonal phase act nontrivially
// on the lowest-weight state, so a coherent state is parametrized by the
// reduced angle set (theta_1..theta_{N-1}, phi_1..phi_{N-1}) plus one global
// phase.  PhasePoint carries the reduced set; the global phase defaults to 0
// (it cancels in every expectation value).

#include <utility>

#include "sunqps/algebra.hpp"
#include "sunqps/types.hpp"

namespace sunqps {

struct PhasePoint {
    RealVector thetas;  // N-1 angles in [0, pi/2]
    RealVector phis;    // N-1 angles in [0, 2*pi]
};

/// Throws std::domain_error unless the point has n-1 angles of each kind
/// within ranges.  Out-of-range angles are rejected, not wrapped.
void validate_phase_point(int n, const PhasePoint& point);

/// Complete Euler angle set of the full group: N(N-1)/2 thetas and
/// N(N-1)/2 + (N-1) phis, indexed as in the A/B factor bookkeeping.
struct EulerAngles {
    RealVector thetas;
    RealVector phis;
};

struct CoherentState {
    int n = 0;
    int m = 0;
    PhasePoint point;
    ComplexVector amplitudes;  // unit norm, dimension C(n+m-1, m)
};

/// Caches the generator eigensystems needed to evaluate the exponential
/// factors, so repeated evaluation over many phase points stays cheap.
/// Immutable after construction; safe to share across threads.
class CoherentEngine {
public:
    CoherentEngine(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }
    Index dim() const { return dim_; }
    const GeneratorSet& generators() const { return gens_; }

    /// Unitary of the embedded phase point (all other Euler angles zero).
    ComplexMatrix unitary(const PhasePoint& point) const;

    /// Last column of unitary(point): the coherent state amplitudes.
    ComplexVector state(const PhasePoint& point) const;

    /// Unitary of a complete Euler angle set.
    ComplexMatrix full_unitary(const EulerAngles& angles) const;

private:
    // exp(i L theta) for the cached Hermitian generator eigensystem #idx
    ComplexMatrix factor_exponential(int idx, double theta) const;

    int n_;
    int m_;
    Index dim_;
    GeneratorSet gens_;
    std::vector<ComplexMatrix> eigvecs_;  // per y = 2..N of L2(1,y)
    std::vector<RealVector> eigvals_;
    RealVector phase_diag_;        // diagonal of L3(3)
    RealVector global_phase_diag_; // diagonal of L3(N^2-1)
};

ComplexMatrix euler_unitary(int n, int m, const PhasePoint& point);
ComplexMatrix euler_unitary(int n, int m, const EulerAngles& angles);

CoherentState coherent_state(int n, int m, const PhasePoint& point);

/// Product of the per-dimension volume factors of the invariant measure on
/// CP^{N-1}: sin(2 theta_1) for the first dimension, cos^{2y-3} sin for the
/// middle ones, cos sin^{2N-3} for the last.  For n = 2 the single factor is
/// sin(2 theta_1).
double volume_weight(int n, const PhasePoint& point);

/// (N+M-1)! / (2 pi^{N-1} M!), the prefactor that makes the coherent-state
/// projector integrate to the identity.
double normalization_constant(int n, int m);

}  // namespace sunqps
