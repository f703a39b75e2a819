#pragma once

// Two-qubit Werner family inside the SU(4), M = 1 machinery: the density
// matrix, the closed-form distribution value, negativity-region lattice
// scans over the three theta angles, and the critical purity where the
// scanned minimum changes sign.

#include <optional>
#include <vector>

#include "sunqps/distributions.hpp"
#include "sunqps/types.hpp"

namespace sunqps {

struct WernerParams {
    double gamma = 0.0;  // purity parameter in [0, 1]
};

enum class PhiCase {
    Aligned,  // phi_1 = phi_2 = 0
    Anti,     // phi_1 = pi, phi_2 = 0
};

/// 4x4 Werner matrix; gamma = 0 is maximally mixed, gamma = 1 a pure
/// singlet-type state.  Throws std::domain_error outside [0, 1].
DensityMatrix werner_state(const WernerParams& params);

/// Closed-form value of f^s for the Werner state at an SU(4) phase point
/// (3 thetas, 3 phis; the third phi does not enter).
double werner_closed_form(const WernerParams& params, int s, const PhasePoint& point);

struct NegativityCell {
    double theta1, theta2, theta3;
    double value;
};

struct NegativityScan {
    int s = 0;
    double gamma = 0.0;
    PhiCase phi_case = PhiCase::Aligned;
    int resolution = 0;               // lattice points per axis, endpoints included
    std::vector<NegativityCell> negative_cells;
    double min_value = 0.0;           // global minimum over the lattice
};

/// Evaluates the chosen phi branch on a uniform [0, pi/2]^3 lattice and
/// records every strictly negative cell.  resolution >= 8.
NegativityScan negativity_scan(const WernerParams& params, int s, PhiCase phi_case,
                               int resolution, int threads = 1);

/// One callback per lattice cell in scan order, for CSV emission.
void visit_scan_lattice(const WernerParams& params, int s, PhiCase phi_case, int resolution,
                        const std::function<void(const NegativityCell&, bool)>& visit);

struct ThresholdResult {
    bool found = false;       // false when the minimum never goes negative on [0, 1]
    double gamma_critical = 0.0;
};

/// Bisects gamma in [0, 1] on the sign of the minimum of the phi-branch
/// closed form over theta-space (dense lattice seed plus Nelder-Mead
/// refinement) to width tol.
ThresholdResult threshold_bisect(int s, PhiCase phi_case, double tol);

}  // namespace sunqps
