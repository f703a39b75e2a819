#pragma once

// Battery of phase-space identities checked by quadrature: resolution of
// unity, vanishing first moments, second moments (m = 1), kernel and
// distribution normalization for all three orderings, and density-matrix
// recovery through the opposite-ordering kernel.

#include <cstdint>
#include <string>
#include <vector>

#include "sunqps/distributions.hpp"

namespace sunqps {

struct IdentityResidual {
    std::string name;
    int s = 0;          // ordering the identity was run at; 0 when not applicable
    bool s_applies = false;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    int n = 0;
    int m = 0;
    int grid_theta = 0;
    int grid_phi = 0;
    std::uint64_t seed = 0;  // seed of the random mixed state used by the
                             // distribution-normalization and recovery checks
    std::vector<IdentityResidual> identities;
    bool pass = false;
};

/// Ginibre-sampled full-rank mixed state, deterministic in the seed.
DensityMatrix random_mixed_state(Index dim, std::uint64_t seed);

ComplexVector random_pure_state(Index dim, std::uint64_t seed);

PhasePoint random_phase_point(int n, std::uint64_t seed);

VerifyReport run_identity_suite(int n, int m, int grid_theta, int grid_phi,
                                double tolerance = 1e-10, std::uint64_t seed = 20120115,
                                int threads = 1);

}  // namespace sunqps
