#include "sunqps/werner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "sunqps/kernels.hpp"

namespace sunqps {

namespace {

constexpr double kPi = std::numbers::pi;

void check_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::domain_error("werner: gamma = " + std::to_string(gamma) + " outside [0, 1]");
}

// Branch value with cos(phi_1 - phi_2) already fixed to +1 (aligned) or -1.
double branch_value(double gamma, int s, PhiCase phi_case, double t1, double t2, double t3) {
    const double omega = omega_m1(s, 4);
    const double sign = phi_case == PhiCase::Aligned ? 1.0 : -1.0;
    const double inner = 1.0 - 6.0 * std::cos(2.0 * t1) * std::cos(t2) * std::cos(t2) -
                         3.0 * std::cos(2.0 * t2) -
                         sign * 12.0 * std::sin(t1) * std::sin(2.0 * t2);
    const double st3 = std::sin(t3);
    return (6.0 - gamma * (2.0 + 4.0 * std::cos(2.0 * t3) - inner * st3 * st3) * omega) / 24.0;
}

// Nelder-Mead on [0, pi/2]^3, clamped evaluation.  The objective is smooth
// and low-dimensional; a short run from a lattice seed suffices.
std::array<double, 3> refine_minimum(const std::function<double(const std::array<double, 3>&)>& f,
                                     std::array<double, 3> seed) {
    constexpr double kLo = 0.0, kHi = kPi / 2.0;
    auto clamped = [&](std::array<double, 3> x) {
        for (double& v : x) v = std::clamp(v, kLo, kHi);
        return f(x);
    };
    std::array<std::array<double, 3>, 4> simplex;
    std::array<double, 4> values;
    simplex[0] = seed;
    for (int i = 1; i < 4; ++i) {
        simplex[i] = seed;
        simplex[i][i - 1] += 0.05;
    }
    for (int i = 0; i < 4; ++i) values[i] = clamped(simplex[i]);

    for (int iter = 0; iter < 200; ++iter) {
        std::array<int, 4> order{0, 1, 2, 3};
        std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
        const int best = order[0], second_worst = order[2], worst = order[3];
        if (values[worst] - values[best] < 1e-14) break;

        std::array<double, 3> centroid{0, 0, 0};
        for (int i = 0; i < 4; ++i)
            if (i != worst)
                for (int k = 0; k < 3; ++k) centroid[k] += simplex[i][k] / 3.0;

        auto blend = [&](double t) {
            std::array<double, 3> x;
            for (int k = 0; k < 3; ++k) x[k] = centroid[k] + t * (centroid[k] - simplex[worst][k]);
            return x;
        };

        const auto reflected = blend(1.0);
        const double fr = clamped(reflected);
        if (fr < values[best]) {
            const auto expanded = blend(2.0);
            const double fe = clamped(expanded);
            if (fe < fr) { simplex[worst] = expanded; values[worst] = fe; }
            else { simplex[worst] = reflected; values[worst] = fr; }
        } else if (fr < values[second_worst]) {
            simplex[worst] = reflected;
            values[worst] = fr;
        } else {
            const auto contracted = blend(-0.5);
            const double fc = clamped(contracted);
            if (fc < values[worst]) { simplex[worst] = contracted; values[worst] = fc; }
            else {
                for (int i = 0; i < 4; ++i) {
                    if (i == best) continue;
                    for (int k = 0; k < 3; ++k)
                        simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
                    values[i] = clamped(simplex[i]);
                }
            }
        }
    }
    const int best = static_cast<int>(std::min_element(values.begin(), values.end()) - values.begin());
    std::array<double, 3> out = simplex[best];
    for (double& v : out) v = std::clamp(v, kLo, kHi);
    return out;
}

double lattice_minimum(double gamma, int s, PhiCase phi_case, int resolution) {
    double best = std::numeric_limits<double>::infinity();
    std::array<double, 3> seed{0, 0, 0};
    for (int i = 0; i < resolution; ++i) {
        const double t1 = kPi / 2.0 * i / (resolution - 1);
        for (int j = 0; j < resolution; ++j) {
            const double t2 = kPi / 2.0 * j / (resolution - 1);
            for (int k = 0; k < resolution; ++k) {
                const double t3 = kPi / 2.0 * k / (resolution - 1);
                const double v = branch_value(gamma, s, phi_case, t1, t2, t3);
                if (v < best) {
                    best = v;
                    seed = {t1, t2, t3};
                }
            }
        }
    }
    const auto refined = refine_minimum(
        [&](const std::array<double, 3>& x) {
            return branch_value(gamma, s, phi_case, x[0], x[1], x[2]);
        },
        seed);
    return std::min(best, branch_value(gamma, s, phi_case, refined[0], refined[1], refined[2]));
}

}  // namespace

DensityMatrix werner_state(const WernerParams& params) {
    check_gamma(params.gamma);
    const double g = params.gamma;
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = (1.0 - g) / 4.0;
    rho(1, 1) = (1.0 + g) / 4.0;
    rho(2, 2) = (1.0 + g) / 4.0;
    rho(3, 3) = (1.0 - g) / 4.0;
    rho(1, 2) = -g / 2.0;
    rho(2, 1) = -g / 2.0;
    return DensityMatrix{4, std::move(rho)};
}

double werner_closed_form(const WernerParams& params, int s, const PhasePoint& point) {
    check_gamma(params.gamma);
    validate_phase_point(4, point);
    const double omega = omega_m1(s, 4);
    const double t1 = point.thetas(0), t2 = point.thetas(1), t3 = point.thetas(2);
    const double inner = 1.0 - 6.0 * std::cos(2.0 * t1) * std::cos(t2) * std::cos(t2) -
                         3.0 * std::cos(2.0 * t2) -
                         12.0 * std::cos(point.phis(0) - point.phis(1)) * std::sin(t1) *
                             std::sin(2.0 * t2);
    const double st3 = std::sin(t3);
    return (6.0 - params.gamma * (2.0 + 4.0 * std::cos(2.0 * t3) - inner * st3 * st3) * omega) /
           24.0;
}

void visit_scan_lattice(const WernerParams& params, int s, PhiCase phi_case, int resolution,
                        const std::function<void(const NegativityCell&, bool)>& visit) {
    check_gamma(params.gamma);
    validate_s_order(s);
    if (resolution < 8) throw std::domain_error("negativity scan: resolution must be >= 8");
    for (int i = 0; i < resolution; ++i) {
        const double t1 = kPi / 2.0 * i / (resolution - 1);
        for (int j = 0; j < resolution; ++j) {
            const double t2 = kPi / 2.0 * j / (resolution - 1);
            for (int k = 0; k < resolution; ++k) {
                const double t3 = kPi / 2.0 * k / (resolution - 1);
                const double v = branch_value(params.gamma, s, phi_case, t1, t2, t3);
                visit(NegativityCell{t1, t2, t3, v}, v < 0.0);
            }
        }
    }
}

NegativityScan negativity_scan(const WernerParams& params, int s, PhiCase phi_case, int resolution,
                               int threads) {
    (void)threads;  // lattice scans are cheap; kept serial for a fixed visit order
    NegativityScan scan;
    scan.s = s;
    scan.gamma = params.gamma;
    scan.phi_case = phi_case;
    scan.resolution = resolution;
    scan.min_value = std::numeric_limits<double>::infinity();
    visit_scan_lattice(params, s, phi_case, resolution, [&](const NegativityCell& cell, bool neg) {
        scan.min_value = std::min(scan.min_value, cell.value);
        if (neg) scan.negative_cells.push_back(cell);
    });
    return scan;
}

ThresholdResult threshold_bisect(int s, PhiCase phi_case, double tol) {
    validate_s_order(s);
    if (!(tol > 0.0)) throw std::domain_error("threshold_bisect: tol must be positive");
    constexpr int kSeedResolution = 64;

    const auto min_at = [&](double gamma) {
        return lattice_minimum(gamma, s, phi_case, kSeedResolution);
    };
    if (min_at(1.0) >= 0.0) return ThresholdResult{false, 0.0};

    double lo = 0.0, hi = 1.0;  // min_at(lo) >= 0 (gamma = 0 gives 1/4 > 0)
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (min_at(mid) < 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return ThresholdResult{true, 0.5 * (lo + hi)};
}

}  // namespace sunqps
