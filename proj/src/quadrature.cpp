#include "sunqps/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace sunqps {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::pair<RealVector, RealVector> gauss_legendre(int points) {
    if (points < 1) throw std::domain_error("gauss_legendre: need at least one point");
    RealVector nodes(points), weights(points);
    const int half = (points + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration from the Chebyshev-based seed.
        double x = std::cos(kPi * (i + 0.75) / (points + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= points; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = points * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        if (2 * i + 1 == points) x = 0.0;  // center node of odd rules is exact
        nodes(i) = -x;
        nodes(points - 1 - i) = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights(i) = w;
        weights(points - 1 - i) = w;
    }
    return {nodes, weights};
}

Index QuadratureGrid::point_count() const {
    Index count = 1;
    for (int i = 0; i < n - 1; ++i) count *= theta_points;
    for (int i = 0; i < n - 1; ++i) count *= phi_points;
    return count;
}

PhasePoint QuadratureGrid::point(Index flat) const {
    const int dims = n - 1;
    PhasePoint pt{RealVector(dims), RealVector(dims)};
    for (int i = dims - 1; i >= 0; --i) {
        pt.phis(i) = phi_nodes(flat % phi_points);
        flat /= phi_points;
    }
    for (int i = dims - 1; i >= 0; --i) {
        pt.thetas(i) = theta_nodes[static_cast<std::size_t>(i)](flat % theta_points);
        flat /= theta_points;
    }
    return pt;
}

double QuadratureGrid::weight(Index flat) const {
    const int dims = n - 1;
    double w = 1.0;
    for (int i = 0; i < dims; ++i) {
        w *= phi_weight;
        flat /= phi_points;
    }
    for (int i = dims - 1; i >= 0; --i) {
        w *= theta_weights[static_cast<std::size_t>(i)](flat % theta_points);
        flat /= theta_points;
    }
    return w;
}

QuadratureGrid build_grid(int n, int theta_points, int phi_points) {
    if (n < 2) throw std::domain_error("build_grid: n must be >= 2");
    if (theta_points < 2 || phi_points < 2)
        throw std::domain_error("build_grid: need at least 2 points per dimension");

    QuadratureGrid grid;
    grid.n = n;
    grid.theta_points = theta_points;
    grid.phi_points = phi_points;

    const auto [u, w] = gauss_legendre(theta_points);
    for (int i = 1; i <= n - 1; ++i) {
        const int y = i + 1;
        RealVector nodes(theta_points), weights(theta_points);
        for (int j = 0; j < theta_points; ++j) {
            nodes(j) = 0.5 * std::acos(u(j));
            // d theta measure factor under u = cos(2 theta):
            //   y = 2:       sin(2t) dt            -> w/2
            //   2 < y < n:   cos^{2y-3} t sin t dt -> (w/4) ((1+u)/2)^{y-2}
            //   y = n:       cos t sin^{2n-3} t dt -> (w/4) ((1-u)/2)^{n-2}
            if (y == 2)
                weights(j) = 0.5 * w(j);
            else if (y == n)
                weights(j) = 0.25 * w(j) * std::pow(0.5 * (1.0 - u(j)), n - 2);
            else
                weights(j) = 0.25 * w(j) * std::pow(0.5 * (1.0 + u(j)), y - 2);
        }
        grid.theta_nodes.push_back(std::move(nodes));
        grid.theta_weights.push_back(std::move(weights));
    }

    grid.phi_nodes = RealVector(phi_points);
    for (int j = 0; j < phi_points; ++j) grid.phi_nodes(j) = 2.0 * kPi * j / phi_points;
    grid.phi_weight = 2.0 * kPi / phi_points;
    return grid;
}

std::pair<int, int> default_resolution(int n, int m) {
    rep_dimension(n, m);  // argument validation
    return {2 * m + n + 2, 4 * m + 4};
}

namespace detail {

int parallel_levels_for(int threads) {
    int levels = 0;
    while ((1 << levels) < threads && levels < 8) ++levels;
    return levels;
}

}  // namespace detail

}  // namespace sunqps
