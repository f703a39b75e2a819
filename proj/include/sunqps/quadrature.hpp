#pragma once

// Product quadrature over CP^{N-1} with the invariant volume weight folded
// into the node weights.
//
// Each theta dimension uses Gauss-Legendre nodes mapped to [0, pi/2] through
// u = cos(2 theta).  Every integrand arising from coherent-state bilinears
// is, after the phi average, an even polynomial in sin(theta_i) and
// cos(theta_i), i.e. a polynomial in u — so the rule is exact for them
// beyond a small finite order rather than merely convergent.  The phi
// dimensions use the uniform rule, exact for trigonometric polynomials of
// degree below the point count.
//
// Sums are accumulated by a fixed pairwise tree so results are bit-for-bit
// reproducible and independent of the worker-thread count.

#include <functional>
#include <future>
#include <utility>

#include "sunqps/coherent.hpp"
#include "sunqps/types.hpp"

namespace sunqps {

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<RealVector, RealVector> gauss_legendre(int points);

struct QuadratureGrid {
    int n = 0;
    int theta_points = 0;
    int phi_points = 0;
    std::vector<RealVector> theta_nodes;    // per dimension i = 1..n-1
    std::vector<RealVector> theta_weights;  // measure factor folded in
    RealVector phi_nodes;                   // shared by all phi dimensions
    double phi_weight = 0.0;                // 2*pi / phi_points

    Index point_count() const;

    /// Point and combined weight for a flat index: theta multi-index outer
    /// (row-major over dimensions), phi multi-index inner.
    PhasePoint point(Index flat) const;
    double weight(Index flat) const;
};

QuadratureGrid build_grid(int n, int theta_points, int phi_points);

/// (theta_points, phi_points) sufficient for the polynomial degree of
/// kernel-times-kernel integrands: (2m + n + 2, 4m + 4).
std::pair<int, int> default_resolution(int n, int m);

namespace detail {

template <class T, class Eval>
T pairwise_sum(Index begin, Index end, const Eval& eval, int parallel_levels) {
    constexpr Index kLeaf = 64;
    if (end - begin <= kLeaf) {
        T acc = eval(begin);
        for (Index i = begin + 1; i < end; ++i) acc += eval(i);
        return acc;
    }
    const Index mid = begin + (end - begin) / 2;
    if (parallel_levels > 0 && end - begin > 4096) {
        auto left = std::async(std::launch::async, [&] {
            return pairwise_sum<T>(begin, mid, eval, parallel_levels - 1);
        });
        T right = pairwise_sum<T>(mid, end, eval, parallel_levels - 1);
        T sum = left.get();
        sum += right;
        return sum;
    }
    T sum = pairwise_sum<T>(begin, mid, eval, 0);
    sum += pairwise_sum<T>(mid, end, eval, 0);
    return sum;
}

int parallel_levels_for(int threads);

}  // namespace detail

/// Sum of weight(p) * f(point(p)) over the grid, deterministic pairwise tree.
template <class F>
double integrate_scalar(const QuadratureGrid& grid, F&& f, int threads = 1) {
    const auto eval = [&](Index flat) {
        return grid.weight(flat) * f(grid.point(flat));
    };
    return detail::pairwise_sum<double>(0, grid.point_count(), eval,
                                        detail::parallel_levels_for(threads));
}

/// Entrywise matrix integral; f maps a phase point to a fixed-size matrix.
template <class F>
ComplexMatrix integrate_matrix(const QuadratureGrid& grid, F&& f, int threads = 1) {
    const auto eval = [&](Index flat) -> ComplexMatrix {
        return grid.weight(flat) * f(grid.point(flat));
    };
    return detail::pairwise_sum<ComplexMatrix>(0, grid.point_count(), eval,
                                               detail::parallel_levels_for(threads));
}

}  // namespace sunqps
