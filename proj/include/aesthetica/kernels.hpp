#pragma once

// Data-parallel numerical kernels on sampled series.
//
// Every kernel in `aesthetica::kernels` has a plain serial counterpart in
// `aesthetica::kernels::reference`, written independently (per-node weight
// construction, Neville's scheme, dense elimination) so the two can be
// cross-checked. The parallel versions only distribute independent
// per-element work (OpenMP static schedule); anything with a carried
// dependency or a reduction runs in fixed left-to-right order, so their
// output is bit-identical for any thread count.

#include <cstddef>
#include <span>
#include <vector>

namespace aesthetica::kernels {

/// Finite-difference derivatives of a series sampled on a uniform grid.
/// d1, d2 are fourth-order; d3 is second-order. Central stencils in the
/// interior, one-sided stencils of the same order at the two ends.
struct Derivatives {
    std::vector<double> d1;
    std::vector<double> d2;
    std::vector<double> d3;
};

/// Samples trimmed from each end of a derivative-based profile.
inline constexpr std::size_t kStencilTrim = 4;

Derivatives derivatives(std::span<const double> f, double h);
std::vector<double> first_derivative(std::span<const double> f, double h);

/// Cumulative integral F[i] = base + ∫_{x0}^{xi} f on a uniform grid.
/// Each cell uses the four-point cubic rule (one-sided at the two end cells)
/// and cells are summed left to right. Fourth-order, with no odd/even
/// alternation in the error.
std::vector<double> cumulative_integral(std::span<const double> f, double h, double base = 0.0);

/// Local Lagrange interpolation of degree `order - 1` on strictly increasing
/// (possibly nonuniform) nodes. The stencil is the `order` nodes centred on
/// the query interval, shifted inwards at the ends.
std::vector<double> interpolate(std::span<const double> nodes, std::span<const double> values,
                                std::span<const double> queries, std::size_t order = 8);

/// Cubic spline through (nodes, values) with not-a-knot end conditions.
/// Needs at least 4 nodes.
class CubicSpline {
public:
    CubicSpline(std::span<const double> nodes, std::span<const double> values);

    double operator()(double x) const;
    std::vector<double> evaluate(std::span<const double> queries) const;

private:
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;  // second derivatives at the nodes
};

/// Fornberg finite-difference weights for the `order`-th derivative at 0
/// using the given offsets (in units of the grid step).
std::vector<double> fd_weights(std::span<const double> offsets, int order);

namespace reference {

Derivatives derivatives(std::span<const double> f, double h);
std::vector<double> cumulative_integral(std::span<const double> f, double h, double base = 0.0);
std::vector<double> interpolate(std::span<const double> nodes, std::span<const double> values,
                                std::span<const double> queries, std::size_t order = 8);
std::vector<double> cubic_spline_evaluate(std::span<const double> nodes,
                                          std::span<const double> values,
                                          std::span<const double> queries);

}  // namespace reference

}  // namespace aesthetica::kernels
