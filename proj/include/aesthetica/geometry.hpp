#pragma once

#include <cstddef>
#include <vector>

#include "aesthetica/types.hpp"

namespace aesthetica::geometry {

/// Integrand magnitude below which a Klein parameter is treated as undefined.
inline constexpr double kIntegrandFloor = 1e-12;

struct ReparamOptions {
    /// Starting value θ₀ or u₀. Arc length always starts at 0.
    double base = 0.0;
    /// Output sample count; 0 keeps the input count.
    std::size_t samples = 0;
    /// Reverse a negatively oriented curve instead of failing.
    bool allow_orientation_flip = true;
};

/// Resample `curve` onto a uniform grid of the target parameter.
///
/// The defining integrand (|γ_t|, κ^E|γ_t| or det(γ_t, γ_tt)^{1/3}) is
/// evaluated with finite differences on a uniform grid, integrated
/// cumulatively, and the points are re-interpolated at uniform target
/// values. A curve whose integrand is negative everywhere is reversed first
/// and the flip is recorded in its provenance.
///
/// Throws SignChange, DegenerateIntegrand or TooFewSamples.
SampledCurve reparametrize(const SampledCurve& curve, ParamKind target, const ReparamOptions& options = {});

/// κ^E = det(γ_t, γ_tt) / |γ_t|³ on the stencil interior.
CurvatureProfile euclidean_curvature(const SampledCurve& curve);

/// κ^sim = κ^E_s / (κ^E)²; throws VanishingCurvature where κ^E reaches zero.
CurvatureProfile similarity_curvature(const SampledCurve& curve);

enum class EquiaffineRoute {
    /// From κ^E and its arc-length derivatives. κ^E_ss is effectively a
    /// fourth derivative of the points, so roundoff grows like h^{-4}; a few
    /// hundred samples per unit of curvature variation is the useful range.
    Euclidean,
    /// det(γ_uu, γ_uuu) after resampling uniformly in the equiaffine arc
    /// length u (skipped when the input already is). Profile params are u.
    Equiaffine,
};

CurvatureProfile equiaffine_curvature(const SampledCurve& curve, EquiaffineRoute route);

/// Not-a-knot cubic spline resampling onto `n` uniform parameter values over the
/// same span. Kind and provenance are kept.
SampledCurve resample_uniform(const SampledCurve& curve, std::size_t n);

/// The same point set traversed backwards; params become -t in reverse order.
SampledCurve reverse(const SampledCurve& curve);

/// Derivatives of the point coordinates with respect to the curve parameter,
/// full length (one-sided stencils at the ends). Non-uniform curves are
/// resampled first; the returned `params` are the grid actually used.
struct CurveDerivatives {
    std::vector<double> params;
    std::vector<PlanarPoint> points;
    std::vector<PlanarPoint> d1;
    std::vector<PlanarPoint> d2;
    std::vector<PlanarPoint> d3;
    double step = 0.0;
};

CurveDerivatives differentiate(const SampledCurve& curve);

/// Tangent direction angle arg(γ_t), unwrapped to be continuous, at every
/// sample of a uniform curve.
std::vector<double> tangent_angle(const SampledCurve& curve);

}  // namespace aesthetica::geometry
