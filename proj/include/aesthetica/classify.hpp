#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "aesthetica/geometry.hpp"
#include "aesthetica/types.hpp"

namespace aesthetica::classify {

enum class CoefSign { Plus, Minus, Zero };

std::string_view to_string(CoefSign sign) noexcept;

/// κ^SA(u) = ±(ξu+η)^{-2}, normalized so that ξu+η > 0 on the data. For
/// sign Zero the constant κ^SA is stored in eta and xi is 0.
struct ESACoefficients {
    CoefSign sign = CoefSign::Zero;
    double xi = 0.0;
    double eta = 0.0;
    /// RMS(κ_fit − κ) / RMS(κ); 0 for sign Zero.
    double fit_rmse = 0.0;
};

/// Relative spread below which a profile counts as constant.
inline constexpr double kConstantSpread = 1e-4;
/// |κ^SA| below which a profile counts as identically zero.
inline constexpr double kZeroCurvature = 1e-6;
/// Fraction of opposite-sign samples tolerated before MixedSign.
inline constexpr double kMinorityFraction = 0.01;
inline constexpr double kPoorFit = 0.05;

ESACoefficients fit_esa_curvature(const CurvatureProfile& profile);

enum class ClassKind { PowerGraph, LogGraph, XLogXGraph, LogSpiral, Quadratic };
enum class Conic { Parabola, Ellipse, Hyperbola };

std::string_view to_string(ClassKind kind) noexcept;
std::string_view to_string(Conic conic) noexcept;

enum class FitMethod { Pointwise, Model };

std::string_view to_string(FitMethod method) noexcept;

struct ClassLabel {
    ClassKind kind = ClassKind::Quadratic;
    /// Power-graph exponent (PowerGraph only).
    double alpha = 0.0;
    /// Conic type (Quadratic only).
    Conic conic = Conic::Parabola;
    std::optional<double> omega;
    ESACoefficients coefficients;
    FitMethod method = FitMethod::Pointwise;
    /// Model fits only: RMS point residual over the bounding-box diagonal.
    double point_rmse = 0.0;

    /// "power_graph(alpha=0.2)", "quadratic(ellipse)", ...
    std::string describe() const;
};

enum class Mode {
    /// Pointwise when it fits within kAutoPointwise, else the model fit.
    Auto,
    Pointwise,
    Model,
};

inline constexpr double kAutoPointwise = 0.01;

struct ClassifyOptions {
    Mode mode = Mode::Auto;
    geometry::EquiaffineRoute route = geometry::EquiaffineRoute::Equiaffine;
    /// τ = tau_rel·|ξ| around |ξ| = 2, and τ_ω around ω = 3/2.
    double tau_rel = 1e-3;
    double tau_omega = 1e-3;
};

/// Class implied by fitted coefficients (the dispatch table alone).
ClassLabel dispatch(const ESACoefficients& coef, const ClassifyOptions& options = {});

/// Pointwise: equiaffine_curvature, fit_esa_curvature, dispatch. Model:
/// least-squares fit of the sample points by affine images of the closed-form
/// class members, with the curve's parameter taken as equiaffine arc length up
/// to scale; the model (parabola, conic, ESA) is chosen by BIC. Failures of the
/// chosen path raise Unclassifiable.
ClassLabel classify(const SampledCurve& curve, const ClassifyOptions& options = {});

enum class Direction { AlphaToOmega, OmegaToAlpha };

/// ω = (3/2)(1−α)/(1+α) and its inverse α = (3−2ω)/(3+2ω).
double omega_alpha(Direction direction, double value);

}  // namespace aesthetica::classify
