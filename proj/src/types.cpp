#include "aesthetica/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "aesthetica/error.hpp"

namespace aesthetica {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidInput: return "invalid_input";
        case ErrorCode::TooFewSamples: return "too_few_samples";
        case ErrorCode::NonMonotoneParams: return "non_monotone_params";
        case ErrorCode::NonFiniteValue: return "non_finite_value";
        case ErrorCode::SignChange: return "sign_change";
        case ErrorCode::DegenerateIntegrand: return "degenerate_integrand";
        case ErrorCode::DegenerateSpeed: return "degenerate_speed";
        case ErrorCode::VanishingCurvature: return "vanishing_curvature";
        case ErrorCode::NegativeCurvatureOnEuclideanRoute: return "negative_curvature_on_euclidean_route";
        case ErrorCode::InvalidSpec: return "invalid_spec";
        case ErrorCode::SingularRange: return "singular_range";
        case ErrorCode::NonMonotoneKappa: return "non_monotone_kappa";
        case ErrorCode::WronskianDrift: return "wronskian_drift";
        case ErrorCode::DomainContainsSingularity: return "domain_contains_singularity";
        case ErrorCode::InsufficientOverlap: return "insufficient_overlap";
        case ErrorCode::SingularNormalEquations: return "singular_normal_equations";
        case ErrorCode::NonpositiveU: return "nonpositive_u";
        case ErrorCode::MissingSpeedData: return "missing_speed_data";
        case ErrorCode::DegenerateLCG: return "degenerate_lcg";
        case ErrorCode::MixedSign: return "mixed_sign";
        case ErrorCode::PoorFit: return "poor_fit";
        case ErrorCode::Unclassifiable: return "unclassifiable";
        case ErrorCode::PoleInput: return "pole_input";
        case ErrorCode::EmptyInput: return "empty_input";
    }
    return "unknown";
}

std::string_view to_string(ParamKind kind) noexcept {
    switch (kind) {
        case ParamKind::Arbitrary: return "Arbitrary";
        case ParamKind::ArcLength: return "ArcLength";
        case ParamKind::TurningAngle: return "TurningAngle";
        case ParamKind::Equiaffine: return "Equiaffine";
        case ParamKind::ESAParam: return "ESAParam";
    }
    return "Arbitrary";
}

std::optional<ParamKind> parse_param_kind(std::string_view text) noexcept {
    for (auto k : {ParamKind::Arbitrary, ParamKind::ArcLength, ParamKind::TurningAngle, ParamKind::Equiaffine,
                   ParamKind::ESAParam})
        if (to_string(k) == text) return k;
    return std::nullopt;
}

std::string_view to_string(Geometry geometry) noexcept {
    switch (geometry) {
        case Geometry::Euclidean: return "Euclidean";
        case Geometry::Similarity: return "Similarity";
        case Geometry::Equiaffine: return "Equiaffine";
    }
    return "Euclidean";
}

namespace {

void check_params(const std::vector<double>& params) {
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (!std::isfinite(params[i])) fail(ErrorCode::NonFiniteValue, "non-finite parameter value");
        if (i > 0 && !(params[i] > params[i - 1]))
            fail(ErrorCode::NonMonotoneParams,
                 "parameters must be strictly increasing (index " + std::to_string(i) + ")");
    }
}

}  // namespace

SampledCurve::SampledCurve(std::vector<double> params, std::vector<PlanarPoint> points, ParamKind kind,
                           std::optional<Provenance> meta)
    : params_(std::move(params)), points_(std::move(points)), kind_(kind), meta_(std::move(meta)) {
    if (params_.size() != points_.size())
        fail(ErrorCode::InvalidInput, "params and points differ in length");
    if (params_.size() < kMinSamples)
        fail(ErrorCode::TooFewSamples, "curve has " + std::to_string(params_.size()) + " samples, need at least " +
                                           std::to_string(kMinSamples));
    check_params(params_);
    for (const auto& p : points_)
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail(ErrorCode::NonFiniteValue, "non-finite point");
}

std::vector<double> SampledCurve::xs() const {
    std::vector<double> out(points_.size());
    std::transform(points_.begin(), points_.end(), out.begin(), [](const PlanarPoint& p) { return p.x; });
    return out;
}

std::vector<double> SampledCurve::ys() const {
    std::vector<double> out(points_.size());
    std::transform(points_.begin(), points_.end(), out.begin(), [](const PlanarPoint& p) { return p.y; });
    return out;
}

double SampledCurve::mean_step() const noexcept {
    return (params_.back() - params_.front()) / static_cast<double>(params_.size() - 1);
}

bool SampledCurve::is_uniform() const noexcept {
    const double h = mean_step();
    const double p0 = params_.front();
    for (std::size_t i = 1; i < params_.size(); ++i)
        if (std::abs(params_[i] - (p0 + static_cast<double>(i) * h)) > 1e-9 * h) return false;
    return true;
}

double SampledCurve::bbox_diagonal() const noexcept {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& p : points_) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

SampledCurve SampledCurve::with_meta(Provenance meta) const {
    SampledCurve copy = *this;
    copy.meta_ = std::move(meta);
    return copy;
}

CurvatureProfile::CurvatureProfile(std::vector<double> params, std::vector<double> kappa, Geometry geometry,
                                   ParamKind kind)
    : params_(std::move(params)), kappa_(std::move(kappa)), geometry_(geometry), kind_(kind) {
    if (params_.size() != kappa_.size()) fail(ErrorCode::InvalidInput, "profile arrays differ in length");
    check_params(params_);
    for (double k : kappa_)
        if (!std::isfinite(k)) fail(ErrorCode::NonFiniteValue, "non-finite curvature value");
}

AffineMap2 AffineMap2::compose(const AffineMap2& o) const {
    AffineMap2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) r.linear[i][j] = linear[i][0] * o.linear[0][j] + linear[i][1] * o.linear[1][j];
        r.translation[i] = linear[i][0] * o.translation[0] + linear[i][1] * o.translation[1] + translation[i];
    }
    return r;
}

}  // namespace aesthetica
