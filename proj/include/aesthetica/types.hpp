#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aesthetica {

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;

    friend PlanarPoint operator+(PlanarPoint a, PlanarPoint b) { return {a.x + b.x, a.y + b.y}; }
    friend PlanarPoint operator-(PlanarPoint a, PlanarPoint b) { return {a.x - b.x, a.y - b.y}; }
    friend PlanarPoint operator*(double s, PlanarPoint a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

inline double cross(PlanarPoint a, PlanarPoint b) { return a.x * b.y - a.y * b.x; }
inline double dot(PlanarPoint a, PlanarPoint b) { return a.x * b.x + a.y * b.y; }

/// Which parameter a curve's samples are taken in.
enum class ParamKind { Arbitrary, ArcLength, TurningAngle, Equiaffine, ESAParam };

enum class Geometry { Euclidean, Similarity, Equiaffine };

std::string_view to_string(ParamKind kind) noexcept;
std::optional<ParamKind> parse_param_kind(std::string_view text) noexcept;
std::string_view to_string(Geometry geometry) noexcept;

/// Where a curve came from. Generators fill `family` and `params` with the
/// closed-form law; ingested data carries family "ingested". `reversed`
/// records an orientation flip applied during reparametrization.
struct Provenance {
    std::string family = "ingested";
    std::map<std::string, double> params;
    bool reversed = false;

    std::optional<double> param(const std::string& key) const {
        auto it = params.find(key);
        if (it == params.end()) return std::nullopt;
        return it->second;
    }
    bool is_ingested() const { return family == "ingested"; }
};

/// Minimum sample count; third derivatives need a 9-point support.
inline constexpr std::size_t kMinSamples = 9;

/// Immutable sampled planar curve. Construction validates: equal lengths,
/// at least kMinSamples samples, strictly increasing finite params, finite
/// points. Throws aesthetica::Error otherwise.
class SampledCurve {
public:
    SampledCurve(std::vector<double> params, std::vector<PlanarPoint> points, ParamKind kind,
                 std::optional<Provenance> meta = std::nullopt);

    const std::vector<double>& params() const noexcept { return params_; }
    const std::vector<PlanarPoint>& points() const noexcept { return points_; }
    ParamKind kind() const noexcept { return kind_; }
    const std::optional<Provenance>& meta() const noexcept { return meta_; }
    std::size_t size() const noexcept { return params_.size(); }

    std::vector<double> xs() const;
    std::vector<double> ys() const;

    /// True when params are uniformly spaced within a relative tolerance of
    /// 1e-9 of the mean step.
    bool is_uniform() const noexcept;
    double mean_step() const noexcept;

    /// Diagonal of the axis-aligned bounding box of the points.
    double bbox_diagonal() const noexcept;

    SampledCurve with_meta(Provenance meta) const;

private:
    std::vector<double> params_;
    std::vector<PlanarPoint> points_;
    ParamKind kind_;
    std::optional<Provenance> meta_;
};

/// Per-sample curvature in one geometry, paired with the parameter values at
/// which it was estimated.
class CurvatureProfile {
public:
    CurvatureProfile(std::vector<double> params, std::vector<double> kappa, Geometry geometry,
                     ParamKind kind);

    const std::vector<double>& params() const noexcept { return params_; }
    const std::vector<double>& kappa() const noexcept { return kappa_; }
    Geometry geometry() const noexcept { return geometry_; }
    ParamKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return params_.size(); }

private:
    std::vector<double> params_;
    std::vector<double> kappa_;
    Geometry geometry_;
    ParamKind kind_;
};

/// Planar affine map p -> linear * p + translation.
struct AffineMap2 {
    std::array<std::array<double, 2>, 2> linear{{{1.0, 0.0}, {0.0, 1.0}}};
    std::array<double, 2> translation{0.0, 0.0};

    static AffineMap2 identity() { return {}; }

    PlanarPoint apply(PlanarPoint p) const {
        return {linear[0][0] * p.x + linear[0][1] * p.y + translation[0],
                linear[1][0] * p.x + linear[1][1] * p.y + translation[1]};
    }
    double det() const { return linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0]; }

    /// (this ∘ other)(p) = this(other(p)).
    AffineMap2 compose(const AffineMap2& other) const;
};

}  // namespace aesthetica
