#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "aesthetica/types.hpp"

namespace aesthetica::affinity {

enum class Group { FullAffine, Equiaffine };

std::string_view to_string(Group group) noexcept;
std::optional<Group> parse_group(std::string_view text) noexcept;

struct ShiftFit {
    AffineMap2 map;
    /// RMS of ‖F(γ(t)) − γ(t+ε)‖ divided by the bounding-box diagonal.
    double residual = 0.0;
    /// det of the fitted linear part before any equiaffine projection.
    double raw_det = 1.0;
};

/// Least-squares affine map carrying γ(t) onto γ(t+ε) over the overlap.
/// ε must be an integer multiple of the (uniform) parameter step; it may be
/// negative. Equiaffine divides the linear part by √|det| and refits the
/// translation.
ShiftFit fit_affine_shift(const SampledCurve& curve, double eps, Group group = Group::FullAffine);

enum class Verdict { ESA, NotESA, Inconclusive };

std::string_view to_string(Verdict verdict) noexcept;

/// Residuals below `pass` give ESA, at or above `fail` NotESA, otherwise
/// Inconclusive. Defaults depend on whether the data is ingested.
struct EsaThresholds {
    double pass = 1e-6;
    double fail = 1e-3;

    static EsaThresholds for_curve(const SampledCurve& curve);
};

struct ESAReport {
    std::vector<double> eps_grid;
    std::vector<AffineMap2> maps;
    std::vector<double> residuals;
    std::vector<double> dets;
    /// Central-difference estimate of dF/dε at 0 (linear part).
    std::array<std::array<double, 2>, 2> generator{};
    /// Least-squares slope of log|det F(ε)| against ε, and its R².
    double det_rate = 0.0;
    double det_rate_r2 = 1.0;
    /// Max of ‖F(ε₁+ε₂) − F(ε₂)∘F(ε₁)‖_F / ‖F(ε₁+ε₂)‖_F over grid pairs; NaN
    /// when the grid has no such pair.
    double composition_error = 0.0;
    Verdict verdict = Verdict::Inconclusive;

    double max_residual() const;
    double generator_trace() const { return generator[0][0] + generator[1][1]; }
};

/// Fits F(ε) for every ε of the grid (0 is inserted when missing, and the
/// grid is sorted). Independent fits run in parallel.
ESAReport esa_check(const SampledCurve& curve, std::vector<double> eps_grid, Group group = Group::FullAffine,
                    std::optional<EsaThresholds> thresholds = std::nullopt);

/// Reparametrize an equiaffine-parametrized curve by t = (log u − l)/k and
/// resample on a uniform t grid (n = 0 keeps the sample count).
SampledCurve esa_parameter_transform(const SampledCurve& curve, double k, double l, std::size_t n = 0);

/// Parameter in which a generated ESA-class curve (family "esa", η ≥ 0 or
/// with ξu+η > 0) is self-affine, with the scale k chosen so that every ε of
/// the grid is a whole number of samples. The sample spacing stays close to
/// the input's. Throws InvalidInput when the grid has no common step.
SampledCurve esa_parameter_for_grid(const SampledCurve& curve, const std::vector<double>& eps_grid);

struct MSAReport {
    double alpha = 0.0;
    double kappa_ratio_error = 0.0;
    double speed_ratio_error = 0.0;
    bool verdict = false;
    /// True when κ^E and s_t came from the closed-form LAC law in the metadata.
    bool closed_form = false;
};

/// Max relative mismatch of κ^E(t+ε)/κ^E(t) against e^ε and of
/// s_t(t+ε)/s_t(t) against e^{−αε}. Curves from msa_parametrization are
/// checked against the LAC law κ^E(s) evaluated at s(t); other curves are
/// measured by finite differences on their (uniform) parameter grid.
MSAReport msa_check(const SampledCurve& curve, double alpha, const std::vector<double>& eps_grid);

struct LCGData {
    /// (−log κ^E, log|κ^E/κ^E_s|)
    std::vector<PlanarPoint> points;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double rms_residual = 0.0;
};

/// |κ^E_s|/κ² below this counts as a vanishing κ^E_s.
inline constexpr double kLcgFloor = 1e-6;
/// RMS spread of the LCG ordinate below which the graph counts as flat.
inline constexpr double kLcgFlatSpread = 1e-4;

LCGData lcg(const SampledCurve& curve);

/// Expected θ-affinity rate: Derived is e^{(1−α)ε}, which follows from the
/// MSA law; AsPrinted is e^{(α−1)ε}.
enum class RateConvention { Derived, AsPrinted };

struct ThetaReport {
    std::vector<double> eps_grid;
    std::vector<double> slopes;
    std::vector<double> intercepts;
    std::vector<double> expected;
    double rate_error = 0.0;
    bool verdict = false;
};

inline constexpr double kThetaRateTolerance = 1e-3;

/// Regress θ(t+ε) on θ(t) for each ε and compare the slope with the rate.
ThetaReport theta_affinity_check(const SampledCurve& curve, double alpha, const std::vector<double>& eps_grid,
                                 RateConvention convention = RateConvention::Derived);

}  // namespace aesthetica::affinity
