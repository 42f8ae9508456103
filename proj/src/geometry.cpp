#include "aesthetica/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "aesthetica/error.hpp"
#include "aesthetica/kernels.hpp"

namespace aesthetica::geometry {

namespace {

using kernels::kStencilTrim;

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) g[i] = lo + static_cast<double>(i) * h;
    g.back() = hi;
    return g;
}

std::vector<PlanarPoint> zip(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<PlanarPoint> p(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) p[i] = {x[i], y[i]};
    return p;
}

template <typename T>
std::vector<T> interior(const std::vector<T>& v, std::size_t trim = kStencilTrim) {
    return std::vector<T>(v.begin() + static_cast<std::ptrdiff_t>(trim), v.end() - static_cast<std::ptrdiff_t>(trim));
}

void require_interior(std::size_t n) {
    if (n < 2 * kStencilTrim + 1)
        fail(ErrorCode::TooFewSamples, "need at least " + std::to_string(2 * kStencilTrim + 1) + " samples");
}

enum class Orientation { Positive, Negative };

/// Validate a defining integrand: nonvanishing, constant sign. Returns the
/// sign. The all-below-floor case is reported as degenerate before any sign
/// test so that roundoff on a straight segment is not read as a sign change.
Orientation classify_integrand(const std::vector<double>& v, const char* what) {
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    if (vmax < kIntegrandFloor)
        fail(ErrorCode::DegenerateIntegrand, std::string(what) + " vanishes on the whole domain");
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] * v[i] < 0.0)
            fail(ErrorCode::SignChange, std::string(what) + " changes sign near sample " + std::to_string(i));
    for (double x : v)
        if (std::abs(x) < kIntegrandFloor)
            fail(ErrorCode::DegenerateIntegrand, std::string(what) + " falls below the tolerance floor");
    return v.front() > 0.0 ? Orientation::Positive : Orientation::Negative;
}

Provenance flipped_meta(const SampledCurve& curve) {
    Provenance meta = curve.meta().value_or(Provenance{});
    meta.reversed = !meta.reversed;
    return meta;
}

std::vector<double> det_first_second(const CurveDerivatives& d) {
    std::vector<double> out(d.d1.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = cross(d.d1[i], d.d2[i]);
    return out;
}

std::vector<double> speed_of(const CurveDerivatives& d) {
    std::vector<double> out(d.d1.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::hypot(d.d1[i].x, d.d1[i].y);
    return out;
}

/// κ^E at every sample (full length), plus the speed.
struct KappaSeries {
    std::vector<double> params;
    std::vector<double> kappa;
    std::vector<double> speed;
    double step = 0.0;
};

KappaSeries kappa_series(const SampledCurve& curve) {
    const auto d = differentiate(curve);
    auto speed = speed_of(d);
    for (double s : speed)
        if (s < kIntegrandFloor) fail(ErrorCode::DegenerateSpeed, "|γ_t| vanishes");
    std::vector<double> kappa(speed.size());
    for (std::size_t i = 0; i < kappa.size(); ++i) kappa[i] = cross(d.d1[i], d.d2[i]) / (speed[i] * speed[i] * speed[i]);
    return {d.params, std::move(kappa), std::move(speed), d.step};
}

/// Arc-length derivative of a series defined on the curve's grid.
std::vector<double> d_ds(const std::vector<double>& f, const std::vector<double>& speed, double step) {
    auto ft = kernels::first_derivative(f, step);
    for (std::size_t i = 0; i < ft.size(); ++i) ft[i] /= speed[i];
    return ft;
}

}  // namespace

SampledCurve reverse(const SampledCurve& curve) {
    const std::size_t n = curve.size();
    std::vector<double> t(n);
    std::vector<PlanarPoint> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = -curve.params()[n - 1 - i];
        p[i] = curve.points()[n - 1 - i];
    }
    return SampledCurve(std::move(t), std::move(p), curve.kind(), flipped_meta(curve));
}

SampledCurve resample_uniform(const SampledCurve& curve, std::size_t n) {
    if (n < kMinSamples)
        fail(ErrorCode::TooFewSamples, "resample_uniform: n = " + std::to_string(n) + " < " + std::to_string(kMinSamples));
    const auto& t = curve.params();
    const auto grid = uniform_grid(t.front(), t.back(), n);
    const kernels::CubicSpline sx(t, curve.xs());
    const kernels::CubicSpline sy(t, curve.ys());
    return SampledCurve(grid, zip(sx.evaluate(grid), sy.evaluate(grid)), curve.kind(), curve.meta());
}

CurveDerivatives differentiate(const SampledCurve& curve) {
    CurveDerivatives out;
    if (curve.is_uniform()) {
        out.params = curve.params();
        out.points = curve.points();
    } else {
        const auto r = resample_uniform(curve, curve.size());
        out.params = r.params();
        out.points = r.points();
    }
    const std::size_t n = out.params.size();
    out.step = (out.params.back() - out.params.front()) / static_cast<double>(n - 1);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = out.points[i].x;
        y[i] = out.points[i].y;
    }
    const auto dx = kernels::derivatives(x, out.step);
    const auto dy = kernels::derivatives(y, out.step);
    out.d1 = zip(dx.d1, dy.d1);
    out.d2 = zip(dx.d2, dy.d2);
    out.d3 = zip(dx.d3, dy.d3);
    return out;
}

std::vector<double> tangent_angle(const SampledCurve& curve) {
    const auto d = differentiate(curve);
    std::vector<double> theta(d.d1.size());
    double prev = 0.0;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        double a = std::atan2(d.d1[i].y, d.d1[i].x);
        if (i > 0) {
            while (a - prev > std::numbers::pi) a -= 2.0 * std::numbers::pi;
            while (a - prev < -std::numbers::pi) a += 2.0 * std::numbers::pi;
        }
        theta[i] = a;
        prev = a;
    }
    return theta;
}

SampledCurve reparametrize(const SampledCurve& curve, ParamKind target, const ReparamOptions& options) {
    require_interior(curve.size());
    const std::size_t n_out = options.samples == 0 ? curve.size() : options.samples;
    if (n_out < kMinSamples) fail(ErrorCode::TooFewSamples, "reparametrize: too few output samples");
    const double base = target == ParamKind::ArcLength ? 0.0 : options.base;

    if (target == ParamKind::Arbitrary || target == ParamKind::ESAParam)
        fail(ErrorCode::InvalidInput, "reparametrize: target must be ArcLength, TurningAngle or Equiaffine");

    if (curve.kind() == target && curve.is_uniform()) {
        // Already in the target parameter: only the base point moves.
        std::vector<double> p = curve.params();
        const double shift = base - p.front();
        for (double& v : p) v += shift;
        SampledCurve shifted(std::move(p), curve.points(), target, curve.meta());
        return n_out == curve.size() ? shifted : resample_uniform(shifted, n_out);
    }

    SampledCurve uniform = curve.is_uniform() ? curve : resample_uniform(curve, curve.size());
    const std::size_t n = uniform.size();
    const auto& t = uniform.params();
    const auto x = uniform.xs();
    const auto y = uniform.ys();

    const double h = (t.back() - t.front()) / static_cast<double>(n - 1);
    const auto dx = kernels::derivatives(x, h);
    const auto dy = kernels::derivatives(y, h);

    std::vector<double> integrand(n);
    const char* what = "";
    for (std::size_t i = 0; i < n; ++i) {
        const PlanarPoint d1{dx.d1[i], dy.d1[i]}, d2{dx.d2[i], dy.d2[i]};
        switch (target) {
            case ParamKind::ArcLength: integrand[i] = std::hypot(d1.x, d1.y); break;
            case ParamKind::TurningAngle: integrand[i] = cross(d1, d2) / dot(d1, d1); break;
            default: integrand[i] = cross(d1, d2); break;
        }
    }
    switch (target) {
        case ParamKind::ArcLength: what = "|γ_t|"; break;
        case ParamKind::TurningAngle: what = "κ^E |γ_t|"; break;
        default: what = "det(γ_t, γ_tt)"; break;
    }
    if (classify_integrand(integrand, what) == Orientation::Negative) {
        if (!options.allow_orientation_flip || target == ParamKind::ArcLength)
            fail(ErrorCode::SignChange, std::string(what) + " is negative; orientation flip disabled");
        return reparametrize(reverse(curve), target, options);
    }
    if (target == ParamKind::Equiaffine)
        for (double& v : integrand) v = std::cbrt(v);

    const auto p = kernels::cumulative_integral(integrand, h, base);
    const auto grid = uniform_grid(p.front(), p.back(), n_out);
    const auto t_at = kernels::interpolate(p, t, grid);
    auto xs = kernels::interpolate(t, x, t_at);
    auto ys = kernels::interpolate(t, y, t_at);
    return SampledCurve(grid, zip(xs, ys), target, curve.meta());
}

CurvatureProfile euclidean_curvature(const SampledCurve& curve) {
    require_interior(curve.size());
    const auto k = kappa_series(curve);
    return CurvatureProfile(interior(k.params), interior(k.kappa), Geometry::Euclidean, curve.kind());
}

CurvatureProfile similarity_curvature(const SampledCurve& curve) {
    require_interior(curve.size());
    const auto k = kappa_series(curve);
    const auto kappa_in = interior(k.kappa);
    double kmax = 0.0;
    for (double v : kappa_in) kmax = std::max(kmax, std::abs(v));
    for (std::size_t i = 0; i < kappa_in.size(); ++i) {
        if (std::abs(kappa_in[i]) < kIntegrandFloor || (i > 0 && kappa_in[i - 1] * kappa_in[i] < 0.0))
            fail(ErrorCode::VanishingCurvature, "κ^E reaches zero; similarity curvature is singular");
    }
    const auto ks = d_ds(k.kappa, k.speed, k.step);
    std::vector<double> sim(k.kappa.size());
    for (std::size_t i = 0; i < sim.size(); ++i) sim[i] = ks[i] / (k.kappa[i] * k.kappa[i]);
    return CurvatureProfile(interior(k.params), interior(sim), Geometry::Similarity, curve.kind());
}

CurvatureProfile equiaffine_curvature(const SampledCurve& curve, EquiaffineRoute route) {
    require_interior(curve.size());
    const auto d = differentiate(curve);
    const std::size_t n = d.params.size();
    const Orientation orient = classify_integrand(det_first_second(d), "det(γ_t, γ_tt)");

    if (route == EquiaffineRoute::Euclidean) {
        if (orient == Orientation::Negative)
            fail(ErrorCode::NegativeCurvatureOnEuclideanRoute,
                 "κ^E < 0: the Euclidean route needs positive curvature for its fractional powers");
        const auto k = kappa_series(curve);
        const auto ks = d_ds(k.kappa, k.speed, k.step);
        const auto kss = d_ds(ks, k.speed, k.step);
        std::vector<double> sa(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double kk = k.kappa[i];
            sa[i] = std::pow(kk, 4.0 / 3.0) + std::pow(kk, -5.0 / 3.0) * kss[i] / 3.0 -
                    5.0 / 9.0 * std::pow(kk, -8.0 / 3.0) * ks[i] * ks[i];
        }
        return CurvatureProfile(interior(k.params), interior(sa), Geometry::Equiaffine, curve.kind());
    }

    // Equiaffine route: resample uniformly in u, where det(γ_u, γ_uu) = 1 and
    // γ_uuu = -κ^SA γ_u, so only third derivatives of the points are needed.
    const SampledCurve u_curve = orient == Orientation::Positive && curve.kind() == ParamKind::Equiaffine &&
                                             curve.is_uniform()
                                     ? curve
                                     : reparametrize(curve, ParamKind::Equiaffine);
    const auto du = differentiate(u_curve);
    std::vector<double> sa(du.params.size());
    for (std::size_t i = 0; i < sa.size(); ++i) sa[i] = cross(du.d2[i], du.d3[i]);
    return CurvatureProfile(interior(du.params), interior(sa), Geometry::Equiaffine, ParamKind::Equiaffine);
}

}  // namespace aesthetica::geometry
