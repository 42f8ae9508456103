#include "aesthetica/affinity.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "aesthetica/error.hpp"
#include "aesthetica/generators.hpp"
#include "aesthetica/geometry.hpp"
#include "aesthetica/kernels.hpp"

namespace aesthetica::affinity {

namespace {

constexpr double kMaxCondition = 1e12;

double step_of(const SampledCurve& curve, const char* who) {
    if (!curve.is_uniform()) fail(ErrorCode::InvalidInput, std::string(who) + ": curve must be on a uniform grid");
    return curve.mean_step();
}

// Number of samples spanned by eps.
long shift_index(double eps, double h, const char* who) {
    const double r = eps / h;
    const double m = std::round(r);
    if (!std::isfinite(r) || std::abs(r - m) > 1e-6 * std::max(1.0, std::abs(m)))
        fail(ErrorCode::InvalidInput, std::string(who) + ": ε = " + std::to_string(eps) +
                                          " is not a multiple of the parameter step");
    return static_cast<long>(m);
}

// Index pairs (i, i + m) inside [lo, hi).
struct Overlap {
    std::size_t first = 0, count = 0, offset_src = 0, offset_dst = 0;
};

Overlap overlap(std::size_t lo, std::size_t hi, long m, const char* who) {
    const std::size_t am = static_cast<std::size_t>(std::abs(m));
    if (hi < lo + am + kMinSamples)
        fail(ErrorCode::InsufficientOverlap, std::string(who) + ": shift leaves fewer than 9 overlapping samples");
    Overlap o;
    o.count = hi - lo - am;
    o.offset_src = m >= 0 ? lo : lo + am;
    o.offset_dst = m >= 0 ? lo + am : lo;
    return o;
}

double lac_kappa(double alpha, double xi, double eta, double s) {
    return alpha == 0.0 ? std::exp(xi * s + eta) : std::pow(xi * s + eta, -1.0 / alpha);
}

double frobenius(const AffineMap2& m) {
    double s = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) s += m.linear[i][j] * m.linear[i][j];
        s += m.translation[i] * m.translation[i];
    }
    return std::sqrt(s);
}

AffineMap2 difference(const AffineMap2& a, const AffineMap2& b) {
    AffineMap2 d;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) d.linear[i][j] = a.linear[i][j] - b.linear[i][j];
        d.translation[i] = a.translation[i] - b.translation[i];
    }
    return d;
}

struct LineFit {
    double slope = 0.0, intercept = 0.0, r2 = 1.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
    mx /= n, my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LineFit f;
    f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    f.intercept = my - f.slope * mx;
    f.r2 = syy > 0.0 && sxx > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

}  // namespace

std::string_view to_string(Group group) noexcept {
    return group == Group::FullAffine ? "affine" : "equiaffine";
}

std::optional<Group> parse_group(std::string_view text) noexcept {
    if (text == "affine" || text == "full") return Group::FullAffine;
    if (text == "equiaffine" || text == "sa") return Group::Equiaffine;
    return std::nullopt;
}

std::string_view to_string(Verdict verdict) noexcept {
    switch (verdict) {
        case Verdict::ESA: return "ESA";
        case Verdict::NotESA: return "NotESA";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

EsaThresholds EsaThresholds::for_curve(const SampledCurve& curve) {
    const bool ingested = !curve.meta() || curve.meta()->is_ingested();
    return ingested ? EsaThresholds{1e-3, 1e-2} : EsaThresholds{1e-6, 1e-3};
}

ShiftFit fit_affine_shift(const SampledCurve& curve, double eps, Group group) {
    const double h = step_of(curve, "fit_affine_shift");
    const long m = shift_index(eps, h, "fit_affine_shift");
    const auto ov = overlap(0, curve.size(), m, "fit_affine_shift");
    if (m == 0) return {};

    const auto& pts = curve.points();
    const std::size_t n = ov.count;
    Eigen::MatrixX2d src(n, 2), dst(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = pts[ov.offset_src + i];
        const auto& q = pts[ov.offset_dst + i];
        src(i, 0) = p.x, src(i, 1) = p.y;
        dst(i, 0) = q.x, dst(i, 1) = q.y;
    }
    // Centering absorbs the translation, leaving 2×2 normal equations.
    const Eigen::RowVector2d ms = src.colwise().mean(), md = dst.colwise().mean();
    const Eigen::MatrixX2d cs = src.rowwise() - ms, cd = dst.rowwise() - md;
    const Eigen::Matrix2d normal = cs.transpose() * cs;
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(normal);
    const double lmin = eig.eigenvalues()(0), lmax = eig.eigenvalues()(1);
    if (!(lmin > 0.0) || lmax / lmin > kMaxCondition)
        fail(ErrorCode::SingularNormalEquations, "fit_affine_shift: overlap points are (nearly) collinear");
    Eigen::Matrix2d lin = normal.ldlt().solve(cs.transpose() * cd).transpose();

    ShiftFit fit;
    fit.raw_det = lin.determinant();
    if (group == Group::Equiaffine) {
        if (fit.raw_det == 0.0) fail(ErrorCode::SingularNormalEquations, "fit_affine_shift: singular linear part");
        lin /= std::sqrt(std::abs(fit.raw_det));
    }
    const Eigen::Vector2d tr = md.transpose() - lin * ms.transpose();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) fit.map.linear[i][j] = lin(i, j);
        fit.map.translation[i] = tr(i);
    }
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = fit.map.apply(pts[ov.offset_src + i]);
        const auto& q = pts[ov.offset_dst + i];
        ss += (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
    }
    const double diag = curve.bbox_diagonal();
    fit.residual = std::sqrt(ss / static_cast<double>(n)) / (diag > 0.0 ? diag : 1.0);
    return fit;
}

double ESAReport::max_residual() const {
    double m = 0.0;
    for (double r : residuals) m = std::max(m, r);
    return m;
}

ESAReport esa_check(const SampledCurve& curve, std::vector<double> eps_grid, Group group,
                    std::optional<EsaThresholds> thresholds) {
    const double h = step_of(curve, "esa_check");
    if (std::none_of(eps_grid.begin(), eps_grid.end(), [](double e) { return e == 0.0; })) eps_grid.push_back(0.0);
    std::sort(eps_grid.begin(), eps_grid.end());
    const std::size_t g = eps_grid.size();

    ESAReport rep;
    rep.eps_grid = eps_grid;
    rep.maps.resize(g);
    rep.residuals.resize(g);
    rep.dets.resize(g);
    std::vector<std::exception_ptr> errors(g);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < g; ++i) {
        try {
            const auto fit = fit_affine_shift(curve, eps_grid[i], group);
            rep.maps[i] = fit.map;
            rep.residuals[i] = fit.residual;
            rep.dets[i] = fit.raw_det;
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    // Generator from the smallest ε with −ε also in the grid, else one-sided.
    auto index_of = [&](double e) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < g; ++i)
            if (std::abs(eps_grid[i] - e) <= 1e-9 * h) return i;
        return std::nullopt;
    };
    std::optional<std::size_t> plus, minus;
    for (std::size_t i = 0; i < g && !minus; ++i) {
        if (eps_grid[i] <= 0.0) continue;
        if (auto j = index_of(-eps_grid[i])) plus = i, minus = j;
    }
    if (plus) {
        const auto& a = rep.maps[*plus].linear;
        const auto& b = rep.maps[*minus].linear;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) rep.generator[r][c] = (a[r][c] - b[r][c]) / (2.0 * eps_grid[*plus]);
    } else {
        // One-sided: quadratic through F(0) = I and the two smallest shifts of
        // one sign, or a forward difference if only one is available.
        std::vector<std::size_t> side;
        for (std::size_t i = 0; i < g; ++i)
            if (eps_grid[i] != 0.0) side.push_back(i);
        std::sort(side.begin(), side.end(),
                  [&](std::size_t x, std::size_t y) { return std::abs(eps_grid[x]) < std::abs(eps_grid[y]); });
        if (side.size() >= 2 && (eps_grid[side[0]] > 0.0) != (eps_grid[side[1]] > 0.0)) side.resize(1);
        const auto id = AffineMap2::identity().linear;
        for (int r = 0; r < 2 && !side.empty(); ++r) {
            for (int c = 0; c < 2; ++c) {
                const double e1 = eps_grid[side[0]], d1 = rep.maps[side[0]].linear[r][c] - id[r][c];
                if (side.size() == 1) {
                    rep.generator[r][c] = d1 / e1;
                    continue;
                }
                const double e2 = eps_grid[side[1]], d2 = rep.maps[side[1]].linear[r][c] - id[r][c];
                rep.generator[r][c] = (e2 * e2 * d1 - e1 * e1 * d2) / (e1 * e2 * (e2 - e1));
            }
        }
    }

    std::vector<double> logdet(g);
    for (std::size_t i = 0; i < g; ++i) logdet[i] = std::log(std::abs(rep.dets[i]));
    const auto lf = fit_line(eps_grid, logdet);
    rep.det_rate = lf.slope;
    rep.det_rate_r2 = lf.r2;

    bool any = false;
    double comp = 0.0;
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
            if (eps_grid[i] == 0.0 || eps_grid[j] == 0.0) continue;
            const auto k = index_of(eps_grid[i] + eps_grid[j]);
            if (!k) continue;
            const auto composed = rep.maps[j].compose(rep.maps[i]);
            const double norm = frobenius(rep.maps[*k]);
            comp = std::max(comp, frobenius(difference(rep.maps[*k], composed)) / norm);
            any = true;
        }
    }
    rep.composition_error = any ? comp : std::nan("");

    const auto th = thresholds.value_or(EsaThresholds::for_curve(curve));
    const double worst = rep.max_residual();
    rep.verdict = worst < th.pass ? Verdict::ESA : worst >= th.fail ? Verdict::NotESA : Verdict::Inconclusive;
    return rep;
}

SampledCurve esa_parameter_transform(const SampledCurve& curve, double k, double l, std::size_t n) {
    if (curve.kind() != ParamKind::Equiaffine)
        fail(ErrorCode::InvalidInput, "esa_parameter_transform: curve must be in equiaffine arc length");
    if (!(std::isfinite(k) && k != 0.0 && std::isfinite(l)))
        fail(ErrorCode::InvalidInput, "esa_parameter_transform: k must be nonzero and finite");
    const auto& u = curve.params();
    if (u.front() <= 0.0) fail(ErrorCode::NonpositiveU, "esa_parameter_transform: u must be positive");
    const std::size_t m = curve.size();
    if (n == 0) n = m;
    if (n < kMinSamples) fail(ErrorCode::TooFewSamples, "esa_parameter_transform: too few output samples");

    std::vector<double> t(m), x(m), y(m);
    for (std::size_t i = 0; i < m; ++i) {
        // Keep t increasing when k < 0.
        const std::size_t j = k > 0.0 ? i : m - 1 - i;
        t[i] = (std::log(u[j]) - l) / k;
        x[i] = curve.points()[j].x;
        y[i] = curve.points()[j].y;
    }
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = t.front() + (t.back() - t.front()) * static_cast<double>(i) / static_cast<double>(n - 1);
    grid.back() = t.back();
    const auto xs = kernels::interpolate(t, x, grid);
    const auto ys = kernels::interpolate(t, y, grid);
    std::vector<PlanarPoint> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = {xs[i], ys[i]};
    return SampledCurve(std::move(grid), std::move(pts), ParamKind::ESAParam, curve.meta());
}

SampledCurve esa_parameter_for_grid(const SampledCurve& curve, const std::vector<double>& eps_grid) {
    if (curve.kind() != ParamKind::Equiaffine)
        fail(ErrorCode::InvalidInput, "esa_parameter_for_grid: curve must be in equiaffine arc length");
    double d = 0.0;
    for (double e : eps_grid) {
        if (!std::isfinite(e)) fail(ErrorCode::InvalidInput, "esa_parameter_for_grid: non-finite shift");
        if (e != 0.0 && (d == 0.0 || std::abs(e) < d)) d = std::abs(e);
    }
    if (d == 0.0) d = 1.0;
    for (double e : eps_grid)
        if (std::abs(e / d - std::round(e / d)) > 1e-6)
            fail(ErrorCode::InvalidInput, "esa_parameter_for_grid: shifts are not multiples of the smallest one");

    // Shift u so that the curvature law reads ±(ξv)^{-2}.
    SampledCurve shifted = curve;
    if (curve.meta()) {
        const auto xi = curve.meta()->param("xi"), eta = curve.meta()->param("eta");
        if (xi && eta && *xi != 0.0 && *eta != 0.0) {
            auto v = curve.params();
            for (double& x : v) x += *eta / *xi;
            shifted = SampledCurve(std::move(v), curve.points(), curve.kind(), curve.meta());
        }
    }
    const auto& v = shifted.params();
    if (v.front() <= 0.0) fail(ErrorCode::NonpositiveU, "esa_parameter_for_grid: shifted u must be positive");
    const double span = std::log(v.back() / v.front());
    const double h0 = span / static_cast<double>(v.size() - 1);
    const double m = std::max(1.0, std::round(d / h0));
    const double h = d / m;
    const double steps = std::max(std::round(span / h), static_cast<double>(kMinSamples - 1));
    const double k = span / (steps * h);
    return esa_parameter_transform(shifted, k, std::log(v.front()), static_cast<std::size_t>(steps) + 1);
}

MSAReport msa_check(const SampledCurve& curve, double alpha, const std::vector<double>& eps_grid) {
    MSAReport rep;
    rep.alpha = alpha;
    const bool msa_meta = curve.meta() && curve.meta()->family == "lac_msa";
    if (msa_meta) {
        // The law is evaluated at t+ε directly, so ε need not match the grid.
        const auto law = generators::MsaLaw::from_meta(*curve.meta());
        if (!law) fail(ErrorCode::MissingSpeedData, "msa_check: lac_msa metadata lacks alpha/xi/eta/s_lo");
        rep.closed_form = true;
        const auto& t = curve.params();
        auto kappa = [&](double v) { return lac_kappa(law->alpha, law->xi, law->eta, law->s(v)); };
        for (double eps : eps_grid) {
            if (!std::isfinite(eps)) fail(ErrorCode::InvalidInput, "msa_check: non-finite shift");
            const double ek = std::exp(eps), es = std::exp(-alpha * eps);
            std::size_t used = 0;
            for (double v : t) {
                const double w = v + eps;
                if (w < t.front() || w > t.back()) continue;
                const double k0 = kappa(v), k1 = kappa(w);
                if (k0 == 0.0 || !std::isfinite(k0) || !std::isfinite(k1))
                    fail(ErrorCode::VanishingCurvature, "msa_check: κ^E must be nonzero");
                rep.kappa_ratio_error = std::max(rep.kappa_ratio_error, std::abs(k1 / k0 / ek - 1.0));
                rep.speed_ratio_error =
                    std::max(rep.speed_ratio_error, std::abs(law->s_t(w) / law->s_t(v) / es - 1.0));
                ++used;
            }
            if (used < kMinSamples) fail(ErrorCode::InsufficientOverlap, "msa_check: shift leaves too few samples");
        }
        rep.verdict = rep.kappa_ratio_error < 1e-6 && rep.speed_ratio_error < 1e-6;
        return rep;
    }

    const double h = step_of(curve, "msa_check");
    const auto prof = geometry::euclidean_curvature(curve);
    const auto d = geometry::differentiate(curve);
    const std::size_t lo = kernels::kStencilTrim;
    const auto& kappa = prof.kappa();
    std::vector<double> speed(kappa.size());
    for (std::size_t i = 0; i < speed.size(); ++i) speed[i] = std::hypot(d.d1[lo + i].x, d.d1[lo + i].y);
    if (std::any_of(speed.begin(), speed.end(), [](double s) { return !(s > 0.0); }))
        fail(ErrorCode::MissingSpeedData, "msa_check: speed vanishes; s_t is not recoverable");
    if (std::any_of(kappa.begin(), kappa.end(), [](double k) { return k == 0.0 || !std::isfinite(k); }))
        fail(ErrorCode::VanishingCurvature, "msa_check: κ^E must be nonzero");

    for (double eps : eps_grid) {
        const long m = shift_index(eps, h, "msa_check");
        const auto ov = overlap(0, kappa.size(), m, "msa_check");
        const double ek = std::exp(eps), es = std::exp(-alpha * eps);
        for (std::size_t i = 0; i < ov.count; ++i) {
            const std::size_t a = ov.offset_src + i, b = ov.offset_dst + i;
            rep.kappa_ratio_error = std::max(rep.kappa_ratio_error, std::abs(kappa[b] / kappa[a] / ek - 1.0));
            rep.speed_ratio_error = std::max(rep.speed_ratio_error, std::abs(speed[b] / speed[a] / es - 1.0));
        }
    }
    rep.verdict = rep.kappa_ratio_error < 1e-3 && rep.speed_ratio_error < 1e-3;
    return rep;
}

LCGData lcg(const SampledCurve& input) {
    const SampledCurve curve = input.is_uniform() ? input : geometry::resample_uniform(input, input.size());
    const auto prof = geometry::euclidean_curvature(curve);
    const auto d = geometry::differentiate(curve);
    const double h = curve.mean_step();
    const auto& k = prof.kappa();
    const auto kt = kernels::first_derivative(k, h);

    const std::size_t trim = kernels::kStencilTrim;
    if (k.size() < 2 * trim + kMinSamples) fail(ErrorCode::TooFewSamples, "lcg: too few samples");
    LCGData out;
    std::vector<double> xs, ys;
    double prev_ks = 0.0;
    for (std::size_t i = trim; i + trim < k.size(); ++i) {
        if (!(k[i] * k[trim] > 0.0)) fail(ErrorCode::DegenerateLCG, "lcg: κ^E vanishes or changes sign");
        const std::size_t j = i + kernels::kStencilTrim;
        const double ks = kt[i] / std::hypot(d.d1[j].x, d.d1[j].y);
        if (!(std::abs(ks) / (k[i] * k[i]) > kLcgFloor) || prev_ks * ks < 0.0)
            fail(ErrorCode::DegenerateLCG, "lcg: κ^E_s vanishes; the LCG is undefined");
        prev_ks = ks;
        xs.push_back(-std::log(std::abs(k[i])));
        ys.push_back(std::log(std::abs(k[i] / ks)));
        out.points.push_back({xs.back(), ys.back()});
    }
    const double span = *std::max_element(xs.begin(), xs.end()) - *std::min_element(xs.begin(), xs.end());
    if (!(span > 0.0)) fail(ErrorCode::DegenerateLCG, "lcg: κ^E is constant");
    const auto f = fit_line(xs, ys);
    out.slope = f.slope;
    out.intercept = f.intercept;
    double ss_res = 0.0, ss_tot = 0.0, my = 0.0;
    for (double y : ys) my += y;
    my /= static_cast<double>(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (f.slope * xs[i] + f.intercept);
        ss_res += r * r;
        ss_tot += (ys[i] - my) * (ys[i] - my);
    }
    const double m = static_cast<double>(ys.size());
    out.rms_residual = std::sqrt(ss_res / m);
    // A flat LCG (slope 0) has no y variance to explain; below the floor R² is
    // noise over noise, so it is reported as 1.
    out.r_squared = ss_tot < m * kLcgFlatSpread * kLcgFlatSpread ? 1.0 : f.r2;
    return out;
}

ThetaReport theta_affinity_check(const SampledCurve& curve, double alpha, const std::vector<double>& eps_grid,
                                 RateConvention convention) {
    const double h = step_of(curve, "theta_affinity_check");
    const auto theta = geometry::tangent_angle(curve);
    const std::size_t trim = kernels::kStencilTrim;
    ThetaReport rep;
    for (double eps : eps_grid) {
        const long m = shift_index(eps, h, "theta_affinity_check");
        const auto ov = overlap(trim, theta.size() - trim, m, "theta_affinity_check");
        std::vector<double> a(ov.count), b(ov.count);
        for (std::size_t i = 0; i < ov.count; ++i) a[i] = theta[ov.offset_src + i], b[i] = theta[ov.offset_dst + i];
        const auto f = fit_line(a, b);
        const double rate = std::exp((convention == RateConvention::Derived ? 1.0 - alpha : alpha - 1.0) * eps);
        rep.eps_grid.push_back(eps);
        rep.slopes.push_back(m == 0 ? 1.0 : f.slope);
        rep.intercepts.push_back(m == 0 ? 0.0 : f.intercept);
        rep.expected.push_back(rate);
        rep.rate_error = std::max(rep.rate_error, std::abs(rep.slopes.back() / rate - 1.0));
    }
    rep.verdict = rep.rate_error < kThetaRateTolerance;
    return rep;
}

}  // namespace aesthetica::affinity
