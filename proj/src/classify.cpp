#include "aesthetica/classify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "aesthetica/error.hpp"

namespace aesthetica::classify {

namespace {

double sq(double v) { return v * v; }

// ---- model fit -----------------------------------------------------------

// Sample points scaled to unit bounding-box diagonal, with the parameter
// mapped onto [0, 1].
struct Prepared {
    std::vector<double> u;
    Eigen::MatrixX2d pts;
    /// Coordinates in the data frame, scaled but not shifted.
    Eigen::MatrixX2d raw;
    /// Square-root weights per coordinate; empty means unweighted.
    Eigen::MatrixX2d w;
    double umin = 0.0, range = 1.0;
};

Prepared prepare(const SampledCurve& curve, std::size_t stride = 1) {
    Prepared p;
    const auto& t = curve.params();
    p.umin = t.front();
    p.range = t.back() - t.front();
    const double diag = curve.bbox_diagonal();
    const double scale = diag > 0.0 ? 1.0 / diag : 1.0;
    const std::size_t n = (curve.size() + stride - 1) / stride;
    p.u.resize(n);
    p.pts.resize(static_cast<Eigen::Index>(n), 2);
    p.raw.resize(static_cast<Eigen::Index>(n), 2);
    const auto& c = curve.points()[0];
    for (std::size_t i = 0, j = 0; j < curve.size(); ++i, j += stride) {
        const auto r = static_cast<Eigen::Index>(i);
        p.u[i] = (t[j] - p.umin) / p.range;
        p.pts(r, 0) = (curve.points()[j].x - c.x) * scale;
        p.pts(r, 1) = (curve.points()[j].y - c.y) * scale;
        p.raw(r, 0) = curve.points()[j].x * scale;
        p.raw(r, 1) = curve.points()[j].y * scale;
    }
    return p;
}

// Removes from y its projection onto span(cols); modified Gram–Schmidt
// applied twice. Columns that vanish after orthogonalization are dropped.
void project_out(std::array<std::vector<double>, 3>& cols, std::vector<double>& y) {
    const std::size_t n = y.size();
    auto dot = [n](const std::vector<double>& x, const std::vector<double>& z) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += x[i] * z[i];
        return s;
    };
    std::array<bool, 3> keep{};
    for (std::size_t k = 0; k < 3; ++k) {
        auto& c = cols[k];
        const double before = std::sqrt(dot(c, c));
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                if (!keep[j]) continue;
                const double r = dot(cols[j], c);
                for (std::size_t i = 0; i < n; ++i) c[i] -= r * cols[j][i];
            }
        }
        const double after = std::sqrt(dot(c, c));
        keep[k] = after > 1e-10 * before && after > 0.0;
        if (keep[k])
            for (double& v : c) v /= after;
    }
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < 3; ++k) {
            if (!keep[k]) continue;
            const double r = dot(cols[k], y);
            for (std::size_t i = 0; i < n; ++i) y[i] -= r * cols[k][i];
        }
    }
}

// Least-squares residuals of both coordinates against span{1, a, b}, each
// coordinate weighted separately. Empty when the basis is not finite.
std::optional<Eigen::MatrixX2d> residuals(const Prepared& p, const std::vector<double>& a,
                                          const std::vector<double>& b) {
    const std::size_t n = p.u.size();
    for (std::size_t k = 0; k < n; ++k)
        if (!std::isfinite(a[k]) || !std::isfinite(b[k])) return std::nullopt;
    Eigen::MatrixX2d res(static_cast<Eigen::Index>(n), 2);
    const bool weighted = p.w.size() != 0;
    std::array<std::vector<double>, 3> cols;
    std::vector<double> y(n);
    for (int c = 0; c < 2; ++c) {
        if (c == 0 || weighted) {
            for (auto& col : cols) col.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                const double w = weighted ? p.w(static_cast<Eigen::Index>(i), c) : 1.0;
                cols[0][i] = w, cols[1][i] = w * a[i], cols[2][i] = w * b[i];
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            const auto r = static_cast<Eigen::Index>(i);
            y[i] = (weighted ? p.w(r, c) : 1.0) * p.pts(r, c);
        }
        auto basis = cols;
        project_out(basis, y);
        for (std::size_t i = 0; i < n; ++i) res(static_cast<Eigen::Index>(i), c) = y[i];
    }
    return res;
}

double rss(const Prepared& p, const std::vector<double>& a, const std::vector<double>& b) {
    const auto r = residuals(p, a, b);
    return r ? r->squaredNorm() : std::numeric_limits<double>::infinity();
}

// Per-coordinate variance model σ² = c0 + c1·v² fitted to squared residuals,
// v being the coordinate in the data frame; returns square-root weights.
Eigen::MatrixX2d variance_weights(const Prepared& p, const Eigen::MatrixX2d& res) {
    const auto n = res.rows();
    Eigen::MatrixX2d w(n, 2);
    for (int c = 0; c < 2; ++c) {
        Eigen::MatrixX2d x(n, 2);
        x.col(0).setOnes();
        x.col(1) = p.raw.col(c).array().square().matrix();
        const Eigen::VectorXd r2 = res.col(c).array().square().matrix();
        Eigen::Vector2d coef = x.colPivHouseholderQr().solve(r2);
        const double mean = r2.mean();
        coef(0) = std::max(coef(0), 1e-3 * mean);
        coef(1) = std::max(coef(1), 0.0);
        for (Eigen::Index i = 0; i < n; ++i) w(i, c) = 1.0 / std::sqrt(coef(0) + coef(1) * x(i, 1));
    }
    // Keep the weighted scale comparable to the unweighted one.
    return w / w.mean();
}

// ∫ e^{cL} dL from 0, stable at c = 0.
double expint(double c, double l) { return c == 0.0 ? l : std::expm1(c * l) / c; }

// Coordinate basis of the ESA class in L = log w: the real span of
// (e^{(3/2±μ)L} − 1)/(3/2±μ) with μ² = q, continuous across q = 0.
void esa_features(double q, const std::vector<double>& w, std::vector<double>& a, std::vector<double>& b) {
    const std::size_t n = w.size();
    a.resize(n), b.resize(n);
    if (std::abs(q) <= 1e-10) {
        for (std::size_t i = 0; i < n; ++i) {
            const double l = std::log(w[i]);
            a[i] = expint(1.5, l);
            b[i] = (1.5 * l * std::exp(1.5 * l) - std::expm1(1.5 * l)) / 2.25;
        }
    } else if (q > 0.0) {
        const double mu = std::sqrt(q);
        for (std::size_t i = 0; i < n; ++i) {
            const double l = std::log(w[i]);
            const double p = expint(1.5 + mu, l), m = expint(1.5 - mu, l);
            a[i] = 0.5 * (p + m);
            b[i] = (p - m) / (2.0 * mu);
        }
    } else {
        const double nu = std::sqrt(-q);
        const std::complex<double> c(1.5, nu);
        for (std::size_t i = 0; i < n; ++i) {
            const double l = std::log(w[i]);
            const std::complex<double> e = std::polar(std::exp(1.5 * l), nu * l) - 1.0;
            const auto v = e / c;
            a[i] = v.real();
            b[i] = v.imag() / nu;
        }
    }
}

// Conic basis in u: sin(√K u)/√K and (1 − cos(√K u))/K, continuous at K = 0.
void conic_features(double k, const std::vector<double>& u, std::vector<double>& a, std::vector<double>& b) {
    const std::size_t n = u.size();
    a.resize(n), b.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = u[i];
        if (std::abs(k) * x * x < 1e-6) {
            // Series to third order in K u².
            const double z = k * x * x;
            a[i] = x * (1.0 - z / 6.0 + z * z / 120.0);
            b[i] = 0.5 * x * x * (1.0 - z / 12.0 + z * z / 360.0);
        } else if (k > 0.0) {
            const double s = std::sqrt(k);
            a[i] = std::sin(s * x) / s;
            b[i] = (1.0 - std::cos(s * x)) / k;
        } else {
            const double s = std::sqrt(-k);
            a[i] = std::sinh(s * x) / s;
            b[i] = (1.0 - std::cosh(s * x)) / k;
        }
    }
}

struct EsaParams {
    double q = 0.25, z = 0.0;
    int branch = 1;
};

std::vector<double> esa_w(const Prepared& p, double z, int branch) {
    const double c = std::exp(z);
    std::vector<double> w(p.u.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = branch > 0 ? p.u[i] + c : 1.0 + c - p.u[i];
    return w;
}

double esa_rss(const Prepared& p, const EsaParams& e) {
    if (!std::isfinite(e.q) || !std::isfinite(e.z) || std::abs(e.z) > 30.0)
        return std::numeric_limits<double>::infinity();
    std::vector<double> a, b;
    esa_features(e.q, esa_w(p, e.z, e.branch), a, b);
    return rss(p, a, b);
}

double conic_rss(const Prepared& p, double k) {
    if (!std::isfinite(k)) return std::numeric_limits<double>::infinity();
    std::vector<double> a, b;
    conic_features(k, p.u, a, b);
    return rss(p, a, b);
}

using Objective = std::function<double(const std::vector<double>&)>;

// Nelder–Mead with the standard coefficients; stops when either the function
// spread or the simplex diameter is below tolerance.
std::vector<double> nelder_mead(const Objective& f, std::vector<double> x0, const std::vector<double>& step,
                                int max_iter = 400, double ftol = 1e-13, double xtol = 1e-9) {
    const std::size_t d = x0.size();
    std::vector<std::vector<double>> s(d + 1, x0);
    for (std::size_t i = 0; i < d; ++i) s[i + 1][i] += step[i];
    std::vector<double> fv(d + 1);
    for (std::size_t i = 0; i <= d; ++i) fv[i] = f(s[i]);
    std::vector<std::size_t> order(d + 1);
    for (int it = 0; it < max_iter; ++it) {
        for (std::size_t i = 0; i <= d; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order.front(), worst = order.back(), second = order[d - 1];
        if (std::abs(fv[worst] - fv[best]) <= ftol * (std::abs(fv[best]) + 1e-300)) break;
        double diam = 0.0;
        for (std::size_t i = 0; i <= d; ++i)
            for (std::size_t j = 0; j < d; ++j) diam = std::max(diam, std::abs(s[i][j] - s[best][j]));
        if (diam < xtol) break;
        std::vector<double> c(d, 0.0);
        for (std::size_t i = 0; i <= d; ++i)
            if (i != worst)
                for (std::size_t j = 0; j < d; ++j) c[j] += s[i][j] / static_cast<double>(d);
        auto along = [&](double t) {
            std::vector<double> x(d);
            for (std::size_t j = 0; j < d; ++j) x[j] = c[j] + t * (s[worst][j] - c[j]);
            return x;
        };
        const auto xr = along(-1.0);
        const double fr = f(xr);
        if (fr < fv[best]) {
            const auto xe = along(-2.0);
            const double fe = f(xe);
            if (fe < fr) s[worst] = xe, fv[worst] = fe;
            else s[worst] = xr, fv[worst] = fr;
        } else if (fr < fv[second]) {
            s[worst] = xr, fv[worst] = fr;
        } else {
            const auto xc = fr < fv[worst] ? along(-0.5) : along(0.5);
            const double fc = f(xc);
            if (fc < std::min(fr, fv[worst])) {
                s[worst] = xc, fv[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= d; ++i) {
                    if (i == best) continue;
                    for (std::size_t j = 0; j < d; ++j) s[i][j] = s[best][j] + 0.5 * (s[i][j] - s[best][j]);
                    fv[i] = f(s[i]);
                }
            }
        }
    }
    const auto it = std::min_element(fv.begin(), fv.end());
    return s[static_cast<std::size_t>(it - fv.begin())];
}

ClassLabel model_fit(const SampledCurve& curve, const ClassifyOptions& options) {
    Prepared full = prepare(curve);
    const std::size_t stride = std::max<std::size_t>(1, curve.size() / 256);
    const Prepared coarse = prepare(curve, stride);
    const double nobs = 2.0 * static_cast<double>(full.u.size());

    // Conic: coarse scan in asinh(K), then local refinement.
    double best_k = 0.0;
    {
        double best = std::numeric_limits<double>::infinity();
        const double vmax = std::asinh(1e4);
        for (int i = 0; i <= 200; ++i) {
            const double k = std::sinh(-vmax + 2.0 * vmax * i / 200.0);
            const double r = conic_rss(coarse, k);
            if (r < best) best = r, best_k = k;
        }
    }
    auto refine_conic = [&](double k0, bool polish_only) {
        std::vector<double> x{std::asinh(k0)};
        if (!polish_only)
            x = nelder_mead([&](const std::vector<double>& v) { return conic_rss(coarse, std::sinh(v[0])); }, x,
                            {0.05});
        x = nelder_mead([&](const std::vector<double>& v) { return conic_rss(full, std::sinh(v[0])); }, x, {0.002},
                        200);
        return std::sinh(x[0]);
    };

    // ESA class: coarse scan over (q, z) on both branches, then refinement of
    // the best few starts.
    struct Cand {
        double r;
        EsaParams e;
    };
    std::vector<Cand> cands;
    for (int branch : {1, -1})
        for (int i = 0; i <= 84; ++i)
            for (int j = 0; j <= 24; ++j) {
                const double sgrid = -4.2 + 0.1 * i;
                cands.push_back({0.0, {sgrid * std::abs(sgrid), -6.0 + 0.5 * j, branch}});
            }
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < cands.size(); ++i) cands[i].r = esa_rss(coarse, cands[i].e);
    // Stable: ties keep grid order, so the chosen starts do not depend on threads.
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.r < y.r; });
    cands.resize(std::min<std::size_t>(3, cands.size()));
    auto refine_esa = [&](const EsaParams& start, bool polish_only) {
        std::vector<double> x{start.q, start.z};
        if (!polish_only)
            x = nelder_mead([&](const std::vector<double>& v) { return esa_rss(coarse, {v[0], v[1], start.branch}); },
                            x, {0.05, 0.25});
        x = nelder_mead([&](const std::vector<double>& v) { return esa_rss(full, {v[0], v[1], start.branch}); }, x,
                        {0.002, 0.01}, 200);
        return EsaParams{x[0], x[1], start.branch};
    };
    EsaParams best_e;
    {
        std::vector<EsaParams> refined(cands.size());
        std::vector<double> r(cands.size());
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < cands.size(); ++i) {
            refined[i] = refine_esa(cands[i].e, false);
            r[i] = esa_rss(full, refined[i]);
        }
        best_e = refined[static_cast<std::size_t>(std::min_element(r.begin(), r.end()) - r.begin())];
    }
    best_k = refine_conic(best_k, false);

    // Reweight by a variance model estimated from the better of the two fits,
    // then refine both again under the weights.
    {
        std::vector<double> a, b;
        if (esa_rss(full, best_e) <= conic_rss(full, best_k))
            esa_features(best_e.q, esa_w(full, best_e.z, best_e.branch), a, b);
        else
            conic_features(best_k, full.u, a, b);
        if (const auto res = residuals(full, a, b)) full.w = variance_weights(full, *res);
    }
    best_k = refine_conic(best_k, true);
    best_e = refine_esa(best_e, true);

    const double r_par = conic_rss(full, 0.0), r_con = conic_rss(full, best_k), r_esa = esa_rss(full, best_e);
    // Roundoff floor: RMS 1e-12 of the unit-diagonal coordinates.
    auto bic = [&](double r, double params) {
        return nobs * std::log(std::max(r, nobs * 1e-24) / nobs) + params * std::log(nobs);
    };
    const double b_par = bic(r_par, 6.0), b_con = bic(r_con, 7.0), b_esa = bic(r_esa, 8.0);

    ESACoefficients coef;
    std::vector<double> fa, fb;
    if (b_par <= b_con && b_par <= b_esa) {
        coef.sign = CoefSign::Zero;
        conic_features(0.0, full.u, fa, fb);
    } else if (b_con <= b_esa) {
        coef.sign = CoefSign::Zero;
        coef.eta = best_k / sq(full.range);
        conic_features(best_k, full.u, fa, fb);
    } else {
        const double gap = 0.25 - best_e.q;
        if (gap == 0.0) {
            coef.sign = CoefSign::Zero;
        } else {
            coef.sign = gap > 0.0 ? CoefSign::Plus : CoefSign::Minus;
            const double xi = 1.0 / std::sqrt(std::abs(gap));
            const double c = std::exp(best_e.z);
            if (best_e.branch > 0) {
                coef.xi = xi;
                coef.eta = xi * (full.range * c - full.umin);
            } else {
                coef.xi = -xi;
                coef.eta = xi * (full.umin + full.range * (1.0 + c));
            }
        }
        esa_features(best_e.q, esa_w(full, best_e.z, best_e.branch), fa, fb);
    }
    // Report the unweighted point residual of the chosen model.
    full.w.resize(0, 2);
    coef.fit_rmse = std::sqrt(rss(full, fa, fb) / (0.5 * nobs));
    ClassLabel label = dispatch(coef, options);
    label.method = FitMethod::Model;
    label.point_rmse = coef.fit_rmse;
    return label;
}

}  // namespace

std::string_view to_string(CoefSign sign) noexcept {
    switch (sign) {
        case CoefSign::Plus: return "plus";
        case CoefSign::Minus: return "minus";
        case CoefSign::Zero: return "zero";
    }
    return "zero";
}

std::string_view to_string(ClassKind kind) noexcept {
    switch (kind) {
        case ClassKind::PowerGraph: return "power_graph";
        case ClassKind::LogGraph: return "log_graph";
        case ClassKind::XLogXGraph: return "xlogx_graph";
        case ClassKind::LogSpiral: return "log_spiral";
        case ClassKind::Quadratic: return "quadratic";
    }
    return "quadratic";
}

std::string_view to_string(Conic conic) noexcept {
    switch (conic) {
        case Conic::Parabola: return "parabola";
        case Conic::Ellipse: return "ellipse";
        case Conic::Hyperbola: return "hyperbola";
    }
    return "parabola";
}

std::string_view to_string(FitMethod method) noexcept {
    return method == FitMethod::Pointwise ? "pointwise" : "model";
}

std::string ClassLabel::describe() const {
    std::ostringstream os;
    os << to_string(kind);
    if (kind == ClassKind::PowerGraph) os << "(alpha=" << alpha << ")";
    if (kind == ClassKind::Quadratic) os << "(" << to_string(conic) << ")";
    return os.str();
}

ESACoefficients fit_esa_curvature(const CurvatureProfile& profile) {
    const auto& u = profile.params();
    const auto& k = profile.kappa();
    const std::size_t n = k.size();
    if (n < kMinSamples) fail(ErrorCode::TooFewSamples, "fit_esa_curvature: need at least 9 samples");

    double mean = 0.0, maxabs = 0.0;
    for (double v : k) mean += v, maxabs = std::max(maxabs, std::abs(v));
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : k) var += sq(v - mean);
    const double sd = std::sqrt(var / static_cast<double>(n));
    ESACoefficients c;
    if (maxabs < kZeroCurvature || sd < kConstantSpread * std::abs(mean)) {
        c.sign = CoefSign::Zero;
        c.eta = mean;
        return c;
    }

    std::size_t pos = 0, neg = 0;
    for (double v : k) pos += v > 0.0, neg += v < 0.0;
    const bool plus = pos >= neg;
    const std::size_t minority = plus ? n - pos : n - neg;
    if (static_cast<double>(minority) > kMinorityFraction * static_cast<double>(n))
        fail(ErrorCode::MixedSign, "fit_esa_curvature: κ^SA changes sign");

    // |κ|^{-1/2} = ξu + η on the dominant-sign samples.
    std::vector<double> x, w, kk;
    for (std::size_t i = 0; i < n; ++i) {
        if ((k[i] > 0.0) != plus || k[i] == 0.0) continue;
        x.push_back(u[i]);
        w.push_back(1.0 / std::sqrt(std::abs(k[i])));
        kk.push_back(k[i]);
    }
    const double m = static_cast<double>(x.size());
    double mx = 0.0, mw = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], mw += w[i];
    mx /= m, mw /= m;
    double sxx = 0.0, sxw = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sxx += sq(x[i] - mx), sxw += (x[i] - mx) * (w[i] - mw);
    const double xi = sxx > 0.0 ? sxw / sxx : 0.0;
    const double eta = mw - xi * mx;

    c.sign = plus ? CoefSign::Plus : CoefSign::Minus;
    c.xi = xi;
    c.eta = eta;
    double num = 0.0, den = 0.0;
    bool crosses = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lin = xi * x[i] + eta;
        crosses |= !(lin > 0.0);
        const double fit = (plus ? 1.0 : -1.0) / sq(lin);
        num += sq(fit - kk[i]);
        den += sq(kk[i]);
    }
    c.fit_rmse = crosses ? std::numeric_limits<double>::infinity() : std::sqrt(num / den);
    if (!(c.fit_rmse <= kPoorFit))
        fail(ErrorCode::PoorFit, "fit_esa_curvature: relative RMSE " + std::to_string(c.fit_rmse));
    return c;
}

ClassLabel dispatch(const ESACoefficients& coef, const ClassifyOptions& options) {
    ClassLabel l;
    l.coefficients = coef;
    if (coef.sign == CoefSign::Zero) {
        l.kind = ClassKind::Quadratic;
        l.conic = std::abs(coef.eta) < kZeroCurvature ? Conic::Parabola
                  : coef.eta > 0.0                    ? Conic::Ellipse
                                                      : Conic::Hyperbola;
        return l;
    }
    const double a = std::abs(coef.xi);
    const double tau = options.tau_rel * a;
    if (coef.sign == CoefSign::Plus && a < 2.0 - tau) {
        l.kind = ClassKind::LogSpiral;
        l.omega = std::sqrt(1.0 / (a * a) - 0.25);
        return l;
    }
    if (coef.sign == CoefSign::Plus && std::abs(a - 2.0) <= tau) {
        l.kind = ClassKind::XLogXGraph;
        l.omega = 0.0;
        return l;
    }
    const double omega = std::sqrt(std::abs(1.0 / (a * a) + (coef.sign == CoefSign::Minus ? 0.25 : -0.25)));
    l.omega = omega;
    if (std::abs(omega - 1.5) <= options.tau_omega) {
        l.kind = ClassKind::LogGraph;
        return l;
    }
    l.kind = ClassKind::PowerGraph;
    l.alpha = omega_alpha(Direction::OmegaToAlpha, omega);
    return l;
}

ClassLabel classify(const SampledCurve& curve, const ClassifyOptions& options) {
    std::optional<ClassLabel> pointwise;
    std::string why;
    if (options.mode != Mode::Model) {
        try {
            const auto prof = geometry::equiaffine_curvature(curve, options.route);
            pointwise = dispatch(fit_esa_curvature(prof), options);
        } catch (const Error& e) {
            why = e.what();
        }
        if (options.mode == Mode::Pointwise) {
            if (!pointwise) fail(ErrorCode::Unclassifiable, "classify: " + why);
            return *pointwise;
        }
        if (pointwise && pointwise->coefficients.fit_rmse <= kAutoPointwise) return *pointwise;
    }
    try {
        const SampledCurve u_curve = curve.kind() == ParamKind::Equiaffine && curve.is_uniform()
                                         ? curve
                                         : geometry::reparametrize(curve, ParamKind::Equiaffine);
        return model_fit(u_curve, options);
    } catch (const Error& e) {
        if (pointwise) return *pointwise;
        fail(ErrorCode::Unclassifiable, std::string("classify: ") + (why.empty() ? e.what() : why));
    }
}

double omega_alpha(Direction direction, double value) {
    if (!std::isfinite(value)) fail(ErrorCode::InvalidInput, "omega_alpha: value must be finite");
    if (direction == Direction::AlphaToOmega) {
        if (value == -1.0) fail(ErrorCode::PoleInput, "omega_alpha: α = −1 is a pole");
        return 1.5 * (1.0 - value) / (1.0 + value);
    }
    if (value == -1.5) fail(ErrorCode::PoleInput, "omega_alpha: ω = −3/2 is a pole");
    return (3.0 - 2.0 * value) / (3.0 + 2.0 * value);
}

}  // namespace aesthetica::classify
