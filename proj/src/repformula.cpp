#include "aesthetica/repformula.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "aesthetica/error.hpp"
#include "aesthetica/kernels.hpp"

namespace aesthetica::repformula {

namespace {

constexpr std::size_t kMinSteps = 2000;

std::vector<double> uniform(double lo, double hi, std::size_t n) {
    std::vector<double> u(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) u[i] = lo + h * static_cast<double>(i);
    u.back() = hi;
    return u;
}

// State (f, f_u, g, g_u) of both solutions, advanced together.
using State = std::array<double, 4>;

State rhs(const State& s, double k) { return {s[1], -k * s[0], s[3], -k * s[2]}; }

State axpy(const State& s, double h, const State& d) {
    return {s[0] + h * d[0], s[1] + h * d[1], s[2] + h * d[2], s[3] + h * d[3]};
}

BasisPair solve_tabulated(const Tabulated& tab, double lo, double hi, std::size_t n) {
    const auto& prof = tab.profile;
    if (prof.geometry() != Geometry::Equiaffine)
        fail(ErrorCode::InvalidInput, "solve_basis: tabulated law must be an equiaffine curvature profile");
    const double slack = 1e-9 * (hi - lo);
    if (prof.params().front() > lo + slack || prof.params().back() < hi - slack)
        fail(ErrorCode::InvalidInput, "solve_basis: tabulated profile does not cover the domain");
    const kernels::CubicSpline kappa(prof.params(), prof.kappa());

    BasisPair out;
    out.params = uniform(lo, hi, n);
    out.f.resize(n), out.g.resize(n), out.f_u.resize(n), out.g_u.resize(n);
    const std::size_t sub = std::max<std::size_t>(1, (kMinSteps + n - 2) / (n - 1));
    State s{1.0, 0.0, 0.0, 1.0};
    for (std::size_t i = 0;; ++i) {
        out.f[i] = s[0], out.f_u[i] = s[1], out.g[i] = s[2], out.g_u[i] = s[3];
        if (i + 1 == n) break;
        const double a = out.params[i];
        const double h = (out.params[i + 1] - a) / static_cast<double>(sub);
        for (std::size_t j = 0; j < sub; ++j) {
            const double u = a + h * static_cast<double>(j);
            const double k0 = kappa(u), km = kappa(u + h / 2), k1 = kappa(u + h);
            const State d1 = rhs(s, k0);
            const State d2 = rhs(axpy(s, h / 2, d1), km);
            const State d3 = rhs(axpy(s, h / 2, d2), km);
            const State d4 = rhs(axpy(s, h, d3), k1);
            for (int c = 0; c < 4; ++c) s[c] += h / 6 * (d1[c] + 2 * d2[c] + 2 * d3[c] + d4[c]);
        }
    }
    return out;
}

BasisPair solve_euler(const EulerLaw& law, double lo, double hi, std::size_t n) {
    if (lo <= 0.0 && hi >= 0.0)
        fail(ErrorCode::DomainContainsSingularity, "solve_basis: Euler law domain contains u = 0");
    const generators::EsaClosedForm form(law.sign, law.xi);
    BasisPair out;
    out.params = uniform(lo, hi, n);
    out.f.resize(n), out.g.resize(n), out.f_u.resize(n), out.g_u.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto b = form.basis(out.params[i]);
        out.f[i] = b.f, out.g[i] = b.g, out.f_u[i] = b.f_u, out.g_u[i] = b.g_u;
    }
    return out;
}

}  // namespace

double BasisPair::max_wronskian_drift() const {
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i) m = std::max(m, std::abs(wronskian(i) - 1.0));
    return m;
}

BasisPair solve_basis(const CurvatureLaw& law, std::size_t n) {
    if (n < kMinSamples) fail(ErrorCode::TooFewSamples, "solve_basis: need at least 9 samples");
    if (!(std::isfinite(law.u_lo) && std::isfinite(law.u_hi) && law.u_lo < law.u_hi))
        fail(ErrorCode::InvalidInput, "solve_basis: domain must satisfy u_lo < u_hi");
    BasisPair out = std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Tabulated>)
                return solve_tabulated(k, law.u_lo, law.u_hi, n);
            else
                return solve_euler(k, law.u_lo, law.u_hi, n);
        },
        law.kind);
    const double drift = out.max_wronskian_drift();
    if (!(drift <= kMaxWronskianDrift))
        fail(ErrorCode::WronskianDrift, "solve_basis: Wronskian drift " + std::to_string(drift));
    return out;
}

SampledCurve reconstruct(const BasisPair& basis, PlanarPoint base) {
    const std::size_t n = basis.size();
    if (n < kMinSamples) fail(ErrorCode::TooFewSamples, "reconstruct: need at least 9 samples");
    const double h = (basis.params.back() - basis.params.front()) / static_cast<double>(n - 1);
    const auto x = kernels::cumulative_integral(basis.f, h, base.x);
    const auto y = kernels::cumulative_integral(basis.g, h, base.y);
    std::vector<PlanarPoint> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = {x[i], y[i]};
    Provenance meta;
    meta.family = "reconstructed";
    return SampledCurve(basis.params, std::move(pts), ParamKind::Equiaffine, std::move(meta));
}

}  // namespace aesthetica::repformula
