#include "aesthetica/generators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include "aesthetica/error.hpp"

namespace aesthetica::generators {

namespace {

constexpr std::size_t kRk4Substeps = 8;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) g[i] = lo + static_cast<double>(i) * h;
    g.back() = hi;
    return g;
}

void validate_range(const FamilySpec& spec) {
    if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi) || !(spec.lo < spec.hi))
        fail(ErrorCode::InvalidSpec, "range must satisfy lo < hi with finite ends");
    if (spec.n < kMinSamples)
        fail(ErrorCode::InvalidSpec, "n = " + std::to_string(spec.n) + " is below " + std::to_string(kMinSamples));
}

void require_positive_range(const FamilySpec& spec, const char* what) {
    if (spec.lo <= 0.0) fail(ErrorCode::SingularRange, std::string(what) + " needs t > 0 on the whole range");
}

std::function<double(double)> lac_kappa(const Lac& lac) {
    if (lac.alpha == 0.0) return [lac](double s) { return std::exp(lac.xi * s + lac.eta); };
    return [lac](double s) { return std::pow(lac.xi * s + lac.eta, -1.0 / lac.alpha); };
}

void validate_lac(const Lac& lac, double lo, double hi) {
    if (!std::isfinite(lac.alpha) || !std::isfinite(lac.xi) || !std::isfinite(lac.eta))
        fail(ErrorCode::InvalidSpec, "LAC parameters must be finite");
    if (lac.alpha != 0.0 && (lac.xi * lo + lac.eta <= 0.0 || lac.xi * hi + lac.eta <= 0.0))
        fail(ErrorCode::SingularRange, "ξs + η must stay positive on the range");
}

/// Integrate the Euclidean Frenet system x' = cos θ, y' = sin θ, θ' = κ(s)
/// from s = lo with γ = 0, θ = 0, and return γ at each of the increasing
/// nodes. Every node interval gets the same number of RK4 substeps.
std::vector<PlanarPoint> frenet_points(const std::function<double(double)>& kappa, double lo,
                                       const std::vector<double>& nodes) {
    std::vector<PlanarPoint> out(nodes.size());
    double s = lo, x = 0.0, y = 0.0, th = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const double h = (nodes[j] - s) / static_cast<double>(kRk4Substeps);
        for (std::size_t k = 0; k < kRk4Substeps && h != 0.0; ++k) {
            const double k0 = kappa(s), km = kappa(s + 0.5 * h), k1 = kappa(s + h);
            const double th1 = th;
            const double th2 = th + 0.5 * h * k0;
            const double th3 = th + 0.5 * h * km;
            const double th4 = th + h * km;
            x += h / 6.0 * (std::cos(th1) + 2.0 * std::cos(th2) + 2.0 * std::cos(th3) + std::cos(th4));
            y += h / 6.0 * (std::sin(th1) + 2.0 * std::sin(th2) + 2.0 * std::sin(th3) + std::sin(th4));
            th += h / 6.0 * (k0 + 4.0 * km + k1);
            s += h;
        }
        s = nodes[j];
        out[j] = {x, y};
    }
    return out;
}

Provenance lac_meta(const Lac& lac, const char* family) {
    Provenance meta;
    meta.family = family;
    meta.params = {{"alpha", lac.alpha}, {"xi", lac.xi}, {"eta", lac.eta}};
    return meta;
}

/// (e^{cL} − e^{cL0}) / c, continuous through c = 0.
double exp_diff_over(double c, double L, double L0) {
    if (c == 0.0) return L - L0;
    return std::exp(c * L0) * std::expm1(c * (L - L0)) / c;
}

SampledCurve generate_esa(const EsaClass& esa, const FamilySpec& spec) {
    const EsaClosedForm form(esa.sign, esa.xi);
    if (!std::isfinite(esa.eta)) fail(ErrorCode::InvalidSpec, "η must be finite");
    const double shift = esa.eta / esa.xi;
    const double wlo = spec.lo + shift, whi = spec.hi + shift;
    if (wlo <= 0.0 && whi >= 0.0)
        fail(ErrorCode::SingularRange, "range contains the singular point ξu + η = 0");
    const auto u = linspace(spec.lo, spec.hi, spec.n);
    std::vector<PlanarPoint> pts(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) pts[i] = form.point(u[i] + shift, wlo);
    Provenance meta;
    meta.family = "esa";
    meta.params = {{"sign", esa.sign == EsaSign::Plus ? 1.0 : -1.0}, {"xi", esa.xi}, {"eta", esa.eta}};
    return SampledCurve(u, std::move(pts), ParamKind::Equiaffine, std::move(meta));
}

SampledCurve generate_quadratic(const Quadratic& q, const FamilySpec& spec) {
    if (!std::isfinite(q.kappa_sa)) fail(ErrorCode::InvalidSpec, "κ^SA must be finite");
    const auto u = linspace(spec.lo, spec.hi, spec.n);
    std::vector<PlanarPoint> pts(u.size());
    const double k = q.kappa_sa;
    if (k == 0.0) {
        for (std::size_t i = 0; i < u.size(); ++i) pts[i] = {u[i], 0.5 * u[i] * u[i]};
    } else {
        // Semi-axes in ratio 2:1 with ab·|k|^{3/2} = 1, so det(γ_u, γ_uu) = 1.
        const double w = std::sqrt(std::abs(k));
        const double r = std::pow(std::abs(k), -0.75);
        const double a = r * std::sqrt(2.0), b = r / std::sqrt(2.0);
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (k > 0.0)
                pts[i] = {a * std::cos(w * u[i]), b * std::sin(w * u[i])};
            else
                pts[i] = {a * std::sinh(w * u[i]), b * std::cosh(w * u[i])};
        }
    }
    Provenance meta;
    meta.family = "quadratic";
    meta.params = {{"kappa_sa", k}};
    return SampledCurve(u, std::move(pts), ParamKind::Equiaffine, std::move(meta));
}

SampledCurve graph(const FamilySpec& spec, const std::function<double(double)>& y, Provenance meta) {
    const auto t = linspace(spec.lo, spec.hi, spec.n);
    std::vector<PlanarPoint> pts(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) pts[i] = {t[i], y(t[i])};
    return SampledCurve(t, std::move(pts), ParamKind::Arbitrary, std::move(meta));
}

}  // namespace

std::string_view to_string(EsaSign sign) noexcept { return sign == EsaSign::Plus ? "plus" : "minus"; }

std::string family_name(const Family& family) {
    return std::visit(overloaded{
                          [](const LogSpiral&) { return std::string("log_spiral"); },
                          [](const Lac&) { return std::string("lac"); },
                          [](const Quadratic&) { return std::string("quadratic"); },
                          [](const EsaClass&) { return std::string("esa"); },
                          [](const PowerGraph&) { return std::string("power_graph"); },
                          [](const LogGraph&) { return std::string("log_graph"); },
                          [](const XLogXGraph&) { return std::string("xlogx_graph"); },
                      },
                      family);
}

RegimeInfo esa_regime(EsaSign sign, double xi) {
    if (!std::isfinite(xi) || xi == 0.0) fail(ErrorCode::InvalidSpec, "ξ must be finite and nonzero");
    const double inv2 = 1.0 / (xi * xi);
    if (sign == EsaSign::Minus) return {EsaRegime::Power, std::sqrt(0.25 + inv2)};
    if (std::abs(xi) == 2.0) return {EsaRegime::DoubleRoot, 0.0};
    if (std::abs(xi) > 2.0) return {EsaRegime::Power, std::sqrt(0.25 - inv2)};
    return {EsaRegime::Oscillatory, std::sqrt(inv2 - 0.25)};
}

EsaClosedForm::EsaClosedForm(EsaSign sign, double xi)
    : info_(esa_regime(sign, xi)), kappa_scale_((sign == EsaSign::Plus ? 1.0 : -1.0) / (xi * xi)) {}

EsaClosedForm::Basis EsaClosedForm::basis_positive(double v) const {
    const double L = std::log(v);
    const double w = info_.omega;
    switch (info_.regime) {
        case EsaRegime::Power: {
            const double c = 1.0 / std::sqrt(2.0 * w);
            const double fp = std::pow(v, 0.5 + w), gp = std::pow(v, 0.5 - w);
            return {c * fp, -c * gp, c * (0.5 + w) * fp / v, -c * (0.5 - w) * gp / v};
        }
        case EsaRegime::DoubleRoot: {
            const double r = std::sqrt(v);
            return {r, r * L, 0.5 / r, (0.5 * L + 1.0) / r};
        }
        case EsaRegime::Oscillatory: {
            const double amp = std::sqrt(v / w);
            const double c = std::cos(w * L), s = std::sin(w * L);
            return {amp * c, amp * s, amp / v * (0.5 * c - w * s), amp / v * (0.5 * s + w * c)};
        }
    }
    return {};
}

PlanarPoint EsaClosedForm::integral_positive(double v, double v0) const {
    const double L = std::log(v), L0 = std::log(v0);
    const double w = info_.omega;
    switch (info_.regime) {
        case EsaRegime::Power: {
            const double c = 1.0 / std::sqrt(2.0 * w);
            return {c * exp_diff_over(1.5 + w, L, L0), -c * exp_diff_over(1.5 - w, L, L0)};
        }
        case EsaRegime::DoubleRoot: {
            const double p = std::pow(v, 1.5), p0 = std::pow(v0, 1.5);
            return {2.0 / 3.0 * (p - p0), 2.0 / 3.0 * (p * (L - 2.0 / 3.0) - p0 * (L0 - 2.0 / 3.0))};
        }
        case EsaRegime::Oscillatory: {
            const std::complex<double> e(1.5, w);
            const std::complex<double> z = (std::exp(e * L) - std::exp(e * L0)) / (e * std::sqrt(w));
            return {z.real(), z.imag()};
        }
    }
    return {};
}

EsaClosedForm::Basis EsaClosedForm::basis(double u) const {
    if (u == 0.0) fail(ErrorCode::DomainContainsSingularity, "u = 0 is singular for the Euler equation");
    if (u > 0.0) return basis_positive(u);
    const Basis b = basis_positive(-u);
    return {b.f, -b.g, -b.f_u, b.g_u};
}

PlanarPoint EsaClosedForm::point(double u, double u0) const {
    if (u == 0.0 || u0 == 0.0 || (u > 0.0) != (u0 > 0.0))
        fail(ErrorCode::DomainContainsSingularity, "u and u0 must lie on the same side of 0");
    if (u > 0.0) return integral_positive(u, u0);
    const PlanarPoint p = integral_positive(-u, -u0);
    return {-p.x, p.y};
}

SampledCurve generate(const FamilySpec& spec) {
    validate_range(spec);
    return std::visit(
        overloaded{
            [&](const LogSpiral& sp) {
                if (sp.a == 0.0 && sp.b == 0.0) fail(ErrorCode::InvalidSpec, "log spiral needs (a, b) ≠ (0, 0)");
                const auto w = linspace(spec.lo, spec.hi, spec.n);
                std::vector<PlanarPoint> pts(w.size());
                for (std::size_t i = 0; i < w.size(); ++i) {
                    const double r = std::exp(sp.a * w[i]);
                    pts[i] = {r * std::cos(sp.b * w[i]), r * std::sin(sp.b * w[i])};
                }
                Provenance meta;
                meta.family = "log_spiral";
                meta.params = {{"a", sp.a}, {"b", sp.b}};
                return SampledCurve(w, std::move(pts), ParamKind::Arbitrary, std::move(meta));
            },
            [&](const Lac& lac) {
                validate_lac(lac, spec.lo, spec.hi);
                const auto s = linspace(spec.lo, spec.hi, spec.n);
                auto pts = frenet_points(lac_kappa(lac), spec.lo, s);
                return SampledCurve(s, std::move(pts), ParamKind::ArcLength, lac_meta(lac, "lac"));
            },
            [&](const Quadratic& q) { return generate_quadratic(q, spec); },
            [&](const EsaClass& e) { return generate_esa(e, spec); },
            [&](const PowerGraph& p) {
                require_positive_range(spec, "power graph");
                Provenance meta;
                meta.family = "power_graph";
                meta.params = {{"alpha", p.alpha}};
                return graph(spec, [a = p.alpha](double t) { return std::pow(t, a); }, std::move(meta));
            },
            [&](const LogGraph&) {
                require_positive_range(spec, "log graph");
                Provenance meta;
                meta.family = "log_graph";
                return graph(spec, [](double t) { return std::log(t); }, std::move(meta));
            },
            [&](const XLogXGraph&) {
                require_positive_range(spec, "x log x graph");
                Provenance meta;
                meta.family = "xlogx_graph";
                return graph(spec, [](double t) { return t * std::log(t); }, std::move(meta));
            },
        },
        spec.family);
}

double MsaLaw::s(double t) const {
    if (alpha == 0.0) return s_lo + t / xi;
    return ((xi * s_lo + eta) * std::exp(-alpha * t) - eta) / xi;
}

double MsaLaw::s_t(double t) const {
    if (alpha == 0.0) return 1.0 / xi;
    return -alpha * (xi * s_lo + eta) * std::exp(-alpha * t) / xi;
}

double MsaLaw::kappa(double t) const {
    const double k0 = alpha == 0.0 ? std::exp(xi * s_lo + eta) : std::pow(xi * s_lo + eta, -1.0 / alpha);
    return k0 * std::exp(t);
}

std::optional<MsaLaw> MsaLaw::from_meta(const Provenance& meta) {
    if (meta.family != "lac_msa") return std::nullopt;
    auto a = meta.param("alpha"), x = meta.param("xi"), e = meta.param("eta"), lo = meta.param("s_lo");
    if (!a || !x || !e || !lo) return std::nullopt;
    return MsaLaw{*a, *x, *e, *lo};
}

SampledCurve msa_parametrization(const FamilySpec& spec, std::size_t n) {
    const auto* lac = std::get_if<Lac>(&spec.family);
    if (lac == nullptr) fail(ErrorCode::InvalidSpec, "MSA parametrization needs a LAC spec");
    validate_range(spec);
    if (n < kMinSamples) fail(ErrorCode::InvalidSpec, "too few samples");
    validate_lac(*lac, spec.lo, spec.hi);
    if (lac->xi == 0.0) fail(ErrorCode::NonMonotoneKappa, "κ^E is constant (ξ = 0); t = log κ^E is not a parameter");

    const auto kappa = lac_kappa(*lac);
    const double t_hi = std::log(kappa(spec.hi) / kappa(spec.lo));
    if (!std::isfinite(t_hi) || t_hi == 0.0) fail(ErrorCode::NonMonotoneKappa, "κ^E does not vary over the range");
    const auto t = linspace(std::min(0.0, t_hi), std::max(0.0, t_hi), n);

    const MsaLaw law{lac->alpha, lac->xi, lac->eta, spec.lo};
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = std::clamp(law.s(t[i]), spec.lo, spec.hi);
    const bool decreasing = s.front() > s.back();
    if (decreasing) std::reverse(s.begin(), s.end());
    auto pts = frenet_points(kappa, spec.lo, s);
    if (decreasing) std::reverse(pts.begin(), pts.end());

    Provenance meta = lac_meta(*lac, "lac_msa");
    meta.params["s_lo"] = spec.lo;
    const ParamKind kind = lac->alpha == 1.0 ? ParamKind::ESAParam : ParamKind::Arbitrary;
    return SampledCurve(t, std::move(pts), kind, std::move(meta));
}

}  // namespace aesthetica::generators
