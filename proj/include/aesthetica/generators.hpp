#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "aesthetica/types.hpp"

namespace aesthetica::generators {

enum class EsaSign { Plus, Minus };

std::string_view to_string(EsaSign sign) noexcept;

/// Logarithmic spiral γ(w) = e^{(a+ib)w}.
struct LogSpiral {
    double a = 1.0;
    double b = 1.0;
};

/// Log-aesthetic curve with κ^E(s) = (ξs+η)^{-1/α}, or e^{ξs+η} when α = 0.
struct Lac {
    double alpha = 1.0;
    double xi = 1.0;
    double eta = 1.0;
};

/// Conic with constant equiaffine curvature, in equiaffine arc length.
struct Quadratic {
    double kappa_sa = 0.0;
};

/// Curve with κ^SA(u) = ±(ξu+η)^{-2}, in equiaffine arc length.
struct EsaClass {
    EsaSign sign = EsaSign::Plus;
    double xi = 1.0;
    double eta = 0.0;
};

/// Graph (t, t^α), t > 0.
struct PowerGraph {
    double alpha = 2.0;
};

/// Graph (t, log t), t > 0.
struct LogGraph {};

/// Graph (t, t log t), t > 0.
struct XLogXGraph {};

using Family = std::variant<LogSpiral, Lac, Quadratic, EsaClass, PowerGraph, LogGraph, XLogXGraph>;

struct FamilySpec {
    Family family;
    double lo = 0.0;
    double hi = 1.0;
    std::size_t n = 1000;
};

/// Provenance family name used in curve metadata and the CLI.
std::string family_name(const Family& family);

SampledCurve generate(const FamilySpec& spec);

/// The LAC resampled uniformly in t = log(κ^E(s)/κ^E(lo)), for which
/// κ^E(t+ε) = e^ε κ^E(t) and s_t(t+ε) = e^{-αε} s_t(t). The map s(t) is
/// recorded in the metadata (keys alpha, xi, eta, s_lo).
SampledCurve msa_parametrization(const FamilySpec& spec, std::size_t n);

/// Closed-form s(t) and s_t(t) for a curve produced by msa_parametrization,
/// read back from its metadata.
struct MsaLaw {
    double alpha = 1.0;
    double xi = 1.0;
    double eta = 1.0;
    double s_lo = 0.0;

    double s(double t) const;
    double s_t(double t) const;
    /// κ^E at the point with MSA parameter t.
    double kappa(double t) const;

    static std::optional<MsaLaw> from_meta(const Provenance& meta);
};

/// Which solution regime the Euler equation z'' ± (ξu)^{-2} z = 0 falls in.
enum class EsaRegime {
    /// Two real exponents 1/2 ± ω.
    Power,
    /// Double exponent 1/2.
    DoubleRoot,
    /// Exponents 1/2 ± iω.
    Oscillatory,
};

struct RegimeInfo {
    EsaRegime regime = EsaRegime::Power;
    double omega = 0.0;
};

/// Exact dispatch: Plus with |ξ| = 2 is the double root, Plus with |ξ| < 2
/// oscillatory, everything else (all of Minus) real. Throws InvalidSpec for
/// ξ = 0 or non-finite ξ.
RegimeInfo esa_regime(EsaSign sign, double xi);

/// Closed-form Wronskian-normalized basis and curve for the η = 0 Euler
/// equation. Defined for u ≠ 0; negative u uses the mirrored basis
/// f(u) = F(-u), g(u) = -G(-u).
class EsaClosedForm {
public:
    EsaClosedForm(EsaSign sign, double xi);

    struct Basis {
        double f, g, f_u, g_u;
    };

    const RegimeInfo& info() const noexcept { return info_; }
    double kappa_sa(double u) const noexcept { return kappa_scale_ / (u * u); }

    Basis basis(double u) const;
    /// (∫f, ∫g) from u0 to u. u and u0 must have the same sign.
    PlanarPoint point(double u, double u0) const;

private:
    Basis basis_positive(double v) const;
    PlanarPoint integral_positive(double v, double v0) const;

    RegimeInfo info_;
    double kappa_scale_;
};

}  // namespace aesthetica::generators
