#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "aesthetica/generators.hpp"
#include "aesthetica/types.hpp"

namespace aesthetica::repformula {

/// Solutions f, g of z_uu + κ^SA(u) z = 0 on a uniform u grid, with
/// W(f, g) = f g_u − g f_u = 1.
struct BasisPair {
    std::vector<double> params;
    std::vector<double> f, g, f_u, g_u;

    std::size_t size() const noexcept { return params.size(); }
    double wronskian(std::size_t i) const { return f[i] * g_u[i] - g[i] * f_u[i]; }
    double max_wronskian_drift() const;
};

/// κ^SA given as samples; evaluated between samples by a cubic spline.
struct Tabulated {
    CurvatureProfile profile;
};

/// κ^SA(u) = ±(ξu)^{-2}.
struct EulerLaw {
    generators::EsaSign sign = generators::EsaSign::Plus;
    double xi = 1.0;
};

struct CurvatureLaw {
    std::variant<Tabulated, EulerLaw> kind;
    double u_lo = 0.0;
    double u_hi = 1.0;
};

/// Drift of |W − 1| above this raises WronskianDrift.
inline constexpr double kMaxWronskianDrift = 1e-6;

/// Tabulated laws are integrated by fixed-step RK4 from (f, f_u) = (1, 0)
/// and (g, g_u) = (0, 1) at u_lo, with at least 2000 steps over the domain.
/// Euler laws use the closed-form basis.
BasisPair solve_basis(const CurvatureLaw& law, std::size_t n);

/// γ(u) = base + (∫f du, ∫g du) from the first sample.
SampledCurve reconstruct(const BasisPair& basis, PlanarPoint base = {});

}  // namespace aesthetica::repformula
