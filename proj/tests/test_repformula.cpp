#include <doctest.h>

#include <cmath>

#include "aesthetica/error.hpp"
#include "aesthetica/generators.hpp"
#include "aesthetica/geometry.hpp"
#include "aesthetica/repformula.hpp"
#include "helpers.hpp"

using namespace aesthetica;
using namespace aesthetica::repformula;
using generators::EsaSign;

namespace {

CurvatureProfile constant_profile(double lo, double hi, double k) {
    std::vector<double> u(101), v(101, k);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = lo + (hi - lo) * static_cast<double>(i) / 100.0;
    return CurvatureProfile(u, v, Geometry::Equiaffine, ParamKind::Equiaffine);
}

CurvatureProfile euler_profile(EsaSign sign, double xi, double lo, double hi, std::size_t n) {
    const generators::EsaClosedForm form(sign, xi);
    std::vector<double> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        v[i] = form.kappa_sa(u[i]);
    }
    return CurvatureProfile(u, v, Geometry::Equiaffine, ParamKind::Equiaffine);
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::EmptyInput;
}

}  // namespace

TEST_CASE("zero curvature gives the basis (1, u) and a parabola") {
    const auto b = solve_basis({Tabulated{constant_profile(-1, 2, 0.0)}, -1.0, 2.0}, 301);
    for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(b.f[i] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(b.g[i] == doctest::Approx(b.params[i] + 1.0).epsilon(1e-12));
    }
    CHECK(b.max_wronskian_drift() < 1e-12);
    const auto c = reconstruct(b);
    CHECK(c.kind() == ParamKind::Equiaffine);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double v = c.params()[i] + 1.0;
        CHECK(c.points()[i].x == doctest::Approx(v).epsilon(1e-12));
        CHECK(c.points()[i].y == doctest::Approx(v * v / 2).epsilon(1e-12));
    }
}

TEST_CASE("unit curvature gives (cos, sin) and the circle (sin u, 1 − cos u)") {
    const auto b = solve_basis({Tabulated{constant_profile(0, 6, 1.0)}, 0.0, 6.0}, 601);
    CHECK(b.max_wronskian_drift() < 1e-8);
    for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(std::abs(b.f[i] - std::cos(b.params[i])) < 1e-10);
        CHECK(std::abs(b.g[i] - std::sin(b.params[i])) < 1e-10);
    }
    const auto c = reconstruct(b, {2.0, -1.0});
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double u = c.params()[i];
        CHECK(std::abs(c.points()[i].x - (2.0 + std::sin(u))) < 1e-9);
        CHECK(std::abs(c.points()[i].y - (-1.0 + 1.0 - std::cos(u))) < 1e-9);
    }
}

TEST_CASE("Euler law basis regimes and normalization") {
    CHECK(generators::esa_regime(EsaSign::Plus, 1.0).regime == generators::EsaRegime::Oscillatory);
    CHECK(generators::esa_regime(EsaSign::Plus, 1.0).omega == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
    for (auto [sign, xi] : {std::pair{EsaSign::Plus, 1.0}, {EsaSign::Plus, 2.0}, {EsaSign::Plus, 3.0},
                            {EsaSign::Minus, 3.0}, {EsaSign::Minus, 0.5}}) {
        const auto b = solve_basis({EulerLaw{sign, xi}, 0.5, 4.0}, 500);
        CHECK(b.max_wronskian_drift() < 1e-12);
    }
    CHECK(code_of([] { solve_basis({EulerLaw{EsaSign::Plus, 1.0}, -1.0, 1.0}, 100); }) ==
          ErrorCode::DomainContainsSingularity);
}

TEST_CASE("Euler-law reconstruction matches the explicit ESA curve") {
    for (auto [sign, xi] : {std::pair{EsaSign::Plus, 3.0}, {EsaSign::Plus, 1.0}, {EsaSign::Minus, 3.0},
                            {EsaSign::Plus, 2.0}}) {
        CAPTURE(xi);
        const auto c = reconstruct(solve_basis({EulerLaw{sign, xi}, 0.5, 4.0}, 2000));
        const auto ref = generators::generate({generators::EsaClass{sign, xi}, 0.5, 4.0, 2000});
        double dev = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            dev = std::max(dev, std::hypot(c.points()[i].x - ref.points()[i].x, c.points()[i].y - ref.points()[i].y));
        }
        CHECK(dev < 1e-6);
    }
}

TEST_CASE("tabulated integration agrees with the closed-form basis") {
    for (auto [sign, xi] : {std::pair{EsaSign::Plus, 1.0}, {EsaSign::Minus, 3.0}}) {
        const double lo = 0.5, hi = 4.0;
        const auto num = solve_basis({Tabulated{euler_profile(sign, xi, lo, hi, 4001)}, lo, hi}, 1001);
        CHECK(num.max_wronskian_drift() < 1e-8);
        // Express the closed-form basis in the numeric one via its initial data.
        const generators::EsaClosedForm form(sign, xi);
        const auto b0 = form.basis(lo);
        double dev = 0.0;
        for (std::size_t i = 0; i < num.size(); ++i) {
            const auto b = form.basis(num.params[i]);
            dev = std::max(dev, std::abs(b0.f * num.f[i] + b0.f_u * num.g[i] - b.f));
            dev = std::max(dev, std::abs(b0.g * num.f[i] + b0.g_u * num.g[i] - b.g));
        }
        CHECK(dev < 1e-6);
    }
}

TEST_CASE("round trip through the measured equiaffine curvature") {
    const auto c = reconstruct(solve_basis({Tabulated{euler_profile(EsaSign::Minus, 3.0, 0.5, 4.0, 2001)}, 0.5, 4.0}, 800));
    const auto k = geometry::equiaffine_curvature(c, geometry::EquiaffineRoute::Equiaffine);
    const generators::EsaClosedForm form(EsaSign::Minus, 3.0);
    const std::size_t m = k.size(), skip = m / 10;
    for (std::size_t i = skip; i + skip < m; ++i)
        CHECK(k.kappa()[i] == doctest::Approx(form.kappa_sa(k.params()[i])).epsilon(1e-3));
    const auto d = geometry::differentiate(c);
    for (std::size_t i = 4; i + 4 < d.d1.size(); ++i) CHECK(std::abs(cross(d.d1[i], d.d2[i]) - 1.0) < 1e-4);
}

TEST_CASE("stiff tabulated laws trip the Wronskian guard") {
    CHECK(code_of([] { solve_basis({Tabulated{constant_profile(0, 1, 1e6)}, 0.0, 1.0}, 100); }) ==
          ErrorCode::WronskianDrift);
    CHECK(code_of([] { solve_basis({Tabulated{constant_profile(0, 1, 1.0)}, 0.0, 2.0}, 100); }) ==
          ErrorCode::InvalidInput);
}
