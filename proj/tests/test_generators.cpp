#include <doctest.h>

#include <cmath>
#include <numbers>

#include "aesthetica/error.hpp"
#include "aesthetica/generators.hpp"
#include "aesthetica/geometry.hpp"
#include "aesthetica/kernels.hpp"
#include "helpers.hpp"

using namespace aesthetica;
using namespace aesthetica::generators;
using geometry::EquiaffineRoute;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::EmptyInput;
}

}  // namespace

TEST_CASE("log spiral starts at (1, 0)") {
    const auto c = generate({LogSpiral{1, 1}, 0.0, 2.0, 100});
    CHECK(c.points().front().x == 1.0);
    CHECK(c.points().front().y == 0.0);
    CHECK(c.kind() == ParamKind::Arbitrary);
    CHECK(code_of([] { generate({LogSpiral{0, 0}, 0.0, 1.0, 100}); }) == ErrorCode::InvalidSpec);
}

TEST_CASE("LAC reproduces its Euclidean curvature law") {
    const auto c = generate({Lac{1.0, 1.0, std::sqrt(2.0)}, 0.0, 3.0, 2000});
    CHECK(c.kind() == ParamKind::ArcLength);
    const auto k = geometry::euclidean_curvature(c);
    for (std::size_t i = 0; i < k.size(); ++i)
        CHECK(std::abs(k.kappa()[i] - 1.0 / (k.params()[i] + std::sqrt(2.0))) < 1e-6);
    for (double alpha : {-1.0, 0.0, 0.5, 2.0}) {
        const Lac lac{alpha, 0.5, 1.0};
        const auto g = geometry::euclidean_curvature(generate({lac, 0.0, 4.0, 2000}));
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double s = g.params()[i];
            const double want = alpha == 0.0 ? std::exp(0.5 * s + 1.0) : std::pow(0.5 * s + 1.0, -1.0 / alpha);
            CHECK(std::abs(g.kappa()[i] / want - 1.0) < 1e-5);
        }
    }
    CHECK(code_of([] { generate({Lac{1.0, -1.0, 1.0}, 0.0, 2.0, 100}); }) == ErrorCode::SingularRange);
}

TEST_CASE("quadratics have constant equiaffine curvature of the conic's sign") {
    for (double kappa : {-1.0, 0.0, 1.0, 2.5}) {
        CAPTURE(kappa);
        const auto c = generate({Quadratic{kappa}, -1.5, 1.5, 2000});
        const auto p = geometry::equiaffine_curvature(c, EquiaffineRoute::Equiaffine);
        if (kappa == 0.0) {
            for (double v : p.kappa()) CHECK(std::abs(v) < 1e-6);
        } else {
            CHECK(testing::stddev(p.kappa()) / std::abs(testing::mean(p.kappa())) < 1e-4);
            CHECK(testing::mean(p.kappa()) == doctest::Approx(kappa).epsilon(1e-5));
        }
    }
}

TEST_CASE("regime dispatch") {
    CHECK(esa_regime(EsaSign::Plus, 1.0).regime == EsaRegime::Oscillatory);
    CHECK(esa_regime(EsaSign::Plus, 1.0).omega == doctest::Approx(std::sqrt(3.0) / 2));
    CHECK(esa_regime(EsaSign::Plus, 2.0).regime == EsaRegime::DoubleRoot);
    CHECK(esa_regime(EsaSign::Plus, -2.0).regime == EsaRegime::DoubleRoot);
    CHECK(esa_regime(EsaSign::Plus, 3.0).regime == EsaRegime::Power);
    CHECK(esa_regime(EsaSign::Plus, 3.0).omega == doctest::Approx(std::sqrt(0.25 - 1.0 / 9)));
    CHECK(esa_regime(EsaSign::Minus, 0.5).regime == EsaRegime::Power);
    CHECK(esa_regime(EsaSign::Minus, 1 / std::sqrt(2.0)).omega == doctest::Approx(1.5));
    CHECK(code_of([] { esa_regime(EsaSign::Plus, 0.0); }) == ErrorCode::InvalidSpec);
}

TEST_CASE("closed-form bases have unit Wronskian and solve the Euler equation") {
    for (auto sign : {EsaSign::Plus, EsaSign::Minus}) {
        for (double xi : {0.5, 1 / std::sqrt(2.0), 1.0, 2.0, 3.0, 10.0}) {
            const EsaClosedForm form(sign, xi);
            for (double u : {-3.0, -0.7, 0.5, 1.0, 2.7}) {
                CAPTURE(xi);
                CAPTURE(u);
                const auto b = form.basis(u);
                CHECK(b.f * b.g_u - b.g * b.f_u == doctest::Approx(1.0).epsilon(1e-12));
                // z'' = -κ z via a central difference of z'.
                const double h = 1e-5 * std::abs(u);
                const auto bp = form.basis(u + h), bm = form.basis(u - h);
                CHECK((bp.f_u - bm.f_u) / (2 * h) == doctest::Approx(-form.kappa_sa(u) * b.f).epsilon(1e-5).scale(1.0));
                // The curve derivative is the basis.
                const auto pp = form.point(u + h, u), pm = form.point(u - h, u);
                CHECK((pp.x - pm.x) / (2 * h) == doctest::Approx(b.f).epsilon(1e-7));
                CHECK((pp.y - pm.y) / (2 * h) == doctest::Approx(b.g).epsilon(1e-7));
            }
        }
    }
}

TEST_CASE("ESA-class curves reproduce ±(ξu)^{-2}") {
    for (auto sign : {EsaSign::Plus, EsaSign::Minus}) {
        for (double xi : {0.5, 1 / std::sqrt(2.0), 1.0, 2.0, 3.0, 10.0}) {
            CAPTURE(xi);
            const auto c = generate({EsaClass{sign, xi}, 0.5, 4.0, 1000});
            CHECK(c.kind() == ParamKind::Equiaffine);
            CHECK(c.points().front().x == 0.0);
            const auto p = geometry::equiaffine_curvature(c, EquiaffineRoute::Equiaffine);
            const double sgn = sign == EsaSign::Plus ? 1.0 : -1.0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                const double u = p.params()[i];
                if (u < 0.5 + 0.1 * 3.5 || u > 4.0 - 0.1 * 3.5) continue;
                CHECK(std::abs(p.kappa()[i] / (sgn / (xi * xi * u * u)) - 1.0) < 1e-3);
            }
        }
    }
}

TEST_CASE("ESA-class curves with η and negative u") {
    const auto c = generate({EsaClass{EsaSign::Minus, 3.0, 1.5}, 0.0, 2.0, 1000});
    const auto p = geometry::equiaffine_curvature(c, EquiaffineRoute::Equiaffine);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double w = 3.0 * p.params()[i] + 1.5;
        CHECK(std::abs(p.kappa()[i] / (-1.0 / (w * w)) - 1.0) < 1e-3);
    }
    const auto neg = generate({EsaClass{EsaSign::Plus, 1.0}, -4.0, -0.5, 1000});
    const auto q = geometry::equiaffine_curvature(neg, EquiaffineRoute::Equiaffine);
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double u = q.params()[i];
        CHECK(std::abs(q.kappa()[i] * u * u - 1.0) < 2e-3);
    }
    CHECK(code_of([] { generate({EsaClass{EsaSign::Plus, 1.0}, -1.0, 1.0, 100}); }) == ErrorCode::SingularRange);
}

TEST_CASE("graph families") {
    const auto p = generate({PowerGraph{2.5}, 0.5, 2.0, 50});
    CHECK(p.points().back().y == doctest::Approx(std::pow(2.0, 2.5)));
    const auto l = generate({LogGraph{}, 0.5, 2.0, 50});
    CHECK(l.points().back().y == doctest::Approx(std::log(2.0)));
    const auto x = generate({XLogXGraph{}, 0.5, 2.0, 50});
    CHECK(x.points().back().y == doctest::Approx(2.0 * std::log(2.0)));
    CHECK(code_of([] { generate({LogGraph{}, 0.0, 2.0, 50}); }) == ErrorCode::SingularRange);
    CHECK(code_of([] { generate({LogGraph{}, 1.0, 2.0, 5}); }) == ErrorCode::InvalidSpec);
}

TEST_CASE("MSA parametrization of the logarithmic spiral") {
    const double xi = 0.7, eta = 1.3;
    const auto c = msa_parametrization({Lac{1.0, xi, eta}, 0.0, 3.0, 100}, 1500);
    CHECK(c.kind() == ParamKind::ESAParam);
    const auto law = MsaLaw::from_meta(*c.meta());
    REQUIRE(law.has_value());
    for (double t : {-1.0, -0.5, 0.0}) {
        // κ^E(t) = e^t / η on s ∈ [0, ·].
        CHECK(law->kappa(t) == doctest::Approx(std::exp(t) / eta).epsilon(1e-15));
        CHECK(law->s_t(t) == doctest::Approx(-(eta / xi) * std::exp(-t)).epsilon(1e-15));
        CHECK(law->s_t(t + 0.2) / law->s_t(t) == doctest::Approx(std::exp(-0.2)).epsilon(1e-14));
    }
    // The sampled curve carries the same curvature; s decreases as t grows,
    // so the curvature signed along t is negative.
    const auto k = geometry::euclidean_curvature(c);
    for (std::size_t i = 0; i < k.size(); ++i) CHECK(std::abs(-k.kappa()[i] / law->kappa(k.params()[i]) - 1.0) < 1e-6);
    CHECK(code_of([] { msa_parametrization({Lac{1.0, 0.0, 1.0}, 0.0, 1.0, 100}, 100); }) ==
          ErrorCode::NonMonotoneKappa);
}

TEST_CASE("the two equiaffine curvature routes agree on generated curves") {
    // The Euclidean route differentiates κ^E twice, so its roundoff grows like
    // h^{-4}; a moderate sample count keeps both routes in their accurate range.
    // None of these curves has a zero of κ^SA, where a relative comparison
    // would be meaningless.
    const std::vector<FamilySpec> specs{
        {Lac{2.0, 1.0, 1.0}, 0.0, 3.0, 500},
        {Lac{-1.0, 1.0, 1.0}, 0.0, 3.0, 500},
        {LogSpiral{1.0, 1.0}, 0.0, 2.0, 500},
        {EsaClass{EsaSign::Plus, 3.0}, 0.5, 4.0, 500},
        {EsaClass{EsaSign::Minus, 1.0}, 0.5, 4.0, 500},
        {Quadratic{1.0}, 0.0, 3.0, 500},
    };
    for (const auto& spec : specs) {
        CAPTURE(family_name(spec.family));
        const auto c = generate(spec);
        const auto a = geometry::equiaffine_curvature(c, EquiaffineRoute::Euclidean);
        const auto b = geometry::equiaffine_curvature(c, EquiaffineRoute::Equiaffine);
        // a is indexed by the input parameter, b by u. Map each input sample
        // to its u and read b there.
        const auto d = geometry::differentiate(c);
        std::vector<double> mu(d.d1.size());
        for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = std::cbrt(cross(d.d1[i], d.d2[i]));
        auto u = kernels::cumulative_integral(mu, d.step);
        // The equiaffine route keeps u-parametrized input as is and otherwise
        // starts u at 0 on the first sample.
        const double offset = c.kind() == ParamKind::Equiaffine ? c.params().front() : 0.0;
        for (double& v : u) v += offset;
        std::vector<double> uq, ka;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double ui = u[i + kernels::kStencilTrim];
            if (ui < b.params()[b.size() / 10] || ui > b.params()[b.size() - b.size() / 10]) continue;
            uq.push_back(ui);
            ka.push_back(a.kappa()[i]);
        }
        const auto kb = kernels::interpolate(b.params(), b.kappa(), uq);
        double worst = 0.0;
        for (std::size_t i = 0; i < ka.size(); ++i) worst = std::max(worst, std::abs(ka[i] / kb[i] - 1.0));
        CHECK(worst < 1e-3);
    }
}
