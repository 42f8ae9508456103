#include <doctest.h>

#include <cmath>
#include <random>

#include "aesthetica/classify.hpp"
#include "aesthetica/error.hpp"
#include "aesthetica/generators.hpp"
#include "aesthetica/geometry.hpp"
#include "class_oracle.hpp"
#include "helpers.hpp"

using namespace aesthetica;
using namespace aesthetica::classify;
using namespace aesthetica::generators;
using oracle::expected_class;
using oracle::Expected;
using oracle::noisy;
using oracle::same_class;

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

TEST_CASE("omega_alpha known pairs and involution") {
    CHECK(omega_alpha(Direction::AlphaToOmega, 1.0) == doctest::Approx(0.0));
    CHECK(omega_alpha(Direction::OmegaToAlpha, 0.0) == doctest::Approx(1.0));
    CHECK(omega_alpha(Direction::OmegaToAlpha, 1.5) == doctest::Approx(0.0));
    CHECK(omega_alpha(Direction::AlphaToOmega, 0.0) == doctest::Approx(1.5));
    CHECK(omega_alpha(Direction::AlphaToOmega, 0.5) == doctest::Approx(0.5));
    CHECK(omega_alpha(Direction::OmegaToAlpha, 0.5) == doctest::Approx(0.5));
    for (double a : {-0.9, -0.3, 0.2, 0.7, 2.0, 5.0}) {
        const double w = omega_alpha(Direction::AlphaToOmega, a);
        CHECK(std::abs(omega_alpha(Direction::OmegaToAlpha, w) - a) < 1e-12);
    }
    CHECK(code_of([] { omega_alpha(Direction::AlphaToOmega, -1.0); }) == ErrorCode::PoleInput);
    CHECK(code_of([] { omega_alpha(Direction::OmegaToAlpha, -1.5); }) == ErrorCode::PoleInput);
    CHECK(code_of([] { omega_alpha(Direction::OmegaToAlpha, NAN); }) == ErrorCode::InvalidInput);
}

TEST_CASE("dispatch table") {
    ClassifyOptions opt;
    auto label = [&](CoefSign s, double xi, double eta = 1.0) { return dispatch({s, xi, eta, 0.0}, opt); };

    CHECK(label(CoefSign::Zero, 0.0, 0.0).conic == Conic::Parabola);
    CHECK(label(CoefSign::Zero, 0.0, 0.3).conic == Conic::Ellipse);
    CHECK(label(CoefSign::Zero, 0.0, -0.3).conic == Conic::Hyperbola);
    CHECK(label(CoefSign::Zero, 0.0, 0.3).kind == ClassKind::Quadratic);

    CHECK(label(CoefSign::Plus, 1.0).kind == ClassKind::LogSpiral);
    CHECK(*label(CoefSign::Plus, 1.0).omega == doctest::Approx(std::sqrt(0.75)));
    CHECK(label(CoefSign::Plus, 2.0).kind == ClassKind::XLogXGraph);
    CHECK(label(CoefSign::Plus, 2.0 * (1 + 5e-4)).kind == ClassKind::XLogXGraph);
    CHECK(label(CoefSign::Minus, 1.0 / std::sqrt(2.0)).kind == ClassKind::LogGraph);

    for (auto [s, xi] : {std::pair{CoefSign::Plus, 3.0}, {CoefSign::Plus, 10.0}, {CoefSign::Minus, 0.5},
                         {CoefSign::Minus, 1.0}, {CoefSign::Minus, 3.0}, {CoefSign::Plus, -3.0}}) {
        const auto e = expected_class(s == CoefSign::Plus ? EsaSign::Plus : EsaSign::Minus, std::abs(xi));
        const auto l = label(s, xi);
        CHECK(l.kind == e.kind);
        CHECK(l.alpha == doctest::Approx(e.alpha).epsilon(1e-12));
    }
    CHECK(label(CoefSign::Plus, 3.0).describe().rfind("power_graph(alpha=", 0) == 0);
    CHECK(label(CoefSign::Zero, 0.0, 0.3).describe() == "quadratic(ellipse)");
}

TEST_CASE("fit_esa_curvature recovers coefficients") {
    std::vector<double> u, k;
    for (int i = 0; i < 200; ++i) {
        u.push_back(0.5 + 0.02 * i);
        k.push_back(-1.0 / std::pow(3.0 * u.back() + 0.4, 2));
    }
    const auto c = fit_esa_curvature(CurvatureProfile(u, k, Geometry::Equiaffine, ParamKind::Equiaffine));
    CHECK(c.sign == CoefSign::Minus);
    CHECK(c.xi == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(c.eta == doctest::Approx(0.4).epsilon(1e-10));
    CHECK(c.fit_rmse < 1e-10);

    std::vector<double> lin(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) lin[i] = u[i] - 2.0;
    CHECK(code_of([&] { fit_esa_curvature(CurvatureProfile(u, lin, Geometry::Equiaffine, ParamKind::Equiaffine)); }) ==
          ErrorCode::MixedSign);
}

TEST_CASE("pointwise classification of the ESA grid and quadratics") {
    ClassifyOptions opt;
    opt.mode = Mode::Pointwise;
    for (auto s : {EsaSign::Plus, EsaSign::Minus})
        for (double xi : {0.5, 1 / std::sqrt(2.0), 1.0, 1.9, 2.0, 2.1, 3.0, 10.0}) {
            CAPTURE(xi);
            CAPTURE(to_string(s));
            const auto c = generate({EsaClass{s, xi}, 0.5, 4.0, 2000});
            const auto l = classify::classify(c, opt);
            CHECK(same_class(l, expected_class(s, xi)));
            CHECK(std::abs(l.coefficients.xi) == doctest::Approx(xi).epsilon(1e-3));
        }
    const auto e = classify::classify(generate({EsaClass{EsaSign::Plus, 3.0}, 0.5, 4.0, 2000}), opt);
    CHECK(e.coefficients.fit_rmse < 1e-3);

    for (auto [k, conic] : {std::pair{-1.0, Conic::Hyperbola}, {0.0, Conic::Parabola}, {1.0, Conic::Ellipse}}) {
        const auto l = classify::classify(generate({Quadratic{k}, 0.0, 5.0, 2000}), opt);
        CHECK(l.kind == ClassKind::Quadratic);
        CHECK(l.conic == conic);
    }
}

TEST_CASE("translating the parameter shifts eta by xi times the offset") {
    ClassifyOptions opt;
    opt.mode = Mode::Pointwise;
    const auto c = generate({EsaClass{EsaSign::Plus, 3.0, 0.0}, 0.5, 4.0, 2000});
    auto u = c.params();
    for (double& x : u) x += 0.25;
    const SampledCurve shifted(std::move(u), c.points(), c.kind(), c.meta());
    const auto a = classify::classify(c, opt).coefficients;
    const auto b = classify::classify(shifted, opt).coefficients;
    CHECK(b.xi == doctest::Approx(a.xi).epsilon(1e-6));
    CHECK(b.eta - a.eta == doctest::Approx(-0.25 * a.xi).epsilon(1e-4));
}

TEST_CASE("graph families classify as their own class") {
    // Graphs are sampled in x, not equiaffine arc length, so go through the
    // model path, which fits the parameter itself.
    ClassifyOptions opt;
    opt.mode = Mode::Model;
    const auto eq = [](const SampledCurve& c) {
        return geometry::reparametrize(c, ParamKind::Equiaffine);
    };
    const auto p = classify::classify(eq(generate({PowerGraph{0.3}, 0.5, 3.0, 2000})), opt);
    CHECK(p.kind == ClassKind::PowerGraph);
    CHECK(p.alpha == doctest::Approx(0.3).epsilon(1e-3));
    CHECK(classify::classify(eq(generate({LogGraph{}, 0.5, 3.0, 2000})), opt).kind == ClassKind::LogGraph);
    CHECK(classify::classify(eq(generate({XLogXGraph{}, 0.5, 3.0, 2000})), opt).kind == ClassKind::XLogXGraph);
}

TEST_CASE("noisy classification") {
    std::vector<std::pair<FamilySpec, Expected>> cases;
    for (auto [s, xi] : {std::pair{EsaSign::Plus, 1.0}, {EsaSign::Plus, 3.0}, {EsaSign::Minus, 0.5},
                         {EsaSign::Minus, 1 / std::sqrt(2.0)}})
        cases.push_back({{EsaClass{s, xi}, 0.5, 4.0, 2000}, expected_class(s, xi)});
    int correct = 0, total = 0;
    for (const auto& [spec, want] : cases)
        for (unsigned seed : {11u, 12u}) {
            ++total;
            if (same_class(classify::classify(noisy(generate(spec), seed, 1e-4)), want)) ++correct;
        }
    for (unsigned seed : {11u, 12u}) {
        ++total;
        const auto l = classify::classify(noisy(generate({Quadratic{1.0}, 0.0, 5.0, 2000}), seed, 1e-4));
        if (l.kind == ClassKind::Quadratic && l.conic == Conic::Ellipse) ++correct;
    }
    CHECK(correct == total);
}

TEST_CASE("classification is deterministic") {
    const auto c = noisy(generate({EsaClass{EsaSign::Minus, 3.0}, 0.5, 4.0, 2000}), 5, 1e-4);
    const auto a = classify::classify(c);
    const auto b = classify::classify(c);
    CHECK(a.describe() == b.describe());
    CHECK(a.coefficients.xi == b.coefficients.xi);
    CHECK(a.coefficients.eta == b.coefficients.eta);
}
