#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>

#include "aesthetica/error.hpp"
#include "aesthetica/generators.hpp"
#include "aesthetica/io.hpp"
#include "aesthetica/plot.hpp"
#include "helpers.hpp"

using namespace aesthetica;
using namespace aesthetica::generators;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "aesthetica_io_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("CSV round trip is byte-identical and lossless") {
    const auto c = generate({EsaClass{EsaSign::Minus, 3.0, 0.25}, 0.5, 4.0, 300});
    const auto text = io::format_csv(c);
    CHECK(text.rfind("# kind=Equiaffine family=esa ", 0) == 0);
    CHECK(text.find("\nparam,x,y\n") != std::string::npos);
    const auto back = io::parse_csv(text);
    CHECK(io::format_csv(back) == text);
    CHECK(back.kind() == ParamKind::Equiaffine);
    CHECK(back.meta()->family == "esa");
    CHECK(*back.meta()->param("eta") == 0.25);
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(back.params()[i] == c.params()[i]);
        CHECK(back.points()[i].x == c.points()[i].x);
        CHECK(back.points()[i].y == c.points()[i].y);
    }
}

TEST_CASE("format_double keeps 17 significant digits") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(io::format_double(1.0) == "1");
    CHECK(std::stod(io::format_double(std::numbers::pi)) == std::numbers::pi);
}

TEST_CASE("CSV without metadata is ingested") {
    std::string text = "param,x,y\n";
    for (int i = 0; i < 12; ++i) text += std::to_string(i) + "," + std::to_string(i) + ",0\n";
    const auto c = io::parse_csv(text);
    CHECK(c.kind() == ParamKind::Arbitrary);
    CHECK(c.meta()->is_ingested());
}

TEST_CASE("malformed CSV raises IoError") {
    CHECK_THROWS_AS(io::parse_csv("t,x,y\n"), io::IoError);
    CHECK_THROWS_AS(io::parse_csv("param,x,y\n1,2\n"), io::IoError);
    CHECK_THROWS_AS(io::parse_csv("param,x,y\n1,2,abc\n"), io::IoError);
    CHECK_THROWS_AS(io::parse_csv("# kind=Nope family=x\nparam,x,y\n"), io::IoError);
    CHECK_THROWS_AS(io::read_csv(scratch("does_not_exist.csv")), io::IoError);
    // Too few rows parse fine but fail the curve's own validation.
    CHECK_THROWS_AS(io::parse_csv("param,x,y\n0,0,0\n1,1,1\n"), Error);
}

TEST_CASE("atomic write replaces the file and leaves no temporary") {
    const auto p = scratch("atomic.txt");
    io::write_file_atomic(p, "first");
    io::write_file_atomic(p, "second");
    CHECK(io::read_file(p) == "second");
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(p.parent_path()))
        if (e.path().filename().string().rfind("atomic.txt", 0) == 0) ++files;
    CHECK(files == 1);
    CHECK_THROWS_AS(io::write_file_atomic(scratch("no_such_dir") / "x.txt", "x"), io::IoError);
}

TEST_CASE("unit circle plot") {
    const auto circle = testing::sample(0.0, 2 * std::numbers::pi, 400,
                                        [](double t) { return PlanarPoint{std::cos(t), std::sin(t)}; });
    const auto svg = plot::render_svg({{circle, std::nullopt, std::nullopt}});
    CHECK(count(svg, "<path") == 1);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    // The samples reach within 1e-4 of [-1,1]², plus a 5% margin of the extent.
    const auto at = svg.find("viewBox=\"") + 9;
    double vx = 0, vy = 0, vw = 0, vh = 0;
    REQUIRE(std::sscanf(svg.c_str() + at, "%lf %lf %lf %lf", &vx, &vy, &vw, &vh) == 4);
    CHECK(vx == doctest::Approx(-1.1).epsilon(1e-4));
    CHECK(vy == doctest::Approx(-1.1).epsilon(1e-4));
    CHECK(vw == doctest::Approx(2.2).epsilon(1e-4));
    CHECK(vh == doctest::Approx(2.2).epsilon(1e-4));
    CHECK(plot::render_svg({{circle, std::nullopt, std::nullopt}}) == svg);
}

TEST_CASE("figure families get four distinct dash patterns") {
    std::vector<plot::PlotItem> items;
    items.push_back({generate({PowerGraph{0.5}, 0.1, 2.0, 200}), std::nullopt, std::nullopt});
    items.push_back({generate({LogSpiral{0.2, 1.0}, 0.0, 3.0, 200}), std::nullopt, std::nullopt});
    items.push_back({generate({LogGraph{}, 0.5, 2.0, 200}), std::nullopt, std::nullopt});
    items.push_back({generate({XLogXGraph{}, 0.5, 2.0, 200}), std::nullopt, std::nullopt});
    CHECK(plot::style_for(items[0].curve) == plot::LineStyle::Solid);
    CHECK(plot::style_for(items[1].curve) == plot::LineStyle::Dotted);
    CHECK(plot::style_for(items[2].curve) == plot::LineStyle::Dashed);
    CHECK(plot::style_for(items[3].curve) == plot::LineStyle::DashDot);
    const auto svg = plot::render_svg(items);
    CHECK(count(svg, "<path") == 4);
    CHECK(count(svg, "stroke-dasharray") == 3);

    // ESA-class members take the style of the class they belong to.
    CHECK(plot::style_for(generate({EsaClass{EsaSign::Plus, 1.0}, 0.5, 4.0, 50})) == plot::LineStyle::Dotted);
    CHECK(plot::style_for(generate({EsaClass{EsaSign::Plus, 2.0}, 0.5, 4.0, 50})) == plot::LineStyle::DashDot);
    CHECK(plot::style_for(generate({EsaClass{EsaSign::Minus, 1 / std::sqrt(2.0)}, 0.5, 4.0, 50})) ==
          plot::LineStyle::Dashed);

    auto shear = AffineMap2::identity();
    shear.linear[0][1] = 0.7;
    for (auto& it : items) it.transform = shear;
    const auto moved = plot::render_svg(items);
    CHECK(count(moved, "<path") == 4);
    CHECK(moved != svg);
}

TEST_CASE("plot of nothing is EmptyInput") {
    try {
        plot::render_svg({});
        FAIL("expected EmptyInput");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyInput);
    }
}
