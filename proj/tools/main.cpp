#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aesthetica/affinity.hpp"
#include "aesthetica/classify.hpp"
#include "aesthetica/error.hpp"
#include "aesthetica/generators.hpp"
#include "aesthetica/geometry.hpp"
#include "aesthetica/io.hpp"
#include "aesthetica/plot.hpp"

namespace {

using namespace aesthetica;
using nlohmann::json;

// Bad command lines and malformed option values exit 2 like I/O errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) return out;
        start = pos + 1;
    }
}

double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(what + ": not a number: '" + s + "'");
    }
}

std::pair<double, double> parse_range(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.size() != 2) throw UsageError("range must be lo:hi, got '" + s + "'");
    return {to_double(parts[0], "range"), to_double(parts[1], "range")};
}

std::vector<double> parse_grid(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw UsageError("grid must be start:stop:count, got '" + s + "'");
    const double a = to_double(parts[0], "grid"), b = to_double(parts[1], "grid");
    const double c = to_double(parts[2], "grid");
    if (c < 1 || c != std::floor(c)) throw UsageError("grid count must be a positive integer");
    const auto n = static_cast<std::size_t>(c);
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return g;
}

AffineMap2 parse_affine(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 6) throw UsageError("transform must be a,b,c,d,tx,ty, got '" + s + "'");
    AffineMap2 m;
    m.linear = {{{to_double(parts[0], "transform"), to_double(parts[1], "transform")},
                 {to_double(parts[2], "transform"), to_double(parts[3], "transform")}}};
    m.translation = {to_double(parts[4], "transform"), to_double(parts[5], "transform")};
    return m;
}

// Tolerance map from AESTHETICA_TOL_OVERRIDE, e.g. {"esa_pass": 1e-5}.
struct Tolerances {
    std::optional<double> esa_pass, esa_fail, msa, classify_tau_rel, classify_tau_omega;

    static Tolerances from_env() {
        Tolerances t;
        const char* raw = std::getenv("AESTHETICA_TOL_OVERRIDE");
        if (!raw || !*raw) return t;
        json j;
        try {
            j = json::parse(raw);
        } catch (const json::exception& e) {
            throw UsageError(std::string("AESTHETICA_TOL_OVERRIDE: ") + e.what());
        }
        if (!j.is_object()) throw UsageError("AESTHETICA_TOL_OVERRIDE must be a JSON object");
        const std::map<std::string, std::optional<double>*> slots = {
            {"esa_pass", &t.esa_pass},
            {"esa_fail", &t.esa_fail},
            {"msa", &t.msa},
            {"classify_tau_rel", &t.classify_tau_rel},
            {"classify_tau_omega", &t.classify_tau_omega},
        };
        for (const auto& [key, value] : j.items()) {
            const auto it = slots.find(key);
            if (it == slots.end()) throw UsageError("AESTHETICA_TOL_OVERRIDE: unknown key '" + key + "'");
            if (!value.is_number()) throw UsageError("AESTHETICA_TOL_OVERRIDE: '" + key + "' must be a number");
            const double v = value.get<double>();
            if (!(v > 0.0) || !std::isfinite(v))
                throw UsageError("AESTHETICA_TOL_OVERRIDE: '" + key + "' must be positive");
            *it->second = v;
        }
        return t;
    }
};

json map_json(const AffineMap2& m) {
    return json::array({json::array({m.linear[0][0], m.linear[0][1], m.translation[0]}),
                        json::array({m.linear[1][0], m.linear[1][1], m.translation[1]})});
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void emit(const json& report, const std::string& path) {
    const std::string text = report.dump(2) + "\n";
    if (path.empty())
        std::cout << text;
    else
        io::write_file_atomic(path, text);
}

json base_report(const std::string& command, const std::string& input) {
    return json{{"command", command}, {"input", input}, {"metrics", json::object()}};
}

struct Options {
    // generate
    std::string family, sign = "plus", range = "0.5:4", out;
    double xi = 1.0, eta = 0.0, kappa = 0.0, alpha = 1.0, a = 0.1, b = 1.0;
    std::size_t n = 1000;
    bool msa = false;
    // analysis commands
    std::string input, report, eps = "0.05:0.5:10", group = "affine", geometry = "equiaffine",
                        route = "equiaffine", mode = "auto";
    bool fit = false, no_transform = false;
    // plot
    std::vector<std::string> inputs, transforms;
};

generators::FamilySpec family_spec(const Options& o) {
    using namespace generators;
    std::string f = o.family;
    for (char& c : f)
        if (c == '-') c = '_';
    const auto [lo, hi] = parse_range(o.range);
    FamilySpec spec{LogGraph{}, lo, hi, o.n};
    EsaSign sign;
    if (o.sign == "plus" || o.sign == "+")
        sign = EsaSign::Plus;
    else if (o.sign == "minus" || o.sign == "-")
        sign = EsaSign::Minus;
    else
        throw UsageError("sign must be plus or minus");
    if (f == "esa")
        spec.family = EsaClass{sign, o.xi, o.eta};
    else if (f == "quadratic")
        spec.family = Quadratic{o.kappa};
    else if (f == "lac")
        spec.family = Lac{o.alpha, o.xi, o.eta};
    else if (f == "log_spiral" || f == "logspiral")
        spec.family = LogSpiral{o.a, o.b};
    else if (f == "power" || f == "power_graph")
        spec.family = PowerGraph{o.alpha};
    else if (f == "log_graph" || f == "log")
        spec.family = LogGraph{};
    else if (f == "xlogx" || f == "xlogx_graph")
        spec.family = XLogXGraph{};
    else
        throw UsageError("unknown family '" + o.family + "'");
    return spec;
}

int run_generate(const Options& o, const Tolerances&) {
    const auto spec = family_spec(o);
    SampledCurve curve = generators::generate(spec);
    if (o.msa) {
        if (!std::holds_alternative<generators::Lac>(spec.family)) throw UsageError("--msa applies to --family lac");
        curve = generators::msa_parametrization(spec, o.n);
    }
    io::write_csv(o.out, curve);
    return 0;
}

int run_analyze(const Options& o, const Tolerances& tol) {
    const auto curve = io::read_csv(o.input);
    CurvatureProfile prof = [&] {
        if (o.geometry == "euclidean") return geometry::euclidean_curvature(curve);
        if (o.geometry == "similarity") return geometry::similarity_curvature(curve);
        if (o.geometry != "equiaffine") throw UsageError("geometry must be euclidean, similarity or equiaffine");
        if (o.route == "euclidean") return geometry::equiaffine_curvature(curve, geometry::EquiaffineRoute::Euclidean);
        if (o.route != "equiaffine") throw UsageError("route must be euclidean or equiaffine");
        return geometry::equiaffine_curvature(curve, geometry::EquiaffineRoute::Equiaffine);
    }();
    const auto& k = prof.kappa();
    double lo = k.front(), hi = k.front(), sum = 0.0;
    for (double v : k) lo = std::min(lo, v), hi = std::max(hi, v), sum += v;
    json rep = base_report("analyze", o.input);
    rep["metrics"] = {{"geometry", std::string(to_string(prof.geometry()))},
                      {"param_kind", std::string(to_string(prof.kind()))},
                      {"samples", k.size()},
                      {"kappa_min", lo},
                      {"kappa_max", hi},
                      {"kappa_mean", sum / static_cast<double>(k.size())}};
    if (prof.geometry() == Geometry::Equiaffine) {
        try {
            const auto c = classify::fit_esa_curvature(prof);
            rep["metrics"]["esa_fit"] = {{"sign", std::string(classify::to_string(c.sign))},
                                         {"xi", c.xi},
                                         {"eta", c.eta},
                                         {"fit_rmse", finite_or_null(c.fit_rmse)}};
            classify::ClassifyOptions opt;
            if (tol.classify_tau_rel) opt.tau_rel = *tol.classify_tau_rel;
            if (tol.classify_tau_omega) opt.tau_omega = *tol.classify_tau_omega;
            rep["verdict"] = classify::dispatch(c, opt).describe();
        } catch (const Error& e) {
            rep["metrics"]["esa_fit_error"] = std::string(to_string(e.code()));
        }
    }
    if (!o.out.empty()) io::write_file_atomic(o.out, io::format_columns("param", prof.params(), "kappa", k));
    emit(rep, o.report);
    return 0;
}

int run_check_esa(const Options& o, const Tolerances& tol) {
    SampledCurve curve = io::read_csv(o.input);
    const auto grid = parse_grid(o.eps);
    const auto group = affinity::parse_group(o.group);
    if (!group) throw UsageError("group must be affine or equiaffine");
    const bool transform = !o.no_transform && curve.kind() == ParamKind::Equiaffine && curve.meta() &&
                           curve.meta()->family == "esa";
    if (transform) curve = affinity::esa_parameter_for_grid(curve, grid);
    auto th = affinity::EsaThresholds::for_curve(curve);
    if (tol.esa_pass) th.pass = *tol.esa_pass;
    if (tol.esa_fail) th.fail = *tol.esa_fail;
    const auto r = affinity::esa_check(curve, grid, *group, th);

    json rep = base_report("check-esa", o.input);
    rep["verdict"] = std::string(affinity::to_string(r.verdict));
    json maps = json::array();
    for (const auto& m : r.maps) maps.push_back(map_json(m));
    rep["grid"] = r.eps_grid;
    rep["maps"] = maps;
    rep["metrics"] = {
        {"group", std::string(affinity::to_string(*group))},
        {"param_kind", std::string(to_string(curve.kind()))},
        {"transformed", transform},
        {"max_residual", r.max_residual()},
        {"residuals", r.residuals},
        {"dets", r.dets},
        {"det_rate", finite_or_null(r.det_rate)},
        {"det_rate_r2", finite_or_null(r.det_rate_r2)},
        {"composition_error", finite_or_null(r.composition_error)},
        {"generator", json::array({json::array({r.generator[0][0], r.generator[0][1]}),
                                   json::array({r.generator[1][0], r.generator[1][1]})})},
        {"thresholds", {{"pass", th.pass}, {"fail", th.fail}}},
    };
    emit(rep, o.report);
    return 0;
}

int run_check_msa(const Options& o, const Tolerances& tol) {
    const auto curve = io::read_csv(o.input);
    const auto grid = parse_grid(o.eps);
    const auto r = affinity::msa_check(curve, o.alpha, grid);
    bool verdict = r.verdict;
    if (tol.msa) verdict = std::max(r.kappa_ratio_error, r.speed_ratio_error) < *tol.msa;
    json rep = base_report("check-msa", o.input);
    rep["verdict"] = verdict ? "MSA" : "NotMSA";
    rep["grid"] = grid;
    rep["metrics"] = {{"alpha", r.alpha},
                      {"kappa_ratio_error", r.kappa_ratio_error},
                      {"speed_ratio_error", r.speed_ratio_error},
                      {"closed_form", r.closed_form}};
    emit(rep, o.report);
    return 0;
}

int run_lcg(const Options& o, const Tolerances&) {
    const auto curve = io::read_csv(o.input);
    const auto d = affinity::lcg(curve);
    if (!o.out.empty()) {
        std::vector<double> x(d.points.size()), y(d.points.size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = d.points[i].x, y[i] = d.points[i].y;
        io::write_file_atomic(o.out, io::format_columns("neg_log_kappa", x, "log_rho", y));
    }
    if (o.fit || !o.report.empty()) {
        json rep = base_report("lcg", o.input);
        rep["metrics"] = {{"slope", d.slope},
                          {"intercept", d.intercept},
                          {"r_squared", d.r_squared},
                          {"rms_residual", d.rms_residual},
                          {"points", d.points.size()}};
        emit(rep, o.report);
    }
    return 0;
}

int run_classify(const Options& o, const Tolerances& tol) {
    const auto curve = io::read_csv(o.input);
    classify::ClassifyOptions opt;
    if (o.mode == "auto")
        opt.mode = classify::Mode::Auto;
    else if (o.mode == "pointwise")
        opt.mode = classify::Mode::Pointwise;
    else if (o.mode == "model")
        opt.mode = classify::Mode::Model;
    else
        throw UsageError("mode must be auto, pointwise or model");
    if (tol.classify_tau_rel) opt.tau_rel = *tol.classify_tau_rel;
    if (tol.classify_tau_omega) opt.tau_omega = *tol.classify_tau_omega;
    const auto l = classify::classify(curve, opt);
    json rep = base_report("classify", o.input);
    rep["verdict"] = l.describe();
    rep["metrics"] = {{"class", std::string(classify::to_string(l.kind))},
                      {"method", std::string(classify::to_string(l.method))},
                      {"sign", std::string(classify::to_string(l.coefficients.sign))},
                      {"xi", l.coefficients.xi},
                      {"eta", l.coefficients.eta},
                      {"fit_rmse", finite_or_null(l.coefficients.fit_rmse)},
                      {"point_rmse", l.point_rmse}};
    if (l.kind == classify::ClassKind::PowerGraph) rep["metrics"]["alpha"] = l.alpha;
    if (l.kind == classify::ClassKind::Quadratic)
        rep["metrics"]["conic"] = std::string(classify::to_string(l.conic));
    if (l.omega) rep["metrics"]["omega"] = *l.omega;
    emit(rep, o.report);
    return 0;
}

int run_plot(const Options& o, const Tolerances&) {
    if (!o.transforms.empty() && o.transforms.size() != o.inputs.size())
        throw UsageError("give one --transform per input or none");
    std::vector<plot::PlotItem> items;
    for (std::size_t i = 0; i < o.inputs.size(); ++i) {
        plot::PlotItem item{io::read_csv(o.inputs[i]), std::nullopt, std::nullopt};
        if (!o.transforms.empty() && o.transforms[i] != "id") item.transform = parse_affine(o.transforms[i]);
        items.push_back(std::move(item));
    }
    const auto svg = plot::render_svg(items);
    if (o.out.empty())
        std::cout << svg;
    else
        io::write_file_atomic(o.out, svg);
    return 0;
}

void error_json(const std::string& kind, const std::string& code, const std::string& message, int status) {
    std::cerr << json{{"error", code}, {"kind", kind}, {"message", message}, {"exit", status}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar curve geometry: generate, analyze and test self-affine curves"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("generate", "Sample a curve family to CSV");
    gen->add_option("--family", o.family, "esa, quadratic, lac, log-spiral, power, log-graph, xlogx")->required();
    gen->add_option("--sign", o.sign, "plus or minus (esa)");
    gen->add_option("--xi", o.xi, "xi (esa, lac)");
    gen->add_option("--eta", o.eta, "eta (esa, lac)");
    gen->add_option("--kappa", o.kappa, "constant equiaffine curvature (quadratic)");
    gen->add_option("--alpha", o.alpha, "exponent (lac, power)");
    gen->add_option("--a", o.a, "log-spiral growth");
    gen->add_option("--b", o.b, "log-spiral rotation");
    gen->add_option("--range", o.range, "parameter range lo:hi");
    gen->add_option("--n", o.n, "sample count");
    gen->add_flag("--msa", o.msa, "resample a LAC in its self-similar parameter");
    gen->add_option("--out", o.out, "output CSV")->required();

    auto* ana = app.add_subcommand("analyze", "Curvature profile in one geometry");
    ana->add_option("input", o.input)->required();
    ana->add_option("--geometry", o.geometry, "euclidean, similarity or equiaffine");
    ana->add_option("--route", o.route, "equiaffine curvature route: euclidean or equiaffine");
    ana->add_option("--out", o.out, "profile CSV (param,kappa)");
    ana->add_option("--report", o.report, "JSON report (stdout when omitted)");

    auto* esa = app.add_subcommand("check-esa", "Fit affine maps over a shift grid");
    esa->add_option("input", o.input)->required();
    esa->add_option("--eps", o.eps, "shift grid start:stop:count");
    esa->add_option("--group", o.group, "affine or equiaffine");
    esa->add_flag("--no-transform", o.no_transform, "use the stored parameter as is");
    esa->add_option("--report", o.report, "JSON report (stdout when omitted)");

    auto* msa = app.add_subcommand("check-msa", "Test the self-similarity ratios");
    msa->add_option("input", o.input)->required();
    msa->add_option("--alpha", o.alpha)->required();
    msa->add_option("--eps", o.eps, "shift grid start:stop:count");
    msa->add_option("--report", o.report, "JSON report (stdout when omitted)");

    auto* lcg = app.add_subcommand("lcg", "Logarithmic curvature graph");
    lcg->add_option("input", o.input)->required();
    lcg->add_option("--out", o.out, "graph CSV");
    lcg->add_flag("--fit", o.fit, "print the fitted line");
    lcg->add_option("--report", o.report, "JSON report");

    auto* cls = app.add_subcommand("classify", "Identify the curve class");
    cls->add_option("input", o.input)->required();
    cls->add_option("--mode", o.mode, "auto, pointwise or model");
    cls->add_option("--report", o.report, "JSON report (stdout when omitted)");

    auto* plt = app.add_subcommand("plot", "Render curves to SVG");
    plt->add_option("inputs", o.inputs)->required();
    plt->add_option("--transform", o.transforms, "per-curve affine map a,b,c,d,tx,ty or id");
    plt->add_option("--out", o.out, "SVG file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const auto tol = Tolerances::from_env();
        if (gen->parsed()) return run_generate(o, tol);
        if (ana->parsed()) return run_analyze(o, tol);
        if (esa->parsed()) return run_check_esa(o, tol);
        if (msa->parsed()) return run_check_msa(o, tol);
        if (lcg->parsed()) return run_lcg(o, tol);
        if (cls->parsed()) return run_classify(o, tol);
        if (plt->parsed()) return run_plot(o, tol);
    } catch (const Error& e) {
        error_json("domain", std::string(to_string(e.code())), e.what(), 1);
        return 1;
    } catch (const io::IoError& e) {
        error_json("io", "IoError", e.what(), 2);
        return 2;
    } catch (const UsageError& e) {
        error_json("usage", "UsageError", e.what(), 2);
        return 2;
    }
    return 2;
}
