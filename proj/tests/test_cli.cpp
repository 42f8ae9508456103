#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "aesthetica/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path& workdir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "aesthetica_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run(const std::string& args, const std::string& env = "") {
    const std::string cmd = "cd '" + workdir().string() + "' && " + env + " '" AESTHETICA_CLI "' " + args +
                            " >stdout.txt 2>stderr.txt";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& name) { return aesthetica::io::read_file(workdir() / name); }

}  // namespace

TEST_CASE("cli generate and analyze") {
    REQUIRE(run("generate --family esa --sign plus --xi 1 --range 0.5:4 --n 1000 --out spiral.csv") == 0);
    const auto curve = aesthetica::io::read_csv(workdir() / "spiral.csv");
    CHECK(curve.size() == 1000);

    REQUIRE(run("analyze spiral.csv --out prof.csv") == 0);
    const auto prof = slurp("prof.csv");
    std::size_t pos = prof.find('\n') + 1, rows = 0;
    double worst = 0.0;
    while (pos < prof.size()) {
        const auto comma = prof.find(',', pos), end = prof.find('\n', pos);
        const double u = std::stod(prof.substr(pos, comma - pos));
        const double k = std::stod(prof.substr(comma + 1, end - comma - 1));
        if (u > 0.5 + 0.35 && u < 4.0 - 0.35) worst = std::max(worst, std::abs(k * u * u - 1.0));
        pos = end + 1;
        ++rows;
    }
    CHECK(rows > 900);
    CHECK(worst < 1e-3);
}

TEST_CASE("cli check-esa report") {
    REQUIRE(run("generate --family esa --sign plus --xi 1 --range 0.5:4 --n 1000 --out spiral.csv") == 0);
    REQUIRE(run("check-esa spiral.csv --eps 0.05:0.5:10 --group affine --report r.json") == 0);
    const auto r = json::parse(slurp("r.json"));
    CHECK(r["command"] == "check-esa");
    CHECK(r["input"] == "spiral.csv");
    CHECK(r["verdict"] == "ESA");
    CHECK(r["metrics"]["max_residual"].get<double>() < 1e-6);
    CHECK(r["grid"].size() == 11);
    REQUIRE(r["maps"].size() == 11);
    CHECK(r["maps"][0].size() == 2);
    CHECK(r["maps"][0][0].size() == 3);
}

TEST_CASE("cli lcg fit on a log spiral") {
    REQUIRE(run("generate --family log-spiral --a 0.2 --b 1 --range 0:6 --n 2000 --out logspiral.csv") == 0);
    REQUIRE(run("lcg logspiral.csv --out lcg.csv --fit") == 0);
    const auto r = json::parse(slurp("stdout.txt"));
    CHECK(std::abs(r["metrics"]["slope"].get<double>() - 1.0) < 1e-3);
    CHECK(slurp("lcg.csv").rfind("neg_log_kappa,log_rho\n", 0) == 0);
}

TEST_CASE("cli classify, check-msa and plot") {
    REQUIRE(run("generate --family esa --sign minus --xi 3 --range 0.5:4 --n 2000 --out m3.csv") == 0);
    REQUIRE(run("classify m3.csv") == 0);
    CHECK(json::parse(slurp("stdout.txt"))["metrics"]["class"] == "power_graph");

    REQUIRE(run("generate --family lac --alpha 1 --xi 1 --eta 1 --range 0:2 --n 1000 --msa --out msa.csv") == 0);
    REQUIRE(run("check-msa msa.csv --alpha 1 --eps 0.01:0.1:10") == 0);
    const auto m = json::parse(slurp("stdout.txt"));
    CHECK(m["verdict"] == "MSA");
    CHECK(m["metrics"]["kappa_ratio_error"].get<double>() < 1e-9);

    REQUIRE(run("plot m3.csv msa.csv --transform 1,0.5,0,1,0,0 --transform id --out fig.svg") == 0);
    const auto svg = slurp("fig.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    REQUIRE(run("plot m3.csv msa.csv --transform 1,0.5,0,1,0,0 --transform id --out fig2.svg") == 0);
    CHECK(slurp("fig2.svg") == svg);
}

TEST_CASE("cli exit codes and error JSON") {
    CHECK(run("check-esa no_such_file.csv") == 2);
    CHECK(json::parse(slurp("stderr.txt"))["kind"] == "io");

    CHECK(run("generate --family esa --xi 0 --out never.csv") == 1);
    const auto e = json::parse(slurp("stderr.txt"));
    CHECK(e["error"] == "invalid_spec");
    CHECK_FALSE(fs::exists(workdir() / "never.csv"));

    CHECK(run("generate --family esa --range 1-3 --out never.csv") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("generate --family esa --out missing_dir/x.csv") == 2);
    CHECK(run("classify spiral.csv", "AESTHETICA_TOL_OVERRIDE='{\"nope\":1}'") == 2);
}

TEST_CASE("cli honors the tolerance override") {
    REQUIRE(run("generate --family esa --sign plus --xi 1 --range 0.5:4 --n 1000 --out spiral.csv") == 0);
    REQUIRE(run("check-esa spiral.csv", "AESTHETICA_TOL_OVERRIDE='{\"esa_pass\":1e-30}'") == 0);
    CHECK(json::parse(slurp("stdout.txt"))["verdict"] == "Inconclusive");
}
