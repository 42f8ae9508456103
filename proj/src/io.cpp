#include "aesthetica/io.hpp"

#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace aesthetica::io {

namespace {

double parse_double(std::string_view s, std::size_t line) {
    double v = 0.0;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw IoError("line " + std::to_string(line) + ": not a number: '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

Provenance parse_comment(std::string_view body, ParamKind& kind, std::size_t line) {
    Provenance meta;
    bool have_kind = false;
    for (auto tok : split(body, ' ')) {
        if (tok.empty()) continue;
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos) throw IoError("line " + std::to_string(line) + ": expected key=value");
        const auto key = tok.substr(0, eq);
        const auto value = tok.substr(eq + 1);
        if (key == "kind") {
            const auto k = parse_param_kind(value);
            if (!k) throw IoError("line " + std::to_string(line) + ": unknown kind '" + std::string(value) + "'");
            kind = *k;
            have_kind = true;
        } else if (key == "family") {
            meta.family = std::string(value);
        } else if (key == "reversed") {
            meta.reversed = value == "1";
        } else {
            meta.params[std::string(key)] = parse_double(value, line);
        }
    }
    if (!have_kind) throw IoError("line " + std::to_string(line) + ": metadata line lacks kind=");
    return meta;
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_csv(const SampledCurve& curve) {
    std::string out = "# kind=";
    out += to_string(curve.kind());
    const Provenance meta = curve.meta().value_or(Provenance{});
    out += " family=" + meta.family;
    for (const auto& [k, v] : meta.params) out += " " + k + "=" + format_double(v);
    if (meta.reversed) out += " reversed=1";
    out += "\nparam,x,y\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        out += format_double(curve.params()[i]);
        out += ',';
        out += format_double(curve.points()[i].x);
        out += ',';
        out += format_double(curve.points()[i].y);
        out += '\n';
    }
    return out;
}

SampledCurve parse_csv(std::string_view text) {
    ParamKind kind = ParamKind::Arbitrary;
    std::optional<Provenance> meta;
    bool header = false;
    std::vector<double> params;
    std::vector<PlanarPoint> pts;
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (meta) throw IoError("line " + std::to_string(line_no) + ": second metadata line");
            if (header) throw IoError("line " + std::to_string(line_no) + ": metadata after header");
            meta = parse_comment(line.substr(1), kind, line_no);
            continue;
        }
        if (!header) {
            if (line != "param,x,y") throw IoError("line " + std::to_string(line_no) + ": expected header param,x,y");
            header = true;
            continue;
        }
        const auto cols = split(line, ',');
        if (cols.size() != 3) throw IoError("line " + std::to_string(line_no) + ": expected 3 columns");
        params.push_back(parse_double(cols[0], line_no));
        pts.push_back({parse_double(cols[1], line_no), parse_double(cols[2], line_no)});
    }
    if (!header) throw IoError("missing header param,x,y");
    if (!meta) meta = Provenance{};
    return SampledCurve(std::move(params), std::move(pts), kind, std::move(meta));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path.string());
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + path.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ignore;
            std::filesystem::remove(tmp, ignore);
            throw IoError("write failed: " + path.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignore;
        std::filesystem::remove(tmp, ignore);
        throw IoError("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

SampledCurve read_csv(const std::filesystem::path& path) { return parse_csv(read_file(path)); }

void write_csv(const std::filesystem::path& path, const SampledCurve& curve) {
    write_file_atomic(path, format_csv(curve));
}

std::string format_columns(std::string_view a_name, const std::vector<double>& a, std::string_view b_name,
                           const std::vector<double>& b) {
    std::string out;
    out += a_name;
    out += ',';
    out += b_name;
    out += '\n';
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) out += format_double(a[i]) + "," + format_double(b[i]) + "\n";
    return out;
}

}  // namespace aesthetica::io
