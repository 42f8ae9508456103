#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aesthetica/types.hpp"

namespace aesthetica::io {

/// Unreadable, unwritable or malformed files. Kept apart from domain errors so
/// callers can tell the two apart.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "%.17g" rendering, which parses back to the same double.
std::string format_double(double value);

/// Comment line `# kind=<ParamKind> family=<name> [key=value ...]`, then the
/// header `param,x,y` and one row per sample.
std::string format_csv(const SampledCurve& curve);

/// Accepts the output of format_csv. Without a comment line the curve is
/// taken as ingested with an arbitrary parameter.
SampledCurve parse_csv(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`, so a failed
/// write never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

SampledCurve read_csv(const std::filesystem::path& path);
void write_csv(const std::filesystem::path& path, const SampledCurve& curve);

/// Two-column table with the given header names.
std::string format_columns(std::string_view a_name, const std::vector<double>& a, std::string_view b_name,
                           const std::vector<double>& b);

}  // namespace aesthetica::io
