#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aesthetica {

/// Domain error codes. Each maps to a stable snake_case name used in the
/// CLI's machine-readable error output.
enum class ErrorCode {
    InvalidInput,
    TooFewSamples,
    NonMonotoneParams,
    NonFiniteValue,
    SignChange,
    DegenerateIntegrand,
    DegenerateSpeed,
    VanishingCurvature,
    NegativeCurvatureOnEuclideanRoute,
    InvalidSpec,
    SingularRange,
    NonMonotoneKappa,
    WronskianDrift,
    DomainContainsSingularity,
    InsufficientOverlap,
    SingularNormalEquations,
    NonpositiveU,
    MissingSpeedData,
    DegenerateLCG,
    MixedSign,
    PoorFit,
    Unclassifiable,
    PoleInput,
    EmptyInput,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace aesthetica
