#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "aesthetica/types.hpp"

namespace testing {

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// Values restricted to the central `fraction` of their index range.
inline std::vector<double> central(const std::vector<double>& v, double fraction) {
    const auto skip = static_cast<std::size_t>(std::floor(v.size() * (1.0 - fraction) / 2.0));
    return std::vector<double>(v.begin() + skip, v.end() - skip);
}

/// By-value copy, safe to range-for over when the profile is a temporary.
inline std::vector<double> kappa(const aesthetica::CurvatureProfile& p) { return p.kappa(); }

inline double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double stddev(const std::vector<double>& v) {
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size()));
}

inline aesthetica::SampledCurve sample(double lo, double hi, std::size_t n, auto&& fn,
                                       aesthetica::ParamKind kind = aesthetica::ParamKind::Arbitrary) {
    std::vector<double> t(n);
    std::vector<aesthetica::PlanarPoint> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        p[i] = fn(t[i]);
    }
    return aesthetica::SampledCurve(std::move(t), std::move(p), kind);
}

}  // namespace testing
