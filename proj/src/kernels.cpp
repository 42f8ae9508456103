#include "aesthetica/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "aesthetica/error.hpp"

namespace aesthetica::kernels {

std::vector<double> fd_weights(std::span<const double> offsets, int order) {
    // Fornberg (1988), evaluated at x0 = 0.
    const int n = static_cast<int>(offsets.size());
    if (order < 0 || n <= order) fail(ErrorCode::InvalidInput, "fd_weights: too few offsets");
    std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
    double c1 = 1.0;
    double c4 = offsets[0];
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, order);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = offsets[i];
        for (int j = 0; j < i; ++j) {
            const double c3 = offsets[i] - offsets[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = c[i][order];
    return w;
}

namespace {

// Stencil widths: derivative order -> number of points (central and one-sided).
constexpr std::array<int, 4> kCentralPoints{0, 5, 5, 5};
constexpr std::array<int, 4> kOneSidedPoints{0, 5, 6, 5};

struct Stencil {
    int first = 0;  // offset of the first node relative to the evaluation node
    std::vector<double> w;
};

// Stencil tables for the left edge (i = 0, 1), the interior, and the right
// edge are built once; the right edge is the mirror of the left.
struct StencilTable {
    std::array<Stencil, 2> left;
    Stencil central;
    std::array<Stencil, 2> right;
};

StencilTable build_table(int order) {
    StencilTable t;
    {
        const int m = kCentralPoints[order];
        std::vector<double> off(m);
        for (int k = 0; k < m; ++k) off[k] = k - m / 2;
        t.central = {-m / 2, fd_weights(off, order)};
    }
    const int m = kOneSidedPoints[order];
    for (int i = 0; i < 2; ++i) {
        std::vector<double> off(m);
        for (int k = 0; k < m; ++k) off[k] = k - i;
        t.left[i] = {-i, fd_weights(off, order)};
        for (int k = 0; k < m; ++k) off[k] = -(m - 1 - i) + k;
        t.right[i] = {-(m - 1 - i), fd_weights(off, order)};
    }
    return t;
}

const StencilTable& table(int order) {
    static const std::array<StencilTable, 4> tables{StencilTable{}, build_table(1), build_table(2),
                                                    build_table(3)};
    return tables[order];
}

inline double apply(std::span<const double> f, std::ptrdiff_t i, const Stencil& s, double scale) {
    double acc = 0.0;
    for (std::size_t k = 0; k < s.w.size(); ++k) acc += s.w[k] * f[i + s.first + static_cast<std::ptrdiff_t>(k)];
    return acc * scale;
}

inline double derivative_at(std::span<const double> f, std::ptrdiff_t i, int order, double scale) {
    const auto& t = table(order);
    const auto n = static_cast<std::ptrdiff_t>(f.size());
    if (i < 2) return apply(f, i, t.left[i], scale);
    if (i >= n - 2) return apply(f, i, t.right[n - 1 - i], scale);
    return apply(f, i, t.central, scale);
}

void check_series(std::span<const double> f, double h, std::size_t min_size) {
    if (f.size() < min_size)
        fail(ErrorCode::TooFewSamples,
             "series has " + std::to_string(f.size()) + " samples, need " + std::to_string(min_size));
    if (!(h > 0.0) || !std::isfinite(h)) fail(ErrorCode::InvalidInput, "grid step must be positive");
}

inline double cell_integral(std::span<const double> f, std::size_t i, double h) {
    const std::size_t n = f.size();
    const double c = h / 24.0;
    if (i == 0) return c * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
    if (i == n - 2) return c * (f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] + 9.0 * f[n - 1]);
    return c * (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]);
}

inline std::size_t window_start(std::span<const double> nodes, double q, std::size_t order) {
    const std::size_t n = nodes.size();
    auto it = std::upper_bound(nodes.begin(), nodes.end(), q);
    std::ptrdiff_t j = (it - nodes.begin()) - 1;
    j = std::clamp<std::ptrdiff_t>(j, 0, static_cast<std::ptrdiff_t>(n) - 2);
    std::ptrdiff_t s = j - static_cast<std::ptrdiff_t>(order) / 2 + 1;
    s = std::clamp<std::ptrdiff_t>(s, 0, static_cast<std::ptrdiff_t>(n - order));
    return static_cast<std::size_t>(s);
}

inline double lagrange_at(std::span<const double> nodes, std::span<const double> values, double q,
                          std::size_t s, std::size_t order) {
    double acc = 0.0;
    for (std::size_t k = s; k < s + order; ++k) {
        double w = 1.0;
        for (std::size_t m = s; m < s + order; ++m)
            if (m != k) w *= (q - nodes[m]) / (nodes[k] - nodes[m]);
        acc += w * values[k];
    }
    return acc;
}

void check_interp(std::span<const double> nodes, std::span<const double> values, std::size_t order) {
    if (nodes.size() != values.size()) fail(ErrorCode::InvalidInput, "interpolate: size mismatch");
    if (order < 2 || nodes.size() < order)
        fail(ErrorCode::TooFewSamples, "interpolate: fewer nodes than stencil order");
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!(nodes[i] > nodes[i - 1]))
            fail(ErrorCode::NonMonotoneParams, "interpolate: nodes not strictly increasing");
}

}  // namespace

Derivatives derivatives(std::span<const double> f, double h) {
    check_series(f, h, 6);
    const auto n = static_cast<std::ptrdiff_t>(f.size());
    Derivatives d{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
    const double s1 = 1.0 / h;
    const double s2 = 1.0 / (h * h);
    const double s3 = 1.0 / (h * h * h);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        d.d1[i] = derivative_at(f, i, 1, s1);
        d.d2[i] = derivative_at(f, i, 2, s2);
        d.d3[i] = derivative_at(f, i, 3, s3);
    }
    return d;
}

std::vector<double> first_derivative(std::span<const double> f, double h) {
    check_series(f, h, 5);
    const auto n = static_cast<std::ptrdiff_t>(f.size());
    std::vector<double> d(n);
    const double s1 = 1.0 / h;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) d[i] = derivative_at(f, i, 1, s1);
    return d;
}

std::vector<double> cumulative_integral(std::span<const double> f, double h, double base) {
    check_series(f, h, 4);
    const auto cells = static_cast<std::ptrdiff_t>(f.size() - 1);
    std::vector<double> contrib(cells);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < cells; ++i) contrib[i] = cell_integral(f, static_cast<std::size_t>(i), h);
    std::vector<double> out(f.size());
    out[0] = base;
    for (std::ptrdiff_t i = 0; i < cells; ++i) out[i + 1] = out[i] + contrib[i];
    return out;
}

std::vector<double> interpolate(std::span<const double> nodes, std::span<const double> values,
                                std::span<const double> queries, std::size_t order) {
    check_interp(nodes, values, order);
    const auto nq = static_cast<std::ptrdiff_t>(queries.size());
    std::vector<double> out(nq);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nq; ++i) {
        const std::size_t s = window_start(nodes, queries[i], order);
        out[i] = lagrange_at(nodes, values, queries[i], s, order);
    }
    return out;
}

CubicSpline::CubicSpline(std::span<const double> nodes, std::span<const double> values)
    : x_(nodes.begin(), nodes.end()), y_(values.begin(), values.end()), m_(nodes.size(), 0.0) {
    const std::size_t n = x_.size();
    if (n != y_.size()) fail(ErrorCode::InvalidInput, "spline: size mismatch");
    if (n < 4) fail(ErrorCode::TooFewSamples, "spline: need at least 4 nodes");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) fail(ErrorCode::NonMonotoneParams, "spline: nodes not increasing");
    std::vector<double> h(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];

    // Second derivatives m_1..m_{n-2} from the continuity rows
    //   h_{i-1}/6 m_{i-1} + (h_{i-1}+h_i)/3 m_i + h_i/6 m_{i+1} = slope jump,
    // with not-a-knot ends: m_0 and m_{n-1} are the linear extrapolations
    // that make the third derivative continuous at x_1 and x_{n-2}.
    const std::size_t k = n - 2;
    std::vector<double> lo(k), di(k), up(k), rhs(k);
    for (std::size_t r = 0; r < k; ++r) {
        const std::size_t i = r + 1;
        lo[r] = h[i - 1] / 6.0;
        di[r] = (h[i - 1] + h[i]) / 3.0;
        up[r] = h[i] / 6.0;
        rhs[r] = (y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1];
    }
    // m_0 = ((h0+h1) m_1 - h0 m_2) / h1
    di[0] += lo[0] * (h[0] + h[1]) / h[1];
    up[0] -= lo[0] * h[0] / h[1];
    // m_{n-1} = ((h_{n-2}+h_{n-3}) m_{n-2} - h_{n-2} m_{n-3}) / h_{n-3}
    const double ha = h[n - 3], hb = h[n - 2];
    di[k - 1] += up[k - 1] * (ha + hb) / ha;
    lo[k - 1] -= up[k - 1] * hb / ha;
    if (k == 1) {
        m_[1] = rhs[0] / di[0];
    } else {
        for (std::size_t r = 1; r < k; ++r) {
            const double w = lo[r] / di[r - 1];
            di[r] -= w * up[r - 1];
            rhs[r] -= w * rhs[r - 1];
        }
        m_[k] = rhs[k - 1] / di[k - 1];
        for (std::size_t r = k - 1; r-- > 0;) m_[r + 1] = (rhs[r] - up[r] * m_[r + 2]) / di[r];
    }
    m_[0] = ((h[0] + h[1]) * m_[1] - h[0] * m_[2]) / h[1];
    m_[n - 1] = ((ha + hb) * m_[n - 2] - hb * m_[n - 3]) / ha;
}

double CubicSpline::operator()(double q) const {
    const std::size_t n = x_.size();
    auto it = std::upper_bound(x_.begin(), x_.end(), q);
    std::ptrdiff_t j = std::clamp<std::ptrdiff_t>((it - x_.begin()) - 1, 0, static_cast<std::ptrdiff_t>(n) - 2);
    const double h = x_[j + 1] - x_[j];
    const double a = (x_[j + 1] - q) / h;
    const double b = (q - x_[j]) / h;
    return a * y_[j] + b * y_[j + 1] + ((a * a * a - a) * m_[j] + (b * b * b - b) * m_[j + 1]) * h * h / 6.0;
}

std::vector<double> CubicSpline::evaluate(std::span<const double> queries) const {
    const auto nq = static_cast<std::ptrdiff_t>(queries.size());
    std::vector<double> out(nq);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < nq; ++i) out[i] = (*this)(queries[i]);
    return out;
}

namespace reference {

Derivatives derivatives(std::span<const double> f, double h) {
    check_series(f, h, 6);
    const std::size_t n = f.size();
    Derivatives d{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
    // Weights are rebuilt from scratch at every node instead of using the
    // cached tables, so this path checks the table construction too.
    for (std::size_t i = 0; i < n; ++i) {
        for (int order = 1; order <= 3; ++order) {
            const bool interior = i >= 2 && i + 2 < n;
            const int m = interior ? kCentralPoints[order] : kOneSidedPoints[order];
            std::ptrdiff_t first = interior ? -m / 2 : (i < 2 ? -static_cast<std::ptrdiff_t>(i)
                                                              : -(m - 1 - static_cast<std::ptrdiff_t>(n - 1 - i)));
            std::vector<double> off(m);
            for (int k = 0; k < m; ++k) off[k] = static_cast<double>(first + k);
            const auto w = fd_weights(off, order);
            double acc = 0.0;
            for (int k = 0; k < m; ++k) acc += w[k] * f[i + first + k];
            const double v = acc / std::pow(h, order);
            (order == 1 ? d.d1 : order == 2 ? d.d2 : d.d3)[i] = v;
        }
    }
    return d;
}

std::vector<double> cumulative_integral(std::span<const double> f, double h, double base) {
    check_series(f, h, 4);
    std::vector<double> out(f.size());
    out[0] = base;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) out[i + 1] = out[i] + cell_integral(f, i, h);
    return out;
}

std::vector<double> interpolate(std::span<const double> nodes, std::span<const double> values,
                                std::span<const double> queries, std::size_t order) {
    check_interp(nodes, values, order);
    const std::size_t n = nodes.size();
    std::vector<double> out(queries.size());
    std::vector<double> p(order);
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        const double q = queries[qi];
        // Linear scan for the interval, then Neville's scheme.
        std::size_t j = 0;
        while (j + 2 < n && nodes[j + 1] <= q) ++j;
        std::ptrdiff_t s = static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(order) / 2 + 1;
        s = std::clamp<std::ptrdiff_t>(s, 0, static_cast<std::ptrdiff_t>(n - order));
        for (std::size_t k = 0; k < order; ++k) p[k] = values[s + k];
        for (std::size_t level = 1; level < order; ++level)
            for (std::size_t k = 0; k + level < order; ++k) {
                const double xa = nodes[s + k];
                const double xb = nodes[s + k + level];
                p[k] = ((q - xb) * p[k] + (xa - q) * p[k + 1]) / (xa - xb);
            }
        out[qi] = p[0];
    }
    return out;
}

std::vector<double> cubic_spline_evaluate(std::span<const double> nodes, std::span<const double> values,
                                          std::span<const double> queries) {
    // Dense Gaussian elimination on the full (n x n) not-a-knot system.
    const std::size_t n = nodes.size();
    if (n != values.size() || n < 4) fail(ErrorCode::InvalidInput, "spline: bad input");
    std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
    {
        const double h0 = nodes[1] - nodes[0], h1 = nodes[2] - nodes[1];
        a[0][0] = h1;
        a[0][1] = -(h0 + h1);
        a[0][2] = h0;
        const double ha = nodes[n - 2] - nodes[n - 3], hb = nodes[n - 1] - nodes[n - 2];
        a[n - 1][n - 3] = hb;
        a[n - 1][n - 2] = -(ha + hb);
        a[n - 1][n - 1] = ha;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = nodes[i] - nodes[i - 1];
        const double h1 = nodes[i + 1] - nodes[i];
        a[i][i - 1] = h0 / 6.0;
        a[i][i] = (h0 + h1) / 3.0;
        a[i][i + 1] = h1 / 6.0;
        a[i][n] = (values[i + 1] - values[i]) / h1 - (values[i] - values[i - 1]) / h0;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        std::swap(a[c], a[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double fct = a[r][c] / a[c][c];
            if (fct == 0.0) continue;
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= fct * a[c][k];
        }
    }
    std::vector<double> m(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = a[i][n];
        for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * m[k];
        m[i] = acc / a[i][i];
    }
    std::vector<double> out(queries.size());
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        const double q = queries[qi];
        std::size_t j = 0;
        while (j + 2 < n && nodes[j + 1] <= q) ++j;
        const double h = nodes[j + 1] - nodes[j];
        const double t0 = (nodes[j + 1] - q) / h;
        const double t1 = (q - nodes[j]) / h;
        out[qi] = t0 * values[j] + t1 * values[j + 1] +
                  ((t0 * t0 * t0 - t0) * m[j] + (t1 * t1 * t1 - t1) * m[j + 1]) * h * h / 6.0;
    }
    return out;
}

}  // namespace reference

}  // namespace aesthetica::kernels
