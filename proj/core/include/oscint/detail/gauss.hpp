// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_DETAIL_GAUSS_HPP
#define OSCINT_DETAIL_GAUSS_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace oscint::detail {

// 15-point Gauss-Legendre rule on [-1, 1].
inline constexpr double kGL15X[15] = {
    -0.9879925180204854, -0.9372733924007059, -0.8482065834104272, -0.7244177313601700,
    -0.5709721726085388, -0.3941513470775634, -0.2011940939974345, 0.0,
    0.2011940939974345,  0.3941513470775634,  0.5709721726085388,  0.7244177313601700,
    0.8482065834104272,  0.9372733924007059,  0.9879925180204854};
inline constexpr double kGL15W[15] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719, 0.1395706779261543,
    0.1662692058169939, 0.1861610000155622, 0.1984314853271116, 0.2025782419255613,
    0.1984314853271116, 0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

template <class F>
auto gl15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    auto s = f(c + h * kGL15X[0]) * (h * kGL15W[0]);
    for (int i = 1; i < 15; ++i) s += f(c + h * kGL15X[i]) * (h * kGL15W[i]);
    return s;
}

// Two-level adaptive refinement of the GL15 panel value. The tolerance is
// floored at the rounding noise of the panel values so unreachable requests
// saturate instead of recursing to the depth cap.
template <class F, class V>
void adaptive_gl15(F& f, double a, double b, V whole, double tol, int depth, V& acc,
                   bool& converged) {
    const double mid = 0.5 * (a + b);
    const V left = gl15(f, a, mid), right = gl15(f, mid, b);
    const V two = left + right;
    const double noise = 2e-15 * (std::abs(left) + std::abs(right)) + 1e-300;
    const double eff = std::max(tol, noise);
    if (std::abs(two - whole) <= eff || depth <= 0) {
        acc += two;
        if (depth <= 0 && std::abs(two - whole) > eff) converged = false;
        return;
    }
    adaptive_gl15(f, a, mid, left, 0.5 * eff, depth - 1, acc, converged);
    adaptive_gl15(f, mid, b, right, 0.5 * eff, depth - 1, acc, converged);
}

/// Adaptive integral of f over [a, b] to the absolute tolerance.
template <class F>
auto integrate(F&& f, double a, double b, double tol_abs, int max_depth = 48,
               bool* ok = nullptr) {
    using V = decltype(f(a));
    V acc{};
    bool converged = true;
    if (a != b) adaptive_gl15(f, a, b, gl15(f, a, b), tol_abs, max_depth, acc, converged);
    if (ok) *ok = converged;
    return acc;
}

/// Nodes and weights of the m-point Gauss-Legendre rule on [-1, 1].
inline void legendre_rule(int m, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<size_t>(m), 0.0);
    w.assign(static_cast<size_t>(m), 0.0);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (m + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= m; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = m * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / pp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[static_cast<size_t>(i)] = -t;
        x[static_cast<size_t>(m - 1 - i)] = t;
        const double wi = 2.0 / ((1.0 - t * t) * pp * pp);
        w[static_cast<size_t>(i)] = wi;
        w[static_cast<size_t>(m - 1 - i)] = wi;
    }
    if (m % 2 == 1) x[static_cast<size_t>(m / 2)] = 0.0;
}

}  // namespace oscint::detail

#endif
