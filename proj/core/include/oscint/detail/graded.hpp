// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_DETAIL_GRADED_HPP
#define OSCINT_DETAIL_GRADED_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "oscint/detail/gauss.hpp"

namespace oscint::detail {

// Integral over [l, r] of a nonnegative integrand with an integrable
// singularity at the `left` end: geometric panels toward the endpoint,
// GL15 per panel, geometric-tail extrapolation of the truncated sliver.
template <class F>
double graded_one_sided(F& f, double l, double r, bool singular_at_left) {
    const double len = r - l;
    if (!(len > 0.0)) return 0.0;
    double total = 0.0;
    double prev_panel = -1.0, last_panel = -1.0;
    double frac = 1.0;
    for (int j = 0; j < 56; ++j) {
        const double next = frac * 0.5;
        const double lo = singular_at_left ? l + next * len : r - frac * len;
        const double hi = singular_at_left ? l + frac * len : r - next * len;
        const double panel = gl15(f, lo, hi);
        total += panel;
        prev_panel = last_panel;
        last_panel = panel;
        frac = next;
        if (frac * len < 1e-16 * std::max(1.0, std::abs(l) + std::abs(r))) break;
        if (j > 6 && last_panel < 1e-16 * total) break;
    }
    // extrapolate the remaining sliver assuming geometric panel decay
    if (prev_panel > 0.0 && last_panel > 0.0 && last_panel < prev_panel) {
        const double rho = std::min(last_panel / prev_panel, 0.9);
        total += last_panel * rho / (1.0 - rho);
    }
    return total;
}

/// Integral over [a, b] of a nonnegative integrand with integrable
/// singularities at the given points (interior points split the range).
template <class F>
double graded_integral(F&& f, double a, double b, std::vector<double> sing) {
    std::sort(sing.begin(), sing.end());
    std::vector<double> cuts{a};
    for (double s : sing)
        if (s > a && s < b) cuts.push_back(s);
    cuts.push_back(b);
    auto near_sing = [&](double x) {
        for (double s : sing)
            if (std::abs(x - s) <= 1e-13 * std::max(1.0, std::abs(x))) return true;
        return false;
    };
    double total = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double l = cuts[i], r = cuts[i + 1];
        if (!(r > l)) continue;
        const bool sl = near_sing(l), sr = near_sing(r);
        const double mid = 0.5 * (l + r);
        if (sl && sr) {
            total += graded_one_sided(f, l, mid, true);
            total += graded_one_sided(f, mid, r, false);
        } else if (sl) {
            total += graded_one_sided(f, l, r, true);
        } else if (sr) {
            total += graded_one_sided(f, l, r, false);
        } else {
            total += integrate(f, l, r, 1e-11 * (r - l) + 1e-300, 30);
        }
    }
    return total;
}

}  // namespace oscint::detail

#endif
