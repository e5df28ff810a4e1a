// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_LAGRANGE_HPP
#define OSCINT_LAGRANGE_HPP

#include <vector>

#include "oscint/errors.hpp"
#include "oscint/poly.hpp"

namespace oscint {

/// l-th elementary symmetric function of the values, by incremental
/// expansion of prod (1 + v_i t). Works over double and exact rationals.
template <class T>
T elementary_symmetric(const std::vector<T>& values, int l) {
    const int n = static_cast<int>(values.size());
    if (l < 0 || l > n) throw std::invalid_argument("elementary_symmetric: 0 <= l <= n");
    std::vector<T> sigma(static_cast<size_t>(l) + 1, T(0));
    sigma[0] = T(1);
    int filled = 0;
    for (const T& v : values) {
        ++filled;
        const int top = std::min(filled, l);
        for (int k = top; k >= 1; --k)
            sigma[static_cast<size_t>(k)] = sigma[static_cast<size_t>(k)] +
                                            v * sigma[static_cast<size_t>(k - 1)];
    }
    return sigma[static_cast<size_t>(l)];
}

/// Coefficients of the unique interpolant of degree <= d through
/// (xs[j], ys[j]), via the elementary-symmetric expansion
///   b_k = sum_j ys[j] (-1)^{d-k} sigma_{d-k}(xs omitting xs[j])
///         / prod_{i != j} (xs[j] - xs[i]).
/// xs must be strictly increasing (throws DuplicateNodes).
template <class T>
std::vector<T> lagrange_coefficients(const std::vector<T>& xs, const std::vector<T>& ys) {
    const size_t n = xs.size();
    if (n == 0 || ys.size() != n) throw std::invalid_argument("need matching nonempty nodes");
    for (size_t i = 1; i < n; ++i)
        if (!(xs[i - 1] < xs[i])) throw DuplicateNodes{};
    const int d = static_cast<int>(n) - 1;
    std::vector<T> b(n, T(0));
    std::vector<T> others(n - 1, T(0));
    for (size_t j = 0; j < n; ++j) {
        others.clear();
        T denom(1);
        for (size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            others.push_back(xs[i]);
            denom = denom * (xs[j] - xs[i]);
        }
        const T w = ys[j] / denom;
        for (int k = 0; k <= d; ++k) {
            T term = w * elementary_symmetric(others, d - k);
            if ((d - k) % 2 == 1) term = -term;
            b[static_cast<size_t>(k)] = b[static_cast<size_t>(k)] + term;
        }
    }
    return b;
}

/// Double-precision convenience wrapper returning a Poly.
inline Poly lagrange_recover(const std::vector<double>& xs, const std::vector<double>& ys) {
    return Poly(lagrange_coefficients(xs, ys));
}

}  // namespace oscint

#endif
