// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_BOUNDS_HPP
#define OSCINT_BOUNDS_HPP

#include <vector>

#include "oscint/lagrange.hpp"
#include "oscint/multipoly.hpp"
#include "oscint/poly.hpp"

namespace oscint {

/// Oscillation-decay report: |integral of e^{i lambda phi}| against N/|lambda|.
struct VdcReport {
    double lambda = 0.0;
    double integral_modulus = 0.0;
    int monotonicity_changes = 1;  // N: sign changes of phi'' inside (a,b), plus 1
    double ratio = 0.0;            // integral_modulus * |lambda| / N
};

/// Verifies |phase'| >= 1 on [a, b] (certified via critical points of phase'),
/// then measures the oscillatory integral. Throws HypothesisViolated.
VdcReport vdc_check(const Poly& phase, double lambda, double a, double b);

/// integral over S^{n-1} of (sup|p| / |p(x')|)^(1/2k) for homogeneous p of
/// degree k, by singularity-graded quadrature toward the zero set.
double polweight_integral(const MultiPoly& p, int n);

/// Geometric node system: the unique j with t^{j-1} < 2t^d/(t^{d+1}+1) <= t^j,
/// and the derived quantities in (0,1).
struct NodeSystem {
    double t = 0.0;
    int d = 0;
    int j_star = 0;
    double A = 0.0;      // (t^d - 1)/(t^d + 1)
    double B = 0.0;      // t^j - 1
    double Gamma = 0.0;  // 1 - t^-(d-j)
};

NodeSystem node_system(double t, int d);

/// Scan implementation shared with the exact-rational path: returns the
/// number of indices j in [0, d] satisfying the sandwich, and the last one.
template <class T>
std::pair<int, int> node_index_scan(const T& t, int d) {
    // q = 2 t^d / (t^{d+1} + 1)
    T td(1);
    for (int i = 0; i < d; ++i) td = td * t;
    const T q_num = T(2) * td;
    const T q_den = td * t + T(1);
    // compare t^{j-1} < q <= t^j working with q = q_num/q_den cross-multiplied
    int count = 0, found = -1;
    T tj(1);
    for (int j = 0; j <= d; ++j) {
        const T tj_prev = j == 0 ? T(1) / t : tj / t;  // t^{j-1}
        // tj_prev < q  and  q <= tj
        const bool lower = tj_prev * q_den < q_num;
        const bool upper = q_num <= tj * q_den;
        if (lower && upper) {
            ++count;
            found = j;
        }
        tj = tj * t;
    }
    return {count, found};
}

/// Right side of the coefficient bound at the minimizing node index:
///   alpha (d+1-k) sigma_k(1, 1/t, ..., 1/t^d)
///   / [(t^j - 1)...(t - 1) (1 - 1/t)...(1 - 1/t^{d-j})].
/// Requires d/2 < k <= d and t > 1; templated so exact rationals can be used.
template <class T>
T eq32_bracket_t(const T& alpha, int d, int k, const T& t) {
    if (!(2 * k > d && k <= d)) throw std::invalid_argument("need d/2 < k <= d");
    const auto [count, j] = node_index_scan(t, d);
    if (count != 1) throw std::logic_error("node index is not unique");
    std::vector<T> inv_powers;
    inv_powers.reserve(static_cast<size_t>(d) + 1);
    T ip(1);
    const T inv_t = T(1) / t;
    for (int i = 0; i <= d; ++i) {
        inv_powers.push_back(ip);
        ip = ip * inv_t;
    }
    const T sigma = elementary_symmetric(inv_powers, k);
    T denom(1);
    T tp(1);
    for (int i = 1; i <= j; ++i) {
        tp = tp * t;
        denom = denom * (tp - T(1));
    }
    T itp(1);
    for (int i = 1; i <= d - j; ++i) {
        itp = itp * inv_t;
        denom = denom * (T(1) - itp);
    }
    return alpha * T(d + 1 - k) * sigma / denom;
}

inline double eq32_bracket(double alpha, int d, int k, double t) {
    if (!(t > 1.0)) throw std::invalid_argument("need t > 1");
    if (!(alpha >= 0.0)) throw std::invalid_argument("need alpha >= 0");
    if (alpha == 0.0) return 0.0;
    return eq32_bracket_t<double>(alpha, d, k, t);
}

}  // namespace oscint

#endif
