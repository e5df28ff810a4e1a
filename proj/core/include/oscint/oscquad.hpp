// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_OSCQUAD_HPP
#define OSCINT_OSCQUAD_HPP

#include <complex>
#include <vector>

#include "oscint/kernel.hpp"
#include "oscint/multipoly.hpp"
#include "oscint/poly.hpp"

namespace oscint {

using Complex = std::complex<double>;

/// Result of a principal-value evaluation: the limit over eps -> 0 and the
/// increasing cutoff ladder, with a Cauchy-difference error estimate. The
/// eps limit is closed analytically (the near-origin integrand is bounded
/// after symmetrization/regularization), recorded as the single entry 0.
struct PvEstimate {
    Complex value{0.0, 0.0};
    double abs_error_estimate = 0.0;
    std::vector<double> epsilons_used{0.0};
    std::vector<double> radii_used;
    bool converged = true;
};

enum class SegmentWeight { InverseX, One };

/// integral over [a, b] of e^{i p(x)} w(x) dx by phase-sized adaptive panels.
/// tol is absolute per unit (log-)length. Throws NonconvergedPanel when the
/// subdivision depth cap is hit.
Complex osc_segment(const Poly& p, double a, double b, SegmentWeight w, double tol = 1e-10);

/// p.v. integral over R of e^{i p(x)} dx/x. Even phases give exactly 0.
/// fast_tail locates the last stationary point by a sign scan instead of
/// certified isolation (used by bulk experiment sweeps).
PvEstimate pv_1d(const Poly& p, double tail_tol = 1e-7, bool fast_tail = false);

/// Per-direction regularized radial value
///   F = integral_0^1 (e^{i q(r)} - 1) dr/r + integral_1^R e^{i q(r)} dr/r,
/// where q has zero constant term. R = +infinity extrapolates the tail by
/// phase-aligned oscillation averaging.
Complex radial_regularized(const Poly& p_ray, double R, double tol = 1e-10);

struct InOptions {
    double sphere_tol_factor = 1e-6;  // times (||Omega||_1 + 1)
    double tail_tol = 1e-7;
    int initial_order = 0;            // 0: from the polynomial degree
    int max_order = 8192;
    int threads = 0;                  // 0: hardware concurrency
    bool fixed_order = false;         // use initial_order without refinement
    bool fast_tail = false;           // scan-based stationary point location
};

/// I_n(P) = p.v. integral over R^n of e^{iP(x)} Omega(x/|x|)/|x|^n dx,
/// n in {1,2,3}. Throws DegenerateRays when grid nodes with identically
/// zero restricted phase carry kernel weight.
PvEstimate In(const MultiPoly& p, const KernelSpec& omega, const InOptions& opt = {});

/// Odd-kernel path: antipodal pairing reduces I_n to the one-dimensional
/// principal value per direction. Throws NotOdd unless omega is odd.
PvEstimate remark_odd(const MultiPoly& p, const KernelSpec& omega, const InOptions& opt = {});

/// integral over [eps, R] of (e^{iar} - e^{ibr}) dr/r, the degree-one
/// two-frequency base-case integrand.
Complex c1_two_frequency(double a, double b, double eps, double R, double tol = 1e-10);

/// Convergent tail lim_{R->inf} of integral over [from, R] of e^{i q(r)} dr/r
/// for a nonconstant phase q, by phase-aligned oscillation averaging.
Complex osc_tail(const Poly& q, double from, double tol = 1e-9);

}  // namespace oscint

#endif
