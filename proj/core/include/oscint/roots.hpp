// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_ROOTS_HPP
#define OSCINT_ROOTS_HPP

#include <optional>
#include <vector>

#include "oscint/poly.hpp"

namespace oscint {

/// Enclosure of one distinct real root: lo <= root <= hi. Width is at most
/// the requested tolerance except for root clusters tighter than a few ulps,
/// which are reported as a single enclosure.
struct RootEnclosure {
    double lo, hi;
    double mid() const { return 0.5 * (lo + hi); }
};

struct RootIsolationOptions {
    double width_tol = 1e-12;  // scaled by max(1, |root|)
    double shift = 0.0;        // isolate roots of p(x) - shift
};

/// Certified isolation of the distinct real roots of p(x) - shift on the
/// closed interval [a, b]. Root counting is Sturm-sequence based in exact
/// integer arithmetic (doubles are dyadic rationals); sign evaluations use a
/// rounding-error-certified double fast path with an exact fallback.
/// Throws ZeroPolynomial when p - shift is identically zero.
std::vector<RootEnclosure> isolate_roots(const Poly& p, double a, double b,
                                         const RootIsolationOptions& opt = {});

/// Same on [a, +infinity); the search is first capped by a Cauchy root bound.
std::vector<RootEnclosure> isolate_roots_unbounded(const Poly& p, double a,
                                                   const RootIsolationOptions& opt = {});

/// Exact sign of p(x) - shift at a double point: -1, 0, or +1.
int exact_sign(const Poly& p, double x, double shift = 0.0);

/// Number of distinct real roots of p - shift in (a, b], certified.
int count_roots(const Poly& p, double a, double b, double shift = 0.0);

}  // namespace oscint

#endif
