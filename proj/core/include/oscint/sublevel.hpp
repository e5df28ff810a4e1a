// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_SUBLEVEL_HPP
#define OSCINT_SUBLEVEL_HPP

#include <limits>
#include <string>

#include "oscint/interval_union.hpp"
#include "oscint/multipoly.hpp"
#include "oscint/poly.hpp"

namespace oscint {

/// Domain of a sublevel computation: [lo, hi] or [lo, +infinity).
struct Domain {
    double lo = 1.0;
    double hi = std::numeric_limits<double>::infinity();
    bool unbounded = true;

    static Domain ray(double lo = 1.0) { return {lo, std::numeric_limits<double>::infinity(), true}; }
    static Domain interval(double lo, double hi) { return {lo, hi, false}; }
};

/// The exact set {x in domain : |p(x)| <= alpha} as a union of closed
/// intervals whose endpoints are certified roots of p -+ alpha. Boundary
/// touch points appear as degenerate intervals. Throws UnboundedSet when p
/// is constant with |p| <= alpha on an unbounded domain.
IntervalUnion sublevel_set(const Poly& p, double alpha, const Domain& domain = Domain::ray());

enum class MinBranch { Power, Log, Tie };

inline const char* to_string(MinBranch b) {
    switch (b) {
        case MinBranch::Power: return "power";
        case MinBranch::Log: return "log";
        default: return "tie";
    }
}

/// A bound expression evaluated WITHOUT its absolute constant, together
/// with the inputs it was formed from.
struct BoundBracket {
    double value = 0.0;
    std::string formula;  // "log_lemma" | "vinogradov" | "genphase" | "carbery_wright"
    double alpha = 0.0;
    double M = 0.0;       // M, M_r, or L^q norm depending on the formula
    double R = 0.0;
    double q = 0.0;
    int d = 0;
    int r = 0;
    int k = 0;
    int n = 0;
    MinBranch branch = MinBranch::Tie;  // which branch of a min was active
};

/// min((alpha/M)^(1/d), 1 + (1/d) log+ (alpha/M)).
/// M is the top-half coefficient maximum; throws ZeroTopHalf when M == 0.
BoundBracket log_lemma_bracket(double alpha, double M, int d);

/// R^(1 - r/d) * (alpha / M_r)^(1/d); throws ZeroTail when M_r == 0.
BoundBracket vinogradov_bracket(double alpha, double M_r, int r, int d, double R);

/// k * (alpha / M)^(1/k) for a C^k phase with |phi^(k)| >= M.
BoundBracket genphase_bracket(int k, double M, double alpha);

/// min(q d, n) * alpha^(1/d) * lq_norm^(-1/d); q may be +infinity.
BoundBracket carbery_wright_bracket(double q, int d, int n, double alpha, double lq_norm);

/// Volume-1 convex bodies used for the L^q norms.
enum class Body { UnitCube, UnitBall };

/// (integral over the body of |p|^q)^(1/q); q = +infinity gives the sup.
/// Even integer q uses exact tensor Gauss quadrature; otherwise adaptive
/// quadrature with root-aware splitting.
double lq_norm_on_body(const MultiPoly& p, double q, Body body = Body::UnitCube);

/// Lebesgue measure of {x in body : |p(x)| <= alpha} on a deterministic
/// grid of about `samples` points (exact root-based measure for n = 1).
double body_sublevel_measure(const MultiPoly& p, double alpha, Body body, long samples);

}  // namespace oscint

#endif
