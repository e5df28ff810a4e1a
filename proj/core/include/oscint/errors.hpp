// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_ERRORS_HPP
#define OSCINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oscint {

/// Base class for all violations of an operation's stated hypotheses.
/// The CLI maps these to exit code 2; everything else is an internal error.
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroPolynomial : HypothesisError {
    ZeroPolynomial() : HypothesisError("operation requires a nonzero polynomial") {}
};

struct ConstantPolynomial : HypothesisError {
    explicit ConstantPolynomial(const std::string& ctx)
        : HypothesisError("polynomial is constant: " + ctx) {}
};

struct UnboundedSet : HypothesisError {
    UnboundedSet() : HypothesisError("sublevel set is unbounded; logarithmic measure is infinite") {}
};

struct InfiniteMeasure : HypothesisError {
    InfiniteMeasure() : HypothesisError("interval union has an unbounded component") {}
};

struct ZeroTopHalf : HypothesisError {
    ZeroTopHalf()
        : HypothesisError("all coefficients of index > d/2 vanish; "
                          "re-run with the effective degree") {}
};

struct ZeroTail : HypothesisError {
    ZeroTail() : HypothesisError("all coefficients of index >= r vanish") {}
};

struct NonconvergedPanel : std::runtime_error {
    double panel_lo, panel_hi;
    NonconvergedPanel(double lo, double hi)
        : std::runtime_error("quadrature panel [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "] did not converge"),
          panel_lo(lo), panel_hi(hi) {}
};

struct StationaryTail : std::runtime_error {
    StationaryTail() : std::runtime_error("oscillatory tail failed to converge") {}
};

struct DegenerateRays : HypothesisError {
    explicit DegenerateRays(const std::string& what) : HypothesisError(what) {}
};

struct NotOdd : HypothesisError {
    NotOdd() : HypothesisError("kernel is not odd on the sphere grid") {}
};

struct HypothesisViolated : HypothesisError {
    explicit HypothesisViolated(const std::string& what) : HypothesisError(what) {}
};

struct DuplicateNodes : HypothesisError {
    DuplicateNodes() : HypothesisError("interpolation nodes must be strictly increasing") {}
};

struct DegenerateTopHalf : HypothesisError {
    DegenerateTopHalf()
        : HypothesisError("no homogeneous part of index > d/2 has positive sup norm") {}
};

struct ZeroLinearForm : HypothesisError {
    ZeroLinearForm() : HypothesisError("linear form is identically zero") {}
};

}  // namespace oscint

#endif
