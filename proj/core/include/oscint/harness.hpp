// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_HARNESS_HPP
#define OSCINT_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "oscint/kernel.hpp"
#include "oscint/multipoly.hpp"
#include "oscint/oscquad.hpp"
#include "oscint/poly.hpp"
#include "oscint/sublevel.hpp"

namespace oscint {

/// splitmix64-based generator: identical stream on every platform, cheap to
/// fork into per-sample substreams keyed by (seed, cell, index).
class Rng {
  public:
    explicit Rng(uint64_t seed) : s_(seed) {}
    static Rng substream(uint64_t seed, uint64_t cell, uint64_t index);

    uint64_t next();
    /// uniform in [0, 1)
    double uniform();
    /// uniform in [a, b)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    /// log-uniform in [a, b], a > 0
    double log_uniform(double a, double b);
    int uniform_int(int lo, int hi);  // inclusive

  private:
    uint64_t s_;
};

enum class CoeffDist { UniformUnit, UnitTopHalf };

/// Random polynomial of degree exactly d with zero constant term,
/// coefficients uniform in [-1,1]; UnitTopHalf dilates so the top-half
/// sup-norm maximum is 1.
MultiPoly random_poly(int d, int n, Rng& rng, CoeffDist dist = CoeffDist::UnitTopHalf);

/// Dilate the argument so that max_{d/2<j<=d} m_j = 1.
MultiPoly normalize_top_half(const MultiPoly& p);

struct SearchResult {
    MultiPoly best{1};
    double value = 0.0;
    long evaluations = 0;
};

/// Multistart derivative-free maximization of |In(P, Omega)| over coefficient
/// vectors confined to [-1,1] (top half renormalized before evaluation).
/// Deterministic for a fixed seed; the returned value is the maximum over
/// every objective evaluation performed, structured starts included.
/// extra_starts are evaluated as candidates (and used as simplex starts when
/// they live on the univariate coefficient layout), so seeding with a
/// smaller-degree winner makes the result monotone by feasibility nesting.
SearchResult search_extremal(int d, int n, const KernelSpec& omega, int budget, uint64_t seed,
                             const InOptions& eval = {}, int threads = 0,
                             const std::vector<MultiPoly>& extra_starts = {});

struct GrowthRow {
    int d = 0;
    int n = 1;
    std::string kernel_id;
    int samples = 0;
    double sup_abs_integral = 0.0;
    double empirical_c = 0.0;  // sup / (log(d+1) (||Omega||_LlogL + 1))
};

struct GrowthFit {
    double slope = 0.0;      // sup ~ intercept + slope * log d
    double intercept = 0.0;
    double r2 = 0.0;
    double power_slope = 0.0;  // log sup ~ ... + power_slope * log d (comparison only)
    double power_r2 = 0.0;
};

/// Per degree: sup of |In| over `samples` random polynomials plus the
/// extremal search, pooled with the best candidates found at smaller
/// degrees in the list (zero-padded; feasible by nesting). Rows do not
/// depend on the order of `degrees`.
std::vector<GrowthRow> growth_study(std::vector<int> degrees, int n, const KernelSpec& omega,
                                    int samples, uint64_t seed, int search_budget = 0,
                                    int threads = 0, GrowthFit* fit = nullptr,
                                    const InOptions& eval = {});

/// Least-squares fit y ~ a + b x with coefficient of determination.
GrowthFit fit_against_log(const std::vector<GrowthRow>& rows);

std::string growth_csv(const std::vector<GrowthRow>& rows);

// --- sublevel experiment suite -------------------------------------------

struct SublevelCase {
    Poly p;
    double alpha = 1.0;
    bool structured = false;  // deterministic near-extremal probe
};

/// Deterministic suite: a fixed block of structured probes (Chebyshev-style
/// polynomials hugging the axis over [1, X]) followed by random cases with
/// degree <= max_degree, coefficients in [-10, 10], alpha log-uniform in
/// [1e-6, 1e3]. The random block is an iid stream: extending `count` keeps
/// earlier cases unchanged.
std::vector<SublevelCase> sublevel_cases(int count, int max_degree, uint64_t seed);

struct SublevelRow {
    int degree = 0;
    double alpha = 0.0;
    double M = 0.0;
    double exact_log_measure = 0.0;
    double bracket = 0.0;
    double ratio = 0.0;
    MinBranch branch = MinBranch::Tie;
};

SublevelRow sublevel_row(const SublevelCase& c);
std::string sublevel_csv(const std::vector<SublevelRow>& rows);

/// "%.17g" formatting used by every CSV writer (byte-reproducible output).
std::string fmt_double(double v);

}  // namespace oscint

#endif
