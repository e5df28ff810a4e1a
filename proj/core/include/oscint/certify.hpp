// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_CERTIFY_HPP
#define OSCINT_CERTIFY_HPP

#include <complex>
#include <utility>
#include <vector>

#include "oscint/kernel.hpp"
#include "oscint/multipoly.hpp"
#include "oscint/oscquad.hpp"

namespace oscint {

/// Terms of one degree-halving level, constants set to 1 throughout.
struct CertificateLevel {
    int level_degree = 0;     // current power-of-two degree D
    bool skipped = false;     // no part of index > D/2; nothing to do
    double scale = 1.0;       // dilation applied so max_{D/2<j<=D} m_j = 1
    int j0 = 0;               // index attaining the normalized maximum
    double i1_tail = 0.0;     // sum_{D/2<j<=D} m_j/j * ||Omega||_1
    double vdc_term = 0.0;    // measured |osc integral| over {|d_r P| > D}
    double sublevel_term = 0.0;  // exact log-measure integral over {|d_r P| <= D}
    double log_expr_term = 0.0;  // (1/D) int log+(D / max j|P_j|) |Omega|
    double polweight_part = 0.0;
    double llogl_part = 0.0;
    double young_max_defect = 0.0;  // worst pointwise Young slack violation

    double sum() const {
        return skipped ? 0.0 : i1_tail + vdc_term + sublevel_term + polweight_part + llogl_part;
    }
};

struct Certificate {
    int dim = 1;
    int source_degree = 0;
    int padded_degree = 0;  // next power of two
    std::vector<CertificateLevel> levels;
    double base_c1 = 0.0;
    double total_bracket = 0.0;
    Complex measured{0.0, 0.0};  // |In| when measurement was requested
    double measured_abs = 0.0;
    double ratio = 0.0;  // measured_abs / total_bracket
    bool measured_valid = false;
};

/// Dilate r -> scale * r so that max over d/2 < j <= d of m_j equals one.
/// level_degree defaults to the decomposition degree. Throws
/// DegenerateTopHalf when every such m_j vanishes.
std::pair<HomogeneousParts, double> normalize_dilation(const HomogeneousParts& h,
                                                       int level_degree = -1,
                                                       int* j0_out = nullptr);

/// sum_{d/2 < j <= d} m_j / j * ||Omega||_1 for a normalized decomposition.
double i1_term(const HomogeneousParts& h, const KernelSpec& omega, int level_degree = -1);

/// Numerical left side of the first-split comparison:
/// int_S int_0^1 |e^{iP} - e^{iQ}| dr/r |Omega| dsigma, Q the low half.
double i1_exact_lhs(const HomogeneousParts& h, const KernelSpec& omega, int level_degree = -1,
                    int grid_order = 0);

struct I2Split {
    double vdc_part = 0.0;
    double sublevel_part = 0.0;
};

/// Per-direction split of the outer integral at threshold D = level degree:
/// measured oscillatory integral over {r in [1,R]: |d_r P| > D} plus the
/// exact logarithmic measure of the complement, both weighted by |Omega|.
/// R = +infinity uses the convergent tail and the unbounded sublevel set.
I2Split i2_split(const HomogeneousParts& h, const KernelSpec& omega,
                 double R = std::numeric_limits<double>::infinity(), int level_degree = -1,
                 int grid_order = 0, int threads = 0);

struct YoungTerms {
    double polweight_part = 0.0;
    double llogl_part = 0.0;
    double max_defect = 0.0;  // max over nodes of |Omega| log s - (s + |Omega| log+|Omega|)
};

/// Splits the logarithmic sphere integral via the pointwise inequality
/// w log s <= s + w log+ w (s >= 1, w >= 0), verified on the grid.
YoungTerms young_decompose(const HomogeneousParts& h, const KernelSpec& omega, int j0,
                           int grid_order = 0);

/// Base case: ||Omega||_1 + int log(sup|P|^1/2 / |P(x')|^1/2) |Omega| dsigma
/// for a linear form. Throws ZeroLinearForm on the zero form.
double c1_base(const MultiPoly& p_linear, const KernelSpec& omega);

struct CertificateOptions {
    bool measure = true;          // also evaluate |In| and the ratio
    int grid_order = 0;           // 0: from the level degree
    int threads = 0;
    InOptions in_options{};
};

/// Full degree-halving pipeline: pad to 2^m, then per level normalize,
/// accumulate the split terms, and recurse on the low half down to the
/// linear base case.
Certificate certificate(const MultiPoly& p, const KernelSpec& omega,
                        const CertificateOptions& opt = {});

}  // namespace oscint

#endif
