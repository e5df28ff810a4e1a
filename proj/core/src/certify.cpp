// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#include "oscint/certify.hpp"

#include <algorithm>
#include <cmath>

#include "oscint/bounds.hpp"
#include "oscint/detail/gauss.hpp"
#include "oscint/detail/graded.hpp"
#include "oscint/errors.hpp"
#include "oscint/interval_union.hpp"
#include "oscint/parallel.hpp"
#include "oscint/roots.hpp"
#include "oscint/sphere_grid.hpp"
#include "oscint/sublevel.hpp"

namespace oscint {

namespace {

int default_order(int level_degree) { return std::max(24, 2 * level_degree + 8); }

double top_half_sup(const HomogeneousParts& h, int d, int* argmax) {
    double best = 0.0;
    int arg = 0;
    for (const auto& [j, m] : h.sup_norms) {
        if (j <= d / 2 || j > d) continue;
        if (m > best) {
            best = m;
            arg = j;
        }
    }
    if (argmax) *argmax = arg;
    return best;
}

}  // namespace

std::pair<HomogeneousParts, double> normalize_dilation(const HomogeneousParts& h,
                                                       int level_degree, int* j0_out) {
    const int d = level_degree < 0 ? h.degree : level_degree;
    // lambda = min over top-half j of m_j^{-1/j}; the argmin attains m_j = 1
    double lambda = 0.0;
    int j0 = 0;
    bool any = false;
    for (const auto& [j, m] : h.sup_norms) {
        if (j <= d / 2 || j > d || !(m > 0.0)) continue;
        const double cand = std::pow(m, -1.0 / j);
        if (!any || cand < lambda) {
            lambda = cand;
            j0 = j;
        }
        any = true;
    }
    if (!any) throw DegenerateTopHalf{};
    HomogeneousParts out;
    out.dim = h.dim;
    out.degree = h.degree;
    out.dropped_constant = h.dropped_constant;
    out.refine_rel_tol = h.refine_rel_tol;
    for (const auto& [j, part] : h.parts) {
        const double f = std::pow(lambda, j);
        out.parts.emplace(j, part * f);
        out.sup_norms[j] = h.sup_norms.at(j) * f;
    }
    out.sup_norms[j0] = 1.0;  // exact by construction
    if (j0_out) *j0_out = j0;
    return {std::move(out), lambda};
}

double i1_term(const HomogeneousParts& h, const KernelSpec& omega, int level_degree) {
    const int d = level_degree < 0 ? h.degree : level_degree;
    double s = 0.0;
    for (const auto& [j, m] : h.sup_norms)
        if (j > d / 2 && j <= d) s += m / static_cast<double>(j);
    return s * omega.l1_norm();
}

double i1_exact_lhs(const HomogeneousParts& h, const KernelSpec& omega, int level_degree,
                    int grid_order) {
    const int d = level_degree < 0 ? h.degree : level_degree;
    const int order = grid_order > 0 ? grid_order : default_order(d);
    const SphereGrid grid = SphereGrid::build(h.dim, order);
    const HomogeneousParts low = h.low_half(d);
    double total = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const double om = std::abs(omega(grid.nodes()[i]));
        if (om == 0.0) continue;
        const Poly full = radial_restriction(h, grid.nodes()[i]);
        const Poly q = low.parts.empty() ? Poly{} : radial_restriction(low, grid.nodes()[i]);
        const Poly diff = full - q;         // top-half part, vanishes to order > d/2
        const Poly diff_over_r = [&diff] {  // (P - Q)(r)/r is still a polynomial
            std::vector<double> c(diff.coeffs());
            if (c.size() > 1) c.erase(c.begin());
            return Poly(std::move(c));
        }();
        auto f = [&](double r) {
            // |e^{iP} - e^{iQ}| / r = 2 |sin((P-Q)/2)| / r
            const double half = 0.5 * diff(r);
            const double s = std::abs(diff_over_r(r));
            return std::abs(half) < 1e-8 ? s : 2.0 * std::abs(std::sin(half)) / r;
        };
        total += grid.weights()[i] * om * detail::integrate(f, 0.0, 1.0, 1e-11, 36);
    }
    return total;
}

I2Split i2_split(const HomogeneousParts& h, const KernelSpec& omega, double R,
                 int level_degree, int grid_order, int threads) {
    const int d = level_degree < 0 ? h.degree : level_degree;
    const double threshold = static_cast<double>(d);
    const int order = grid_order > 0 ? grid_order : default_order(d);
    const SphereGrid grid = SphereGrid::build(h.dim, order);
    const size_t n = grid.size();
    const bool to_infinity = std::isinf(R);

    std::vector<double> sub(n, 0.0), vdc(n, 0.0);
    std::vector<char> degenerate(n, 0);
    parallel_for(n, threads, [&](size_t i) {
        const double om = std::abs(omega(grid.nodes()[i]));
        if (om == 0.0) return;
        const Poly q = radial_restriction(h, grid.nodes()[i]);
        const Poly dq = q.derivative();
        if (dq.is_constant()) {
            // flat radial derivative: the low region is all or nothing
            if (std::abs(dq.coeff(0)) <= threshold) {
                if (to_infinity) {
                    degenerate[i] = 1;
                    return;
                }
                sub[i] = std::log(R);
                return;
            }
            vdc[i] = std::abs(to_infinity ? osc_tail(q, 1.0)
                                          : osc_segment(q, 1.0, R, SegmentWeight::InverseX));
            return;
        }
        const Domain dom = to_infinity ? Domain::ray() : Domain::interval(1.0, R);
        const IntervalUnion low = sublevel_set(dq, threshold, dom);
        sub[i] = low.log_measure();
        // oscillatory part over the complement
        const double cap = to_infinity
                               ? std::max(2.0, (low.empty() ? 1.0 : low.intervals().back().hi))
                               : R;
        Complex acc{0.0, 0.0};
        for (const auto& seg : low.complement_in(1.0, cap))
            if (seg.hi > seg.lo)
                acc += osc_segment(q, seg.lo, seg.hi, SegmentWeight::InverseX, 1e-9);
        if (to_infinity) acc += osc_tail(q, cap);
        vdc[i] = std::abs(acc);
    });

    size_t bad = 0;
    for (size_t i = 0; i < n; ++i)
        if (degenerate[i]) ++bad;
    if (bad > 0)
        throw DegenerateRays(std::to_string(bad) +
                             " grid nodes have flat radial derivative below the threshold");

    I2Split out;
    for (size_t i = 0; i < n; ++i) {
        const double om = std::abs(omega(grid.nodes()[i]));
        out.sublevel_part += grid.weights()[i] * om * sub[i];
        out.vdc_part += grid.weights()[i] * om * vdc[i];
    }
    return out;
}

YoungTerms young_decompose(const HomogeneousParts& h, const KernelSpec& omega, int j0,
                           int grid_order) {
    const auto it = h.parts.find(j0);
    if (it == h.parts.end()) throw std::invalid_argument("j0 does not index a part");
    YoungTerms out;
    out.polweight_part = polweight_integral(it->second, h.dim);
    out.llogl_part = omega.llogl_norm();
    const double m = h.sup_norms.at(j0);
    const int order = grid_order > 0 ? grid_order : default_order(h.degree);
    const SphereGrid grid = SphereGrid::build(h.dim, order);
    for (size_t i = 0; i < grid.size(); ++i) {
        const double w = std::abs(omega(grid.nodes()[i]));
        const double v = std::abs(it->second.eval(grid.nodes()[i]));
        if (v == 0.0) continue;  // measure-zero zero set; integrable log
        const double s = std::max(1.0, std::pow(m / v, 1.0 / (2.0 * j0)));
        const double lhs = w * std::log(s);
        const double rhs = s + w * std::max(0.0, std::log(w));
        out.max_defect = std::max(out.max_defect, lhs - rhs);
    }
    return out;
}

double c1_base(const MultiPoly& p_linear, const KernelSpec& omega) {
    if (p_linear.degree() > 1) throw std::invalid_argument("c1_base needs a linear form");
    Vec3 b{0.0, 0.0, 0.0};
    for (const MultiPoly::Term& t : p_linear.terms()) {
        if (t.total_degree() == 0) continue;
        for (int i = 0; i < 3; ++i)
            if (t.exp[static_cast<size_t>(i)] == 1) b[static_cast<size_t>(i)] += t.coef;
    }
    const double norm = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    if (!(norm > 0.0)) throw ZeroLinearForm{};
    const int n = p_linear.dim();
    if (n == 1) return omega.l1_norm();  // two-point sphere: |P| = sup there

    if (n == 2) {
        const double thb = std::atan2(b[1], b[0]);
        auto f = [&](double u) {
            const double th = thb + u;
            const double w = std::abs(omega({std::cos(th), std::sin(th), 0.0}));
            return 0.5 * w * std::log(1.0 / std::max(std::abs(std::cos(u)), 1e-300));
        };
        return omega.l1_norm() +
               detail::graded_integral(f, -M_PI, M_PI, {-0.5 * M_PI, 0.5 * M_PI});
    }
    // n == 3: rotate so the form is norm * z'
    const Vec3 w3{b[0] / norm, b[1] / norm, b[2] / norm};
    Vec3 u3 = std::abs(w3[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    // Gram-Schmidt
    double dot = u3[0] * w3[0] + u3[1] * w3[1] + u3[2] * w3[2];
    for (int i = 0; i < 3; ++i) u3[static_cast<size_t>(i)] -= dot * w3[static_cast<size_t>(i)];
    double un = std::sqrt(u3[0] * u3[0] + u3[1] * u3[1] + u3[2] * u3[2]);
    for (double& c : u3) c /= un;
    const Vec3 v3{w3[1] * u3[2] - w3[2] * u3[1], w3[2] * u3[0] - w3[0] * u3[2],
                  w3[0] * u3[1] - w3[1] * u3[0]};
    auto inner = [&](double z) {
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const int nt = 256;
        double s = 0.0;
        for (int j = 0; j < nt; ++j) {
            const double th = 2.0 * M_PI * j / nt;
            const Vec3 x{r * std::cos(th) * u3[0] + r * std::sin(th) * v3[0] + z * w3[0],
                         r * std::cos(th) * u3[1] + r * std::sin(th) * v3[1] + z * w3[1],
                         r * std::cos(th) * u3[2] + r * std::sin(th) * v3[2] + z * w3[2]};
            s += std::abs(omega(x));
        }
        return (s * 2.0 * M_PI / nt) * 0.5 * std::log(1.0 / std::max(std::abs(z), 1e-300));
    };
    return omega.l1_norm() + detail::graded_integral(inner, -1.0, 1.0, {0.0});
}

namespace {

int next_pow2(int d) {
    int p = 1;
    while (p < d) p *= 2;
    return p;
}

// the paper's displayed logarithmic expression, log+ convention
double log_expr_term(const HomogeneousParts& h, const KernelSpec& omega, int d, int order) {
    const SphereGrid grid = SphereGrid::build(h.dim, order);
    double total = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const double w = std::abs(omega(grid.nodes()[i]));
        if (w == 0.0) continue;
        double mx = 0.0;
        for (const auto& [j, part] : h.parts)
            if (j > d / 2 && j <= d)
                mx = std::max(mx, j * std::abs(part.eval(grid.nodes()[i])));
        if (mx <= 0.0) continue;  // degenerate direction, measure zero
        total += grid.weights()[i] * w * std::max(0.0, std::log(d / mx));
    }
    return total / d;
}

}  // namespace

Certificate certificate(const MultiPoly& p, const KernelSpec& omega,
                        const CertificateOptions& opt) {
    Certificate cert;
    cert.dim = p.dim();
    HomogeneousParts cur = homogeneous_parts(p);
    cert.source_degree = cur.degree;
    cert.padded_degree = next_pow2(cur.degree);

    for (int D = cert.padded_degree; D >= 2; D /= 2) {
        CertificateLevel level;
        level.level_degree = D;
        int j0 = 0;
        if (!(top_half_sup(cur, D, &j0) > 0.0)) {
            level.skipped = true;  // already in P_{D/2}
            cert.levels.push_back(level);
            continue;
        }
        auto [normalized, scale] = normalize_dilation(cur, D, &j0);
        level.scale = scale;
        level.j0 = j0;
        const int order = opt.grid_order > 0 ? opt.grid_order : default_order(D);
        level.i1_tail = i1_term(normalized, omega, D);
        const I2Split split = i2_split(normalized, omega,
                                       std::numeric_limits<double>::infinity(), D, order,
                                       opt.threads);
        level.vdc_term = split.vdc_part;
        level.sublevel_term = split.sublevel_part;
        level.log_expr_term = log_expr_term(normalized, omega, D, order);
        const YoungTerms young = young_decompose(normalized, omega, j0, order);
        level.polweight_part = young.polweight_part;
        level.llogl_part = young.llogl_part;
        level.young_max_defect = young.max_defect;
        cert.levels.push_back(level);
        cur = normalized.low_half(D);
        if (cur.parts.empty()) break;
    }

    // base case: whatever is left has degree <= 1
    if (!cur.parts.empty() && cur.parts.count(1) && top_half_sup(cur, 1, nullptr) > 0.0) {
        cert.base_c1 = c1_base(cur.parts.at(1), omega);
    } else {
        cert.base_c1 = 0.0;  // zero low part integrates to zero by zero mean
    }

    cert.total_bracket = cert.base_c1;
    for (const CertificateLevel& lv : cert.levels) cert.total_bracket += lv.sum();

    if (opt.measure) {
        const PvEstimate est = In(p, omega, opt.in_options);
        cert.measured = est.value;
        cert.measured_abs = std::abs(est.value);
        cert.measured_valid = true;
        cert.ratio = cert.total_bracket > 0.0 ? cert.measured_abs / cert.total_bracket : 0.0;
    }
    return cert;
}

}  // namespace oscint
