// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#include "oscint/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "oscint/detail/gauss.hpp"
#include "oscint/detail/graded.hpp"
#include "oscint/errors.hpp"
#include "oscint/oscquad.hpp"
#include "oscint/roots.hpp"

namespace oscint {

VdcReport vdc_check(const Poly& phase, double lambda, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("need a < b");
    if (lambda == 0.0) throw std::invalid_argument("need lambda != 0");
    const Poly d1 = phase.derivative();
    const Poly d2 = d1.derivative();

    // critical points of phase' are the roots of phase''
    std::vector<double> crit;
    if (!d1.is_constant() && !d2.is_zero())
        for (const RootEnclosure& e : isolate_roots(d2, a, b)) crit.push_back(e.mid());

    // certify |phase'| >= 1 on [a, b]: endpoints plus critical points
    double min_abs = std::min(std::abs(d1(a)), std::abs(d1(b)));
    for (double x : crit) min_abs = std::min(min_abs, std::abs(d1(x)));
    if (min_abs < 1.0 - 1e-9)
        throw HypothesisViolated("min |phase'| on the interval is " + std::to_string(min_abs));

    // N = sign changes of phase'' strictly inside (a, b), plus one
    int changes = 0;
    {
        std::vector<double> pts{a};
        for (double x : crit)
            if (x > a && x < b) pts.push_back(x);
        pts.push_back(b);
        int prev_sign = 0;
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            const double mid = 0.5 * (pts[i] + pts[i + 1]);
            const double v = d2(mid);
            const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
            if (s != 0 && prev_sign != 0 && s != prev_sign) ++changes;
            if (s != 0) prev_sign = s;
        }
    }
    VdcReport rep;
    rep.lambda = lambda;
    rep.monotonicity_changes = changes + 1;
    rep.integral_modulus = std::abs(osc_segment(phase * lambda, a, b, SegmentWeight::One));
    rep.ratio = rep.integral_modulus * std::abs(lambda) / rep.monotonicity_changes;
    return rep;
}

namespace {

// h(t) = p((1-t^2) s, 2 t s, z (1+t^2)) for homogeneous p: the rational
// parameterization of the circle at latitude z (s = sqrt(1-z^2), n=2: z=0).
Poly circle_zero_poly(const MultiPoly& p, int k, double s, double z) {
    Poly acc;
    const Poly one_minus_t2({1.0, 0.0, -1.0});
    const Poly two_t({0.0, 2.0});
    const Poly one_plus_t2({1.0, 0.0, 1.0});
    for (const MultiPoly::Term& term : p.terms()) {
        Poly f({term.coef});
        for (int i = 0; i < term.exp[0]; ++i) f = f * one_minus_t2;
        for (int i = 0; i < term.exp[1]; ++i) f = f * two_t;
        for (int i = 0; i < term.exp[2]; ++i) f = f * one_plus_t2;
        double scale = 1.0;
        for (int i = 0; i < term.exp[0] + term.exp[1]; ++i) scale *= s;
        for (int i = 0; i < term.exp[2]; ++i) scale *= z;
        acc = acc + f * scale;
    }
    (void)k;
    return acc;
}

// singular angles of |p| on the latitude circle, from certified roots of
// the rational parameterization
std::vector<double> circle_zero_angles(const MultiPoly& p, int k, double s, double z,
                                       double pole_value) {
    std::vector<double> sing;
    const Poly h = circle_zero_poly(p, k, s, z);
    if (!h.is_zero()) {
        const double bound = h.cauchy_root_bound() + 1.0;
        for (const RootEnclosure& e : isolate_roots(h, -bound, bound))
            sing.push_back(2.0 * std::atan(e.mid()));
    }
    const double scale = std::max(1.0, h.max_abs_coeff());
    if (std::abs(pole_value) <= 1e-14 * scale) sing.push_back(M_PI);
    for (double& th : sing)
        if (th < 0.0) th += 2.0 * M_PI;
    std::sort(sing.begin(), sing.end());
    return sing;
}

double polweight_circle(const MultiPoly& p, int k, double sup, double s, double z) {
    const double pole = p.eval({-s, 0.0, z});
    std::vector<double> sing = circle_zero_angles(p, k, s, z, pole);
    auto g = [&](double th) {
        const double v = std::abs(p.eval({s * std::cos(th), s * std::sin(th), z}));
        return std::pow(sup / std::max(v, 1e-300), 1.0 / (2.0 * k));
    };
    if (sing.empty()) return detail::graded_integral(g, 0.0, 2.0 * M_PI, {});
    // start the periodic integration away from a singularity
    std::vector<double> ext = sing;
    ext.push_back(sing.front() + 2.0 * M_PI);
    double best_gap = 0.0, start = 0.0;
    for (size_t i = 0; i + 1 < ext.size(); ++i)
        if (ext[i + 1] - ext[i] > best_gap) {
            best_gap = ext[i + 1] - ext[i];
            start = 0.5 * (ext[i] + ext[i + 1]);
        }
    std::vector<double> shifted;
    for (double th : sing) {
        double u = th - start;
        while (u < 0.0) u += 2.0 * M_PI;
        shifted.push_back(u);
    }
    auto gs = [&](double u) { return g(start + u); };
    return detail::graded_integral(gs, 0.0, 2.0 * M_PI, shifted);
}

}  // namespace

double polweight_integral(const MultiPoly& p, int n) {
    if (p.is_zero()) throw ZeroPolynomial{};
    if (n != p.dim()) throw std::invalid_argument("dimension mismatch");
    const int k = p.degree();
    if (!p.is_homogeneous(k) || k < 1)
        throw std::invalid_argument("polweight_integral needs a homogeneous polynomial");
    if (n == 1) return 2.0;  // |p(+-1)| equals the sup norm
    const double sup = sphere_sup_norm(p);
    if (n == 2) return polweight_circle(p, k, sup, 1.0, 0.0);
    // n == 3: surface measure on S^2 is dz x dtheta; graded inner circles,
    // adaptive outer latitude integral
    auto inner = [&](double z) {
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        if (s < 1e-14) {
            const double v = std::abs(p.eval({0.0, 0.0, z > 0.0 ? 1.0 : -1.0}));
            return 2.0 * M_PI * std::pow(sup / std::max(v, 1e-300), 1.0 / (2.0 * k));
        }
        return polweight_circle(p, k, sup, s, z);
    };
    bool ok = true;
    const double rough = inner(0.12345) + inner(-0.54321);
    const double v = detail::integrate(inner, -1.0, 1.0, 1e-6 * std::max(rough, 1.0), 18, &ok);
    return v;
}

NodeSystem node_system(double t, int d) {
    if (!(t > 1.0)) throw std::invalid_argument("need t > 1");
    if (d < 1) throw std::invalid_argument("need d >= 1");
    const auto [count, j] = node_index_scan(t, d);
    if (count != 1) throw std::logic_error("node index not unique; numerical failure");
    NodeSystem ns;
    ns.t = t;
    ns.d = d;
    ns.j_star = j;
    const double td = std::pow(t, d);
    ns.A = (td - 1.0) / (td + 1.0);
    ns.B = std::pow(t, j) - 1.0;
    ns.Gamma = 1.0 - std::pow(t, -(d - j));
    return ns;
}

}  // namespace oscint
