// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0
//
// Oscillatory quadrature: panels are sized by a certified bound on the phase
// increment (derivative majorant times length, capped at 2*pi) plus a ratio
// cap for the 1/x weight, then refined adaptively. Principal-value limits
// close the origin analytically (symmetrized or regularized integrands are
// bounded there) and reach R -> infinity by integrating to the last
// stationary point and averaging partial integrals at phase-aligned cutoffs.

#include "oscint/oscquad.hpp"

#include <algorithm>
#include <cmath>

#include "oscint/detail/gauss.hpp"
#include "oscint/errors.hpp"
#include "oscint/parallel.hpp"
#include "oscint/roots.hpp"
#include "oscint/sphere_grid.hpp"

namespace oscint {

namespace {

inline Complex cis(double t) { return {std::cos(t), std::sin(t)}; }

inline double sinc(double u) {
    return std::abs(u) < 1e-4 ? 1.0 - u * u / 6.0 * (1.0 - u * u / 20.0) : std::sin(u) / u;
}

Poly abs_coeffs(const Poly& p) {
    std::vector<double> a(p.coeffs());
    for (double& v : a) v = std::abs(v);
    return Poly(std::move(a));
}

template <class F, class RateAt, class NoiseAt>
Complex integrate_panels(F&& f, double a, double b, RateAt&& rate_at, NoiseAt&& noise_at,
                         bool ratio_cap, double tol_per_unit, bool log_scale) {
    // panel edges: local phase increment <= 2*pi, optional geometric ratio cap
    Complex acc{0.0, 0.0};
    double u = a;
    long guard = 0;
    while (u < b) {
        const double au = std::abs(u);
        double len = 2.0 * M_PI / std::max(rate_at(au), 1e-300);
        if (ratio_cap && u > 0.0) len = std::min(len, 3.0 * u);
        len = std::min(len, b - u);
        // certify against derivative growth across the panel
        for (int back = 0; back < 200; ++back) {
            const double m = std::max(au, std::abs(u + len));
            if (rate_at(m) * len <= 2.0 * M_PI || len <= 1e-3 * std::max(au, 1.0)) break;
            len *= 0.5;
        }
        double v = std::min(b, u + len);
        if (!(v > u)) v = std::nextafter(u, b);
        const double measure = log_scale && u > 0.0 ? std::log(v / u) : (v - u);
        // the phase argument of cos/sin is rounded to eps * |phase|, an
        // irreducible absolute noise proportional to the panel mass
        const double tol = std::max(tol_per_unit * std::max(measure, 1e-6), noise_at(u, v));
        bool ok = true;
        acc += detail::integrate(f, u, v, tol, 36, &ok);
        if (!ok) throw NonconvergedPanel(u, v);
        u = v;
        if (++guard > 200'000'000L) throw NonconvergedPanel(u, b);
    }
    return acc;
}

}  // namespace

Complex osc_segment(const Poly& p, double a, double b, SegmentWeight w, double tol) {
    if (a == b) return {0.0, 0.0};
    if (a > b) return -osc_segment(p, b, a, w, tol);
    if (w == SegmentWeight::InverseX && !(a > 0.0))
        throw std::invalid_argument("osc_segment with weight 1/x requires 0 < a");
    const Poly dmaj = abs_coeffs(p.derivative());
    const Poly pmaj = abs_coeffs(p);
    auto rate_at = [&dmaj](double m) { return dmaj(m); };
    if (w == SegmentWeight::InverseX) {
        auto f = [&p](double x) { return cis(p(x)) / x; };
        auto noise_at = [&pmaj](double u, double v) {
            return 5e-16 * (pmaj(v) + 1.0) * (v - u) / u;
        };
        return integrate_panels(f, a, b, rate_at, noise_at, true, tol, true);
    }
    auto f = [&p](double x) { return cis(p(x)); };
    auto noise_at = [&pmaj](double u, double v) {
        return 5e-16 * (pmaj(std::max(std::abs(u), std::abs(v))) + 1.0) * (v - u);
    };
    return integrate_panels(f, a, b, rate_at, noise_at, false, tol, false);
}

namespace {

// integral over [0,1] of (e^{i q(r)} - 1) dr/r for q with zero constant term
Complex regularized_unit(const Poly& q, double tol) {
    const Poly q_over_r = [&q] {
        std::vector<double> c(q.coeffs());
        c.erase(c.begin());
        if (c.empty()) c.push_back(0.0);
        return Poly(std::move(c));
    }();
    auto f = [&](double r) {
        const double t = q(r);
        const double h = 0.5 * t;
        const double slope = q_over_r(r);  // q(r)/r
        // (e^{it}-1)/r = (q/r) * sinc(t/2) * (i cos(t/2) - sin(t/2))
        const double s = slope * sinc(h);
        return Complex(-s * std::sin(h), s * std::cos(h));
    };
    return detail::integrate(f, 0.0, 1.0, tol, 40);
}

struct TailResult {
    Complex value{0.0, 0.0};
    double err = 0.0;
    bool converged = false;
    std::vector<double> radii;
};

// integral of e^{i q(r)}/r over [a, b], integrating only the stretches where
// |q'(r)| r < lambda. A stretch of fast oscillation contributes at most
// O(1/lambda) by the first-derivative bound; each skipped stretch adds
// 6/lambda to *skip_err instead of being traversed (its phase variation can
// be astronomically large when stationary points sit at large radii).
Complex osc_inv_x_skip(const Poly& q, const Poly& dq, double a, double b, double lambda,
                       double seg_tol, double* skip_err) {
    if (!(b > a)) return {0.0, 0.0};
    auto speed = [&](double r) { return std::abs(dq(r)) * r; };
    const int S = 64 + 8 * q.degree();
    const double ratio = std::pow(b / a, 1.0 / S);
    std::vector<double> pts(static_cast<size_t>(S) + 1);
    std::vector<char> slow(static_cast<size_t>(S) + 1);
    double r = a;
    for (int i = 0; i <= S; ++i) {
        pts[static_cast<size_t>(i)] = i == S ? b : r;
        slow[static_cast<size_t>(i)] = speed(pts[static_cast<size_t>(i)]) < lambda;
        r *= ratio;
    }
    auto crossing = [&](double lo, double hi) {
        // bisect |q'| r = lambda between a slow and a fast sample
        const bool lo_slow = speed(lo) < lambda;
        for (int it = 0; it < 60 && hi - lo > 1e-12 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            if ((speed(mid) < lambda) == lo_slow)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };
    Complex acc{0.0, 0.0};
    bool skipped_any = false;
    int i = 0;
    while (i <= S) {
        if (!slow[static_cast<size_t>(i)]) {
            skipped_any = true;
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 <= S && slow[static_cast<size_t>(j + 1)]) ++j;
        double lo = pts[static_cast<size_t>(i)];
        double hi = pts[static_cast<size_t>(j)];
        if (i > 0) lo = crossing(pts[static_cast<size_t>(i - 1)], lo);
        if (j < S) hi = crossing(hi, pts[static_cast<size_t>(j + 1)]);
        if (hi > lo) acc += osc_segment(q, lo, hi, SegmentWeight::InverseX, seg_tol);
        i = j + 1;
    }
    if (skipped_any && skip_err) *skip_err += 6.0 / lambda * (q.degree() + 1);
    return acc;
}

// cheap upper bound past the last sign change of dq: Fujiwara-type root
// bound, then a downward geometric sign scan refined by bisection
double last_sign_change_upper(const Poly& dq, double from) {
    const int d = dq.degree();
    if (d < 1) return from;
    const double lead = std::abs(dq.coeff(d));
    double fuji = 0.0;
    for (int k = 0; k < d; ++k)
        if (dq.coeff(k) != 0.0)
            fuji = std::max(fuji, std::pow(std::abs(dq.coeff(k)) / lead,
                                           1.0 / static_cast<double>(d - k)));
    double B = std::max(from, 2.0 * fuji * (1.0 + 1e-9) + 1e-12);
    const int tail_sign = dq.coeff(d) > 0.0 ? 1 : -1;
    double hi = B, lo = from, r = B;
    bool found = false;
    while (r > from) {
        const double next = std::max(from, r / 1.25 - 1e-15);
        if ((dq(next) >= 0.0 ? 1 : -1) != tail_sign) {
            lo = next;
            hi = r;
            found = true;
            break;
        }
        if (next <= from) break;
        r = next;
    }
    if (!found) return from;
    for (int it = 0; it < 80 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((dq(mid) >= 0.0 ? 1 : -1) != tail_sign)
            lo = mid;
        else
            hi = mid;
    }
    return hi * (1.0 + 1e-12);
}

// lim_{R->inf} integral over [from, R] of e^{i q(r)} dr/r, q nonconstant
TailResult tail_limit(const Poly& q, double from, double tail_tol, double seg_tol,
                      bool fast = false) {
    TailResult out;
    const Poly dq = q.derivative();
    double r_mono = from;
    if (dq.degree() >= 1) {
        if (fast) {
            r_mono = last_sign_change_upper(dq, from);
        } else {
            const auto crit = isolate_roots_unbounded(dq, from);
            if (!crit.empty()) r_mono = std::max(from, crit.back().hi * (1.0 + 1e-12) + 1e-12);
        }
    }
    Complex base{0.0, 0.0};
    double skip_err = 0.0;
    if (r_mono > from) {
        const double lambda = std::max(1e10, 400.0 * (q.degree() + 1) / std::max(tail_tol, 1e-12));
        base = osc_inv_x_skip(q, dq, from, r_mono, lambda, seg_tol, &skip_err);
    }

    // beyond r_mono the phase is strictly monotone
    const double dir = dq.coeff(dq.degree()) > 0.0 ? 1.0 : -1.0;
    const double phi0 = q(r_mono);

    auto cutoff_at = [&](double target, double lo) {
        double hi = std::max(lo * 1.25, lo + 1.0);
        while (dir * (q(hi) - target) < 0.0) {
            lo = hi;
            hi = hi * 2.0;
            if (!std::isfinite(hi)) throw StationaryTail{};
        }
        for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (dir * (q(mid) - target) < 0.0)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };

    std::vector<Complex> partials;  // running integral at phase-aligned cutoffs
    Complex running = base;
    double prev_r = r_mono;
    size_t m_total = 0;
    const size_t max_cutoffs = 768;
    size_t want = 32;
    while (true) {
        while (m_total < want) {
            ++m_total;
            const double target = phi0 + dir * static_cast<double>(m_total) * M_PI;
            const double r = cutoff_at(target, prev_r);
            running += osc_segment(q, prev_r, r, SegmentWeight::InverseX, seg_tol);
            partials.push_back(running);
            out.radii.push_back(r);
            prev_r = r;
        }
        // iterated averaging of the alternating partial sequence
        std::vector<Complex> avg = partials;
        Complex prev_head = avg.front();
        double err = std::numeric_limits<double>::infinity();
        while (avg.size() > 1) {
            for (size_t i = 0; i + 1 < avg.size(); ++i) avg[i] = 0.5 * (avg[i] + avg[i + 1]);
            avg.pop_back();
            err = std::abs(avg.front() - prev_head);
            prev_head = avg.front();
        }
        out.value = prev_head;
        out.err = err + skip_err;
        if (err <= tail_tol) {
            out.converged = true;
            return out;
        }
        if (want >= max_cutoffs) return out;  // converged stays false
        want *= 2;
    }
}

}  // namespace

// closed form of the regularized half-line value for a linear ray c*r:
// integral_0^1 (e^{icr}-1) dr/r + integral_1^inf e^{icr} dr/r
Complex linear_ray_value(double c) {
    constexpr double kGamma = 0.57721566490153286;
    return {-kGamma - std::log(std::abs(c)), c > 0.0 ? 0.5 * M_PI : -0.5 * M_PI};
}

Complex osc_tail(const Poly& q, double from, double tol) {
    if (q.is_constant()) throw StationaryTail{};
    if (!(from > 0.0)) throw std::invalid_argument("osc_tail requires from > 0");
    return tail_limit(q, from, tol, std::min(tol, 1e-10)).value;
}

Complex radial_regularized(const Poly& p_ray, double R, double tol) {
    if (p_ray.coeff(0) != 0.0)
        throw std::invalid_argument("radial phase must have zero constant term");
    if (p_ray.is_zero()) {
        if (std::isinf(R)) throw StationaryTail{};
        return {std::log(R), 0.0};
    }
    const Complex head = regularized_unit(p_ray, tol);
    if (std::isinf(R)) return head + tail_limit(p_ray, 1.0, 10.0 * tol, tol).value;
    if (R <= 1.0) return head - osc_segment(p_ray, R, 1.0, SegmentWeight::InverseX, tol);
    return head + osc_segment(p_ray, 1.0, R, SegmentWeight::InverseX, tol);
}

PvEstimate pv_1d(const Poly& p, double tail_tol, bool fast_tail) {
    PvEstimate out;
    const Poly odd = p.odd_part();
    if (odd.is_zero()) return out;  // even phase, odd kernel: exactly zero

    const Poly even = p.even_part();
    const Poly odd_over_x = p.odd_part_over_x();
    auto f = [&](double x) {
        // (e^{iP(x)} - e^{iP(-x)})/x = 2 i e^{iE(x)} sin(O(x))/x
        const double o = odd(x);
        const double s = 2.0 * sinc(o) * odd_over_x(x);
        return s * Complex(-std::sin(even(x)), std::cos(even(x)));
    };
    const Complex head = detail::integrate(f, 0.0, 1.0, 1e-11, 40);

    const TailResult plus = tail_limit(p, 1.0, 0.5 * tail_tol, 1e-10, fast_tail);
    const TailResult minus = tail_limit(p.reflected(), 1.0, 0.5 * tail_tol, 1e-10, fast_tail);
    out.value = head + plus.value - minus.value;
    out.abs_error_estimate = plus.err + minus.err + 1e-11;
    out.converged = plus.converged && minus.converged;
    out.radii_used = plus.radii;
    out.radii_used.insert(out.radii_used.end(), minus.radii.begin(), minus.radii.end());
    std::sort(out.radii_used.begin(), out.radii_used.end());
    return out;
}

namespace {

struct SphereSum {
    Complex value{0.0, 0.0};
    double tail_err = 0.0;
    double max_radius = 0.0;
};

SphereSum in_at_order(const HomogeneousParts& h, const KernelSpec& omega, int order,
                      const InOptions& opt) {
    const SphereGrid grid = SphereGrid::build(h.dim, order);
    const size_t n = grid.size();
    std::vector<double> om(n);
    double wsum = 0.0, omsum = 0.0;
    for (size_t i = 0; i < n; ++i) {
        om[i] = omega(grid.nodes()[i]);
        wsum += grid.weights()[i];
        omsum += grid.weights()[i] * om[i];
    }
    const double grid_mean = omsum / wsum;
    for (double& v : om) v -= grid_mean;  // exact zero mean on this grid

    std::vector<Complex> f(n, Complex{0.0, 0.0});
    std::vector<double> errs(n, 0.0), radii(n, 0.0);
    std::vector<char> degenerate(n, 0);
    parallel_for(n, opt.threads, [&](size_t i) {
        if (om[i] == 0.0) return;
        const Poly ray = radial_restriction(h, grid.nodes()[i]);
        if (ray.is_zero()) {
            // an identically zero phase cannot cancel its log R tail
            if (std::abs(om[i]) * grid.weights()[i] > 1e-14 * (omega.l1_norm() + 1.0))
                degenerate[i] = 1;
            return;
        }
        if (ray.degree() == 1) {
            f[i] = linear_ray_value(ray.coeff(1));
            return;
        }
        const Complex head = regularized_unit(ray, 1e-10);
        const TailResult tail = tail_limit(ray, 1.0, opt.tail_tol, 1e-10, opt.fast_tail);
        f[i] = head + tail.value;
        errs[i] = tail.err;
        radii[i] = tail.radii.empty() ? 0.0 : tail.radii.back();
    });
    size_t bad = 0;
    for (char d : degenerate)
        if (d) ++bad;
    if (bad > 0)
        throw DegenerateRays(std::to_string(bad) +
                             " grid nodes have identically zero restricted phase "
                             "but carry kernel weight");
    SphereSum s;
    for (size_t i = 0; i < n; ++i) {
        s.value += grid.weights()[i] * om[i] * f[i];
        s.tail_err += grid.weights()[i] * std::abs(om[i]) * errs[i];
        s.max_radius = std::max(s.max_radius, radii[i]);
    }
    return s;
}

}  // namespace

PvEstimate In(const MultiPoly& p, const KernelSpec& omega, const InOptions& opt) {
    if (omega.dim() != p.dim()) throw std::invalid_argument("kernel/polynomial dimension mismatch");
    const HomogeneousParts h = homogeneous_parts(p);
    const int order0 = opt.initial_order > 0 ? opt.initial_order
                                             : std::max(16, 2 * h.degree + 4);
    const double tol = opt.sphere_tol_factor * (omega.l1_norm() + 1.0);

    PvEstimate out;
    SphereSum cur = in_at_order(h, omega, order0, opt);
    if (opt.fixed_order) {
        out.value = cur.value;
        out.abs_error_estimate = cur.tail_err;
        out.radii_used = {cur.max_radius};
        return out;
    }
    out.converged = false;
    for (int order = 2 * order0; order <= opt.max_order; order *= 2) {
        const SphereSum next = in_at_order(h, omega, order, opt);
        const double diff = std::abs(next.value - cur.value);
        cur = next;
        if (diff <= tol) {
            out.converged = true;
            out.abs_error_estimate = diff + cur.tail_err;
            break;
        }
        out.abs_error_estimate = diff + cur.tail_err;
    }
    out.value = cur.value;
    out.radii_used = {cur.max_radius};
    return out;
}

PvEstimate remark_odd(const MultiPoly& p, const KernelSpec& omega, const InOptions& opt) {
    if (omega.dim() != p.dim()) throw std::invalid_argument("kernel/polynomial dimension mismatch");
    if (omega.parity() != Parity::Odd) throw NotOdd{};
    const HomogeneousParts h = homogeneous_parts(p);
    const int order0 = opt.initial_order > 0 ? opt.initial_order
                                             : std::max(16, 2 * h.degree + 4);
    const double tol = opt.sphere_tol_factor * (omega.l1_norm() + 1.0);

    auto at_order = [&](int order) {
        const SphereGrid grid = SphereGrid::build(h.dim, order);
        const size_t n = grid.size();
        std::vector<double> om(n);
        double max_abs = 0.0;
        for (size_t i = 0; i < n; ++i) {
            om[i] = omega(grid.nodes()[i]);
            max_abs = std::max(max_abs, std::abs(om[i]));
        }
        for (size_t i = 0; i < n; ++i)
            if (std::abs(om[i] + om[grid.antipode(i)]) > 1e-10 * std::max(max_abs, 1e-30))
                throw NotOdd{};
        // one node per antipodal pair; full-line principal value per direction
        std::vector<size_t> half;
        half.reserve(n / 2);
        for (size_t i = 0; i < n; ++i)
            if (i < grid.antipode(i)) half.push_back(i);
        std::vector<Complex> pv(half.size(), Complex{0.0, 0.0});
        std::vector<double> errs(half.size(), 0.0);
        parallel_for(half.size(), opt.threads, [&](size_t k) {
            const size_t i = half[k];
            if (om[i] == 0.0) return;
            const Poly ray = radial_restriction(h, grid.nodes()[i]);
            if (ray.degree() <= 1) {
                // full-line principal value of a linear phase
                const double c = ray.coeff(1);
                pv[k] = c == 0.0 ? Complex{0.0, 0.0}
                                 : Complex{0.0, c > 0.0 ? M_PI : -M_PI};
                return;
            }
            const PvEstimate e = pv_1d(ray, opt.tail_tol, opt.fast_tail);
            pv[k] = e.value;
            errs[k] = e.abs_error_estimate;
        });
        SphereSum s;
        for (size_t k = 0; k < half.size(); ++k) {
            s.value += grid.weights()[half[k]] * om[half[k]] * pv[k];
            s.tail_err += grid.weights()[half[k]] * std::abs(om[half[k]]) * errs[k];
        }
        return s;
    };

    PvEstimate out;
    SphereSum cur = at_order(order0);
    if (opt.fixed_order) {
        out.value = cur.value;
        out.abs_error_estimate = cur.tail_err;
        return out;
    }
    out.converged = false;
    for (int order = 2 * order0; order <= opt.max_order; order *= 2) {
        const SphereSum next = at_order(order);
        const double diff = std::abs(next.value - cur.value);
        cur = next;
        out.abs_error_estimate = diff + cur.tail_err;
        if (diff <= tol) {
            out.converged = true;
            break;
        }
    }
    out.value = cur.value;
    return out;
}

Complex c1_two_frequency(double a, double b, double eps, double R, double tol) {
    if (a == 0.0 || b == 0.0) throw std::invalid_argument("frequencies must be nonzero");
    if (!(eps >= 0.0 && eps < R)) throw std::invalid_argument("need 0 <= eps < R");
    if (a == b) return {0.0, 0.0};
    const double s = 0.5 * (a + b), d = 0.5 * (a - b);
    auto f = [s, d](double r) {
        // (e^{iar} - e^{ibr})/r = 2 i e^{isr} sin(dr)/r
        const double v = 2.0 * d * sinc(d * r);
        return v * Complex(-std::sin(s * r), std::cos(s * r));
    };
    const double rate = std::abs(a) + std::abs(b);
    auto noise_at = [rate](double u, double v) { return 5e-16 * (rate * v + 1.0) * (v - u) / std::max(u, v * 1e-3); };
    return integrate_panels(f, eps, R, [rate](double) { return rate; }, noise_at, true, tol,
                            false);
}

}  // namespace oscint
