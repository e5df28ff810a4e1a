// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#include "oscint/sublevel.hpp"

#include <algorithm>
#include <cmath>

#include "oscint/detail/gauss.hpp"
#include "oscint/errors.hpp"
#include "oscint/roots.hpp"

namespace oscint {

namespace {

// |p(x)| <= alpha decided in exact arithmetic.
bool inside(const Poly& p, double x, double alpha) {
    return exact_sign(p, x, alpha) <= 0 && exact_sign(p, x, -alpha) >= 0;
}

}  // namespace

IntervalUnion sublevel_set(const Poly& p, double alpha, const Domain& domain) {
    if (!(alpha > 0.0)) throw std::invalid_argument("sublevel_set requires alpha > 0");
    if (p.is_constant()) {
        if (std::abs(p.coeff(0)) <= alpha) {
            if (domain.unbounded) throw UnboundedSet{};
            return IntervalUnion({{domain.lo, domain.hi}});
        }
        return IntervalUnion{};
    }

    double hi = domain.hi;
    if (domain.unbounded) {
        const double b1 = (p - alpha).cauchy_root_bound();
        const double b2 = (p + alpha).cauchy_root_bound();
        hi = std::max({domain.lo + 1.0, b1, b2}) * (1.0 + 1e-9) + 1.0;
    }

    // breakpoints: certified roots of p -+ alpha in [lo, hi]
    std::vector<double> bp;
    for (const double s : {alpha, -alpha})
        for (const RootEnclosure& e : isolate_roots(p, domain.lo, hi, {.shift = s}))
            bp.push_back(e.mid());
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

    // walk points and gaps; roots are boundary points and hence inside
    struct Node {
        double x;
        bool in;
        bool is_root;
    };
    std::vector<Node> nodes;
    nodes.push_back({domain.lo, inside(p, domain.lo, alpha), false});
    for (double r : bp)
        if (r > domain.lo && (domain.unbounded || r < domain.hi)) nodes.push_back({r, true, true});
    if (!domain.unbounded && domain.hi > domain.lo)
        nodes.push_back({domain.hi, inside(p, domain.hi, alpha), false});

    std::vector<IntervalUnion::Interval> iv;
    bool open = false;
    double start = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        const Node& nd = nodes[i];
        const bool gap_in =
            i + 1 < nodes.size() && inside(p, 0.5 * (nd.x + nodes[i + 1].x), alpha);
        if (!open) {
            if (nd.in && gap_in) {
                open = true;
                start = nd.x;
            } else if (nd.in) {
                iv.push_back({nd.x, nd.x});  // isolated touch point
            }
        } else if (!gap_in) {
            iv.push_back({start, nd.x});
            open = false;
        }
        // interior gap on an unbounded domain past the last root is outside
        // for a nonconstant polynomial; nothing to close at +infinity.
    }
    if (open) {
        // can only happen on a bounded domain ending inside the set
        iv.push_back({start, nodes.back().x});
    }
    // merge adjacent intervals sharing an endpoint (closed sets)
    std::vector<IntervalUnion::Interval> merged;
    for (const auto& i : iv) {
        if (!merged.empty() && i.lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, i.hi);
        } else {
            merged.push_back(i);
        }
    }
    return IntervalUnion(std::move(merged));
}

BoundBracket log_lemma_bracket(double alpha, double M, int d) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    if (!(M > 0.0)) throw ZeroTopHalf{};
    const double t = alpha / M;
    const double power = std::pow(t, 1.0 / d);
    const double logb = 1.0 + std::max(std::log(t), 0.0) / d;
    BoundBracket b;
    b.formula = "log_lemma";
    b.alpha = alpha;
    b.M = M;
    b.d = d;
    b.value = std::min(power, logb);
    b.branch = t < 1.0 ? MinBranch::Power : (t > 1.0 ? MinBranch::Log : MinBranch::Tie);
    return b;
}

BoundBracket vinogradov_bracket(double alpha, double M_r, int r, int d, double R) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(R > 1.0)) throw std::invalid_argument("R must exceed 1");
    if (r < 0 || r > d) throw std::invalid_argument("need 0 <= r <= d");
    if (!(M_r > 0.0)) throw ZeroTail{};
    BoundBracket b;
    b.formula = "vinogradov";
    b.alpha = alpha;
    b.M = M_r;
    b.R = R;
    b.r = r;
    b.d = d;
    b.value = std::pow(R, 1.0 - static_cast<double>(r) / d) * std::pow(alpha / M_r, 1.0 / d);
    return b;
}

BoundBracket genphase_bracket(int k, double M, double alpha) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (!(M > 0.0)) throw std::invalid_argument("need a positive derivative bound");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    BoundBracket b;
    b.formula = "genphase";
    b.alpha = alpha;
    b.M = M;
    b.k = k;
    b.value = k * std::pow(alpha / M, 1.0 / k);
    return b;
}

BoundBracket carbery_wright_bracket(double q, int d, int n, double alpha, double lq_norm) {
    if (!(q >= 1.0)) throw std::invalid_argument("need q >= 1");
    if (d < 1 || n < 1) throw std::invalid_argument("need d >= 1, n >= 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(lq_norm > 0.0)) throw std::invalid_argument("need a positive L^q norm");
    BoundBracket b;
    b.formula = "carbery_wright";
    b.alpha = alpha;
    b.M = lq_norm;
    b.q = q;
    b.d = d;
    b.n = n;
    const double factor = std::isinf(q) ? static_cast<double>(n)
                                        : std::min(q * d, static_cast<double>(n));
    b.value = factor * std::pow(alpha, 1.0 / d) * std::pow(lq_norm, -1.0 / d);
    return b;
}

// ---------------------------------------------------------------------------
// L^q norms over volume-1 bodies.

namespace {

double ball_radius(int n) {
    switch (n) {
        case 1: return 0.5;
        case 2: return 1.0 / std::sqrt(M_PI);
        default: return std::cbrt(3.0 / (4.0 * M_PI));
    }
}

// restriction of p to a line in the last variable: returns coeffs in that var
Poly restrict_last_var(const MultiPoly& p, double x0, double x1, int fixed_count) {
    std::vector<double> c;
    for (const MultiPoly::Term& t : p.terms()) {
        const int e = t.exp[static_cast<size_t>(fixed_count)];
        double v = t.coef;
        for (int i = 0; i < fixed_count; ++i) {
            const double xi = i == 0 ? x0 : x1;
            for (int j = 0; j < t.exp[static_cast<size_t>(i)]; ++j) v *= xi;
        }
        if (static_cast<size_t>(e) >= c.size()) c.resize(static_cast<size_t>(e) + 1, 0.0);
        c[static_cast<size_t>(e)] += v;
    }
    if (c.empty()) c.push_back(0.0);
    return Poly(std::move(c));
}

// integral of |g|^q over [a, b], splitting at the roots of g
double abs_pow_integral_1d(const Poly& g, double q, double a, double b, double tol) {
    std::vector<double> cuts{a, b};
    if (!g.is_zero())
        for (const RootEnclosure& e : isolate_roots(g, a, b)) cuts.push_back(e.mid());
    std::sort(cuts.begin(), cuts.end());
    double s = 0.0;
    auto f = [&](double x) { return std::pow(std::abs(g(x)), q); };
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i + 1] > cuts[i]) s += detail::integrate(f, cuts[i], cuts[i + 1], tol);
    return s;
}

double sup_on_cube(const MultiPoly& p) {
    const int n = p.dim();
    const int g = 4 * (p.degree() + 1) + 1;
    const double h = 1.0 / (g - 1);
    double best = 0.0;
    Vec3 arg{0.0, 0.0, 0.0};
    Vec3 bestx{0.0, 0.0, 0.0};
    const int gy = n >= 2 ? g : 1, gz = n >= 3 ? g : 1;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < gy; ++j)
            for (int k = 0; k < gz; ++k) {
                arg = {i * h, j * h, k * h};
                const double v = std::abs(p.eval(arg));
                if (v > best) {
                    best = v;
                    bestx = arg;
                }
            }
    // coordinate-wise golden polish
    double w = h;
    for (int round = 0; round < 60; ++round) {
        for (int dim = 0; dim < n; ++dim) {
            for (const double cand : {bestx[static_cast<size_t>(dim)] - 0.618 * w,
                                      bestx[static_cast<size_t>(dim)] + 0.618 * w}) {
                if (cand < 0.0 || cand > 1.0) continue;
                Vec3 t = bestx;
                t[static_cast<size_t>(dim)] = cand;
                const double v = std::abs(p.eval(t));
                if (v > best) {
                    best = v;
                    bestx = t;
                }
            }
        }
        w *= 0.7;
        if (w < 1e-10) break;
    }
    return best;
}

double sup_on_ball(const MultiPoly& p) {
    const int n = p.dim();
    const double rho = ball_radius(n);
    const int g = 6 * (p.degree() + 1) + 1;
    double best = 0.0;
    Vec3 bestx{0.0, 0.0, 0.0};
    if (n == 1) {
        const Poly u = restrict_last_var(p, 0, 0, 0);
        best = std::max(std::abs(u(-rho)), std::abs(u(rho)));
        if (u.degree() >= 2)
            for (const RootEnclosure& e : isolate_roots(u.derivative(), -rho, rho))
                best = std::max(best, std::abs(u(e.mid())));
        return best;
    }
    const double h = 2.0 * rho / (g - 1);
    const int gz = n >= 3 ? g : 1;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < gz; ++k) {
                Vec3 x{-rho + i * h, -rho + j * h, n >= 3 ? -rho + k * h : 0.0};
                if (x[0] * x[0] + x[1] * x[1] + x[2] * x[2] > rho * rho) continue;
                const double v = std::abs(p.eval(x));
                if (v > best) {
                    best = v;
                    bestx = x;
                }
            }
    double w = h;
    for (int round = 0; round < 60; ++round) {
        for (int dim = 0; dim < n; ++dim) {
            for (const double cand : {bestx[static_cast<size_t>(dim)] - 0.618 * w,
                                      bestx[static_cast<size_t>(dim)] + 0.618 * w}) {
                Vec3 t = bestx;
                t[static_cast<size_t>(dim)] = cand;
                if (t[0] * t[0] + t[1] * t[1] + t[2] * t[2] > rho * rho) continue;
                const double v = std::abs(p.eval(t));
                if (v > best) {
                    best = v;
                    bestx = t;
                }
            }
        }
        w *= 0.7;
        if (w < 1e-10) break;
    }
    return best;
}

bool is_even_integer(double q) {
    return std::isfinite(q) && q == std::floor(q) && static_cast<long>(q) % 2 == 0;
}

double lq_cube(const MultiPoly& p, double q) {
    const int n = p.dim(), d = std::max(1, p.degree());
    if (is_even_integer(q)) {
        const int iq = static_cast<int>(q);
        const int m = (d * iq) / 2 + 1;
        std::vector<double> xs, ws;
        detail::legendre_rule(m, xs, ws);
        auto node = [&](int i) { return 0.5 * (xs[static_cast<size_t>(i)] + 1.0); };
        double s = 0.0;
        const int my = n >= 2 ? m : 1, mz = n >= 3 ? m : 1;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < my; ++j)
                for (int k = 0; k < mz; ++k) {
                    const double v = p.eval({node(i), n >= 2 ? node(j) : 0.0,
                                             n >= 3 ? node(k) : 0.0});
                    double w = 0.5 * ws[static_cast<size_t>(i)];
                    if (n >= 2) w *= 0.5 * ws[static_cast<size_t>(j)];
                    if (n >= 3) w *= 0.5 * ws[static_cast<size_t>(k)];
                    s += w * std::pow(v, iq);
                }
        return std::pow(s, 1.0 / q);
    }
    // general q: exact root splitting innermost, adaptive outer
    const double rough = std::max(sup_on_cube(p), 1e-300);
    const double tol0 = 1e-9 * std::pow(rough, q);
    double s = 0.0;
    if (n == 1) {
        s = abs_pow_integral_1d(restrict_last_var(p, 0, 0, 0), q, 0.0, 1.0, tol0);
    } else if (n == 2) {
        auto f = [&](double x) {
            return abs_pow_integral_1d(restrict_last_var(p, x, 0, 1), q, 0.0, 1.0, tol0);
        };
        s = detail::integrate(f, 0.0, 1.0, tol0 * 10.0);
    } else {
        auto f2 = [&](double x, double y) {
            return abs_pow_integral_1d(restrict_last_var(p, x, y, 2), q, 0.0, 1.0, tol0);
        };
        auto f = [&](double x) {
            auto g = [&](double y) { return f2(x, y); };
            return detail::integrate(g, 0.0, 1.0, tol0 * 10.0);
        };
        s = detail::integrate(f, 0.0, 1.0, tol0 * 100.0);
    }
    return std::pow(s, 1.0 / q);
}

double lq_ball(const MultiPoly& p, double q) {
    const int n = p.dim(), d = std::max(1, p.degree());
    const double rho = ball_radius(n);
    if (n == 1) {
        if (is_even_integer(q)) {
            const int iq = static_cast<int>(q);
            const int m = (d * iq) / 2 + 1;
            std::vector<double> xs, ws;
            detail::legendre_rule(m, xs, ws);
            double s = 0.0;
            for (int i = 0; i < m; ++i)
                s += rho * ws[static_cast<size_t>(i)] *
                     std::pow(p.eval({rho * xs[static_cast<size_t>(i)], 0, 0}),
                              iq);
            return std::pow(s, 1.0 / q);
        }
        const double tol = 1e-10 * std::pow(std::max(sup_on_ball(p), 1e-300), q);
        return std::pow(
            abs_pow_integral_1d(restrict_last_var(p, 0, 0, 0), q, -rho, rho, tol), 1.0 / q);
    }
    // polar / spherical product rules; orders exact for polynomial |P|^q when
    // q is an even integer, refined by doubling otherwise
    const int base_deg = is_even_integer(q) ? d * static_cast<int>(q) : 4 * d + 8;
    auto value_at_order = [&](int deg_target) {
        const int mr = deg_target / 2 + 2;
        std::vector<double> rx, rw;
        detail::legendre_rule(mr, rx, rw);
        const int mt = 2 * (deg_target + 2);
        double s = 0.0;
        if (n == 2) {
            for (int i = 0; i < mr; ++i) {
                const double r = 0.5 * rho * (rx[static_cast<size_t>(i)] + 1.0);
                const double wr = 0.5 * rho * rw[static_cast<size_t>(i)] * r;
                double st = 0.0;
                for (int j = 0; j < mt; ++j) {
                    const double th = 2.0 * M_PI * j / mt;
                    st += std::pow(std::abs(p.eval({r * std::cos(th), r * std::sin(th), 0})), q);
                }
                s += wr * st * (2.0 * M_PI / mt);
            }
        } else {
            const int mz = deg_target / 2 + 2;
            std::vector<double> zx, zw;
            detail::legendre_rule(mz, zx, zw);
            for (int i = 0; i < mr; ++i) {
                const double r = 0.5 * rho * (rx[static_cast<size_t>(i)] + 1.0);
                const double wr = 0.5 * rho * rw[static_cast<size_t>(i)] * r * r;
                for (int iz = 0; iz < mz; ++iz) {
                    const double z = zx[static_cast<size_t>(iz)];
                    const double rz = std::sqrt(std::max(0.0, 1.0 - z * z));
                    double st = 0.0;
                    for (int j = 0; j < mt; ++j) {
                        const double th = 2.0 * M_PI * j / mt;
                        st += std::pow(std::abs(p.eval({r * rz * std::cos(th),
                                                        r * rz * std::sin(th), r * z})),
                                       q);
                    }
                    s += wr * zw[static_cast<size_t>(iz)] * st * (2.0 * M_PI / mt);
                }
            }
        }
        return s;
    };
    double v = value_at_order(base_deg);
    if (!is_even_integer(q)) {
        for (int deg_target = 2 * base_deg; deg_target <= 16 * base_deg; deg_target *= 2) {
            const double v2 = value_at_order(deg_target);
            const bool done = std::abs(v2 - v) <= 1e-8 * std::abs(v2);
            v = v2;
            if (done) break;
        }
    }
    return std::pow(v, 1.0 / q);
}

}  // namespace

double lq_norm_on_body(const MultiPoly& p, double q, Body body) {
    if (!(q >= 1.0)) throw std::invalid_argument("need q >= 1");
    if (p.is_zero()) return 0.0;
    if (std::isinf(q)) return body == Body::UnitCube ? sup_on_cube(p) : sup_on_ball(p);
    return body == Body::UnitCube ? lq_cube(p, q) : lq_ball(p, q);
}

double body_sublevel_measure(const MultiPoly& p, double alpha, Body body, long samples) {
    const int n = p.dim();
    const double rho = ball_radius(n);
    if (n == 1) {
        const double lo = body == Body::UnitCube ? 0.0 : -rho;
        const double hi = body == Body::UnitCube ? 1.0 : rho;
        const Poly g = restrict_last_var(p, 0, 0, 0);
        if (g.is_constant()) return std::abs(g.coeff(0)) <= alpha ? hi - lo : 0.0;
        return sublevel_set(g, alpha, Domain::interval(lo, hi)).lebesgue_measure();
    }
    if (n == 2) {
        const long g = std::max(8L, static_cast<long>(std::sqrt(static_cast<double>(samples))));
        const double lo = body == Body::UnitCube ? 0.0 : -rho;
        const double span = body == Body::UnitCube ? 1.0 : 2.0 * rho;
        const double h = span / static_cast<double>(g);
        long count = 0;
        for (long i = 0; i < g; ++i)
            for (long j = 0; j < g; ++j) {
                const double x = lo + (i + 0.5) * h, y = lo + (j + 0.5) * h;
                if (body == Body::UnitBall && x * x + y * y > rho * rho) continue;
                if (std::abs(p.eval({x, y, 0})) <= alpha) ++count;
            }
        return static_cast<double>(count) * h * h;
    }
    const long g = std::max(8L, static_cast<long>(std::cbrt(static_cast<double>(samples))));
    const double lo = body == Body::UnitCube ? 0.0 : -rho;
    const double span = body == Body::UnitCube ? 1.0 : 2.0 * rho;
    const double h = span / static_cast<double>(g);
    long count = 0;
    for (long i = 0; i < g; ++i)
        for (long j = 0; j < g; ++j)
            for (long k = 0; k < g; ++k) {
                const double x = lo + (i + 0.5) * h, y = lo + (j + 0.5) * h,
                             z = lo + (k + 0.5) * h;
                if (body == Body::UnitBall && x * x + y * y + z * z > rho * rho) continue;
                if (std::abs(p.eval({x, y, z})) <= alpha) ++count;
            }
    return static_cast<double>(count) * h * h * h;
}

}  // namespace oscint
