// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#include "oscint/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "oscint/errors.hpp"

namespace oscint {

namespace {

bool exp_less(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return a < b;
}

double ipow(double x, int n) {
    double r = 1.0, b = x;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

}  // namespace

MultiPoly::MultiPoly(int dim, std::vector<Term> terms) : dim_(dim) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("MultiPoly dimension must be 1..3");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return exp_less(a.exp, b.exp); });
    for (const Term& t : terms) {
        for (int v = dim; v < 3; ++v)
            if (t.exp[static_cast<size_t>(v)] != 0)
                throw std::invalid_argument("exponent on unused variable");
        if (t.coef == 0.0) continue;
        if (!terms_.empty() && terms_.back().exp == t.exp)
            terms_.back().coef += t.coef;
        else
            terms_.push_back(t);
    }
    std::erase_if(terms_, [](const Term& t) { return t.coef == 0.0; });
}

int MultiPoly::degree() const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.total_degree());
    return d;
}

double MultiPoly::eval(const Vec3& x) const {
    double s = 0.0;
    for (const Term& t : terms_) {
        double v = t.coef;
        for (int i = 0; i < dim_; ++i) {
            const int e = t.exp[static_cast<size_t>(i)];
            if (e) v *= ipow(x[static_cast<size_t>(i)], e);
        }
        s += v;
    }
    return s;
}

MultiPoly MultiPoly::operator*(double s) const {
    std::vector<Term> ts = terms_;
    for (Term& t : ts) t.coef *= s;
    return MultiPoly(dim_, std::move(ts));
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    std::vector<Term> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return MultiPoly(dim_, std::move(ts));
}

MultiPoly MultiPoly::scaled_arg(double lambda) const {
    std::vector<Term> ts = terms_;
    for (Term& t : ts) t.coef *= ipow(lambda, t.total_degree());
    return MultiPoly(dim_, std::move(ts));
}

bool MultiPoly::is_homogeneous(int k) const {
    for (const Term& t : terms_)
        if (t.total_degree() != k) return false;
    return true;
}

MultiPoly MultiPoly::from_univariate(const Poly& p) {
    std::vector<Term> ts;
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) != 0.0) ts.push_back({{k, 0, 0}, p.coeff(k)});
    return MultiPoly(1, std::move(ts));
}

std::string MultiPoly::to_text() const {
    std::ostringstream os;
    for (const Term& t : terms_) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", t.coef);
        os << buf;
        for (int i = 0; i < dim_; ++i) os << ' ' << t.exp[static_cast<size_t>(i)];
        os << '\n';
    }
    return os.str();
}

MultiPoly MultiPoly::parse(const std::string& text, int dim) {
    std::vector<Term> ts;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Term t;
        if (!(ls >> t.coef)) continue;
        for (int i = 0; i < dim; ++i) {
            if (!(ls >> t.exp[static_cast<size_t>(i)]) || t.exp[static_cast<size_t>(i)] < 0)
                throw std::invalid_argument("bad multipoly term: " + line);
        }
        ts.push_back(t);
    }
    return MultiPoly(dim, std::move(ts));
}

// ---------------------------------------------------------------------------
// Sphere sup norms.
//
// n=1 evaluates at {+1,-1}; n=2 samples a uniform angular grid and polishes
// the best candidates with golden-section search; n=3 uses a product grid in
// (z, theta) plus coordinate-wise golden-section ascent. The value m_j only
// enters downstream formulas through logarithms and normalizations, so a
// relative tolerance around 1e-8 is plenty.

namespace {

constexpr double kGolden = 0.6180339887498949;

template <class F>
double golden_max(F&& f, double a, double b, double tol) {
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        }
    }
    return std::max(f1, f2);
}

double sup_norm_s1(const MultiPoly& p, double rel_tol) {
    const int j = std::max(1, p.degree());
    const int n = 8 * (j + 1);
    const double h = 2.0 * M_PI / n;
    auto g = [&](double th) { return std::abs(p.eval({std::cos(th), std::sin(th), 0.0})); };
    std::vector<double> vals(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = g(i * h);
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = vals[static_cast<size_t>(i)];
        const double prev = vals[static_cast<size_t>((i + n - 1) % n)];
        const double next = vals[static_cast<size_t>((i + 1) % n)];
        best = std::max(best, v);
        if (v >= prev && v >= next)  // local max candidate
            best = std::max(best, golden_max(g, i * h - h, i * h + h, h * rel_tol));
    }
    return best;
}

double sup_norm_s2(const MultiPoly& p, double rel_tol) {
    const int j = std::max(1, p.degree());
    const int nz = 4 * (j + 1), nt = 8 * (j + 1);
    const double hz = 2.0 / nz, ht = 2.0 * M_PI / nt;
    auto g = [&](double z, double th) {
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        return std::abs(p.eval({s * std::cos(th), s * std::sin(th), z}));
    };
    double best = 0.0;
    std::vector<std::pair<double, std::pair<double, double>>> top;
    for (int iz = 0; iz <= nz; ++iz) {
        const double z = -1.0 + iz * hz;
        for (int it = 0; it < nt; ++it) {
            const double v = g(z, it * ht);
            best = std::max(best, v);
            top.push_back({v, {z, it * ht}});
        }
    }
    std::sort(top.begin(), top.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    const size_t n_polish = std::min<size_t>(6, top.size());
    for (size_t c = 0; c < n_polish; ++c) {
        double z = top[c].second.first, th = top[c].second.second;
        double wz = hz, wt = ht;
        for (int round = 0; round < 40; ++round) {
            double bz = z, bv = g(z, th);
            // coordinate-wise golden refinement
            const double lo = std::max(-1.0, z - wz), hi = std::min(1.0, z + wz);
            double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
            if (g(x1, th) > bv) { bv = g(x1, th); bz = x1; }
            if (g(x2, th) > bv) { bv = g(x2, th); bz = x2; }
            z = bz;
            double bt = th;
            double t1 = th - kGolden * wt, t2 = th + kGolden * wt;
            if (g(z, t1) > bv) { bv = g(z, t1); bt = t1; }
            if (g(z, t2) > bv) { bv = g(z, t2); bt = t2; }
            th = bt;
            wz *= 0.7;
            wt *= 0.7;
            best = std::max(best, bv);
            if (wz < rel_tol && wt < rel_tol) break;
        }
    }
    return best;
}

}  // namespace

double sphere_sup_norm(const MultiPoly& p, double rel_tol) {
    if (p.is_zero()) return 0.0;
    switch (p.dim()) {
        case 1: {
            return std::max(std::abs(p.eval({1.0, 0.0, 0.0})), std::abs(p.eval({-1.0, 0.0, 0.0})));
        }
        case 2:
            return sup_norm_s1(p, rel_tol);
        default:
            return sup_norm_s2(p, rel_tol);
    }
}

HomogeneousParts homogeneous_parts(const MultiPoly& p, double refine_rel_tol) {
    std::map<int, std::vector<MultiPoly::Term>> buckets;
    double constant = 0.0;
    for (const MultiPoly::Term& t : p.terms()) {
        const int j = t.total_degree();
        if (j == 0)
            constant += t.coef;
        else
            buckets[j].push_back(t);
    }
    if (buckets.empty())
        throw ConstantPolynomial("no term of positive degree; nothing oscillates");

    HomogeneousParts h;
    h.dim = p.dim();
    h.degree = buckets.rbegin()->first;
    h.dropped_constant = constant;
    h.refine_rel_tol = refine_rel_tol;
    for (auto& [j, ts] : buckets) {
        MultiPoly part(p.dim(), std::move(ts));
        h.sup_norms[j] = sphere_sup_norm(part, refine_rel_tol);
        h.parts.emplace(j, std::move(part));
    }
    return h;
}

HomogeneousParts HomogeneousParts::low_half(int level_degree) const {
    const int d = level_degree < 0 ? degree : level_degree;
    HomogeneousParts q;
    q.dim = dim;
    q.dropped_constant = 0.0;
    q.refine_rel_tol = refine_rel_tol;
    q.degree = 0;
    for (const auto& [j, part] : parts) {
        if (j <= d / 2) {
            q.parts.emplace(j, part);
            q.sup_norms[j] = sup_norms.at(j);
            q.degree = std::max(q.degree, j);
        }
    }
    return q;
}

Poly radial_restriction(const HomogeneousParts& h, const Vec3& direction) {
    double n2 = 0.0;
    for (int i = 0; i < h.dim; ++i) n2 += direction[static_cast<size_t>(i)] * direction[static_cast<size_t>(i)];
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
        throw std::invalid_argument("radial_restriction: direction is not a unit vector");
    std::vector<double> c(static_cast<size_t>(h.degree) + 1, 0.0);
    for (const auto& [j, part] : h.parts) c[static_cast<size_t>(j)] = part.eval(direction);
    return Poly(std::move(c));
}

MultiPoly reassemble(const HomogeneousParts& h, bool add_constant) {
    MultiPoly acc(h.dim);
    for (const auto& [j, part] : h.parts) acc = acc + part;
    if (add_constant && h.dropped_constant != 0.0) {
        MultiPoly c(h.dim, {{{0, 0, 0}, h.dropped_constant}});
        acc = acc + c;
    }
    return acc;
}

}  // namespace oscint
