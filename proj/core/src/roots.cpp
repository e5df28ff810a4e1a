// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0
//
// Certified real-root isolation for polynomials with double coefficients.
//
// Every double is a dyadic rational, so p(x) - shift scales to an integer
// polynomial exactly. Distinct-root counting uses the classical Sturm chain
// computed with integer pseudo-remainders (content-normalized); sign queries
// at dyadic points go through a double Horner evaluation with a running
// rounding-error majorant and fall back to exact integer evaluation only
// when the certified bound cannot decide the sign.

#include "oscint/roots.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "oscint/errors.hpp"

namespace oscint {

namespace {

constexpr double kEps = 2.220446049250313e-16;  // 2^-52

struct ExactPoly {
    std::vector<mpz_class> z;  // exact coefficients, z.back() != 0
    std::vector<double> img;   // scaled double image (same signs as z)
    std::vector<double> mag;   // |img|
    double conv_abs = 0.0;     // absolute error of img per coefficient

    int deg() const { return static_cast<int>(z.size()) - 1; }
    bool zero() const { return z.empty(); }
};

void strip_leading_zeros(std::vector<mpz_class>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void remove_content(std::vector<mpz_class>& c) {
    if (c.empty()) return;
    mpz_class g = 0;
    for (const mpz_class& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (mpz_class& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

ExactPoly make_exact(std::vector<mpz_class> zin) {
    strip_leading_zeros(zin);
    ExactPoly p;
    p.z = std::move(zin);
    if (p.zero()) return p;
    size_t maxbits = 0;
    for (const mpz_class& v : p.z) maxbits = std::max(maxbits, mpz_sizeinbase(v.get_mpz_t(), 2));
    // keep double images finite: drop low bits of huge coefficients
    const mp_bitcnt_t shift =
        maxbits > 500 ? static_cast<mp_bitcnt_t>(maxbits - 500) : 0;
    p.img.resize(p.z.size());
    p.mag.resize(p.z.size());
    mpz_class t;
    for (size_t i = 0; i < p.z.size(); ++i) {
        if (shift) {
            mpz_fdiv_q_2exp(t.get_mpz_t(), p.z[i].get_mpz_t(), shift);
            p.img[i] = t.get_d();
        } else {
            p.img[i] = p.z[i].get_d();
        }
        p.mag[i] = std::abs(p.img[i]);
    }
    // floor truncation costs <= 1 unit in the scaled representation;
    // double rounding of the big integers is covered by the relative term.
    p.conv_abs = shift ? 2.0 : 0.0;
    return p;
}

// Decompose a double into m * 2^t with integer |m| < 2^53.
void split_double(double x, long& m, int& t) {
    if (x == 0.0) {
        m = 0;
        t = 0;
        return;
    }
    int e;
    const double f = std::frexp(x, &e);
    m = static_cast<long>(std::ldexp(f, 53));
    t = e - 53;
}

int exact_sign_at(const ExactPoly& p, double x) {
    if (p.zero()) return 0;
    long ml;
    int t;
    split_double(x, ml, t);
    const mpz_class m(ml);
    const int d = p.deg();
    mpz_class acc = p.z[static_cast<size_t>(d)];
    if (t >= 0) {
        const mpz_class X = m << static_cast<unsigned>(t);
        for (int k = d - 1; k >= 0; --k) acc = acc * X + p.z[static_cast<size_t>(k)];
    } else {
        const unsigned u = static_cast<unsigned>(-t);
        mpz_class term;
        for (int k = d - 1; k >= 0; --k) {
            term = p.z[static_cast<size_t>(k)] << (u * static_cast<unsigned>(d - k));
            acc = acc * m + term;
        }
    }
    return sgn(acc);
}

// Certified sign with a double fast path.
int cert_sign_at(const ExactPoly& p, double x) {
    if (p.zero()) return 0;
    const int d = p.deg();
    double v = p.img[static_cast<size_t>(d)];
    double h = p.mag[static_cast<size_t>(d)];
    double g = 1.0;  // Horner of all-ones at |x|, bounds sum |x|^k
    const double ax = std::abs(x);
    for (int k = d - 1; k >= 0; --k) {
        v = v * x + p.img[static_cast<size_t>(k)];
        h = h * ax + p.mag[static_cast<size_t>(k)];
        g = g * ax + 1.0;
    }
    const double bound = kEps * (4.0 * d + 8.0) * h + p.conv_abs * g;
    if (std::isfinite(v) && std::isfinite(bound) && std::abs(v) > bound)
        return v > 0.0 ? 1 : -1;
    return exact_sign_at(p, x);
}

// r = lc(b)^e * (a mod b) for the number of scaling steps e actually taken.
std::vector<mpz_class> prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b,
                            int& scale_steps) {
    const mpz_class& lb = b.back();
    scale_steps = 0;
    while (true) {
        strip_leading_zeros(a);
        if (a.empty() || a.size() < b.size()) break;
        const size_t k = a.size() - b.size();
        const mpz_class la = a.back();
        for (mpz_class& v : a) v *= lb;
        ++scale_steps;
        for (size_t i = 0; i < b.size(); ++i) a[k + i] -= la * b[i];
    }
    return a;
}

struct SturmChain {
    std::vector<ExactPoly> elems;  // elems[0] ~ P, elems[1] ~ P', ...

    const ExactPoly& head() const { return elems.front(); }

    int variations_at(double x) const {
        int var = 0, prev = 0;
        for (const ExactPoly& e : elems) {
            const int s = cert_sign_at(e, x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }
};

SturmChain build_chain(std::vector<mpz_class> p0) {
    SturmChain chain;
    remove_content(p0);
    std::vector<mpz_class> p1(p0.size() > 1 ? p0.size() - 1 : 0);
    for (size_t k = 1; k < p0.size(); ++k) p1[k - 1] = static_cast<long>(k) * p0[k];
    remove_content(p1);

    chain.elems.push_back(make_exact(p0));
    if (p1.empty()) return chain;
    chain.elems.push_back(make_exact(p1));

    std::vector<mpz_class> prev = std::move(p0), cur = std::move(p1);
    while (cur.size() > 1) {
        int steps = 0;
        std::vector<mpz_class> r = prem(std::move(prev), cur, steps);
        strip_leading_zeros(r);
        if (r.empty()) break;
        // next element is -(a mod b) up to positive scale;
        // r = lc^steps * (a mod b), so flip the sign unless lc^steps < 0.
        const bool lc_pow_neg = (cur.back() < 0) && (steps % 2 == 1);
        if (!lc_pow_neg)
            for (mpz_class& v : r) v = -v;
        remove_content(r);
        prev = std::move(cur);
        cur = r;
        chain.elems.push_back(make_exact(std::move(r)));
    }
    return chain;
}

// Exact dyadic scaling of p - shift into integer coefficients.
std::vector<mpz_class> exact_coeffs(const Poly& p, double shift) {
    const std::vector<double>& c = p.coeffs();
    std::vector<long> mant(c.size(), 0);
    std::vector<int> expo(c.size(), 0);
    long ms;
    int ts;
    split_double(shift, ms, ts);
    int min_e = 0;
    bool any = false;
    for (size_t k = 0; k < c.size(); ++k) {
        split_double(c[k], mant[k], expo[k]);
        if (mant[k] != 0) {
            min_e = any ? std::min(min_e, expo[k]) : expo[k];
            any = true;
        }
    }
    if (ms != 0) {
        min_e = any ? std::min(min_e, ts) : ts;
        any = true;
    }
    if (!any) return {};
    std::vector<mpz_class> z(c.size());
    for (size_t k = 0; k < c.size(); ++k)
        if (mant[k] != 0)
            z[k] = mpz_class(mant[k]) << static_cast<unsigned>(expo[k] - min_e);
    if (ms != 0) z[0] -= mpz_class(ms) << static_cast<unsigned>(ts - min_e);
    strip_leading_zeros(z);
    return z;
}

// Remove every factor (x - a), a dyadic, from an exact polynomial.
void deflate_at(std::vector<mpz_class>& z, double a) {
    long ml;
    int t;
    split_double(a, ml, t);
    mpz_class num(ml);
    unsigned u = 0;
    if (t >= 0)
        num <<= static_cast<unsigned>(t);
    else
        u = static_cast<unsigned>(-t);
    while (z.size() > 1) {
        const int d = static_cast<int>(z.size()) - 1;
        // work in y = 2^u x, where the root becomes the integer `num`
        std::vector<mpz_class> w(z.size());
        for (size_t k = 0; k < z.size(); ++k)
            w[k] = z[k] << (u * static_cast<unsigned>(d - static_cast<int>(k)));
        std::vector<mpz_class> q(static_cast<size_t>(d));
        mpz_class carry = w.back();
        for (int k = d - 1; k >= 0; --k) {
            q[static_cast<size_t>(k)] = carry;
            carry = carry * num + w[static_cast<size_t>(k)];
        }
        if (carry != 0) break;  // multiplicity exhausted
        for (int k = 0; k < d; ++k) q[static_cast<size_t>(k)] <<= (u * static_cast<unsigned>(k));
        z = std::move(q);
        remove_content(z);
    }
}

struct Isolator {
    SturmChain chain;
    double width_tol;

    int sign_p(double x) const { return cert_sign_at(chain.head(), x); }
    int vars(double x) const { return chain.variations_at(x); }

    void refine_sign_change(double a, double b, int sa, std::vector<RootEnclosure>& out) const {
        while (b - a > width_tol * std::max(1.0, std::abs(a))) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            const int sm = sign_p(mid);
            if (sm == 0) {
                out.push_back({mid, mid});
                return;
            }
            if (sm == sa)
                a = mid;
            else
                b = mid;
        }
        out.push_back({a, b});
    }

    void refine_sturm(double a, double b, int va, std::vector<RootEnclosure>& out) const {
        while (b - a > width_tol * std::max(1.0, std::abs(a))) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            if (sign_p(mid) == 0) {
                out.push_back({mid, mid});
                return;
            }
            const int vm = vars(mid);
            if (va - vm >= 1)
                b = mid;
            else {
                a = mid;
                va = vm;
            }
        }
        out.push_back({a, b});
    }

    // roots in (a, b] with P(a) != 0, P(b) != 0; count = va - vb
    void isolate(double a, double b, int va, int vb, std::vector<RootEnclosure>& out) const {
        const int count = va - vb;
        if (count <= 0) return;
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) {
            out.push_back({a, b});  // cluster below double resolution
            return;
        }
        if (count == 1) {
            const int sa = sign_p(a), sb = sign_p(b);
            if (sa != sb)
                refine_sign_change(a, b, sa, out);
            else
                refine_sturm(a, b, va, out);
            return;
        }
        if (sign_p(mid) == 0) {
            out.push_back({mid, mid});
            const double lh = std::nextafter(mid, a);
            const double rl = std::nextafter(mid, b);
            if (lh > a && sign_p(lh) != 0) isolate(a, lh, va, vars(lh), out);
            if (rl < b && sign_p(rl) != 0) isolate(rl, b, vars(rl), vb, out);
            return;
        }
        const int vm = vars(mid);
        isolate(a, mid, va, vm, out);
        isolate(mid, b, vm, vb, out);
    }
};

std::vector<RootEnclosure> isolate_impl(const Poly& p, double a, double b,
                                        const RootIsolationOptions& opt) {
    std::vector<mpz_class> z = exact_coeffs(p, opt.shift);
    if (z.empty()) throw ZeroPolynomial{};
    std::vector<RootEnclosure> out;
    if (z.size() == 1 || !(a <= b)) return out;
    if (a == b) {
        if (cert_sign_at(make_exact(z), a) == 0) out.push_back({a, a});
        return out;
    }

    // endpoint roots: record, then deflate so the Sturm endpoints are nonroots
    if (cert_sign_at(make_exact(z), a) == 0) {
        out.push_back({a, a});
        deflate_at(z, a);
    }
    if (z.size() > 1 && cert_sign_at(make_exact(z), b) == 0) {
        out.push_back({b, b});
        deflate_at(z, b);
    }
    if (z.size() > 1) {
        Isolator iso{build_chain(std::move(z)), opt.width_tol};
        if (iso.chain.head().deg() >= 1) iso.isolate(a, b, iso.vars(a), iso.vars(b), out);
    }
    std::sort(out.begin(), out.end(),
              [](const RootEnclosure& x, const RootEnclosure& y) { return x.mid() < y.mid(); });
    return out;
}

}  // namespace

std::vector<RootEnclosure> isolate_roots(const Poly& p, double a, double b,
                                         const RootIsolationOptions& opt) {
    return isolate_impl(p, a, b, opt);
}

std::vector<RootEnclosure> isolate_roots_unbounded(const Poly& p, double a,
                                                   const RootIsolationOptions& opt) {
    const Poly shifted = opt.shift == 0.0 ? p : p - opt.shift;
    if (shifted.is_zero()) throw ZeroPolynomial{};
    double bound = shifted.cauchy_root_bound() * (1.0 + 1e-9) + 1.0;
    bound = std::max(bound, a + 1.0);
    return isolate_impl(p, a, bound, opt);
}

int exact_sign(const Poly& p, double x, double shift) {
    std::vector<mpz_class> z = exact_coeffs(p, shift);
    if (z.empty()) return 0;
    const ExactPoly e = make_exact(std::move(z));
    return cert_sign_at(e, x);
}

int count_roots(const Poly& p, double a, double b, double shift) {
    std::vector<mpz_class> z = exact_coeffs(p, shift);
    if (z.empty()) throw ZeroPolynomial{};
    if (z.size() == 1) return 0;
    const SturmChain chain = build_chain(std::move(z));
    return chain.variations_at(a) - chain.variations_at(b);
}

}  // namespace oscint
