// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#include <gmpxx.h>

#include <cmath>

#include "doctest.h"
#include "oscint/bounds.hpp"
#include "oscint/detail/graded.hpp"
#include "oscint/errors.hpp"
#include "oscint/harness.hpp"
#include "oscint/lagrange.hpp"

using namespace oscint;

namespace {
constexpr double kPi = 3.14159265358979323846;

// independent graded oracle: dense scan for sign changes, bisected to full
// precision, then geometric Simpson panels toward each zero
double polweight_oracle_n2(const MultiPoly& p, int k, double sup) {
    const int N = 1 << 20;
    std::vector<double> zeros;
    auto geval = [&](double th) { return p.eval({std::cos(th), std::sin(th), 0.0}); };
    double prev = geval(0.0);
    if (prev == 0.0) zeros.push_back(0.0);
    for (int i = 1; i <= N; ++i) {
        const double th = 2.0 * kPi * i / N;
        const double cur = geval(th);
        if (cur == 0.0) {
            zeros.push_back(th);
        } else if (prev != 0.0 && (prev < 0.0) != (cur < 0.0)) {
            double lo = 2.0 * kPi * (i - 1) / N, hi = th;
            const bool lneg = prev < 0.0;
            for (int it = 0; it < 64; ++it) {
                const double mid = 0.5 * (lo + hi);
                if ((geval(mid) < 0.0) == lneg)
                    lo = mid;
                else
                    hi = mid;
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    auto f = [&](double th) {
        const double v = std::abs(p.eval({std::cos(th), std::sin(th), 0.0}));
        return std::pow(sup / std::max(v, 1e-300), 1.0 / (2.0 * k));
    };
    // composite Simpson between zeros with geometric refinement toward them
    double total = 0.0;
    std::vector<double> cuts;
    if (zeros.empty()) {
        cuts = {0.0, 2.0 * kPi};
    } else {
        cuts = zeros;
        cuts.push_back(zeros.front() + 2.0 * kPi);
    }
    for (size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double l = cuts[s], r = cuts[s + 1];
        const double mid = 0.5 * (l + r);
        for (int side = 0; side < 2; ++side) {
            const double from = side == 0 ? l : mid;
            const double to = side == 0 ? mid : r;
            const double sing = side == 0 ? l : r;
            // geometric panels toward `sing`
            double frac = 1.0;
            for (int j = 0; j < 48; ++j) {
                const double nf = 0.5 * frac;
                double a = side == 0 ? sing + nf * (to - from) : from + (1 - frac) * (to - from);
                double b = side == 0 ? sing + frac * (to - from) : from + (1 - nf) * (to - from);
                if (side == 1) {
                    a = to - frac * (to - from);
                    b = to - nf * (to - from);
                }
                const int m = 64;
                double acc = 0.0;
                for (int i = 0; i <= m; ++i) {
                    const double x = a + (b - a) * i / m;
                    const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
                    acc += w * f(x);
                }
                total += acc * (b - a) / (3.0 * m);
                frac = nf;
                if (frac * (to - from) < 1e-13) break;
            }
        }
    }
    return total;
}

}  // namespace

TEST_CASE("vdc_check closed form for a linear phase") {
    const VdcReport r = vdc_check(Poly({0, 1}), 10.0, 0.0, 1.0);
    CHECK(r.monotonicity_changes == 1);
    const double expect = std::abs(std::polar(1.0, 10.0) - Complex{1.0, 0.0}) / 10.0;
    CHECK(r.integral_modulus == doctest::Approx(expect).epsilon(1e-10));
    CHECK(r.ratio == doctest::Approx(expect * 10.0));
}

TEST_CASE("vdc_check rejects slow phases") {
    // phi = x^2/2 has phi' = x < 1 on part of [0.5, 3]
    CHECK_THROWS_AS(vdc_check(Poly({0, 0, 0.5}), 10.0, 0.5, 3.0), HypothesisViolated);
    // but is admissible on [1, 3]
    const VdcReport ok = vdc_check(Poly({0, 0, 0.5}), 100.0, 1.0, 3.0);
    CHECK(ok.monotonicity_changes == 1);
    CHECK(ok.ratio < 10.0);
}

TEST_CASE("vdc decay in lambda") {
    const Poly phase({0, 1, 0, 1.0 / 3.0});  // x + x^3/3, phi' = 1 + x^2 >= 1
    double max_ratio = 0.0;
    for (double lambda = 10.0; lambda <= 1e4; lambda *= 4.0) {
        const VdcReport r = vdc_check(phase, lambda, 1.0, 2.0);
        CHECK(r.monotonicity_changes == 1);
        max_ratio = std::max(max_ratio, r.ratio);
    }
    CHECK(max_ratio < 10.0);  // modulus decays like 1/lambda
}

TEST_CASE("vdc monotonicity count") {
    // phi'' = (x-1)(x-2) changes sign twice inside (0, 3)
    const Poly d2 = Poly({-1, 1}) * Poly({-2, 1});
    Poly phase = d2.antiderivative().antiderivative() + Poly({0, 30});  // keep |phi'| >= 1
    const VdcReport r = vdc_check(phase, 50.0, 0.0, 3.0);
    CHECK(r.monotonicity_changes == 3);
}

TEST_CASE("polweight trivial cases") {
    // |x|^2 + |y|^2 = 1 on the circle: integrand is 1
    const MultiPoly circ(2, {{{2, 0, 0}, 1.0}, {{0, 2, 0}, 1.0}});
    CHECK(polweight_integral(circ, 2) == doctest::Approx(2.0 * kPi).epsilon(1e-6));
    // one dimension: both endpoints realize the sup
    const MultiPoly cubic(1, {{{3, 0, 0}, 5.0}});
    CHECK(polweight_integral(cubic, 1) == doctest::Approx(2.0));
    CHECK_THROWS_AS(polweight_integral(MultiPoly(2), 2), ZeroPolynomial);
}

TEST_CASE("polweight P = x against the closed form") {
    const MultiPoly x(2, {{{1, 0, 0}, 1.0}});
    const double v = polweight_integral(x, 2);
    // integral of |cos|^(-1/2) over the circle: 2 B(1/4, 1/2)
    const double closed =
        2.0 * std::exp(std::lgamma(0.25) + std::lgamma(0.5) - std::lgamma(0.75));
    CHECK(v == doctest::Approx(closed).epsilon(1e-5));
    CHECK(v == doctest::Approx(polweight_oracle_n2(x, 1, 1.0)).epsilon(1e-3));
}

TEST_CASE("polweight P = xy against the graded oracle") {
    const MultiPoly xy(2, {{{1, 1, 0}, 1.0}});
    const double v = polweight_integral(xy, 2);
    CHECK(v == doctest::Approx(polweight_oracle_n2(xy, 2, 0.5)).epsilon(1e-3));
    CHECK(std::isfinite(v));
}

TEST_CASE("polweight random homogeneous suite stays bounded") {
    Rng rng(31);
    double running_max = 0.0;
    for (int it = 0; it < 25; ++it) {
        const int k = rng.uniform_int(1, 6);
        std::vector<MultiPoly::Term> terms;
        for (int a = 0; a <= k; ++a) terms.push_back({{a, k - a, 0}, rng.uniform(-1.0, 1.0)});
        const MultiPoly p(2, terms);
        if (p.is_zero()) continue;
        const double v = polweight_integral(p, 2);
        CHECK(std::isfinite(v));
        running_max = std::max(running_max, v);
    }
    CHECK(running_max < 60.0);
}

TEST_CASE("polweight in three dimensions") {
    // |z|-type harmonic: zero set is the equator circle
    const MultiPoly z(3, {{{0, 0, 1}, 1.0}});
    const double v = polweight_integral(z, 3);
    // closed form: sup = 1; integral of |z|^(-1/2) over S^2 = 2 pi * 2 * 2/...
    // with dsigma = dz dtheta: 2 pi * integral_{-1}^{1} |z|^{-1/2} dz = 8 pi
    CHECK(v == doctest::Approx(8.0 * kPi).epsilon(1e-4));
}

TEST_CASE("elementary symmetric functions") {
    CHECK(elementary_symmetric<double>({2.0, 3.0, 4.0}, 0) == 1.0);
    CHECK(elementary_symmetric<double>({1.0, 2.0, 3.0}, 2) == doctest::Approx(11.0));
    CHECK(elementary_symmetric<double>({1.0, 2.0}, 2) == doctest::Approx(2.0));
    // binomial-type domination used in the coefficient bound
    const double t = 1.7;
    const int d = 9;
    std::vector<double> vals;
    for (int i = 0; i <= d; ++i) vals.push_back(std::pow(t, -i));
    for (int k = 1; k <= d; ++k) {
        double binom = 1.0;
        for (int i = 0; i < k; ++i) binom = binom * (d + 1 - i) / (i + 1.0);
        CHECK(elementary_symmetric(vals, k) <=
              binom / std::pow(t, 0.5 * k * (k - 1)) * (1 + 1e-12));
    }
}

TEST_CASE("lagrange recovery") {
    CHECK(lagrange_recover({1, 2}, {1, 2}) == Poly({0, 1}));
    const Poly p({1, -3, 1});
    const Poly rec = lagrange_recover({1, 2, 4}, {p(1), p(2), p(4)});
    for (int k = 0; k <= 2; ++k)
        CHECK(rec.coeff(k) == doctest::Approx(p.coeff(k)).epsilon(1e-10));
    CHECK_THROWS_AS(lagrange_recover({1, 1}, {0, 0}), DuplicateNodes);
}

TEST_CASE("lagrange recovery at geometric nodes, degree 8") {
    Rng rng(8);
    const double t = 1.5;
    std::vector<double> xs;
    for (int j = 0; j <= 8; ++j) xs.push_back(std::pow(t, j));
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> c(9);
        for (double& v : c) v = rng.uniform(-3.0, 3.0);
        const Poly p(c);
        std::vector<double> ys;
        for (double x : xs) ys.push_back(p(x));
        const Poly rec = lagrange_recover(xs, ys);
        for (int k = 0; k <= 8; ++k)
            CHECK(rec.coeff(k) ==
                  doctest::Approx(p.coeff(k)).epsilon(1e-8).scale(std::max(1.0, p.max_abs_coeff())));
    }
}

TEST_CASE("lagrange recovery in exact rationals") {
    std::vector<mpq_class> xs{mpq_class(1), mpq_class(3, 2), mpq_class(9, 4)};
    const std::vector<mpq_class> want{mpq_class(1), mpq_class(-2), mpq_class(1, 3)};
    std::vector<mpq_class> ys;
    for (const mpq_class& x : xs)
        ys.push_back(want[0] + want[1] * x + want[2] * x * x);
    const auto got = lagrange_coefficients(xs, ys);
    for (size_t i = 0; i < want.size(); ++i) CHECK(got[i] == want[i]);
}

TEST_CASE("node system") {
    const NodeSystem ns = node_system(2.0, 1);
    CHECK(ns.j_star == 0);
    CHECK(ns.A == doctest::Approx(1.0 / 3.0));
    CHECK(ns.B == 0.0);  // t^0 - 1
    CHECK(ns.Gamma == doctest::Approx(0.5));

    // uniqueness and range over a grid of (t, d); the provable sharp range
    // is j <= d/2 (attained for even d near t = 1), which for odd d is the
    // stated (d-1)/2
    Rng rng(77);
    for (int it = 0; it < 2000; ++it) {
        const double t = 1.0 + rng.log_uniform(1e-6, 9.0);
        const int d = rng.uniform_int(1, 64);
        const auto [count, j] = node_index_scan(t, d);
        CHECK(count == 1);
        CHECK(j >= 0);
        CHECK(2 * j <= d);
        if (d % 2 == 1) CHECK(2 * j <= d - 1);
        const NodeSystem s = node_system(t, d);
        CHECK(s.A > 0.0);
        CHECK(s.B >= 0.0);
        CHECK(s.Gamma > 0.0);
        if (std::pow(t, d) < 1e15) {
            // strict upper bounds hold whenever they are representable
            CHECK(s.A < 1.0);
            CHECK(s.B < 1.0);
            CHECK(s.Gamma < 1.0);
        }
    }
    // t -> 1+: the index approaches (d-1)/2 for odd d, d/2 for even d
    const auto [c1, j1] = node_index_scan(1.0 + 1e-9, 11);
    CHECK(c1 == 1);
    CHECK(j1 == 5);
    const auto [c2, j2] = node_index_scan(1.1, 2);
    CHECK(c2 == 1);
    CHECK(j2 == 1);  // even-degree counterexample to the (d-1)/2 phrasing
}

TEST_CASE("coefficient bound dominates interpolants of small data") {
    Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const double t = 1.01 + rng.uniform(0.0, 1.99);
        const int d = rng.uniform_int(1, 16);
        const double alpha = rng.log_uniform(1e-3, 1e2);
        std::vector<double> xs, ys;
        for (int j = 0; j <= d; ++j) {
            xs.push_back(std::pow(t, j));
            ys.push_back(rng.uniform(-alpha, alpha));
        }
        const Poly rec = lagrange_recover(xs, ys);
        for (int k = d / 2 + 1; k <= d; ++k) {
            const double bound = eq32_bracket(alpha, d, k, t);
            CHECK(std::abs(rec.coeff(k)) <= bound * (1.0 + 1e-9) + 1e-12);
        }
    }
}

TEST_CASE("coefficient bound in exact rationals") {
    Rng rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const mpq_class t(101 + rng.uniform_int(0, 199), 100);  // 1.01 .. 3.00
        const int d = rng.uniform_int(1, 8);
        const mpq_class alpha(rng.uniform_int(1, 1000), rng.uniform_int(1, 1000));
        std::vector<mpq_class> xs, ys;
        mpq_class xp(1);
        for (int j = 0; j <= d; ++j) {
            xs.push_back(xp);
            xp = xp * t;
            const int num = rng.uniform_int(-1000, 1000);
            ys.push_back(alpha * mpq_class(num, 1000));
        }
        const auto coeffs = lagrange_coefficients(xs, ys);
        for (int k = d / 2 + 1; k <= d; ++k) {
            const mpq_class bound = eq32_bracket_t<mpq_class>(alpha, d, k, t);
            CHECK(abs(coeffs[static_cast<size_t>(k)]) <= bound);
        }
    }
}

TEST_CASE("eq32 edge cases") {
    CHECK(eq32_bracket(0.0, 4, 3, 1.5) == 0.0);
    // zero data forces zero coefficients
    const Poly zero = lagrange_recover({1, 2, 4, 8}, {0, 0, 0, 0});
    for (int k = 0; k <= 3; ++k) CHECK(zero.coeff(k) == 0.0);
    // k = d, large t: compare against the direct divided-difference bound
    const double t = 8.0, alpha = 1.0;
    const int d = 5;
    std::vector<double> xs;
    for (int j = 0; j <= d; ++j) xs.push_back(std::pow(t, j));
    double dd = 0.0;
    for (int j = 0; j <= d; ++j) {
        double prod = 1.0;
        for (int i = 0; i <= d; ++i)
            if (i != j) prod *= std::abs(xs[static_cast<size_t>(j)] - xs[static_cast<size_t>(i)]);
        dd += alpha / prod;
    }
    CHECK(eq32_bracket(alpha, d, d, t) >= dd * (1.0 - 1e-12));
}
