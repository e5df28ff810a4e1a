// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "oscint/errors.hpp"
#include "oscint/harness.hpp"
#include "oscint/poly.hpp"
#include "oscint/roots.hpp"

using namespace oscint;

TEST_CASE("spec examples") {
    // x^2 - 1 on [0, inf): one root near 1
    auto r = isolate_roots_unbounded(Poly({-1, 0, 1}), 0.0);
    REQUIRE(r.size() == 1);
    CHECK(r[0].mid() == doctest::Approx(1.0).epsilon(1e-10));

    // x^2 + 1: no real roots
    CHECK(isolate_roots(Poly({1, 0, 1}), -10.0, 10.0).empty());

    // (x-1)(x-2)(x-3) on [1.5, inf): roots 2 and 3
    const Poly p = Poly({-1, 1}) * Poly({-2, 1}) * Poly({-3, 1});
    auto r3 = isolate_roots_unbounded(p, 1.5);
    REQUIRE(r3.size() == 2);
    CHECK(r3[0].mid() == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(r3[1].mid() == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("zero polynomial is rejected") {
    CHECK_THROWS_AS(isolate_roots(Poly({0.0}), -1.0, 1.0), ZeroPolynomial);
    CHECK_THROWS_AS(isolate_roots(Poly({3.0}), -1.0, 1.0, {.shift = 3.0}), ZeroPolynomial);
}

TEST_CASE("endpoint roots are reported") {
    auto r = isolate_roots(Poly({-1, 0, 1}), 1.0, 5.0);  // root exactly at a = 1
    REQUIRE(r.size() == 1);
    CHECK(r[0].lo == 1.0);
    CHECK(r[0].hi == 1.0);
    auto r2 = isolate_roots(Poly({-1, 0, 1}), -5.0, -1.0);  // root exactly at b = -1
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].mid() == -1.0);
}

TEST_CASE("even multiplicity roots are found") {
    // (x - 2)^2 has no sign change
    const Poly p = Poly({-2, 1}) * Poly({-2, 1});
    auto r = isolate_roots(p, 0.0, 10.0);
    REQUIRE(r.size() == 1);
    CHECK(r[0].mid() == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r[0].hi - r[0].lo <= 1e-9);

    // (x-1)^2 (x-3)^3: distinct roots 1 and 3
    Poly q({1.0});
    for (int i = 0; i < 2; ++i) q = q * Poly({-1, 1});
    for (int i = 0; i < 3; ++i) q = q * Poly({-3, 1});
    auto rq = isolate_roots(q, 0.0, 10.0);
    REQUIRE(rq.size() == 2);
    CHECK(rq[0].mid() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rq[1].mid() == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("shifted isolation matches manual shift") {
    const Poly p({0, 0, 1});  // x^2
    auto r = isolate_roots(p, 0.0, 10.0, {.shift = 4.0});  // x^2 = 4
    REQUIRE(r.size() == 1);
    CHECK(r[0].mid() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("exact sign evaluation") {
    const Poly p({-1, 0, 1});
    CHECK(exact_sign(p, 1.0) == 0);
    CHECK(exact_sign(p, 0.5) < 0);
    CHECK(exact_sign(p, 2.0) > 0);
    // huge cancellation case: (x - 1/3)^3 expanded in doubles has fuzz near
    // the root, but the certified sign is still decided
    const Poly c = Poly({-1.0 / 3.0, 1}) * Poly({-1.0 / 3.0, 1}) * Poly({-1.0 / 3.0, 1});
    const int s = exact_sign(c, 1.0 / 3.0);
    CHECK((s == -1 || s == 0 || s == 1));
    CHECK(exact_sign(c, 0.4) > 0);
    CHECK(exact_sign(c, 0.2) < 0);
}

TEST_CASE("count_roots over intervals") {
    const Poly p = Poly({-1, 1}) * Poly({-2, 1}) * Poly({-3, 1});
    CHECK(count_roots(p, 0.0, 10.0) == 3);
    CHECK(count_roots(p, 1.5, 2.5) == 1);
    CHECK(count_roots(p, 3.5, 10.0) == 0);
}

TEST_CASE("random polynomials against a sign-scan oracle") {
    Rng rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = rng.uniform_int(2, 32);
        std::vector<double> c(static_cast<size_t>(d) + 1);
        for (double& v : c) v = rng.uniform(-10.0, 10.0);
        if (std::abs(c.back()) < 1e-3) c.back() = 1.0;
        const Poly p(c);
        const auto roots = isolate_roots(p, -20.0, 20.0);

        // every sign change across the scan grid must contain exactly one
        // enclosure; scan resolution far exceeds the enclosure width
        const int N = 1000000;
        const double h = 40.0 / N;
        double prev = p(-20.0);
        int crossings = 0;
        for (int i = 1; i <= N; ++i) {
            const double x = -20.0 + i * h;
            const double cur = p(x);
            if (prev != 0.0 && cur != 0.0 && (prev < 0) != (cur < 0)) {
                ++crossings;
                int inside = 0;
                for (const RootEnclosure& e : roots)
                    if (e.mid() >= x - h && e.mid() <= x) ++inside;
                CHECK(inside == 1);
            }
            prev = cur;
        }
        CHECK(static_cast<int>(roots.size()) >= crossings);
    }
}

TEST_CASE("enclosure width respects the tolerance") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = rng.uniform_int(2, 16);
        std::vector<double> c(static_cast<size_t>(d) + 1);
        for (double& v : c) v = rng.uniform(-5.0, 5.0);
        if (std::abs(c.back()) < 1e-3) c.back() = 1.0;
        const Poly p(c);
        for (const RootEnclosure& e : isolate_roots(p, -20.0, 20.0))
            CHECK(e.hi - e.lo <= 1e-12 * std::max(1.0, std::abs(e.lo)) * (1 + 1e-9));
    }
}
