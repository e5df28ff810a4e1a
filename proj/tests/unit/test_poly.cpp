// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "oscint/errors.hpp"
#include "oscint/harness.hpp"
#include "oscint/multipoly.hpp"
#include "oscint/poly.hpp"

using namespace oscint;

TEST_CASE("poly evaluation") {
    CHECK(Poly({0, 1})(3.0) == 3.0);
    CHECK(Poly({1, 0, -2})(2.0) == -7.0);
    CHECK(Poly({0, 0, 0, 1})(1.5) == doctest::Approx(3.375).epsilon(1e-15));
    CHECK(Poly({5})(123.0) == 5.0);
}

TEST_CASE("poly derivative") {
    CHECK(Poly({5}).derivative() == Poly({0}));
    CHECK(Poly({0, 0, 1}).derivative() == Poly({0, 2}));
    CHECK(Poly({1, 1, 1, 1}).derivative() == Poly({1, 2, 3}));
}

TEST_CASE("derivative of antiderivative is the identity") {
    Rng rng(99);
    for (int it = 0; it < 50; ++it) {
        std::vector<double> c(static_cast<size_t>(rng.uniform_int(1, 12)));
        for (double& v : c) v = rng.uniform(-10.0, 10.0);
        const Poly p(c);
        const Poly round_trip = p.antiderivative().derivative();
        REQUIRE(round_trip.degree() == p.degree());
        for (int k = 0; k <= p.degree(); ++k)  // k/(k+1)*(k+1) rounds twice
            CHECK(round_trip.coeff(k) == doctest::Approx(p.coeff(k)).epsilon(1e-15));
    }
}

TEST_CASE("degree bookkeeping and trimming") {
    CHECK(Poly({1, 2, 0, 0}).degree() == 1);
    CHECK(Poly({0, 0}).degree() == 0);
    CHECK(Poly({0, 0}).is_zero());
    CHECK(Poly({3}).is_constant());
    CHECK(Poly({0, 1}).coeff(5) == 0.0);
}

TEST_CASE("even and odd parts") {
    const Poly p({1, 2, 3, 4, 5});
    CHECK(p.even_part() + p.odd_part() == p);
    CHECK(p.odd_part_over_x() == Poly({2, 0, 4}));
    CHECK(p.reflected()(2.0) == p(-2.0));
}

TEST_CASE("top half maximum") {
    const Poly p({9, 9, 0.5, -2});  // d = 3, top half k in {2, 3}
    CHECK(p.top_half_max() == 2.0);
    CHECK(Poly({1, 5}).top_half_max() == 5.0);
}

TEST_CASE("json round trip") {
    const Poly p({0.5, -1.25, 3});
    CHECK(Poly::from_json(p.to_json()) == p);
    CHECK(Poly::from_json("[0, 1]") == Poly({0, 1}));
}

TEST_CASE("homogeneous parts: x + xy") {
    const MultiPoly p(2, {{{1, 0, 0}, 1.0}, {{1, 1, 0}, 1.0}});
    const HomogeneousParts h = homogeneous_parts(p);
    REQUIRE(h.parts.size() == 2);
    CHECK(h.degree == 2);
    CHECK(h.sup_norms.at(1) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(h.sup_norms.at(2) == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("homogeneous parts: 3x^2 in one dimension") {
    const MultiPoly p(1, {{{2, 0, 0}, 3.0}});
    const HomogeneousParts h = homogeneous_parts(p);
    CHECK(h.sup_norms.at(2) == 3.0);
}

TEST_CASE("homogeneous parts: x^2 + y^2 is 1 on the circle") {
    const MultiPoly p(2, {{{2, 0, 0}, 1.0}, {{0, 2, 0}, 1.0}});
    const HomogeneousParts h = homogeneous_parts(p);
    CHECK(h.sup_norms.at(2) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("constant polynomial cannot be decomposed") {
    const MultiPoly p(2, {{{0, 0, 0}, 4.0}});
    CHECK_THROWS_AS(homogeneous_parts(p), ConstantPolynomial);
}

TEST_CASE("constant term is dropped but recorded") {
    const MultiPoly p(1, {{{0, 0, 0}, 7.0}, {{1, 0, 0}, 2.0}});
    const HomogeneousParts h = homogeneous_parts(p);
    CHECK(h.dropped_constant == 7.0);
    CHECK(reassemble(h, true).eval({1.5, 0, 0}) == doctest::Approx(p.eval({1.5, 0, 0})));
}

TEST_CASE("radial restriction examples") {
    const MultiPoly p(2, {{{1, 0, 0}, 1.0}, {{1, 1, 0}, 1.0}});
    const HomogeneousParts h = homogeneous_parts(p);
    const Poly r1 = radial_restriction(h, {1.0, 0.0, 0.0});
    CHECK(r1.coeff(1) == 1.0);
    CHECK(r1.coeff(2) == 0.0);
    const MultiPoly q(2, {{{2, 0, 0}, 1.0}, {{0, 2, 0}, 1.0}});
    const Poly r2 = radial_restriction(homogeneous_parts(q), {0.0, 1.0, 0.0});
    CHECK(r2.coeff(2) == doctest::Approx(1.0));
    const MultiPoly lin(2, {{{1, 0, 0}, 1.0}});
    const Poly r3 = radial_restriction(homogeneous_parts(lin), {-1.0, 0.0, 0.0});
    CHECK(r3.coeff(1) == -1.0);
    CHECK_THROWS(radial_restriction(h, {0.5, 0.0, 0.0}));
}

TEST_CASE("radial restriction agrees with direct evaluation") {
    Rng rng(7);
    for (int n = 1; n <= 3; ++n) {
        const MultiPoly p = random_poly(n == 3 ? 4 : 6, n, rng, CoeffDist::UniformUnit);
        const HomogeneousParts h = homogeneous_parts(p);
        for (int it = 0; it < 100; ++it) {
            Vec3 dir{0, 0, 0};
            double norm = 0.0;
            for (int i = 0; i < n; ++i) {
                dir[static_cast<size_t>(i)] = rng.uniform(-1.0, 1.0);
                norm += dir[static_cast<size_t>(i)] * dir[static_cast<size_t>(i)];
            }
            norm = std::sqrt(norm);
            if (norm < 1e-3) continue;
            for (int i = 0; i < n; ++i) dir[static_cast<size_t>(i)] /= norm;
            const Poly ray = radial_restriction(h, dir);
            const double r = rng.uniform(0.1, 3.0);
            const Vec3 x{dir[0] * r, dir[1] * r, dir[2] * r};
            const double direct = p.eval(x) - h.dropped_constant;
            CHECK(ray(r) == doctest::Approx(direct).epsilon(1e-10));
        }
    }
}

TEST_CASE("sup norms dominate random sphere sampling") {
    Rng rng(21);
    for (int n = 2; n <= 3; ++n) {
        const MultiPoly p = random_poly(n == 3 ? 4 : 6, n, rng, CoeffDist::UniformUnit);
        const HomogeneousParts h = homogeneous_parts(p);
        for (const auto& [j, part] : h.parts) {
            double sample_max = 0.0;
            for (int it = 0; it < 100000; ++it) {
                Vec3 v{rng.uniform(-1, 1), rng.uniform(-1, 1),
                       n == 3 ? rng.uniform(-1, 1) : 0.0};
                const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
                if (norm < 1e-6 || norm > 1.0) continue;
                for (double& c : v) c /= norm;
                sample_max = std::max(sample_max, std::abs(part.eval(v)));
            }
            const double sup = h.sup_norms.at(j);
            CHECK(sup >= sample_max * (1.0 - 1e-9));
            CHECK(sup <= sample_max * (1.0 + 5e-3) + 1e-12);
        }
    }
}

TEST_CASE("multipoly text round trip") {
    const MultiPoly p(2, {{{1, 0, 0}, 1.5}, {{0, 2, 0}, -2.0}});
    const MultiPoly q = MultiPoly::parse(p.to_text(), 2);
    CHECK(q.terms().size() == p.terms().size());
    CHECK(q.eval({0.3, 0.7, 0}) == doctest::Approx(p.eval({0.3, 0.7, 0})));
}
