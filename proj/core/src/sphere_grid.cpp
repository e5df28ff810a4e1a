// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#include "oscint/sphere_grid.hpp"

#include <cmath>
#include <stdexcept>

#include "oscint/detail/gauss.hpp"

namespace oscint {

double SphereGrid::surface_measure(int dim) {
    switch (dim) {
        case 1: return 2.0;
        case 2: return 2.0 * M_PI;
        case 3: return 4.0 * M_PI;
        default: throw std::invalid_argument("sphere dimension must be 1..3");
    }
}

SphereGrid SphereGrid::build(int dim, int order) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("sphere dimension must be 1..3");
    if (order < 1) order = 1;
    SphereGrid g;
    g.dim_ = dim;
    g.order_ = order;
    if (dim == 1) {
        g.nodes_ = {{1.0, 0.0, 0.0}, {-1.0, 0.0, 0.0}};
        g.weights_ = {1.0, 1.0};
        g.antipode_ = {1, 0};
        return g;
    }
    if (dim == 2) {
        // uniform rule, exact for trigonometric degree < nt
        int nt = order + 2;
        if (nt % 2) ++nt;
        const double w = 2.0 * M_PI / nt;
        g.nodes_.reserve(static_cast<size_t>(nt));
        for (int k = 0; k < nt; ++k) {
            const double th = 2.0 * M_PI * k / nt;
            g.nodes_.push_back({std::cos(th), std::sin(th), 0.0});
            g.weights_.push_back(w);
        }
        g.antipode_.resize(static_cast<size_t>(nt));
        for (int k = 0; k < nt; ++k)
            g.antipode_[static_cast<size_t>(k)] = static_cast<size_t>((k + nt / 2) % nt);
        return g;
    }
    // dim == 3: Gauss-Legendre in z, uniform azimuth
    const int mz = order / 2 + 1;
    int nt = 2 * (order + 1);
    if (nt % 2) ++nt;
    std::vector<double> zx, zw;
    detail::legendre_rule(mz, zx, zw);
    g.nodes_.reserve(static_cast<size_t>(mz) * static_cast<size_t>(nt));
    for (int i = 0; i < mz; ++i) {
        const double z = zx[static_cast<size_t>(i)];
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double w = zw[static_cast<size_t>(i)] * 2.0 * M_PI / nt;
        for (int j = 0; j < nt; ++j) {
            const double th = 2.0 * M_PI * j / nt;
            g.nodes_.push_back({r * std::cos(th), r * std::sin(th), z});
            g.weights_.push_back(w);
        }
    }
    g.antipode_.resize(g.nodes_.size());
    for (int i = 0; i < mz; ++i)
        for (int j = 0; j < nt; ++j) {
            const size_t idx = static_cast<size_t>(i) * nt + static_cast<size_t>(j);
            const size_t ai = static_cast<size_t>(mz - 1 - i);
            const size_t aj = static_cast<size_t>((j + nt / 2) % nt);
            g.antipode_[idx] = ai * nt + aj;
        }
    return g;
}

}  // namespace oscint
