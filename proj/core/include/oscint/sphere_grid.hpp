// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_SPHERE_GRID_HPP
#define OSCINT_SPHERE_GRID_HPP

#include <cstddef>
#include <vector>

#include "oscint/multipoly.hpp"

namespace oscint {

/// Quadrature rule on S^{n-1}, n in {1,2,3}: positive weights summing to the
/// surface measure, exact for spherical polynomials up to `order`.
/// Nodes are antipodally symmetric; `antipode(i)` indexes -node(i).
class SphereGrid {
  public:
    static SphereGrid build(int dim, int order);

    int dim() const { return dim_; }
    int order() const { return order_; }
    size_t size() const { return nodes_.size(); }
    const std::vector<Vec3>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    size_t antipode(size_t i) const { return antipode_[i]; }

    /// Total measure: 2, 2*pi, or 4*pi.
    static double surface_measure(int dim);

  private:
    int dim_ = 1;
    int order_ = 0;
    std::vector<Vec3> nodes_;
    std::vector<double> weights_;
    std::vector<size_t> antipode_;
};

}  // namespace oscint

#endif
