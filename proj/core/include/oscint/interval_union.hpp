// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_INTERVAL_UNION_HPP
#define OSCINT_INTERVAL_UNION_HPP

#include <string>
#include <vector>

namespace oscint {

/// Finite union of disjoint closed intervals [lo_i, hi_i], sorted, with an
/// optional final interval extending to +infinity. Degenerate points
/// (lo == hi) are kept; they carry zero measure but mark tangential touches.
class IntervalUnion {
  public:
    struct Interval {
        double lo, hi;
    };

    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<Interval> iv, bool unbounded_tail = false);

    const std::vector<Interval>& intervals() const { return iv_; }
    bool unbounded() const { return unbounded_tail_; }
    bool empty() const { return iv_.empty(); }
    size_t size() const { return iv_.size(); }

    /// sum log(hi_i / lo_i); requires lo_0 >= 1 and no unbounded tail.
    /// Throws InfiniteMeasure on an unbounded tail.
    double log_measure() const;

    /// sum (hi_i - lo_i); throws InfiniteMeasure on an unbounded tail.
    double lebesgue_measure() const;

    /// Complement within [lo, hi]: the closed intervals of [lo, hi] not
    /// covered (degenerate members of the union produce no gap).
    std::vector<Interval> complement_in(double lo, double hi) const;

    std::string to_string() const;

  private:
    std::vector<Interval> iv_;
    bool unbounded_tail_ = false;  // last interval extends to +inf
};

}  // namespace oscint

#endif
