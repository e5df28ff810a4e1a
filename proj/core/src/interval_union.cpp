// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#include "oscint/interval_union.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "oscint/errors.hpp"

namespace oscint {

IntervalUnion::IntervalUnion(std::vector<Interval> iv, bool unbounded_tail)
    : iv_(std::move(iv)), unbounded_tail_(unbounded_tail) {
    for (const Interval& i : iv_)
        if (!(i.lo <= i.hi)) throw std::invalid_argument("interval with lo > hi");
    for (size_t k = 1; k < iv_.size(); ++k)
        if (!(iv_[k - 1].hi < iv_[k].lo))
            throw std::invalid_argument("intervals must be sorted and strictly disjoint");
    if (unbounded_tail_ && iv_.empty())
        throw std::invalid_argument("unbounded tail requires a final interval");
}

double IntervalUnion::log_measure() const {
    if (unbounded_tail_) throw InfiniteMeasure{};
    double s = 0.0;
    for (const Interval& i : iv_) {
        if (i.lo < 1.0) throw std::invalid_argument("log_measure requires intervals in [1, inf)");
        s += std::log(i.hi / i.lo);
    }
    return s;
}

double IntervalUnion::lebesgue_measure() const {
    if (unbounded_tail_) throw InfiniteMeasure{};
    double s = 0.0;
    for (const Interval& i : iv_) s += i.hi - i.lo;
    return s;
}

std::vector<IntervalUnion::Interval> IntervalUnion::complement_in(double lo, double hi) const {
    std::vector<Interval> out;
    double cur = lo;
    for (size_t k = 0; k < iv_.size(); ++k) {
        const double ilo = iv_[k].lo;
        const bool last_unbounded = unbounded_tail_ && k + 1 == iv_.size();
        const double ihi = last_unbounded ? hi : iv_[k].hi;
        if (ilo == ihi && !last_unbounded) continue;  // touch point, no gap
        if (ihi < cur) continue;
        if (ilo >= hi) break;
        if (ilo > cur) out.push_back({cur, std::min(ilo, hi)});
        cur = std::max(cur, std::min(ihi, hi));
        if (cur >= hi) break;
    }
    if (cur < hi) out.push_back({cur, hi});
    return out;
}

std::string IntervalUnion::to_string() const {
    std::ostringstream os;
    for (size_t k = 0; k < iv_.size(); ++k) {
        char buf[64];
        const bool last_unbounded = unbounded_tail_ && k + 1 == iv_.size();
        if (last_unbounded)
            std::snprintf(buf, sizeof buf, "[%.12g, inf)", iv_[k].lo);
        else
            std::snprintf(buf, sizeof buf, "[%.12g, %.12g]", iv_[k].lo, iv_[k].hi);
        os << (k ? " u " : "") << buf;
    }
    if (iv_.empty()) os << "{}";
    return os.str();
}

}  // namespace oscint
