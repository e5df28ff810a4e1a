// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#include "oscint/poly.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace oscint {

namespace {
void trim(std::vector<double>& c) {
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    if (c.empty()) c.push_back(0.0);
}
}  // namespace

Poly::Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(c_); }

Poly Poly::monomial(int k, double coef) {
    std::vector<double> c(static_cast<size_t>(k) + 1, 0.0);
    c.back() = coef;
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() == 1) return Poly{};
    std::vector<double> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
    std::vector<double> a(c_.size() + 1, 0.0);
    for (size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<double>(k + 1);
    return Poly(std::move(a));
}

Poly Poly::scaled_arg(double lambda) const {
    std::vector<double> s(c_.size());
    double pw = 1.0;
    for (size_t k = 0; k < c_.size(); ++k) {
        s[k] = c_[k] * pw;
        pw *= lambda;
    }
    return Poly(std::move(s));
}

Poly Poly::even_part() const {
    std::vector<double> e(c_.size(), 0.0);
    for (size_t k = 0; k < c_.size(); k += 2) e[k] = c_[k];
    return Poly(std::move(e));
}

Poly Poly::odd_part() const {
    std::vector<double> o(c_.size(), 0.0);
    for (size_t k = 1; k < c_.size(); k += 2) o[k] = c_[k];
    return Poly(std::move(o));
}

Poly Poly::odd_part_over_x() const {
    if (c_.size() < 2) return Poly{};
    std::vector<double> o(c_.size() - 1, 0.0);
    for (size_t k = 1; k < c_.size(); k += 2) o[k - 1] = c_[k];
    return Poly(std::move(o));
}

Poly Poly::operator-() const {
    std::vector<double> n(c_);
    for (double& v : n) v = -v;
    return Poly(std::move(n));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<double> s(std::max(c_.size(), o.c_.size()), 0.0);
    for (size_t k = 0; k < c_.size(); ++k) s[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) s[k] += o.c_[k];
    return Poly(std::move(s));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly{};
    std::vector<double> p(c_.size() + o.c_.size() - 1, 0.0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(p));
}

Poly Poly::operator*(double s) const {
    std::vector<double> n(c_);
    for (double& v : n) v *= s;
    return Poly(std::move(n));
}

Poly Poly::operator-(double s) const {
    std::vector<double> n(c_);
    n[0] -= s;
    return Poly(std::move(n));
}

Poly Poly::operator+(double s) const {
    std::vector<double> n(c_);
    n[0] += s;
    return Poly(std::move(n));
}

double Poly::top_half_max(int nominal_degree) const {
    const int d = nominal_degree < 0 ? degree() : nominal_degree;
    double m = 0.0;
    for (int k = d / 2 + 1; k <= d; ++k) m = std::max(m, std::abs(coeff(k)));
    return m;
}

double Poly::cauchy_root_bound() const {
    const int d = degree();
    if (d == 0) return 1.0;
    const double lead = std::abs(c_.back());
    double m = 0.0;
    for (int k = 0; k < d; ++k) m = std::max(m, std::abs(c_[static_cast<size_t>(k)]));
    return 1.0 + m / lead;
}

double Poly::max_abs_coeff() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

std::string Poly::to_json() const {
    std::ostringstream os;
    os << '[';
    for (size_t k = 0; k < c_.size(); ++k) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", c_[k]);
        os << (k ? "," : "") << buf;
    }
    os << ']';
    return os.str();
}

Poly Poly::from_json(const std::string& text) {
    std::vector<double> c;
    std::string body = text;
    for (char& ch : body)
        if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
    std::istringstream is(body);
    double v;
    while (is >> v) c.push_back(v);
    if (c.empty()) throw std::invalid_argument("empty polynomial literal: " + text);
    return Poly(std::move(c));
}

}  // namespace oscint
