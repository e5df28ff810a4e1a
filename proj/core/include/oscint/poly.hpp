// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_POLY_HPP
#define OSCINT_POLY_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace oscint {

/// Dense real univariate polynomial, coefficient k multiplying x^k.
/// Trailing zero coefficients are trimmed on construction; the zero
/// polynomial is represented as the single coefficient {0}.
class Poly {
  public:
    Poly() : c_{0.0} {}
    explicit Poly(std::vector<double> coeffs);

    static Poly monomial(int k, double coef = 1.0);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0.0; }
    bool is_constant() const { return c_.size() == 1; }

    const std::vector<double>& coeffs() const { return c_; }
    /// Coefficient of x^k; zero beyond the degree.
    double coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : 0.0;
    }

    /// Horner evaluation.
    double operator()(double x) const {
        double y = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) y = y * x + c_[i];
        return y;
    }

    Poly derivative() const;
    /// Antiderivative with zero constant term.
    Poly antiderivative() const;
    /// p(lambda * x).
    Poly scaled_arg(double lambda) const;
    /// p(-x).
    Poly reflected() const { return scaled_arg(-1.0); }
    /// Even/odd coefficient parts: p = even_part + odd_part.
    Poly even_part() const;
    Poly odd_part() const;
    /// odd_part(x) / x, a polynomial in its own right.
    Poly odd_part_over_x() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(double s) const;
    Poly operator-(double s) const;
    Poly operator+(double s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// max |c_k| over k in (d/2, d] for the given nominal degree d
    /// (defaults to the polynomial's own degree).
    double top_half_max(int nominal_degree = -1) const;

    /// Upper bound B >= 1 such that every real root lies in (-B, B).
    double cauchy_root_bound() const;

    /// Largest |c_k| (zero polynomial gives 0).
    double max_abs_coeff() const;

    /// JSON array "[c0, c1, ...]", constant term first.
    std::string to_json() const;
    static Poly from_json(const std::string& text);

  private:
    std::vector<double> c_;
};

inline Poly operator*(double s, const Poly& p) { return p * s; }

}  // namespace oscint

#endif
