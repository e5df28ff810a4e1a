// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_MULTIPOLY_HPP
#define OSCINT_MULTIPOLY_HPP

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "oscint/poly.hpp"

namespace oscint {

using Vec3 = std::array<double, 3>;

/// Sparse real polynomial in n <= 3 variables: a list of
/// (exponent multi-index, coefficient) terms with distinct multi-indices.
class MultiPoly {
  public:
    struct Term {
        std::array<int, 3> exp{0, 0, 0};  // exponents of unused variables stay 0
        double coef = 0.0;
        int total_degree() const { return exp[0] + exp[1] + exp[2]; }
    };

    explicit MultiPoly(int dim) : dim_(dim) {}
    MultiPoly(int dim, std::vector<Term> terms);

    int dim() const { return dim_; }
    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    double eval(const Vec3& x) const;

    MultiPoly operator*(double s) const;
    MultiPoly operator+(const MultiPoly& o) const;

    /// p(lambda * x).
    MultiPoly scaled_arg(double lambda) const;

    /// True when every term has total degree exactly k (the zero
    /// polynomial is homogeneous of any degree).
    bool is_homogeneous(int k) const;

    /// Lift a univariate polynomial to dim 1 (terms in x1 only).
    static MultiPoly from_univariate(const Poly& p);

    /// Text format: one term per line, "coef e1 ... en".
    std::string to_text() const;
    static MultiPoly parse(const std::string& text, int dim);

  private:
    int dim_;
    std::vector<Term> terms_;  // sorted by exponent, coefficients nonzero
};

/// Decomposition P(r x') = sum_j P_j(x') r^j along rays, together with
/// sphere sup norms m_j of each homogeneous part. The constant term of the
/// source polynomial is dropped and recorded in `dropped_constant`.
struct HomogeneousParts {
    int dim = 1;
    int degree = 0;
    std::map<int, MultiPoly> parts;     // j -> P_j, only nonzero parts, 1 <= j <= degree
    std::map<int, double> sup_norms;    // j -> m_j
    double dropped_constant = 0.0;
    double refine_rel_tol = 1e-8;

    /// Parts with j <= degree/2 (the low half "Q" of the decomposition).
    HomogeneousParts low_half(int level_degree = -1) const;
};

/// Group terms by total degree and compute sphere sup norms.
/// Throws ConstantPolynomial when p has no term of positive degree.
HomogeneousParts homogeneous_parts(const MultiPoly& p, double refine_rel_tol = 1e-8);

/// The univariate polynomial r -> sum_j P_j(direction) r^j.
/// `direction` must be a unit vector to 1e-12.
Poly radial_restriction(const HomogeneousParts& h, const Vec3& direction);

/// Reassemble sum_j P_j (plus the dropped constant when add_constant).
MultiPoly reassemble(const HomogeneousParts& h, bool add_constant = false);

/// Sup norm of |p| over the unit sphere S^{n-1}, by dense sampling plus
/// local refinement to the given relative tolerance.
double sphere_sup_norm(const MultiPoly& p, double rel_tol = 1e-8);

}  // namespace oscint

#endif
