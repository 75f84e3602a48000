#pragma once

#include <string>
#include <vector>

#include "quiverhom/poly_matrix.hpp"
#include "quiverhom/rational.hpp"

namespace quiverhom {

/// Power series over Q truncated at a fixed order N: coefficients a_0..a_N.
/// Binary operations require equal orders; use truncate() to re-cut first.
class RationalSeries {
  public:
    explicit RationalSeries(int order) : c_(static_cast<size_t>(order) + 1) {}
    RationalSeries(int order, std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    Rational& coeff(int i) { return c_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool all_integer() const;

    RationalSeries truncate(int new_order) const;
    /// Substitute x -> x^m, truncated at this order.
    RationalSeries stretch(int m) const;

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator-(const RationalSeries& o) const;
    RationalSeries operator*(const RationalSeries& o) const;
    RationalSeries operator*(const Rational& s) const;
    bool operator==(const RationalSeries& o) const { return c_ == o.c_; }

    std::string to_string() const;

    static RationalSeries from_polynomial(const IntPolynomial& p, int order);

  private:
    std::vector<Rational> c_;
};

/// log p truncated at order N, via log p = sum_{m>=1} (-1)^{m+1} (p-1)^m / m.
/// Requires p(0) = 1.
RationalSeries series_log(const IntPolynomial& p, int order);

/// Termwise derivative; result order is N-1.
RationalSeries series_derivative(const RationalSeries& f);

/// q with p*q = 1 mod x^{N+1}. Requires p(0) in {1,-1}; coefficients of the
/// result are integers.
RationalSeries series_inverse(const IntPolynomial& p, int order);

/// Entries of M^{-1} over Z[[x]] to order N, as adjugate over det. Requires
/// M(0) = identity. Row-major r*r result.
std::vector<RationalSeries> matrix_inverse_series(const PolyMatrix& m, int order);

}  // namespace quiverhom
