#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "quiverhom/rational.hpp"

namespace quiverhom {

/// Univariate polynomial over Z, stored densely with trailing zeros trimmed.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    IntPolynomial(const Int& constant);  // NOLINT(google-explicit-constructor)
    IntPolynomial(long constant) : IntPolynomial(Int(constant)) {}
    explicit IntPolynomial(std::vector<Int> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Int& coeff(int i) const;  // 0 outside the stored range
    const std::vector<Int>& coeffs() const { return c_; }

    Int eval(const Int& x) const;
    IntPolynomial derivative() const;

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    /// Quotient of an exact division; throws std::logic_error on remainder.
    IntPolynomial divexact(const IntPolynomial& divisor) const;

    /// "1 + 2x + x^3" style; "0" for the zero polynomial.
    std::string to_string() const;

    static IntPolynomial monomial(const Int& coeff, int deg);

  private:
    void trim();
    std::vector<Int> c_;
};

}  // namespace quiverhom
