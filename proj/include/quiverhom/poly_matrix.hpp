#pragma once

#include <vector>

#include "quiverhom/int_polynomial.hpp"

namespace quiverhom {

/// Square matrix over Z[x].
class PolyMatrix {
  public:
    explicit PolyMatrix(int r) : r_(r), m_(static_cast<size_t>(r) * r) {}

    int size() const { return r_; }
    IntPolynomial& at(int i, int j) { return m_[static_cast<size_t>(i) * r_ + j]; }
    const IntPolynomial& at(int i, int j) const { return m_[static_cast<size_t>(i) * r_ + j]; }

    bool constant_term_is_identity() const;
    PolyMatrix transpose() const;
    bool operator==(const PolyMatrix& o) const { return r_ == o.r_ && m_ == o.m_; }

    static PolyMatrix identity(int r);

  private:
    int r_;
    std::vector<IntPolynomial> m_;
};

/// Exact determinant: cofactor expansion for r <= 4, fraction-free Bareiss
/// elimination over Z[x] above that.
IntPolynomial det_poly_matrix(const PolyMatrix& m);

/// Transposed cofactor matrix, so that adj(M) * M = det(M) * I.
PolyMatrix adjugate(const PolyMatrix& m);

}  // namespace quiverhom
