#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quiverhom/int_polynomial.hpp"
#include "quiverhom/presentation.hpp"

namespace quiverhom {

/// Sorted-by-index sparse coefficient vector over the algebra basis.
using SparseVec = std::vector<std::pair<int, Rational>>;

struct BasisElement {
    int degree = 0;
    int src = 0;  // element lies in e_tgt * A * e_src
    int tgt = 0;
    std::vector<int> word;  // arrow indices in application order; empty = idempotent
};

/// Finite-dimensional algebra kQ/(I + J^t), graded by path length, with an
/// explicit monomial basis and exact structure constants. Degree 0 is spanned
/// by the vertex idempotents e_1..e_r (basis indices 0..r-1). Immutable after
/// construction.
class GradedAlgebra {
  public:
    int num_vertices() const { return r_; }
    int top_degree() const { return s_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisElement& element(int k) const { return basis_[static_cast<size_t>(k)]; }
    int idempotent(int vertex) const { return vertex; }
    const Presentation& presentation() const { return pres_; }

    /// Product a*b of two basis elements, b acting first.
    const SparseVec& product(int a, int b) const {
        return table_[static_cast<size_t>(a) * basis_.size() + b];
    }

    /// Bilinear product of dense coefficient vectors (length dim()).
    std::vector<Rational> multiply(const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) const;

    /// dim e_j A_l e_i for 0-based vertices; throws on out-of-range vertices.
    long block_dim(int i, int j, int l) const;

    std::vector<long> dims_per_degree() const;
    /// sum_l dim A_l x^l (the Hilbert series of the grading).
    IntPolynomial dimension_series() const;

    /// Human-readable basis element name, e.g. "e_2" or "delta*alpha".
    std::string label(int k) const;

    friend GradedAlgebra build_graded_algebra(const Presentation& pres);

  private:
    int r_ = 0;
    int s_ = 0;
    Presentation pres_;
    std::vector<BasisElement> basis_;
    std::vector<int> degree_start_;  // degree_start_[l] = first index of degree l; size s_+2
    std::vector<SparseVec> table_;   // dim*dim row-major
};

/// Degreewise construction: for l < t, basis of A_l is the span of length-l
/// paths modulo the degree-l piece of the ideal, with pivots chosen by path
/// order (lexicographic on arrow names, leftmost acting last).
GradedAlgebra build_graded_algebra(const Presentation& pres);

}  // namespace quiverhom
