#pragma once

// Dense exact-rational elimination helpers shared by the algebra build, the
// resolution engine and the small kernel computations. All pivot choices are
// deterministic so that bases and structure constants are reproducible.

#include <vector>

#include "quiverhom/rational.hpp"

namespace quiverhom::dense {

using Mat = std::vector<std::vector<Rational>>;  // row vectors

/// Reduced row echelon form, pivoting on the rightmost nonzero entry of each
/// row (columns are scanned from the highest index down). Zero rows are
/// dropped. Returns the pivot column of each remaining row.
std::vector<int> rref_rightmost(Mat& m);

/// Standard RREF with leftmost pivots. Returns pivot columns.
std::vector<int> rref(Mat& m);

long rank(Mat m);

/// Basis (as rows) of the null space {x : m x = 0}, deterministic.
Mat kernel(const Mat& m, int cols);

/// Incremental row span with rank queries.
class Span {
  public:
    explicit Span(int width) : width_(width) {}

    /// Reduces v against the span; if a nonzero residue remains, the span
    /// grows and true is returned.
    bool insert(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;
    long rank() const { return static_cast<long>(rows_.size()); }

  private:
    void reduce(std::vector<Rational>& v) const;
    int width_;
    std::vector<std::vector<Rational>> rows_;  // echelon rows, leftmost pivots
    std::vector<int> pivots_;
};

}  // namespace quiverhom::dense
