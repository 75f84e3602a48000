#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quiverhom/rational.hpp"

namespace quiverhom {

/// Sparse matrix over Q, row-major with sorted column indices per row.
class SparseMat {
  public:
    SparseMat() = default;
    SparseMat(long rows, long cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows)) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    std::size_t nnz() const;
    bool is_zero() const;

    using Row = std::vector<std::pair<long, Rational>>;
    const Row& row(long i) const { return data_[static_cast<size_t>(i)]; }

    /// Entries may be added in any order; duplicates are summed on finalize().
    void add(long i, long j, Rational v);
    void finalize();  // sort rows, merge duplicates, drop zeros

    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator+(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    bool operator==(const SparseMat& o) const;

    static SparseMat identity(long n);

  private:
    long rows_ = 0;
    long cols_ = 0;
    std::vector<Row> data_;
};

/// Exact rank by sparse elimination; pivots favor short rows and rare
/// columns (Markowitz-style) to limit fill-in.
long sparse_rank(const SparseMat& m);

}  // namespace quiverhom
