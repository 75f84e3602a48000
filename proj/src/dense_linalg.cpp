#include "dense_linalg.hpp"

#include <algorithm>

namespace quiverhom::dense {

namespace {

int last_nonzero(const std::vector<Rational>& row) {
    for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j)
        if (row[static_cast<size_t>(j)] != 0) return j;
    return -1;
}

int first_nonzero(const std::vector<Rational>& row) {
    for (int j = 0; j < static_cast<int>(row.size()); ++j)
        if (row[static_cast<size_t>(j)] != 0) return j;
    return -1;
}

std::vector<int> rref_impl(Mat& m, bool rightmost) {
    std::vector<std::vector<Rational>> done;
    std::vector<int> pivots;
    for (auto& candidate : m) {
        std::vector<Rational> row = std::move(candidate);
        // reduce against the rows already in echelon form
        for (size_t k = 0; k < done.size(); ++k) {
            const Rational& c = row[static_cast<size_t>(pivots[k])];
            if (c == 0) continue;
            Rational f = c;  // pivot entries are normalized to 1
            for (size_t j = 0; j < row.size(); ++j) row[j] -= f * done[k][j];
        }
        int p = rightmost ? last_nonzero(row) : first_nonzero(row);
        if (p < 0) continue;
        Rational inv = 1 / row[static_cast<size_t>(p)];
        for (auto& x : row) x *= inv;
        // back-substitute into existing rows
        for (size_t k = 0; k < done.size(); ++k) {
            const Rational& c = done[k][static_cast<size_t>(p)];
            if (c == 0) continue;
            Rational f = c;
            for (size_t j = 0; j < row.size(); ++j) done[k][j] -= f * row[j];
        }
        done.push_back(std::move(row));
        pivots.push_back(p);
    }
    m = std::move(done);
    return pivots;
}

}  // namespace

std::vector<int> rref_rightmost(Mat& m) { return rref_impl(m, true); }

std::vector<int> rref(Mat& m) { return rref_impl(m, false); }

long rank(Mat m) { return static_cast<long>(rref(m).size()); }

Mat kernel(const Mat& m, int cols) {
    Mat work = m;
    std::vector<int> pivots = rref(work);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    Mat out;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<size_t>(cols));
        v[static_cast<size_t>(free)] = 1;
        for (size_t k = 0; k < work.size(); ++k)
            v[static_cast<size_t>(pivots[k])] = -work[k][static_cast<size_t>(free)];
        out.push_back(std::move(v));
    }
    return out;
}

void Span::reduce(std::vector<Rational>& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rational& c = v[static_cast<size_t>(pivots_[k])];
        if (c == 0) continue;
        Rational f = c;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[k][j];
    }
}

bool Span::insert(std::vector<Rational> v) {
    v.resize(static_cast<size_t>(width_));
    reduce(v);
    int p = first_nonzero(v);
    if (p < 0) return false;
    Rational inv = 1 / v[static_cast<size_t>(p)];
    for (auto& x : v) x *= inv;
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rational& c = rows_[k][static_cast<size_t>(p)];
        if (c == 0) continue;
        Rational f = c;
        for (size_t j = 0; j < v.size(); ++j) rows_[k][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool Span::contains(std::vector<Rational> v) const {
    v.resize(static_cast<size_t>(width_));
    reduce(v);
    return first_nonzero(v) < 0;
}

}  // namespace quiverhom::dense
