#include "quiverhom/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_set>

namespace quiverhom {

std::size_t SparseMat::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

bool SparseMat::is_zero() const {
    for (const auto& r : data_)
        if (!r.empty()) return false;
    return true;
}

void SparseMat::add(long i, long j, Rational v) {
    if (v == 0) return;
    data_[static_cast<size_t>(i)].emplace_back(j, std::move(v));
}

void SparseMat::finalize() {
    for (auto& r : data_) {
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Row merged;
        for (auto& [j, v] : r) {
            if (!merged.empty() && merged.back().first == j)
                merged.back().second += v;
            else
                merged.emplace_back(j, std::move(v));
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& e) { return e.second == 0; }),
                     merged.end());
        r = std::move(merged);
    }
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
    if (cols_ != o.rows_) throw std::logic_error("sparse product shape mismatch");
    SparseMat out(rows_, o.cols_);
    // dense accumulator with a touched-column list, reused across rows
    std::vector<Rational> acc(static_cast<size_t>(o.cols_));
    std::vector<long> touched;
    for (long i = 0; i < rows_; ++i) {
        touched.clear();
        for (const auto& [k, v] : data_[static_cast<size_t>(i)])
            for (const auto& [j, w] : o.data_[static_cast<size_t>(k)]) {
                Rational& slot = acc[static_cast<size_t>(j)];
                if (slot == 0) touched.push_back(j);
                slot += v * w;
            }
        std::sort(touched.begin(), touched.end());
        for (long j : touched) {
            Rational& slot = acc[static_cast<size_t>(j)];
            if (slot != 0) out.data_[static_cast<size_t>(i)].emplace_back(j, slot);
            slot = 0;
        }
    }
    return out;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::logic_error("sparse sum shape mismatch");
    SparseMat out(rows_, cols_);
    for (long i = 0; i < rows_; ++i) {
        for (const auto& [j, v] : data_[static_cast<size_t>(i)]) out.add(i, j, v);
        for (const auto& [j, v] : o.data_[static_cast<size_t>(i)]) out.add(i, j, v);
    }
    out.finalize();
    return out;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::logic_error("sparse difference shape mismatch");
    SparseMat out(rows_, cols_);
    for (long i = 0; i < rows_; ++i) {
        for (const auto& [j, v] : data_[static_cast<size_t>(i)]) out.add(i, j, v);
        for (const auto& [j, v] : o.data_[static_cast<size_t>(i)]) out.add(i, j, -v);
    }
    out.finalize();
    return out;
}

bool SparseMat::operator==(const SparseMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

SparseMat SparseMat::identity(long n) {
    SparseMat m(n, n);
    for (long i = 0; i < n; ++i) m.add(i, i, Rational(1));
    m.finalize();
    return m;
}

long sparse_rank(const SparseMat& m) {
    const long nrows = m.rows();
    std::vector<SparseMat::Row> rows(static_cast<size_t>(nrows));
    for (long i = 0; i < nrows; ++i) rows[static_cast<size_t>(i)] = m.row(i);

    std::vector<std::unordered_set<long>> col_rows(static_cast<size_t>(m.cols()));
    for (long i = 0; i < nrows; ++i)
        for (const auto& [j, v] : rows[static_cast<size_t>(i)])
            col_rows[static_cast<size_t>(j)].insert(i);

    std::vector<bool> active(static_cast<size_t>(nrows), true);
    using Entry = std::pair<std::size_t, long>;  // (nnz, row)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (long i = 0; i < nrows; ++i)
        if (!rows[static_cast<size_t>(i)].empty()) heap.emplace(rows[static_cast<size_t>(i)].size(), i);

    auto subtract_scaled = [](const SparseMat::Row& target, const SparseMat::Row& pivot,
                              const Rational& factor) {
        SparseMat::Row out;
        out.reserve(target.size() + pivot.size());
        size_t a = 0, b = 0;
        while (a < target.size() || b < pivot.size()) {
            if (b == pivot.size() || (a < target.size() && target[a].first < pivot[b].first)) {
                out.push_back(target[a++]);
            } else if (a == target.size() || pivot[b].first < target[a].first) {
                out.emplace_back(pivot[b].first, -factor * pivot[b].second);
                ++b;
            } else {
                Rational v = target[a].second - factor * pivot[b].second;
                if (v != 0) out.emplace_back(target[a].first, std::move(v));
                ++a;
                ++b;
            }
        }
        return out;
    };

    long rank = 0;
    while (!heap.empty()) {
        auto [sz, i] = heap.top();
        heap.pop();
        auto& prow = rows[static_cast<size_t>(i)];
        if (!active[static_cast<size_t>(i)] || prow.empty()) continue;
        if (prow.size() != sz) {  // stale entry, reinsert with the current size
            heap.emplace(prow.size(), i);
            continue;
        }
        // pivot on the rarest column of the shortest row
        long pcol = -1;
        std::size_t best = 0;
        for (const auto& [j, v] : prow) {
            std::size_t users = col_rows[static_cast<size_t>(j)].size();
            if (pcol < 0 || users < best) {
                pcol = j;
                best = users;
            }
        }
        Rational pval;
        for (const auto& [j, v] : prow)
            if (j == pcol) pval = v;

        std::vector<long> victims(col_rows[static_cast<size_t>(pcol)].begin(),
                                  col_rows[static_cast<size_t>(pcol)].end());
        for (long other : victims) {
            if (other == i || !active[static_cast<size_t>(other)]) continue;
            auto& orow = rows[static_cast<size_t>(other)];
            Rational oval;
            for (const auto& [j, v] : orow)
                if (j == pcol) oval = v;
            Rational factor = oval / pval;
            for (const auto& [j, v] : orow) col_rows[static_cast<size_t>(j)].erase(other);
            orow = subtract_scaled(orow, prow, factor);
            for (const auto& [j, v] : orow) col_rows[static_cast<size_t>(j)].insert(other);
            if (!orow.empty()) heap.emplace(orow.size(), other);
        }
        active[static_cast<size_t>(i)] = false;
        for (const auto& [j, v] : prow) col_rows[static_cast<size_t>(j)].erase(i);
        prow.clear();
        ++rank;
    }
    return rank;
}

}  // namespace quiverhom
