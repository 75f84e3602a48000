#include "quiverhom/graded_algebra.hpp"

#include <algorithm>
#include <map>

#include "dense_linalg.hpp"

namespace quiverhom {

namespace {

struct Path {
    std::vector<int> word;  // application order
    int src = 0;
    int tgt = 0;
};

// Order used for pivoting: lexicographic on arrow names read in the
// leftmost-acting-last direction (i.e. reversed application order), so the
// elimination keeps the lexicographically smallest paths as the basis.
bool display_less(const Path& a, const Path& b, const Quiver& q) {
    size_t n = std::min(a.word.size(), b.word.size());
    for (size_t k = 0; k < n; ++k) {
        const std::string& an = q.arrows[static_cast<size_t>(a.word[a.word.size() - 1 - k])].name;
        const std::string& bn = q.arrows[static_cast<size_t>(b.word[b.word.size() - 1 - k])].name;
        if (an != bn) return an < bn;
    }
    return a.word.size() < b.word.size();
}

}  // namespace

std::vector<Rational> GradedAlgebra::multiply(const std::vector<Rational>& a,
                                              const std::vector<Rational>& b) const {
    std::vector<Rational> out(basis_.size());
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < basis_.size(); ++j) {
            if (b[j] == 0) continue;
            Rational c = a[i] * b[j];
            for (const auto& [k, v] : product(static_cast<int>(i), static_cast<int>(j)))
                out[static_cast<size_t>(k)] += c * v;
        }
    }
    return out;
}

long GradedAlgebra::block_dim(int i, int j, int l) const {
    if (i < 0 || i >= r_ || j < 0 || j >= r_)
        throw ValidationError("block_dim: vertex index out of range");
    if (l < 0) throw ValidationError("block_dim: negative degree");
    long n = 0;
    for (const auto& e : basis_)
        if (e.degree == l && e.src == i && e.tgt == j) ++n;
    return n;
}

std::vector<long> GradedAlgebra::dims_per_degree() const {
    std::vector<long> dims(static_cast<size_t>(s_) + 1, 0);
    for (const auto& e : basis_) ++dims[static_cast<size_t>(e.degree)];
    return dims;
}

IntPolynomial GradedAlgebra::dimension_series() const {
    std::vector<Int> c;
    for (long d : dims_per_degree()) c.emplace_back(d);
    return IntPolynomial(std::move(c));
}

std::string GradedAlgebra::label(int k) const {
    const BasisElement& e = basis_[static_cast<size_t>(k)];
    if (e.word.empty()) return "e_" + pres_.quiver.vertices[static_cast<size_t>(e.src)];
    std::string out;
    for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) {
        if (!out.empty()) out += "*";
        out += pres_.quiver.arrows[static_cast<size_t>(*it)].name;
    }
    return out;
}

GradedAlgebra build_graded_algebra(const Presentation& pres) {
    const Quiver& quiver = pres.quiver;
    int r = static_cast<int>(quiver.vertices.size());
    int t = pres.truncate;

    // All composable paths per length, sorted by the pivot order.
    std::vector<std::vector<Path>> paths(static_cast<size_t>(t));
    for (int v = 0; v < r; ++v) paths[0].push_back(Path{{}, v, v});
    for (int l = 1; l < t; ++l) {
        for (const Path& p : paths[static_cast<size_t>(l - 1)])
            for (size_t a = 0; a < quiver.arrows.size(); ++a)
                if (quiver.arrows[a].from == p.tgt) {
                    Path ext = p;
                    ext.word.push_back(static_cast<int>(a));
                    ext.tgt = quiver.arrows[a].to;
                    paths[static_cast<size_t>(l)].push_back(std::move(ext));
                }
        std::sort(paths[static_cast<size_t>(l)].begin(), paths[static_cast<size_t>(l)].end(),
                  [&](const Path& a, const Path& b) { return display_less(a, b, quiver); });
    }

    GradedAlgebra alg;
    alg.r_ = r;
    alg.pres_ = pres;

    // Per-degree column index of each path word.
    std::vector<std::map<std::vector<int>, int>> col_of(static_cast<size_t>(t));
    for (int l = 1; l < t; ++l)
        for (size_t c = 0; c < paths[static_cast<size_t>(l)].size(); ++c)
            col_of[static_cast<size_t>(l)][paths[static_cast<size_t>(l)][c].word] =
                static_cast<int>(c);

    // normal_form[l]: path word -> coefficients over the degree-l basis paths
    // (global indices filled in later); pivot paths rewrite to smaller ones.
    std::vector<std::map<std::vector<int>, SparseVec>> normal_form(static_cast<size_t>(t));
    std::vector<std::vector<int>> kept(static_cast<size_t>(t));  // basis columns per degree

    for (int v = 0; v < r; ++v)
        alg.basis_.push_back(BasisElement{0, v, v, {}});

    std::vector<int> degree_start{0};
    for (int l = 1; l < t; ++l) {
        const auto& pl = paths[static_cast<size_t>(l)];
        int ncols = static_cast<int>(pl.size());

        dense::Mat rows;
        for (const Relation& rel : pres.relations) {
            int d = static_cast<int>(rel.terms.front().path.size());
            if (d > l) continue;
            int rel_src = quiver.arrows[static_cast<size_t>(rel.terms.front().path.front())].from;
            int rel_tgt = quiver.arrows[static_cast<size_t>(rel.terms.front().path.back())].to;
            for (int len_r = 0; len_r + d <= l; ++len_r) {
                int len_l = l - d - len_r;
                for (const Path& right : paths[static_cast<size_t>(len_r)]) {
                    if (right.tgt != rel_src) continue;
                    for (const Path& left : paths[static_cast<size_t>(len_l)]) {
                        if (left.src != rel_tgt) continue;
                        std::vector<Rational> row(static_cast<size_t>(ncols));
                        for (const RelationTerm& term : rel.terms) {
                            std::vector<int> w = right.word;
                            w.insert(w.end(), term.path.begin(), term.path.end());
                            w.insert(w.end(), left.word.begin(), left.word.end());
                            row[static_cast<size_t>(col_of[static_cast<size_t>(l)].at(w))] +=
                                term.coef;
                        }
                        rows.push_back(std::move(row));
                    }
                }
            }
        }

        std::vector<int> pivots = dense::rref_rightmost(rows);
        std::vector<int> pivot_row_of(static_cast<size_t>(ncols), -1);
        for (size_t k = 0; k < pivots.size(); ++k)
            pivot_row_of[static_cast<size_t>(pivots[k])] = static_cast<int>(k);

        int global = static_cast<int>(alg.basis_.size());
        degree_start.push_back(global);
        std::vector<int> global_of_col(static_cast<size_t>(ncols), -1);
        for (int c = 0; c < ncols; ++c) {
            if (pivot_row_of[static_cast<size_t>(c)] >= 0) continue;
            kept[static_cast<size_t>(l)].push_back(c);
            global_of_col[static_cast<size_t>(c)] = global;
            const Path& p = pl[static_cast<size_t>(c)];
            alg.basis_.push_back(BasisElement{l, p.src, p.tgt, p.word});
            ++global;
        }
        for (int c = 0; c < ncols; ++c) {
            SparseVec nf;
            int pr = pivot_row_of[static_cast<size_t>(c)];
            if (pr < 0) {
                nf.emplace_back(global_of_col[static_cast<size_t>(c)], Rational(1));
            } else {
                for (int b : kept[static_cast<size_t>(l)]) {
                    const Rational& coef = rows[static_cast<size_t>(pr)][static_cast<size_t>(b)];
                    if (coef != 0)
                        nf.emplace_back(global_of_col[static_cast<size_t>(b)], -coef);
                }
            }
            normal_form[static_cast<size_t>(l)][pl[static_cast<size_t>(c)].word] = std::move(nf);
        }
    }

    // top nonzero degree; once a degree dies all higher ones are zero too
    int s = 0;
    for (int l = 1; l < t; ++l)
        if (!kept[static_cast<size_t>(l)].empty()) s = l;
    alg.s_ = s;
    degree_start.resize(static_cast<size_t>(s) + 1);
    degree_start.push_back(static_cast<int>(alg.basis_.size()));
    alg.degree_start_ = std::move(degree_start);

    int dim = alg.dim();
    alg.table_.assign(static_cast<size_t>(dim) * dim, SparseVec{});
    for (int i = 0; i < dim; ++i) {
        const BasisElement& x = alg.basis_[static_cast<size_t>(i)];
        for (int j = 0; j < dim; ++j) {
            const BasisElement& y = alg.basis_[static_cast<size_t>(j)];
            if (x.src != y.tgt) continue;  // product is zero
            int l = x.degree + y.degree;
            if (l > s) continue;
            std::vector<int> w = y.word;
            w.insert(w.end(), x.word.begin(), x.word.end());
            SparseVec prod;
            if (l == 0) {
                prod.emplace_back(i, Rational(1));  // both idempotents, same vertex
            } else {
                prod = normal_form[static_cast<size_t>(l)].at(w);
            }
            alg.table_[static_cast<size_t>(i) * dim + j] = std::move(prod);
        }
    }
    return alg;
}

}  // namespace quiverhom
