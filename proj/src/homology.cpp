#include "quiverhom/homology.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace quiverhom {

long LevelBasis::find(const std::vector<std::uint16_t>& tuple) const {
    std::u16string key(tuple.begin(), tuple.end());
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
}

namespace {

bool reduced_member(const GradedAlgebra& alg, const std::vector<std::uint16_t>& tuple) {
    size_t n = tuple.size();
    for (size_t i = 0; i < n; ++i) {
        const BasisElement& cur = alg.element(tuple[i]);
        const BasisElement& nxt = alg.element(tuple[(i + 1) % n]);
        if (cur.src != nxt.tgt) return false;
    }
    return true;
}

// dims of A_0..A_s and the max degree, shared by the enumerators
struct DegreeInfo {
    std::vector<long> dims;
    int s;
};

void enumerate(const GradedAlgebra& alg, int slots, int m, ChainModel model,
               std::vector<std::uint16_t>& cur, int remaining,
               std::vector<std::vector<std::uint16_t>>& out) {
    int slot = static_cast<int>(cur.size());
    if (slot == slots) {
        if (remaining == 0 &&
            (model == ChainModel::full || reduced_member(alg, cur)))
            out.push_back(cur);
        return;
    }
    int slots_left = slots - slot - 1;
    for (int k = 0; k < alg.dim(); ++k) {
        const BasisElement& e = alg.element(k);
        if (e.degree > remaining) continue;
        if (remaining - e.degree > slots_left * alg.top_degree()) continue;
        if (model == ChainModel::reduced && slot > 0) {
            // chain condition: src of the previous slot = tgt of this one
            if (alg.element(cur.back()).src != e.tgt) continue;
        }
        cur.push_back(static_cast<std::uint16_t>(k));
        enumerate(alg, slots, m, model, cur, remaining - e.degree, out);
        cur.pop_back();
    }
}

// [x^m] of the product of small integer polynomials, as exact counts
std::vector<Int> poly_pow_trunc(const std::vector<Int>& base, int power, int m) {
    std::vector<Int> acc(static_cast<size_t>(m) + 1, Int(0));
    acc[0] = 1;
    for (int p = 0; p < power; ++p) {
        std::vector<Int> next(static_cast<size_t>(m) + 1, Int(0));
        for (int i = 0; i <= m; ++i) {
            if (acc[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= m && j < static_cast<int>(base.size()); ++j)
                next[static_cast<size_t>(i + j)] += acc[static_cast<size_t>(i)] * base[static_cast<size_t>(j)];
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

long level_dim(const GradedAlgebra& alg, int level, int m, ChainModel model) {
    int slots = level + 1;
    if (model == ChainModel::full) {
        std::vector<Int> h;
        for (long d : alg.dims_per_degree()) h.emplace_back(d);
        Int c = poly_pow_trunc(h, slots, m)[static_cast<size_t>(m)];
        if (!c.fits_slong_p()) throw CapError("chain module dimension overflows a long");
        return c.get_si();
    }
    // transfer-matrix trace: one r x r counting matrix per degree, entry
    // (tgt, src); cyclic composability closes into the trace
    int r = alg.num_vertices();
    int s = alg.top_degree();
    std::vector<std::vector<Int>> transfer(static_cast<size_t>(s) + 1,
                                           std::vector<Int>(static_cast<size_t>(r) * r, Int(0)));
    for (int k = 0; k < alg.dim(); ++k) {
        const BasisElement& e = alg.element(k);
        transfer[static_cast<size_t>(e.degree)]
                [static_cast<size_t>(e.tgt) * r + e.src] += 1;
    }
    // acc[(i,j)][deg]: degree-graded counts of chains from j to i
    size_t cells = static_cast<size_t>(r) * r;
    std::vector<std::vector<Int>> acc(cells, std::vector<Int>(static_cast<size_t>(m) + 1, Int(0)));
    for (int i = 0; i < r; ++i) acc[static_cast<size_t>(i) * r + i][0] = 1;
    for (int p = 0; p < slots; ++p) {
        std::vector<std::vector<Int>> next(cells,
                                           std::vector<Int>(static_cast<size_t>(m) + 1, Int(0)));
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                for (int j = 0; j < r; ++j)
                    for (int d1 = 0; d1 <= m; ++d1) {
                        const Int& a = acc[static_cast<size_t>(i) * r + k][static_cast<size_t>(d1)];
                        if (a == 0) continue;
                        for (int d2 = 0; d1 + d2 <= m && d2 <= s; ++d2) {
                            const Int& b =
                                transfer[static_cast<size_t>(d2)][static_cast<size_t>(k) * r + j];
                            if (b == 0) continue;
                            next[static_cast<size_t>(i) * r + j][static_cast<size_t>(d1 + d2)] +=
                                a * b;
                        }
                    }
        acc = std::move(next);
    }
    Int tr = 0;
    for (int i = 0; i < r; ++i) tr += acc[static_cast<size_t>(i) * r + i][static_cast<size_t>(m)];
    if (!tr.fits_slong_p()) throw CapError("chain module dimension overflows a long");
    return tr.get_si();
}

LevelBasis build_level_basis(const GradedAlgebra& alg, int level, int m, ChainModel model,
                             long cap) {
    if (alg.dim() >= 65535)
        throw CapError("algebra dimension too large for chain enumeration");
    long count = level_dim(alg, level, m, model);
    if (count > cap)
        throw CapError("chain module at level " + std::to_string(level) + ", internal degree " +
                       std::to_string(m) + " has dimension " + std::to_string(count) +
                       " exceeding the cap " + std::to_string(cap));
    LevelBasis basis;
    basis.level = level;
    basis.m = m;
    basis.model = model;
    std::vector<std::uint16_t> cur;
    cur.reserve(static_cast<size_t>(level) + 1);
    enumerate(alg, level + 1, m, model, cur, m, basis.tuples);
    if (static_cast<long>(basis.tuples.size()) != count)
        throw std::logic_error("chain basis enumeration disagrees with the counting formula");
    basis.index.reserve(basis.tuples.size() * 2);
    for (size_t i = 0; i < basis.tuples.size(); ++i)
        basis.index.emplace(std::u16string(basis.tuples[i].begin(), basis.tuples[i].end()),
                            static_cast<long>(i));
    return basis;
}

namespace {

// shared worker for b (with wrap term) and b' (without)
SparseMat boundary_op(const GradedAlgebra& alg, const LevelBasis& from, const LevelBasis& to,
                      bool wrap) {
    SparseMat mat(to.dim(), from.dim());
    int q = from.level;
    std::vector<std::uint16_t> merged(static_cast<size_t>(q));
    for (long c = 0; c < from.dim(); ++c) {
        const auto& tup = from.tuples[static_cast<size_t>(c)];
        int terms = wrap ? q + 1 : q;
        for (int i = 0; i < terms; ++i) {
            int sign = (i % 2 == 0) ? 1 : -1;
            const SparseVec* prod;
            if (i < q) {
                prod = &alg.product(tup[static_cast<size_t>(i)], tup[static_cast<size_t>(i + 1)]);
                // merged tuple: slots i and i+1 collapse
                merged.assign(tup.begin(), tup.begin() + i);
                merged.push_back(0);  // placeholder
                merged.insert(merged.end(), tup.begin() + i + 2, tup.end());
            } else {
                // wrap-around term a_q a_0 x a_1 x ... x a_{q-1}
                prod = &alg.product(tup[static_cast<size_t>(q)], tup[0]);
                merged.assign(tup.begin(), tup.end() - 1);
            }
            size_t place = (i < q) ? static_cast<size_t>(i) : 0;
            for (const auto& [k, coef] : *prod) {
                merged[place] = static_cast<std::uint16_t>(k);
                long row = to.find(merged);
                if (row < 0)
                    throw std::logic_error("boundary image left the chain model");
                mat.add(row, c, sign > 0 ? coef : -coef);
            }
        }
    }
    mat.finalize();
    return mat;
}

}  // namespace

SparseMat op_b(const GradedAlgebra& alg, const LevelBasis& from, const LevelBasis& to) {
    return boundary_op(alg, from, to, true);
}

SparseMat op_bprime(const GradedAlgebra& alg, const LevelBasis& from, const LevelBasis& to) {
    return boundary_op(alg, from, to, false);
}

SparseMat op_t(const LevelBasis& basis) {
    SparseMat mat(basis.dim(), basis.dim());
    int q = basis.level;
    // sign (-1)^level: the interchange identities (1-t)b' = b(1-t) and
    // b'N = Nb only hold for the signed cyclic operator
    Rational sign(q % 2 == 0 ? 1 : -1);
    std::vector<std::uint16_t> rot(static_cast<size_t>(q) + 1);
    for (long c = 0; c < basis.dim(); ++c) {
        const auto& tup = basis.tuples[static_cast<size_t>(c)];
        rot[0] = tup[static_cast<size_t>(q)];
        std::copy(tup.begin(), tup.end() - 1, rot.begin() + 1);
        long row = basis.find(rot);
        if (row < 0) throw std::logic_error("cyclic rotation left the chain model");
        mat.add(row, c, sign);
    }
    mat.finalize();
    return mat;
}

SparseMat op_norm(const LevelBasis& basis) {
    SparseMat mat(basis.dim(), basis.dim());
    int n = basis.level + 1;
    std::vector<std::uint16_t> rot(static_cast<size_t>(n));
    for (long c = 0; c < basis.dim(); ++c) {
        const auto& tup = basis.tuples[static_cast<size_t>(c)];
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i) rot[static_cast<size_t>((i + k) % n)] = tup[static_cast<size_t>(i)];
            long row = basis.find(rot);
            if (row < 0) throw std::logic_error("cyclic rotation left the chain model");
            // k-th power of t carries (-1)^(level*k)
            bool negative = (basis.level % 2 == 1) && (k % 2 == 1);
            mat.add(row, c, Rational(negative ? -1 : 1));
        }
    }
    mat.finalize();
    return mat;
}

ChainPiece hochschild_piece(const GradedAlgebra& alg, int n_top, int m, ChainModel model,
                            long cap) {
    ChainPiece piece;
    piece.m = m;
    std::vector<LevelBasis> levels;
    levels.reserve(static_cast<size_t>(n_top) + 1);
    for (int q = 0; q <= n_top; ++q) levels.push_back(build_level_basis(alg, q, m, model, cap));
    for (const auto& b : levels) piece.dims.push_back(b.dim());
    for (int q = 1; q <= n_top; ++q)
        piece.bnd.push_back(op_b(alg, levels[static_cast<size_t>(q)],
                                 levels[static_cast<size_t>(q - 1)]));
    return piece;
}

namespace {

struct BicomplexOps {
    std::vector<LevelBasis> levels;          // 0..n_top
    std::vector<SparseMat> b, bp;            // level q -> q-1, q = 1..n_top
    std::vector<SparseMat> one_minus_t, norm;  // square, per level
};

BicomplexOps build_bicomplex_ops(const GradedAlgebra& alg, int n_top, int m, ChainModel model,
                                 long cap) {
    BicomplexOps ops;
    for (int q = 0; q <= n_top; ++q)
        ops.levels.push_back(build_level_basis(alg, q, m, model, cap));
    ops.b.resize(static_cast<size_t>(n_top) + 1);
    ops.bp.resize(static_cast<size_t>(n_top) + 1);
    ops.one_minus_t.resize(static_cast<size_t>(n_top) + 1);
    ops.norm.resize(static_cast<size_t>(n_top) + 1);
    for (int q = 1; q <= n_top; ++q) {
        ops.b[static_cast<size_t>(q)] =
            op_b(alg, ops.levels[static_cast<size_t>(q)], ops.levels[static_cast<size_t>(q - 1)]);
        ops.bp[static_cast<size_t>(q)] = op_bprime(alg, ops.levels[static_cast<size_t>(q)],
                                                   ops.levels[static_cast<size_t>(q - 1)]);
    }
    for (int q = 0; q <= n_top; ++q) {
        ops.one_minus_t[static_cast<size_t>(q)] =
            SparseMat::identity(ops.levels[static_cast<size_t>(q)].dim()) -
            op_t(ops.levels[static_cast<size_t>(q)]);
        ops.norm[static_cast<size_t>(q)] = op_norm(ops.levels[static_cast<size_t>(q)]);
    }
    return ops;
}

ChainPiece assemble_total(const BicomplexOps& ops, int n_top, int m, long cap) {
    // the total module T_n stacks blocks (p, q = n - p) for p = 0..n
    auto block_offset = [&](int n, int p) {
        long off = 0;
        for (int pp = 0; pp < p; ++pp) off += ops.levels[static_cast<size_t>(n - pp)].dim();
        return off;
    };
    auto total_dim = [&](int n) { return block_offset(n, n) + ops.levels[0].dim(); };

    ChainPiece piece;
    piece.m = m;
    for (int n = 0; n <= n_top; ++n) {
        long dim = total_dim(n);
        if (dim > cap)
            throw CapError("total complex module at degree " + std::to_string(n) +
                           ", internal degree " + std::to_string(m) + " has dimension " +
                           std::to_string(dim) + " exceeding the cap " + std::to_string(cap));
        piece.dims.push_back(dim);
    }
    for (int n = 1; n <= n_top; ++n) {
        SparseMat d(total_dim(n - 1), total_dim(n));
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            long src_off = block_offset(n, p);
            if (q >= 1) {  // vertical: b on even columns, -b' on odd
                const SparseMat& v = (p % 2 == 0) ? ops.b[static_cast<size_t>(q)]
                                                  : ops.bp[static_cast<size_t>(q)];
                int sgn = (p % 2 == 0) ? 1 : -1;
                long dst_off = block_offset(n - 1, p);
                for (long i = 0; i < v.rows(); ++i)
                    for (const auto& [j, val] : v.row(i))
                        d.add(dst_off + i, src_off + j, sgn > 0 ? val : -val);
            }
            if (p >= 1) {  // horizontal: 1-t out of odd columns, N out of even
                const SparseMat& h = (p % 2 == 1) ? ops.one_minus_t[static_cast<size_t>(q)]
                                                  : ops.norm[static_cast<size_t>(q)];
                long dst_off = block_offset(n - 1, p - 1);
                for (long i = 0; i < h.rows(); ++i)
                    for (const auto& [j, val] : h.row(i)) d.add(dst_off + i, src_off + j, val);
            }
        }
        d.finalize();
        piece.bnd.push_back(std::move(d));
    }
    return piece;
}

}  // namespace

ChainPiece cyclic_total_piece(const GradedAlgebra& alg, int n_top, int m, ChainModel model,
                              long cap) {
    return assemble_total(build_bicomplex_ops(alg, n_top, m, model, cap), n_top, m, cap);
}

ChainPiece relative_cyclic_total_piece(const GradedAlgebra& alg, int n_top, int m,
                                       ChainModel model, long cap) {
    if (m == 0) {
        // the projection onto the degree-zero quotient is injective there, so
        // the kernel complex vanishes in internal degree 0
        ChainPiece piece;
        piece.m = 0;
        piece.dims.assign(static_cast<size_t>(n_top) + 1, 0);
        for (int n = 1; n <= n_top; ++n) piece.bnd.emplace_back(0, 0);
        return piece;
    }
    // in positive internal degree every chain lies in the kernel already
    return cyclic_total_piece(alg, n_top, m, model, cap);
}

std::vector<long> homology_dims(const ChainPiece& piece) {
    int n_top = piece.n_top();
    for (int k = 0; k + 1 < n_top; ++k)
        if (!(piece.bnd[static_cast<size_t>(k)] * piece.bnd[static_cast<size_t>(k + 1)]).is_zero())
            throw std::logic_error("d o d != 0: corrupt chain complex");
    std::vector<long> ranks(static_cast<size_t>(n_top), 0);
    for (int k = 0; k < n_top; ++k) ranks[static_cast<size_t>(k)] = sparse_rank(piece.bnd[static_cast<size_t>(k)]);
    std::vector<long> h;
    for (int n = 0; n < n_top; ++n) {
        long kernel = piece.dims[static_cast<size_t>(n)] - (n > 0 ? ranks[static_cast<size_t>(n - 1)] : 0);
        h.push_back(kernel - ranks[static_cast<size_t>(n)]);
    }
    return h;
}

long DimTable::at(int n, int m) const {
    auto it = dims.find({n, m});
    if (it == dims.end())
        throw std::logic_error("dimension table missing entry (" + std::to_string(n) + "," +
                               std::to_string(m) + ")");
    return it->second;
}

bool DimTable::has(int n, int m) const { return dims.count({n, m}) > 0; }

namespace {

// `total` distinguishes the cyclic total complex (whose degree-n module sums
// the levels) from the Hochschild column (one level per degree)
ChainModel choose_model(const GradedAlgebra& alg, int n_top, int m, bool total,
                        const HomologyOptions& opts) {
    switch (opts.policy) {
        case ModelPolicy::full:
            return ChainModel::full;
        case ModelPolicy::reduced:
            return ChainModel::reduced;
        case ModelPolicy::auto_select:
            break;
    }
    long worst = 0;
    long sum = 0;
    for (int q = 0; q <= n_top; ++q) {
        long d = level_dim(alg, q, m, ChainModel::full);
        worst = std::max(worst, d);
        sum += d;
    }
    return (total ? sum : worst) > opts.full_model_threshold ? ChainModel::reduced
                                                             : ChainModel::full;
}

void check_nm_caps(int n_max, int m_max, const HomologyOptions& opts) {
    if (!opts.enforce_nm_caps) return;
    if (n_max > opts.n_cap)
        throw CapError("n_max " + std::to_string(n_max) + " exceeds the cap " +
                       std::to_string(opts.n_cap));
    if (m_max > opts.m_cap)
        throw CapError("m_max " + std::to_string(m_max) + " exceeds the cap " +
                       std::to_string(opts.m_cap));
}

template <typename PieceFn>
DimTable table_over_degrees(const GradedAlgebra& alg, int n_max, int m_max, bool total,
                            const HomologyOptions& opts, const std::string& theory,
                            PieceFn&& piece_fn) {
    check_nm_caps(n_max, m_max, opts);
    DimTable table;
    table.theory = theory;
    std::vector<std::vector<long>> per_m(static_cast<size_t>(m_max) + 1);
    std::atomic<int> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto worker = [&]() {
        for (;;) {
            int m = next.fetch_add(1);
            if (m > m_max) return;
            try {
                ChainModel model = choose_model(alg, n_max + 1, m, total, opts);
                per_m[static_cast<size_t>(m)] =
                    homology_dims(piece_fn(m, model));
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    int jobs = std::max(1, std::min(opts.jobs, m_max + 1));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= n_max; ++n)
            table.dims[{n, m}] = per_m[static_cast<size_t>(m)][static_cast<size_t>(n)];
    return table;
}

}  // namespace

DimTable hh_table(const GradedAlgebra& alg, int n_max, int m_max, const HomologyOptions& opts) {
    return table_over_degrees(alg, n_max, m_max, false, opts, "HH", [&](int m, ChainModel model) {
        return hochschild_piece(alg, n_max + 1, m, model, opts.component_cap);
    });
}

DimTable hc_table(const GradedAlgebra& alg, int n_max, int m_max, const HomologyOptions& opts) {
    return table_over_degrees(alg, n_max, m_max, true, opts, "HC", [&](int m, ChainModel model) {
        return cyclic_total_piece(alg, n_max + 1, m, model, opts.component_cap);
    });
}

DimTable relative_hc_table(const GradedAlgebra& alg, int n_max, int m_max,
                           const HomologyOptions& opts) {
    return table_over_degrees(alg, n_max, m_max, true, opts, "HC_rel",
                              [&](int m, ChainModel model) {
        return relative_cyclic_total_piece(alg, n_max + 1, m, model, opts.component_cap);
    });
}

SbiReport verify_sbi(const GradedAlgebra& alg, int n_max, int m_max,
                     const HomologyOptions& opts) {
    SbiReport report;
    report.hh = hh_table(alg, n_max, m_max, opts);
    report.hc = hc_table(alg, n_max, m_max, opts);
    for (int n = 1; n <= n_max; ++n)
        for (int i = 1; i <= m_max; ++i) {
            long hh = report.hh.at(n, i);
            long hc_n = report.hc.at(n, i);
            long hc_nm1 = report.hc.at(n - 1, i);
            if (hh != hc_n + hc_nm1) {
                report.ok = false;
                report.violations.push_back({n, i, hh, hc_n, hc_nm1});
            }
        }
    return report;
}

AxiomReport verify_complex_axioms(const GradedAlgebra& alg, int n_max, int m_max,
                                  ChainModel model, long cap) {
    AxiomReport report;
    auto expect = [&](bool ok, const std::string& what, int m) {
        ++report.checks_run;
        if (!ok) {
            report.ok = false;
            report.failures.push_back(what + " fails at internal degree " + std::to_string(m));
        }
    };
    for (int m = 0; m <= m_max; ++m) {
        int n_top = n_max + 1;
        BicomplexOps ops = build_bicomplex_ops(alg, n_top, m, model, cap);
        const auto& b = ops.b;
        const auto& bp = ops.bp;
        for (int q = 2; q <= n_top; ++q) {
            expect((b[static_cast<size_t>(q - 1)] * b[static_cast<size_t>(q)]).is_zero(),
                   "b o b = 0 (level " + std::to_string(q) + ")", m);
            expect((bp[static_cast<size_t>(q - 1)] * bp[static_cast<size_t>(q)]).is_zero(),
                   "b' o b' = 0 (level " + std::to_string(q) + ")", m);
        }
        for (int q = 1; q <= n_top; ++q) {
            expect(ops.one_minus_t[static_cast<size_t>(q - 1)] * bp[static_cast<size_t>(q)] ==
                       b[static_cast<size_t>(q)] * ops.one_minus_t[static_cast<size_t>(q)],
                   "(1-t)b' = b(1-t) (level " + std::to_string(q) + ")", m);
            expect(bp[static_cast<size_t>(q)] * ops.norm[static_cast<size_t>(q)] ==
                       ops.norm[static_cast<size_t>(q - 1)] * b[static_cast<size_t>(q)],
                   "b'N = Nb (level " + std::to_string(q) + ")", m);
        }
        for (int q = 0; q <= n_top; ++q) {
            SparseMat id = SparseMat::identity(ops.levels[static_cast<size_t>(q)].dim());
            SparseMat t = id - ops.one_minus_t[static_cast<size_t>(q)];
            SparseMat pow = id;
            for (int k = 0; k <= q; ++k) pow = pow * t;
            expect(pow == id, "t^{n+1} = 1 (level " + std::to_string(q) + ")", m);
            expect((ops.norm[static_cast<size_t>(q)] * ops.one_minus_t[static_cast<size_t>(q)])
                       .is_zero(),
                   "N(1-t) = 0 (level " + std::to_string(q) + ")", m);
            expect((ops.one_minus_t[static_cast<size_t>(q)] * ops.norm[static_cast<size_t>(q)])
                       .is_zero(),
                   "(1-t)N = 0 (level " + std::to_string(q) + ")", m);
        }
        ChainPiece total = assemble_total(ops, n_top, m, cap);
        for (int k = 0; k + 1 < n_top; ++k)
            expect((total.bnd[static_cast<size_t>(k)] * total.bnd[static_cast<size_t>(k + 1)]).is_zero(),
                   "total d^2 = 0 (degree " + std::to_string(k + 2) + ")", m);
    }
    return report;
}

}  // namespace quiverhom
