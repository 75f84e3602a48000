#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "quiverhom/homology.hpp"
#include "quiverhom/presentation.hpp"
#include "quiverhom/sparse_matrix.hpp"

using namespace quiverhom;

namespace {

GradedAlgebra load(const std::string& name) {
    return build_graded_algebra(
        parse_presentation_file(std::string(QUIVERHOM_CORPUS_DIR) + "/" + name + ".json"));
}

HomologyOptions opts_with(ModelPolicy policy, int jobs = 1) {
    HomologyOptions opts;
    opts.policy = policy;
    opts.jobs = jobs;
    return opts;
}

// independent dense elimination, the oracle for the sparse rank engine
long dense_rank_oracle(const SparseMat& m) {
    std::vector<std::vector<Rational>> rows(
        static_cast<size_t>(m.rows()), std::vector<Rational>(static_cast<size_t>(m.cols())));
    for (long i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    long rank = 0;
    long rlim = m.rows(), clim = m.cols();
    long row = 0;
    for (long col = 0; col < clim && row < rlim; ++col) {
        long pivot = -1;
        for (long i = row; i < rlim; ++i)
            if (rows[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(pivot)], rows[static_cast<size_t>(row)]);
        for (long i = row + 1; i < rlim; ++i) {
            const Rational f = rows[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                               rows[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (long j = col; j < clim; ++j)
                rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * rows[static_cast<size_t>(row)][static_cast<size_t>(j)];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("sparse rank matches dense elimination on random matrices") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> dim(1, 25);
    std::uniform_int_distribution<int> val(-2, 2);
    std::uniform_real_distribution<double> density(0.05, 0.5);
    for (int trial = 0; trial < 60; ++trial) {
        long r = dim(rng), c = dim(rng);
        double p = density(rng);
        SparseMat m(r, c);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j)
                if (coin(rng) < p) m.add(i, j, Rational(val(rng)));
        m.finalize();
        CHECK(sparse_rank(m) == dense_rank_oracle(m));
    }
}

TEST_CASE("sparse rank matches dense elimination on boundary matrices") {
    for (const char* name : {"kx2", "quantum_exterior_q2", "monomial_3vertex"}) {
        GradedAlgebra alg = load(name);
        for (int m = 0; m <= 2; ++m) {
            ChainPiece piece = cyclic_total_piece(alg, 4, m, ChainModel::reduced, 200000);
            for (const SparseMat& d : piece.bnd) CHECK(sparse_rank(d) == dense_rank_oracle(d));
        }
    }
}

TEST_CASE("boundary operator examples") {
    GradedAlgebra kx2 = load("kx2");
    // degree 0, level 1: commutators of orthogonal idempotents vanish
    LevelBasis l1 = build_level_basis(kx2, 1, 0, ChainModel::full, 1000);
    LevelBasis l0 = build_level_basis(kx2, 0, 0, ChainModel::full, 1000);
    CHECK(op_b(kx2, l1, l0).is_zero());

    GradedAlgebra tri = load("monomial_3vertex");
    LevelBasis t1 = build_level_basis(tri, 1, 0, ChainModel::full, 1000);
    LevelBasis t0 = build_level_basis(tri, 0, 0, ChainModel::full, 1000);
    CHECK(op_b(tri, t1, t0).is_zero());

    // k[x]/(x^2), internal degree 1: b kills both 1(x)x and x(x)1
    LevelBasis m1l1 = build_level_basis(kx2, 1, 1, ChainModel::full, 1000);
    LevelBasis m1l0 = build_level_basis(kx2, 0, 1, ChainModel::full, 1000);
    CHECK(m1l1.dim() == 2);
    CHECK(op_b(kx2, m1l1, m1l0).is_zero());
}

TEST_CASE("cyclic operator basics") {
    GradedAlgebra alg = load("quantum_exterior_q2");
    LevelBasis l0 = build_level_basis(alg, 0, 1, ChainModel::full, 1000);
    CHECK(op_t(l0) == SparseMat::identity(l0.dim()));

    for (int q = 1; q <= 4; ++q) {
        LevelBasis l = build_level_basis(alg, q, 2, ChainModel::full, 100000);
        SparseMat t = op_t(l);
        SparseMat pow = SparseMat::identity(l.dim());
        for (int k = 0; k <= q; ++k) pow = pow * t;
        CHECK(pow == SparseMat::identity(l.dim()));
        SparseMat n = op_norm(l);
        SparseMat one_minus_t = SparseMat::identity(l.dim()) - t;
        CHECK((n * one_minus_t).is_zero());
        CHECK((one_minus_t * n).is_zero());
    }
}

TEST_CASE("interchange identities on the dual numbers") {
    GradedAlgebra alg = load("kx2");
    for (int m = 0; m <= 4; ++m) {
        std::vector<LevelBasis> L;
        for (int q = 0; q <= 5; ++q)
            L.push_back(build_level_basis(alg, q, m, ChainModel::full, 100000));
        for (int q = 1; q <= 5; ++q) {
            SparseMat b = op_b(alg, L[static_cast<size_t>(q)], L[static_cast<size_t>(q - 1)]);
            SparseMat bp =
                op_bprime(alg, L[static_cast<size_t>(q)], L[static_cast<size_t>(q - 1)]);
            SparseMat lo = SparseMat::identity(L[static_cast<size_t>(q - 1)].dim()) -
                           op_t(L[static_cast<size_t>(q - 1)]);
            SparseMat hi = SparseMat::identity(L[static_cast<size_t>(q)].dim()) -
                           op_t(L[static_cast<size_t>(q)]);
            CHECK(lo * bp == b * hi);
            CHECK(bp * op_norm(L[static_cast<size_t>(q)]) ==
                  op_norm(L[static_cast<size_t>(q - 1)]) * b);
        }
    }
}

TEST_CASE("complex axiom sweep on the small corpus algebras") {
    for (const char* name : {"kx2", "kx3", "quantum_exterior_q2", "hereditary_a2",
                             "quadratic_monomial_2v", "semisimple_k3"}) {
        AxiomReport report = verify_complex_axioms(load(name), 3, 3, ChainModel::full, 200000);
        CHECK(report.ok);
        CHECK(report.failures.empty());
    }
    // the reduced model satisfies the same operator identities
    AxiomReport reduced =
        verify_complex_axioms(load("monomial_3vertex"), 5, 4, ChainModel::reduced, 200000);
    CHECK(reduced.ok);
}

TEST_CASE("homology of degenerate complexes") {
    ChainPiece zero;
    zero.m = 0;
    zero.dims = {0, 0, 0};
    zero.bnd = {SparseMat(0, 0), SparseMat(0, 0)};
    CHECK(homology_dims(zero) == std::vector<long>{0, 0});

    ChainPiece two_term;
    two_term.m = 0;
    two_term.dims = {1, 1};
    two_term.bnd = {SparseMat::identity(1)};
    CHECK(homology_dims(two_term) == std::vector<long>{0});
}

TEST_CASE("homology_dims rejects a corrupt complex") {
    ChainPiece broken;
    broken.m = 0;
    broken.dims = {1, 1, 1};
    broken.bnd = {SparseMat::identity(1), SparseMat::identity(1)};
    CHECK_THROWS_AS(homology_dims(broken), std::logic_error);
}

TEST_CASE("Hochschild piece of the dual numbers against the dense oracle") {
    GradedAlgebra alg = load("kx2");
    ChainPiece piece = hochschild_piece(alg, 5, 1, ChainModel::full, 10000);
    std::vector<long> dims = homology_dims(piece);
    // recompute every homology dimension from dense ranks only
    std::vector<long> ranks;
    for (const SparseMat& d : piece.bnd) ranks.push_back(dense_rank_oracle(d));
    for (int n = 0; n < piece.n_top(); ++n) {
        long kernel = piece.dims[static_cast<size_t>(n)] -
                      (n > 0 ? ranks[static_cast<size_t>(n - 1)] : 0);
        CHECK(dims[static_cast<size_t>(n)] == kernel - ranks[static_cast<size_t>(n)]);
    }
}

TEST_CASE("cyclic homology of a semisimple algebra alternates") {
    DimTable hc = hc_table(load("semisimple_k3"), 4, 0, opts_with(ModelPolicy::full));
    for (int n = 0; n <= 4; ++n) CHECK(hc.at(n, 0) == (n % 2 == 0 ? 3 : 0));
}

TEST_CASE("dual numbers in internal degree one") {
    DimTable hc = hc_table(load("kx2"), 4, 1, opts_with(ModelPolicy::full));
    CHECK(hc.at(0, 1) == 1);  // the class of x
    for (int n = 1; n <= 4; ++n) CHECK(hc.at(n, 1) == 0);
}

TEST_CASE("full and reduced models give identical tables") {
    for (const char* name :
         {"kx2", "quantum_exterior_q2", "hereditary_a2", "quadratic_monomial_2v"}) {
        GradedAlgebra alg = load(name);
        DimTable hh_full = hh_table(alg, 3, 3, opts_with(ModelPolicy::full));
        DimTable hh_red = hh_table(alg, 3, 3, opts_with(ModelPolicy::reduced));
        CHECK(hh_full.dims == hh_red.dims);
        DimTable hc_full = hc_table(alg, 3, 3, opts_with(ModelPolicy::full));
        DimTable hc_red = hc_table(alg, 3, 3, opts_with(ModelPolicy::reduced));
        CHECK(hc_full.dims == hc_red.dims);
    }
    GradedAlgebra tri = load("monomial_3vertex");
    DimTable full = hc_table(tri, 3, 2, opts_with(ModelPolicy::full));
    DimTable red = hc_table(tri, 3, 2, opts_with(ModelPolicy::reduced));
    CHECK(full.dims == red.dims);
}

TEST_CASE("relative table: zero row at m = 0, absolute match for m >= 1") {
    for (const char* name : {"kx2", "kx3", "quantum_exterior_q2", "quadratic_monomial_2v"}) {
        GradedAlgebra alg = load(name);
        DimTable rel = relative_hc_table(alg, 4, 3, opts_with(ModelPolicy::full));
        DimTable abs = hc_table(alg, 4, 3, opts_with(ModelPolicy::full));
        for (int n = 0; n <= 4; ++n) CHECK(rel.at(n, 0) == 0);
        for (int m = 1; m <= 3; ++m)
            for (int n = 0; n <= 4; ++n) CHECK(rel.at(n, m) == abs.at(n, m));
    }
}

TEST_CASE("relative cyclic homology vanishes for n >= m") {
    for (const char* name : {"kx2", "quantum_exterior_q2", "quadratic_monomial_2v"}) {
        DimTable rel = relative_hc_table(load(name), 4, 3, opts_with(ModelPolicy::full));
        for (int m = 1; m <= 3; ++m)
            for (int n = m; n <= 4; ++n) CHECK(rel.at(n, m) == 0);
    }
}

TEST_CASE("kernel description of the relative complex") {
    // the chain surjection onto the degree-zero quotient kills exactly the
    // tuples with a positive-degree slot: in degree m >= 1 that is everything,
    // in degree 0 nothing
    GradedAlgebra alg = load("quantum_exterior_q2");
    for (int q = 0; q <= 3; ++q) {
        LevelBasis m0 = build_level_basis(alg, q, 0, ChainModel::full, 10000);
        for (const auto& tup : m0.tuples) {
            bool all_degree_zero = true;
            for (auto k : tup)
                if (alg.element(k).degree > 0) all_degree_zero = false;
            CHECK(all_degree_zero);  // m = 0 tuples survive the projection
        }
        LevelBasis m2 = build_level_basis(alg, q, 2, ChainModel::full, 10000);
        for (const auto& tup : m2.tuples) {
            bool has_positive = false;
            for (auto k : tup)
                if (alg.element(k).degree > 0) has_positive = true;
            CHECK(has_positive);  // m >= 1 tuples all lie in the kernel
        }
    }
    ChainPiece rel0 = relative_cyclic_total_piece(alg, 3, 0, ChainModel::full, 10000);
    for (long d : rel0.dims) CHECK(d == 0);
    ChainPiece rel2 = relative_cyclic_total_piece(alg, 3, 2, ChainModel::full, 10000);
    ChainPiece abs2 = cyclic_total_piece(alg, 3, 2, ChainModel::full, 10000);
    CHECK(rel2.dims == abs2.dims);
}

TEST_CASE("short exact sequence of dimension tables") {
    SbiReport kx2 = verify_sbi(load("kx2"), 4, 4, opts_with(ModelPolicy::full));
    CHECK(kx2.ok);
    CHECK(kx2.violations.empty());

    SbiReport buch = verify_sbi(load("quantum_exterior_q2"), 3, 4, opts_with(ModelPolicy::full));
    CHECK(buch.ok);
}

TEST_CASE("Hochschild homology vanishes in internal degree 0 above degree 0") {
    for (const char* name : {"kx2", "monomial_3vertex", "semisimple_k3"}) {
        DimTable hh = hh_table(load(name), 4, 0, opts_with(ModelPolicy::full));
        for (int n = 1; n <= 4; ++n) CHECK(hh.at(n, 0) == 0);
    }
}

TEST_CASE("HH_0 sums match the cokernel of the commutator map") {
    for (const char* name : {"kx2", "quantum_exterior_q2", "hereditary_a2"}) {
        GradedAlgebra alg = load(name);
        int d = alg.dim();
        SparseMat comm(d, d * d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                long col = static_cast<long>(a) * d + b;
                for (const auto& [k, v] : alg.product(a, b)) comm.add(k, col, v);
                for (const auto& [k, v] : alg.product(b, a)) comm.add(k, col, -v);
            }
        comm.finalize();
        long expected = d - sparse_rank(comm);
        DimTable hh = hh_table(alg, 0, alg.top_degree(), opts_with(ModelPolicy::full));
        long total = 0;
        for (int m = 0; m <= alg.top_degree(); ++m) total += hh.at(0, m);
        CHECK(total == expected);
    }
}

TEST_CASE("tables are invariant under relation reordering") {
    Presentation pres = parse_presentation_file(std::string(QUIVERHOM_CORPUS_DIR) +
                                                "/quantum_exterior_q2.json");
    GradedAlgebra alg = build_graded_algebra(pres);
    Presentation permuted = pres;
    std::reverse(permuted.relations.begin(), permuted.relations.end());
    GradedAlgebra alg2 = build_graded_algebra(permuted);
    CHECK(hc_table(alg, 3, 3, opts_with(ModelPolicy::full)).dims ==
          hc_table(alg2, 3, 3, opts_with(ModelPolicy::full)).dims);
    CHECK(hh_table(alg, 3, 3, opts_with(ModelPolicy::full)).dims ==
          hh_table(alg2, 3, 3, opts_with(ModelPolicy::full)).dims);
}

TEST_CASE("parallel table computation is deterministic") {
    GradedAlgebra alg = load("quantum_exterior_q2");
    DimTable serial = hc_table(alg, 4, 4, opts_with(ModelPolicy::full, 1));
    DimTable parallel = hc_table(alg, 4, 4, opts_with(ModelPolicy::full, 4));
    CHECK(serial.dims == parallel.dims);
}

TEST_CASE("caps raise explicit errors") {
    GradedAlgebra tri = load("monomial_3vertex");
    HomologyOptions tight = opts_with(ModelPolicy::full);
    tight.component_cap = 100;
    CHECK_THROWS_AS(hc_table(tri, 4, 2, tight), CapError);

    HomologyOptions nm = opts_with(ModelPolicy::reduced);
    CHECK_THROWS_AS(hc_table(tri, 11, 2, nm), CapError);
    CHECK_THROWS_AS(hc_table(tri, 4, 9, nm), CapError);
}

TEST_CASE("auto policy switches to the reduced model over the threshold") {
    GradedAlgebra tri = load("monomial_3vertex");
    HomologyOptions opts = opts_with(ModelPolicy::auto_select);
    opts.full_model_threshold = 500;
    // would be far beyond 500 in the full model at m = 2; auto must succeed
    DimTable a = hc_table(tri, 4, 2, opts);
    DimTable b = hc_table(tri, 4, 2, opts_with(ModelPolicy::full));
    CHECK(a.dims == b.dims);
}

TEST_CASE("level dimension counting matches enumeration") {
    for (const char* name : {"quantum_exterior_q2", "monomial_3vertex", "hereditary_a2"}) {
        GradedAlgebra alg = load(name);
        for (int q = 0; q <= 5; ++q)
            for (int m = 0; m <= 4; ++m)
                for (ChainModel model : {ChainModel::full, ChainModel::reduced}) {
                    LevelBasis basis = build_level_basis(alg, q, m, model, 2000000);
                    CHECK(basis.dim() == level_dim(alg, q, m, model));
                }
    }
}
