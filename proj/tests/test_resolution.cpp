#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quiverhom/cartan.hpp"
#include "quiverhom/presentation.hpp"
#include "quiverhom/resolution.hpp"

using namespace quiverhom;

namespace {

GradedAlgebra load(const std::string& name) {
    return build_graded_algebra(
        parse_presentation_file(std::string(QUIVERHOM_CORPUS_DIR) + "/" + name + ".json"));
}

}  // namespace

TEST_CASE("dual numbers have the periodic linear resolution") {
    ResolutionSlice slice = minimal_graded_resolution(load("kx2"), 0, 6);
    CHECK_FALSE(slice.terminated);
    for (int v = 0; v <= 6; ++v) {
        for (const auto& [key, dim] : slice.ext) {
            auto [kv, kj, ku] = key;
            if (kv == v) {
                CHECK(kj == 0);
                CHECK(ku == v);  // Ext^v(S, S[u]) nonzero only at u = v
                CHECK(dim == 1);
            }
        }
        CHECK(slice.ext.count({v, 0, v}) == 1);
    }
}

TEST_CASE("k[x]/(x^3) resolution shifts") {
    ResolutionSlice slice = minimal_graded_resolution(load("kx3"), 0, 4);
    CHECK(slice.ext.at({0, 0, 0}) == 1);
    CHECK(slice.ext.at({1, 0, 1}) == 1);  // cover of (x)
    CHECK(slice.ext.at({2, 0, 3}) == 1);  // cover of (x^2)[-1]
    CHECK(slice.ext.count({2, 0, 2}) == 0);
    CHECK(slice.ext.at({3, 0, 4}) == 1);  // periodicity with period jump 3
}

TEST_CASE("step zero is the identity pattern") {
    for (const char* name : {"kx2", "semisimple_k3", "monomial_3vertex", "hereditary_a2"}) {
        GradedAlgebra alg = load(name);
        for (int i = 0; i < alg.num_vertices(); ++i) {
            ResolutionSlice slice = minimal_graded_resolution(alg, i, 2);
            long v0 = 0;
            for (const auto& [key, dim] : slice.ext)
                if (std::get<0>(key) == 0) {
                    ++v0;
                    CHECK(std::get<1>(key) == i);
                    CHECK(std::get<2>(key) == 0);
                    CHECK(dim == 1);
                }
            CHECK(v0 == 1);
        }
    }
}

TEST_CASE("koszul verdicts") {
    KoszulVerdict kx2 = koszul_check(load("kx2"), 6);
    CHECK(kx2.consistent);

    KoszulVerdict kx3 = koszul_check(load("kx3"), 2);
    CHECK_FALSE(kx3.consistent);
    CHECK(kx3.v == 2);
    CHECK(kx3.u == 3);

    CHECK(koszul_check(load("quantum_exterior_q2"), 4).consistent);
    CHECK(koszul_check(load("quadratic_monomial_2v"), 6).consistent);
    CHECK_THROWS_AS(koszul_check(load("kx2"), 1), ValidationError);
}

TEST_CASE("global dimension probe") {
    GlobalDimProbe semi = global_dimension_probe(load("semisimple_k3"), 4);
    CHECK(semi.determined);
    CHECK(semi.value == 0);

    GlobalDimProbe kx2 = global_dimension_probe(load("kx2"), 6);
    CHECK_FALSE(kx2.determined);

    GlobalDimProbe hered = global_dimension_probe(load("hereditary_a2"), 4);
    CHECK(hered.determined);
    CHECK(hered.value == 1);
}

TEST_CASE("finite global dimension forces det = 1") {
    for (const char* name : {"semisimple_k3", "hereditary_a2"}) {
        GradedAlgebra alg = load(name);
        GlobalDimProbe probe = global_dimension_probe(alg, 6);
        REQUIRE(probe.determined);
        CHECK(cartan_det(alg).is_one());
    }
}

TEST_CASE("inverse Cartan entries from resolutions") {
    WilsonVerdict kx2 = wilson_inverse_check(load("kx2"), 5, 6);
    CHECK(kx2.match);
    // the single entry is the alternating series 1/(1+x)
    for (int p = 0; p <= 5; ++p)
        CHECK(kx2.betti_entries[0].coeff(p) == (p % 2 == 0 ? 1 : -1));

    WilsonVerdict semi = wilson_inverse_check(load("semisimple_k3"), 4, 4);
    CHECK(semi.match);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const RationalSeries& e = semi.betti_entries[static_cast<size_t>(i) * 3 + j];
            if (i == j)
                CHECK(e.coeff(0) == 1);
            else
                CHECK(e.is_zero());
        }
}

TEST_CASE("the asymmetric hereditary algebra pins the orientation convention") {
    WilsonVerdict v = wilson_inverse_check(load("hereditary_a2"), 4, 4);
    CHECK(v.match);
    // inverse of [[1, x], [0, 1]] is [[1, -x], [0, 1]]
    CHECK(v.betti_entries[1].coeff(1) == -1);
    CHECK(v.betti_entries[2].is_zero());
}

TEST_CASE("inverse entries of the det-one monomial algebra are polynomials") {
    GradedAlgebra alg = load("monomial_3vertex");
    WilsonVerdict v = wilson_inverse_check(alg, 6, 6);
    CHECK(v.match);
    PolyMatrix adj = adjugate(graded_cartan(alg).mat);  // det = 1, inverse = adjugate
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const RationalSeries& e = v.inverse_entries[static_cast<size_t>(i) * 3 + j];
            CHECK(e == RationalSeries::from_polynomial(adj.at(i, j), 6));
        }
}

TEST_CASE("wilson check on every corpus algebra") {
    for (const char* name : {"kx2", "kx3", "kx4", "semisimple_k3", "hereditary_a2",
                             "quantum_exterior_q2", "monomial_3vertex", "quadratic_monomial_2v"}) {
        CHECK(wilson_inverse_check(load(name), 6, 6).match);
    }
}

TEST_CASE("betti matrix times the Cartan matrix is the identity") {
    const int order = 6;
    for (const char* name :
         {"kx3", "quantum_exterior_q2", "monomial_3vertex", "quadratic_monomial_2v"}) {
        GradedAlgebra alg = load(name);
        WilsonVerdict v = wilson_inverse_check(alg, order, order);
        REQUIRE(v.match);
        int r = alg.num_vertices();
        PolyMatrix c = graded_cartan(alg).mat;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                RationalSeries acc(order);
                for (int k = 0; k < r; ++k)
                    acc = acc + v.betti_entries[static_cast<size_t>(i) * r + k] *
                                    RationalSeries::from_polynomial(c.at(k, j), order);
                CHECK(acc.coeff(0) == (i == j ? 1 : 0));
                for (int p = 1; p <= order; ++p) CHECK(acc.coeff(p) == 0);
            }
    }
}

TEST_CASE("koszul-consistent algebras have diagonal wilson sums") {
    for (const char* name : {"kx2", "quadratic_monomial_2v"}) {
        GradedAlgebra alg = load(name);
        REQUIRE(koszul_check(alg, 6).consistent);
        WilsonVerdict v = wilson_inverse_check(alg, 6, 6);
        BettiTable betti = full_betti(alg, 6);
        int r = alg.num_vertices();
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                RationalSeries diag(6);
                for (int u = 0; u <= 6; ++u) {
                    long d = betti.at(u, i, j, u);
                    diag.coeff(u) = (u % 2 == 0) ? Rational(d) : Rational(-d);
                }
                CHECK(diag == v.betti_entries[static_cast<size_t>(i) * r + j]);
            }
    }
}

TEST_CASE("insufficient v_max is rejected") {
    CHECK_THROWS_AS(wilson_inverse_check(load("kx2"), 6, 5), ValidationError);
    CHECK_THROWS_AS(minimal_graded_resolution(load("kx2"), 3, 4), ValidationError);
}
