#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quiverhom/cartan.hpp"
#include "quiverhom/presentation.hpp"

using namespace quiverhom;

namespace {

GradedAlgebra load(const std::string& name) {
    return build_graded_algebra(
        parse_presentation_file(std::string(QUIVERHOM_CORPUS_DIR) + "/" + name + ".json"));
}

}  // namespace

TEST_CASE("graded Cartan matrices of the worked examples") {
    CartanMatrix kx2 = graded_cartan(load("kx2"));
    CHECK(kx2.r == 1);
    CHECK(kx2.mat.at(0, 0) == IntPolynomial{1, 1});

    CartanMatrix buch = graded_cartan(load("quantum_exterior_q2"));
    CHECK(buch.mat.at(0, 0) == IntPolynomial{1, 2, 1});

    CartanMatrix tri = graded_cartan(load("monomial_3vertex"));
    CHECK(tri.mat.at(0, 0) == IntPolynomial{1, 0, 1});
    CHECK(tri.mat.at(0, 1) == IntPolynomial{0, 1});
    CHECK(tri.mat.at(0, 2) == IntPolynomial{});
    CHECK(tri.mat.at(1, 0) == IntPolynomial{0, 1});
    CHECK(tri.mat.at(1, 1) == IntPolynomial{1, 0, 1});
    CHECK(tri.mat.at(1, 2) == IntPolynomial{0, 1});
    CHECK(tri.mat.at(2, 0) == IntPolynomial{});
    CHECK(tri.mat.at(2, 1) == IntPolynomial{0, 1});
    CHECK(tri.mat.at(2, 2) == IntPolynomial(1));
}

TEST_CASE("graded Cartan determinants") {
    CHECK(cartan_det(load("monomial_3vertex")).is_one());
    CHECK(cartan_det(load("kx2")) == IntPolynomial{1, 1});
    CHECK(cartan_det(load("kx3")) == IntPolynomial{1, 1, 1});
    CHECK(cartan_det(load("kx4")) == IntPolynomial{1, 1, 1, 1});
    CHECK(cartan_det(load("quantum_exterior_q2")) == IntPolynomial{1, 2, 1});
    CHECK(cartan_det(load("semisimple_k3")).is_one());
    CHECK(cartan_det(load("hereditary_a2")).is_one());
    CHECK(cartan_det(load("quadratic_monomial_2v")) == IntPolynomial{1, 0, -1});
}

TEST_CASE("determinant is transpose-invariant") {
    for (const char* name :
         {"monomial_3vertex", "hereditary_a2", "quadratic_monomial_2v", "semisimple_k3"}) {
        PolyMatrix m = graded_cartan(load(name)).mat;
        CHECK(det_poly_matrix(m) == det_poly_matrix(m.transpose()));
    }
}

TEST_CASE("log derivative coefficients") {
    LogDerivativeData trivial = log_derivative(IntPolynomial(1), 20);
    for (const Int& b : trivial.b) CHECK(b == 0);
    CHECK(trivial.u == 0);

    LogDerivativeData geo = log_derivative(IntPolynomial{1, 1}, 50);
    for (int i = 0; i < 50; ++i) CHECK(geo.b[static_cast<size_t>(i)] == (i % 2 == 0 ? 1 : -1));

    LogDerivativeData sq = log_derivative(IntPolynomial{1, 2, 1}, 50);
    for (int i = 0; i < 50; ++i) CHECK(sq.b[static_cast<size_t>(i)] == (i % 2 == 0 ? 2 : -2));
}

TEST_CASE("recurrence checking") {
    LogDerivativeData geo = log_derivative(IntPolynomial{1, 1}, 10);
    RecurrenceVerdict ok = check_recurrence(geo);
    CHECK(ok.holds);
    CHECK(ok.first_violation == -1);

    CHECK(check_recurrence(log_derivative(IntPolynomial(1), 10)).holds);  // vacuous, u = 0

    LogDerivativeData corrupted = geo;
    corrupted.b[5] = -corrupted.b[5];
    RecurrenceVerdict bad = check_recurrence(corrupted);
    CHECK_FALSE(bad.holds);
    CHECK(bad.first_violation == 5);
}

TEST_CASE("loop counting matches the degree-1 coefficient") {
    LoopReport buch = loop_count_criterion(load("quantum_exterior_q2"));
    CHECK(buch.total_loops == 2);
    CHECK(buch.degree1_coeff == 2);
    CHECK(buch.certified_det_not_one);

    LoopReport tri = loop_count_criterion(load("monomial_3vertex"));
    CHECK(tri.total_loops == 0);
    CHECK(tri.degree1_coeff == 0);
    CHECK_FALSE(tri.certified_det_not_one);

    LoopReport kx2 = loop_count_criterion(load("kx2"));
    CHECK(kx2.total_loops == 1);
    CHECK(kx2.degree1_coeff == 1);
    CHECK(kx2.certified_det_not_one);
}

TEST_CASE("ungraded Cartan matrix at x = 1") {
    CHECK(ungraded_cartan(load("kx2")) == std::vector<Int>{2});
    CHECK(ungraded_cartan_det(load("kx2")) == 2);

    std::vector<Int> tri = ungraded_cartan(load("monomial_3vertex"));
    CHECK(tri == std::vector<Int>{2, 1, 0, 1, 2, 1, 0, 1, 1});
    CHECK(ungraded_cartan_det(load("monomial_3vertex")) == 1);

    CHECK(ungraded_cartan(load("quantum_exterior_q2")) == std::vector<Int>{4});
    CHECK(ungraded_cartan_det(load("quantum_exterior_q2")) == 4);
}

TEST_CASE("entry sum of C(1) equals the dimension") {
    for (const char* name : {"kx2", "kx4", "quantum_exterior_q2", "monomial_3vertex",
                             "hereditary_a2", "semisimple_k3", "quadratic_monomial_2v"}) {
        GradedAlgebra alg = load(name);
        Int total = 0;
        for (const Int& e : ungraded_cartan(alg)) total += e;
        CHECK(total == alg.dim());
    }
}
