#include "quiverhom/cartan.hpp"

#include "quiverhom/rational_series.hpp"

namespace quiverhom {

CartanMatrix graded_cartan(const GradedAlgebra& alg) {
    int r = alg.num_vertices();
    CartanMatrix cm{PolyMatrix(r), r, alg.top_degree()};
    std::vector<std::vector<Int>> coeffs(static_cast<size_t>(r) * r,
                                         std::vector<Int>(static_cast<size_t>(alg.top_degree()) + 1,
                                                          Int(0)));
    for (int k = 0; k < alg.dim(); ++k) {
        const BasisElement& e = alg.element(k);
        coeffs[static_cast<size_t>(e.src) * r + e.tgt][static_cast<size_t>(e.degree)] += 1;
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            cm.mat.at(i, j) = IntPolynomial(coeffs[static_cast<size_t>(i) * r + j]);
    if (!cm.mat.constant_term_is_identity())
        throw std::logic_error("graded Cartan matrix has non-identity constant term");
    return cm;
}

IntPolynomial cartan_det(const GradedAlgebra& alg) {
    IntPolynomial det = det_poly_matrix(graded_cartan(alg).mat);
    if (det.coeff(0) != 1)
        throw std::logic_error("graded Cartan determinant has constant term != 1");
    return det;
}

LogDerivativeData log_derivative(const IntPolynomial& det, int order) {
    RationalSeries dlog = series_derivative(series_log(det, order));
    LogDerivativeData data;
    data.order = order;
    data.u = det.degree();
    for (int i = 0; i < order; ++i) data.b.push_back(to_integer(dlog.coeff(i)));
    for (int k = 1; k <= data.u; ++k) data.c.push_back(det.coeff(k));
    return data;
}

RecurrenceVerdict check_recurrence(const LogDerivativeData& data) {
    for (int m = data.u; m < data.order; ++m) {
        Int acc = data.b[static_cast<size_t>(m)];
        for (int k = 1; k <= data.u; ++k)
            acc += data.c[static_cast<size_t>(k - 1)] * data.b[static_cast<size_t>(m - k)];
        if (acc != 0) return {false, m};
    }
    return {true, -1};
}

LoopReport loop_count_criterion(const GradedAlgebra& alg) {
    const Quiver& quiver = alg.presentation().quiver;
    LoopReport report;
    for (int v = 0; v < alg.num_vertices(); ++v) {
        long n = quiver.loops_at(v);
        report.loops_per_vertex.push_back(n);
        report.total_loops += n;
    }
    report.degree1_coeff = cartan_det(alg).coeff(1);
    if (report.degree1_coeff != report.total_loops)
        throw std::logic_error(
            "degree-1 coefficient of the Cartan determinant differs from the loop count");
    report.certified_det_not_one = report.total_loops > 0;
    return report;
}

std::vector<Int> ungraded_cartan(const GradedAlgebra& alg) {
    CartanMatrix cm = graded_cartan(alg);
    std::vector<Int> out;
    for (int i = 0; i < cm.r; ++i)
        for (int j = 0; j < cm.r; ++j) out.push_back(cm.mat.at(i, j).eval(1));
    return out;
}

Int ungraded_cartan_det(const GradedAlgebra& alg) {
    CartanMatrix cm = graded_cartan(alg);
    PolyMatrix at_one(cm.r);
    for (int i = 0; i < cm.r; ++i)
        for (int j = 0; j < cm.r; ++j) at_one.at(i, j) = IntPolynomial(cm.mat.at(i, j).eval(1));
    return det_poly_matrix(at_one).coeff(0);
}

}  // namespace quiverhom
