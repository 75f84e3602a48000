#pragma once

#include <vector>

#include "quiverhom/graded_algebra.hpp"
#include "quiverhom/poly_matrix.hpp"

namespace quiverhom {

struct CartanMatrix {
    PolyMatrix mat;
    int r = 0;
    int s = 0;
};

/// C(x) with entry (i,j) = sum_l dim(e_j A_l e_i) x^l. The constant-term
/// matrix is checked to be the identity.
CartanMatrix graded_cartan(const GradedAlgebra& alg);

/// det of the graded Cartan matrix; constant term is always 1.
IntPolynomial cartan_det(const GradedAlgebra& alg);

/// Coefficients b_0..b_{N-1} of D_x log det together with the determinant
/// coefficients c_1..c_u. Every b_i is checked to be an integer (a failure
/// would mean an arithmetic bug, not bad input).
struct LogDerivativeData {
    std::vector<Int> b;
    std::vector<Int> c;  // c[k-1] = coefficient of x^k in det
    int u = 0;
    int order = 0;  // b has `order` entries
};

LogDerivativeData log_derivative(const IntPolynomial& det, int order);

struct RecurrenceVerdict {
    bool holds = true;
    int first_violation = -1;  // index m with b_m + sum c_k b_{m-k} != 0
};

/// Checks b_m + c_1 b_{m-1} + ... + c_u b_{m-u} = 0 for u <= m <= N-1.
RecurrenceVerdict check_recurrence(const LogDerivativeData& data);

struct LoopReport {
    std::vector<long> loops_per_vertex;
    long total_loops = 0;
    Int degree1_coeff;
    bool certified_det_not_one = false;
};

/// Counts quiver loops and checks the degree-1 coefficient of det C(x)
/// equals the loop count; a positive count certifies det != 1.
LoopReport loop_count_criterion(const GradedAlgebra& alg);

/// C(1) entrywise (row-major r*r) and its determinant.
std::vector<Int> ungraded_cartan(const GradedAlgebra& alg);
Int ungraded_cartan_det(const GradedAlgebra& alg);

}  // namespace quiverhom
