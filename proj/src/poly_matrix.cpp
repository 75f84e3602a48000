#include "quiverhom/poly_matrix.hpp"

namespace quiverhom {

bool PolyMatrix::constant_term_is_identity() const {
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j)
            if (at(i, j).coeff(0) != (i == j ? 1 : 0)) return false;
    return true;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) t.at(j, i) = at(i, j);
    return t;
}

PolyMatrix PolyMatrix::identity(int r) {
    PolyMatrix m(r);
    for (int i = 0; i < r; ++i) m.at(i, i) = IntPolynomial(1);
    return m;
}

namespace {

IntPolynomial det_cofactor(const PolyMatrix& m, std::vector<int>& cols, int row) {
    int r = m.size();
    if (row == r) return IntPolynomial(1);
    IntPolynomial acc;
    int sign = 1;
    for (size_t k = 0; k < cols.size(); ++k) {
        int col = cols[k];
        if (!m.at(row, col).is_zero()) {
            cols.erase(cols.begin() + static_cast<long>(k));
            IntPolynomial sub = det_cofactor(m, cols, row + 1);
            cols.insert(cols.begin() + static_cast<long>(k), col);
            IntPolynomial term = m.at(row, col) * sub;
            acc = (sign > 0) ? acc + term : acc - term;
        }
        sign = -sign;
    }
    return acc;
}

// Fraction-free elimination; every division is exact over Z[x].
IntPolynomial det_bareiss(PolyMatrix m) {
    int r = m.size();
    IntPolynomial prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < r; ++k) {
        if (m.at(k, k).is_zero()) {
            int swap = -1;
            for (int i = k + 1; i < r; ++i)
                if (!m.at(i, k).is_zero()) {
                    swap = i;
                    break;
                }
            if (swap < 0) return {};
            for (int j = k; j < r; ++j) std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < r; ++i)
            for (int j = k + 1; j < r; ++j) {
                IntPolynomial num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num.divexact(prev);
            }
        prev = m.at(k, k);
    }
    IntPolynomial d = m.at(r - 1, r - 1);
    return sign > 0 ? d : -d;
}

}  // namespace

IntPolynomial det_poly_matrix(const PolyMatrix& m) {
    int r = m.size();
    if (r == 0) return IntPolynomial(1);
    if (r <= 4) {
        std::vector<int> cols(static_cast<size_t>(r));
        for (int j = 0; j < r; ++j) cols[static_cast<size_t>(j)] = j;
        return det_cofactor(m, cols, 0);
    }
    return det_bareiss(m);
}

PolyMatrix adjugate(const PolyMatrix& m) {
    int r = m.size();
    PolyMatrix adj(r);
    if (r == 1) {
        adj.at(0, 0) = IntPolynomial(1);
        return adj;
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            PolyMatrix minor(r - 1);
            for (int a = 0, ai = 0; a < r; ++a) {
                if (a == i) continue;
                for (int b = 0, bj = 0; b < r; ++b) {
                    if (b == j) continue;
                    minor.at(ai, bj) = m.at(a, b);
                    ++bj;
                }
                ++ai;
            }
            IntPolynomial c = det_poly_matrix(minor);
            adj.at(j, i) = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

}  // namespace quiverhom
