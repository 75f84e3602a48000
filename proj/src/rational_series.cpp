#include "quiverhom/rational_series.hpp"

#include <sstream>

namespace quiverhom {

RationalSeries::RationalSeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<size_t>(order) + 1);
}

bool RationalSeries::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool RationalSeries::all_integer() const {
    for (const auto& x : c_)
        if (!is_integer(x)) return false;
    return true;
}

RationalSeries RationalSeries::truncate(int new_order) const {
    RationalSeries out(new_order);
    for (int i = 0; i <= new_order && i <= order(); ++i) out.coeff(i) = coeff(i);
    return out;
}

RationalSeries RationalSeries::stretch(int m) const {
    RationalSeries out(order());
    for (int i = 0; i * m <= order(); ++i) out.coeff(i * m) = coeff(i);
    return out;
}

namespace {
void require_same_order(const RationalSeries& a, const RationalSeries& b) {
    if (a.order() != b.order())
        throw std::logic_error("series order mismatch; truncate explicitly first");
}
}  // namespace

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    require_same_order(*this, o);
    RationalSeries out(order());
    for (int i = 0; i <= order(); ++i) out.coeff(i) = coeff(i) + o.coeff(i);
    return out;
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
    require_same_order(*this, o);
    RationalSeries out(order());
    for (int i = 0; i <= order(); ++i) out.coeff(i) = coeff(i) - o.coeff(i);
    return out;
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    require_same_order(*this, o);
    RationalSeries out(order());
    for (int i = 0; i <= order(); ++i) {
        if (coeff(i) == 0) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (o.coeff(j) == 0) continue;
            out.coeff(i + j) += coeff(i) * o.coeff(j);
        }
    }
    return out;
}

RationalSeries RationalSeries::operator*(const Rational& s) const {
    RationalSeries out(order());
    for (int i = 0; i <= order(); ++i) out.coeff(i) = coeff(i) * s;
    return out;
}

RationalSeries RationalSeries::from_polynomial(const IntPolynomial& p, int order) {
    RationalSeries out(order);
    for (int i = 0; i <= order && i <= p.degree(); ++i) out.coeff(i) = Rational(p.coeff(i));
    return out;
}

std::string RationalSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= order(); ++i) {
        const Rational& a = coeff(i);
        if (a == 0) continue;
        Rational mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) out << mag.get_str();
        if (i >= 1) {
            if (mag != 1) out << "*";
            out << "x";
            if (i >= 2) out << "^" << i;
        }
    }
    if (first) out << "0";
    out << " + O(x^" << order() + 1 << ")";
    return out.str();
}

RationalSeries series_log(const IntPolynomial& p, int order) {
    if (p.coeff(0) != 1) throw ValidationError("series_log requires constant term 1");
    RationalSeries u = RationalSeries::from_polynomial(p, order);
    u.coeff(0) = 0;  // u = p - 1, valuation >= 1
    RationalSeries acc(order);
    RationalSeries upow(order);
    upow.coeff(0) = 1;
    for (int m = 1; m <= order; ++m) {
        upow = upow * u;
        Rational c = frac(m % 2 == 1 ? 1 : -1, m);
        acc = acc + upow * c;
    }
    return acc;
}

RationalSeries series_derivative(const RationalSeries& f) {
    int n = f.order() - 1;
    if (n < 0) n = 0;
    RationalSeries out(n);
    for (int i = 0; i <= n && i + 1 <= f.order(); ++i)
        out.coeff(i) = f.coeff(i + 1) * Rational(i + 1);
    return out;
}

RationalSeries series_inverse(const IntPolynomial& p, int order) {
    const Int& c0 = p.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw ValidationError("series_inverse requires constant term 1 or -1");
    RationalSeries q(order);
    Rational lead(c0);  // 1/c0 = c0 for c0 = +-1
    q.coeff(0) = lead;
    for (int k = 1; k <= order; ++k) {
        Rational s = 0;
        for (int j = 1; j <= k && j <= p.degree(); ++j) s += Rational(p.coeff(j)) * q.coeff(k - j);
        q.coeff(k) = -lead * s;
    }
    return q;
}

std::vector<RationalSeries> matrix_inverse_series(const PolyMatrix& m, int order) {
    if (!m.constant_term_is_identity())
        throw ValidationError("matrix_inverse_series requires constant-term matrix = identity");
    int r = m.size();
    IntPolynomial det = det_poly_matrix(m);
    PolyMatrix adj = adjugate(m);
    RationalSeries inv_det = series_inverse(det, order);
    std::vector<RationalSeries> out;
    out.reserve(static_cast<size_t>(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            RationalSeries e = RationalSeries::from_polynomial(adj.at(i, j), order) * inv_det;
            if (!e.all_integer())
                throw std::logic_error("inverse Cartan series entry has a non-integer coefficient");
            out.push_back(e);
        }
    return out;
}

}  // namespace quiverhom
