#include "quiverhom/int_polynomial.hpp"

#include <sstream>

namespace quiverhom {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(const Int& constant) {
    if (constant != 0) c_.push_back(constant);
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    c_.assign(coeffs.begin(), coeffs.end());
    trim();
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<Int> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> d(c_);
    for (auto& x : d) x = -x;
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> d(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) d[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) d[i] += o.c_[i];
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> d(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) d[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::divexact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::logic_error("polynomial division by zero");
    if (is_zero()) return {};
    std::vector<Int> rem(c_);
    int dd = divisor.degree();
    int qd = degree() - dd;
    if (qd < 0) throw std::logic_error("inexact polynomial division (degree)");
    std::vector<Int> quot(static_cast<size_t>(qd) + 1, Int(0));
    const Int& lead = divisor.c_.back();
    for (int k = qd; k >= 0; --k) {
        Int top = rem[static_cast<size_t>(k + dd)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::logic_error("inexact polynomial division (leading coefficient)");
        Int q = top / lead;
        quot[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= dd; ++i) rem[static_cast<size_t>(k + i)] -= q * divisor.c_[static_cast<size_t>(i)];
    }
    for (const Int& x : rem)
        if (x != 0) throw std::logic_error("inexact polynomial division (remainder)");
    return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::monomial(const Int& coeff, int deg) {
    if (coeff == 0) return {};
    std::vector<Int> d(static_cast<size_t>(deg) + 1, Int(0));
    d.back() = coeff;
    return IntPolynomial(std::move(d));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Int& a = c_[i];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) out << mag.get_str();
        if (i >= 1) {
            out << "x";
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace quiverhom
