#include "quiverhom/numtheory.hpp"

#include <algorithm>

namespace quiverhom {

namespace {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> f;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

}  // namespace

int mobius(std::int64_t n) {
    if (n < 1) throw ValidationError("mobius requires n >= 1");
    int t = 0;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        ++t;
    }
    return t % 2 == 0 ? 1 : -1;
}

std::vector<std::int64_t> divisors(std::int64_t m) {
    if (m < 1) throw ValidationError("divisors requires m >= 1");
    std::vector<std::int64_t> d{1};
    for (const auto& [p, e] : factorize(m)) {
        size_t old = d.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < old; ++i) d.push_back(d[i] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

Int theta(std::int64_t m) {
    if (m < 1) throw ValidationError("theta requires m >= 1");
    Int prod = 1;
    for (const auto& [p, e] : factorize(m)) prod *= Int(1) - Int(p);
    Int by_sum = 0;
    for (std::int64_t d : divisors(m)) by_sum += Int(d) * mobius(d);
    if (prod != by_sum)
        throw std::logic_error("theta: divisor sum and prime product disagree");
    return prod;
}

Rational f_weighted(std::int64_t m, const ArithmeticSequence& a) {
    if (m < 1) throw ValidationError("f_weighted requires m >= 1");
    Rational acc = 0;
    for (std::int64_t d : divisors(m)) {
        auto it = a.find(d);
        if (it == a.end())
            throw ValidationError("f_weighted: sequence value a_" + std::to_string(d) +
                                  " missing");
        acc += it->second * Rational(Int(d) * theta(m / d));
    }
    return acc;
}

}  // namespace quiverhom
