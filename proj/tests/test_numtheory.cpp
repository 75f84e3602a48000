#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "quiverhom/cartan.hpp"
#include "quiverhom/igusa.hpp"
#include "quiverhom/numtheory.hpp"

using namespace quiverhom;

TEST_CASE("mobius values") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(49) == 0);
    CHECK_THROWS_AS(mobius(0), ValidationError);
}

TEST_CASE("mobius divisor sums vanish beyond 1") {
    for (std::int64_t n = 1; n <= 300; ++n) {
        int acc = 0;
        for (std::int64_t d : divisors(n)) acc += mobius(d);
        CHECK(acc == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("theta values") {
    CHECK(theta(1) == 1);
    CHECK(theta(6) == 2);   // (1-2)(1-3)
    CHECK(theta(4) == -1);  // single prime 2
    CHECK(theta(12) == 2);
    CHECK(theta(30) == -8);  // (1-2)(1-3)(1-5)
    CHECK_THROWS_AS(theta(0), ValidationError);
}

TEST_CASE("theta is multiplicative on coprime pairs") {
    for (std::int64_t m = 1; m <= 40; ++m)
        for (std::int64_t n = 1; n <= 40; ++n) {
            if (std::gcd(m, n) != 1) continue;
            CHECK(theta(m * n) == theta(m) * theta(n));
        }
}

TEST_CASE("divisor divisibility: n | m implies theta(n) | theta(m)") {
    for (std::int64_t m = 1; m <= 400; ++m)
        for (std::int64_t n : divisors(m)) {
            Int tm = theta(m);
            Int tn = theta(n);
            CHECK(mpz_divisible_p(tm.get_mpz_t(), tn.get_mpz_t()));
        }
}

TEST_CASE("both theta formulas agree up to 10^4") {
    // theta() itself recomputes the divisor sum and throws on disagreement
    for (std::int64_t m = 1; m <= 10000; ++m) CHECK_NOTHROW(theta(m));
}

TEST_CASE("weighted divisor sum f") {
    ArithmeticSequence a;
    a[1] = 1;
    CHECK(f_weighted(1, a) == 1);

    a[2] = 0;
    CHECK(f_weighted(2, a) == -1);  // 1*1*theta(2)

    ArithmeticSequence missing;
    missing[1] = 1;
    CHECK_THROWS_AS(f_weighted(2, missing), ValidationError);
}

TEST_CASE("f recovers the shifted log-derivative coefficients") {
    // chi of k[x]/(x^2) has determinant 1+x
    IntPolynomial det{1, 1};
    EulerSeries chi = chi_from_cartan(det, 20);
    ArithmeticSequence a;
    for (int i = 0; i <= chi.order(); ++i) a[i] = Rational(chi.a[static_cast<size_t>(i)]);
    LogDerivativeData ld = log_derivative(det, 20);
    for (std::int64_t m = 1; m <= 20; ++m)
        CHECK(f_weighted(m, a) == Rational(ld.b[static_cast<size_t>(m - 1)]));
}
