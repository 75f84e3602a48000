#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "quiverhom/rational.hpp"

namespace quiverhom {

/// Values a_1, a_2, ... of an integer-indexed sequence, kept sparse.
using ArithmeticSequence = std::map<std::int64_t, Rational>;

/// Moebius function: 1, (-1)^t for t distinct primes, 0 on squares.
int mobius(std::int64_t n);

/// theta(m) = sum_{d|m} d mu(d) = prod_{p|m} (1-p). Both forms are computed
/// and checked against each other.
Int theta(std::int64_t m);

std::vector<std::int64_t> divisors(std::int64_t m);

/// f(m) = sum_{d|m} a_d * d * theta(m/d). Throws if some a_d is missing.
Rational f_weighted(std::int64_t m, const ArithmeticSequence& a);

}  // namespace quiverhom
