#pragma once

#include <string>
#include <vector>

#include "quiverhom/cartan.hpp"
#include "quiverhom/homology.hpp"
#include "quiverhom/rational_series.hpp"
#include "quiverhom/resolution.hpp"

namespace quiverhom {

/// chi(HC^m(A,J)) per internal degree m, an integer series with no constant
/// term: a_m = sum_{n<m} (-1)^n dim HC_n^m(A,J).
struct EulerSeries {
    std::vector<Int> a;  // a[m] for m = 0..order, a[0] = 0

    int order() const { return static_cast<int>(a.size()) - 1; }
    bool is_zero() const;
    RationalSeries to_series() const;
    bool operator==(const EulerSeries& o) const { return a == o.a; }
};

/// Alternating sums over the relative table. Requires entries for all
/// n <= m <= m_max; any present entry with n >= m >= 1 must be zero
/// (otherwise the table contradicts the vanishing theorem and we refuse to
/// sum it).
EulerSeries chi_from_homology(const DimTable& rel, int m_max);

/// chi(x) = sum_m log det C(x^m) * sum_{d|m} mu(d)/d, truncated at N.
/// Coefficients are checked to be integers.
EulerSeries chi_from_cartan(const IntPolynomial& det, int order);

/// Inverse direction: log det C(x) = sum_m chi(x^m) * sum_{d|m} d mu(d)/m.
RationalSeries logdet_from_chi(const EulerSeries& chi, int order);

struct PropernessCheckpoint {
    int after = 0;        // checkpoint B
    int found_index = -1; // nonzero coefficient in (B, B+window], -1 if none
};

struct PropernessReport {
    int order = 0;
    int window = 0;
    std::vector<PropernessCheckpoint> checkpoints;  // B in {N/4, N/2, 3N/4}
    bool all_found = false;
};

/// Bounded numerical evidence that chi is a proper power series (infinitely
/// many nonzero coefficients). Requires det != 1.
PropernessReport properness_evidence(const IntPolynomial& det, int order, int window);

struct HanOptions {
    int series_order = 50;
    int properness_order = 60;
    int properness_window = 10;
    int v_max = 6;
};

struct ClassStatus {
    std::string name;    // "koszul", "local", "loop", "cellular"
    std::string status;  // human-readable applicability note
};

struct HanVerdict {
    IntPolynomial det;
    bool det_is_one = false;
    bool certified_infinite_hhdim = false;  // set only via det != 1
    PropernessReport properness;            // evidence when certified
    LoopReport loops;
    Int ungraded_det;
    GlobalDimProbe gldim;
    KoszulVerdict koszul;
    std::vector<ClassStatus> classes;
    std::vector<std::string> notes;
};

/// det != 1 certifies infinite Hochschild homology dimension; det = 1 is
/// reported as inconclusive (the converse genuinely fails), annotated with
/// the class-theorem data.
HanVerdict han_verdict(const GradedAlgebra& alg, const HanOptions& options);

}  // namespace quiverhom
