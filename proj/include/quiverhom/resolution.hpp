#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "quiverhom/graded_algebra.hpp"
#include "quiverhom/rational_series.hpp"

namespace quiverhom {

/// Multiplicities dim Ext^v(S_i, S_j[u]) read off a minimal graded
/// projective resolution: the entry (v, i, j, u) counts generators of the
/// v-th term of the resolution of S_i that sit at vertex j in degree u.
struct BettiTable {
    std::map<std::tuple<int, int, int, int>, long> ext;  // (v, i, j, u) -> dim

    long at(int v, int i, int j, int u) const;
};

struct ResolutionSlice {
    int simple = 0;  // the index i
    int v_max = 0;
    bool terminated = false;   // syzygy reached 0 at some step <= v_max
    int termination_step = -1; // projective dimension when terminated
    std::map<std::tuple<int, int, int>, long> ext;  // (v, j, u) -> dim
};

/// Iterated minimal projective covers of S_i, recording generator positions
/// per step. Generators are chosen degree-by-degree in a radical complement,
/// with the same deterministic elimination order as the algebra build.
ResolutionSlice minimal_graded_resolution(const GradedAlgebra& alg, int simple_i, int v_max);

BettiTable full_betti(const GradedAlgebra& alg, int v_max);

struct KoszulVerdict {
    bool consistent = true;  // no off-diagonal entry up to v_max; never a proof
    int v_max = 0;
    // first witness with u != v when not consistent:
    int v = -1, i = -1, j = -1, u = -1;
};

KoszulVerdict koszul_check(const GradedAlgebra& alg, int v_max);

struct GlobalDimProbe {
    bool determined = false;  // every simple's resolution terminated by v_max
    int value = -1;           // max projective dimension when determined
    int v_max = 0;
};

GlobalDimProbe global_dimension_probe(const GradedAlgebra& alg, int v_max);

struct WilsonVerdict {
    bool match = true;
    int i = -1, j = -1, power = -1;  // first mismatching entry/coefficient
    std::vector<RationalSeries> inverse_entries;   // from the Cartan matrix
    std::vector<RationalSeries> betti_entries;     // alternating Ext sums
    int order = 0;
};

/// Compares the alternating-sum matrix sum_v (-1)^v dim Ext^v(S_i,S_j[u]) x^u
/// against the series inverse of the graded Cartan matrix, entrywise mod
/// x^{N+1}. Requires v_max >= N (each resolution step raises the minimal
/// generator degree by at least one, so higher steps cannot touch x^u with
/// u <= N).
WilsonVerdict wilson_inverse_check(const GradedAlgebra& alg, int order, int v_max);

}  // namespace quiverhom
