#include "quiverhom/igusa.hpp"

#include "quiverhom/numtheory.hpp"

namespace quiverhom {

bool EulerSeries::is_zero() const {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

RationalSeries EulerSeries::to_series() const {
    RationalSeries s(order());
    for (int i = 0; i <= order(); ++i) s.coeff(i) = Rational(a[static_cast<size_t>(i)]);
    return s;
}

EulerSeries chi_from_homology(const DimTable& rel, int m_max) {
    EulerSeries chi;
    chi.a.assign(static_cast<size_t>(m_max) + 1, Int(0));
    for (int m = 1; m <= m_max; ++m) {
        for (int n = 0; n <= m; ++n)
            if (!rel.has(n, m))
                throw ValidationError("chi_from_homology: missing table entry (" +
                                      std::to_string(n) + "," + std::to_string(m) + ")");
        Int acc = 0;
        for (int n = 0; n < m; ++n) {
            long d = rel.at(n, m);
            acc += (n % 2 == 0) ? Int(d) : Int(-d);
        }
        chi.a[static_cast<size_t>(m)] = acc;
    }
    // any computed entry at n >= m >= 1 must vanish; a nonzero value would
    // contradict the theorem this sum rests on
    for (const auto& [key, d] : rel.dims) {
        auto [n, m] = key;
        if (m >= 1 && n >= m && d != 0)
            throw std::logic_error("relative cyclic homology nonzero at n >= m: (" +
                                   std::to_string(n) + "," + std::to_string(m) + ")");
    }
    return chi;
}

EulerSeries chi_from_cartan(const IntPolynomial& det, int order) {
    RationalSeries acc(order);
    RationalSeries logdet = series_log(det, order);
    for (int m = 1; m <= order; ++m) {
        Rational weight = 0;
        for (std::int64_t d : divisors(m)) weight += frac(mobius(d), d);
        if (weight == 0) continue;
        acc = acc + logdet.stretch(m) * weight;
    }
    EulerSeries chi;
    chi.a.reserve(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) chi.a.push_back(to_integer(acc.coeff(i)));
    if (chi.a[0] != 0) throw std::logic_error("chi has a nonzero constant term");
    return chi;
}

RationalSeries logdet_from_chi(const EulerSeries& chi, int order) {
    RationalSeries acc(order);
    RationalSeries base = chi.to_series().truncate(order);
    for (int m = 1; m <= order; ++m) {
        Rational weight = 0;
        for (std::int64_t d : divisors(m)) weight += frac(Int(d) * mobius(d), Int(m));
        if (weight == 0) continue;
        acc = acc + base.stretch(m) * weight;
    }
    return acc;
}

PropernessReport properness_evidence(const IntPolynomial& det, int order, int window) {
    if (det.is_one()) throw ValidationError("properness_evidence requires det != 1");
    if (window < 1) throw ValidationError("properness window must be positive");
    EulerSeries chi = chi_from_cartan(det, order);
    PropernessReport report;
    report.order = order;
    report.window = window;
    report.all_found = true;
    for (int checkpoint : {order / 4, order / 2, 3 * order / 4}) {
        PropernessCheckpoint cp;
        cp.after = checkpoint;
        for (int i = checkpoint + 1; i <= std::min(checkpoint + window, order); ++i)
            if (chi.a[static_cast<size_t>(i)] != 0) {
                cp.found_index = i;
                break;
            }
        if (cp.found_index < 0) report.all_found = false;
        report.checkpoints.push_back(cp);
    }
    return report;
}

HanVerdict han_verdict(const GradedAlgebra& alg, const HanOptions& options) {
    HanVerdict verdict;
    verdict.det = cartan_det(alg);
    verdict.det_is_one = verdict.det.is_one();
    verdict.loops = loop_count_criterion(alg);
    verdict.ungraded_det = ungraded_cartan_det(alg);
    verdict.gldim = global_dimension_probe(alg, options.v_max);
    verdict.koszul = koszul_check(alg, std::max(options.v_max, 2));

    if (!verdict.det_is_one) {
        verdict.certified_infinite_hhdim = true;
        verdict.properness =
            properness_evidence(verdict.det, options.properness_order, options.properness_window);
    }

    // local class: for one vertex the determinant is the Hilbert series, so
    // det = 1 forces A = k
    if (alg.num_vertices() == 1) {
        if (verdict.det_is_one && alg.dim() > 1)
            throw std::logic_error("local algebra with trivial Hilbert series but dim > 1");
        verdict.classes.push_back(
            {"local", verdict.det_is_one
                          ? "applicable: Hilbert series 1 forces A = k (finite global dimension)"
                          : "applicable: Hilbert series != 1"});
    } else {
        verdict.classes.push_back({"local", "not applicable: more than one vertex"});
    }

    if (verdict.koszul.consistent) {
        verdict.classes.push_back(
            {"koszul", "resolutions linear up to step " + std::to_string(verdict.koszul.v_max) +
                           "; if A is Koszul, det = 1 would force finite global dimension"});
    } else {
        verdict.classes.push_back(
            {"koszul", "not Koszul: Ext^" + std::to_string(verdict.koszul.v) + " at shift " +
                           std::to_string(verdict.koszul.u)});
    }

    verdict.classes.push_back(
        {"loop", verdict.loops.total_loops > 0
                     ? "quiver has " + std::to_string(verdict.loops.total_loops) +
                           " loop(s): determinant criterion certified"
                     : "no loops in the quiver"});

    verdict.classes.push_back(
        {"cellular", "cell structure not detected by this tool; if A is cellular, det C(1) = " +
                         verdict.ungraded_det.get_str() + " decides finite global dimension"});

    if (verdict.det_is_one) {
        verdict.notes.push_back(
            "inconclusive: det = 1 does not imply finite global dimension, so no certificate "
            "is issued");
        if (alg.presentation().is_monomial())
            verdict.notes.push_back(
                "monomial presentation: the vanishing question for this class is settled in "
                "the literature independently of the determinant criterion");
        if (verdict.gldim.determined)
            verdict.notes.push_back("global dimension " + std::to_string(verdict.gldim.value) +
                                    " (finite), consistent with det = 1");
    }
    return verdict;
}

}  // namespace quiverhom
