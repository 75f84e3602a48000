#include "quiverhom/cli.hpp"

#include <chrono>
#include <ostream>

#include <json.hpp>

#include "quiverhom/cartan.hpp"
#include "quiverhom/graded_algebra.hpp"
#include "quiverhom/homology.hpp"
#include "quiverhom/igusa.hpp"
#include "quiverhom/numtheory.hpp"
#include "quiverhom/presentation.hpp"
#include "quiverhom/rational_series.hpp"
#include "quiverhom/resolution.hpp"

namespace quiverhom {

using json = nlohmann::ordered_json;

namespace {

json series_json(const RationalSeries& s) {
    json arr = json::array();
    for (int i = 0; i <= s.order(); ++i) arr.push_back(rat_to_string(s.coeff(i)));
    return arr;
}

json euler_json(const EulerSeries& s) {
    json arr = json::array();
    for (const Int& x : s.a) arr.push_back(x.get_str());
    return arr;
}

json poly_json(const IntPolynomial& p) {
    json j;
    j["text"] = p.to_string();
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).get_str());
    j["coeffs"] = std::move(arr);
    return j;
}

json table_json(const DimTable& t) {
    json rows = json::array();
    for (const auto& [key, dim] : t.dims) {
        json e;
        e["n"] = key.first;
        e["m"] = key.second;
        e["dim"] = dim;
        rows.push_back(std::move(e));
    }
    json j;
    j["theory"] = t.theory;
    j["entries"] = std::move(rows);
    return j;
}

HomologyOptions homology_options(const RunConfig& c) {
    HomologyOptions opts;
    if (c.model == "full")
        opts.policy = ModelPolicy::full;
    else if (c.model == "reduced")
        opts.policy = ModelPolicy::reduced;
    else if (c.model == "auto")
        opts.policy = ModelPolicy::auto_select;
    else
        throw ValidationError("unknown chain model '" + c.model + "'");
    opts.component_cap = c.component_cap;
    opts.full_model_threshold = c.full_model_threshold;
    opts.n_cap = c.n_cap;
    opts.m_cap = c.m_cap;
    opts.jobs = c.jobs;
    return opts;
}

ChainModel concrete_model(const GradedAlgebra& alg, const RunConfig& c, int n_top, int m_max) {
    if (c.model == "reduced") return ChainModel::reduced;
    if (c.model == "full") return ChainModel::full;
    for (int m = 0; m <= m_max; ++m) {
        long total = 0;
        for (int q = 0; q <= n_top; ++q) total += level_dim(alg, q, m, ChainModel::full);
        if (total > c.full_model_threshold) return ChainModel::reduced;
    }
    return ChainModel::full;
}

struct CommandResult {
    json payload;
    bool mismatch = false;
};

json basis_payload(const GradedAlgebra& alg) {
    json j;
    j["dimension"] = alg.dim();
    j["top_degree"] = alg.top_degree();
    j["dims_per_degree"] = alg.dims_per_degree();
    json elems = json::array();
    const auto& verts = alg.presentation().quiver.vertices;
    for (int k = 0; k < alg.dim(); ++k) {
        json e;
        e["label"] = alg.label(k);
        e["degree"] = alg.element(k).degree;
        e["source"] = verts[static_cast<size_t>(alg.element(k).src)];
        e["target"] = verts[static_cast<size_t>(alg.element(k).tgt)];
        elems.push_back(std::move(e));
    }
    j["elements"] = std::move(elems);
    return j;
}

json han_payload(const HanVerdict& v) {
    json j;
    j["det"] = poly_json(v.det);
    j["det_is_one"] = v.det_is_one;
    j["certified_infinite_hhdim"] = v.certified_infinite_hhdim;
    j["loop_count"] = v.loops.total_loops;
    j["ungraded_det"] = v.ungraded_det.get_str();
    json classes = json::array();
    for (const auto& c : v.classes) {
        json e;
        e["class"] = c.name;
        e["status"] = c.status;
        classes.push_back(std::move(e));
    }
    j["classes"] = std::move(classes);
    if (v.certified_infinite_hhdim) {
        json p;
        p["order"] = v.properness.order;
        p["window"] = v.properness.window;
        p["all_found"] = v.properness.all_found;
        json cps = json::array();
        for (const auto& cp : v.properness.checkpoints) {
            json e;
            e["after"] = cp.after;
            e["nonzero_at"] = cp.found_index;
            cps.push_back(std::move(e));
        }
        p["checkpoints"] = std::move(cps);
        j["properness"] = std::move(p);
    }
    j["global_dimension"] =
        v.gldim.determined ? json(v.gldim.value) : json("not determined up to v_max");
    j["notes"] = v.notes;
    return j;
}

CommandResult dispatch(const RunConfig& c, const GradedAlgebra& alg) {
    CommandResult result;
    json& j = result.payload;

    if (c.command == "basis") {
        j = basis_payload(alg);
    } else if (c.command == "cartan") {
        CartanMatrix cm = graded_cartan(alg);
        j["r"] = cm.r;
        j["s"] = cm.s;
        json rows = json::array();
        for (int i = 0; i < cm.r; ++i) {
            json row = json::array();
            for (int k = 0; k < cm.r; ++k) row.push_back(cm.mat.at(i, k).to_string());
            rows.push_back(std::move(row));
        }
        j["entries"] = std::move(rows);
    } else if (c.command == "det") {
        IntPolynomial det = cartan_det(alg);
        j = poly_json(det);
        j["is_one"] = det.is_one();
    } else if (c.command == "logderiv") {
        LogDerivativeData data = log_derivative(cartan_det(alg), c.order);
        json b = json::array();
        for (const Int& x : data.b) b.push_back(x.get_str());
        json cc = json::array();
        for (const Int& x : data.c) cc.push_back(x.get_str());
        RecurrenceVerdict rec = check_recurrence(data);
        j["order"] = data.order;
        j["u"] = data.u;
        j["b"] = std::move(b);
        j["c"] = std::move(cc);
        j["recurrence_holds"] = rec.holds;
        j["first_violation"] = rec.first_violation;
        result.mismatch = !rec.holds;
    } else if (c.command == "inverse") {
        auto inv = matrix_inverse_series(graded_cartan(alg).mat, c.order);
        int r = alg.num_vertices();
        j["order"] = c.order;
        json rows = json::array();
        for (int i = 0; i < r; ++i) {
            json row = json::array();
            for (int k = 0; k < r; ++k)
                row.push_back(series_json(inv[static_cast<size_t>(i) * r + k]));
            rows.push_back(std::move(row));
        }
        j["entries"] = std::move(rows);
    } else if (c.command == "chi") {
        j["m_max"] = c.m_max;
        if (c.method == "cartan" || c.method == "both") {
            EulerSeries chi = chi_from_cartan(cartan_det(alg), c.m_max);
            j["chi_cartan"] = euler_json(chi);
        }
        if (c.method == "homology" || c.method == "both") {
            DimTable rel = relative_hc_table(alg, c.m_max + 1, c.m_max, homology_options(c));
            EulerSeries chi = chi_from_homology(rel, c.m_max);
            j["chi_homology"] = euler_json(chi);
        }
        if (c.method == "both") {
            bool equal = j["chi_cartan"] == j["chi_homology"];
            j["equal"] = equal;
            result.mismatch = !equal;
        } else if (c.method != "cartan" && c.method != "homology") {
            throw ValidationError("unknown chi method '" + c.method + "'");
        }
    } else if (c.command == "hh" || c.command == "hc" || c.command == "relhc") {
        HomologyOptions opts = homology_options(c);
        DimTable t = c.command == "hh"   ? hh_table(alg, c.n_max, c.m_max, opts)
                     : c.command == "hc" ? hc_table(alg, c.n_max, c.m_max, opts)
                                         : relative_hc_table(alg, c.n_max, c.m_max, opts);
        j = table_json(t);
        j["n_max"] = c.n_max;
        j["m_max"] = c.m_max;
    } else if (c.command == "ext") {
        BettiTable betti = full_betti(alg, c.v_max);
        j["v_max"] = c.v_max;
        json rows = json::array();
        const auto& verts = alg.presentation().quiver.vertices;
        for (const auto& [key, dim] : betti.ext) {
            auto [v, i, jj, u] = key;
            if (dim == 0) continue;
            json e;
            e["v"] = v;
            e["simple"] = verts[static_cast<size_t>(i)];
            e["target_simple"] = verts[static_cast<size_t>(jj)];
            e["shift"] = u;
            e["dim"] = dim;
            rows.push_back(std::move(e));
        }
        j["entries"] = std::move(rows);
    } else if (c.command == "koszul") {
        KoszulVerdict verdict = koszul_check(alg, c.v_max);
        j["v_max"] = verdict.v_max;
        j["consistent_with_koszul"] = verdict.consistent;
        if (!verdict.consistent) {
            json w;
            w["v"] = verdict.v;
            w["u"] = verdict.u;
            w["simple"] = verdict.i;
            w["target_simple"] = verdict.j;
            j["witness"] = std::move(w);
        }
    } else if (c.command == "wilson") {
        WilsonVerdict verdict = wilson_inverse_check(alg, std::min(c.order, c.v_max), c.v_max);
        j["order"] = verdict.order;
        j["v_max"] = c.v_max;
        j["match"] = verdict.match;
        if (!verdict.match) {
            json w;
            w["i"] = verdict.i;
            w["j"] = verdict.j;
            w["power"] = verdict.power;
            j["first_mismatch"] = std::move(w);
        }
        result.mismatch = !verdict.match;
    } else if (c.command == "gldim") {
        GlobalDimProbe probe = global_dimension_probe(alg, c.v_max);
        j["v_max"] = probe.v_max;
        j["determined"] = probe.determined;
        if (probe.determined)
            j["value"] = probe.value;
        else
            j["value"] = "not determined up to v_max";
    } else if (c.command == "han") {
        HanOptions opts;
        opts.series_order = c.order;
        opts.properness_order = c.properness_order;
        opts.properness_window = c.window;
        opts.v_max = c.v_max;
        j = han_payload(han_verdict(alg, opts));
    } else if (c.command == "verify") {
        bool ok = true;
        if (c.suite != "complexes" && c.suite != "igusa" && c.suite != "all")
            throw ValidationError("unknown verify suite '" + c.suite + "'");
        if (c.suite == "complexes" || c.suite == "all") {
            ChainModel model = concrete_model(alg, c, c.n_max + 1, c.m_max);
            AxiomReport axioms =
                verify_complex_axioms(alg, c.n_max, c.m_max, model, c.component_cap);
            json a;
            a["model"] = model == ChainModel::full ? "full" : "reduced";
            a["checks_run"] = axioms.checks_run;
            a["ok"] = axioms.ok;
            a["failures"] = axioms.failures;
            j["complexes"] = std::move(a);
            ok = ok && axioms.ok;
        }
        if (c.suite == "igusa" || c.suite == "all") {
            json g;
            IntPolynomial det = cartan_det(alg);
            EulerSeries chi_c = chi_from_cartan(det, c.m_max);
            DimTable rel = relative_hc_table(alg, c.m_max + 1, c.m_max, homology_options(c));
            EulerSeries chi_h = chi_from_homology(rel, c.m_max);
            bool chi_equal = chi_c == chi_h;
            g["chi_cartan"] = euler_json(chi_c);
            g["chi_homology"] = euler_json(chi_h);
            g["chi_equal"] = chi_equal;

            EulerSeries chi_full = chi_from_cartan(det, c.order);
            bool round_trip =
                logdet_from_chi(chi_full, c.order) == series_log(det, c.order);
            g["mobius_round_trip"] = round_trip;

            LogDerivativeData ld = log_derivative(det, c.order + 1);
            ArithmeticSequence a;
            for (int i = 0; i <= chi_full.order(); ++i)
                a[i] = Rational(chi_full.a[static_cast<size_t>(i)]);
            bool f_matches = true;
            for (int m = 1; m <= c.order; ++m)
                if (f_weighted(m, a) != Rational(ld.b[static_cast<size_t>(m - 1)])) {
                    f_matches = false;
                    break;
                }
            g["f_equals_shifted_b"] = f_matches;

            bool igusa_ok = chi_equal && round_trip && f_matches;
            g["ok"] = igusa_ok;
            j["igusa"] = std::move(g);
            ok = ok && igusa_ok;
        }
        j["ok"] = ok;
        result.mismatch = !ok;
    } else {
        throw ValidationError("unknown command '" + c.command + "'");
    }
    return result;
}

json config_echo(const RunConfig& c) {
    json j;
    j["input"] = c.input_path;
    j["n_max"] = c.n_max;
    j["m_max"] = c.m_max;
    j["order"] = c.order;
    j["v_max"] = c.v_max;
    j["window"] = c.window;
    j["properness_order"] = c.properness_order;
    j["method"] = c.method;
    j["suite"] = c.suite;
    j["model"] = c.model;
    j["component_cap"] = c.component_cap;
    j["jobs"] = c.jobs;
    return j;
}

void print_text(std::ostream& out, const json& report, double elapsed_ms) {
    out << report["command"].get<std::string>() << " on "
        << report["config"]["input"].get<std::string>() << "\n";
    out << report["result"].dump(2) << "\n";
    out << "elapsed_ms: " << static_cast<long>(elapsed_ms) << "\n";
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    try {
        Presentation pres = parse_presentation_file(config.input_path);
        GradedAlgebra alg = build_graded_algebra(pres);
        CommandResult result = dispatch(config, alg);
        json report;
        report["command"] = config.command;
        report["config"] = config_echo(config);
        report["result"] = std::move(result.payload);
        report["warnings"] = json::array();
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        if (config.format == "json" || config.format == "structured")
            out << report.dump(2) << "\n";
        else
            print_text(out, report, ms);
        return result.mismatch ? kExitMismatch : kExitOk;
    } catch (const CapError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::logic_error& e) {
        err << "internal cross-check failure: " << e.what() << "\n";
        return kExitMismatch;
    }
}

}  // namespace quiverhom
