#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "quiverhom/cli.hpp"

using namespace quiverhom;

namespace {

std::string corpus(const std::string& name) {
    return std::string(QUIVERHOM_CORPUS_DIR) + "/" + name + ".json";
}

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(RunConfig cfg) {
    std::ostringstream out, err;
    int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("det on the det-one monomial algebra") {
    RunConfig cfg;
    cfg.command = "det";
    cfg.input_path = corpus("monomial_3vertex");
    cfg.format = "json";
    Outcome r = invoke(cfg);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("\"text\": \"1\"") != std::string::npos);
    CHECK(r.out.find("\"is_one\": true") != std::string::npos);
}

TEST_CASE("chi with both methods agrees and exits zero") {
    RunConfig cfg;
    cfg.command = "chi";
    cfg.input_path = corpus("kx2");
    cfg.method = "both";
    cfg.m_max = 5;
    cfg.format = "json";
    Outcome r = invoke(cfg);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("\"equal\": true") != std::string::npos);
}

TEST_CASE("han certifies the quantum exterior algebra") {
    RunConfig cfg;
    cfg.command = "han";
    cfg.input_path = corpus("quantum_exterior_q2");
    cfg.format = "json";
    Outcome r = invoke(cfg);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("\"certified_infinite_hhdim\": true") != std::string::npos);
    CHECK(r.out.find("1 + 2x + x^2") != std::string::npos);
}

TEST_CASE("structured output is byte-identical across runs") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.suite = "igusa";
    cfg.input_path = corpus("quantum_exterior_q2");
    cfg.m_max = 3;
    cfg.order = 20;
    cfg.format = "json";
    Outcome first = invoke(cfg);
    Outcome second = invoke(cfg);
    CHECK(first.code == kExitOk);
    CHECK(first.out == second.out);
    bool no_decimal_points = first.out.find("0.") == std::string::npos;
    CHECK(no_decimal_points);  // no floating point anywhere in the report
}

TEST_CASE("exit codes") {
    RunConfig missing;
    missing.command = "det";
    missing.input_path = corpus("no_such_algebra");
    CHECK(invoke(missing).code == kExitValidation);

    RunConfig badmodel;
    badmodel.command = "hc";
    badmodel.input_path = corpus("kx2");
    badmodel.model = "fancy";
    CHECK(invoke(badmodel).code == kExitValidation);

    RunConfig badcommand;
    badcommand.command = "frobnicate";
    badcommand.input_path = corpus("kx2");
    CHECK(invoke(badcommand).code == kExitValidation);

    RunConfig capped;
    capped.command = "hc";
    capped.input_path = corpus("monomial_3vertex");
    capped.model = "full";
    capped.component_cap = 50;
    capped.n_max = 4;
    capped.m_max = 2;
    CHECK(invoke(capped).code == kExitCap);

    RunConfig overcap;
    overcap.command = "hh";
    overcap.input_path = corpus("kx2");
    overcap.n_max = 30;  // above the default n-cap of 10
    CHECK(invoke(overcap).code == kExitCap);
}

TEST_CASE("verify all on the dual numbers") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.suite = "all";
    cfg.input_path = corpus("kx2");
    cfg.n_max = 3;
    cfg.m_max = 3;
    cfg.order = 20;
    cfg.format = "json";
    Outcome r = invoke(cfg);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("\"ok\": true") != std::string::npos);
    CHECK(r.out.find("\"failures\": []") != std::string::npos);
}

TEST_CASE("tables and resolutions through the CLI surface") {
    RunConfig hh;
    hh.command = "hh";
    hh.input_path = corpus("kx2");
    hh.n_max = 3;
    hh.m_max = 3;
    hh.format = "json";
    CHECK(invoke(hh).code == kExitOk);

    RunConfig ext;
    ext.command = "ext";
    ext.input_path = corpus("kx3");
    ext.v_max = 4;
    ext.format = "json";
    Outcome r = invoke(ext);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("\"shift\": 3") != std::string::npos);  // the u=3 witness entry

    RunConfig wilson;
    wilson.command = "wilson";
    wilson.input_path = corpus("hereditary_a2");
    CHECK(invoke(wilson).code == kExitOk);

    RunConfig gldim;
    gldim.command = "gldim";
    gldim.input_path = corpus("hereditary_a2");
    gldim.format = "json";
    Outcome g = invoke(gldim);
    CHECK(g.code == kExitOk);
    CHECK(g.out.find("\"value\": 1") != std::string::npos);
}

TEST_CASE("text format reports timing, json does not") {
    RunConfig cfg;
    cfg.command = "det";
    cfg.input_path = corpus("kx2");
    cfg.format = "text";
    Outcome text = invoke(cfg);
    CHECK(text.out.find("elapsed_ms") != std::string::npos);

    cfg.format = "json";
    Outcome json = invoke(cfg);
    CHECK(json.out.find("elapsed_ms") == std::string::npos);
}
