#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quiverhom/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "quiverhom: graded Cartan determinants, Hochschild/cyclic homology tables and "
        "non-vanishing certificates for finite-dimensional graded quiver algebras"};
    app.require_subcommand(1);

    quiverhom::RunConfig cfg;
    if (const char* jobs_env = std::getenv("QUIVERHOM_JOBS")) {
        int j = std::atoi(jobs_env);
        if (j > 0) cfg.jobs = j;  // --jobs still wins when given
    }

    struct Command {
        const char* name;
        const char* help;
    };
    const std::vector<Command> commands = {
        {"basis", "print the graded basis of the algebra"},
        {"cartan", "graded Cartan matrix C(x)"},
        {"det", "graded Cartan determinant det C(x)"},
        {"logderiv", "integer coefficients of D_x log det C(x) and their recurrence"},
        {"inverse", "series inverse of C(x) to the given order"},
        {"chi", "Euler characteristic of relative cyclic homology (two routes)"},
        {"hh", "Hochschild homology dimension table"},
        {"hc", "cyclic homology dimension table"},
        {"relhc", "relative cyclic homology dimension table"},
        {"ext", "graded Ext table from minimal resolutions of the simples"},
        {"koszul", "bounded Koszul consistency check"},
        {"wilson", "compare the Ext alternating sums with the inverse Cartan matrix"},
        {"gldim", "bounded global dimension probe"},
        {"han", "non-vanishing verdict for Hochschild homology in high degrees"},
        {"verify", "built-in verification suites (complexes | igusa | all)"},
    };

    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("input", cfg.input_path, "presentation file (JSON)")->required();
        sub->add_option("--n-max", cfg.n_max, "top homological degree for tables");
        sub->add_option("--m-max", cfg.m_max, "top internal degree for tables");
        sub->add_option("--order", cfg.order, "series truncation order N");
        sub->add_option("--v-max", cfg.v_max, "resolution length bound");
        sub->add_option("--window", cfg.window, "properness search window");
        sub->add_option("--properness-order", cfg.properness_order,
                        "series order for properness evidence");
        sub->add_option("--method", cfg.method, "chi route: cartan | homology | both");
        sub->add_option("--suite", cfg.suite, "verify suite: complexes | igusa | all");
        sub->add_option("--model", cfg.model, "chain model: full | reduced | auto");
        sub->add_option("--format", cfg.format, "output format: text | json");
        sub->add_option("--cap", cfg.component_cap, "chain module dimension cap");
        sub->add_option("--full-threshold", cfg.full_model_threshold,
                        "auto model: largest full-model size before switching to reduced");
        sub->add_option("--n-cap", cfg.n_cap, "hard cap on n-max");
        sub->add_option("--m-cap", cfg.m_cap, "hard cap on m-max");
        sub->add_option("--jobs", cfg.jobs, "parallel workers for per-degree jobs");
        sub->callback([&cfg, name = std::string(c.name)]() { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? quiverhom::kExitOk : quiverhom::kExitUsage;
    }
    return quiverhom::run(cfg, std::cout, std::cerr);
}
