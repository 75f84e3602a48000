#pragma once

#include <iosfwd>
#include <string>

namespace quiverhom {

/// One CLI invocation. Defaults follow the documented bounds; every command
/// reads one presentation file and writes one report to stdout.
struct RunConfig {
    std::string command;
    std::string input_path;
    int n_max = 4;
    int m_max = 4;
    int order = 50;   // truncation order N for series commands
    int v_max = 6;
    int window = 10;
    int properness_order = 60;
    std::string method = "both";  // chi: cartan | homology | both
    std::string suite = "all";    // verify: complexes | igusa | all
    std::string model = "auto";   // chain model: full | reduced | auto
    std::string format = "text";  // text | json
    long component_cap = 200000;
    long full_model_threshold = 50000;
    int n_cap = 10;
    int m_cap = 8;
    int jobs = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitMismatch = 4;

/// Dispatches one command; returns the process exit status. The structured
/// (json) report is deterministic: identical config and input give a
/// byte-identical document. Timing is only shown in text mode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace quiverhom
