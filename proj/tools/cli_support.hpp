#pragma once

#include <string>
#include <vector>

#include "clustersim/clustersim.h"

namespace cluster_cli {

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitIo = 4;

enum class Mode { Verify, Sweep };
enum class OutputFormat { Csv, Json };

struct RunConfig {
    Mode mode = Mode::Verify;
    int n_sites = 0;
    // Sweep grids; unspecified axes default to the single noiseless point.
    std::vector<double> p_erase = {0.0};
    std::vector<double> p_dephase = {0.0};
    std::vector<double> p_cnot = {1.0};
    cs_policy policy = CS_POLICY_RETRY_GATE;
    long long trials = 10000;
    unsigned long long seed = 42;
    std::string out_path; // empty: stdout
    OutputFormat format = OutputFormat::Csv;
    std::string svg_path; // empty: no plot
};

struct ConfigError {
    std::string message;
};

struct IoError {
    std::string message;
};

// Parses flags (and an optional flat key=value config file; flags win).
// Throws ConfigError on unknown flags, out-of-range values or n < 2.
RunConfig parse_config(int argc, const char *const *argv);

// Number with 12 significant digits (the serialization contract).
std::string format_number(double value);

int run_verify(const RunConfig &config);
int run_sweep(const RunConfig &config);

// Parse + dispatch; maps errors to the exit-code contract.
int run_main(int argc, const char *const *argv);

} // namespace cluster_cli
