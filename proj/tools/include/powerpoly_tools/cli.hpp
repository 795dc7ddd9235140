#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace powerpoly::cli {

enum ExitCode : int { kOk = 0, kError = 1, kNegativeVerdict = 2, kStepLimit = 3 };

struct RunConfig {
    std::string command;
    std::string hypothesis_path;
    std::string test_path;
    std::string output_path;
    std::string polytope_output_path;
    std::vector<std::string> generators;
    std::string f;
    std::string beta;
    std::string variables;  // comma separated; inferred from p<i> names when empty
    std::size_t k = 0;
    std::string order = "grevlex";
    std::string alpha;  // exact rational text
    unsigned n = 0;
    std::string mode = "search";
    bool enumerate = true;
    std::uint64_t seed = 1;
    std::uint64_t step_limit = 0;  // 0: unbounded
    std::size_t resolution = 101;
    std::string grid_max = "1/2";
    std::string weights;
    bool assert_regular = false;
    unsigned maxstat_n = 0;
    std::string maxstat_c;
    std::string maxstat_t = "1/4";
    std::string points;
    std::uint64_t reps = 100000;
};

// Parses argv into a config. Returns nullopt and writes help or diagnostics to the streams
// when the program should exit; exit_code is set accordingly.
std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                         int& exit_code);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace powerpoly::cli
