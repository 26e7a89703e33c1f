#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qgw::cli {

// Everything that determines a run. `out` and `threads` do not affect the content of the output.
struct RunConfig {
    std::string command;               // solve | verify | table
    int genus = 2;                     // solve: highest genus
    int genus_max = 2;                 // table, verify
    int order = 0;                     // 0: smallest order that supports the requested checks
    int margin = 10;                   // extra q-coefficients verified by every fit
    std::string gauge = "special";     // special | zero | c1a=..;c1b=..;c2=..;c3=..
    std::string initial_data;          // optional file of N_{g,d}
    std::string format = "json";       // json | csv
    std::string out;                   // empty: stdout
    std::string suite = "all";         // mirror | oracle | hae | gauge | all
    int threads = 1;
};

// Flat key=value file; '#' starts a comment, keys are the long flag names without dashes.
std::map<std::string, std::string> read_config_file(const std::string& path);

// Parses "qgw COMMAND [--config FILE] [flags]"; flags override the config file. Throws
// std::invalid_argument on malformed input.
RunConfig parse_arguments(const std::vector<std::string>& args);

// Exit codes: 0 ok, 1 verification failure, 2 input or solve error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full entry point (argument parsing, output file handling, error mapping).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qgw::cli
