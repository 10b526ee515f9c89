#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gallai {

/// Everything that determines a command-line run.
struct RunSpec {
    std::string subcommand;    // construct, verify, count, certify, search, pipeline
    std::string construction;  // construct / certify --construct
    std::string input;         // colouring or hypergraph file
    std::string task;          // search task
    std::optional<int> k, n, d, r, v, special;
    std::vector<int> sizes;
    int times = 1;
    std::uint64_t seed = 0;
    std::vector<std::string> notions;
    int threshold = 3;
    std::optional<int> max_colours;
    std::uint64_t sample = 0;
    std::string output;  // certificate (or the colouring for construct); "-" for stdout
    std::string save;    // colouring file written by certify/pipeline
    std::uint64_t budget = 0;
    int seeds = 10;
    int workers = 1;
    bool unreduced = false;
    bool unchecked = false;
};

/// Raised for unusable command lines and parameters (exit status 2).
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses argv-style arguments (without the program name). Throws SpecError.
/// Returns std::nullopt after printing help to `out`.
std::optional<RunSpec> parse_run_spec(const std::vector<std::string>& args, std::ostream& out);

/// Executes a spec, writing files and the certificate. Returns the exit status:
/// 0 pass, 1 fail, 2 invalid spec, 3 budget exhausted.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// parse_run_spec + run with error reporting.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gallai
