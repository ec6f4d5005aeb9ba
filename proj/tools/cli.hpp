#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

// Command-line front end.  Every result is produced by the library; the
// shell here only parses flags, forwards them, and serializes reports.
//
// Exit codes: 0 success (all checks pass), 1 theorem-check failure,
// 2 usage error, 3 budget exceeded.

namespace parkinv::cli {

enum class Command { park, enumerate, count, characteristic, wset, verify };
enum class Format { json, csv, table };

struct RunConfig {
    Command command = Command::park;
    std::vector<int> lengths;
    std::vector<int> prefs;       // park only
    std::string theorem;          // verify with a single theorem
    bool all_theorems = false;    // verify the whole registry
    int max_n = 0;                // sweep bounds (0 = not a sweep)
    int max_entry = 0;
    Format format = Format::table;
    std::uint64_t budget = 10'000'000;
    int workers = 0;              // 0 = hardware concurrency
    bool unpruned = false;        // exhaustive search, for oracle testing
};

// Parses argv into a RunConfig.  Throws usage_error on bad input; sets
// `help_requested` and returns a default config when --help was asked for
// (help text already written to `out`).
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RunConfig parse_command_line(int argc, const char* const* argv, std::ostream& out,
                             bool& help_requested);

// Dispatches to the library and writes the serialized report.  Returns the
// process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace parkinv::cli
