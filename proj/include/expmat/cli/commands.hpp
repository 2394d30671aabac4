#ifndef EXPMAT_CLI_COMMANDS_HPP
#define EXPMAT_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "expmat/cli/json_io.hpp"

namespace expmat::cli {

enum ExitCode : int { kTrue = 0, kFalse = 1, kMalformed = 2, kBudget = 3 };

const std::vector<std::string>& command_names();

struct JobSpec {
    std::string command;
    /// From --field; the payload's "field" member takes the same role.
    std::optional<std::string> field;
    Json payload = Json::object();
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> q;
    // enumerate
    std::optional<std::size_t> n;
    std::optional<std::uint64_t> p;
    std::optional<std::size_t> r;
};

struct Report {
    int exit_code = kTrue;
    Json body = Json::object();
};

/// Never throws for bad input; errors become exit codes plus an "error" member.
Report run(const JobSpec& job);

std::string render_json(const Report& report);
std::string render_table(const Report& report);

/// Whole program: argument parsing, input reading, dispatch, output.
int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace expmat::cli

#endif  // EXPMAT_CLI_COMMANDS_HPP
