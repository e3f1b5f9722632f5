#pragma once
#include <string>
#include <vector>

#include "json.hpp"

namespace dpgit {

constexpr int kSchemaVersion = 1;

struct CommandOutcome {
  nlohmann::json report;
  int exit_code = 0;  // 0 ok, 1 parse error, 2 mathematical error
};

const std::vector<std::string>& command_names();
bool command_reads_file(const std::string& command);

// File commands take the document text; the others take their positional arguments.
CommandOutcome run_command(const std::string& command, const std::vector<std::string>& args, const std::string& text);

// Unreadable input file; reported like a parse failure (exit code 1).
CommandOutcome io_error(const std::string& command, const std::string& message);

std::string render(const nlohmann::json& j, bool pretty);

}  // namespace dpgit
