#pragma once

#include <string>
#include <vector>

#include "json.hpp"

/// JSON front end shared by the C API and the command-line tool. Every
/// command validates its request before computing; indices are 1-based and
/// rationals travel as integers or "p/q" strings.
namespace toricdeg::commands {

using json = nlohmann::json;

const std::vector<std::string>& command_names();

/// Throws SchemaError (with a JSON pointer) for malformed requests and
/// PreconditionError for mathematical precondition failures.
json run(const std::string& command, const json& request);

/// Semigroup depth cap: TORICDEG_MAX_LEVEL, default 6.
int max_level_cap();

}  // namespace toricdeg::commands
