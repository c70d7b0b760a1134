#pragma once

#include <string>

#include <json.hpp>

namespace weylfold {

inline constexpr const char* kVersion = "0.1.0";

std::string fnv1a64_hex(const std::string& s);

// Parses the request, dispatches to the named command (fold, namikawa, fan,
// kleinian, hecke, selftest) and wraps the result in the report envelope.
// Throws invalid_input / budget_exceeded / consistency_error.
nlohmann::json run_command(const std::string& command, const std::string& request_text,
                           unsigned long long budget);

}  // namespace weylfold
