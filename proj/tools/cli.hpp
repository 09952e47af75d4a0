#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace galetx::cli {

// Exit statuses.
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kIndeterminate = 2;
inline constexpr int kUsage = 64;

// Runs one command line (args excludes the program name). Reports go to `out`,
// usage errors and text-mode error messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Text form of a report: "key: value" lines, nested objects indented, arrays
// of arrays one row per line. Every line starts with `prefix`.
void render_text(const nlohmann::ordered_json& facts, std::ostream& os, const std::string& prefix);

}  // namespace galetx::cli
