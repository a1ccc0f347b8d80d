#pragma once

#include <json.hpp>

#include <string>

namespace sgc {

using Json = nlohmann::ordered_json;

enum class ExitCode { ok = 0, no = 1, usage = 2, exhausted = 3 };

// A run report is a JSON object with, in order: "command" (argument echo),
// "status", "exit_code", "results", and optionally "witness",
// "certification", "counterexamples", "nodes", "time_ms".  The text form is
// rendered from the same object.
auto render_text(const Json & report) -> std::string;

}
