#pragma once

#include <string>

namespace halfline {

// Parses and executes one scenario given as JSON text. Results go to the
// "out" path (written atomically) or to stdout when "out" is absent.
// Throws std::domain_error for config/validation errors, IoError for file
// problems, and NumericError for numerical failures, including a
// verification command whose check came out negative (its report is still
// written first).
void run_scenario_json(const std::string& json_text);

// Same, reading the scenario from a file ("-" reads stdin).
void run_scenario_file(const std::string& path);

}  // namespace halfline
