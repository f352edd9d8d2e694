#pragma once

// Sectioned key-value scenario files. The dialect is deliberately small:
//
//   # comment (also allowed after a value)
//   [plant]            <- section header; [scenario.pulse] nests one level
//   m = 0.588          <- key = value
//
// Unknown sections or keys are hard errors, as are violated invariants.
// Unspecified keys keep the built-in defaults (the reference hardware
// constants and stock gain set). render_config writes a fully-resolved file that
// parses back to the identical configuration.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ambsim/scenario.hpp"

namespace ambsim {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Parse a complete config document into a resolved, validated config.
ScenarioConfig parse_config(const std::string& text);

/// parse_config plus a list of `section.key=value` overrides applied after
/// the document and before resolution.
ScenarioConfig parse_config(const std::string& text,
                            const std::vector<std::string>& overrides);

/// Read and parse a file; file-system problems surface as ConfigError at 0:0.
ScenarioConfig parse_config_file(const std::string& path,
                                 const std::vector<std::string>& overrides = {});

/// Apply one `section.key = value` assignment to an (unresolved) config.
/// line/column feed the error messages of callers that track positions.
void assign_config_key(ScenarioConfig& cfg, const std::string& section,
                       const std::string& key, const std::string& value,
                       int line = 0, int column = 0);

/// Fully-resolved, parseable rendering of a config (all defaults
/// materialized). Suitable for reproducing the run bit-exactly.
std::string render_config(const ScenarioConfig& cfg);

}  // namespace ambsim
