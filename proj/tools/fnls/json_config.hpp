#pragma once

#include <istream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace fnls::cli {

// CLI11 config formatter for JSON files. Top-level keys set options of the
// main app; a nested object named after a subcommand sets that subcommand's
// options, e.g. {"seed": 3, "energy": {"alpha": 2, "N-list": [8, 16]}}.
// Command-line flags always win over file values.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool write_description,
                        std::string prefix) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

}  // namespace fnls::cli
