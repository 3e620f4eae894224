#ifndef WSN_CONFIG_H
#define WSN_CONFIG_H

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wsn/core-model.h"

namespace wsn {

class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

struct RunConfig
{
  FieldConfig field;
  RadioParams radio;
  std::vector<std::string> algorithms{"leach"};
  std::vector<std::uint64_t> seeds{1};
  std::filesystem::path outputDir{"results"};
  std::vector<OutputFormat> formats{OutputFormat::Csv, OutputFormat::Json};

  bool Wants (OutputFormat f) const;

  /// Checks ranges and registry membership. Throws ConfigError.
  void Validate () const;
};

/**
 * Reads an INI-style run file:
 *
 *   # comment
 *   [field]
 *   p = 0.1
 *   [run]
 *   algorithms = leach, sep-kep
 *
 * Section headers are optional. Keys are unique across sections; a key
 * under the wrong section is rejected. Unset keys keep their defaults.
 */
RunConfig ParseConfigText (std::string_view text, std::string_view source = "<config>");
RunConfig ParseConfig (const std::filesystem::path &file);

/// Accepted keys, for diagnostics and documentation.
const std::vector<std::string> &ConfigKeys ();

OutputFormat ParseFormat (std::string_view text);

} // namespace wsn

#endif /* WSN_CONFIG_H */
