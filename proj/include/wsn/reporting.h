#ifndef WSN_REPORTING_H
#define WSN_REPORTING_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsn/simulator.h"

namespace wsn {

class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct StabilityMetrics
{
  std::optional<std::uint32_t> firstDeath;
  std::optional<std::uint32_t> halfDeath;
  std::optional<std::uint32_t> lastDeath;
};

/// Earliest rounds at which 1, ceil(n/2) and n nodes are dead.
StabilityMetrics ComputeStabilityMetrics (std::span<const RoundRecord> series, std::uint32_t n);

inline constexpr const char *kRoundCsvHeader =
    "round,alive,dead_total,dead_normal,dead_advanced,head_count,residual_energy_j,p_used,"
    "kappa_used";

/// %.9g, the CSV float format.
std::string FormatFloat (double value);

void WriteRoundCsv (const SimulationSummary &summary, std::ostream &out);
void WriteSummaryJson (std::span<const SimulationSummary> summaries, std::ostream &out);

// File variants; throw IoError naming the path.
void WriteRoundCsv (const SimulationSummary &summary, const std::filesystem::path &path);
void WriteSummaryJson (std::span<const SimulationSummary> summaries,
                       const std::filesystem::path &path);

/// Parses a CSV produced by WriteRoundCsv. Throws std::runtime_error on malformed input.
std::vector<RoundRecord> ReadRoundCsv (std::istream &in);

} // namespace wsn

#endif /* WSN_REPORTING_H */
