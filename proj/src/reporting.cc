#include "wsn/reporting.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace wsn {

StabilityMetrics
ComputeStabilityMetrics (std::span<const RoundRecord> series, std::uint32_t n)
{
  StabilityMetrics metrics;
  const std::uint32_t half = (n + 1) / 2;
  for (const RoundRecord &rec : series)
    {
      if (!metrics.firstDeath && rec.deadTotal >= 1)
        {
          metrics.firstDeath = rec.round;
        }
      if (!metrics.halfDeath && rec.deadTotal >= half)
        {
          metrics.halfDeath = rec.round;
        }
      if (!metrics.lastDeath && rec.deadTotal >= n)
        {
          metrics.lastDeath = rec.round;
        }
    }
  return metrics;
}

std::string
FormatFloat (double value)
{
  char buf[32];
  std::snprintf (buf, sizeof buf, "%.9g", value);
  return buf;
}

void
WriteRoundCsv (const SimulationSummary &summary, std::ostream &out)
{
  out << kRoundCsvHeader << '\n';
  for (const RoundRecord &r : summary.series)
    {
      out << r.round << ',' << r.alive << ',' << r.deadTotal << ',' << r.deadNormal << ','
          << r.deadAdvanced << ',' << r.headCount << ',' << FormatFloat (r.residualEnergyTotal)
          << ',' << FormatFloat (r.pUsed) << ',' << FormatFloat (r.kappaUsed) << '\n';
    }
}

namespace {

nlohmann::ordered_json
OptionalRound (const std::optional<std::uint32_t> &round)
{
  return round ? nlohmann::ordered_json (*round) : nlohmann::ordered_json (nullptr);
}

} // namespace

void
WriteSummaryJson (std::span<const SimulationSummary> summaries, std::ostream &out)
{
  auto doc = nlohmann::ordered_json::array ();
  for (const SimulationSummary &s : summaries)
    {
      nlohmann::ordered_json entry;
      entry["algorithm"] = s.algorithm;
      entry["seed"] = s.seed;
      entry["first_death_round"] = OptionalRound (s.firstDeathRound);
      entry["half_death_round"] = OptionalRound (s.halfDeathRound);
      entry["last_death_round"] = OptionalRound (s.lastDeathRound);
      entry["rounds_executed"] = s.roundsExecuted;
      entry["metadata"] = {{"rng_algorithm", s.metadata.rngAlgorithm},
                           {"config_hash", s.metadata.configHash}};
      doc.push_back (std::move (entry));
    }
  out << doc.dump (2) << '\n';
}

namespace {

template <typename Writer>
void
WriteFile (const std::filesystem::path &path, Writer &&write)
{
  std::ofstream out (path, std::ios::binary | std::ios::trunc);
  if (!out)
    {
      throw IoError ("cannot open " + path.string () + " for writing");
    }
  write (out);
  out.flush ();
  if (!out)
    {
      throw IoError ("write failed for " + path.string ());
    }
}

} // namespace

void
WriteRoundCsv (const SimulationSummary &summary, const std::filesystem::path &path)
{
  WriteFile (path, [&] (std::ostream &out) { WriteRoundCsv (summary, out); });
}

void
WriteSummaryJson (std::span<const SimulationSummary> summaries, const std::filesystem::path &path)
{
  WriteFile (path, [&] (std::ostream &out) { WriteSummaryJson (summaries, out); });
}

std::vector<RoundRecord>
ReadRoundCsv (std::istream &in)
{
  std::string line;
  if (!std::getline (in, line) || line != kRoundCsvHeader)
    {
      throw std::runtime_error ("round csv: missing or unexpected header");
    }
  std::vector<RoundRecord> series;
  std::size_t lineNo = 1;
  while (std::getline (in, line))
    {
      ++lineNo;
      if (line.empty ())
        {
          continue;
        }
      std::istringstream row (line);
      std::vector<std::string> cells;
      std::string cell;
      while (std::getline (row, cell, ','))
        {
          cells.push_back (cell);
        }
      if (cells.size () != 9)
        {
          throw std::runtime_error ("round csv: line " + std::to_string (lineNo)
                                    + " has wrong column count");
        }
      auto u = [] (const std::string &s) {
        return static_cast<std::uint32_t> (std::stoul (s));
      };
      RoundRecord r;
      r.round = u (cells[0]);
      r.alive = u (cells[1]);
      r.deadTotal = u (cells[2]);
      r.deadNormal = u (cells[3]);
      r.deadAdvanced = u (cells[4]);
      r.headCount = u (cells[5]);
      r.residualEnergyTotal = std::strtod (cells[6].c_str (), nullptr);
      r.pUsed = std::strtod (cells[7].c_str (), nullptr);
      r.kappaUsed = std::strtod (cells[8].c_str (), nullptr);
      series.push_back (r);
    }
  return series;
}

} // namespace wsn
