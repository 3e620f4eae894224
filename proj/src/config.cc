#include "wsn/config.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "wsn/simulator.h"

namespace wsn {

namespace {

struct Location
{
  std::string_view source;
  std::size_t line;
  std::string key;
};

[[noreturn]] void
Fail (const Location &at, const std::string &message)
{
  std::ostringstream os;
  os << at.source << ':' << at.line << ": key '" << at.key << "': " << message;
  throw ConfigError (os.str ());
}

std::string
Trim (std::string_view s)
{
  const auto first = s.find_first_not_of (" \t\r");
  if (first == std::string_view::npos)
    {
      return {};
    }
  const auto last = s.find_last_not_of (" \t\r");
  return std::string (s.substr (first, last - first + 1));
}

std::vector<std::string>
SplitList (const std::string &value)
{
  std::vector<std::string> items;
  std::istringstream in (value);
  std::string item;
  while (std::getline (in, item, ','))
    {
      item = Trim (item);
      if (!item.empty ())
        {
          items.push_back (item);
        }
    }
  return items;
}

double
ToDouble (const std::string &value, const Location &at)
{
  char *end = nullptr;
  errno = 0;
  const double v = std::strtod (value.c_str (), &end);
  if (value.empty () || *end != '\0' || errno == ERANGE || !std::isfinite (v))
    {
      Fail (at, "cannot parse '" + value + "' as a number");
    }
  return v;
}

std::uint64_t
ToUnsigned (const std::string &value, const Location &at, std::uint64_t max)
{
  char *end = nullptr;
  errno = 0;
  if (value.empty () || value[0] == '-')
    {
      Fail (at, "cannot parse '" + value + "' as a non-negative integer");
    }
  const unsigned long long v = std::strtoull (value.c_str (), &end, 10);
  if (*end != '\0' || errno == ERANGE || v > max)
    {
      Fail (at, "cannot parse '" + value + "' as a non-negative integer");
    }
  return v;
}

using Setter = std::function<void (RunConfig &, const std::string &, const Location &)>;

struct KeySpec
{
  std::string section;
  Setter set;
};

const std::map<std::string, KeySpec> &
KeyTable ()
{
  enum class Range { Positive, NonNegative, Probability, OpenFraction };
  auto real = [] (auto member, Range range = Range::Positive) {
    return [member, range] (RunConfig &c, const std::string &v, const Location &at) {
      const double x = ToDouble (v, at);
      switch (range)
        {
        case Range::Positive:
          if (x <= 0.0)
            Fail (at, "value " + v + " must be positive");
          break;
        case Range::NonNegative:
          if (x < 0.0)
            Fail (at, "value " + v + " must be >= 0");
          break;
        case Range::Probability:
          if (!(x > 0.0 && x <= 1.0))
            Fail (at, "probability " + v + " out of range (0, 1]");
          break;
        case Range::OpenFraction:
          if (!(x > 0.0 && x < 1.0))
            Fail (at, "fraction " + v + " out of range (0, 1)");
          break;
        }
      std::invoke (member, c) = x;
    };
  };
  auto count = [] (auto member) {
    return [member] (RunConfig &c, const std::string &v, const Location &at) {
      std::invoke (member, c) = static_cast<std::uint32_t> (ToUnsigned (v, at, UINT32_MAX));
    };
  };

  static const std::map<std::string, KeySpec> table = {
      {"side", {"field", real ([] (RunConfig &c) -> double & { return c.field.sideM; })}},
      {"nodes", {"field", count ([] (RunConfig &c) -> std::uint32_t & { return c.field.nodeCount; })}},
      {"bs_x", {"field", real ([] (RunConfig &c) -> double & { return c.field.bsPosition.x; }, Range::NonNegative)}},
      {"bs_y", {"field", real ([] (RunConfig &c) -> double & { return c.field.bsPosition.y; }, Range::NonNegative)}},
      {"p", {"field", real ([] (RunConfig &c) -> double & { return c.field.baseProbability; }, Range::Probability)}},
      {"m", {"field", real ([] (RunConfig &c) -> double & { return c.field.advancedFraction; }, Range::OpenFraction)}},
      {"a", {"field", real ([] (RunConfig &c) -> double & { return c.field.advancedEnergyFactor; }, Range::NonNegative)}},
      {"e0", {"field", real ([] (RunConfig &c) -> double & { return c.field.initialEnergy; })}},
      {"max_rounds",
       {"field", count ([] (RunConfig &c) -> std::uint32_t & { return c.field.maxRounds; })}},
      {"e_elec", {"radio", real ([] (RunConfig &c) -> double & { return c.radio.elecEnergyPerBit; })}},
      {"e_fs", {"radio", real ([] (RunConfig &c) -> double & { return c.radio.fsAmp; })}},
      {"e_mp", {"radio", real ([] (RunConfig &c) -> double & { return c.radio.mpAmp; })}},
      {"e_da",
       {"radio", real ([] (RunConfig &c) -> double & { return c.radio.aggregationEnergyPerBit; })}},
      {"packet_bits",
       {"radio", count ([] (RunConfig &c) -> std::uint32_t & { return c.radio.packetBits; })}},
      {"algorithms",
       {"run",
        [] (RunConfig &c, const std::string &v, const Location &at) {
          c.algorithms = SplitList (v);
          for (const auto &name : c.algorithms)
            {
              if (!ResolveAlgorithm (name, c.field))
                {
                  Fail (at, "unknown algorithm '" + name + "'");
                }
            }
          if (c.algorithms.empty ())
            {
              Fail (at, "algorithm list is empty");
            }
        }}},
      {"seeds",
       {"run",
        [] (RunConfig &c, const std::string &v, const Location &at) {
          c.seeds.clear ();
          for (const auto &s : SplitList (v))
            {
              c.seeds.push_back (ToUnsigned (s, at, UINT64_MAX));
            }
          if (c.seeds.empty ())
            {
              Fail (at, "seed list is empty");
            }
        }}},
      {"output_dir",
       {"run", [] (RunConfig &c, const std::string &v, const Location &) { c.outputDir = v; }}},
      {"formats",
       {"run",
        [] (RunConfig &c, const std::string &v, const Location &at) {
          c.formats.clear ();
          for (const auto &f : SplitList (v))
            {
              try
                {
                  c.formats.push_back (ParseFormat (f));
                }
              catch (const ConfigError &e)
                {
                  Fail (at, e.what ());
                }
            }
        }}},
  };
  return table;
}

} // namespace

bool
RunConfig::Wants (OutputFormat f) const
{
  return std::find (formats.begin (), formats.end (), f) != formats.end ();
}

void
RunConfig::Validate () const
{
  try
    {
      field.Validate ();
      radio.Validate ();
    }
  catch (const std::invalid_argument &e)
    {
      throw ConfigError (e.what ());
    }
  if (algorithms.empty ())
    {
      throw ConfigError ("no algorithms selected");
    }
  for (const auto &name : algorithms)
    {
      if (!ResolveAlgorithm (name, field))
        {
          throw ConfigError ("unknown algorithm '" + name + "'");
        }
    }
  if (seeds.empty ())
    {
      throw ConfigError ("no seeds selected");
    }
}

OutputFormat
ParseFormat (std::string_view text)
{
  if (text == "csv")
    {
      return OutputFormat::Csv;
    }
  if (text == "json")
    {
      return OutputFormat::Json;
    }
  throw ConfigError ("unknown format '" + std::string (text) + "' (expected csv or json)");
}

const std::vector<std::string> &
ConfigKeys ()
{
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto &[name, spec] : KeyTable ())
      {
        k.push_back (spec.section + "." + name);
      }
    return k;
  }();
  return keys;
}

RunConfig
ParseConfigText (std::string_view text, std::string_view source)
{
  RunConfig config;
  std::string section;
  std::istringstream in{std::string (text)};
  std::string raw;
  std::size_t lineNo = 0;
  while (std::getline (in, raw))
    {
      ++lineNo;
      std::string line = Trim (raw);
      if (line.empty () || line[0] == '#' || line[0] == ';')
        {
          continue;
        }
      if (line.front () == '[')
        {
          if (line.back () != ']')
            {
              Fail ({source, lineNo, line}, "malformed section header");
            }
          section = Trim (std::string_view (line).substr (1, line.size () - 2));
          if (section != "field" && section != "radio" && section != "run")
            {
              Fail ({source, lineNo, section}, "unknown section");
            }
          continue;
        }
      const auto eq = line.find ('=');
      if (eq == std::string::npos)
        {
          Fail ({source, lineNo, line}, "expected 'key = value'");
        }
      const std::string key = Trim (std::string_view (line).substr (0, eq));
      const std::string value = Trim (std::string_view (line).substr (eq + 1));
      const Location at{source, lineNo, key};
      const auto it = KeyTable ().find (key);
      if (it == KeyTable ().end ())
        {
          Fail (at, "unknown key");
        }
      if (!section.empty () && it->second.section != section)
        {
          Fail (at, "belongs in section [" + it->second.section + "], not [" + section + "]");
        }
      it->second.set (config, value, at);
    }

  // cross-key checks (BS inside the field, registry names against p) run last
  try
    {
      config.Validate ();
    }
  catch (const ConfigError &e)
    {
      std::ostringstream os;
      os << source << ": " << e.what ();
      throw ConfigError (os.str ());
    }
  return config;
}

RunConfig
ParseConfig (const std::filesystem::path &file)
{
  std::ifstream in (file, std::ios::binary);
  if (!in)
    {
      throw ConfigError ("cannot open config file " + file.string ());
    }
  std::ostringstream text;
  text << in.rdbuf ();
  return ParseConfigText (text.str (), file.string ());
}

} // namespace wsn
