#include <string>

#include "doctest.h"
#include "wsn/config.h"

using namespace wsn;

namespace {

std::string
ErrorOf (const std::string &text)
{
  try
    {
      ParseConfigText (text, "run.ini");
    }
  catch (const ConfigError &e)
    {
      return e.what ();
    }
  return {};
}

} // namespace

TEST_CASE ("empty file yields the documented defaults")
{
  const RunConfig c = ParseConfigText ("");
  CHECK (c.field.sideM == 100.0);
  CHECK (c.field.nodeCount == 100);
  CHECK (c.field.baseProbability == 0.1);
  CHECK (c.field.advancedFraction == 0.1);
  CHECK (c.field.advancedEnergyFactor == 1.0);
  CHECK (c.field.initialEnergy == 0.5);
  CHECK (c.field.maxRounds == 3000);
  CHECK (c.field.bsPosition.x == 50.0);
  CHECK (c.field.bsPosition.y == 50.0);
  CHECK (c.radio.elecEnergyPerBit == 50e-9);
  CHECK (c.radio.aggregationEnergyPerBit == 5e-9);
  CHECK (c.radio.fsAmp == 10e-12);
  CHECK (c.radio.mpAmp == 0.0013e-12);
  CHECK (c.radio.packetBits == 4000);
  CHECK (c.algorithms == std::vector<std::string>{"leach"});
  CHECK (c.seeds == std::vector<std::uint64_t>{1});
  CHECK (c.Wants (OutputFormat::Csv));
  CHECK (c.Wants (OutputFormat::Json));
}

TEST_CASE ("keys with and without sections")
{
  const RunConfig c = ParseConfigText ("# comment\n"
                                       "algorithms = leach, sep-kep\n"
                                       "[field]\n"
                                       "nodes = 50\n"
                                       "p = 0.05\n"
                                       "\n"
                                       "[radio]\n"
                                       "e_elec = 0.5e-9   \n"
                                       "packet_bits = 2000\n"
                                       "[run]\n"
                                       "seeds = 1, 2, 3\n"
                                       "formats = json\n"
                                       "output_dir = out/x\n");
  CHECK (c.algorithms == std::vector<std::string>{"leach", "sep-kep"});
  CHECK (c.field.nodeCount == 50);
  CHECK (c.field.baseProbability == 0.05);
  CHECK (c.radio.elecEnergyPerBit == 0.5e-9);
  CHECK (c.radio.packetBits == 2000);
  CHECK (c.seeds == std::vector<std::uint64_t>{1, 2, 3});
  CHECK_FALSE (c.Wants (OutputFormat::Csv));
  CHECK (c.outputDir == "out/x");
}

TEST_CASE ("errors name the key and the line")
{
  auto e = ErrorOf ("\np = 1.5\n");
  CHECK (e.find ("run.ini:2") != std::string::npos);
  CHECK (e.find ("'p'") != std::string::npos);

  e = ErrorOf ("bogus = 1\n");
  CHECK (e.find ("bogus") != std::string::npos);
  CHECK (e.find (":1") != std::string::npos);

  e = ErrorOf ("nodes = many\n");
  CHECK (e.find ("nodes") != std::string::npos);

  e = ErrorOf ("algorithms = leach, foo\n");
  CHECK (e.find ("foo") != std::string::npos);

  e = ErrorOf ("[radio]\np = 0.2\n");
  CHECK (e.find ("[field]") != std::string::npos);

  CHECK_FALSE (ErrorOf ("[nowhere]\n").empty ());
  CHECK_FALSE (ErrorOf ("just text\n").empty ());
  CHECK_FALSE (ErrorOf ("seeds = -4\n").empty ());
  CHECK_FALSE (ErrorOf ("formats = xml\n").empty ());
  CHECK_FALSE (ErrorOf ("m = 1\n").empty ());
  // BS outside the field is a cross-key check
  CHECK_FALSE (ErrorOf ("side = 40\n").empty ());
}

TEST_CASE ("missing file")
{
  CHECK_THROWS_AS (ParseConfig ("/definitely/not/here.ini"), ConfigError);
}
