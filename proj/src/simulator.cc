#include "wsn/simulator.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <stdexcept>

#include "wsn/analysis.h"
#include "wsn/reporting.h"

namespace wsn {

namespace {

std::vector<std::string>
Split (const std::string &s, char sep)
{
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  for (;;)
    {
      const auto pos = s.find (sep, start);
      parts.push_back (s.substr (start, pos - start));
      if (pos == std::string::npos)
        {
          return parts;
        }
      start = pos + 1;
    }
}

std::string
Lower (std::string_view s)
{
  std::string out (s);
  std::transform (out.begin (), out.end (), out.begin (),
                  [] (unsigned char c) { return static_cast<char> (std::tolower (c)); });
  return out;
}

// Takes energy from a node without letting it go negative; returns what was taken.
double
Drain (Node &node, double energy)
{
  const double taken = std::min (energy, node.residualEnergy);
  node.residualEnergy -= taken;
  return taken;
}

} // namespace

const std::vector<std::string> &
AlgorithmNames ()
{
  static const std::vector<std::string> names = {
      "leach",
      "sep",
      "leach-kp",
      "leach-kep",
      "sep-kp",
      "sep-kep",
      "leach-kef-1-1",
      "leach-kef-1-2",
      "leach-kef-1-1-p",
      "leach-kef-1-2-p",
      "sep-kef-1-1",
      "sep-kef-1-2",
      "sep-kef-1-1-p",
      "sep-kef-1-2-p",
      "leach-kef-1-1-p-learning",
      "leach-kef-1-2-p-learning",
      "sep-kef-1-1-p-learning",
      "sep-kef-1-2-p-learning",
  };
  return names;
}

std::optional<AlgorithmSpec>
ResolveAlgorithm (std::string_view name, const FieldConfig &field)
{
  const std::string key = Lower (name);
  const auto &names = AlgorithmNames ();
  if (std::find (names.begin (), names.end (), key) == names.end ())
    {
      return std::nullopt;
    }

  const auto tokens = Split (key, '-');
  AlgorithmSpec spec;
  spec.name = key;
  spec.base = tokens[0] == "sep" ? BaseProtocol::Sep : BaseProtocol::Leach;
  spec.election.baseProbability = field.baseProbability;
  if (spec.base == BaseProtocol::Sep)
    {
      spec.election.sep = SepParams{field.advancedEnergyFactor, field.advancedFraction};
      spec.election.probability = ProbabilityKind::SepTwoTier;
    }

  std::size_t i = 1;
  if (i < tokens.size ())
    {
      const std::string &variant = tokens[i++];
      spec.capped = true;
      if (variant == "kp" || variant == "kep")
        {
          spec.adaptiveP = true;
        }
      if (variant == "kep" || variant == "kef")
        {
          spec.election.threshold = ThresholdKind::EnergyWeighted;
        }
      if (variant == "kef")
        {
          spec.join.kind = JoinKind::EnergyDistance;
          spec.join.alpha = std::stod (tokens[i++]);
          spec.join.beta = std::stod (tokens[i++]);
        }
    }
  for (; i < tokens.size (); ++i)
    {
      if (tokens[i] == "p")
        {
          spec.adaptiveP = true;
        }
      else if (tokens[i] == "learning")
        {
          spec.learningKappa = true;
        }
    }
  if (spec.adaptiveP)
    {
      spec.election.probability = ProbabilityKind::Adaptive;
    }
  return spec;
}

std::uint32_t
SimulationState::AliveCount () const
{
  return static_cast<std::uint32_t> (
      std::count_if (nodes.begin (), nodes.end (), [] (const Node &n) { return n.alive; }));
}

double
SimulationState::ResidualTotal () const
{
  double total = 0.0;
  for (const Node &n : nodes)
    {
      total += n.residualEnergy;
    }
  return total;
}

SimulationState
InitialState (const FieldConfig &field, const RadioParams &radio, Rng &rng)
{
  SimulationState state;
  state.nodes = DeployField (field, rng);
  for (const Node &n : state.nodes)
    {
      state.initialTotal += n.initialEnergy;
    }
  const AnalysisInputs inputs{radio, field,
                              RepresentativeBsDistance (state.nodes, field.bsPosition)};
  state.kappaMaxRaw = MaxClusters (inputs).raw;
  return state;
}

double
LearningUpdate (const SimulationState &state, const RadioParams &radio, const FieldConfig &field,
                Position bs)
{
  const std::uint32_t alive = state.AliveCount ();
  if (alive == 0)
    {
      throw std::invalid_argument ("learning_update: no alive nodes");
    }
  AnalysisInputs inputs{radio, field, RepresentativeBsDistance (state.nodes, bs)};
  inputs.field.nodeCount = alive;
  return MaxClusters (inputs).raw;
}

RoundRecord
RunRound (SimulationState &state, const AlgorithmSpec &algo, const FieldConfig &field,
          const RadioParams &radio, Rng &rng)
{
  if (state.AliveCount () == 0)
    {
      throw std::logic_error ("run_round: no alive nodes");
    }

  RoundRecord record;
  record.round = state.round;
  record.kappaUsed = state.kappaMaxRaw;

  ElectionPolicy policy = algo.election;
  if (algo.capped)
    {
      policy.cap = RoundClusterBound (state.kappaMaxRaw);
    }
  const std::optional<double> adaptive = algo.adaptiveP ? state.adaptiveP : std::nullopt;
  record.pUsed = adaptive.value_or (policy.baseProbability);

  RefreshEpoch (state.nodes, state.round, EffectiveProbabilities (policy, adaptive));
  const ElectionOutcome outcome = ElectClusterHeads (state.nodes, policy, state.round, adaptive, rng);
  const ClusterAssignment clusters = AssignMembers (state.nodes, outcome.heads, algo.join);
  record.headCount = static_cast<std::uint32_t> (outcome.heads.size ());

  const std::uint32_t l = radio.packetBits;
  const Position bs = field.bsPosition;
  auto &nodes = state.nodes;

  std::vector<std::uint32_t> memberCount (nodes.size (), 0);
  for (const auto &[member, head] : clusters.memberToHead)
    {
      const double d = Distance (nodes[member].position, nodes[head].position);
      state.cumulativeConsumed += Drain (nodes[member], TxEnergy (radio, l, d));
      ++memberCount[head];
    }
  for (std::uint32_t head : outcome.heads)
    {
      Node &node = nodes[head];
      const std::uint32_t members = memberCount[head];
      double cost = AggregationEnergy (radio, l, members + 1)
                    + TxEnergy (radio, l, Distance (node.position, bs));
      if (members > 0)
        {
          cost += RxEnergy (radio, l) * members;
        }
      state.cumulativeConsumed += Drain (node, cost);
    }
  for (std::uint32_t id : clusters.unassigned)
    {
      Node &node = nodes[id];
      state.cumulativeConsumed += Drain (node, TxEnergy (radio, l, Distance (node.position, bs)));
    }

  for (Node &node : nodes)
    {
      if (node.alive && node.residualEnergy <= 0.0)
        {
          node.residualEnergy = 0.0;
          node.alive = false;
          node.eligible = false;
        }
      if (!node.alive)
        {
          ++record.deadTotal;
          ++(node.tier == Tier::Advanced ? record.deadAdvanced : record.deadNormal);
        }
    }
  record.alive = static_cast<std::uint32_t> (nodes.size ()) - record.deadTotal;
  record.residualEnergyTotal = state.ResidualTotal ();

  if (record.alive > 0)
    {
      // the evolved bound feeds this round's adaptive probability update
      if (algo.learningKappa)
        {
          state.kappaMaxRaw = LearningUpdate (state, radio, field, bs);
        }
      if (algo.adaptiveP)
        {
          state.adaptiveP = AdaptiveProbability (state.kappaMaxRaw, record.alive);
        }
    }
  ++state.round;
  return record;
}

SimulationSummary
RunSimulation (const FieldConfig &field, const RadioParams &radio, const AlgorithmSpec &algo,
               std::uint64_t seed, const RoundObserver &observer)
{
  field.Validate ();
  radio.Validate ();
  algo.election.Validate ();
  algo.join.Validate ();

  SimulationSummary summary;
  summary.algorithm = algo.name;
  summary.seed = seed;
  summary.metadata.rngAlgorithm = std::string (Rng::kAlgorithmId);
  summary.metadata.configHash = ConfigHash (field, radio);

  Rng rng (seed);
  SimulationState state = InitialState (field, radio, rng);
  while (state.round < field.maxRounds && state.AliveCount () > 0)
    {
      summary.series.push_back (RunRound (state, algo, field, radio, rng));
      if (observer)
        {
          observer (state, summary.series.back ());
        }
    }
  summary.roundsExecuted = static_cast<std::uint32_t> (summary.series.size ());

  const StabilityMetrics metrics = ComputeStabilityMetrics (summary.series, field.nodeCount);
  summary.firstDeathRound = metrics.firstDeath;
  summary.halfDeathRound = metrics.halfDeath;
  summary.lastDeathRound = metrics.lastDeath;
  return summary;
}

std::string
ConfigHash (const FieldConfig &field, const RadioParams &radio)
{
  char buf[512];
  std::snprintf (buf, sizeof buf,
                 "side=%.17g;n=%u;bs=%.17g,%.17g;p=%.17g;m=%.17g;a=%.17g;e0=%.17g;rounds=%u;"
                 "elec=%.17g;fs=%.17g;mp=%.17g;da=%.17g;l=%u",
                 field.sideM, field.nodeCount, field.bsPosition.x, field.bsPosition.y,
                 field.baseProbability, field.advancedFraction, field.advancedEnergyFactor,
                 field.initialEnergy, field.maxRounds, radio.elecEnergyPerBit, radio.fsAmp,
                 radio.mpAmp, radio.aggregationEnergyPerBit, radio.packetBits);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const char *c = buf; *c; ++c)
    {
      hash ^= static_cast<unsigned char> (*c);
      hash *= 0x100000001b3ull;
    }
  char out[17];
  std::snprintf (out, sizeof out, "%016llx", static_cast<unsigned long long> (hash));
  return out;
}

} // namespace wsn
