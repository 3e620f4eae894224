#ifndef WSN_SIMULATOR_H
#define WSN_SIMULATOR_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsn/core-model.h"
#include "wsn/election.h"
#include "wsn/membership.h"
#include "wsn/rng.h"

namespace wsn {

enum class BaseProtocol { Leach, Sep };

/**
 * A named protocol variant. Name tokens: "k" caps heads at the rounded
 * cluster bound, "e" weights thresholds by residual energy, "f-A-B" joins by
 * energy-distance ratio with exponents A and B, a trailing "-p" turns on the
 * adaptive probability and "-learning" re-derives the cluster bound each round.
 */
struct AlgorithmSpec
{
  std::string name;
  BaseProtocol base = BaseProtocol::Leach;
  bool capped = false;
  ElectionPolicy election;
  JoinPolicy join;
  bool adaptiveP = false;
  bool learningKappa = false;
};

/// All registered variant names, in registry order.
const std::vector<std::string> &AlgorithmNames ();

/// Case-insensitive registry lookup; the field supplies p, a and m.
std::optional<AlgorithmSpec> ResolveAlgorithm (std::string_view name, const FieldConfig &field);

struct RoundRecord
{
  std::uint32_t round = 0;
  std::uint32_t alive = 0;
  std::uint32_t deadTotal = 0;
  std::uint32_t deadNormal = 0;
  std::uint32_t deadAdvanced = 0;
  std::uint32_t headCount = 0;
  double residualEnergyTotal = 0.0;
  double pUsed = 0.0;
  double kappaUsed = 0.0;
};

struct SimulationState
{
  std::vector<Node> nodes;
  std::uint32_t round = 0;
  double kappaMaxRaw = 0.0;
  /// Base-level adaptive probability for the next round; empty until first set.
  std::optional<double> adaptiveP;
  double initialTotal = 0.0;
  double cumulativeConsumed = 0.0;

  std::uint32_t AliveCount () const;
  double ResidualTotal () const;
};

struct SummaryMetadata
{
  std::string rngAlgorithm;
  std::string configHash;
};

struct SimulationSummary
{
  std::string algorithm;
  std::uint64_t seed = 0;
  std::optional<std::uint32_t> firstDeathRound;
  std::optional<std::uint32_t> halfDeathRound;
  std::optional<std::uint32_t> lastDeathRound;
  std::uint32_t roundsExecuted = 0;
  std::vector<RoundRecord> series;
  SummaryMetadata metadata;
};

/// Builds the initial state: deployed nodes and the a-priori cluster bound.
SimulationState InitialState (const FieldConfig &field, const RadioParams &radio, Rng &rng);

/// Cluster bound re-derived for the surviving nodes (alive count and mean BS distance).
double LearningUpdate (const SimulationState &state, const RadioParams &radio,
                       const FieldConfig &field, Position bs);

/**
 * Executes one round: epoch refresh, election, membership, steady-state
 * charging, end-of-round deaths, then the adaptive and learning updates that
 * take effect next round. Requires at least one alive node.
 */
RoundRecord RunRound (SimulationState &state, const AlgorithmSpec &algo, const FieldConfig &field,
                      const RadioParams &radio, Rng &rng);

using RoundObserver = std::function<void (const SimulationState &, const RoundRecord &)>;

SimulationSummary RunSimulation (const FieldConfig &field, const RadioParams &radio,
                                 const AlgorithmSpec &algo, std::uint64_t seed,
                                 const RoundObserver &observer = {});

/// Hex FNV-1a digest of every parameter that affects a run.
std::string ConfigHash (const FieldConfig &field, const RadioParams &radio);

} // namespace wsn

#endif /* WSN_SIMULATOR_H */
