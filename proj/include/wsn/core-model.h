#ifndef WSN_CORE_MODEL_H
#define WSN_CORE_MODEL_H

#include <cstdint>
#include <optional>
#include <vector>

#include "wsn/rng.h"

namespace wsn {

struct Position
{
  double x = 0.0;
  double y = 0.0;
};

double Distance (Position a, Position b);

/**
 * First-order radio model constants. Amplifier energies are per bit per m^2
 * (free space) and per m^4 (multipath).
 */
struct RadioParams
{
  double elecEnergyPerBit = 50e-9;
  double fsAmp = 10e-12;
  double mpAmp = 0.0013e-12;
  double aggregationEnergyPerBit = 5e-9;
  std::uint32_t packetBits = 4000;

  /// Throws std::invalid_argument when a constant is non-positive or non-finite.
  void Validate () const;
};

struct FieldConfig
{
  double sideM = 100.0;
  std::uint32_t nodeCount = 100;
  Position bsPosition{50.0, 50.0};
  double baseProbability = 0.1;
  double advancedFraction = 0.1;
  double advancedEnergyFactor = 1.0;
  double initialEnergy = 0.5;
  std::uint32_t maxRounds = 3000;

  void Validate () const;

  /// Number of advanced nodes, round(m * N) half-up.
  std::uint32_t AdvancedCount () const;
};

enum class Tier { Normal, Advanced };

struct Node
{
  std::uint32_t id = 0;
  Position position;
  Tier tier = Tier::Normal;
  double initialEnergy = 0.0;
  double residualEnergy = 0.0;
  bool alive = true;
  /// Rounds elapsed since this node last served as cluster-head; empty if never.
  std::optional<std::uint32_t> roundsSinceCh;
  /// Member of the not-yet-elected set for the current epoch.
  bool eligible = true;
};

/// Distance at which the free-space and multipath amplifier costs cross.
double DistanceThreshold (const RadioParams &params);

/// Energy to transmit `bits` over `distance` metres.
double TxEnergy (const RadioParams &params, std::uint32_t bits, double distance);

double RxEnergy (const RadioParams &params, std::uint32_t bits);

/// Energy to aggregate `signalCount` signals of `bits` each.
double AggregationEnergy (const RadioParams &params, std::uint32_t bits,
                          std::uint32_t signalCount);

/**
 * Places config.nodeCount nodes uniformly on the square field. Positions are
 * drawn first; a seeded Fisher-Yates shuffle of the ids then marks the first
 * AdvancedCount() entries as advanced.
 */
std::vector<Node> DeployField (const FieldConfig &config, Rng &rng);

} // namespace wsn

#endif /* WSN_CORE_MODEL_H */
