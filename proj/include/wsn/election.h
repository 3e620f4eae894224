#ifndef WSN_ELECTION_H
#define WSN_ELECTION_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wsn/core-model.h"
#include "wsn/rng.h"

namespace wsn {

enum class ThresholdKind { Plain, EnergyWeighted };

enum class ProbabilityKind { FixedP, SepTwoTier, Adaptive };

struct SepParams
{
  double energyFactor = 1.0;     // a
  double advancedFraction = 0.1; // m
};

struct TierProbabilities
{
  double normal = 0.0;
  double advanced = 0.0;

  double For (Tier tier) const { return tier == Tier::Advanced ? advanced : normal; }
};

/**
 * How heads are drawn in a round. Adaptive substitutes the adaptive
 * probability for the base probability; when sep is also set, both tier
 * probabilities are scaled by the same factor so the (1+a) ratio survives.
 */
struct ElectionPolicy
{
  ThresholdKind threshold = ThresholdKind::Plain;
  ProbabilityKind probability = ProbabilityKind::FixedP;
  double baseProbability = 0.1;
  std::optional<std::uint32_t> cap;
  std::optional<SepParams> sep;

  void Validate () const;
};

struct ElectionOutcome
{
  std::vector<std::uint32_t> heads;
  TierProbabilities probabilityUsed;
  std::uint32_t candidatesBeforeCap = 0;
};

/// Rounds per epoch for probability p: round(1/p), at least 1.
std::uint32_t EpochLength (double p);

double LeachThreshold (double p, std::uint32_t round, bool eligible);

double EnergyThreshold (double p, std::uint32_t round, bool eligible, double residual,
                        double initial);

/// Per-tier probabilities whose population-weighted mean is p.
TierProbabilities SepProbabilities (double p, double energyFactor, double advancedFraction);

/// Tier probabilities in force given the policy and the current adaptive probability.
TierProbabilities EffectiveProbabilities (const ElectionPolicy &policy,
                                          std::optional<double> adaptive);

/// Re-admits alive nodes to the eligible set at the start of their tier's epoch.
void RefreshEpoch (std::span<Node> nodes, std::uint32_t round, const TierProbabilities &p);

/**
 * Self-election for one round. Each alive eligible node, in id order, draws
 * one uniform number and becomes a candidate if it falls below its threshold.
 * Candidates beyond the cap are dropped lowest energy first (ties keep the
 * lower id). Elected nodes leave the eligible set.
 */
ElectionOutcome ElectClusterHeads (std::span<Node> nodes, const ElectionPolicy &policy,
                                   std::uint32_t round, std::optional<double> adaptive,
                                   Rng &rng);

} // namespace wsn

#endif /* WSN_ELECTION_H */
