#include "wsn/election.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wsn {

void
ElectionPolicy::Validate () const
{
  if (!(baseProbability > 0.0 && baseProbability <= 1.0))
    {
      throw std::invalid_argument ("election policy: base probability must be in (0, 1]");
    }
  if (probability == ProbabilityKind::SepTwoTier && !sep)
    {
      throw std::invalid_argument ("election policy: two-tier probability needs SEP parameters");
    }
  if (cap && *cap == 0)
    {
      throw std::invalid_argument ("election policy: cap must be at least 1");
    }
}

std::uint32_t
EpochLength (double p)
{
  const double len = std::floor (1.0 / p + 0.5);
  return len < 1.0 ? 1u : static_cast<std::uint32_t> (len);
}

double
LeachThreshold (double p, std::uint32_t round, bool eligible)
{
  if (!(p > 0.0 && p <= 1.0))
    {
      throw std::invalid_argument ("leach_threshold: p must be in (0, 1]");
    }
  if (!eligible)
    {
      return 0.0;
    }
  const double slot = round % EpochLength (p);
  const double denom = 1.0 - p * slot;
  if (denom <= p)
    {
      return 1.0;
    }
  return std::min (1.0, p / denom);
}

double
EnergyThreshold (double p, std::uint32_t round, bool eligible, double residual, double initial)
{
  if (!(initial > 0.0) || residual < 0.0 || residual > initial)
    {
      throw std::invalid_argument ("energy_threshold: need 0 <= residual <= initial, initial > 0");
    }
  return LeachThreshold (p, round, eligible) * (residual / initial);
}

TierProbabilities
SepProbabilities (double p, double energyFactor, double advancedFraction)
{
  TierProbabilities tiers;
  tiers.normal = p / (1.0 + energyFactor * advancedFraction);
  tiers.advanced = tiers.normal * (1.0 + energyFactor);
  return tiers;
}

TierProbabilities
EffectiveProbabilities (const ElectionPolicy &policy, std::optional<double> adaptive)
{
  const double p = policy.baseProbability;
  TierProbabilities tiers{p, p};
  if (policy.sep)
    {
      tiers = SepProbabilities (p, policy.sep->energyFactor, policy.sep->advancedFraction);
    }
  if (policy.probability == ProbabilityKind::Adaptive && adaptive)
    {
      const double scale = *adaptive / p;
      tiers.normal = std::min (1.0, tiers.normal * scale);
      tiers.advanced = std::min (1.0, tiers.advanced * scale);
    }
  return tiers;
}

void
RefreshEpoch (std::span<Node> nodes, std::uint32_t round, const TierProbabilities &p)
{
  const bool normalStart = round % EpochLength (p.normal) == 0;
  const bool advancedStart = round % EpochLength (p.advanced) == 0;
  for (Node &node : nodes)
    {
      if (!node.alive)
        {
          node.eligible = false;
          continue;
        }
      if (node.tier == Tier::Advanced ? advancedStart : normalStart)
        {
          node.eligible = true;
        }
    }
}

ElectionOutcome
ElectClusterHeads (std::span<Node> nodes, const ElectionPolicy &policy, std::uint32_t round,
                   std::optional<double> adaptive, Rng &rng)
{
  ElectionOutcome outcome;
  outcome.probabilityUsed = EffectiveProbabilities (policy, adaptive);

  std::vector<Node *> candidates;
  for (Node &node : nodes)
    {
      if (!node.alive || !node.eligible)
        {
          continue;
        }
      const double p = outcome.probabilityUsed.For (node.tier);
      const double threshold =
          policy.threshold == ThresholdKind::EnergyWeighted
              ? EnergyThreshold (p, round, true, node.residualEnergy, node.initialEnergy)
              : LeachThreshold (p, round, true);
      if (rng.Uniform () < threshold)
        {
          candidates.push_back (&node);
        }
    }
  outcome.candidatesBeforeCap = static_cast<std::uint32_t> (candidates.size ());

  if (policy.cap && candidates.size () > *policy.cap)
    {
      std::stable_sort (candidates.begin (), candidates.end (), [] (const Node *a, const Node *b) {
        if (a->residualEnergy != b->residualEnergy)
          {
            return a->residualEnergy > b->residualEnergy;
          }
        return a->id < b->id;
      });
      candidates.resize (*policy.cap);
      std::sort (candidates.begin (), candidates.end (),
                 [] (const Node *a, const Node *b) { return a->id < b->id; });
    }

  for (Node *head : candidates)
    {
      head->eligible = false;
      outcome.heads.push_back (head->id);
    }
  for (Node &node : nodes)
    {
      if (!node.alive)
        {
          continue;
        }
      if (std::find (outcome.heads.begin (), outcome.heads.end (), node.id)
          != outcome.heads.end ())
        {
          node.roundsSinceCh = 0;
        }
      else if (node.roundsSinceCh)
        {
          ++*node.roundsSinceCh;
        }
    }
  return outcome;
}

} // namespace wsn
