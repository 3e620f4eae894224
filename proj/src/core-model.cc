#include "wsn/core-model.h"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wsn {

namespace {

void
RequirePositive (double value, const char *name)
{
  if (!std::isfinite (value) || value <= 0.0)
    {
      throw std::invalid_argument (std::string (name) + " must be positive and finite");
    }
}

} // namespace

double
Distance (Position a, Position b)
{
  return std::hypot (a.x - b.x, a.y - b.y);
}

void
RadioParams::Validate () const
{
  RequirePositive (elecEnergyPerBit, "elec_energy_per_bit");
  RequirePositive (fsAmp, "fs_amp");
  RequirePositive (mpAmp, "mp_amp");
  RequirePositive (aggregationEnergyPerBit, "aggregation_energy_per_bit");
  if (packetBits == 0)
    {
      throw std::invalid_argument ("packet_bits must be positive");
    }
}

void
FieldConfig::Validate () const
{
  RequirePositive (sideM, "side_m");
  RequirePositive (initialEnergy, "initial_energy");
  if (nodeCount == 0)
    {
      throw std::invalid_argument ("node_count must be positive");
    }
  if (!(baseProbability > 0.0 && baseProbability <= 1.0))
    {
      throw std::invalid_argument ("base_probability must be in (0, 1]");
    }
  if (!(advancedFraction > 0.0 && advancedFraction < 1.0))
    {
      throw std::invalid_argument ("advanced_fraction must be in (0, 1)");
    }
  if (!std::isfinite (advancedEnergyFactor) || advancedEnergyFactor < 0.0)
    {
      throw std::invalid_argument ("advanced_energy_factor must be >= 0");
    }
  if (!(bsPosition.x >= 0.0 && bsPosition.x <= sideM && bsPosition.y >= 0.0
        && bsPosition.y <= sideM))
    {
      throw std::invalid_argument ("bs_position must lie inside the field");
    }
}

std::uint32_t
FieldConfig::AdvancedCount () const
{
  return static_cast<std::uint32_t> (std::floor (advancedFraction * nodeCount + 0.5));
}

double
DistanceThreshold (const RadioParams &params)
{
  return std::sqrt (params.fsAmp / params.mpAmp);
}

double
TxEnergy (const RadioParams &params, std::uint32_t bits, double distance)
{
  if (bits == 0)
    {
      throw std::invalid_argument ("tx_energy: bits must be positive");
    }
  if (!std::isfinite (distance) || distance < 0.0)
    {
      throw std::invalid_argument ("tx_energy: distance must be finite and >= 0");
    }
  const double l = bits;
  const double d2 = distance * distance;
  if (distance <= DistanceThreshold (params))
    {
      return l * params.elecEnergyPerBit + l * params.fsAmp * d2;
    }
  return l * params.elecEnergyPerBit + l * params.mpAmp * d2 * d2;
}

double
RxEnergy (const RadioParams &params, std::uint32_t bits)
{
  if (bits == 0)
    {
      throw std::invalid_argument ("rx_energy: bits must be positive");
    }
  return static_cast<double> (bits) * params.elecEnergyPerBit;
}

double
AggregationEnergy (const RadioParams &params, std::uint32_t bits, std::uint32_t signalCount)
{
  if (bits == 0 || signalCount == 0)
    {
      throw std::invalid_argument ("aggregation_energy: bits and signal_count must be positive");
    }
  return static_cast<double> (bits) * params.aggregationEnergyPerBit * signalCount;
}

std::vector<Node>
DeployField (const FieldConfig &config, Rng &rng)
{
  std::vector<Node> nodes (config.nodeCount);
  for (std::uint32_t i = 0; i < config.nodeCount; ++i)
    {
      nodes[i].id = i;
      nodes[i].position.x = rng.Uniform () * config.sideM;
      nodes[i].position.y = rng.Uniform () * config.sideM;
    }

  std::vector<std::uint32_t> order (config.nodeCount);
  std::iota (order.begin (), order.end (), 0u);
  for (std::uint32_t i = config.nodeCount; i > 1; --i)
    {
      const auto j = static_cast<std::uint32_t> (rng.Below (i));
      std::swap (order[i - 1], order[j]);
    }

  const std::uint32_t advanced = config.AdvancedCount ();
  for (std::uint32_t k = 0; k < config.nodeCount; ++k)
    {
      Node &node = nodes[order[k]];
      node.tier = k < advanced ? Tier::Advanced : Tier::Normal;
      node.initialEnergy = node.tier == Tier::Advanced
                               ? config.initialEnergy * (1.0 + config.advancedEnergyFactor)
                               : config.initialEnergy;
      node.residualEnergy = node.initialEnergy;
    }
  return nodes;
}

} // namespace wsn
