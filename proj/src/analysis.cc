#include "wsn/analysis.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wsn {

namespace {

void
CheckInputs (const AnalysisInputs &inputs)
{
  if (!std::isfinite (inputs.bsDistance) || inputs.bsDistance <= 0.0)
    {
      throw std::invalid_argument ("bs_distance must be positive");
    }
}

} // namespace

double
TotalEnergy (const AnalysisInputs &inputs, double d)
{
  CheckInputs (inputs);
  if (!std::isfinite (d) || d <= 0.0)
    {
      throw std::invalid_argument ("total_energy: d must be positive");
    }
  const auto &r = inputs.radio;
  const double l = r.packetBits;
  const double n = inputs.field.nodeCount;
  const double m2 = inputs.field.sideM * inputs.field.sideM;
  const double dbs2 = inputs.bsDistance * inputs.bsDistance;

  return 2.0 * l * r.elecEnergyPerBit * n + l * r.aggregationEnergyPerBit * n
         + l * r.mpAmp * dbs2 * dbs2 * m2 / (2.0 * std::numbers::pi * d * d)
         + n * l * r.fsAmp * d * d;
}

double
OptimalDistance (const AnalysisInputs &inputs)
{
  CheckInputs (inputs);
  const double m2 = inputs.field.sideM * inputs.field.sideM;
  const double ratio = inputs.radio.mpAmp * m2
                       / (2.0 * std::numbers::pi * inputs.field.nodeCount * inputs.radio.fsAmp);
  return std::pow (ratio, 0.25) * inputs.bsDistance;
}

std::uint32_t
RoundClusterBound (double raw)
{
  const double r = std::floor (raw + 0.5);
  return r < 1.0 ? 1u : static_cast<std::uint32_t> (r);
}

ClusterBound
MaxClusters (const AnalysisInputs &inputs)
{
  CheckInputs (inputs);
  const double n = inputs.field.nodeCount;
  const double dbs2 = inputs.bsDistance * inputs.bsDistance;
  ClusterBound bound;
  bound.raw = std::sqrt (n * inputs.radio.fsAmp / (2.0 * std::numbers::pi * inputs.radio.mpAmp))
              * inputs.field.sideM / dbs2;
  bound.rounded = RoundClusterBound (bound.raw);
  return bound;
}

double
AdaptiveProbability (double kappaMax, std::uint32_t aliveCount)
{
  if (aliveCount == 0)
    {
      throw std::invalid_argument ("adaptive_probability: no alive nodes");
    }
  return std::min (1.0, kappaMax / aliveCount);
}

double
RepresentativeBsDistance (std::span<const Node> nodes, Position bs)
{
  double sum = 0.0;
  std::uint32_t alive = 0;
  for (const Node &node : nodes)
    {
      if (node.alive)
        {
          sum += Distance (node.position, bs);
          ++alive;
        }
    }
  if (alive == 0)
    {
      throw std::invalid_argument ("representative_bs_distance: no alive nodes");
    }
  return sum / alive;
}

} // namespace wsn
