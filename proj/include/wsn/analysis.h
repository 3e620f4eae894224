#ifndef WSN_ANALYSIS_H
#define WSN_ANALYSIS_H

#include <cstdint>
#include <span>

#include "wsn/core-model.h"

namespace wsn {

// Closed-form clustering analysis. The field is tiled into clusters of area
// 2*pi*d^2, members use the free-space amplifier and heads the multipath
// amplifier over a single representative head-to-BS distance.

struct AnalysisInputs
{
  RadioParams radio;
  FieldConfig field;
  double bsDistance = 0.0;
};

/// Network-wide energy per round as a function of the cluster radius d.
double TotalEnergy (const AnalysisInputs &inputs, double d);

/// The d that minimizes TotalEnergy.
double OptimalDistance (const AnalysisInputs &inputs);

struct ClusterBound
{
  double raw = 0.0;
  /// max(1, round-half-up(raw)); used as the per-round head cap.
  std::uint32_t rounded = 1;
};

/// Maximum number of clusters per round, M^2 / (2*pi*d_opt^2).
ClusterBound MaxClusters (const AnalysisInputs &inputs);

/// Rounded form of a raw cluster bound.
std::uint32_t RoundClusterBound (double raw);

/// kappa / alive, clamped to 1.
double AdaptiveProbability (double kappaMax, std::uint32_t aliveCount);

/// Mean distance from alive nodes to the BS.
double RepresentativeBsDistance (std::span<const Node> nodes, Position bs);

} // namespace wsn

#endif /* WSN_ANALYSIS_H */
