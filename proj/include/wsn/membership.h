#ifndef WSN_MEMBERSHIP_H
#define WSN_MEMBERSHIP_H

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "wsn/core-model.h"

namespace wsn {

enum class JoinKind { Nearest, EnergyDistance };

struct JoinPolicy
{
  JoinKind kind = JoinKind::Nearest;
  double alpha = 1.0;
  double beta = 1.0;

  void Validate () const;
};

struct ClusterAssignment
{
  /// member id -> head id
  std::map<std::uint32_t, std::uint32_t> memberToHead;
  /// Alive non-heads with no head to join; they transmit straight to the BS.
  std::vector<std::uint32_t> unassigned;
};

/// residual^alpha / distance^beta
double EnergyDistanceRatio (double residual, double distance, double alpha, double beta);

/**
 * Attaches every alive non-head node to exactly one head. Head energies are
 * read as they are on entry, so the result does not depend on member order.
 * A member sitting on top of a head joins it outright.
 */
ClusterAssignment AssignMembers (std::span<const Node> nodes,
                                 std::span<const std::uint32_t> heads, const JoinPolicy &policy);

} // namespace wsn

#endif /* WSN_MEMBERSHIP_H */
