#include "wsn/membership.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wsn {

void
JoinPolicy::Validate () const
{
  if (kind == JoinKind::EnergyDistance && !(alpha > 0.0 && beta > 0.0))
    {
      throw std::invalid_argument ("join policy: alpha and beta must be positive");
    }
}

double
EnergyDistanceRatio (double residual, double distance, double alpha, double beta)
{
  if (residual < 0.0 || distance < 0.0)
    {
      throw std::invalid_argument ("energy_distance_ratio: negative input");
    }
  // co-located pairs are resolved by the caller; keep the ratio finite here
  const double d = std::max (distance, std::numeric_limits<double>::min ());
  return std::pow (residual, alpha) / std::pow (d, beta);
}

ClusterAssignment
AssignMembers (std::span<const Node> nodes, std::span<const std::uint32_t> heads,
               const JoinPolicy &policy)
{
  std::vector<const Node *> headNodes;
  headNodes.reserve (heads.size ());
  for (std::uint32_t id : heads)
    {
      const auto it = std::find_if (nodes.begin (), nodes.end (),
                                    [id] (const Node &n) { return n.id == id; });
      if (it == nodes.end () || !it->alive)
        {
          throw std::invalid_argument ("assign_members: head is not an alive node");
        }
      headNodes.push_back (&*it);
    }
  std::sort (headNodes.begin (), headNodes.end (),
             [] (const Node *a, const Node *b) { return a->id < b->id; });

  ClusterAssignment assignment;
  for (const Node &node : nodes)
    {
      if (!node.alive
          || std::binary_search (headNodes.begin (), headNodes.end (), &node,
                                 [] (const Node *a, const Node *b) { return a->id < b->id; }))
        {
          continue;
        }
      if (headNodes.empty ())
        {
          assignment.unassigned.push_back (node.id);
          continue;
        }

      // heads are visited in id order, so strict comparisons keep the lower id on ties
      const Node *best = nullptr;
      double bestDistance = 0.0;
      double bestScore = 0.0;
      for (const Node *head : headNodes)
        {
          const double d = Distance (node.position, head->position);
          if (d == 0.0)
            {
              best = head;
              break;
            }
          if (policy.kind == JoinKind::Nearest)
            {
              if (!best || d < bestDistance)
                {
                  best = head;
                  bestDistance = d;
                }
              continue;
            }
          const double score = EnergyDistanceRatio (head->residualEnergy, d, policy.alpha,
                                                    policy.beta);
          if (!best || score > bestScore || (score == bestScore && d < bestDistance))
            {
              best = head;
              bestScore = score;
              bestDistance = d;
            }
        }
      assignment.memberToHead.emplace (node.id, best->id);
    }
  return assignment;
}

} // namespace wsn
