#ifndef WSN_TESTS_FIXTURES_H
#define WSN_TESTS_FIXTURES_H

#include "wsn/core-model.h"

namespace wsn::test {

// Radio constants with the electronics energy at 0.5 nJ/bit, the value the
// per-operation worked examples are computed with. Library defaults use 50 nJ/bit.
inline RadioParams
WorkedExampleRadio ()
{
  RadioParams r;
  r.elecEnergyPerBit = 0.5e-9;
  return r;
}

inline Node
MakeNode (std::uint32_t id, double x, double y, double energy = 0.5, Tier tier = Tier::Normal)
{
  Node n;
  n.id = id;
  n.position = {x, y};
  n.tier = tier;
  n.initialEnergy = energy;
  n.residualEnergy = energy;
  return n;
}

} // namespace wsn::test

#endif /* WSN_TESTS_FIXTURES_H */
