#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "fixtures.h"
#include "wsn/election.h"

using namespace wsn;
using wsn::test::MakeNode;

namespace {

std::vector<Node>
Grid (std::uint32_t n, double energy = 0.5)
{
  std::vector<Node> nodes;
  for (std::uint32_t i = 0; i < n; ++i)
    {
      nodes.push_back (MakeNode (i, i % 10 * 10.0, i / 10 * 10.0, energy));
    }
  return nodes;
}

} // namespace

TEST_CASE ("leach threshold")
{
  CHECK (LeachThreshold (0.1, 0, true) == doctest::Approx (0.1));
  CHECK (LeachThreshold (0.1, 9, true) == doctest::Approx (1.0));
  CHECK (LeachThreshold (0.1, 19, true) == doctest::Approx (1.0));
  CHECK (LeachThreshold (0.1, 5, true) == doctest::Approx (0.2));
  for (std::uint32_t r = 0; r < 30; ++r)
    {
      CHECK (LeachThreshold (0.1, r, false) == 0.0);
      const double t = LeachThreshold (0.1, r, true);
      CHECK (t >= 0.1);
      CHECK (t <= 1.0);
    }
  // p = 0.4 gives a 3-round epoch whose last slot would exceed 1 unclamped
  CHECK (LeachThreshold (0.4, 2, true) == 1.0);
  CHECK (LeachThreshold (1.0, 0, true) == 1.0);
  CHECK_THROWS (LeachThreshold (0.0, 0, true));
}

TEST_CASE ("thresholds stay within [0, 1] for any p")
{
  std::mt19937_64 gen (5);
  std::uniform_real_distribution<> up (1e-3, 1.0);
  for (int i = 0; i < 2000; ++i)
    {
      const double p = up (gen);
      const auto r = static_cast<std::uint32_t> (gen () % 5000);
      const double t = LeachThreshold (p, r, true);
      CHECK (t >= 0.0);
      CHECK (t <= 1.0);
      const double te = EnergyThreshold (p, r, true, 0.3, 0.5);
      CHECK (te >= 0.0);
      CHECK (te <= t);
    }
}

TEST_CASE ("energy threshold")
{
  CHECK (EnergyThreshold (0.1, 3, true, 0.5, 0.5) == LeachThreshold (0.1, 3, true));
  CHECK (EnergyThreshold (0.1, 3, true, 0.0, 0.5) == 0.0);
  CHECK (EnergyThreshold (0.1, 0, true, 0.25, 0.5) == doctest::Approx (0.05));
  CHECK (EnergyThreshold (0.1, 0, false, 0.25, 0.5) == 0.0);
  CHECK_THROWS (EnergyThreshold (0.1, 0, true, 0.6, 0.5));
}

TEST_CASE ("SEP probabilities")
{
  const auto t = SepProbabilities (0.1, 1.0, 0.1);
  CHECK (t.normal == doctest::Approx (0.09090909090909091));
  CHECK (t.advanced == doctest::Approx (0.18181818181818182));

  const auto flat = SepProbabilities (0.1, 0.0, 0.1);
  CHECK (flat.normal == 0.1);
  CHECK (flat.advanced == 0.1);

  std::mt19937_64 gen (11);
  std::uniform_real_distribution<> u (0.0, 1.0);
  for (int i = 0; i < 1000; ++i)
    {
      const double p = 0.01 + 0.99 * u (gen);
      const double a = 5.0 * u (gen);
      const double m = 0.01 + 0.98 * u (gen);
      const auto s = SepProbabilities (p, a, m);
      CHECK (s.advanced == doctest::Approx ((1 + a) * s.normal).epsilon (1e-14));
      CHECK (m * s.advanced + (1 - m) * s.normal == doctest::Approx (p).epsilon (1e-14));
    }
}

TEST_CASE ("effective probabilities under the adaptive rule")
{
  ElectionPolicy leach;
  leach.probability = ProbabilityKind::Adaptive;
  auto t = EffectiveProbabilities (leach, 0.24);
  CHECK (t.normal == doctest::Approx (0.24));
  CHECK (t.advanced == doctest::Approx (0.24));
  t = EffectiveProbabilities (leach, std::nullopt);
  CHECK (t.normal == doctest::Approx (0.1));

  ElectionPolicy sep = leach;
  sep.sep = SepParams{1.0, 0.1};
  t = EffectiveProbabilities (sep, 0.2);
  CHECK (t.normal == doctest::Approx (0.2 / 1.1));
  CHECK (t.advanced / t.normal == doctest::Approx (2.0));
  t = EffectiveProbabilities (sep, 0.9);
  CHECK (t.advanced == 1.0);

  ElectionPolicy fixed;
  CHECK (EffectiveProbabilities (fixed, 0.5).normal == 0.1);
}

TEST_CASE ("epoch refresh")
{
  CHECK (EpochLength (0.1) == 10);
  CHECK (EpochLength (0.24) == 4);
  CHECK (EpochLength (0.18181818181818182) == 6);
  CHECK (EpochLength (1.0) == 1);

  auto nodes = Grid (3);
  for (auto &n : nodes)
    {
      n.eligible = false;
    }
  RefreshEpoch (nodes, 3, {0.1, 0.1});
  CHECK_FALSE (nodes[0].eligible);
  for (std::uint32_t r : {0u, 10u, 20u})
    {
      for (auto &n : nodes)
        {
          n.eligible = false;
        }
      RefreshEpoch (nodes, r, {0.1, 0.1});
      CHECK (nodes[0].eligible);
    }

  SUBCASE ("node elected at round 3 waits for the next epoch")
  {
    auto single = Grid (1);
    single[0].eligible = false; // elected at round 3
    for (std::uint32_t r = 4; r <= 9; ++r)
      {
        RefreshEpoch (single, r, {0.1, 0.1});
        CHECK_FALSE (single[0].eligible);
      }
    RefreshEpoch (single, 10, {0.1, 0.1});
    CHECK (single[0].eligible);
  }

  SUBCASE ("tiers keep their own epoch lengths")
  {
    auto two = Grid (2);
    two[1].tier = Tier::Advanced;
    two[0].eligible = two[1].eligible = false;
    RefreshEpoch (two, 6, {0.0909, 0.1818});
    CHECK_FALSE (two[0].eligible);
    CHECK (two[1].eligible);
  }

  SUBCASE ("dead nodes never re-enter")
  {
    auto dead = Grid (2);
    for (auto &n : dead)
      {
        n.alive = false;
        n.residualEnergy = 0.0;
      }
    RefreshEpoch (dead, 0, {0.1, 0.1});
    CHECK_FALSE (dead[0].eligible);
    CHECK_FALSE (dead[1].eligible);
  }
}

TEST_CASE ("election with no eligible nodes elects nobody")
{
  auto nodes = Grid (20);
  for (auto &n : nodes)
    {
      n.eligible = false;
    }
  Rng rng (1);
  const auto out = ElectClusterHeads (nodes, ElectionPolicy{}, 4, std::nullopt, rng);
  CHECK (out.heads.empty ());
  CHECK (out.candidatesBeforeCap == 0);
}

TEST_CASE ("last epoch slot forces every eligible node, then the cap keeps the strongest")
{
  auto nodes = Grid (100);
  for (std::uint32_t i = 0; i < 100; ++i)
    {
      nodes[i].initialEnergy = 0.6;
      nodes[i].residualEnergy = i % 7 == 0 ? 0.6 : 0.5;
    }
  ElectionPolicy policy;
  policy.cap = 10;
  Rng rng (3);
  const auto out = ElectClusterHeads (nodes, policy, 9, std::nullopt, rng);
  CHECK (out.candidatesBeforeCap == 100);
  REQUIRE (out.heads.size () == 10);
  // ids divisible by 7 hold 0.6 J: 0,7,...,63 are the ten lowest such ids
  for (std::size_t k = 0; k < 10; ++k)
    {
      CHECK (out.heads[k] == 7 * k);
    }
  for (const auto &n : nodes)
    {
      const bool head = std::find (out.heads.begin (), out.heads.end (), n.id) != out.heads.end ();
      CHECK (n.eligible == !head);
    }
}

TEST_CASE ("equal-energy ties under the cap go to lower ids")
{
  auto nodes = Grid (100);
  ElectionPolicy policy;
  policy.cap = 10;
  Rng rng (3);
  const auto out = ElectClusterHeads (nodes, policy, 9, std::nullopt, rng);
  REQUIRE (out.heads.size () == 10);
  for (std::uint32_t k = 0; k < 10; ++k)
    {
      CHECK (out.heads[k] == k);
    }
}

TEST_CASE ("cap selection is invariant to scaling residual energies")
{
  std::mt19937_64 gen (17);
  std::uniform_real_distribution<> u (0.01, 0.5);
  for (int trial = 0; trial < 100; ++trial)
    {
      auto nodes = Grid (60);
      for (auto &n : nodes)
        {
          n.residualEnergy = u (gen);
        }
      auto scaled = nodes;
      for (auto &n : scaled)
        {
          n.residualEnergy *= 0.37;
          n.initialEnergy *= 0.37;
        }
      ElectionPolicy policy;
      policy.threshold = ThresholdKind::EnergyWeighted;
      policy.cap = 5;
      policy.baseProbability = 0.3;
      Rng a (trial), b (trial);
      const auto ra = ElectClusterHeads (nodes, policy, 2, std::nullopt, a);
      const auto rb = ElectClusterHeads (scaled, policy, 2, std::nullopt, b);
      CHECK (ra.heads == rb.heads);
      CHECK (ra.heads.size () <= 5);
    }
}

TEST_CASE ("election determinism and dead-node exclusion")
{
  auto nodes = Grid (100);
  for (std::uint32_t i = 0; i < 100; i += 3)
    {
      nodes[i].alive = false;
      nodes[i].residualEnergy = 0.0;
      nodes[i].eligible = false;
    }
  auto copy = nodes;
  ElectionPolicy policy;
  policy.baseProbability = 0.5;
  Rng a (77), b (77);
  const auto ra = ElectClusterHeads (nodes, policy, 1, std::nullopt, a);
  const auto rb = ElectClusterHeads (copy, policy, 1, std::nullopt, b);
  CHECK (ra.heads == rb.heads);
  CHECK_FALSE (ra.heads.empty ());
  for (auto id : ra.heads)
    {
      CHECK (nodes[id].alive);
      CHECK (nodes[id].roundsSinceCh == 0u);
    }
}

TEST_CASE ("plain LEACH elects p*N heads per round on average")
{
  auto nodes = Grid (100);
  ElectionPolicy policy;
  Rng rng (2025);
  const std::uint32_t rounds = 1000;
  std::vector<double> counts;
  for (std::uint32_t r = 0; r < rounds; ++r)
    {
      RefreshEpoch (nodes, r, {0.1, 0.1});
      counts.push_back (ElectClusterHeads (nodes, policy, r, std::nullopt, rng).heads.size ());
    }
  double mean = 0.0;
  for (double c : counts)
    {
      mean += c;
    }
  mean /= rounds;
  double var = 0.0;
  for (double c : counts)
    {
      var += (c - mean) * (c - mean);
    }
  const double se = std::sqrt (var / (rounds - 1) / rounds);
  CHECK (std::abs (mean - 10.0) <= 3.0 * se + 1e-12);
}
