#ifndef WSN_RNG_H
#define WSN_RNG_H

#include <cstdint>
#include <random>
#include <string_view>

namespace wsn {

/**
 * Seedable random source. Wraps std::mt19937_64, whose output sequence is
 * fixed by the standard, and derives doubles and bounded integers itself so
 * runs replicate across standard library implementations.
 */
class Rng
{
public:
  static constexpr std::string_view kAlgorithmId = "mt19937_64";

  explicit Rng (std::uint64_t seed) : m_engine (seed) {}

  /// Uniform on [0, 1) with 53 bits of resolution.
  double Uniform ()
  {
    return static_cast<double> (m_engine () >> 11) * 0x1.0p-53;
  }

  /// Uniform integer on [0, bound). bound must be nonzero.
  std::uint64_t Below (std::uint64_t bound)
  {
    // rejection sampling on the top of the range avoids modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do
      {
        draw = m_engine ();
      }
    while (draw >= limit);
    return draw % bound;
  }

private:
  std::mt19937_64 m_engine;
};

} // namespace wsn

#endif /* WSN_RNG_H */
