#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace fnls {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Output is a
// pure function of (counter, key), so any sample can be regenerated
// independently of evaluation order or thread count.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter counter, Key key);
};

// Two independent standard normals keyed by (seed, sample, mode), via the
// Box-Muller transform of two 53-bit uniforms drawn from one Philox block.
std::pair<double, double> keyed_normal_pair(std::uint64_t seed,
                                            std::uint64_t sample,
                                            std::int64_t mode);

}  // namespace fnls
