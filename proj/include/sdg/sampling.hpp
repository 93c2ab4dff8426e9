// Integer-valued gamble grids for refutation checks.
#ifndef SDG_SAMPLING_HPP
#define SDG_SAMPLING_HPP

#include "sdg/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace sdg {

struct SampleConfig {
  std::int64_t lo = -3;
  std::int64_t hi = 3;
  std::size_t cap = 2000;
  std::uint64_t seed = 0x5d6a11e5ULL;
};

/// True when the whole grid [lo, hi]^dim fits within the cap.
bool grid_is_exhaustive(std::size_t dim, const SampleConfig& cfg);

/// The whole grid in lexicographic order when it fits, otherwise `cap` draws
/// from a seeded generator. Identical inputs give identical output.
std::vector<Vector> sample_gambles(std::size_t dim, const SampleConfig& cfg);

/// Seeded mt19937_64. Ranges use plain modulo so draws match across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Integer in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sdg

#endif  // SDG_SAMPLING_HPP
