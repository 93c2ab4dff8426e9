#include "sdg/sampling.hpp"

#include "sdg/error.hpp"

namespace sdg {

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

bool grid_is_exhaustive(std::size_t dim, const SampleConfig& cfg) {
  const auto width = static_cast<std::size_t>(cfg.hi - cfg.lo + 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > cfg.cap / width) return false;
    total *= width;
  }
  return total <= cfg.cap;
}

std::vector<Vector> sample_gambles(std::size_t dim, const SampleConfig& cfg) {
  if (cfg.hi < cfg.lo) throw Error("empty sampling range");
  std::vector<Vector> out;
  const auto d = static_cast<Eigen::Index>(dim);
  if (grid_is_exhaustive(dim, cfg)) {
    std::vector<std::int64_t> digits(dim, cfg.lo);
    for (;;) {
      Vector v(d);
      for (std::size_t i = 0; i < dim; ++i) v(static_cast<Eigen::Index>(i)) = digits[i];
      out.push_back(std::move(v));
      std::size_t i = dim;
      while (i > 0 && digits[i - 1] == cfg.hi) digits[--i] = cfg.lo;
      if (i == 0) break;
      ++digits[i - 1];
    }
    return out;
  }
  Rng rng(cfg.seed);
  for (std::size_t s = 0; s < cfg.cap; ++s) {
    Vector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = rng.range(cfg.lo, cfg.hi);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace sdg
