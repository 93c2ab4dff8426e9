#include "helpers.hpp"

#include "sdg/cone.hpp"
#include "sdg/linalg.hpp"

namespace sdg::test {

LexSystem random_maximal_lex(Rng& rng, const Scope& s, bool allow_degenerate) {
  const std::size_t n = s.size();
  std::vector<Vector> levels{random_mass(rng, n, allow_degenerate)};
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(i) - 1))]);
  for (std::size_t at : order) {
    Matrix m(idx(levels.size() + 1), idx(n));
    for (std::size_t r = 0; r < levels.size(); ++r) m.row(idx(r)) = levels[r].transpose();
    m.row(idx(levels.size())) = delta(n, at).transpose();
    if (exact_rank(m) == idx(levels.size() + 1)) levels.push_back(delta(n, at));
    if (levels.size() == n) break;
  }
  return LexSystem(s, levels);
}

GeneratorSet random_coherent_generators(Rng& rng, const Scope& s, std::size_t max_count) {
  while (true) {
    const std::size_t count = static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(max_count)));
    auto gens = random_generators(rng, s, count);
    std::vector<Vector> vs;
    for (const auto& g : gens) vs.push_back(g.values());
    if (positive_certificate(s.size(), vs)) return GeneratorSet(s, gens);
  }
}

}  // namespace sdg::test
