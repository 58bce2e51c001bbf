#include "normdepth/random_instances.hpp"

#include <stdexcept>
#include <vector>

namespace normdepth {

int draw_int(Rng& rng, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

MonomialIdeal random_ideal(Rng& rng, int max_variables, int max_generators) {
  if (max_variables < 1 || max_variables > 63 || max_generators < 1) {
    throw std::invalid_argument("random_ideal needs 1 <= max_variables <= 63 and "
                                "max_generators >= 1");
  }
  const int n = draw_int(rng, 1, max_variables);
  const int count = draw_int(rng, 1, max_generators);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Monomial> gens;
  for (int i = 0; i < count; ++i) gens.emplace_back(1 + rng() % full);
  return compacted(minimalize(gens));
}

Graph random_graph(Rng& rng, int n) {
  if (n < 2 || n > kMaxVariables) {
    throw std::invalid_argument("random_graph needs 2 <= n <= 64");
  }
  for (;;) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if ((rng() & 1U) != 0) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    if (!g.isolated_vertex()) return g;
  }
}

}  // namespace normdepth
