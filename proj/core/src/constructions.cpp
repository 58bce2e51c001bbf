#include "normdepth/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "normdepth/betti.hpp"

namespace normdepth {
namespace {

std::string join(std::span<const int> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

}  // namespace

Graph six_vertex_cut_graph() {
  return Graph(6, {{2, 4}, {3, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}, {1, 6}});
}

Graph base_cut_vertex_graph(int t) {
  if (t < 2) {
    throw std::invalid_argument("base_cut_vertex_graph needs t >= 2, got " +
                                std::to_string(t));
  }
  if (2 * t > kMaxVariables) throw CapExceeded("base_cut_vertex_graph: 2t exceeds 64");
  std::vector<Edge> edges;
  for (int a = 2; a <= t; ++a) {
    for (int b = t + 1; b <= 2 * t; ++b) edges.emplace_back(a, b);
  }
  edges.emplace_back(1, 2 * t);
  Graph g(2 * t, edges);

  const Graph co = complement(g);
  const auto fail = [&](const char* what) {
    throw std::logic_error(std::string("base_cut_vertex_graph(") + std::to_string(t) +
                           "): " + what);
  };
  if (g.isolated_vertex()) fail("isolated vertex");
  if (!is_chordal(co)) fail("complement not chordal");
  if (!is_connected(co)) fail("complement disconnected");
  const auto cuts = cut_vertices(co);
  if (std::find(cuts.begin(), cuts.end(), 1) == cuts.end()) fail("1 is not a cut vertex");
  if (matching_number(g) != t) fail("matching number differs from t");
  return g;
}

ConstructionResult vanishing_tail_graph(int s, int m) {
  if (s < 1 || s >= m) {
    throw std::invalid_argument("vanishing_tail_graph needs 1 <= s < m, got s=" +
                                std::to_string(s) + " m=" + std::to_string(m));
  }
  Graph g = base_cut_vertex_graph(m - s + 1);
  for (int i = 1; i < s; ++i) g = with_disjoint_edge(g);
  ConstructionResult out;
  out.ideal = edge_ideal(g);
  out.graph = g;
  out.nu = m;
  for (int k = 1; k <= m; ++k) out.predicted_g.push_back(std::max(s - (k - 1), 0));
  out.provenance = "thm38 s=" + std::to_string(s) + " m=" + std::to_string(m);
  return out;
}

std::vector<int> predict_adjoin_edge(const Graph& h, std::span<const int> gh) {
  if (!is_cochordal(h)) throw std::invalid_argument("graph is not cochordal");
  const int nu = matching_number(h);
  if (static_cast<int>(gh.size()) != nu) {
    throw std::invalid_argument("profile has " + std::to_string(gh.size()) +
                                " entries, matching number is " + std::to_string(nu));
  }
  auto at = [&](int k) {
    return k < 1 || k > nu ? kInfiniteDepth : gh[static_cast<std::size_t>(k - 1)];
  };
  std::vector<int> out;
  for (int k = 1; k <= nu + 1; ++k) {
    const int shifted_up = at(k) == kInfiniteDepth ? kInfiniteDepth : at(k) + 1;
    out.push_back(std::min(shifted_up, at(k - 1)));
  }
  return out;
}

ConstructionResult step_profile_ideal(int s, int m) {
  if (s < 1 || s >= m) {
    throw std::invalid_argument("step_profile_ideal needs 1 <= s < m, got s=" +
                                std::to_string(s) + " m=" + std::to_string(m));
  }
  const int t = m - s;
  MonomialIdeal ideal = edge_ideal(complete_bipartite(t, t));
  for (int i = 0; i < s; ++i) ideal = adjoin_variable(ideal);
  ConstructionResult out;
  out.ideal = ideal;
  out.nu = m;
  out.predicted_g.assign(static_cast<std::size_t>(m), 0);
  std::fill_n(out.predicted_g.begin(), s, 1);
  out.provenance = "lemma42 s=" + std::to_string(s) + " m=" + std::to_string(m);
  return out;
}

ConstructionResult all_ones_profile_ideal(int m) {
  if (m < 1) {
    throw std::invalid_argument("all_ones_profile_ideal needs m >= 1, got " +
                                std::to_string(m));
  }
  const ConstructionResult step = step_profile_ideal(m, m + 1);
  ConstructionResult out;
  out.ideal = product_disjoint(step.ideal, edge_ideal(complete_bipartite(m, m)));
  out.nu = m;
  out.predicted_g.assign(static_cast<std::size_t>(m), 1);
  out.provenance = "lemma43 m=" + std::to_string(m);
  return out;
}

ConstructionResult realize_profile(std::span<const int> target) {
  if (target.empty()) throw std::invalid_argument("target profile is empty");
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i] < 0) throw std::invalid_argument("target has a negative entry");
    if (i > 0 && target[i] > target[i - 1]) {
      throw std::invalid_argument("target is not non-increasing at position " +
                                  std::to_string(i + 1));
    }
  }
  const int m = static_cast<int>(target.size());
  std::vector<MonomialIdeal> factors;
  std::vector<std::string> labels;
  for (int k = m - 1; k >= 1; --k) {
    const int drop = target[static_cast<std::size_t>(k - 1)] - target[static_cast<std::size_t>(k)];
    for (int c = 0; c < drop; ++c) {
      factors.push_back(step_profile_ideal(k, m).ideal);
      labels.push_back("lemma42(" + std::to_string(k) + "," + std::to_string(m) + ")");
    }
  }
  for (int c = 0; c < target.back(); ++c) {
    factors.push_back(all_ones_profile_ideal(m).ideal);
    labels.push_back("lemma43(" + std::to_string(m) + ")");
  }
  if (factors.empty()) {
    factors.push_back(edge_ideal(complete_bipartite(m, m)));
    labels.push_back("K" + std::to_string(m) + "," + std::to_string(m));
  }

  int variables = 0;
  for (const auto& f : factors) variables += f.ambient();
  if (variables > kMaxVariables) {
    throw CapExceeded("realization needs " + std::to_string(variables) +
                      " variables, above the limit of 64");
  }
  MonomialIdeal ideal = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) ideal = product_disjoint(ideal, factors[i]);

  ConstructionResult out;
  out.ideal = ideal;
  out.nu = m;
  out.predicted_g.assign(target.begin(), target.end());
  std::ostringstream os;
  os << "thm41 profile=" << join(target) << " factors=";
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "*" : "") << labels[i];
  out.provenance = os.str();
  return out;
}

}  // namespace normdepth
