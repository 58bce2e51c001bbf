#include "normdepth/sweep.hpp"

#include <chrono>
#include <mutex>
#include <stdexcept>

#include "normdepth/random_instances.hpp"
#include "parallel.hpp"

namespace normdepth {
namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

Graph graph_from_code(int n, const std::vector<Edge>& pairs, std::uint64_t code) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((code >> i) & 1U) edges.push_back(pairs[i]);
  }
  return Graph(n, edges);
}

std::optional<int> first_increase(const std::vector<int>& g) {
  for (std::size_t k = 1; k < g.size(); ++k) {
    if (g[k] > g[k - 1]) return static_cast<int>(k);
  }
  return std::nullopt;
}

}  // namespace

void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
  if (n > 11) throw CapExceeded("graph enumeration is limited to 11 vertices");
  if (n < 2) return;
  const auto pairs = all_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    Mask touched = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((code >> i) & 1U) touched |= vertex_bit(pairs[i].first) | vertex_bit(pairs[i].second);
    }
    if (std::popcount(touched) != n) continue;
    visit(graph_from_code(n, pairs, code));
  }
}

std::uint64_t count_graphs(int n) {
  std::uint64_t count = 0;
  for_each_graph(n, [&](const Graph&) { ++count; });
  return count;
}

SweepReport conjecture_sweep(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int cap = options.sample ? kSampledSweepCap : kExhaustiveSweepCap;
  if (options.max_vertices > cap) {
    throw CapExceeded("sweep over " + std::to_string(options.max_vertices) +
                      " vertices exceeds the cap of " + std::to_string(cap));
  }
  if (options.max_vertices < 0) throw std::invalid_argument("negative vertex count");

  SweepReport report;
  report.field = options.field.name();

  // Graphs are processed in fixed-size batches so memory stays proportional
  // to the report. Within a batch results are stored by position, which
  // keeps the report independent of scheduling.
  std::vector<Graph> batch;
  auto flush = [&] {
    std::vector<std::optional<GProfile>> kept(batch.size());
    std::vector<std::optional<int>> increase(batch.size());
    detail::parallel_chunks(batch.size(), options.threads, 16,
                            [&](unsigned, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        GProfile p = g_profile(edge_ideal(batch[i]), options.field);
        increase[i] = first_increase(p.g);
        if (increase[i] || options.keep_profiles) kept[i] = std::move(p);
      }
    });
    report.instances += batch.size();
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (increase[i]) report.counterexamples.push_back({batch[i], *kept[i], *increase[i]});
      if (options.keep_profiles) report.profiles.emplace_back(batch[i], *kept[i]);
    }
    batch.clear();
  };
  auto push = [&](Graph g) {
    batch.push_back(std::move(g));
    if (batch.size() == 4096) flush();
  };

  if (options.sample) {
    if (*options.sample < 0) throw std::invalid_argument("negative sample size");
    report.description = "sample of " + std::to_string(*options.sample) +
                         " graphs on " + std::to_string(options.max_vertices) +
                         " vertices, seed " + std::to_string(options.seed);
    if (options.max_vertices >= 2) {
      Rng rng(options.seed);
      for (int i = 0; i < *options.sample; ++i) push(random_graph(rng, options.max_vertices));
    }
  } else {
    report.description = "all graphs without isolated vertices on at most " +
                         std::to_string(options.max_vertices) + " vertices";
    for (int n = 2; n <= options.max_vertices; ++n) for_each_graph(n, push);
  }
  flush();
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json sweep_to_json(const SweepReport& report, bool timing) {
  Json counterexamples = Json::array();
  for (const auto& c : report.counterexamples) {
    counterexamples.push_back({{"graph", graph_to_json(c.graph)},
                               {"graph_text", graph_to_text(c.graph)},
                               {"profile", profile_to_json(c.profile)},
                               {"k", c.k}});
  }
  Json out{{"schema_version", kSchemaVersion},
           {"kind", "conjecture-sweep"},
           {"class", report.description},
           {"field", report.field},
           {"instances", report.instances},
           {"counterexamples", counterexamples}};
  if (!report.profiles.empty()) {
    Json profiles = Json::array();
    for (const auto& [g, p] : report.profiles) {
      profiles.push_back({{"graph", graph_to_json(g)}, {"profile", profile_to_json(p)}});
    }
    out["profiles"] = profiles;
  }
  if (timing) out["seconds"] = report.seconds;
  return out;
}

}  // namespace normdepth
