#pragma once

// Graph enumeration and the non-increasing profile sweep.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "normdepth/betti.hpp"
#include "normdepth/graph.hpp"
#include "normdepth/io.hpp"

namespace normdepth {

inline constexpr int kExhaustiveSweepCap = 7;
inline constexpr int kSampledSweepCap = 16;

/// Calls `visit` on every labeled graph on {1..n} without isolated
/// vertices, in increasing order of the edge bitmask over pairs
/// (1,2), (1,3), ..., (n-1,n). Requires n <= 11.
void for_each_graph(int n, const std::function<void(const Graph&)>& visit);

/// Number of graphs for_each_graph(n, ...) visits.
std::uint64_t count_graphs(int n);

struct SweepOptions {
  int max_vertices = 5;
  /// When set, draw this many random graphs on exactly max_vertices vertices
  /// instead of enumerating every graph on 1..max_vertices vertices.
  std::optional<int> sample;
  std::uint64_t seed = 7;
  FieldSpec field = FieldSpec::rationals();
  unsigned threads = 1;
  bool keep_profiles = false;
};

struct SweepCounterexample {
  Graph graph;
  GProfile profile;
  /// First k with g(k+1) > g(k).
  int k = 0;
};

struct SweepReport {
  std::string description;
  std::string field;
  std::uint64_t instances = 0;
  std::vector<SweepCounterexample> counterexamples;
  std::vector<std::pair<Graph, GProfile>> profiles;
  double seconds = 0;
};

/// Throws CapExceeded past kExhaustiveSweepCap (or kSampledSweepCap when
/// sampling).
SweepReport conjecture_sweep(const SweepOptions& options);

/// Wall-clock time is included only when `timing` is set, so that reports
/// for identical options are byte-identical.
Json sweep_to_json(const SweepReport& report, bool timing = false);

}  // namespace normdepth
