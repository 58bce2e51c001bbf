#pragma once

// Named verification suites. Each suite runs a family of exact checks and
// returns per-check case and failure counts plus suite-specific data.
//
//   example36     the six-vertex cut graph, its powers, orders and witnesses
//   thm32-sweep   cochordal graphs: cut vertex <=> g(1) = 1 <=> g = (1,0,...),
//                 special matchings, zero-depth witnesses, beta_{n-2} identity
//   eq31          the beta_{n-2} identity alone
//   thm21         profile additivity under disjoint products
//   prop24        profile of (I, x) and its Betti splittings
//   splitting     Betti splittings J^[k] = I^[k] + x I^[k-1]
//   lemma39       profile after adjoining a disjoint edge
//   thm38         vanishing tail graphs
//   lemma42       step profile ideals
//   lemma43       all-ones profile ideals
//   thm41         realization of non-increasing targets
//   oracle        Hochster against Taylor on random ideals
//   properties    structural invariants and the global invariant counters
//   conjecture    non-increasing profiles on all small graphs

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normdepth/complex.hpp"
#include "normdepth/io.hpp"

namespace normdepth {

struct SuiteOptions {
  /// Suite default when unset.
  std::optional<int> max_vertices;
  std::optional<int> trials;
  std::uint64_t seed = 7;
  /// Overrides the default field (the oracle suite adds it to 0 and 2).
  std::optional<FieldSpec> field;
  unsigned threads = 1;
};

struct SuiteCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// First few failing cases.
  std::vector<std::string> samples;

  bool passed() const noexcept { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  Json data = Json::object();

  bool passed() const noexcept;
  const SuiteCheck* find(std::string_view name) const noexcept;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite and CapExceeded when an
/// option exceeds the suite's limits.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

Json suite_to_json(const SuiteReport& report);

}  // namespace normdepth
