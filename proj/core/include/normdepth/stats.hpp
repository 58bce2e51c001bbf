#pragma once

// Process-wide invariant counters. Every homology computation checks the
// Euler characteristic identity and every normalized depth profile checks
// g >= 0; violations are counted here rather than thrown so that sweeps can
// report them.

#include <atomic>
#include <cstdint>

namespace normdepth {

struct InvariantCounters {
  std::atomic<std::uint64_t> homology_calls{0};
  std::atomic<std::uint64_t> euler_violations{0};
  std::atomic<std::uint64_t> profiles{0};
  std::atomic<std::uint64_t> profile_values{0};
  std::atomic<std::uint64_t> negative_g{0};

  void reset() noexcept {
    homology_calls = 0;
    euler_violations = 0;
    profiles = 0;
    profile_values = 0;
    negative_g = 0;
  }
};

InvariantCounters& invariant_counters() noexcept;

}  // namespace normdepth
