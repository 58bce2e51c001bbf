#include "normdepth/stats.hpp"

namespace normdepth {

InvariantCounters& invariant_counters() noexcept {
  static InvariantCounters counters;
  return counters;
}

}  // namespace normdepth
