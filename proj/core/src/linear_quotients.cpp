#include <algorithm>
#include <bit>
#include <cstdint>

#include "normdepth/betti.hpp"

namespace normdepth {
namespace {

// (prefix) : u is generated by variables iff every v/gcd(v,u) is divisible
// by some v'/gcd(v',u) that is a single variable.
bool colon_is_variable_generated(std::span<const Mask> prefix, Mask u) {
  Mask singles = 0;
  for (Mask v : prefix) {
    const Mask rest = v & ~u;
    if (std::popcount(rest) == 1) singles |= rest;
  }
  return std::all_of(prefix.begin(), prefix.end(), [&](Mask v) {
    return ((v & ~u) & singles) != 0;
  });
}

class OrderSearch {
 public:
  explicit OrderSearch(std::vector<Mask> gens)
      : gens_(std::move(gens)),
        state_(std::size_t{1} << gens_.size(), kUnknown),
        last_(std::size_t{1} << gens_.size(), -1) {}

  bool admissible(std::uint32_t subset) {
    auto& st = state_[subset];
    if (st != kUnknown) return st == kYes;
    if (std::popcount(subset) <= 1) {
      if (subset != 0) last_[subset] = std::countr_zero(subset);
      st = kYes;
      return true;
    }
    st = kNo;
    std::vector<Mask> prefix;
    for (std::uint32_t b = subset; b != 0; b &= b - 1) {
      const int u = std::countr_zero(b);
      const std::uint32_t rest = subset & ~(std::uint32_t{1} << u);
      prefix.clear();
      for (std::uint32_t r = rest; r != 0; r &= r - 1) {
        prefix.push_back(gens_[static_cast<std::size_t>(std::countr_zero(r))]);
      }
      if (!colon_is_variable_generated(prefix, gens_[static_cast<std::size_t>(u)])) continue;
      if (admissible(rest)) {
        state_[subset] = kYes;
        last_[subset] = u;
        return true;
      }
    }
    return false;
  }

  std::vector<int> order(std::uint32_t subset) const {
    std::vector<int> out;
    while (subset != 0) {
      const int u = last_[subset];
      out.push_back(u);
      subset &= ~(std::uint32_t{1} << u);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr std::int8_t kUnknown = -1;
  static constexpr std::int8_t kNo = 0;
  static constexpr std::int8_t kYes = 1;

  std::vector<Mask> gens_;
  std::vector<std::int8_t> state_;
  std::vector<int> last_;
};

}  // namespace

bool has_linear_quotients(std::span<const Monomial> order) {
  std::vector<Mask> prefix;
  prefix.reserve(order.size());
  for (Monomial u : order) {
    if (!prefix.empty() && !colon_is_variable_generated(prefix, u.bits())) return false;
    prefix.push_back(u.bits());
  }
  return true;
}

std::optional<std::vector<Monomial>> linear_quotients_order(
    const MonomialIdeal& ideal, int max_generators) {
  const auto s = static_cast<int>(ideal.size());
  if (s > max_generators || s > 30) {
    throw CapExceeded("linear quotients search over " + std::to_string(s) +
                      " generators exceeds the cap of " +
                      std::to_string(std::min(max_generators, 30)));
  }
  std::vector<Mask> gens;
  for (Monomial g : ideal.generators()) gens.push_back(g.bits());
  OrderSearch search(gens);
  const std::uint32_t full = s == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << s) - 1);
  if (!search.admissible(full)) return std::nullopt;
  std::vector<Monomial> out;
  for (int idx : search.order(full)) out.push_back(ideal.generators()[static_cast<std::size_t>(idx)]);
  return out;
}

}  // namespace normdepth
