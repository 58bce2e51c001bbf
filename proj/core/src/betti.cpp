#include "normdepth/betti.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "normdepth/stats.hpp"
#include "parallel.hpp"

namespace normdepth {

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t sum = 0;
  for (const auto& [key, v] : entries_) {
    if (key.first == i) sum += v;
  }
  return sum;
}

void BettiTable::add(int i, int j, std::int64_t value) {
  if (value == 0) return;
  auto& slot = entries_[{i, j}];
  slot += value;
  if (slot == 0) entries_.erase({i, j});
}

void BettiTable::merge(const BettiTable& other) {
  if (other.n_ != n_) throw std::invalid_argument("merging Betti tables of different rings");
  for (const auto& [key, v] : other.entries_) add(key.first, key.second, v);
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, v] : entries_) pd = std::max(pd, key.first);
  return pd;
}

namespace {

// Restricts `ideal` to a ring with n variables; the zero ideal stays as is.
MonomialIdeal in_ring(const MonomialIdeal& ideal, int n) {
  return ideal.is_zero() ? ideal : ideal.widened(n);
}

}  // namespace

BettiTable betti_hochster(const MonomialIdeal& ideal, FieldSpec field,
                          const HochsterOptions& options) {
  const int n = ideal.ambient();
  if (n > options.max_variables) {
    throw CapExceeded("Hochster computation over " + std::to_string(n) +
                      " variables exceeds the cap of " +
                      std::to_string(options.max_variables));
  }
  std::vector<Mask> gens;
  for (Monomial g : ideal.generators()) gens.push_back(g.bits());

  const std::size_t size = std::size_t{1} << n;
  // nonface[m] != 0 iff m contains a generator support.
  std::vector<std::uint8_t> nonface(size, 0);
  for (Mask g : gens) nonface[g] = 1;
  for (int b = 0; b < n; ++b) {
    const Mask bit = Mask{1} << b;
    for (Mask m = 0; m < size; ++m) {
      if ((m & bit) != 0 && nonface[m ^ bit] != 0) nonface[m] = 1;
    }
  }

  const unsigned workers = detail::resolve_threads(options.threads);
  std::vector<BettiTable> partial(workers, BettiTable(n));
  detail::parallel_chunks(size, workers, 256, [&](unsigned w, std::size_t begin,
                                                  std::size_t end) {
    std::vector<std::vector<Mask>> faces;
    for (Mask subset = begin; subset < end; ++subset) {
      // The restriction to `subset` is a cone unless the generators inside
      // it cover it.
      Mask covered = 0;
      for (Mask g : gens) {
        if ((g & ~subset) == 0) covered |= g;
      }
      if ((subset & ~covered) != 0) continue;

      const int width = std::popcount(subset);
      faces.assign(static_cast<std::size_t>(width) + 1, {});
      for (Mask s = 0;; s = (s - subset) & subset) {
        if (nonface[s] == 0) faces[static_cast<std::size_t>(std::popcount(s))].push_back(s);
        if (s == subset) break;
      }
      while (!faces.empty() && faces.back().empty()) faces.pop_back();
      const HomologyDims h = reduced_homology_of_faces(faces, field);
      for (const auto& [degree, dim] : h.dims) {
        partial[w].add(width - degree - 1, width, dim);
      }
    }
  });

  BettiTable table(n);
  for (const auto& p : partial) table.merge(p);
  return table;
}

BettiTable ideal_betti(const MonomialIdeal& ideal, FieldSpec field,
                       const HochsterOptions& options) {
  BettiTable out(ideal.ambient());
  if (ideal.is_zero()) return out;
  const BettiTable quotient = betti_hochster(ideal, field, options);
  for (const auto& [key, v] : quotient.entries()) {
    if (key.first >= 1) out.add(key.first - 1, key.second, v);
  }
  return out;
}

int projective_dimension(const MonomialIdeal& ideal, FieldSpec field,
                         const HochsterOptions& options) {
  return betti_hochster(ideal, field, options).projective_dimension();
}

int depth(const MonomialIdeal& ideal, FieldSpec field,
          const HochsterOptions& options) {
  return ideal.ambient() - projective_dimension(ideal, field, options);
}

bool GProfile::non_increasing() const noexcept {
  return std::is_sorted(g.rbegin(), g.rend());
}

GProfile g_profile(const MonomialIdeal& ideal, FieldSpec field,
                   const HochsterOptions& options) {
  if (ideal.is_zero()) {
    throw std::invalid_argument("normalized depth profile of the zero ideal");
  }
  if (!ideal.ambient_minimal()) {
    throw std::invalid_argument(
        "normalized depth profile needs the smallest ring containing the "
        "generators; got ambient " + std::to_string(ideal.ambient()) + " for " +
        ideal.to_string());
  }
  const int n = ideal.ambient();
  GProfile profile;
  profile.nu = monomial_grade(ideal);
  auto& counters = invariant_counters();
  for (int k = 1; k <= profile.nu; ++k) {
    const MonomialIdeal power = squarefree_power(ideal, k).widened(n);
    const int dk = initial_degree(power);
    const int dep = depth(power, field, options);
    const int g = dep - (dk - 1);
    profile.d.push_back(dk);
    profile.depth.push_back(dep);
    profile.g.push_back(g);
    counters.profile_values.fetch_add(1, std::memory_order_relaxed);
    if (g < 0) counters.negative_g.fetch_add(1, std::memory_order_relaxed);
  }
  counters.profiles.fetch_add(1, std::memory_order_relaxed);
  return profile;
}

std::vector<int> predict_adjoin_variable(std::span<const int> g,
                                         std::span<const int> d) {
  if (g.size() != d.size()) {
    throw std::invalid_argument("profile and initial degrees differ in length");
  }
  const int nu = static_cast<int>(g.size());
  std::vector<int> out;
  out.reserve(g.size() + 1);
  for (int k = 1; k <= nu + 1; ++k) {
    const std::size_t ku = static_cast<std::size_t>(k);
    const int d_prev = k == 1 ? 0 : d[ku - 2];
    const int via_power = k <= nu ? g[ku - 1] + d[ku - 1] - d_prev - 1 : kInfiniteDepth;
    const int via_previous = k >= 2 ? g[ku - 2] : kInfiniteDepth;
    out.push_back(std::min(via_power, via_previous));
  }
  return out;
}

LinearityReport has_linear_resolution(const MonomialIdeal& ideal, FieldSpec field,
                                      const HochsterOptions& options) {
  if (ideal.is_zero()) return {false, "zero ideal"};
  const int d = ideal.generators().front().degree();
  for (Monomial g : ideal.generators()) {
    if (g.degree() != d) {
      return {false, "not equigenerated: degrees " + std::to_string(d) + " and " +
                         std::to_string(g.degree())};
    }
  }
  const BettiTable betti = ideal_betti(ideal, field, options);
  for (const auto& [key, v] : betti.entries()) {
    if (key.second != key.first + d) {
      std::ostringstream os;
      os << "beta_{" << key.first << "," << key.second << "}(I) = " << v
         << " off the degree-" << d << " strand";
      return {false, os.str()};
    }
  }
  return {true, {}};
}

SplittingReport verify_betti_splitting(const MonomialIdeal& whole,
                                       const MonomialIdeal& first,
                                       const MonomialIdeal& second,
                                       FieldSpec field,
                                       const HochsterOptions& options) {
  std::vector<Mask> parts;
  for (Monomial g : first.generators()) parts.push_back(g.bits());
  for (Monomial g : second.generators()) parts.push_back(g.bits());
  std::vector<Mask> all;
  for (Monomial g : whole.generators()) all.push_back(g.bits());
  std::sort(parts.begin(), parts.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(parts.begin(), parts.end()) != parts.end() || parts != all) {
    throw std::invalid_argument(
        "generators of the whole ideal are not the disjoint union of the parts");
  }

  const int n = whole.ambient();
  const BettiTable bw = ideal_betti(whole, field, options);
  const BettiTable b1 = ideal_betti(in_ring(first, n), field, options);
  const BettiTable b2 = ideal_betti(in_ring(second, n), field, options);
  const BettiTable bc = ideal_betti(in_ring(intersection(first, second), n), field, options);

  std::vector<std::pair<int, int>> keys;
  for (const auto* t : {&bw, &b1, &b2}) {
    for (const auto& [key, v] : t->entries()) keys.push_back(key);
  }
  for (const auto& [key, v] : bc.entries()) keys.emplace_back(key.first + 1, key.second);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  SplittingReport report;
  for (const auto& [i, j] : keys) {
    const std::int64_t lhs = bw.at(i, j);
    const std::int64_t rhs = b1.at(i, j) + b2.at(i, j) + bc.at(i - 1, j);
    if (lhs != rhs) {
      report.holds = false;
      std::ostringstream os;
      os << "beta_{" << i << "," << j << "}: " << lhs << " != " << b1.at(i, j)
         << " + " << b2.at(i, j) << " + " << bc.at(i - 1, j);
      report.discrepancies.push_back(os.str());
    }
  }
  return report;
}

}  // namespace normdepth
