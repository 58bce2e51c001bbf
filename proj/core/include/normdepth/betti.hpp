#pragma once

// Graded Betti numbers of S/I for squarefree monomial ideals, depth and the
// normalized depth profile, linear resolutions and linear quotients, and
// Betti splittings.

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "normdepth/complex.hpp"
#include "normdepth/monomial.hpp"

namespace normdepth {

/// beta_{i,j}(S/I) over a polynomial ring in n variables. Only nonzero
/// entries are stored.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(int n) : n_(n) {}

  int ambient() const noexcept { return n_; }
  const std::map<std::pair<int, int>, std::int64_t>& entries() const noexcept {
    return entries_;
  }

  std::int64_t at(int i, int j) const;
  /// Total Betti number beta_i = sum_j beta_{i,j}.
  std::int64_t total(int i) const;
  void add(int i, int j, std::int64_t value);
  /// Entrywise sum; both tables must share the ambient.
  void merge(const BettiTable& other);

  /// Largest i with a nonzero entry.
  int projective_dimension() const;

  bool operator==(const BettiTable&) const = default;

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

struct HochsterOptions {
  int max_variables = 22;
  /// Worker threads for the per-subset fan-out; 0 picks the hardware count.
  unsigned threads = 1;
};

/// Betti numbers from reduced homology of induced subcomplexes of the
/// Stanley-Reisner complex. Subsets whose restriction is a cone are skipped.
BettiTable betti_hochster(const MonomialIdeal& ideal,
                          FieldSpec field = FieldSpec::rationals(),
                          const HochsterOptions& options = {});

struct TaylorOptions {
  int max_generators = 16;
};

/// Betti numbers from the Taylor complex tensored with the field, split
/// into lcm strands. Shares no code with betti_hochster.
BettiTable betti_taylor(const MonomialIdeal& ideal,
                        FieldSpec field = FieldSpec::rationals(),
                        const TaylorOptions& options = {});

/// Betti numbers of the ideal itself: beta_{i,j}(I) = beta_{i+1,j}(S/I).
/// The zero ideal has no Betti numbers.
BettiTable ideal_betti(const MonomialIdeal& ideal, FieldSpec field,
                       const HochsterOptions& options = {});

int projective_dimension(const MonomialIdeal& ideal,
                         FieldSpec field = FieldSpec::rationals(),
                         const HochsterOptions& options = {});
/// Auslander-Buchsbaum: depth(S/I) = n - pd(S/I).
int depth(const MonomialIdeal& ideal, FieldSpec field = FieldSpec::rationals(),
          const HochsterOptions& options = {});

/// Normalized depth profile g(k) = depth(S/I^[k]) - (d_k - 1), k = 1..nu.
struct GProfile {
  int nu = 0;
  std::vector<int> d;
  std::vector<int> depth;
  std::vector<int> g;

  bool non_increasing() const noexcept;
  bool operator==(const GProfile&) const = default;
};

/// Requires a nonzero ambient-minimal ideal (std::invalid_argument
/// otherwise). Powers are measured in the original ring.
GProfile g_profile(const MonomialIdeal& ideal,
                   FieldSpec field = FieldSpec::rationals(),
                   const HochsterOptions& options = {});

/// Sentinel for +infinity in profile recursions.
inline constexpr int kInfiniteDepth = std::numeric_limits<int>::max();

/// Profile of (I, x) predicted from the profile and initial degrees of I via
/// g_J(k) = min{g_I(k) + d_k - d_{k-1} - 1, g_I(k-1)} with g_I(0) and
/// g_I(nu+1) infinite and d_0 = 0. Returns nu+1 values.
std::vector<int> predict_adjoin_variable(std::span<const int> g,
                                         std::span<const int> d);

struct LinearityReport {
  bool linear = false;
  std::string reason;
};

/// Whether I has a linear resolution, i.e. beta_{i,j}(I) = 0 for j != i + d.
/// Ideals that are not equigenerated report false with a reason.
LinearityReport has_linear_resolution(const MonomialIdeal& ideal,
                                      FieldSpec field = FieldSpec::rationals(),
                                      const HochsterOptions& options = {});

/// True when each colon (u_1..u_{j-1}) : u_j of the given generator order is
/// generated by variables.
bool has_linear_quotients(std::span<const Monomial> order);

/// Searches all orders by dynamic programming over generator subsets and
/// returns an admissible one, or nullopt. Throws CapExceeded above
/// `max_generators`.
std::optional<std::vector<Monomial>> linear_quotients_order(
    const MonomialIdeal& ideal, int max_generators = 20);

struct SplittingReport {
  bool holds = true;
  std::vector<std::string> discrepancies;
};

/// Checks beta_{i,j}(I) = beta_{i,j}(I1) + beta_{i,j}(I2) +
/// beta_{i-1,j}(I1 cap I2) for all i, j. G(I) must be the disjoint union of
/// G(I1) and G(I2) (std::invalid_argument otherwise). All Betti numbers are
/// computed in the ambient ring of `whole`.
SplittingReport verify_betti_splitting(const MonomialIdeal& whole,
                                       const MonomialIdeal& first,
                                       const MonomialIdeal& second,
                                       FieldSpec field = FieldSpec::rationals(),
                                       const HochsterOptions& options = {});

}  // namespace normdepth
