#pragma once

// Squarefree monomials and squarefree monomial ideals.
//
// A squarefree monomial is identified with its support, stored as a bitmask
// over variables x1..x64 (bit i-1 <-> x_i). Ideals keep their minimal
// generating set in a canonical order (degree, then lexicographic support).

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace normdepth {

using Mask = std::uint64_t;

inline constexpr int kMaxVariables = 64;

/// Thrown when an input exceeds a configured computational cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(Mask support) : bits_(support) {}

  /// Builds x_{i1} x_{i2} ... from 1-based variable indices.
  static Monomial from_indices(std::span<const int> indices);
  static Monomial from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
  }
  static Monomial variable(int index);

  constexpr Mask bits() const noexcept { return bits_; }
  constexpr int degree() const noexcept { return std::popcount(bits_); }
  constexpr bool is_one() const noexcept { return bits_ == 0; }
  constexpr bool divides(Monomial other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool coprime(Monomial other) const noexcept {
    return (bits_ & other.bits_) == 0;
  }
  constexpr bool has_variable(int index) const noexcept {
    return index >= 1 && index <= kMaxVariables &&
           ((bits_ >> (index - 1)) & 1U) != 0;
  }
  /// lcm of two squarefree monomials; equals the product when coprime.
  constexpr Monomial lcm(Monomial other) const noexcept {
    return Monomial(bits_ | other.bits_);
  }
  constexpr Monomial gcd(Monomial other) const noexcept {
    return Monomial(bits_ & other.bits_);
  }
  /// u / gcd(u, v).
  constexpr Monomial strip(Monomial other) const noexcept {
    return Monomial(bits_ & ~other.bits_);
  }
  /// Highest variable index present, 0 for the unit monomial.
  constexpr int max_index() const noexcept {
    return bits_ == 0 ? 0 : kMaxVariables - std::countl_zero(bits_);
  }

  std::vector<int> indices() const;
  /// Renders as "x1x2x5"; the unit monomial renders as "1".
  std::string to_string() const;

  constexpr bool operator==(const Monomial&) const = default;

 private:
  Mask bits_ = 0;
};

/// Canonical generator order: by degree, then lexicographic on sorted indices.
bool canonical_less(Monomial a, Monomial b) noexcept;

class MonomialIdeal {
 public:
  /// The zero ideal (no generators, ambient 0).
  MonomialIdeal() = default;

  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  int ambient() const noexcept { return ambient_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// Union of the generator supports.
  Mask support() const noexcept;
  /// True when the generator supports cover exactly x1..x_ambient.
  bool ambient_minimal() const noexcept;
  bool contains(Monomial u) const noexcept;

  /// Same generators over a polynomial ring with n >= ambient() variables.
  MonomialIdeal widened(int n) const;

  std::string to_string() const;

  bool operator==(const MonomialIdeal&) const = default;

  friend MonomialIdeal minimalize(std::span<const Monomial> monomials);

 private:
  MonomialIdeal(std::vector<Monomial> gens, int ambient)
      : gens_(std::move(gens)), ambient_(ambient) {}

  std::vector<Monomial> gens_;
  int ambient_ = 0;
};

/// Ideal generated by `monomials`, keeping only the minimal elements.
/// The ambient ring is x1..x_m with m the largest variable index used.
MonomialIdeal minimalize(std::span<const Monomial> monomials);
inline MonomialIdeal minimalize(std::initializer_list<Monomial> monomials) {
  return minimalize(std::span<const Monomial>(monomials.begin(), monomials.size()));
}

/// Maximum number of pairwise coprime generators (the monomial grade).
/// Throws std::domain_error on the zero ideal.
int monomial_grade(const MonomialIdeal& ideal);

/// k-th squarefree power: products of k pairwise coprime generators.
/// Returns the zero ideal once k exceeds the monomial grade. The result's
/// ambient is re-derived from its own generators; callers measuring depth in
/// the original ring widen it back.
MonomialIdeal squarefree_power(const MonomialIdeal& ideal, int k);

/// Minimum generator degree. Throws std::domain_error on the zero ideal.
int initial_degree(const MonomialIdeal& ideal);

/// Relabels x_i -> x_{i+offset}.
MonomialIdeal shifted(const MonomialIdeal& ideal, int offset);

/// Product I1 * I2' where I2' is I2 relabeled by `offset`. The relabeled
/// supports must be disjoint from those of I1.
MonomialIdeal product_disjoint(const MonomialIdeal& first,
                               const MonomialIdeal& second, int offset);
/// Product with the default relabeling offset first.ambient().
MonomialIdeal product_disjoint(const MonomialIdeal& first,
                               const MonomialIdeal& second);

/// Product of two ideals whose generator supports are already disjoint.
MonomialIdeal product(const MonomialIdeal& first, const MonomialIdeal& second);

/// (I, x_{n+1}) over n+1 variables.
MonomialIdeal adjoin_variable(const MonomialIdeal& ideal);

/// I + J.
MonomialIdeal ideal_sum(const MonomialIdeal& first, const MonomialIdeal& second);

/// I intersect J, generated by pairwise lcms.
MonomialIdeal intersection(const MonomialIdeal& first,
                           const MonomialIdeal& second);

/// u * I.
MonomialIdeal multiply(const MonomialIdeal& ideal, Monomial u);

/// Relabels the used variables to x1..x_m in increasing order. `old_index`,
/// when given, receives the original index of each new variable.
MonomialIdeal compacted(const MonomialIdeal& ideal,
                        std::vector<int>* old_index = nullptr);

}  // namespace normdepth
