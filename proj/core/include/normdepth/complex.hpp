#pragma once

// Simplicial complexes on a ground set {1..n}, the Stanley-Reisner
// correspondence, and reduced simplicial homology over a field.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "normdepth/monomial.hpp"

namespace normdepth {

/// Coefficient field: characteristic 0 (rationals) or a prime p.
class FieldSpec {
 public:
  constexpr FieldSpec() = default;

  static constexpr FieldSpec rationals() { return FieldSpec{}; }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);

  constexpr std::uint32_t characteristic() const noexcept { return characteristic_; }
  constexpr bool is_rational() const noexcept { return characteristic_ == 0; }
  std::string name() const;

  constexpr bool operator==(const FieldSpec&) const = default;

 private:
  std::uint32_t characteristic_ = 0;
};

/// Faces are stored by their facets; facets always form an antichain.
///
/// The void complex has no faces at all; the irrelevant complex has the
/// single face {} (so its only facet is the empty mask).
class SimplicialComplex {
 public:
  /// Void complex on no vertices.
  SimplicialComplex() = default;
  /// Keeps the maximal sets among `facets`. Every facet must lie in {1..n}.
  SimplicialComplex(int vertex_count, std::vector<Mask> facets);

  static SimplicialComplex void_complex(int vertex_count);
  static SimplicialComplex irrelevant(int vertex_count);
  static SimplicialComplex simplex(int vertex_count, Mask vertices);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Mask>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  bool is_irrelevant() const noexcept {
    return facets_.size() == 1 && facets_.front() == 0;
  }
  /// Union of the facets.
  Mask vertex_support() const noexcept;
  bool contains_face(Mask face) const noexcept;

  /// All faces grouped by dimension: entry d+1 holds the (d)-faces in
  /// increasing mask order, starting with {} at dimension -1.
  std::vector<std::vector<Mask>> faces_by_dimension() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Mask> facets_;
};

/// Reduced homology dimensions keyed by degree (>= -1); zeros are omitted.
struct HomologyDims {
  std::map<int, std::int64_t> dims;

  std::int64_t at(int degree) const {
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
  }
  bool acyclic() const noexcept { return dims.empty(); }
  bool operator==(const HomologyDims&) const = default;
};

/// Stanley-Reisner complex: faces are the sets containing no generator
/// support. Ground set is {1..ideal.ambient()}.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

/// Ideal generated by the minimal non-faces of `complex`.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// Complex with the given minimal non-faces on {1..vertex_count}.
/// Throws CapExceeded above 26 vertices.
SimplicialComplex complex_from_nonfaces(int vertex_count,
                                        const std::vector<Mask>& nonfaces);

/// Restriction to faces inside `subset`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, Mask subset);

/// dim H~_i(complex; field) for all i. Throws std::domain_error on the void
/// complex.
HomologyDims reduced_homology(const SimplicialComplex& complex,
                              FieldSpec field = FieldSpec::rationals());

/// Reduced homology of a complex given directly by its face lists, laid out
/// as in SimplicialComplex::faces_by_dimension().
HomologyDims reduced_homology_of_faces(
    const std::vector<std::vector<Mask>>& faces_by_dimension, FieldSpec field);

/// Connectivity of the 1-skeleton over the vertices that are faces.
/// Throws std::domain_error when the complex has no vertex.
bool is_connected_complex(const SimplicialComplex& complex);

/// Lowest-index vertex lying in every facet, if any.
std::optional<int> cone_point(const SimplicialComplex& complex);

}  // namespace normdepth
