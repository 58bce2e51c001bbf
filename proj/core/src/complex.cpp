#include "normdepth/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "normdepth/stats.hpp"
#include "sparse_rank.hpp"

namespace normdepth {
namespace {

constexpr int kTableVariableCap = 26;

Mask ground_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

std::vector<Mask> maximal_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> kept;
  for (Mask s : sets) {
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [s](Mask k) { return (s & ~k) == 0; });
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void check_table_cap(int n) {
  if (n > kTableVariableCap) {
    throw CapExceeded("face tables are limited to " +
                      std::to_string(kTableVariableCap) + " vertices, got " +
                      std::to_string(n));
  }
}

// table[m] != 0 iff m is a face.
std::vector<std::uint8_t> face_table(const SimplicialComplex& complex) {
  const int n = complex.vertex_count();
  check_table_cap(n);
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (Mask f : complex.facets()) table[f] = 1;
  for (int b = 0; b < n; ++b) {
    const Mask bit = Mask{1} << b;
    for (Mask m = 0; m < table.size(); ++m) {
      if ((m & bit) != 0 && table[m] != 0) table[m ^ bit] = 1;
    }
  }
  return table;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p < 2 || p >= (1U << 31)) {
    throw std::invalid_argument("field characteristic must be 0 or a prime below 2^31");
  }
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      throw std::invalid_argument("characteristic " + std::to_string(p) +
                                  " is not prime");
    }
  }
  FieldSpec f;
  f.characteristic_ = p;
  return f;
}

std::string FieldSpec::name() const {
  return characteristic_ == 0 ? "QQ" : "ZZ/" + std::to_string(characteristic_);
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Mask> facets)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVariables) {
    throw std::invalid_argument("vertex count out of range: " +
                                std::to_string(vertex_count));
  }
  const Mask ground = ground_mask(vertex_count);
  for (Mask f : facets) {
    if ((f & ~ground) != 0) {
      throw std::invalid_argument("facet uses a vertex outside 1.." +
                                  std::to_string(vertex_count));
    }
  }
  facets_ = maximal_sets(std::move(facets));
}

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) {
  return SimplicialComplex(vertex_count, {});
}

SimplicialComplex SimplicialComplex::irrelevant(int vertex_count) {
  return SimplicialComplex(vertex_count, {Mask{0}});
}

SimplicialComplex SimplicialComplex::simplex(int vertex_count, Mask vertices) {
  return SimplicialComplex(vertex_count, {vertices});
}

Mask SimplicialComplex::vertex_support() const noexcept {
  Mask s = 0;
  for (Mask f : facets_) s |= f;
  return s;
}

bool SimplicialComplex::contains_face(Mask face) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(),
                     [face](Mask f) { return (face & ~f) == 0; });
}

std::vector<std::vector<Mask>> SimplicialComplex::faces_by_dimension() const {
  if (facets_.empty()) return {};
  std::vector<Mask> all;
  for (Mask f : facets_) {
    // Every subset of the facet, including the facet and {}.
    for (Mask s = f;; s = (s - 1) & f) {
      all.push_back(s);
      if (s == 0) break;
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  int top = 0;
  for (Mask f : facets_) top = std::max(top, std::popcount(f));
  std::vector<std::vector<Mask>> by_dim(static_cast<std::size_t>(top) + 1);
  for (Mask s : all) by_dim[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  return by_dim;
}

SimplicialComplex complex_from_nonfaces(int vertex_count,
                                        const std::vector<Mask>& nonfaces) {
  check_table_cap(vertex_count);
  if (std::find(nonfaces.begin(), nonfaces.end(), Mask{0}) != nonfaces.end()) {
    return SimplicialComplex::void_complex(vertex_count);
  }
  const std::size_t size = std::size_t{1} << vertex_count;
  std::vector<std::uint8_t> nonface(size, 0);
  for (Mask m : nonfaces) {
    if (m >= size) throw std::invalid_argument("non-face outside ground set");
    nonface[m] = 1;
  }
  for (int b = 0; b < vertex_count; ++b) {
    const Mask bit = Mask{1} << b;
    for (Mask m = 0; m < size; ++m) {
      if ((m & bit) != 0 && nonface[m ^ bit] != 0) nonface[m] = 1;
    }
  }
  std::vector<Mask> facets;
  for (Mask m = 0; m < size; ++m) {
    if (nonface[m] != 0) continue;
    bool maximal = true;
    for (int b = 0; b < vertex_count && maximal; ++b) {
      const Mask bit = Mask{1} << b;
      if ((m & bit) == 0 && nonface[m | bit] == 0) maximal = false;
    }
    if (maximal) facets.push_back(m);
  }
  return SimplicialComplex(vertex_count, std::move(facets));
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  std::vector<Mask> nonfaces;
  nonfaces.reserve(ideal.size());
  for (Monomial g : ideal.generators()) nonfaces.push_back(g.bits());
  return complex_from_nonfaces(ideal.ambient(), nonfaces);
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  const int n = complex.vertex_count();
  if (complex.is_void()) return minimalize({Monomial{}});
  const auto table = face_table(complex);
  std::vector<Monomial> minimal_nonfaces;
  for (Mask m = 0; m < table.size(); ++m) {
    if (table[m] != 0) continue;
    bool minimal = true;
    for (Mask b = m; b != 0 && minimal; b &= b - 1) {
      if (table[m & ~(b & (~b + 1))] == 0) minimal = false;
    }
    if (minimal) minimal_nonfaces.emplace_back(m);
  }
  MonomialIdeal out = minimalize(minimal_nonfaces);
  return out.is_zero() ? out : out.widened(n);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, Mask subset) {
  if (complex.is_void()) return complex;
  std::vector<Mask> facets;
  facets.reserve(complex.facets().size());
  for (Mask f : complex.facets()) facets.push_back(f & subset);
  return SimplicialComplex(complex.vertex_count(), std::move(facets));
}

HomologyDims reduced_homology_of_faces(
    const std::vector<std::vector<Mask>>& faces, FieldSpec field) {
  if (faces.empty() || faces.front().size() != 1 || faces.front().front() != 0) {
    throw std::domain_error("reduced homology is undefined for the void complex");
  }
  const std::size_t levels = faces.size();  // dimensions -1 .. levels-2
  // rank[l] = rank of the boundary map leaving level l (dimension l-1).
  std::vector<std::size_t> rank(levels + 1, 0);
  for (std::size_t l = 1; l < levels; ++l) {
    const auto& rows = faces[l - 1];
    const auto& cols = faces[l];
    std::vector<detail::SparseColumn> columns;
    columns.reserve(cols.size());
    for (Mask f : cols) {
      detail::SparseColumn col;
      int position = 0;
      for (Mask b = f; b != 0; b &= b - 1, ++position) {
        const Mask facet = f & ~(b & (~b + 1));
        const auto it = std::lower_bound(rows.begin(), rows.end(), facet);
        col.emplace_back(static_cast<int>(it - rows.begin()),
                         position % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
      columns.push_back(std::move(col));
    }
    rank[l] = detail::sparse_rank(columns, static_cast<int>(rows.size()), field);
  }

  HomologyDims out;
  std::int64_t euler_faces = 0;
  std::int64_t euler_homology = 0;
  for (std::size_t l = 0; l < levels; ++l) {
    const int degree = static_cast<int>(l) - 1;
    const auto f = static_cast<std::int64_t>(faces[l].size());
    const auto h = f - static_cast<std::int64_t>(rank[l]) -
                   static_cast<std::int64_t>(rank[l + 1]);
    const std::int64_t sign = (degree % 2 == 0) ? 1 : -1;
    euler_faces += sign * f;
    euler_homology += sign * h;
    if (h != 0) out.dims[degree] = h;
  }
  auto& counters = invariant_counters();
  counters.homology_calls.fetch_add(1, std::memory_order_relaxed);
  bool bad = euler_faces != euler_homology;
  for (const auto& [degree, h] : out.dims) bad = bad || h < 0;
  if (bad) counters.euler_violations.fetch_add(1, std::memory_order_relaxed);
  return out;
}

HomologyDims reduced_homology(const SimplicialComplex& complex, FieldSpec field) {
  if (complex.is_void()) {
    throw std::domain_error("reduced homology is undefined for the void complex");
  }
  return reduced_homology_of_faces(complex.faces_by_dimension(), field);
}

bool is_connected_complex(const SimplicialComplex& complex) {
  const Mask vertices = complex.vertex_support();
  if (vertices == 0) {
    throw std::domain_error("connectivity needs a complex with a vertex");
  }
  Mask reached = vertices & (~vertices + 1);
  Mask frontier = reached;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f : complex.facets()) {
      if ((f & frontier) != 0) next |= f;
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == vertices;
}

std::optional<int> cone_point(const SimplicialComplex& complex) {
  if (complex.is_void()) return std::nullopt;
  Mask common = ~Mask{0};
  for (Mask f : complex.facets()) common &= f;
  if (common == 0) return std::nullopt;
  return std::countr_zero(common) + 1;
}

}  // namespace normdepth
