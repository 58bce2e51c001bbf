#pragma once

// Seeded random ideals and graphs. Draws use raw std::mt19937_64 output
// reduced modulo the range so that streams are identical across standard
// library implementations.

#include <cstdint>
#include <random>

#include "normdepth/graph.hpp"
#include "normdepth/monomial.hpp"

namespace normdepth {

using Rng = std::mt19937_64;

/// Uniform in [lo, hi].
int draw_int(Rng& rng, int lo, int hi);

/// Nonzero ideal on at most `max_variables` variables with at most
/// `max_generators` generators, minimalized and relabeled so that it is
/// ambient-minimal.
MonomialIdeal random_ideal(Rng& rng, int max_variables, int max_generators);

/// Graph on exactly n >= 2 vertices, each edge present with probability 1/2,
/// redrawn until no vertex is isolated.
Graph random_graph(Rng& rng, int n);

}  // namespace normdepth
