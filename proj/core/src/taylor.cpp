// Taylor-complex Betti numbers. Deliberately independent of the Hochster
// path: no simplicial complexes and its own dense elimination.

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <stdexcept>

#include "normdepth/betti.hpp"

namespace normdepth {
namespace {

using BigInt = boost::multiprecision::cpp_int;
using Dense = std::vector<std::vector<std::int64_t>>;

struct Overflow {};

std::size_t dense_rank_mod_p(Dense m, std::int64_t p) {
  for (auto& row : m) {
    for (auto& v : row) v = ((v % p) + p) % p;
  }
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    // Fermat inverse.
    std::int64_t inv = 1, base = m[rank][c], e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (auto& v : m[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::int64_t f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

template <class T>
T mul(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  } else {
    return a * b;
  }
}

template <class T>
T sub(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  } else {
    return a - b;
  }
}

template <class T>
T absolute(const T& v) {
  return v < 0 ? T(-v) : v;
}

template <class T>
T gcd_of(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    return std::gcd(a, b);
  } else {
    return boost::multiprecision::gcd(a, b);
  }
}

// Integer row echelon form; each eliminated row is divided by its content.
template <class T>
std::size_t dense_rank_integer(std::vector<std::vector<T>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const T a = m[r][c];
      const T b = m[rank][c];
      const T g = gcd_of(absolute(a), absolute(b));
      const T fa = a / g;
      const T fb = b / g;
      T content = 0;
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] = sub(mul(fb, m[r][k]), mul(fa, m[rank][k]));
        content = gcd_of(content, absolute(m[r][k]));
      }
      if (content > 1) {
        for (std::size_t k = c; k < cols; ++k) m[r][k] /= content;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t dense_rank(const Dense& m, FieldSpec field) {
  if (m.empty() || m.front().empty()) return 0;
  if (!field.is_rational()) {
    return dense_rank_mod_p(m, static_cast<std::int64_t>(field.characteristic()));
  }
  try {
    return dense_rank_integer<std::int64_t>(m);
  } catch (const Overflow&) {
    std::vector<std::vector<BigInt>> big(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
      big[r].assign(m[r].begin(), m[r].end());
    }
    return dense_rank_integer<BigInt>(std::move(big));
  }
}

}  // namespace

BettiTable betti_taylor(const MonomialIdeal& ideal, FieldSpec field,
                        const TaylorOptions& options) {
  const auto s = static_cast<int>(ideal.size());
  if (s > options.max_generators) {
    throw CapExceeded("Taylor complex on " + std::to_string(s) +
                      " generators exceeds the cap of " +
                      std::to_string(options.max_generators));
  }
  const auto& gens = ideal.generators();
  const std::size_t subsets = std::size_t{1} << s;

  // lcm of each subset of generators.
  std::vector<Mask> lcm(subsets, 0);
  for (std::size_t sigma = 1; sigma < subsets; ++sigma) {
    const int low = std::countr_zero(sigma);
    lcm[sigma] = lcm[sigma & (sigma - 1)] | gens[static_cast<std::size_t>(low)].bits();
  }

  // After tensoring with the field, the differential keeps exactly the faces
  // whose removal preserves the lcm, so the complex splits by lcm.
  std::map<Mask, std::vector<std::uint32_t>> strands;
  for (std::size_t sigma = 0; sigma < subsets; ++sigma) {
    strands[lcm[sigma]].push_back(static_cast<std::uint32_t>(sigma));
  }

  BettiTable table(ideal.ambient());
  std::vector<int> position(subsets, -1);
  for (const auto& [m, members] : strands) {
    int top = 0;
    for (auto sigma : members) top = std::max(top, std::popcount(sigma));
    std::vector<std::vector<std::uint32_t>> level(static_cast<std::size_t>(top) + 1);
    for (auto sigma : members) {
      auto& bucket = level[static_cast<std::size_t>(std::popcount(sigma))];
      position[sigma] = static_cast<int>(bucket.size());
      bucket.push_back(sigma);
    }
    // rank_of[i] = rank of the differential from level i to level i-1.
    std::vector<std::size_t> rank_of(level.size() + 1, 0);
    for (std::size_t i = 1; i < level.size(); ++i) {
      if (level[i].empty() || level[i - 1].empty()) continue;
      Dense d(level[i - 1].size(), std::vector<std::int64_t>(level[i].size(), 0));
      for (std::size_t c = 0; c < level[i].size(); ++c) {
        const std::uint32_t sigma = level[i][c];
        int sign_position = 0;
        for (std::uint32_t b = sigma; b != 0; b &= b - 1, ++sign_position) {
          const std::uint32_t face = sigma & ~(b & (~b + 1));
          if (lcm[face] != m) continue;
          d[static_cast<std::size_t>(position[face])][c] = sign_position % 2 == 0 ? 1 : -1;
        }
      }
      rank_of[i] = dense_rank(d, field);
    }
    const int degree = std::popcount(m);
    for (std::size_t i = 0; i < level.size(); ++i) {
      const auto h = static_cast<std::int64_t>(level[i].size()) -
                     static_cast<std::int64_t>(rank_of[i]) -
                     static_cast<std::int64_t>(rank_of[i + 1]);
      table.add(static_cast<int>(i), degree, h);
    }
  }
  return table;
}

}  // namespace normdepth
