#include "sparse_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>
#include <type_traits>

namespace normdepth::detail {
namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

template <class T>
using Column = std::vector<std::pair<int, T>>;

template <class T>
T abs_value(const T& v) {
  return v < 0 ? T(-v) : v;
}

template <class T>
T gcd_value(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return boost::multiprecision::gcd(a, b);
  } else {
    return std::gcd(a, b);
  }
}

// col <- b*col - a*pivot where a, b are the two lowest entries, followed by
// division by the content so entries stay small.
template <class T>
void eliminate_integer(Column<T>& col, const Column<T>& pivot) {
  const T a = col.back().second;
  const T b = pivot.back().second;
  const T g = gcd_value(abs_value(a), abs_value(b));
  const T fa = a / g;
  const T fb = b / g;
  Column<T> out;
  out.reserve(col.size() + pivot.size());
  auto i = col.begin();
  auto j = pivot.begin();
  auto scaled = [](const T& x, const T& y) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
      return checked_mul(x, y);
    } else {
      return T(x * y);
    }
  };
  auto minus = [](const T& x, const T& y) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
      return checked_sub(x, y);
    } else {
      return T(x - y);
    }
  };
  while (i != col.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != col.end() && i->first < j->first)) {
      out.emplace_back(i->first, scaled(fb, i->second));
      ++i;
    } else if (i == col.end() || j->first < i->first) {
      out.emplace_back(j->first, minus(T(0), scaled(fa, j->second)));
      ++j;
    } else {
      T v = minus(scaled(fb, i->second), scaled(fa, j->second));
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  T content = 0;
  for (const auto& [row, v] : out) content = gcd_value(content, abs_value(v));
  if (content > 1) {
    for (auto& entry : out) entry.second /= content;
  }
  col = std::move(out);
}

template <class T>
std::size_t reduce_integer(std::vector<Column<T>> cols, int row_count) {
  std::vector<int> pivot_of(static_cast<std::size_t>(row_count), -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto& col = cols[c];
    while (!col.empty()) {
      const int low = col.back().first;
      const int p = pivot_of[static_cast<std::size_t>(low)];
      if (p < 0) {
        pivot_of[static_cast<std::size_t>(low)] = static_cast<int>(c);
        ++rank;
        break;
      }
      eliminate_integer(col, cols[static_cast<std::size_t>(p)]);
    }
  }
  return rank;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  // Extended Euclid; p prime and a nonzero mod p.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? t + p : t;
}

std::size_t reduce_mod_p(const std::vector<SparseColumn>& input, int row_count,
                         std::int64_t p) {
  std::vector<SparseColumn> cols;
  cols.reserve(input.size());
  for (const auto& col : input) {
    SparseColumn c;
    for (const auto& [row, v] : col) {
      const std::int64_t m = ((v % p) + p) % p;
      if (m != 0) c.emplace_back(row, m);
    }
    cols.push_back(std::move(c));
  }
  std::vector<int> pivot_of(static_cast<std::size_t>(row_count), -1);
  std::size_t rank = 0;
  SparseColumn out;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto& col = cols[c];
    while (!col.empty()) {
      const int low = col.back().first;
      const int pc = pivot_of[static_cast<std::size_t>(low)];
      if (pc < 0) {
        pivot_of[static_cast<std::size_t>(low)] = static_cast<int>(c);
        ++rank;
        break;
      }
      const auto& pivot = cols[static_cast<std::size_t>(pc)];
      const std::int64_t factor =
          col.back().second * inverse_mod(pivot.back().second, p) % p;
      out.clear();
      auto i = col.begin();
      auto j = pivot.begin();
      while (i != col.end() || j != pivot.end()) {
        if (j == pivot.end() || (i != col.end() && i->first < j->first)) {
          out.push_back(*i++);
        } else if (i == col.end() || j->first < i->first) {
          out.emplace_back(j->first, (p - factor * j->second % p) % p);
          ++j;
        } else {
          const std::int64_t v = ((i->second - factor * j->second) % p + p) % p;
          if (v != 0) out.emplace_back(i->first, v);
          ++i;
          ++j;
        }
      }
      col.swap(out);
    }
  }
  return rank;
}

}  // namespace

std::size_t sparse_rank(const std::vector<SparseColumn>& columns, int row_count,
                        FieldSpec field) {
  if (!field.is_rational()) {
    return reduce_mod_p(columns, row_count,
                        static_cast<std::int64_t>(field.characteristic()));
  }
  try {
    std::vector<Column<std::int64_t>> cols(columns.begin(), columns.end());
    return reduce_integer(std::move(cols), row_count);
  } catch (const Overflow&) {
    std::vector<Column<BigInt>> cols;
    cols.reserve(columns.size());
    for (const auto& col : columns) {
      Column<BigInt> c;
      c.reserve(col.size());
      for (const auto& [row, v] : col) c.emplace_back(row, BigInt(v));
      cols.push_back(std::move(c));
    }
    return reduce_integer(std::move(cols), row_count);
  }
}

}  // namespace normdepth::detail
