#include "normdepth/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace normdepth {

Monomial Monomial::variable(int index) {
  if (index < 1 || index > kMaxVariables) {
    throw std::out_of_range("variable index " + std::to_string(index) +
                            " outside 1.." + std::to_string(kMaxVariables));
  }
  return Monomial(Mask{1} << (index - 1));
}

Monomial Monomial::from_indices(std::span<const int> indices) {
  Mask bits = 0;
  for (int i : indices) bits |= variable(i).bits();
  return Monomial(bits);
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string Monomial::to_string() const {
  if (bits_ == 0) return "1";
  std::string out;
  for (int i : indices()) out += "x" + std::to_string(i);
  return out;
}

bool canonical_less(Monomial a, Monomial b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Lexicographic on ascending index lists: the first differing index decides.
  const Mask diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const Mask lowest = diff & (~diff + 1);
  return (a.bits() & lowest) != 0;
}

Mask MonomialIdeal::support() const noexcept {
  Mask s = 0;
  for (const auto& g : gens_) s |= g.bits();
  return s;
}

bool MonomialIdeal::ambient_minimal() const noexcept {
  if (ambient_ == 0) return gens_.empty();
  const Mask full = ambient_ == 64 ? ~Mask{0} : (Mask{1} << ambient_) - 1;
  return support() == full;
}

bool MonomialIdeal::contains(Monomial u) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(),
                     [u](Monomial g) { return g.divides(u); });
}

MonomialIdeal MonomialIdeal::widened(int n) const {
  if (gens_.empty()) {
    if (n != 0) throw std::invalid_argument("the zero ideal has ambient 0");
    return *this;
  }
  const int needed = std::max_element(gens_.begin(), gens_.end(),
                                      [](Monomial a, Monomial b) {
                                        return a.max_index() < b.max_index();
                                      })->max_index();
  if (n < needed || n > kMaxVariables) {
    throw std::invalid_argument("cannot place ideal using x" +
                                std::to_string(needed) + " in " +
                                std::to_string(n) + " variables");
  }
  return MonomialIdeal(gens_, n);
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != 0) os << ", ";
    os << gens_[i].to_string();
  }
  os << ')';
  return os.str();
}

MonomialIdeal minimalize(std::span<const Monomial> monomials) {
  std::vector<Monomial> sorted(monomials.begin(), monomials.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Canonical order lists lower degrees first, so any divisor of an element
  // precedes it.
  std::vector<Monomial> kept;
  int ambient = 0;
  for (Monomial m : sorted) {
    const bool redundant = std::any_of(kept.begin(), kept.end(),
                                       [m](Monomial g) { return g.divides(m); });
    if (!redundant) {
      kept.push_back(m);
      ambient = std::max(ambient, m.max_index());
    }
  }
  return MonomialIdeal(std::move(kept), ambient);
}

namespace {

class GradeSearch {
 public:
  explicit GradeSearch(std::vector<Monomial> gens) : gens_(std::move(gens)) {
    std::sort(gens_.begin(), gens_.end(), [](Monomial a, Monomial b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a.bits() < b.bits();
    });
    // Suffix minima of degrees for the degree-sum bound.
    min_degree_from_.assign(gens_.size() + 1, kMaxVariables + 1);
    for (std::size_t i = gens_.size(); i-- > 0;) {
      min_degree_from_[i] = std::min(min_degree_from_[i + 1], gens_[i].degree());
    }
  }

  int run() {
    // Greedy lower bound over the degree-sorted list.
    Mask used = 0;
    for (Monomial g : gens_) {
      if ((g.bits() & used) == 0) {
        used |= g.bits();
        ++best_;
      }
    }
    Mask all = 0;
    for (Monomial g : gens_) all |= g.bits();
    all_ = all;
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(std::size_t from, Mask used, int count) {
    if (count > best_) best_ = count;
    if (from >= gens_.size()) return;
    const int free_vars = std::popcount(all_ & ~used);
    const int by_degree = free_vars / min_degree_from_[from];
    const int by_count = static_cast<int>(gens_.size() - from);
    if (count + std::min(by_degree, by_count) <= best_) return;
    for (std::size_t i = from; i < gens_.size(); ++i) {
      if ((gens_[i].bits() & used) != 0) continue;
      search(i + 1, used | gens_[i].bits(), count + 1);
      const int rest_free = std::popcount(all_ & ~used);
      if (count + std::min(rest_free / min_degree_from_[i + 1],
                           static_cast<int>(gens_.size() - i - 1)) <= best_) {
        return;
      }
    }
  }

  std::vector<Monomial> gens_;
  std::vector<int> min_degree_from_;
  Mask all_ = 0;
  int best_ = 0;
};

void coprime_products(const std::vector<Monomial>& gens, std::size_t from,
                      int remaining, Mask acc, std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (std::size_t i = from; i + static_cast<std::size_t>(remaining) <= gens.size(); ++i) {
    if ((gens[i].bits() & acc) != 0) continue;
    coprime_products(gens, i + 1, remaining - 1, acc | gens[i].bits(), out);
  }
}

}  // namespace

int monomial_grade(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw std::domain_error("monomial grade is undefined for zero ideal");
  }
  return GradeSearch(ideal.generators()).run();
}

MonomialIdeal squarefree_power(const MonomialIdeal& ideal, int k) {
  if (k <= 0) {
    throw std::invalid_argument("squarefree power index must be positive, got " +
                                std::to_string(k));
  }
  std::vector<Monomial> products;
  coprime_products(ideal.generators(), 0, k, 0, products);
  return minimalize(products);
}

int initial_degree(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw std::domain_error("initial degree is undefined for zero ideal");
  }
  // Canonical order puts a minimum-degree generator first.
  return ideal.generators().front().degree();
}

MonomialIdeal shifted(const MonomialIdeal& ideal, int offset) {
  if (ideal.is_zero()) return ideal;
  if (offset < 0 || ideal.ambient() + offset > kMaxVariables) {
    throw std::invalid_argument("relabeling offset " + std::to_string(offset) +
                                " leaves x1..x" + std::to_string(kMaxVariables));
  }
  std::vector<Monomial> moved;
  moved.reserve(ideal.size());
  for (Monomial g : ideal.generators()) moved.emplace_back(g.bits() << offset);
  return minimalize(moved).widened(ideal.ambient() + offset);
}

MonomialIdeal product(const MonomialIdeal& first, const MonomialIdeal& second) {
  if (first.is_zero() || second.is_zero()) return MonomialIdeal{};
  if ((first.support() & second.support()) != 0) {
    throw std::invalid_argument("product factors share variables");
  }
  std::vector<Monomial> gens;
  gens.reserve(first.size() * second.size());
  for (Monomial u : first.generators()) {
    for (Monomial v : second.generators()) gens.push_back(u.lcm(v));
  }
  const int ambient = std::max(first.ambient(), second.ambient());
  return minimalize(gens).widened(ambient);
}

MonomialIdeal product_disjoint(const MonomialIdeal& first,
                               const MonomialIdeal& second, int offset) {
  if (first.is_zero() || second.is_zero()) return MonomialIdeal{};
  return product(first, shifted(second, offset));
}

MonomialIdeal product_disjoint(const MonomialIdeal& first,
                               const MonomialIdeal& second) {
  return product_disjoint(first, second, first.ambient());
}

MonomialIdeal adjoin_variable(const MonomialIdeal& ideal) {
  const int n = ideal.ambient();
  if (n >= kMaxVariables) throw CapExceeded("no room for another variable");
  std::vector<Monomial> gens = ideal.generators();
  gens.push_back(Monomial::variable(n + 1));
  return minimalize(gens);
}

MonomialIdeal ideal_sum(const MonomialIdeal& first, const MonomialIdeal& second) {
  std::vector<Monomial> gens = first.generators();
  gens.insert(gens.end(), second.generators().begin(), second.generators().end());
  MonomialIdeal sum = minimalize(gens);
  if (sum.is_zero()) return sum;
  return sum.widened(std::max({sum.ambient(), first.ambient(), second.ambient()}));
}

MonomialIdeal intersection(const MonomialIdeal& first,
                           const MonomialIdeal& second) {
  if (first.is_zero() || second.is_zero()) return MonomialIdeal{};
  std::vector<Monomial> gens;
  gens.reserve(first.size() * second.size());
  for (Monomial u : first.generators()) {
    for (Monomial v : second.generators()) gens.push_back(u.lcm(v));
  }
  MonomialIdeal out = minimalize(gens);
  return out.widened(std::max({out.ambient(), first.ambient(), second.ambient()}));
}

MonomialIdeal multiply(const MonomialIdeal& ideal, Monomial u) {
  if (ideal.is_zero()) return ideal;
  // u * g stays squarefree only when u and g are coprime.
  for (Monomial g : ideal.generators()) {
    if (!g.coprime(u)) {
      throw std::invalid_argument("multiplier " + u.to_string() +
                                  " shares variables with " + g.to_string());
    }
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (Monomial g : ideal.generators()) gens.push_back(g.lcm(u));
  MonomialIdeal out = minimalize(gens);
  return out.widened(std::max(out.ambient(), ideal.ambient()));
}

MonomialIdeal compacted(const MonomialIdeal& ideal, std::vector<int>* old_index) {
  const Mask used = ideal.support();
  std::vector<int> map(kMaxVariables + 1, 0);
  std::vector<int> olds;
  for (Mask b = used; b != 0; b &= b - 1) {
    const int idx = std::countr_zero(b) + 1;
    olds.push_back(idx);
    map[static_cast<std::size_t>(idx)] = static_cast<int>(olds.size());
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (Monomial g : ideal.generators()) {
    Mask bits = 0;
    for (int i : g.indices()) bits |= Mask{1} << (map[static_cast<std::size_t>(i)] - 1);
    gens.emplace_back(bits);
  }
  if (old_index != nullptr) *old_index = std::move(olds);
  return minimalize(gens);
}

}  // namespace normdepth
