#include "normdepth/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "normdepth/betti.hpp"
#include "normdepth/constructions.hpp"
#include "normdepth/graph.hpp"
#include "normdepth/random_instances.hpp"
#include "normdepth/stats.hpp"
#include "normdepth/sweep.hpp"

namespace normdepth {
namespace {

constexpr std::size_t kMaxSamples = 5;

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  template <class Detail>
  bool check(const std::string& name, bool ok, Detail&& detail) {
    SuiteCheck& c = slot(name);
    ++c.cases;
    if (!ok) {
      ++c.failures;
      if (c.samples.size() < kMaxSamples) c.samples.push_back(detail());
    }
    return ok;
  }
  bool check(const std::string& name, bool ok) {
    return check(name, ok, [] { return std::string(); });
  }
  /// Records `cases` cases of which `failing` failed.
  void tally(const std::string& name, std::uint64_t cases, const std::vector<std::string>& failing) {
    SuiteCheck& c = slot(name);
    c.cases += cases;
    c.failures += failing.size();
    for (const auto& f : failing) {
      if (c.samples.size() < kMaxSamples) c.samples.push_back(f);
    }
  }

 private:
  SuiteCheck& slot(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, report_.checks.size()).first;
      report_.checks.push_back(SuiteCheck{name, 0, 0, {}});
    }
    return report_.checks[it->second];
  }

  SuiteReport& report_;
  std::map<std::string, std::size_t> index_;
};

std::string show(const Graph& g) { return graph_to_json(g).dump(); }
std::string show(const MonomialIdeal& i) { return ideal_to_json(i).dump(); }

std::string show(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::vector<Mask> masks(const MonomialIdeal& ideal) {
  std::vector<Mask> out;
  for (Monomial g : ideal.generators()) out.push_back(g.bits());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<Monomial> out;
  for (auto l : lists) out.push_back(Monomial::from_indices(l));
  return out;
}

bool non_increasing(const std::vector<int>& g) {
  return std::is_sorted(g.rbegin(), g.rend());
}

FieldSpec field_of(const SuiteOptions& o) { return o.field.value_or(FieldSpec::rationals()); }

int vertices_or(const SuiteOptions& o, int fallback, int cap) {
  const int n = o.max_vertices.value_or(fallback);
  if (n > cap) {
    throw CapExceeded("--max-vertices " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(cap) + " for this suite");
  }
  return n;
}

void for_each_cochordal(int max_vertices, const std::function<void(const Graph&)>& visit) {
  for (int n = 2; n <= max_vertices; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      if (is_cochordal(g)) visit(g);
    });
  }
}

// The witness criterion ranges over i >= 2 and so never fires on a principal
// power. There depth(S/(u)) = n - 1, so g(k) = 0 exactly when u covers every
// vertex.
void check_zero_depth_criterion(Recorder& rec, const Graph& g, int k,
                                std::span<const Monomial> order, int gk) {
  if (order.size() == 1) {
    rec.check("principal power: g(k) = 0 <=> the generator covers every vertex",
              (order.front().bits() == g.all_vertices()) == (gk == 0),
              [&] { return show(g) + " k=" + std::to_string(k); });
    return;
  }
  rec.check("zero-depth witness exists <=> g(k) = 0",
            zero_depth_witness(g, k, order).has_value() == (gk == 0),
            [&] { return show(g) + " k=" + std::to_string(k); });
}

// ---------------------------------------------------------------- example36

void run_example36(Recorder& rec, SuiteReport& report, const SuiteOptions& o) {
  const FieldSpec field = field_of(o);
  const Graph g = six_vertex_cut_graph();
  const MonomialIdeal ideal = edge_ideal(g);

  rec.check("matching number 3", matching_number(g) == 3 && monomial_grade(ideal) == 3);
  const GProfile p = g_profile(ideal, field);
  rec.check("g = (1,0,0)", p.g == std::vector<int>{1, 0, 0}, [&] { return show(p.g); });
  report.data["profile"] = profile_to_json(p);

  const Graph co = complement(g);
  const Graph expected_co(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
  rec.check("complement edges", co == expected_co, [&] { return show(co); });
  rec.check("complement chordal", is_chordal(co));
  rec.check("complement connected", is_connected(co));
  rec.check("cut vertices {1}", cut_vertices(co) == std::vector<int>{1});
  const auto parts = connected_components(co, co.all_vertices() & ~vertex_bit(1));
  rec.check("complement - 1 has components {2,3} and {4,5,6}",
            parts == std::vector<Mask>{0b000110, 0b111000});

  const auto order1 = monomials({{2, 4}, {3, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}, {1, 6}});
  const auto order2 = monomials({{2, 3, 4, 5}, {2, 3, 4, 6}, {1, 2, 4, 6}, {1, 3, 4, 6},
                                 {1, 2, 5, 6}, {1, 3, 5, 6}, {2, 3, 5, 6}});
  const auto order3 = monomials({{1, 2, 3, 4, 5, 6}});
  const std::vector<const std::vector<Monomial>*> orders{&order1, &order2, &order3};
  for (int k = 1; k <= 3; ++k) {
    const MonomialIdeal power = squarefree_power(ideal, k);
    const auto& order = *orders[static_cast<std::size_t>(k - 1)];
    std::vector<Mask> listed;
    for (Monomial u : order) listed.push_back(u.bits());
    std::sort(listed.begin(), listed.end());
    rec.check("power " + std::to_string(k) + " equals the listed generators",
              masks(power) == listed, [&] { return show(power); });
    rec.check("listed order " + std::to_string(k) + " has linear quotients",
              has_linear_quotients(order));
  }
  const MonomialIdeal cube = squarefree_power(ideal, 3).widened(6);
  rec.check("cube is principal with depth 5",
            cube.size() == 1 && projective_dimension(cube, field) == 1 && depth(cube, field) == 5);
  rec.check("square has depth 3", depth(squarefree_power(ideal, 2).widened(6), field) == 3);
  rec.check("first power has depth 2", depth(ideal, field) == 2);

  const CutSplit split = complement_cut_split(g, 1);
  rec.check("first side is {2,3}", split.first == 0b000110 && split.second == 0b111000);
  const Matching m{{{1, 6}, {3, 5}}};
  rec.check("{{1,6},{3,5}} is special", is_special_matching(g, split, m));
  rec.check("{{1,6},{3,5}} is dominating", is_dominating_matching(g, m));
  const auto w = check_zero_depth_witness(g, 2, order2, m, 6);
  rec.check("{{1,6},{3,5}} is a zero-depth witness at i = 6", w.has_value());
  if (w) {
    const std::vector<std::pair<int, std::size_t>> cover{{2, 5}, {4, 4}};
    rec.check("witness cover (t, m) = (2,5), (4,4)", w->cover == cover);
    Json c = Json::array();
    for (auto [t, mm] : w->cover) c.push_back({t, mm});
    report.data["witness_cover"] = c;
  }
  const auto sw = special_zero_depth_witness(g, split, 2, order2);
  rec.check("largest special index is 6", sw && sw->index == 6 && sw->matching == m,
            [&] { return sw ? sw->matching.to_string() + " at " + std::to_string(sw->index)
                            : std::string("none"); });
  const auto dw = zero_depth_witness(g, 2, order2);
  rec.check("descending search finds a witness", dw.has_value());
  if (dw) {
    report.data["descending_witness"] = {{"index", dw->index},
                                         {"matching", dw->matching.to_string()}};
  }

  for (int k = 2; k <= 3; ++k) {
    const Matching sm = find_special_matching(g, split, k);
    rec.check("constructed special " + std::to_string(k) + "-matching",
              sm.size() == static_cast<std::size_t>(k) && is_special_matching(g, split, sm) &&
                  is_dominating_matching(g, sm),
              [&] { return sm.to_string(); });
  }

  // Whether the witness criterion depends on the order is recorded only.
  Json agreement = Json::array();
  for (int k = 1; k <= 3; ++k) {
    const auto dp = linear_quotients_order(squarefree_power(ideal, k));
    rec.check("power " + std::to_string(k) + " has a linear quotients order", dp.has_value());
    if (!dp) continue;
    check_zero_depth_criterion(rec, g, k, *dp, p.g[static_cast<std::size_t>(k - 1)]);
    const bool listed = zero_depth_witness(g, k, *orders[static_cast<std::size_t>(k - 1)]).has_value();
    const bool searched = zero_depth_witness(g, k, *dp).has_value();
    agreement.push_back({{"k", k}, {"listed_order", listed}, {"searched_order", searched}});
  }
  report.data["witness_by_order"] = agreement;
}

// ---------------------------------------------------------------- cochordal sweep

// Sum over j of dim H~_0 of the clique complex of the complement with j
// removed.
std::int64_t cut_homology_sum(const Graph& g, FieldSpec field) {
  const SimplicialComplex delta = clique_complex(complement(g));
  std::int64_t sum = 0;
  for (int j = 1; j <= g.vertex_count(); ++j) {
    const SimplicialComplex sub = induced_subcomplex(delta, delta.vertex_support() & ~vertex_bit(j));
    sum += reduced_homology(sub, field).at(0);
  }
  return sum;
}

void run_cochordal_sweep(Recorder& rec, SuiteReport& report, const SuiteOptions& o,
                         bool classification, bool betti_identity) {
  const FieldSpec field = field_of(o);
  const int max_vertices = vertices_or(o, 6, 7);
  std::uint64_t instances = 0, with_cut = 0, degenerate = 0;
  for_each_cochordal(max_vertices, [&](const Graph& g) {
    ++instances;
    const int n = g.vertex_count();
    const MonomialIdeal ideal = edge_ideal(g);
    if (betti_identity) {
      const std::int64_t lhs = betti_hochster(ideal, field).total(n - 2);
      const std::int64_t rhs = cut_homology_sum(g, field);
      if (n >= 3) {
        rec.check("beta_{n-2} equals the cut homology sum", lhs == rhs, [&] {
          return show(g) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs);
        });
      } else {
        // At n = 2 the empty set contributes H~_{-1} = 1 to beta_0.
        ++degenerate;
        rec.check("beta_0 equals the cut homology sum plus the empty-set term",
                  lhs == rhs + 1);
      }
    }
    if (!classification) return;

    const Graph co = complement(g);
    const bool cut = is_connected(co) && !cut_vertices(co).empty();
    const GProfile p = g_profile(ideal, field);
    const bool first_one = p.g.front() == 1;
    const bool tail_zero =
        first_one && std::all_of(p.g.begin() + 1, p.g.end(), [](int v) { return v == 0; });
    rec.check("cut vertex <=> g(1) = 1 <=> g = (1,0,...,0)",
              cut == first_one && first_one == tail_zero,
              [&] { return show(g) + " g=" + show(p.g); });

    for (int k = 1; k <= p.nu; ++k) {
      const auto order = linear_quotients_order(squarefree_power(ideal, k));
      if (!rec.check("powers have linear quotients", order.has_value(),
                     [&] { return show(g) + " k=" + std::to_string(k); })) {
        continue;
      }
      check_zero_depth_criterion(rec, g, k, *order, p.g[static_cast<std::size_t>(k - 1)]);
      if (!cut || k < 2) continue;
      for (int v : cut_vertices(co)) {
        const CutSplit split = complement_cut_split(g, v);
        const Matching m = find_special_matching(g, split, k);
        rec.check("constructed special matching is special and dominating",
                  is_special_matching(g, split, m) && is_dominating_matching(g, m),
                  [&] { return show(g) + " v=" + std::to_string(v) + " " + m.to_string(); });
        if (order->size() == 1) {
          rec.check("principal power: the special matching covers every vertex",
                    m.vertices() == g.all_vertices());
          continue;
        }
        rec.check("largest special index gives a witness",
                  special_zero_depth_witness(g, split, k, *order).has_value(),
                  [&] { return show(g) + " v=" + std::to_string(v) + " k=" + std::to_string(k); });
      }
    }
    if (cut) ++with_cut;
  });
  report.data["max_vertices"] = max_vertices;
  report.data["cochordal_graphs"] = instances;
  if (classification) report.data["with_cut_vertex"] = with_cut;
  if (betti_identity) report.data["two_vertex_graphs"] = degenerate;
}

// ---------------------------------------------------------------- random ideals

void run_thm21(Recorder& rec, SuiteReport& report, const SuiteOptions& o) {
  const FieldSpec field = field_of(o);
  const int trials = o.trials.value_or(50);
  Rng rng(o.seed);
  for (int t = 0; t < trials; ++t) {
    const MonomialIdeal a = random_ideal(rng, 5, 5);
    const MonomialIdeal b = random_ideal(rng, 5, 5);
    const MonomialIdeal prod = product_disjoint(a, b);
    const GProfile pa = g_profile(a, field), pb = g_profile(b, field), pp = g_profile(prod, field);
    const auto describe = [&] { return show(a) + " * " + show(b); };
    rec.check("nu of product is the minimum", pp.nu == std::min(pa.nu, pb.nu), describe);
    bool additive = pp.nu == std::min(pa.nu, pb.nu);
    for (int k = 1; additive && k <= pp.nu; ++k) {
      const auto i = static_cast<std::size_t>(k - 1);
      additive = pp.g[i] == pa.g[i] + pb.g[i];
    }
    rec.check("g of product is the sum", additive, [&] {
      return describe() + ": " + show(pp.g) + " vs " + show(pa.g) + " + " + show(pb.g);
    });
    bool commute = true;
    for (int k = 1; k <= pp.nu; ++k) {
      commute = commute && squarefree_power(prod, k) ==
                               product_disjoint(squarefree_power(a, k), squarefree_power(b, k),
                                                a.ambient());
    }
    rec.check("powers commute with disjoint products", commute, describe);
  }
  report.data["trials"] = trials;
  report.data["seed"] = o.seed;
}

// J^[k] = I^[k] + x I^[k-1] for J = (I, x).
void check_adjoin_splittings(Recorder& rec, const MonomialIdeal& ideal, FieldSpec field) {
  const MonomialIdeal j = adjoin_variable(ideal);
  const Monomial x = Monomial::variable(j.ambient());
  const int nu = monomial_grade(j);
  for (int k = 1; k <= nu; ++k) {
    const MonomialIdeal first = squarefree_power(ideal, k);
    const MonomialIdeal second =
        k == 1 ? minimalize({x}) : multiply(squarefree_power(ideal, k - 1), x);
    const SplittingReport r = verify_betti_splitting(squarefree_power(j, k), first, second, field);
    rec.check("J^[k] = I^[k] + x I^[k-1] is a Betti splitting", r.holds, [&] {
      return show(ideal) + " k=" + std::to_string(k) + ": " +
             (r.discrepancies.empty() ? std::string() : r.discrepancies.front());
    });
  }
}

void run_prop24(Recorder& rec, SuiteReport& report, const SuiteOptions& o) {
  const FieldSpec field = field_of(o);
  const int trials = o.trials.value_or(50);
  Rng rng(o.seed);
  for (int t = 0; t < trials; ++t) {
    const MonomialIdeal ideal = random_ideal(rng, 6, 6);
    const MonomialIdeal j = adjoin_variable(ideal);
    const GProfile pi = g_profile(ideal, field), pj = g_profile(j, field);
    const std::vector<int> predicted = predict_adjoin_variable(pi.g, pi.d);
    rec.check("nu grows by one", pj.nu == pi.nu + 1);
    rec.check("profile of (I, x) matches the recursion", pj.g == predicted, [&] {
      return show(ideal) + ": " + show(pj.g) + " vs " + show(predicted);
    });
    if (non_increasing(pi.g)) {
      rec.check("non-increasing profiles stay non-increasing", non_increasing(pj.g),
                [&] { return show(ideal); });
    }
    check_adjoin_splittings(rec, ideal, field);
  }
  report.data["trials"] = trials;
  report.data["seed"] = o.seed;
}

void run_splitting(Recorder& rec, SuiteReport& report, const SuiteOptions& o) {
  const FieldSpec field = field_of(o);
  const MonomialIdeal example = edge_ideal(six_vertex_cut_graph());
  check_adjoin_splittings(rec, example, field);
  rec.check("splitting with an empty part",
            verify_betti_splitting(example, example, MonomialIdeal{}, field).holds);

  const int max_vertices = vertices_or(o, 5, 6);
  for_each_cochordal(max_vertices, [&](const Graph& g) {
    check_adjoin_splittings(rec, edge_ideal(g), field);
  });

  // Negative control on the 4-cycle; the outcome is recorded, not asserted.
  const MonomialIdeal c4 = edge_ideal(cycle_graph(4));
  const SplittingReport control = verify_betti_splitting(
      c4, minimalize(monomials({{1, 2}, {3, 4}})), minimalize(monomials({{2, 3}, {1, 4}})), field);
  report.data["c4_matching_partition"] = {{"holds", control.holds},
                                          {"discrepancies", control.discrepancies}};
  report.data["max_vertices"] = max_vertices;
}

// ---------------------------------------------------------------- constructions

void run_lemma39(Recorder& rec, SuiteReport& report, const SuiteOptions& o) {
  const FieldSpec field = field_of(o);
  const int max_vertices = vertices_or(o, 5, 6);
  std::uint64_t instances = 0;
  for_each_cochordal(max_vertices, [&](const Graph& h) {
    ++instances;
    const GProfile ph = g_profile(edge_ideal(h), field);
    const Graph g = with_disjoint_edge(h);
    const GProfile pg = g_profile(edge_ideal(g), field);
    const std::vector<int> predicted = predict_adjoin_edge(h, ph.g);
    rec.check("profile after adjoining an edge matches the recursion", pg.g == predicted,
              [&] { return show(h) + ": " + show(pg.g) + " vs " + show(predicted); });
    if (non_increasing(ph.g)) {
      rec.check("non-increasing profiles stay non-increasing", non_increasing(pg.g));
    }
  });
  report.data["max_vertices"] = max_vertices;
  report.data["cochordal_graphs"] = instances;
}

void check_construction(Recorder& rec, Json& out, const ConstructionResult& c,
                        FieldSpec field) {
  const GProfile p = g_profile(c.ideal, field);
  rec.check("nu matches", p.nu == c.nu, [&] { return c.provenance; });
  rec.check("profile matches the prediction", p.g == c.predicted_g,
            [&] { return c.provenance + ": " + show(p.g) + " vs " + show(c.predicted_g); });
  rec.check("profile is non-increasing", non_increasing(p.g), [&] { return c.provenance; });
  out.push_back({{"provenance", c.provenance},
                 {"variables", c.variable_count()},
                 {"profile", profile_to_json(p)}});
}

void run_thm38(Recorder& rec, SuiteReport& report, const SuiteOptions& o) {
  const FieldSpec field = field_of(o);
  Json out = Json::array();
  for (auto [s, m] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}) {
    const ConstructionResult c = vanishing_tail_graph(s, m);
    check_construction(rec, out, c, field);
    const GProfile p = profile_from_json(out.back()["profile"]);
    bool zeros = p.nu == m;
    for (int k = 1; zeros && k <= m; ++k) {
      zeros = (p.g[static_cast<std::size_t>(k - 1)] == 0) == (k > s);
    }
    rec.check("g(k) = 0 exactly for k > s", zeros, [&] { return c.provenance; });
  }
  for (int t = 2; t <= 4; ++t) {
    const Graph g = base_cut_vertex_graph(t);
    const GProfile p = g_profile(edge_ideal(g), field);
    std::vector<int> expected(static_cast<std::size_t>(t), 0);
    expected.front() = 1;
    rec.check("base graphs have g = (1,0,...,0)", p.g == expected,
              [&] { return "t=" + std::to_string(t) + " " + show(p.g); });
  }
  rec.check("base graph t = 3 is the six-vertex cut graph",
            base_cut_vertex_graph(3) == six_vertex_cut_graph());
  report.data["instances"] = out;
}

void run_lemma42(Recorder& rec, SuiteReport& report, const SuiteOptions& o) {
  const FieldSpec field = field_of(o);
  Json out = Json::array();
  for (auto [s, m] :
       std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}) {
    check_construction(rec, out, step_profile_ideal(s, m), field);
  }
  report.data["instances"] = out;
}

void run_lemma43(Recorder& rec, SuiteReport& report, const SuiteOptions& o) {
  const FieldSpec field = field_of(o);
  Json out = Json::array();
  for (int m = 1; m <= 3; ++m) check_construction(rec, out, all_ones_profile_ideal(m), field);
  report.data["instances"] = out;
}

void run_thm41(Recorder& rec, SuiteReport& report, const SuiteOptions& o) {
  const FieldSpec field = field_of(o);
  Json out = Json::array();
  for (const auto& target : std::vector<std::vector<int>>{{0, 0}, {1, 0}, {1, 1}, {2, 1}}) {
    const ConstructionResult c = realize_profile(target);
    rec.check("at most 11 variables", c.variable_count() <= 11,
              [&] { return c.provenance + " uses " + std::to_string(c.variable_count()); });
    check_construction(rec, out, c, field);
  }
  report.data["instances"] = out;
}

// ---------------------------------------------------------------- oracle

void run_oracle(Recorder& rec, SuiteReport& report, const SuiteOptions& o) {
  const int trials = o.trials.value_or(100);
  std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2)};
  if (o.field && std::find(fields.begin(), fields.end(), *o.field) == fields.end()) {
    fields.push_back(*o.field);
  }
  Rng rng(o.seed);
  std::uint64_t entries = 0;
  for (int t = 0; t < trials; ++t) {
    const MonomialIdeal ideal = random_ideal(rng, 8, 8);
    for (FieldSpec f : fields) {
      const BettiTable h = betti_hochster(ideal, f);
      const BettiTable tay = betti_taylor(ideal, f);
      entries += h.entries().size();
      rec.check("Hochster equals Taylor over " + f.name(), h == tay, [&] {
        return show(ideal) + ": " + betti_to_json(h).dump() + " vs " + betti_to_json(tay).dump();
      });
    }
  }
  Json names = Json::array();
  for (FieldSpec f : fields) names.push_back(f.name());
  report.data["fields"] = names;
  report.data["trials"] = trials;
  report.data["seed"] = o.seed;
  report.data["nonzero_entries"] = entries;
}

// ---------------------------------------------------------------- properties

std::vector<Mask> sorted_facets(const SimplicialComplex& c) {
  std::vector<Mask> f = c.facets();
  std::sort(f.begin(), f.end());
  return f;
}

void run_properties(Recorder& rec, SuiteReport& report, const SuiteOptions& o) {
  const FieldSpec field = field_of(o);
  const int max_vertices = vertices_or(o, 5, 6);
  std::uint64_t graphs = 0;
  for (int n = 2; n <= max_vertices; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      ++graphs;
      const MonomialIdeal ideal = edge_ideal(g);
      const int nu = matching_number(g);
      rec.check("linear resolution <=> cochordal",
                has_linear_resolution(ideal, field).linear == is_cochordal(g),
                [&] { return show(g); });
      rec.check("monomial grade equals matching number", monomial_grade(ideal) == nu);
      for (int k = 1; k <= nu; ++k) {
        const MonomialIdeal power = squarefree_power(ideal, k).widened(n);
        const SimplicialComplex gamma = gamma_complex(g, k);
        rec.check("Stanley-Reisner complex of I^[k] is Gamma_k",
                  sorted_facets(stanley_reisner_complex(power)) == sorted_facets(gamma),
                  [&] { return show(g) + " k=" + std::to_string(k); });
        rec.check("Stanley-Reisner ideal of Gamma_k is I^[k]",
                  stanley_reisner_ideal(gamma) == power,
                  [&] { return show(g) + " k=" + std::to_string(k); });
        std::vector<Mask> covered;
        for (const auto& m : enumerate_matchings(g, k)) covered.push_back(m.vertices());
        std::sort(covered.begin(), covered.end());
        covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
        rec.check("generators of I^[k] are the vertex sets of k-matchings",
                  masks(power) == covered, [&] { return show(g) + " k=" + std::to_string(k); });
      }
      rec.check("power past nu is zero", squarefree_power(ideal, nu + 1).is_zero());

      const SimplicialComplex clique = clique_complex(g);
      for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
        const HomologyDims h = reduced_homology(clique, f);
        rec.check("connected clique complex <=> H~_0 = 0",
                  is_connected_complex(clique) == (h.at(0) == 0));
        if (is_chordal(g)) {
          bool only_zero = std::all_of(h.dims.begin(), h.dims.end(),
                                       [](const auto& e) { return e.first == 0; });
          rec.check("chordal clique complexes have homology only in degree 0", only_zero,
                    [&] { return show(g) + " over " + f.name(); });
        }
      }
    });
  }

  const int trials = o.trials.value_or(100);
  Rng rng(o.seed);
  for (int t = 0; t < trials; ++t) {
    const MonomialIdeal ideal = random_ideal(rng, 7, 7);
    rec.check("minimalize is idempotent",
              minimalize(std::span<const Monomial>(ideal.generators())) == ideal);
    const int nu = monomial_grade(ideal);
    rec.check("I^[nu] is nonzero and I^[nu+1] is zero",
              !squarefree_power(ideal, nu).is_zero() && squarefree_power(ideal, nu + 1).is_zero());
    rec.check("I^[1] = I", squarefree_power(ideal, 1) == ideal);
    for (int k = 1; k < nu; ++k) {
      const MonomialIdeal lower = squarefree_power(ideal, k);
      const MonomialIdeal upper = squarefree_power(ideal, k + 1);
      const bool divisible = std::all_of(upper.generators().begin(), upper.generators().end(),
                                         [&](Monomial u) { return lower.contains(u); });
      rec.check("I^[k+1] lies in I^[k]", divisible, [&] { return show(ideal); });
      rec.check("d_{k+1} >= d_k + indeg",
                initial_degree(upper) >= initial_degree(lower) + initial_degree(ideal));
    }
    const GProfile p = g_profile(ideal, field);
    bool increasing_d = std::is_sorted(p.d.begin(), p.d.end()) &&
                        std::adjacent_find(p.d.begin(), p.d.end()) == p.d.end();
    rec.check("d_k strictly increasing", increasing_d);
    const int pd = projective_dimension(ideal, field);
    rec.check("0 <= pd <= n", pd >= 0 && pd <= ideal.ambient());

    // A cone over the Stanley-Reisner complex is acyclic.
    const SimplicialComplex delta = stanley_reisner_complex(ideal);
    std::vector<Mask> coned;
    const Mask apex = vertex_bit(ideal.ambient() + 1);
    for (Mask f : delta.facets()) coned.push_back(f | apex);
    const SimplicialComplex cone(ideal.ambient() + 1, coned);
    rec.check("cone point found", cone_point(cone).has_value());
    rec.check("cones are acyclic", reduced_homology(cone, field).acyclic());
  }

  const InvariantCounters& counters = invariant_counters();
  rec.check("Euler characteristic identity on every homology call",
            counters.euler_violations.load() == 0);
  rec.check("g >= 0 on every computed profile", counters.negative_g.load() == 0);
  report.data["graphs"] = graphs;
  report.data["homology_calls"] = counters.homology_calls.load();
  report.data["profile_values"] = counters.profile_values.load();
  report.data["profiles"] = counters.profiles.load();
}

void run_conjecture(Recorder& rec, SuiteReport& report, const SuiteOptions& o) {
  SweepOptions s;
  s.max_vertices = vertices_or(o, 5, kExhaustiveSweepCap);
  s.seed = o.seed;
  s.field = field_of(o);
  s.threads = o.threads;
  if (o.trials) s.sample = *o.trials;
  const SweepReport r = conjecture_sweep(s);
  std::vector<std::string> failing;
  for (const auto& c : r.counterexamples) failing.push_back(show(c.graph) + " g=" + show(c.profile.g));
  rec.tally("no increasing profile", r.instances, failing);
  report.data["sweep"] = sweep_to_json(r);
}

using SuiteFn = void (*)(Recorder&, SuiteReport&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"example36", run_example36},
      {"thm32-sweep",
       [](Recorder& r, SuiteReport& s, const SuiteOptions& o) { run_cochordal_sweep(r, s, o, true, true); }},
      {"eq31",
       [](Recorder& r, SuiteReport& s, const SuiteOptions& o) { run_cochordal_sweep(r, s, o, false, true); }},
      {"thm21", run_thm21},
      {"prop24", run_prop24},
      {"splitting", run_splitting},
      {"lemma39", run_lemma39},
      {"thm38", run_thm38},
      {"lemma42", run_lemma42},
      {"lemma43", run_lemma43},
      {"thm41", run_thm41},
      {"oracle", run_oracle},
      {"properties", run_properties},
      {"conjecture", run_conjecture},
  };
  return suites;
}

}  // namespace

bool SuiteReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed(); });
}

const SuiteCheck* SuiteReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& [suite, fn] : registry()) {
    if (suite != name) continue;
    SuiteReport report;
    report.suite = suite;
    report.data["field"] = field_of(options).name();
    Recorder rec(report);
    fn(rec, report, options);
    return report;
  }
  throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"");
}

Json suite_to_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed()},
                      {"cases", c.cases},
                      {"failures", c.failures},
                      {"failure_samples", c.samples}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"suite", report.suite},
              {"passed", report.passed()},
              {"checks", checks},
              {"data", report.data}};
}

}  // namespace normdepth
