// Runs the eleven acceptance criteria and prints one PASS/FAIL line each.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "normdepth/stats.hpp"
#include "normdepth/suites.hpp"

namespace nd = normdepth;

namespace {

struct Outcome {
  bool passed = false;
  std::uint64_t cases = 0;
  std::string detail;
};

Outcome from_checks(const nd::SuiteReport& r, std::initializer_list<const char*> names) {
  Outcome o{true, 0, {}};
  for (const char* name : names) {
    const nd::SuiteCheck* c = r.find(name);
    if (c == nullptr) continue;
    o.cases += c->cases;
    if (!c->passed()) {
      o.passed = false;
      o.detail = c->name + ": " + (c->samples.empty() ? std::string("failed") : c->samples.front());
    }
  }
  if (o.cases == 0) {
    o.passed = false;
    o.detail = "no cases ran";
  }
  return o;
}

Outcome from_suite(const nd::SuiteReport& r) {
  Outcome o{r.passed(), 0, {}};
  for (const auto& c : r.checks) {
    o.cases += c.cases;
    if (!c.passed() && o.detail.empty()) {
      o.detail = c.name + ": " + (c.samples.empty() ? std::string("failed") : c.samples.front());
    }
  }
  return o;
}

nd::SuiteReport run(const char* suite, std::optional<int> max_vertices = std::nullopt) {
  nd::SuiteOptions opts;
  opts.max_vertices = max_vertices;
  return nd::run_suite(suite, opts);
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  int failed = 0;

  auto report = [&](int id, const char* what, double limit, const std::function<Outcome()>& body) {
    const auto start = clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    if (limit > 0 && secs > limit) {
      o.passed = false;
      o.detail = "over the " + std::to_string(static_cast<int>(limit)) + " s budget";
    }
    if (!o.passed) ++failed;
    std::printf("%s %2d  %-46s %8llu cases  %8.2f s%s%s\n", o.passed ? "PASS" : "FAIL", id, what,
                static_cast<unsigned long long>(o.cases), secs, o.detail.empty() ? "" : "  ",
                o.detail.c_str());
    std::fflush(stdout);
  };

  report(1, "six-vertex cut graph reproduction", 5, [] { return from_suite(run("example36")); });

  nd::SuiteReport sweep;
  report(2, "cut vertex <=> g(1) = 1 <=> g = (1,0,...), n <= 6", 600, [&] {
    sweep = run("thm32-sweep", 6);
    return from_checks(sweep, {"cut vertex <=> g(1) = 1 <=> g = (1,0,...,0)"});
  });
  report(3, "beta_{n-2} equals the cut homology sum, n <= 6", 0, [&] {
    return from_checks(sweep, {"beta_{n-2} equals the cut homology sum",
                               "beta_0 equals the cut homology sum plus the empty-set term"});
  });
  report(4, "profile additivity on 50 disjoint pairs", 300, [] { return from_suite(run("thm21")); });
  report(5, "adjoined variable recursion and splittings", 600, [] { return from_suite(run("prop24")); });
  report(6, "adjoined edge recursion, cochordal n <= 5", 600, [] { return from_suite(run("lemma39")); });
  report(7, "vanishing tail graphs", 600, [] { return from_suite(run("thm38")); });
  report(8, "realized targets (0,0) (1,0) (1,1) (2,1)", 900, [] { return from_suite(run("thm41")); });
  report(9, "Hochster = Taylor on 100 ideals, QQ and ZZ/2", 600, [] { return from_suite(run("oracle")); });
  report(11, "non-increasing profiles on all graphs n <= 5", 0,
         [] { return from_suite(run("conjecture", 5)); });
  // Last, so that the invariant counters cover every computation above.
  report(10, "property suite and global invariant counters", 0,
         [] { return from_suite(run("properties")); });

  const auto& c = nd::invariant_counters();
  std::printf("homology calls %llu, Euler violations %llu, profiles %llu, negative g %llu\n",
              static_cast<unsigned long long>(c.homology_calls.load()),
              static_cast<unsigned long long>(c.euler_violations.load()),
              static_cast<unsigned long long>(c.profiles.load()),
              static_cast<unsigned long long>(c.negative_g.load()));
  return failed == 0 ? 0 : 1;
}
