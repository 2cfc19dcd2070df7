// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Criteria 1-7 are the full-scale verification suites regrouped by claim;
// criterion 8 bounds wall-clock performance at desk scale.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "weylwalk/propagator.hpp"
#include "weylwalk/verify.hpp"

using namespace weylwalk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  std::string description;
  bool passed = true;
  double seconds = 0;
  std::string detail;
};

}  // namespace

int main() {
  std::printf("running full-scale verification suites...\n");
  std::fflush(stdout);
  const auto t0 = Clock::now();
  const std::vector<SuiteResult> results =
      run_verify_suites(VerifyScales::full());
  std::printf("suites done in %.1fs\n\n", seconds_since(t0));

  std::map<std::string, const SuiteResult*> by_name;
  for (const auto& r : results) by_name[r.name] = &r;

  std::vector<Criterion> criteria(8);

  // Gather one criterion from one or more suites, with an optional ceiling
  // on the combined runtime.
  const auto from_suites = [&](int idx, std::string description,
                               std::vector<std::string> suites,
                               double time_limit) {
    Criterion& c = criteria[idx - 1];
    c.description = std::move(description);
    for (const auto& name : suites) {
      const auto it = by_name.find(name);
      if (it == by_name.end()) {
        c.passed = false;
        c.detail += "missing suite " + name + "; ";
        continue;
      }
      const SuiteResult& r = *it->second;
      c.seconds += r.seconds;
      if (!r.passed) {
        c.passed = false;
        c.detail += name + ": " + r.counterexample + "; ";
      }
    }
    if (time_limit > 0 && c.seconds > time_limit) {
      c.passed = false;
      c.detail += "runtime " + std::to_string(c.seconds) + "s exceeds " +
                  std::to_string(time_limit) + "s; ";
    }
  };

  from_suites(1,
              "three engines bit-identical over full cones, t <= 8, both "
              "chiralities, under 2 minutes",
              {"triple-engine"}, 120.0);
  from_suites(2,
              "closed-form coefficients equal literal enumeration on every "
              "cell, t <= 8, under 2 minutes",
              {"coefficient-closed-form"}, 120.0);
  from_suites(3,
              "interference sums equal direct enumeration, t <= 12, sampled "
              "representatives, under 1 minute",
              {"interference-sum"}, 60.0);
  from_suites(4,
              "weight-class split and cyclic-shift class counts complete "
              "their binomials, t <= 12",
              {"weight-class-split", "shift-classes"}, 0);
  from_suites(5,
              "factorized matrix products equal literal products, exhaustive "
              "t <= 4 plus 100000 random at t = 32",
              {"matrix-product"}, 0);
  from_suites(6,
              "one-step unitarity, t-step completeness, and exact norm "
              "conservation on random states",
              {"one-step-unitarity", "completeness", "norm-conservation"}, 0);
  from_suites(7,
              "chirality conjugation and translation invariance over sampled "
              "site pairs",
              {"symmetry"}, 0);

  // Criterion 8: desk-scale performance of the three engines.
  {
    Criterion& c = criteria[7];
    c.description =
        "single closed-form propagator at t = 200 under 5s; full t = 20 cone "
        "under 30s; enumeration at t = 8 within default budget";
    const Site origin(0, 0, 0);

    auto tp = Clock::now();
    const Propagator far = propagator_closed_form(origin, origin, 200,
                                                  Chirality::plus);
    const double t200 = seconds_since(tp);
    c.seconds += t200;
    if (far.matrix.is_zero()) {
      c.passed = false;
      c.detail += "t=200 return propagator is zero; ";
    }
    if (t200 >= 5.0) {
      c.passed = false;
      c.detail += "t=200 propagator took " + std::to_string(t200) + "s; ";
    }

    const int jobs =
        std::max(1u, std::thread::hardware_concurrency());
    tp = Clock::now();
    const auto cone = cone_table(origin, 20, Chirality::plus, jobs);
    const double tcone = seconds_since(tp);
    c.seconds += tcone;
    if (cone.size() != 21u * 21u * 21u) {
      c.passed = false;
      c.detail += "t=20 cone has " + std::to_string(cone.size()) + " rows; ";
    }
    if (tcone >= 30.0) {
      c.passed = false;
      c.detail += "t=20 cone took " + std::to_string(tcone) + "s; ";
    }

    tp = Clock::now();
    // The return cell is the heaviest admissible one: the string classes
    // have C(8,4)^3 = 343000 triples, just inside the default budget.
    try {
      const Propagator brute =
          propagator_brute_force(origin, origin, 8, Chirality::plus);
      if (brute.matrix !=
          propagator_closed_form(origin, origin, 8, Chirality::plus).matrix) {
        c.passed = false;
        c.detail += "t=8 enumeration disagrees with closed form; ";
      }
    } catch (const BudgetExceeded& e) {
      c.passed = false;
      c.detail += std::string("t=8 enumeration exceeded its budget: ") +
                  e.what() + "; ";
    }
    c.seconds += seconds_since(tp);
  }

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    if (!c.passed) ++failed;
    std::printf("criterion %zu: %s  %s  [%.1fs]%s%s\n", i + 1,
                c.passed ? "PASS" : "FAIL", c.description.c_str(), c.seconds,
                c.detail.empty() ? "" : "  -- ", c.detail.c_str());
  }
  if (failed == 0)
    std::printf("\nACCEPTANCE: all 8 criteria passed\n");
  else
    std::printf("\nACCEPTANCE: %d of 8 criteria FAILED\n", failed);
  return failed == 0 ? 0 : 1;
}
