#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weylwalk/propagator.hpp"
#include "weylwalk/walk.hpp"

namespace weylwalk {

/// Scales for the verification suites.  The full preset matches the scales
/// the library is certified at; standard/quick trade coverage for speed.
struct VerifyScales {
  std::int64_t engines_t_max = 8;        // triple-engine cones, exhaustive
  std::int64_t raw_path_t_max = 6;       // path-walking oracle
  std::int64_t coefficient_t_max = 8;    // closed form vs enumeration
  std::int64_t split_t_max = 10;         // weight-class decomposition
  std::int64_t shift_t_max = 12;         // cyclic-shift classes
  std::int64_t interference_t_max = 12;  // f-sum vs enumeration
  int interference_samples = 20;
  std::int64_t product_exhaustive_t_max = 4;
  std::int64_t product_random_t = 32;
  std::int64_t product_random_count = 100000;
  std::int64_t completeness_t_max = 12;
  int norm_states = 50;
  std::int64_t norm_t_max = 50;
  std::int64_t symmetry_samples = 1000;
  std::int64_t symmetry_t_max = 10;
  std::uint64_t seed = 20250819;
  std::uint64_t budget = kDefaultBudget;

  static VerifyScales full() { return {}; }
  static VerifyScales standard();
  static VerifyScales quick();
};

/// Test hook: corrupt the hopping-matrix table before checking it.
enum class FaultInjection { none, flip_sign };

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::int64_t checks = 0;
  double seconds = 0;
  std::string counterexample;  // empty when passed
};

/// Run the named suite ("" = all), in a fixed order.
std::vector<SuiteResult> run_verify_suites(const VerifyScales& scales,
                                           const std::string& only = "",
                                           FaultInjection fault = FaultInjection::none);

const std::vector<std::string>& verify_suite_names();

bool all_passed(const std::vector<SuiteResult>& results);

/// Random state on up to `max_sites` sites of one parity inside a small box,
/// with small dyadic entries.  Never empty.
WalkState random_sparse_state(std::mt19937_64& rng, int max_sites,
                              std::int64_t box_radius, bool even_parity);

}  // namespace weylwalk
