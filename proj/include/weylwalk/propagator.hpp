#pragma once

#include <complex>
#include <cstdint>
#include <map>

#include "weylwalk/combinatorics.hpp"
#include "weylwalk/lattice.hpp"
#include "weylwalk/spin.hpp"
#include "weylwalk/walk.hpp"

namespace weylwalk {

/// Exact t-step transition matrix between two sites: applying `matrix` to
/// the spinor sitting at `from` gives that source's contribution at `to`
/// after t steps.  Denominators always divide 2^(2t).
struct Propagator {
  Site from, to;
  std::int64_t t = 0;
  Chirality chirality = Chirality::plus;
  SpinMatrix matrix;

  bool operator==(const Propagator& o) const {
    return from == o.from && to == o.to && t == o.t &&
           chirality == o.chirality && matrix == o.matrix;
  }
};

/// Brute-force engine: enumerates the admissible string triples and sums
/// their factorized matrix products.  Throws BudgetExceeded when the triple
/// count is above `budget`.  Off-cone pairs give the zero matrix.
Propagator propagator_brute_force(const Site& from, const Site& to,
                                  std::int64_t t, Chirality c,
                                  std::uint64_t budget = kDefaultBudget);

/// Closed-form engine: evaluates the four endpoint coefficients and scales
/// by zeta*^t.  Valid for all t >= 0.
Propagator propagator_closed_form(const Site& from, const Site& to,
                                  std::int64_t t, Chirality c);

/// Closed form over one displacement, reusing a shared evaluator (t >= 2).
SpinMatrix closed_form_matrix(const Vec3& displacement,
                              ClosedFormEvaluator& ev);

/// Step engine: evolves the two basis spinors at `from` and reads the
/// propagator to every reachable site off the evolved states.  Sites absent
/// from the map carry the zero matrix.
std::map<Site, SpinMatrix> propagator_table_by_stepping(const Site& from,
                                                        std::int64_t t,
                                                        Chirality c);

/// Path-walking oracle: depth-first enumeration of all 8^t step sequences,
/// literally multiplying hopping matrices along each path.  Cost 8^t is
/// checked against `budget`.
std::map<Site, SpinMatrix> path_sum_table(const Site& from, std::int64_t t,
                                          Chirality c,
                                          std::uint64_t budget = kDefaultBudget);

/// Closed-form propagators from `from` to every site of its t-step cone,
/// ordered lexicographically by target site.  `jobs` > 1 splits the fill
/// across threads; the result is identical for any job count.
std::vector<Propagator> cone_table(const Site& from, std::int64_t t,
                                   Chirality c, int jobs = 1);

/// Exact t-step evolution computed by convolving the state with closed-form
/// propagators; agrees bit-exactly with evolve().
WalkState convolve(const WalkState& s, std::int64_t t, Chirality c);

/// Nearest-double view, row-major.  Throws std::range_error on overflow.
std::array<std::complex<double>, 4> to_float(const Propagator& p);

}  // namespace weylwalk
