#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "weylwalk/propagator.hpp"
#include "weylwalk/verify.hpp"

using namespace weylwalk;

namespace {

SpinMatrix lookup(const std::map<Site, SpinMatrix>& table, const Site& x) {
  const auto it = table.find(x);
  return it == table.end() ? SpinMatrix::zero() : it->second;
}

}  // namespace

TEST_CASE("zero steps is the identity kernel") {
  const Site from(2, -4, 6);
  for (Chirality c : {Chirality::plus, Chirality::minus}) {
    CHECK(propagator_closed_form(from, from, 0, c).matrix ==
          SpinMatrix::identity());
    CHECK(propagator_closed_form(from, Site(0, 0, 0), 0, c).matrix ==
          SpinMatrix::zero());
  }
  CHECK_THROWS_AS(propagator_closed_form(from, from, -1, Chirality::plus),
                  std::invalid_argument);
}

TEST_CASE("one step reproduces the hopping matrices") {
  const Site origin(0, 0, 0);
  for (Chirality c : {Chirality::plus, Chirality::minus}) {
    for (const auto& l : StepIndex::all()) {
      const Site to = origin + (-step_vector(l));
      const Propagator p = propagator_closed_form(origin, to, 1, c);
      CHECK(p.from == origin);
      CHECK(p.to == to);
      CHECK(p.t == 1);
      CHECK(p.chirality == c);
      CHECK(p.matrix == transition_matrix(l, c));
      CHECK(propagator_brute_force(origin, to, 1, c).matrix == p.matrix);
    }
  }
}

TEST_CASE("frozen two-step values") {
  const Site origin(0, 0, 0);
  for (Chirality c : {Chirality::plus, Chirality::minus}) {
    // Corner of the cone: a single path, value zeta^2 B10.
    const SpinMatrix corner =
        propagator_closed_form(origin, Site(2, 2, 2), 2, c).matrix;
    CHECK(corner == b_matrix(1, 0).scaled(pow(zeta(c), 2)));
    if (c == Chirality::plus) {
      CHECK(corner.at(0, 1) == Amplitude(0, -1, 3));
      CHECK(corner.at(1, 1) == Amplitude(0, 1, 3));
      CHECK(corner.at(0, 0) == Amplitude::zero());
      CHECK(corner.at(1, 0) == Amplitude::zero());
    }

    // Return amplitude: -1/2 times the identity.
    CHECK(propagator_closed_form(origin, origin, 2, c).matrix ==
          SpinMatrix::identity().scaled(Amplitude(-1, 0, 1)));

    // In-cone site whose amplitudes interfere away completely: the class
    // (0,0,2) -> (K1,K2,K3) = (2,1,1) is admissible yet sums to zero.
    CHECK(string_counts(origin, Site(0, 0, 2), 2).has_value());
    CHECK(propagator_closed_form(origin, Site(0, 0, 2), 2, c).matrix ==
          SpinMatrix::zero());

    // All three engines agree on the corner.
    CHECK(propagator_brute_force(origin, Site(2, 2, 2), 2, c).matrix == corner);
    CHECK(lookup(propagator_table_by_stepping(origin, 2, c), Site(2, 2, 2)) ==
          corner);
  }
}

TEST_CASE("single-path corner law") {
  const Site origin(0, 0, 0);
  for (Chirality c : {Chirality::plus, Chirality::minus}) {
    for (std::int64_t t : {3, 7}) {
      const Site corner(t, t, t);
      const SpinMatrix expect =
          b_matrix(1, 0).scaled(pow(zeta(c), static_cast<unsigned long>(t)));
      CHECK(propagator_closed_form(origin, corner, t, c).matrix == expect);
      CHECK(propagator_brute_force(origin, corner, t, c).matrix == expect);
    }
  }
}

TEST_CASE("engines agree over whole cones") {
  const Site from(1, -1, 3);
  for (std::int64_t t = 0; t <= 4; ++t) {
    for (Chirality c : {Chirality::plus, Chirality::minus}) {
      const auto stepped = propagator_table_by_stepping(from, t, c);
      for (const auto& to : past_causal_cone(from, t)) {
        const SpinMatrix closed = propagator_closed_form(from, to, t, c).matrix;
        CHECK(propagator_brute_force(from, to, t, c).matrix == closed);
        CHECK(lookup(stepped, to) == closed);
      }
    }
  }
}

TEST_CASE("path-walking oracle") {
  const Site origin(0, 0, 0);
  for (std::int64_t t = 0; t <= 3; ++t) {
    for (Chirality c : {Chirality::plus, Chirality::minus}) {
      const auto paths = path_sum_table(origin, t, c);
      const auto cone = past_causal_cone(origin, t);
      for (const auto& [x, m] : paths)
        CHECK(std::binary_search(cone.begin(), cone.end(), x));
      for (const auto& to : cone)
        CHECK(lookup(paths, to) ==
              propagator_brute_force(origin, to, t, c).matrix);
    }
  }
  CHECK_THROWS_AS(path_sum_table(origin, 8, Chirality::plus, 1000),
                  BudgetExceeded);
}

TEST_CASE("cone table") {
  const Site from(-2, 0, 4);
  const std::int64_t t = 3;
  const auto rows = cone_table(from, t, Chirality::plus);
  const auto cone = past_causal_cone(from, t);
  REQUIRE(rows.size() == cone.size());
  REQUIRE(rows.size() == static_cast<std::size_t>((t + 1) * (t + 1) * (t + 1)));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].from == from);
    CHECK(rows[i].to == cone[i]);
    CHECK(rows[i].t == t);
    CHECK(rows[i].chirality == Chirality::plus);
    CHECK(rows[i].matrix ==
          propagator_closed_form(from, cone[i], t, Chirality::plus).matrix);
    if (i > 0) CHECK(rows[i - 1].to < rows[i].to);
  }

  // The fill is deterministic under threading.
  const auto threaded = cone_table(from, t, Chirality::plus, 4);
  REQUIRE(threaded.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(threaded[i] == rows[i]);
}

TEST_CASE("denominator exponents stay below twice the time") {
  for (std::int64_t t = 0; t <= 5; ++t)
    for (const auto& row : cone_table(Site(0, 0, 0), t, Chirality::minus))
      for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col)
          CHECK(row.matrix.at(r, col).log2_den() <= 2 * t);
}

TEST_CASE("convolution engine matches direct evolution") {
  std::mt19937_64 rng(31);
  const WalkState s = random_sparse_state(rng, 4, 3, false);
  CHECK(convolve(s, 0, Chirality::plus) == s);
  CHECK(convolve(s, 1, Chirality::plus) == step(s, Chirality::plus));
  for (int iter = 0; iter < 6; ++iter) {
    const Chirality c = (iter & 1) ? Chirality::minus : Chirality::plus;
    const WalkState r = random_sparse_state(rng, 5, 2, iter % 3 != 0);
    const std::int64_t t = 1 + iter;
    CHECK(convolve(r, t, c) == evolve(r, t, c));
  }
}

TEST_CASE("floating-point view") {
  Propagator p;
  p.matrix = SpinMatrix::identity().scaled(Amplitude(1, -1, 2));
  const auto f = to_float(p);
  CHECK(f[0] == std::complex<double>(0.25, -0.25));
  CHECK(f[1] == std::complex<double>(0, 0));
  CHECK(f[3] == std::complex<double>(0.25, -0.25));

  const Propagator corner =
      propagator_closed_form(Site(0, 0, 0), Site(2, 2, 2), 2, Chirality::plus);
  CHECK(to_float(corner)[1] == std::complex<double>(0, -0.125));
}

TEST_CASE("shared-evaluator displacement form") {
  ClosedFormEvaluator ev(4, Chirality::plus);
  const Site from(2, 2, -2);
  for (const auto& to : past_causal_cone(from, 4))
    CHECK(closed_form_matrix(to - from, ev) ==
          propagator_closed_form(from, to, 4, Chirality::plus).matrix);
}
