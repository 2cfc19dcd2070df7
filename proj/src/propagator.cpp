#include "weylwalk/propagator.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <thread>

namespace weylwalk {

namespace {

SpinMatrix one_step_matrix(const Vec3& d, Chirality c) {
  for (const auto& l : StepIndex::all())
    if (step_vector(l) == Vec3{-d[0], -d[1], -d[2]})
      return transition_matrix(l, c);
  return SpinMatrix::zero();
}

Propagator make_propagator(const Site& from, const Site& to, std::int64_t t,
                           Chirality c, SpinMatrix m) {
  return Propagator{from, to, t, c, std::move(m)};
}

}  // namespace

Propagator propagator_brute_force(const Site& from, const Site& to,
                                  std::int64_t t, Chirality c,
                                  std::uint64_t budget) {
  if (t == 0)
    return make_propagator(from, to, t, c,
                           from == to ? SpinMatrix::identity() : SpinMatrix::zero());
  const auto counts = string_counts(from, to, t);
  if (!counts) return make_propagator(from, to, t, c, SpinMatrix::zero());
  const auto cs = c_coefficient_bruteforce_all(t, counts->K1, counts->K2,
                                               counts->K3, c, budget);
  SpinMatrix sum;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      sum = sum + b_matrix(a, b).scaled(cs[a * 2 + b]);
  return make_propagator(from, to, t, c,
                         sum.scaled(pow(zeta_conj(c), t)));
}

SpinMatrix closed_form_matrix(const Vec3& displacement, ClosedFormEvaluator& ev) {
  const Site origin(0, 0, 0);
  const auto counts =
      string_counts(origin, origin + displacement, ev.t());
  if (!counts) return SpinMatrix::zero();
  SpinMatrix sum;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      sum = sum + b_matrix(a, b).scaled(
                      ev.coefficient(counts->K1, counts->K2, counts->K3, a, b));
  return sum.scaled(pow(zeta_conj(ev.chirality()), ev.t()));
}

Propagator propagator_closed_form(const Site& from, const Site& to,
                                  std::int64_t t, Chirality c) {
  if (t < 0) throw std::invalid_argument("negative time");
  if (t == 0)
    return make_propagator(from, to, t, c,
                           from == to ? SpinMatrix::identity() : SpinMatrix::zero());
  if (t == 1) return make_propagator(from, to, t, c, one_step_matrix(to - from, c));
  ClosedFormEvaluator ev(t, c);
  return make_propagator(from, to, t, c, closed_form_matrix(to - from, ev));
}

std::map<Site, SpinMatrix> propagator_table_by_stepping(const Site& from,
                                                        std::int64_t t,
                                                        Chirality c) {
  const WalkState up = evolve(WalkState::delta(from, {Amplitude::one(), {}}), t, c);
  const WalkState down = evolve(WalkState::delta(from, {{}, Amplitude::one()}), t, c);
  std::map<Site, SpinMatrix> out;
  for (const auto& [x, v] : up.sites()) {
    SpinMatrix& m = out[x];
    m.at(0, 0) = v.up;
    m.at(1, 0) = v.down;
  }
  for (const auto& [x, v] : down.sites()) {
    SpinMatrix& m = out[x];
    m.at(0, 1) = v.up;
    m.at(1, 1) = v.down;
  }
  return out;
}

std::map<Site, SpinMatrix> path_sum_table(const Site& from, std::int64_t t,
                                          Chirality c, std::uint64_t budget) {
  if (t < 0) throw std::invalid_argument("negative time");
  double cost = 1;
  for (std::int64_t k = 0; k < t; ++k) cost *= 8;
  if (cost > static_cast<double>(budget))
    throw BudgetExceeded("path enumeration cost 8^" + std::to_string(t) +
                         " exceeds budget " + std::to_string(budget));
  const auto table = transition_table(c);
  std::map<Site, SpinMatrix> out;
  // Depth-first with shared prefix products; the matrix of a path is the
  // product of the inverse-step hopping matrices, innermost factor first.
  auto walk = [&](auto&& self, const Site& x, std::int64_t depth,
                  const SpinMatrix& prefix) -> void {
    if (depth == t) {
      auto [it, inserted] = out.try_emplace(x, prefix);
      if (!inserted) it->second = it->second + prefix;
      return;
    }
    for (const auto& l : StepIndex::all()) {
      self(self, x + step_vector(l), depth + 1,
           table[l.negated().dense()] * prefix);
    }
  };
  walk(walk, from, 0, SpinMatrix::identity());
  return out;
}

std::vector<Propagator> cone_table(const Site& from, std::int64_t t,
                                   Chirality c, int jobs) {
  if (t < 0) throw std::invalid_argument("negative time");
  const std::vector<Site> targets = past_causal_cone(from, t);
  std::vector<Propagator> out(targets.size());
  if (t < 2 || jobs <= 1) {
    if (t >= 2) {
      ClosedFormEvaluator ev(t, c);
      for (std::size_t i = 0; i < targets.size(); ++i)
        out[i] = make_propagator(from, targets[i], t, c,
                                 closed_form_matrix(targets[i] - from, ev));
    } else {
      for (std::size_t i = 0; i < targets.size(); ++i)
        out[i] = propagator_closed_form(from, targets[i], t, c);
    }
    return out;
  }
  const int workers = std::min<int>(jobs, static_cast<int>(targets.size()));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      ClosedFormEvaluator ev(t, c);
      for (std::size_t i = w; i < targets.size(); i += workers)
        out[i] = make_propagator(from, targets[i], t, c,
                                 closed_form_matrix(targets[i] - from, ev));
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

WalkState convolve(const WalkState& s, std::int64_t t, Chirality c) {
  if (t < 0) throw std::invalid_argument("negative time");
  if (t == 0) return s;
  WalkState out;
  if (s.empty()) return out;
  // Propagators depend on the displacement only; cache per offset.
  std::map<Vec3, SpinMatrix> cache;
  std::optional<ClosedFormEvaluator> ev;
  if (t >= 2) ev.emplace(t, c);
  for (std::int64_t a = -t; a <= t; a += 2)
    for (std::int64_t b = -t; b <= t; b += 2)
      for (std::int64_t d = -t; d <= t; d += 2) {
        const Vec3 delta{a, b, d};
        cache.emplace(delta, ev ? closed_form_matrix(delta, *ev)
                                : one_step_matrix(delta, c));
      }
  for (const auto& [delta, m] : cache) out.accumulate_shifted(s, delta, m);
  return out;
}

std::array<std::complex<double>, 4> to_float(const Propagator& p) {
  return {p.matrix.at(0, 0).to_complex(), p.matrix.at(0, 1).to_complex(),
          p.matrix.at(1, 0).to_complex(), p.matrix.at(1, 1).to_complex()};
}

}  // namespace weylwalk
