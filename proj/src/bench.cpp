#include "weylwalk/bench.hpp"

#include <chrono>
#include <vector>

#include "weylwalk/propagator.hpp"

namespace weylwalk {

namespace {

using Clock = std::chrono::steady_clock;

struct AmplitudeStats {
  std::size_t max_numerator_bits = 0;
  long max_log2_den = 0;

  void absorb(const Amplitude& a) {
    if (a.re() != 0)
      max_numerator_bits =
          std::max(max_numerator_bits, mpz_sizeinbase(a.re().get_mpz_t(), 2));
    if (a.im() != 0)
      max_numerator_bits =
          std::max(max_numerator_bits, mpz_sizeinbase(a.im().get_mpz_t(), 2));
    max_log2_den = std::max(max_log2_den, a.log2_den());
  }
  void absorb(const SpinMatrix& m) {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) absorb(m.at(r, c));
  }
};

io::Json row_json(std::int64_t t, const char* engine, double seconds,
                  std::size_t sites, const AmplitudeStats& stats) {
  io::Json row;
  row["t"] = t;
  row["engine"] = engine;
  row["seconds"] = seconds;
  row["sites"] = sites;
  row["max_numerator_bits"] = stats.max_numerator_bits;
  row["max_log2_den"] = stats.max_log2_den;
  return row;
}

// Central target of the t-step cone: the displacement whose string counts
// are all ceil(t/2), i.e. the origin for even t and (-1,-1,1) for odd t.
Site central_target(std::int64_t t) {
  const std::int64_t K = (t + 1) / 2;
  return Site(0, 0, 0) + Vec3{t - 2 * K, t - 2 * K, 2 * K - t};
}

}  // namespace

io::Json run_bench(std::int64_t t_max, std::uint64_t budget, int jobs) {
  const Site origin(0, 0, 0);
  io::Json rows = io::Json::array();
  std::vector<std::int64_t> grid;
  for (std::int64_t t : {1, 2, 5, 10, 20, 50, 100, 200})
    if (t <= t_max) grid.push_back(t);
  if (!grid.empty() && grid.back() != t_max) grid.push_back(t_max);

  for (const std::int64_t t : grid) {
    const Site to = central_target(t);
    const auto counts = string_counts(origin, to, t);

    {
      const auto t0 = Clock::now();
      const Propagator p = propagator_closed_form(origin, to, t, Chirality::plus);
      const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
      AmplitudeStats stats;
      stats.absorb(p.matrix);
      rows.push_back(row_json(t, "closed-form", dt, 1, stats));
    }

    if (counts &&
        brute_force_cost(t, counts->K1, counts->K2, counts->K3) <= budget) {
      const auto t0 = Clock::now();
      const Propagator p = propagator_brute_force(origin, to, t, Chirality::plus, budget);
      const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
      AmplitudeStats stats;
      stats.absorb(p.matrix);
      rows.push_back(row_json(t, "enumeration", dt, 1, stats));
    }

    // Stepping fills every intermediate cone; estimate sum (tau+1)^3.
    double step_cost = 0;
    for (std::int64_t tau = 1; tau <= t; ++tau)
      step_cost += static_cast<double>((tau + 1) * (tau + 1) * (tau + 1));
    if (step_cost <= static_cast<double>(budget)) {
      const auto t0 = Clock::now();
      const auto table = propagator_table_by_stepping(origin, t, Chirality::plus);
      const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
      AmplitudeStats stats;
      for (const auto& [site, m] : table) stats.absorb(m);
      rows.push_back(row_json(t, "stepping", dt, table.size(), stats));
    }

    const double cone_cost =
        static_cast<double>((t + 1) * (t + 1) * (t + 1)) * static_cast<double>(t);
    if (cone_cost <= static_cast<double>(budget)) {
      const auto t0 = Clock::now();
      const auto table = cone_table(origin, t, Chirality::plus, jobs);
      const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
      AmplitudeStats stats;
      for (const auto& p : table) stats.absorb(p.matrix);
      rows.push_back(row_json(t, "cone-closed-form", dt, table.size(), stats));
    }
  }

  io::Json out;
  out["t_max"] = t_max;
  out["budget"] = budget;
  out["jobs"] = jobs;
  out["rows"] = rows;
  return out;
}

}  // namespace weylwalk
