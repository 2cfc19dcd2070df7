#include "weylwalk/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "weylwalk/combinatorics.hpp"

namespace weylwalk {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SuiteResult& finish(SuiteResult& r, Clock::time_point t0) {
  r.seconds = seconds_since(t0);
  return r;
}

// Evaluates the message expression only on failure.
#define WW_CHECK(res, t0, cond, msg_expr)  \
  do {                                     \
    ++(res).checks;                        \
    if (!(cond)) {                         \
      (res).passed = false;                \
      (res).counterexample = (msg_expr);   \
      return finish((res), (t0));          \
    }                                      \
  } while (0)

template <typename... Ts>
std::string cat(Ts&&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

const char* chi_str(Chirality c) {
  return c == Chirality::plus ? "+" : "-";
}

constexpr std::array<Chirality, 2> kBothChiralities{Chirality::plus,
                                                    Chirality::minus};

std::uint64_t rnd_below(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

std::int64_t rnd_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  rnd_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Uniform random string of the given length and weight (partial
// Fisher-Yates on the position list; modulo bias is irrelevant here).
BitString random_weight_string(std::mt19937_64& rng, int length, int weight) {
  std::vector<int> pos(length);
  std::iota(pos.begin(), pos.end(), 0);
  BitString w(length);
  for (int i = 0; i < weight; ++i) {
    const int j =
        i + static_cast<int>(rnd_below(rng, static_cast<std::uint64_t>(length - i)));
    std::swap(pos[i], pos[j]);
    w.set_bit(pos[i], true);
  }
  return w;
}

BitString random_word(std::mt19937_64& rng, int length) {
  const std::uint64_t mask =
      length >= 64 ? ~0ull : ((1ull << length) - 1);
  return BitString(length, rng() & mask);
}

// ---------------------------------------------------------------------------
// Suite: one-step-unitarity
// The eight hopping matrices satisfy, for every displacement g expressible
// as a difference of generators, sum_{h'-h=g} A_{h'} A_h^dag = delta_{g,0} I
// (and the dagger-first order likewise).  unitarity_report checks all of
// them; the fault hook corrupts one matrix to prove the check has teeth.
// ---------------------------------------------------------------------------
SuiteResult suite_one_step_unitarity(const VerifyScales&, FaultInjection fault) {
  SuiteResult res{"one-step-unitarity", true, 0, 0, ""};
  const auto t0 = Clock::now();
  for (Chirality c : kBothChiralities) {
    auto table = transition_table(c);
    if (fault == FaultInjection::flip_sign)
      table[0] = SpinMatrix::zero() - table[0];
    const auto report = unitarity_report(table);
    WW_CHECK(res, t0, !report,
             cat("chirality ", chi_str(c), ": ", *report));
  }
  return finish(res, t0);
}

// ---------------------------------------------------------------------------
// Suite: matrix-product
// The closed form of a product of phase-normalized hopping matrices
// (one sign, one power of i, one base matrix) against the literal chain
// product: exhaustively for short strings, randomized for long ones.
// ---------------------------------------------------------------------------
SpinMatrix literal_chain_product(const BitString& w1, const BitString& w2,
                                 const BitString& w3, Chirality c) {
  SpinMatrix m = SpinMatrix::identity();
  for (int p = 0; p < w1.length(); ++p) {
    const StepCode code{w1.bit(p) ? 1 : 0, w2.bit(p) ? 1 : 0,
                        w3.bit(p) ? 1 : 0};
    m = a_tilde_matrix(code, c) * m;  // position 0 is the innermost factor
  }
  return m;
}

SuiteResult suite_matrix_product(const VerifyScales& sc, FaultInjection) {
  SuiteResult res{"matrix-product", true, 0, 0, ""};
  const auto t0 = Clock::now();
  for (std::int64_t t = 1; t <= sc.product_exhaustive_t_max; ++t) {
    for (Chirality c : kBothChiralities) {
      for (std::uint64_t u1 = 0; u1 < (1ull << t); ++u1)
        for (std::uint64_t u2 = 0; u2 < (1ull << t); ++u2)
          for (std::uint64_t u3 = 0; u3 < (1ull << t); ++u3) {
            const BitString w1(static_cast<int>(t), u1);
            const BitString w2(static_cast<int>(t), u2);
            const BitString w3(static_cast<int>(t), u3);
            const SpinMatrix closed =
                factorization_matrix(closed_matrix_product(w1, w2, w3, c));
            WW_CHECK(res, t0, closed == literal_chain_product(w1, w2, w3, c),
                     cat("t=", t, " chi=", chi_str(c), " w1=", w1.str(),
                         " w2=", w2.str(), " w3=", w3.str()));
          }
    }
  }
  std::mt19937_64 rng(sc.seed ^ 0x70726f64756374ull);
  const int t = static_cast<int>(sc.product_random_t);
  for (std::int64_t i = 0; i < sc.product_random_count; ++i) {
    const Chirality c = (i & 1) ? Chirality::minus : Chirality::plus;
    const BitString w1 = random_word(rng, t);
    const BitString w2 = random_word(rng, t);
    const BitString w3 = random_word(rng, t);
    const SpinMatrix closed =
        factorization_matrix(closed_matrix_product(w1, w2, w3, c));
    WW_CHECK(res, t0, closed == literal_chain_product(w1, w2, w3, c),
             cat("random sample ", i, " t=", t, " chi=", chi_str(c),
                 " w1=", w1.str(), " w2=", w2.str(), " w3=", w3.str()));
  }
  return finish(res, t0);
}

// ---------------------------------------------------------------------------
// Suite: weight-class-split
// Fix v of weight K.  As w runs over the strings of weight H, the xor
// weight i(v^w) takes the values |K-H|+2n, and the strings with a given n
// number dfunc(t, p, m, n).  Checked against literal enumeration for the
// sorted v and for a random (generally unsorted) v via its sorting
// permutation.
// ---------------------------------------------------------------------------
SuiteResult suite_weight_class_split(const VerifyScales& sc, FaultInjection) {
  SuiteResult res{"weight-class-split", true, 0, 0, ""};
  const auto t0 = Clock::now();
  std::mt19937_64 rng(sc.seed ^ 0x73706c6974ull);
  for (std::int64_t t = 1; t <= sc.split_t_max; ++t) {
    for (std::int64_t K = 0; K <= t; ++K) {
      // Sorted representative and one random representative of weight K.
      BitString sorted(static_cast<int>(t));
      for (std::int64_t i = 0; i < K; ++i) sorted.set_bit(static_cast<int>(i), true);
      const BitString v =
          random_weight_string(rng, static_cast<int>(t), static_cast<int>(K));
      const auto [canon, perm] = v.canonicalized();
      WW_CHECK(res, t0, canon == sorted,
               cat("canonicalized form of ", v.str(), " is not sorted"));
      WW_CHECK(res, t0, apply_permutation(perm, v) == sorted,
               cat("sorting permutation of ", v.str(), " does not sort it"));
      for (std::int64_t H = 0; H <= t; ++H) {
        const std::int64_t p = K >= H ? H : t - H;
        const std::int64_t m = K >= H ? t - K : K;
        const std::uint64_t low_mask = (K == 64) ? ~0ull : ((1ull << K) - 1);
        std::vector<std::int64_t> hist_sorted(static_cast<std::size_t>(t) + 1, 0);
        std::vector<std::int64_t> hist_random(static_cast<std::size_t>(t) + 1, 0);
        bool shape_ok = true;
        std::string shape_cx;
        for_each_weight_string(
            static_cast<int>(t), static_cast<int>(H), [&](const BitString& w) {
              if (!shape_ok) return;
              // Sorted representative: block weights determine the class.
              const std::uint64_t x = sorted.word() ^ w.word();
              const int left = std::popcount(x & low_mask);
              const int right = std::popcount(x >> K);
              const int iota = left + right;
              const int n = K >= H ? right : left;
              if (iota != std::abs(static_cast<int>(K - H)) + 2 * n ||
                  (K >= H && left != K - H + n) ||
                  (K < H && right != H - K + n)) {
                shape_ok = false;
                shape_cx = cat("t=", t, " K=", K, " H=", H, " w=", w.str(),
                               " block weights (", left, ",", right,
                               ") break the class shape");
                return;
              }
              ++hist_sorted[static_cast<std::size_t>(n)];
              // Random representative, classified through its sorting
              // permutation: xor commutes with relabeling positions.
              const std::uint64_t y =
                  apply_permutation(perm, v ^ w).word();
              const int rl = std::popcount(y & low_mask);
              const int rr = std::popcount(y >> K);
              ++hist_random[static_cast<std::size_t>(K >= H ? rr : rl)];
            });
        WW_CHECK(res, t0, shape_ok, shape_cx);
        BigInt total = 0;
        for (std::int64_t n = 0; n <= t; ++n) {
          const BigInt expect = dfunc(t, p, m, n);
          WW_CHECK(res, t0, BigInt(hist_sorted[static_cast<std::size_t>(n)]) == expect,
                   cat("t=", t, " K=", K, " H=", H, " n=", n, ": counted ",
                       hist_sorted[static_cast<std::size_t>(n)], ", split law gives ",
                       expect.get_str()));
          WW_CHECK(res, t0, hist_random[static_cast<std::size_t>(n)] ==
                       hist_sorted[static_cast<std::size_t>(n)],
                   cat("t=", t, " K=", K, " H=", H, " n=", n,
                       ": unsorted representative ", v.str(),
                       " splits differently"));
          const std::int64_t bound = std::min(std::min(K, H), std::min(t - K, t - H));
          WW_CHECK(res, t0, expect == 0 || n <= bound,
                   cat("t=", t, " K=", K, " H=", H, " n=", n,
                       " nonzero beyond the min bound"));
          total += expect;
        }
        WW_CHECK(res, t0, total == binomial(t, H),
                 cat("t=", t, " K=", K, " H=", H,
                     ": class sizes do not total C(t,H)"));
      }
    }
  }
  return finish(res, t0);
}

// ---------------------------------------------------------------------------
// Suite: shift-classes
// Within a weight class, strings are classified by first bit, last bit, and
// half the weight of v ^ cyclic_shift(v); the class sizes are products of
// composition counts (u_count).  Checked against literal enumeration.
// ---------------------------------------------------------------------------
SuiteResult suite_shift_classes(const VerifyScales& sc, FaultInjection) {
  SuiteResult res{"shift-classes", true, 0, 0, ""};
  const auto t0 = Clock::now();
  for (std::int64_t t = 1; t <= sc.shift_t_max; ++t) {
    for (std::int64_t K = 0; K <= t; ++K) {
      std::vector<std::int64_t> buckets(4 * static_cast<std::size_t>(t + 1), 0);
      bool shape_ok = true;
      std::string shape_cx;
      for_each_weight_string(
          static_cast<int>(t), static_cast<int>(K), [&](const BitString& v) {
            if (!shape_ok) return;
            const int overlap = (v ^ v.cyclic_shift()).weight();
            if (overlap % 2 != 0) {
              shape_ok = false;
              shape_cx = cat("t=", t, " K=", K, " v=", v.str(),
                             ": odd self-overlap weight ", overlap);
              return;
            }
            const std::int64_t n = overlap / 2;
            if (n > std::min(K, t - K)) {
              shape_ok = false;
              shape_cx = cat("t=", t, " K=", K, " v=", v.str(),
                             ": self-overlap class ", n, " above min(K, t-K)");
              return;
            }
            const int a = v.bit(0) ? 1 : 0;
            const int a_last = v.bit(static_cast<int>(t) - 1) ? 1 : 0;
            ++buckets[static_cast<std::size_t>((a * 2 + a_last) * (t + 1) + n)];
          });
      WW_CHECK(res, t0, shape_ok, shape_cx);
      BigInt total = 0;
      for (int a = 0; a < 2; ++a)
        for (int a_last = 0; a_last < 2; ++a_last)
          for (std::int64_t n = 0; n <= t; ++n) {
            const BigInt expect = u_count(t, K, a, a_last, n);
            const std::int64_t got =
                buckets[static_cast<std::size_t>((a * 2 + a_last) * (t + 1) + n)];
            WW_CHECK(res, t0, BigInt(got) == expect,
                     cat("t=", t, " K=", K, " a=", a, " a'=", a_last, " n=", n,
                         ": counted ", got, ", class formula gives ",
                         expect.get_str()));
            total += expect;
          }
      WW_CHECK(res, t0, total == binomial(t, K),
               cat("t=", t, " K=", K, ": shift classes do not total C(t,K)"));
    }
  }
  return finish(res, t0);
}

// ---------------------------------------------------------------------------
// Suite: interference-sum
// f_sum(t, K, H) must equal sum_w (s*i)^weight(v^w) over the whole weight-H
// class, for any reference string v of weight K.  Checked by literal
// phase-bucket enumeration for randomized references.
// ---------------------------------------------------------------------------
SuiteResult suite_interference_sum(const VerifyScales& sc, FaultInjection) {
  SuiteResult res{"interference-sum", true, 0, 0, ""};
  const auto t0 = Clock::now();
  std::mt19937_64 rng(sc.seed ^ 0x6673756dull);
  for (std::int64_t t = 1; t <= sc.interference_t_max; ++t) {
    for (std::int64_t K = 0; K <= t; ++K) {
      for (std::int64_t H = 0; H <= t; ++H) {
        for (int sample = 0; sample < sc.interference_samples; ++sample) {
          BitString v(static_cast<int>(t));
          if (sample == 0) {
            for (std::int64_t i = 0; i < K; ++i)
              v.set_bit(static_cast<int>(i), true);
          } else {
            v = random_weight_string(rng, static_cast<int>(t),
                                     static_cast<int>(K));
          }
          const std::uint64_t vw = v.word();
          std::array<std::int64_t, 4> phase_count{};
          for_each_weight_string(
              static_cast<int>(t), static_cast<int>(H),
              [&](const BitString& w) {
                ++phase_count[static_cast<std::size_t>(
                    std::popcount(vw ^ w.word()) & 3)];
              });
          for (Chirality c : kBothChiralities) {
            const Amplitude direct(
                BigInt(phase_count[0] - phase_count[2]),
                BigInt(sign_of(c) * (phase_count[1] - phase_count[3])), 0);
            WW_CHECK(res, t0, f_sum(t, K, H, c) == direct,
                     cat("t=", t, " K=", K, " H=", H, " chi=", chi_str(c),
                         " v=", v.str(), ": closed interference sum ",
                         f_sum(t, K, H, c).str(), " != enumerated ",
                         direct.str()));
          }
        }
      }
    }
  }
  return finish(res, t0);
}

// ---------------------------------------------------------------------------
// Suite: coefficient-closed-form
// The closed-form endpoint coefficients against literal enumeration of all
// admissible string triples, for every cell (K1, K2, K3, a, b) at each t.
// ---------------------------------------------------------------------------
SuiteResult suite_coefficient_closed_form(const VerifyScales& sc, FaultInjection) {
  SuiteResult res{"coefficient-closed-form", true, 0, 0, ""};
  const auto t0 = Clock::now();
  for (std::int64_t t = 2; t <= sc.coefficient_t_max; ++t) {
    for (Chirality c : kBothChiralities) {
      ClosedFormEvaluator ev(t, c);
      for (std::int64_t K1 = 0; K1 <= t; ++K1)
        for (std::int64_t K2 = 0; K2 <= t; ++K2)
          for (std::int64_t K3 = 0; K3 <= t; ++K3) {
            const auto enumerated =
                c_coefficient_bruteforce_all(t, K1, K2, K3, c, kDefaultBudget);
            for (int a = 0; a < 2; ++a)
              for (int b = 0; b < 2; ++b) {
                const Amplitude closed = ev.coefficient(K1, K2, K3, a, b);
                WW_CHECK(res, t0, closed == enumerated[a * 2 + b],
                         cat("t=", t, " chi=", chi_str(c), " K=(", K1, ",",
                             K2, ",", K3, ") a=", a, " b=", b, ": closed ",
                             closed.str(), " != enumerated ",
                             enumerated[a * 2 + b].str()));
              }
          }
    }
  }
  return finish(res, t0);
}

// ---------------------------------------------------------------------------
// Suite: triple-engine
// The three independent propagator computations (string enumeration,
// closed form, repeated stepping) and, for small t, the raw path-walking
// oracle must agree bit-exactly on every site of the causal cone, and must
// vanish off the cone.
// ---------------------------------------------------------------------------
SuiteResult suite_triple_engine(const VerifyScales& sc, FaultInjection) {
  SuiteResult res{"triple-engine", true, 0, 0, ""};
  const auto t0 = Clock::now();
  const Site origin(0, 0, 0);
  for (std::int64_t t = 0; t <= sc.engines_t_max; ++t) {
    for (Chirality c : kBothChiralities) {
      const auto step_table = propagator_table_by_stepping(origin, t, c);
      std::optional<ClosedFormEvaluator> ev;
      if (t >= 2) ev.emplace(t, c);
      std::map<Site, SpinMatrix> raw;
      const bool have_raw = t <= sc.raw_path_t_max;
      if (have_raw) raw = path_sum_table(origin, t, c, kDefaultBudget);

      const auto cone = past_causal_cone(origin, t);
      WW_CHECK(res, t0,
               cone.size() == static_cast<std::size_t>((t + 1) * (t + 1) * (t + 1)),
               cat("t=", t, ": cone size ", cone.size(), " != (t+1)^3"));
      for (const auto& site : cone) {
        const SpinMatrix brute =
            propagator_brute_force(origin, site, t, c, kDefaultBudget).matrix;
        const SpinMatrix closed =
            ev ? closed_form_matrix(site - origin, *ev)
               : propagator_closed_form(origin, site, t, c).matrix;
        const auto it = step_table.find(site);
        const SpinMatrix stepped =
            it == step_table.end() ? SpinMatrix::zero() : it->second;
        WW_CHECK(res, t0, brute == closed,
                 cat("t=", t, " chi=", chi_str(c), " to=", site.str(),
                     ": enumeration ", brute.str(), " != closed form ",
                     closed.str()));
        WW_CHECK(res, t0, brute == stepped,
                 cat("t=", t, " chi=", chi_str(c), " to=", site.str(),
                     ": enumeration ", brute.str(), " != stepping ",
                     stepped.str()));
        if (have_raw) {
          const auto rit = raw.find(site);
          const SpinMatrix raw_m =
              rit == raw.end() ? SpinMatrix::zero() : rit->second;
          // The raw oracle multiplies bare hopping matrices, so it already
          // carries the zeta*^t normalization.
          WW_CHECK(res, t0, brute == raw_m,
                   cat("t=", t, " chi=", chi_str(c), " to=", site.str(),
                       ": enumeration ", brute.str(), " != path walking ",
                       raw_m.str()));
        }
      }
      // Everything the stepping produced must lie inside the cone.
      for (const auto& [site, m] : step_table) {
        WW_CHECK(res, t0,
                 std::binary_search(cone.begin(), cone.end(), site),
                 cat("t=", t, " chi=", chi_str(c), " stepping reached ",
                     site.str(), " outside the causal cone"));
      }
      // Off-cone targets of the right parity give the zero matrix.
      for (const Vec3& d :
           {Vec3{t + 2, t, t}, Vec3{-(t + 2), -t, -t}, Vec3{t, t + 2, -t}}) {
        const Site off = origin + d;
        WW_CHECK(res, t0,
                 propagator_brute_force(origin, off, t, c, kDefaultBudget)
                     .matrix.is_zero(),
                 cat("t=", t, " chi=", chi_str(c), " to=", off.str(),
                     ": enumeration engine nonzero off the cone"));
        const SpinMatrix closed_off =
            ev ? closed_form_matrix(off - origin, *ev)
               : propagator_closed_form(origin, off, t, c).matrix;
        WW_CHECK(res, t0, closed_off.is_zero(),
                 cat("t=", t, " chi=", chi_str(c), " to=", off.str(),
                     ": closed form nonzero off the cone"));
        WW_CHECK(res, t0, step_table.find(off) == step_table.end(),
                 cat("t=", t, " chi=", chi_str(c), " to=", off.str(),
                     ": stepping nonzero off the cone"));
      }
    }
  }
  return finish(res, t0);
}

// ---------------------------------------------------------------------------
// Suite: completeness
// The t-step propagators over a full cone satisfy both completeness sums
// sum_x P^dag P = I and sum_x P P^dag = I, exactly.
// ---------------------------------------------------------------------------
SuiteResult suite_completeness(const VerifyScales& sc, FaultInjection) {
  SuiteResult res{"completeness", true, 0, 0, ""};
  const auto t0 = Clock::now();
  const Site origin(0, 0, 0);
  for (std::int64_t t = 0; t <= sc.completeness_t_max; ++t) {
    for (Chirality c : kBothChiralities) {
      const auto table = cone_table(origin, t, c, 1);
      SpinMatrix dag_first, dag_last;
      for (const auto& p : table) {
        dag_first = dag_first + p.matrix.dagger() * p.matrix;
        dag_last = dag_last + p.matrix * p.matrix.dagger();
      }
      WW_CHECK(res, t0, dag_first == SpinMatrix::identity(),
               cat("t=", t, " chi=", chi_str(c),
                   ": sum of P^dag P over the cone is ", dag_first.str()));
      WW_CHECK(res, t0, dag_last == SpinMatrix::identity(),
               cat("t=", t, " chi=", chi_str(c),
                   ": sum of P P^dag over the cone is ", dag_last.str()));
    }
  }
  return finish(res, t0);
}

// ---------------------------------------------------------------------------
// Suite: norm-conservation
// Random sparse states keep their exact norm under every single step.
// ---------------------------------------------------------------------------
SuiteResult suite_norm_conservation(const VerifyScales& sc, FaultInjection) {
  SuiteResult res{"norm-conservation", true, 0, 0, ""};
  const auto t0 = Clock::now();
  std::mt19937_64 rng(sc.seed ^ 0x6e6f726dull);
  for (int i = 1; i <= sc.norm_states; ++i) {
    const std::int64_t steps = (i - 1) % sc.norm_t_max + 1;
    const Chirality c = (i & 1) ? Chirality::plus : Chirality::minus;
    WalkState state = random_sparse_state(rng, 3, 2, i % 2 == 0);
    const Amplitude norm = state.norm2();
    WW_CHECK(res, t0, !norm.is_zero(),
             cat("state ", i, ": random state is empty"));
    for (std::int64_t k = 1; k <= steps; ++k) {
      state = step(state, c);
      WW_CHECK(res, t0, state.norm2() == norm,
               cat("state ", i, " chi=", chi_str(c), " after step ", k,
                   ": norm ", state.norm2().str(), " != ", norm.str()));
    }
  }
  return finish(res, t0);
}

// ---------------------------------------------------------------------------
// Suite: symmetry
// Swapping the chirality conjugates every propagator entry, and translating
// both endpoints by any lattice vector (either parity) leaves it unchanged.
// ---------------------------------------------------------------------------
SuiteResult suite_symmetry(const VerifyScales& sc, FaultInjection) {
  SuiteResult res{"symmetry", true, 0, 0, ""};
  const auto t0 = Clock::now();
  std::mt19937_64 rng(sc.seed ^ 0x73796d6dull);
  for (std::int64_t i = 0; i < sc.symmetry_samples; ++i) {
    const std::int64_t t = rnd_range(rng, 0, sc.symmetry_t_max);
    const int par = static_cast<int>(rnd_below(rng, 2));
    const Site from(par + 2 * rnd_range(rng, -5, 5),
                    par + 2 * rnd_range(rng, -5, 5),
                    par + 2 * rnd_range(rng, -5, 5));
    const std::int64_t K1 = rnd_range(rng, 0, t);
    const std::int64_t K2 = rnd_range(rng, 0, t);
    const std::int64_t K3 = rnd_range(rng, 0, t);
    const Site to = from + Vec3{t - 2 * K2, t - 2 * K3, 2 * K1 - t};

    const SpinMatrix plus = propagator_closed_form(from, to, t, Chirality::plus).matrix;
    const SpinMatrix minus = propagator_closed_form(from, to, t, Chirality::minus).matrix;
    WW_CHECK(res, t0, minus == plus.conjugated(),
             cat("sample ", i, " t=", t, " from=", from.str(), " to=", to.str(),
                 ": the two chiralities are not conjugate"));

    const Vec3 even{2 * rnd_range(rng, -4, 4), 2 * rnd_range(rng, -4, 4),
                    2 * rnd_range(rng, -4, 4)};
    const Vec3 odd{even[0] + 1, even[1] + 1, even[2] + 1};
    WW_CHECK(res, t0,
             propagator_closed_form(from + even, to + even, t, Chirality::plus)
                     .matrix == plus,
             cat("sample ", i, " t=", t, ": not invariant under even translation"));
    WW_CHECK(res, t0,
             propagator_closed_form(from + odd, to + odd, t, Chirality::plus)
                     .matrix == plus,
             cat("sample ", i, " t=", t, ": not invariant under odd translation"));
  }
  return finish(res, t0);
}

using SuiteFn = SuiteResult (*)(const VerifyScales&, FaultInjection);

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"one-step-unitarity", suite_one_step_unitarity},
      {"matrix-product", suite_matrix_product},
      {"weight-class-split", suite_weight_class_split},
      {"shift-classes", suite_shift_classes},
      {"interference-sum", suite_interference_sum},
      {"coefficient-closed-form", suite_coefficient_closed_form},
      {"triple-engine", suite_triple_engine},
      {"completeness", suite_completeness},
      {"norm-conservation", suite_norm_conservation},
      {"symmetry", suite_symmetry},
  };
  return reg;
}

}  // namespace

VerifyScales VerifyScales::standard() {
  VerifyScales s;
  s.engines_t_max = 6;
  s.raw_path_t_max = 5;
  s.coefficient_t_max = 6;
  s.split_t_max = 8;
  s.shift_t_max = 10;
  s.interference_t_max = 10;
  s.interference_samples = 8;
  s.product_exhaustive_t_max = 4;
  s.product_random_count = 20000;
  s.completeness_t_max = 10;
  s.norm_states = 20;
  s.norm_t_max = 20;
  s.symmetry_samples = 300;
  s.symmetry_t_max = 8;
  return s;
}

VerifyScales VerifyScales::quick() {
  VerifyScales s;
  s.engines_t_max = 4;
  s.raw_path_t_max = 3;
  s.coefficient_t_max = 4;
  s.split_t_max = 6;
  s.shift_t_max = 8;
  s.interference_t_max = 8;
  s.interference_samples = 4;
  s.product_exhaustive_t_max = 3;
  s.product_random_t = 16;
  s.product_random_count = 2000;
  s.completeness_t_max = 6;
  s.norm_states = 8;
  s.norm_t_max = 10;
  s.symmetry_samples = 60;
  s.symmetry_t_max = 6;
  return s;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suite_registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<SuiteResult> run_verify_suites(const VerifyScales& scales,
                                           const std::string& only,
                                           FaultInjection fault) {
  bool matched = false;
  std::vector<SuiteResult> results;
  for (const auto& [name, fn] : suite_registry()) {
    if (!only.empty() && name != only) continue;
    matched = true;
    try {
      results.push_back(fn(scales, fault));
    } catch (const std::exception& e) {
      results.push_back(SuiteResult{name, false, 0, 0,
                                    cat("exception: ", e.what())});
    }
  }
  if (!only.empty() && !matched)
    throw std::invalid_argument("unknown verification suite: " + only);
  return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

WalkState random_sparse_state(std::mt19937_64& rng, int max_sites,
                              std::int64_t box_radius, bool even_parity) {
  const int par = even_parity ? 0 : 1;
  const int count = 1 + static_cast<int>(rnd_below(rng, static_cast<std::uint64_t>(max_sites)));
  WalkState s;
  for (int i = 0; i < count; ++i) {
    const Site x(par + 2 * rnd_range(rng, -box_radius, box_radius),
                 par + 2 * rnd_range(rng, -box_radius, box_radius),
                 par + 2 * rnd_range(rng, -box_radius, box_radius));
    const auto coeff = [&] {
      return Amplitude(static_cast<long>(rnd_range(rng, -3, 3)),
                       static_cast<long>(rnd_range(rng, -3, 3)),
                       static_cast<long>(rnd_below(rng, 3)));
    };
    s.add(x, Spinor{coeff(), coeff()});
  }
  if (s.empty())
    s.add(Site(par, par, par), Spinor{Amplitude::one(), Amplitude::zero()});
  return s;
}

}  // namespace weylwalk
