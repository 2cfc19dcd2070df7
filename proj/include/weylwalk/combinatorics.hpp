#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "weylwalk/amplitude.hpp"
#include "weylwalk/bitstring.hpp"

namespace weylwalk {

/// Step function with heaviside(0) == 1.
inline int heaviside(std::int64_t x) { return x >= 0 ? 1 : 0; }

/// Binomial coefficient with out-of-range arguments mapped to zero.
/// Backed by a process-wide Pascal table; thread-safe.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Product of complementary binomials
///   D(t, p, m, n) = C(m, n) * C(t - m, p - n)
/// guarded to zero unless 0 <= n <= m <= t and n <= p.  Counts the strings
/// of a fixed overlap class; totals over n give C(t, p).
BigInt dfunc(std::int64_t t, std::int64_t p, std::int64_t m, std::int64_t n);

/// Number of ways to write K as an ordered sum of n positive integers:
/// C(K-1, n-1), with the empty case compositions(0, 0) = 1.
BigInt compositions(std::int64_t K, std::int64_t n);

/// Interference sum over one weight class:
///   f(K, H) = (s*i)^|K-H| * sum_n (-1)^n D(t, p, m, n)
/// where (p, m) = (H, t-K) when K >= H and (t-H, K) otherwise, and n runs
/// over 0..min{K, H, t-K, t-H}.  Equals the sum of (s*i)^weight(v^w) over
/// all w of weight H, for any fixed v of weight K.
Amplitude f_sum(std::int64_t t, std::int64_t K, std::int64_t H, Chirality c);

/// Number of length-t strings of weight K with first bit a, last bit a',
/// whose cyclic self-overlap weight(v ^ shift(v)) equals 2n:
///   u(n) = compositions(K, n + a*a') * compositions(t-K, n + (1-a)(1-a')).
BigInt u_count(std::int64_t t, std::int64_t K, int a, int a_last,
               std::int64_t n);

/// Alternating D-sum shared by the two interleaving factors:
///   sum_{k=0}^{nu} (-1)^k C(nu, k) * C(eta - nu, kappa - k).
BigInt alternating_dsum(std::int64_t eta, std::int64_t kappa, std::int64_t nu);

/// Parameters of one interleaving factor (s = 0 or 1).
struct WFactorParams {
  std::int64_t eta = 0, kappa = 0;
  int gamma = 0;
};

WFactorParams w_factor_params(std::int64_t t, std::int64_t K1, std::int64_t K2,
                              int s, int a, int a_last, int b, std::int64_t J);

/// Signed count of admissible interleavings of the second string with the
/// s-blocks of the first:  (-1)^(gamma*b) * alternating_dsum(eta, kappa,
/// n - gamma); zero when n < gamma.
BigInt w_factor(std::int64_t t, std::int64_t K1, std::int64_t K2, int s, int a,
                int a_last, int b, std::int64_t n, std::int64_t J);

struct CoefficientQuery {
  std::int64_t t = 0, K1 = 0, K2 = 0, K3 = 0;
  int a = 0, b = 0;
  Chirality chirality = Chirality::plus;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Enumeration cost of the brute-force coefficient: the product of the three
/// weight-class sizes.
BigInt brute_force_cost(std::int64_t t, std::int64_t K1, std::int64_t K2,
                        std::int64_t K3);

/// All four endpoint coefficients of one (K1, K2, K3) cell by literal
/// enumeration of the string triples, indexed [a*2+b].  Valid for t >= 1.
/// Throws BudgetExceeded when the enumeration cost is above `budget`.
std::array<Amplitude, 4> c_coefficient_bruteforce_all(
    std::int64_t t, std::int64_t K1, std::int64_t K2, std::int64_t K3,
    Chirality c, std::uint64_t budget = kDefaultBudget);

Amplitude c_coefficient_bruteforce(const CoefficientQuery& q,
                                   std::uint64_t budget = kDefaultBudget);

/// Closed-form endpoint coefficient; requires t >= 2.
Amplitude c_coefficient(const CoefficientQuery& q);

/// Memoizing evaluator for closed-form coefficients at a fixed (t,
/// chirality).  Reuse one instance when sweeping a cone or a time slice:
/// the D-sum and interference-sum caches are shared across calls.  Not
/// thread-safe; use one instance per thread.
class ClosedFormEvaluator {
 public:
  ClosedFormEvaluator(std::int64_t t, Chirality c);

  Amplitude coefficient(std::int64_t K1, std::int64_t K2, std::int64_t K3,
                        int a, int b);

  std::int64_t t() const { return t_; }
  Chirality chirality() const { return chi_; }

 private:
  const BigInt& binom(std::int64_t n, std::int64_t k) const;
  const BigInt& dsum(std::int64_t eta, std::int64_t kappa, std::int64_t nu);
  const Amplitude& fval(std::int64_t K, std::int64_t H);

  std::int64_t t_;
  Chirality chi_;
  std::vector<std::vector<BigInt>> pascal_;  // rows 0..t
  std::unordered_map<std::uint64_t, BigInt> dsum_memo_;
  std::vector<Amplitude> f_memo_;
  std::vector<char> f_set_;
  static const BigInt kZero;
};

}  // namespace weylwalk
