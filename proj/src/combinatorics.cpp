#include "weylwalk/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <shared_mutex>

#include "weylwalk/walk.hpp"

namespace weylwalk {

namespace {

const BigInt kZeroBig = 0;

void require_bit(int v, const char* what) {
  if (v != 0 && v != 1) throw std::invalid_argument(std::string(what) + " must be 0 or 1");
}

}  // namespace

const BigInt ClosedFormEvaluator::kZero = 0;

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  static std::deque<std::vector<BigInt>> rows;
  static std::shared_mutex mu;
  {
    std::shared_lock lock(mu);
    if (static_cast<std::size_t>(n) < rows.size()) return rows[n][k];
  }
  std::unique_lock lock(mu);
  while (rows.size() <= static_cast<std::size_t>(n)) {
    const std::size_t m = rows.size();
    std::vector<BigInt> row(m + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t j = 1; j < m; ++j) row[j] = rows[m - 1][j - 1] + rows[m - 1][j];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

BigInt dfunc(std::int64_t t, std::int64_t p, std::int64_t m, std::int64_t n) {
  if (n < 0 || n > m || m > t || n > p) return 0;
  return binomial(m, n) * binomial(t - m, p - n);
}

BigInt compositions(std::int64_t K, std::int64_t n) {
  if (K == 0 && n == 0) return 1;
  if (n <= 0 || n > K) return 0;
  return binomial(K - 1, n - 1);
}

Amplitude f_sum(std::int64_t t, std::int64_t K, std::int64_t H, Chirality c) {
  if (t < 0 || K < 0 || H < 0 || K > t || H > t)
    throw std::invalid_argument("f_sum needs 0 <= K, H <= t");
  const int r = heaviside(K - H);
  const std::int64_t p = r ? H : t - H;
  const std::int64_t m = r ? t - K : K;
  const std::int64_t nmax = std::min({K, H, t - K, t - H});
  BigInt sum = 0;
  for (std::int64_t n = 0; n <= nmax; ++n) {
    if (n & 1)
      sum -= dfunc(t, p, m, n);
    else
      sum += dfunc(t, p, m, n);
  }
  return Amplitude(sum, 0, 0) * unit_power(c, std::llabs(K - H));
}

BigInt u_count(std::int64_t t, std::int64_t K, int a, int a_last,
               std::int64_t n) {
  require_bit(a, "first bit");
  require_bit(a_last, "last bit");
  return compositions(K, n + static_cast<std::int64_t>(a) * a_last) *
         compositions(t - K, n + static_cast<std::int64_t>(1 - a) * (1 - a_last));
}

BigInt alternating_dsum(std::int64_t eta, std::int64_t kappa, std::int64_t nu) {
  if (nu < 0 || kappa < 0 || eta < nu) return 0;
  BigInt sum = 0;
  const std::int64_t klo = std::max<std::int64_t>(0, kappa - (eta - nu));
  const std::int64_t khi = std::min(nu, kappa);
  for (std::int64_t k = klo; k <= khi; ++k) {
    const BigInt term = binomial(nu, k) * binomial(eta - nu, kappa - k);
    if (k & 1)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

WFactorParams w_factor_params(std::int64_t t, std::int64_t K1, std::int64_t K2,
                              int s, int a, int a_last, int b, std::int64_t J) {
  require_bit(s, "block selector");
  require_bit(a, "first bit");
  require_bit(a_last, "last bit");
  require_bit(b, "endpoint bit");
  const int r = heaviside(K1 - K2);
  const int sb = 1 - s;  // complementary block selector
  WFactorParams out;
  out.gamma = (s ^ a) & (sb ^ a_last);
  out.eta = sb * (t - 1) + (sb ? -1 : 1) * (K1 - a_last);
  out.kappa = static_cast<std::int64_t>(r ^ sb) * K2 +
              (sb ? -1 : 1) * ((1 - r) * K1 - J) -
              static_cast<std::int64_t>(sb ^ a_last) * b;
  return out;
}

BigInt w_factor(std::int64_t t, std::int64_t K1, std::int64_t K2, int s, int a,
                int a_last, int b, std::int64_t n, std::int64_t J) {
  const WFactorParams p = w_factor_params(t, K1, K2, s, a, a_last, b, J);
  if (n < p.gamma) return 0;
  BigInt v = alternating_dsum(p.eta, p.kappa, n - p.gamma);
  if ((p.gamma * b) & 1) v = -v;
  return v;
}

BigInt brute_force_cost(std::int64_t t, std::int64_t K1, std::int64_t K2,
                        std::int64_t K3) {
  return binomial(t, K1) * binomial(t, K2) * binomial(t, K3);
}

std::array<Amplitude, 4> c_coefficient_bruteforce_all(
    std::int64_t t, std::int64_t K1, std::int64_t K2, std::int64_t K3,
    Chirality c, std::uint64_t budget) {
  if (t < 1) throw std::invalid_argument("enumeration needs t >= 1");
  const BigInt cost = brute_force_cost(t, K1, K2, K3);
  if (cost > BigInt(budget))
    throw BudgetExceeded("enumeration cost " + cost.get_str() +
                         " exceeds budget " + std::to_string(budget));

  // Each string triple contributes sign * i^q; tally the four phase buckets
  // per endpoint pair and assemble exact Gaussian integers afterwards.
  std::int64_t tally[2][2][4] = {};
  const auto w1s = weight_class(static_cast<int>(t), static_cast<int>(K1));
  const auto w2s = weight_class(static_cast<int>(t), static_cast<int>(K2));
  for (const auto& w1 : w1s) {
    for (const auto& w2 : w2s) {
      for_each_weight_string(
          static_cast<int>(t), static_cast<int>(K3),
          [&](const BitString& w3) {
            const ProductFactorization f = closed_matrix_product(w1, w2, w3, c);
            tally[f.a][f.b][f.quarter_turns] += f.sign;
          });
    }
  }
  std::array<Amplitude, 4> out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      out[a * 2 + b] = Amplitude(BigInt(tally[a][b][0] - tally[a][b][2]),
                                 BigInt(tally[a][b][1] - tally[a][b][3]), 0);
  return out;
}

Amplitude c_coefficient_bruteforce(const CoefficientQuery& q,
                                   std::uint64_t budget) {
  require_bit(q.a, "endpoint bit a");
  require_bit(q.b, "endpoint bit b");
  return c_coefficient_bruteforce_all(q.t, q.K1, q.K2, q.K3, q.chirality,
                                      budget)[q.a * 2 + q.b];
}

Amplitude c_coefficient(const CoefficientQuery& q) {
  ClosedFormEvaluator ev(q.t, q.chirality);
  return ev.coefficient(q.K1, q.K2, q.K3, q.a, q.b);
}

ClosedFormEvaluator::ClosedFormEvaluator(std::int64_t t, Chirality c)
    : t_(t), chi_(c) {
  if (t < 2) throw std::invalid_argument("closed form needs t >= 2");
  pascal_.resize(t + 1);
  for (std::int64_t n = 0; n <= t; ++n) {
    auto& row = pascal_[n];
    row.resize(n + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::int64_t j = 1; j < n; ++j)
      row[j] = pascal_[n - 1][j - 1] + pascal_[n - 1][j];
  }
  f_memo_.resize((t + 1) * (t + 1));
  f_set_.assign((t + 1) * (t + 1), 0);
  dsum_memo_.reserve(1024);
}

const BigInt& ClosedFormEvaluator::binom(std::int64_t n, std::int64_t k) const {
  if (k < 0 || n < 0 || k > n || n > t_) return kZero;
  return pascal_[n][k];
}

const BigInt& ClosedFormEvaluator::dsum(std::int64_t eta, std::int64_t kappa,
                                        std::int64_t nu) {
  if (nu < 0 || kappa < 0 || eta < nu) return kZero;
  const std::uint64_t key = (static_cast<std::uint64_t>(eta) << 42) |
                            (static_cast<std::uint64_t>(kappa) << 21) |
                            static_cast<std::uint64_t>(nu);
  auto it = dsum_memo_.find(key);
  if (it != dsum_memo_.end()) return it->second;
  BigInt sum = 0;
  const std::int64_t klo = std::max<std::int64_t>(0, kappa - (eta - nu));
  const std::int64_t khi = std::min(nu, kappa);
  for (std::int64_t k = klo; k <= khi; ++k) {
    const BigInt term = binom(nu, k) * binom(eta - nu, kappa - k);
    if (k & 1)
      sum -= term;
    else
      sum += term;
  }
  return dsum_memo_.emplace(key, std::move(sum)).first->second;
}

const Amplitude& ClosedFormEvaluator::fval(std::int64_t K, std::int64_t H) {
  const std::size_t idx = K * (t_ + 1) + H;
  if (!f_set_[idx]) {
    const int r = heaviside(K - H);
    const std::int64_t p = r ? H : t_ - H;
    const std::int64_t m = r ? t_ - K : K;
    const std::int64_t nmax = std::min({K, H, t_ - K, t_ - H});
    BigInt sum = 0;
    for (std::int64_t n = 0; n <= nmax; ++n) {
      const BigInt term = binom(m, n) * binom(t_ - m, p - n);
      if (n & 1)
        sum -= term;
      else
        sum += term;
    }
    f_memo_[idx] = Amplitude(sum, 0, 0) * unit_power(chi_, std::llabs(K - H));
    f_set_[idx] = 1;
  }
  return f_memo_[idx];
}

Amplitude ClosedFormEvaluator::coefficient(std::int64_t K1, std::int64_t K2,
                                           std::int64_t K3, int a, int b) {
  require_bit(a, "endpoint bit a");
  require_bit(b, "endpoint bit b");
  if (K1 < 0 || K2 < 0 || K3 < 0 || K1 > t_ || K2 > t_ || K3 > t_)
    throw std::invalid_argument("coefficient needs 0 <= Kj <= t");

  const auto comp = [this](std::int64_t K, std::int64_t n) -> BigInt {
    if (K == 0 && n == 0) return 1;
    if (n <= 0 || n > K) return 0;
    return binom(K - 1, n - 1);
  };

  const std::int64_t base_tau = std::llabs(K1 - K2);
  Amplitude acc;
  for (int a_last = 0; a_last < 2; ++a_last) {
    const WFactorParams p0 = w_factor_params(t_, K1, K2, 0, a, a_last, b, 0);
    const WFactorParams p1 = w_factor_params(t_, K1, K2, 1, a, a_last, b, 0);
    // kappa is affine in J with slope +1 for s=0 and -1 for s=1.
    const int sign = ((p0.gamma + p1.gamma) * b) & 1;
    const std::int64_t nmax = std::min(K1, t_ - K1);
    for (std::int64_t n = 0; n <= nmax; ++n) {
      const BigInt ucount =
          comp(K1, n + static_cast<std::int64_t>(a) * a_last) *
          comp(t_ - K1, n + static_cast<std::int64_t>(1 - a) * (1 - a_last));
      if (ucount == 0) continue;
      if (n < p0.gamma || n < p1.gamma) continue;
      for (std::int64_t J = 0; J <= K2; ++J) {
        const BigInt& v0 = dsum(p0.eta, p0.kappa + J, n - p0.gamma);
        if (v0 == 0) continue;
        const BigInt& v1 = dsum(p1.eta, p1.kappa - J, n - p1.gamma);
        if (v1 == 0) continue;
        const std::int64_t tau = base_tau + 2 * J;
        if (tau > t_)
          throw std::logic_error("nonzero interleaving with overlap weight > t");
        const Amplitude& f = fval(tau, K3);
        if (f.is_zero()) continue;
        BigInt coef = ucount * v0 * v1;
        if (sign) coef = -coef;
        acc += f * Amplitude(std::move(coef), 0, 0);
      }
    }
  }
  return acc;
}

}  // namespace weylwalk
