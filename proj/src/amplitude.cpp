#include "weylwalk/amplitude.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weylwalk {

namespace {

// 2-adic valuation; only called on nonzero values.  mpz_scan1 counts
// trailing zeros for negative operands as well (two's-complement view).
unsigned long val2(const BigInt& x) { return mpz_scan1(x.get_mpz_t(), 0); }

}  // namespace

void Amplitude::normalize() {
  if (d_ < 0) {
    // A negative exponent is just a power of two in the numerators.
    mpz_mul_2exp(re_.get_mpz_t(), re_.get_mpz_t(), -d_);
    mpz_mul_2exp(im_.get_mpz_t(), im_.get_mpz_t(), -d_);
    d_ = 0;
  }
  if (re_ == 0 && im_ == 0) {
    d_ = 0;
    return;
  }
  unsigned long v = static_cast<unsigned long>(d_);
  if (re_ != 0) v = std::min(v, val2(re_));
  if (im_ != 0) v = std::min(v, val2(im_));
  if (v > 0) {
    mpz_tdiv_q_2exp(re_.get_mpz_t(), re_.get_mpz_t(), v);
    mpz_tdiv_q_2exp(im_.get_mpz_t(), im_.get_mpz_t(), v);
    d_ -= static_cast<long>(v);
  }
}

Amplitude Amplitude::operator+(const Amplitude& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (d_ == o.d_) return Amplitude(re_ + o.re_, im_ + o.im_, d_);
  // Align on the larger denominator exponent.
  const long d = std::max(d_, o.d_);
  BigInt a = re_, b = im_, c = o.re_, e = o.im_;
  if (d > d_) {
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), d - d_);
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), d - d_);
  }
  if (d > o.d_) {
    mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), d - o.d_);
    mpz_mul_2exp(e.get_mpz_t(), e.get_mpz_t(), d - o.d_);
  }
  return Amplitude(a + c, b + e, d);
}

Amplitude Amplitude::operator-(const Amplitude& o) const { return *this + (-o); }

Amplitude Amplitude::operator*(const Amplitude& o) const {
  if (is_zero() || o.is_zero()) return Amplitude();
  return Amplitude(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_,
                   d_ + o.d_);
}

Amplitude Amplitude::operator-() const {
  Amplitude r = *this;
  r.re_ = -r.re_;
  r.im_ = -r.im_;
  return r;
}

void Amplitude::accumulate_rotated(const Amplitude& o, int sign,
                                   long quarter_turns) {
  if (o.is_zero()) return;
  if (this == &o) {
    const Amplitude copy = o;
    accumulate_rotated(copy, sign, quarter_turns);
    return;
  }
  const long q = ((quarter_turns % 4) + 4) % 4;
  // sign * i^q * (a + b*i): which source component lands where, with signs.
  const bool swap = (q & 1) != 0;
  const BigInt& to_re = swap ? o.im_ : o.re_;
  const BigInt& to_im = swap ? o.re_ : o.im_;
  int sgn_re = sign, sgn_im = sign;
  if (q == 1 || q == 2) sgn_re = -sgn_re;
  if (q == 2 || q == 3) sgn_im = -sgn_im;

  if (is_zero()) {
    // A rotation of a canonical value is canonical.
    d_ = o.d_;
    if (sgn_re > 0)
      re_ = to_re;
    else
      mpz_neg(re_.get_mpz_t(), to_re.get_mpz_t());
    if (sgn_im > 0)
      im_ = to_im;
    else
      mpz_neg(im_.get_mpz_t(), to_im.get_mpz_t());
    return;
  }

  long shift_theirs = d_ - o.d_;
  if (shift_theirs < 0) {
    mpz_mul_2exp(re_.get_mpz_t(), re_.get_mpz_t(), -shift_theirs);
    mpz_mul_2exp(im_.get_mpz_t(), im_.get_mpz_t(), -shift_theirs);
    d_ = o.d_;
    shift_theirs = 0;
  }
  static thread_local BigInt scratch;
  const auto add_into = [&](BigInt& dst, const BigInt& src, int sgn) {
    const BigInt* aligned = &src;
    if (shift_theirs != 0) {
      mpz_mul_2exp(scratch.get_mpz_t(), src.get_mpz_t(), shift_theirs);
      aligned = &scratch;
    }
    if (sgn > 0)
      mpz_add(dst.get_mpz_t(), dst.get_mpz_t(), aligned->get_mpz_t());
    else
      mpz_sub(dst.get_mpz_t(), dst.get_mpz_t(), aligned->get_mpz_t());
  };
  add_into(re_, to_re, sgn_re);
  add_into(im_, to_im, sgn_im);
  normalize();
}

Amplitude Amplitude::conjugated() const {
  Amplitude r = *this;
  r.im_ = -r.im_;
  return r;
}

Amplitude Amplitude::times_i(long q) const {
  Amplitude r = *this;
  switch (((q % 4) + 4) % 4) {
    case 0:
      break;
    case 1:
      r.re_ = -im_;
      r.im_ = re_;
      break;
    case 2:
      r.re_ = -re_;
      r.im_ = -im_;
      break;
    case 3:
      r.re_ = im_;
      r.im_ = -re_;
      break;
  }
  return r;
}

namespace {

double dyadic_to_double(const BigInt& num, long d) {
  if (num == 0) return 0.0;
  mpfr_t v;
  mpfr_init2(v, 53);
  mpfr_set_z(v, num.get_mpz_t(), MPFR_RNDN);
  mpfr_div_2si(v, v, d, MPFR_RNDN);
  const double out = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clear(v);
  if (std::isinf(out))
    throw std::range_error("amplitude overflows double precision");
  return out;
}

}  // namespace

std::complex<double> Amplitude::to_complex() const {
  return {dyadic_to_double(re_, d_), dyadic_to_double(im_, d_)};
}

std::string Amplitude::str() const {
  std::string s = "(" + re_.get_str() + (im_ >= 0 ? "+" : "") + im_.get_str() +
                  "i)";
  if (d_ != 0) s += "/2^" + std::to_string(d_);
  return s;
}

Amplitude pow(const Amplitude& base, unsigned long e) {
  Amplitude acc = Amplitude::one();
  Amplitude b = base;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

Amplitude unit_power(Chirality c, long q) {
  return Amplitude::one().times_i(sign_of(c) > 0 ? q : -q);
}

}  // namespace weylwalk
