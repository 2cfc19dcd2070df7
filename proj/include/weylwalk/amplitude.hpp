#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

namespace weylwalk {

using BigInt = mpz_class;

/// Selects one of the two conjugate walk solutions.  The coin constant is
/// zeta = (1 + s*i)/4 with s = sign_of(chirality), and every phase that the
/// combinatorial formulas produce is a power of (s*i).
enum class Chirality : int { plus = +1, minus = -1 };

inline int sign_of(Chirality c) { return static_cast<int>(c); }

inline Chirality conjugate(Chirality c) {
  return c == Chirality::plus ? Chirality::minus : Chirality::plus;
}

/// Exact dyadic Gaussian number  (re + i*im) / 2^log2_den  with big-integer
/// numerators.  This is the closure of everything the walk can produce: the
/// coin entries are quarter-integers and every t-step amplitude has a
/// denominator dividing 2^(2t).
///
/// Values are kept canonical: log2_den == 0, or at least one numerator is
/// odd.  Equality of canonical forms is plain field equality, so amplitudes
/// can be compared bit-exactly.
class Amplitude {
 public:
  Amplitude() : re_(0), im_(0), d_(0) {}
  Amplitude(long re, long im = 0, long log2_den = 0)
      : re_(re), im_(im), d_(log2_den) {
    normalize();
  }
  Amplitude(BigInt re, BigInt im, long log2_den = 0)
      : re_(std::move(re)), im_(std::move(im)), d_(log2_den) {
    normalize();
  }

  static Amplitude zero() { return Amplitude(); }
  static Amplitude one() { return Amplitude(1); }
  static Amplitude imag_unit() { return Amplitude(0, 1); }

  const BigInt& re() const { return re_; }
  const BigInt& im() const { return im_; }
  long log2_den() const { return d_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Amplitude operator+(const Amplitude& o) const;
  Amplitude operator-(const Amplitude& o) const;
  Amplitude operator*(const Amplitude& o) const;
  Amplitude operator-() const;
  Amplitude& operator+=(const Amplitude& o) { return *this = *this + o; }

  Amplitude conjugated() const;

  /// Multiply by i^q (q taken mod 4; negative q allowed).
  Amplitude times_i(long q) const;

  /// *this += sign * i^quarter_turns * o, reusing this object's storage.
  /// The workhorse of the evolution kernel: no temporaries are allocated
  /// when the denominators already agree.
  void accumulate_rotated(const Amplitude& o, int sign, long quarter_turns);

  /// |z|^2, exact (a real amplitude).
  Amplitude norm2() const { return *this * conjugated(); }

  bool operator==(const Amplitude& o) const {
    return d_ == o.d_ && re_ == o.re_ && im_ == o.im_;
  }
  bool operator!=(const Amplitude& o) const { return !(*this == o); }

  /// Nearest double-precision value of each component.  Throws
  /// std::range_error if a component overflows the double range.
  std::complex<double> to_complex() const;

  std::string str() const;

 private:
  void normalize();

  BigInt re_, im_;
  long d_;  // denominator exponent
};

Amplitude pow(const Amplitude& base, unsigned long e);

/// (s*i)^q for the selected chirality, q mod 4.
Amplitude unit_power(Chirality c, long q);

/// zeta = (1 + s*i)/4.
inline Amplitude zeta(Chirality c) { return Amplitude(1, sign_of(c), 2); }
inline Amplitude zeta_conj(Chirality c) { return zeta(c).conjugated(); }

}  // namespace weylwalk
