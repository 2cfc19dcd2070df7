#pragma once

#include <array>

#include "weylwalk/amplitude.hpp"

namespace weylwalk {

/// Two-component spin amplitude attached to a lattice site.
struct Spinor {
  Amplitude up, down;

  bool is_zero() const { return up.is_zero() && down.is_zero(); }
  Spinor operator+(const Spinor& o) const { return {up + o.up, down + o.down}; }
  Spinor conjugated() const { return {up.conjugated(), down.conjugated()}; }
  Amplitude norm2() const { return up.norm2() + down.norm2(); }
  bool operator==(const Spinor& o) const {
    return up == o.up && down == o.down;
  }
};

/// 2x2 matrix of exact amplitudes (row-major).
class SpinMatrix {
 public:
  SpinMatrix() = default;

  static SpinMatrix identity() {
    SpinMatrix m;
    m.at(0, 0) = Amplitude::one();
    m.at(1, 1) = Amplitude::one();
    return m;
  }
  static SpinMatrix zero() { return SpinMatrix(); }

  /// Build from integer entries (row-major).
  static SpinMatrix from_ints(long a00, long a01, long a10, long a11) {
    SpinMatrix m;
    m.at(0, 0) = Amplitude(a00);
    m.at(0, 1) = Amplitude(a01);
    m.at(1, 0) = Amplitude(a10);
    m.at(1, 1) = Amplitude(a11);
    return m;
  }

  Amplitude& at(int r, int c) { return e_[r * 2 + c]; }
  const Amplitude& at(int r, int c) const { return e_[r * 2 + c]; }

  bool is_zero() const {
    for (const auto& a : e_)
      if (!a.is_zero()) return false;
    return true;
  }

  SpinMatrix operator+(const SpinMatrix& o) const;
  SpinMatrix operator-(const SpinMatrix& o) const;
  SpinMatrix operator*(const SpinMatrix& o) const;
  SpinMatrix scaled(const Amplitude& s) const;
  SpinMatrix times_i(long q) const;
  SpinMatrix dagger() const;
  SpinMatrix conjugated() const;
  Spinor apply(const Spinor& v) const;

  bool operator==(const SpinMatrix& o) const { return e_ == o.e_; }
  bool operator!=(const SpinMatrix& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::array<Amplitude, 4> e_{};
};

}  // namespace weylwalk
