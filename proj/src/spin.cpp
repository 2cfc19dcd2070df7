#include "weylwalk/spin.hpp"

namespace weylwalk {

SpinMatrix SpinMatrix::operator+(const SpinMatrix& o) const {
  SpinMatrix r;
  for (int k = 0; k < 4; ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

SpinMatrix SpinMatrix::operator-(const SpinMatrix& o) const {
  SpinMatrix r;
  for (int k = 0; k < 4; ++k) r.e_[k] = e_[k] + (-o.e_[k]);
  return r;
}

SpinMatrix SpinMatrix::operator*(const SpinMatrix& o) const {
  SpinMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.at(i, j) = at(i, 0) * o.at(0, j) + at(i, 1) * o.at(1, j);
  return r;
}

SpinMatrix SpinMatrix::scaled(const Amplitude& s) const {
  SpinMatrix r;
  for (int k = 0; k < 4; ++k) r.e_[k] = e_[k] * s;
  return r;
}

SpinMatrix SpinMatrix::times_i(long q) const {
  SpinMatrix r;
  for (int k = 0; k < 4; ++k) r.e_[k] = e_[k].times_i(q);
  return r;
}

SpinMatrix SpinMatrix::dagger() const {
  SpinMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.at(i, j) = at(j, i).conjugated();
  return r;
}

SpinMatrix SpinMatrix::conjugated() const {
  SpinMatrix r;
  for (int k = 0; k < 4; ++k) r.e_[k] = e_[k].conjugated();
  return r;
}

Spinor SpinMatrix::apply(const Spinor& v) const {
  return {at(0, 0) * v.up + at(0, 1) * v.down,
          at(1, 0) * v.up + at(1, 1) * v.down};
}

std::string SpinMatrix::str() const {
  return "[[" + at(0, 0).str() + ", " + at(0, 1).str() + "], [" +
         at(1, 0).str() + ", " + at(1, 1).str() + "]]";
}

}  // namespace weylwalk
