#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weylwalk/amplitude.hpp"
#include "weylwalk/bitstring.hpp"
#include "weylwalk/lattice.hpp"

namespace weylwalk::testing {

/// Independent enumeration of all strings of one length and weight, built on
/// std::next_permutation rather than the library's own iterator.
inline std::vector<BitString> enumerate_weight_class(int length, int weight) {
  std::vector<char> pattern(static_cast<std::size_t>(length), 0);
  std::fill(pattern.begin(), pattern.begin() + weight, 1);
  std::sort(pattern.begin(), pattern.end());  // lowest permutation first
  std::vector<BitString> out;
  do {
    BitString w(length);
    for (int i = 0; i < length; ++i)
      if (pattern[static_cast<std::size_t>(i)]) w.set_bit(i, true);
    out.push_back(w);
  } while (std::next_permutation(pattern.begin(), pattern.end()));
  return out;
}

/// All 8^t step sequences of length t, as vectors of generator indices.
inline void for_each_step_sequence(
    std::int64_t t, const std::function<void(const std::vector<StepIndex>&)>& fn) {
  std::vector<StepIndex> seq(static_cast<std::size_t>(t), StepIndex(1));
  std::vector<int> digits(static_cast<std::size_t>(t), 0);
  while (true) {
    for (std::size_t i = 0; i < digits.size(); ++i)
      seq[i] = StepIndex::all()[static_cast<std::size_t>(digits[i])];
    fn(seq);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == 8) digits[i++] = 0;
    if (i == digits.size()) break;
  }
}

inline Amplitude amp(long re, long im, long log2_den) {
  return Amplitude(re, im, log2_den);
}

}  // namespace weylwalk::testing
