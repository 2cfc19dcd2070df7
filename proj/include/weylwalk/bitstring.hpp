#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weylwalk {

/// Fixed-length binary string.  Positions are 0-based; position 0 is the
/// first letter (leftmost in the printed form).  Strings up to 64 letters
/// live in a single machine word so the hot enumeration paths never touch
/// the heap; longer strings fall back to a block representation.
class BitString {
 public:
  explicit BitString(int length);
  /// length <= 64; bit k of `bits` is position k.
  BitString(int length, std::uint64_t bits);
  /// Parse "0110..."; the first character is position 0.
  static BitString parse(std::string_view s);

  int length() const { return len_; }
  bool bit(int pos) const;
  void set_bit(int pos, bool value);

  /// Number of set positions.
  int weight() const;

  /// Circular shift: result position i holds the old position (i+1) mod len,
  /// i.e. the string rotates one place toward the front.
  BitString cyclic_shift() const;

  BitString operator^(const BitString& o) const;
  BitString operator&(const BitString& o) const;
  BitString complemented() const;

  /// True when all set positions precede all clear positions (sorted form).
  bool is_canonical() const;

  /// Stable sorting permutation: returns the sorted string together with
  /// perm, where perm[j] is the source position of output position j.  Set
  /// positions keep their relative order, as do clear positions.
  std::pair<BitString, std::vector<int>> canonicalized() const;

  bool operator==(const BitString& o) const;
  bool operator!=(const BitString& o) const { return !(*this == o); }

  std::string str() const;

  /// Word accessor, valid for length <= 64.
  std::uint64_t word() const { return word_; }

 private:
  bool small() const { return len_ <= 64; }

  int len_;
  std::uint64_t word_ = 0;
  std::vector<std::uint64_t> blocks_;  // used when len_ > 64
};

/// Gather: result position j holds w position perm[j].
BitString apply_permutation(const std::vector<int>& perm, const BitString& w);
/// Scatter (inverse of apply_permutation).
BitString apply_inverse_permutation(const std::vector<int>& perm,
                                    const BitString& w);

/// Visit every string of the given length and weight exactly once, in a
/// deterministic order.
void for_each_weight_string(int length, int weight,
                            const std::function<void(const BitString&)>& fn);

std::vector<BitString> weight_class(int length, int weight);

}  // namespace weylwalk
