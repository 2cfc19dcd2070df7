#include "weylwalk/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace weylwalk {

namespace {

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
}

}  // namespace

BitString::BitString(int length) : len_(length) {
  if (length < 0) throw std::invalid_argument("negative string length");
  if (!small()) blocks_.assign((length + 63) / 64, 0);
}

BitString::BitString(int length, std::uint64_t bits) : len_(length) {
  if (length < 0 || length > 64)
    throw std::invalid_argument("word constructor needs 0 <= length <= 64");
  word_ = bits & low_mask(length);
}

BitString BitString::parse(std::string_view s) {
  BitString r(static_cast<int>(s.size()));
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw std::invalid_argument("bit string must be over {0,1}");
    r.set_bit(i, s[i] == '1');
  }
  return r;
}

bool BitString::bit(int pos) const {
  if (pos < 0 || pos >= len_) throw std::out_of_range("bit position");
  if (small()) return (word_ >> pos) & 1;
  return (blocks_[pos / 64] >> (pos % 64)) & 1;
}

void BitString::set_bit(int pos, bool value) {
  if (pos < 0 || pos >= len_) throw std::out_of_range("bit position");
  std::uint64_t& w = small() ? word_ : blocks_[pos / 64];
  const int sh = small() ? pos : pos % 64;
  if (value)
    w |= (1ULL << sh);
  else
    w &= ~(1ULL << sh);
}

int BitString::weight() const {
  if (small()) return std::popcount(word_);
  int n = 0;
  for (auto b : blocks_) n += std::popcount(b);
  return n;
}

BitString BitString::cyclic_shift() const {
  if (len_ == 0) return *this;
  if (small()) {
    BitString r(len_);
    r.word_ = ((word_ >> 1) | ((word_ & 1) << (len_ - 1))) & low_mask(len_);
    return r;
  }
  BitString r(len_);
  for (int i = 0; i < len_; ++i) r.set_bit(i, bit((i + 1) % len_));
  return r;
}

BitString BitString::operator^(const BitString& o) const {
  if (len_ != o.len_) throw std::invalid_argument("length mismatch");
  BitString r(len_);
  if (small()) {
    r.word_ = word_ ^ o.word_;
  } else {
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      r.blocks_[k] = blocks_[k] ^ o.blocks_[k];
  }
  return r;
}

BitString BitString::operator&(const BitString& o) const {
  if (len_ != o.len_) throw std::invalid_argument("length mismatch");
  BitString r(len_);
  if (small()) {
    r.word_ = word_ & o.word_;
  } else {
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      r.blocks_[k] = blocks_[k] & o.blocks_[k];
  }
  return r;
}

BitString BitString::complemented() const {
  BitString r(len_);
  if (small()) {
    r.word_ = (~word_) & low_mask(len_);
  } else {
    for (std::size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] = ~blocks_[k];
    const int tail = len_ % 64;
    if (tail) r.blocks_.back() &= low_mask(tail);
  }
  return r;
}

bool BitString::is_canonical() const {
  bool seen_zero = false;
  for (int i = 0; i < len_; ++i) {
    if (bit(i)) {
      if (seen_zero) return false;
    } else {
      seen_zero = true;
    }
  }
  return true;
}

std::pair<BitString, std::vector<int>> BitString::canonicalized() const {
  std::vector<int> perm;
  perm.reserve(len_);
  for (int i = 0; i < len_; ++i)
    if (bit(i)) perm.push_back(i);
  for (int i = 0; i < len_; ++i)
    if (!bit(i)) perm.push_back(i);
  return {apply_permutation(perm, *this), perm};
}

bool BitString::operator==(const BitString& o) const {
  if (len_ != o.len_) return false;
  return small() ? word_ == o.word_ : blocks_ == o.blocks_;
}

std::string BitString::str() const {
  std::string s(len_, '0');
  for (int i = 0; i < len_; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

BitString apply_permutation(const std::vector<int>& perm, const BitString& w) {
  BitString r(w.length());
  for (int j = 0; j < w.length(); ++j) r.set_bit(j, w.bit(perm[j]));
  return r;
}

BitString apply_inverse_permutation(const std::vector<int>& perm,
                                    const BitString& w) {
  BitString r(w.length());
  for (int j = 0; j < w.length(); ++j) r.set_bit(perm[j], w.bit(j));
  return r;
}

void for_each_weight_string(int length, int weight,
                            const std::function<void(const BitString&)>& fn) {
  if (weight < 0 || weight > length) return;
  if (length <= 63) {
    if (weight == 0) {
      fn(BitString(length, 0));
      return;
    }
    // Gosper's hack over a single word.
    std::uint64_t v = (1ULL << weight) - 1;
    const std::uint64_t limit = 1ULL << length;
    while (v < limit) {
      fn(BitString(length, v));
      const std::uint64_t x = v & (~v + 1);
      const std::uint64_t y = v + x;
      v = (((v & ~y) / x) >> 1) | y;
    }
    return;
  }
  // General case: iterate over sorted position sets.
  std::vector<int> idx(weight);
  for (int i = 0; i < weight; ++i) idx[i] = i;
  while (true) {
    BitString w(length);
    for (int p : idx) w.set_bit(p, true);
    fn(w);
    int k = weight - 1;
    while (k >= 0 && idx[k] == length - weight + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < weight; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<BitString> weight_class(int length, int weight) {
  std::vector<BitString> out;
  for_each_weight_string(length, weight,
                         [&](const BitString& w) { out.push_back(w); });
  return out;
}

}  // namespace weylwalk
