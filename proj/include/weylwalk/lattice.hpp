#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace weylwalk {

using Vec3 = std::array<std::int64_t, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

/// Site of the body-centered cubic lattice: either all coordinates even or
/// all coordinates odd.  Construction rejects mixed parity.
struct Site {
  std::int64_t x1 = 0, x2 = 0, x3 = 0;

  Site() = default;
  Site(std::int64_t a, std::int64_t b, std::int64_t c);

  bool even_parity() const { return (x1 & 1) == 0; }

  Site operator+(const Vec3& v) const { return Site(x1 + v[0], x2 + v[1], x3 + v[2]); }
  Vec3 operator-(const Site& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3}; }

  auto operator<=>(const Site&) const = default;

  std::string str() const;
};

/// One of the eight walk generators, indexed +1..+4 for h_1..h_4 and
/// -1..-4 for their inverses.
class StepIndex {
 public:
  explicit StepIndex(int l);

  int value() const { return l_; }
  StepIndex negated() const { return StepIndex(-l_); }

  /// Dense index 0..7: +1..+4 then -1..-4.
  int dense() const { return l_ > 0 ? l_ - 1 : 3 - l_; }

  static const std::array<StepIndex, 8>& all();

  bool operator==(const StepIndex& o) const { return l_ == o.l_; }

 private:
  int l_;
};

/// Three-bit label (b1, b2, b3) of a generator.
struct StepCode {
  int b1 = 0, b2 = 0, b3 = 0;

  int parity() const { return b1 ^ b2 ^ b3; }
  StepCode complemented() const { return {1 - b1, 1 - b2, 1 - b3}; }
  bool operator==(const StepCode&) const = default;
};

/// Lattice displacement of a generator.
Vec3 step_vector(StepIndex l);

/// Generator -> three-bit label; the label of the inverse generator is the
/// bitwise complement.
StepCode step_codec(StepIndex l);
StepIndex decode_step(StepCode code);

/// How many times each generator occurs in a step sequence.
struct StepCounts {
  std::array<std::int64_t, 8> n{};  // indexed by StepIndex::dense()

  std::int64_t& count(StepIndex l) { return n[l.dense()]; }
  std::int64_t count(StepIndex l) const { return n[l.dense()]; }
  std::int64_t total() const {
    std::int64_t s = 0;
    for (auto v : n) s += v;
    return s;
  }
};

/// Endpoint of a step sequence started at `from`, with the per-generator
/// occupation counts.
std::pair<Site, StepCounts> path_endpoint(const Site& from,
                                          std::span<const StepIndex> steps);

/// Set-bit counts (K1, K2, K3) of the three code strings shared by every
/// t-step path from `from` to `to`.  Each Kj reads off one coordinate of the
/// displacement; a path exists iff all three land in [0, t].
struct StringCounts {
  std::int64_t t = 0, K1 = 0, K2 = 0, K3 = 0;
  bool operator==(const StringCounts&) const = default;
};

std::optional<StringCounts> string_counts(const Site& from, const Site& to,
                                          std::int64_t t);

/// All sites that can reach `to` in exactly t steps, sorted
/// lexicographically.  The set is symmetric, so it equally lists the sites
/// reachable from `to` in t steps.
std::vector<Site> past_causal_cone(const Site& to, std::int64_t t);

}  // namespace weylwalk
