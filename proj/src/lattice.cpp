#include "weylwalk/lattice.hpp"

#include <stdexcept>

namespace weylwalk {

Site::Site(std::int64_t a, std::int64_t b, std::int64_t c) : x1(a), x2(b), x3(c) {
  const auto p = a & 1;
  if ((b & 1) != p || (c & 1) != p)
    throw std::invalid_argument("site coordinates must share parity: (" +
                                std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ")");
}

std::string Site::str() const {
  return "(" + std::to_string(x1) + "," + std::to_string(x2) + "," +
         std::to_string(x3) + ")";
}

StepIndex::StepIndex(int l) : l_(l) {
  if (l == 0 || l < -4 || l > 4)
    throw std::invalid_argument("step index must be in {+-1..+-4}");
}

const std::array<StepIndex, 8>& StepIndex::all() {
  static const std::array<StepIndex, 8> k = {
      StepIndex(1),  StepIndex(2),  StepIndex(3),  StepIndex(4),
      StepIndex(-1), StepIndex(-2), StepIndex(-3), StepIndex(-4)};
  return k;
}

Vec3 step_vector(StepIndex l) {
  static constexpr std::array<Vec3, 4> base = {{
      {1, 1, 1},    // h_1
      {1, -1, -1},  // h_2
      {-1, 1, -1},  // h_3
      {-1, -1, 1},  // h_4
  }};
  const Vec3& v = base[(l.value() > 0 ? l.value() : -l.value()) - 1];
  return l.value() > 0 ? v : -v;
}

StepCode step_codec(StepIndex l) {
  static constexpr std::array<StepCode, 4> pos = {{
      {0, 1, 1},  // h_1
      {1, 1, 0},  // h_2
      {1, 0, 1},  // h_3
      {0, 0, 0},  // h_4
  }};
  const StepCode& c = pos[(l.value() > 0 ? l.value() : -l.value()) - 1];
  return l.value() > 0 ? c : c.complemented();
}

StepIndex decode_step(StepCode code) {
  for (const auto& l : StepIndex::all())
    if (step_codec(l) == code) return l;
  throw std::invalid_argument("step code bits must be 0/1");
}

std::pair<Site, StepCounts> path_endpoint(const Site& from,
                                          std::span<const StepIndex> steps) {
  Site x = from;
  StepCounts counts;
  for (const auto& l : steps) {
    x = x + step_vector(l);
    ++counts.count(l);
  }
  return {x, counts};
}

std::optional<StringCounts> string_counts(const Site& from, const Site& to,
                                          std::int64_t t) {
  if (t < 0) throw std::invalid_argument("negative time");
  const Vec3 d = to - from;
  // The three strings collect one code bit per step of the inverse path;
  // their weights read off the displacement coordinate by coordinate.
  const std::int64_t twoK1 = t + d[2];
  const std::int64_t twoK2 = t - d[0];
  const std::int64_t twoK3 = t - d[1];
  for (auto v : {twoK1, twoK2, twoK3})
    if (v < 0 || v > 2 * t || (v & 1)) return std::nullopt;
  return StringCounts{t, twoK1 / 2, twoK2 / 2, twoK3 / 2};
}

std::vector<Site> past_causal_cone(const Site& to, std::int64_t t) {
  if (t < 0) throw std::invalid_argument("negative time");
  std::vector<Site> out;
  out.reserve(static_cast<std::size_t>((t + 1) * (t + 1) * (t + 1)));
  for (std::int64_t a = -t; a <= t; a += 2)
    for (std::int64_t b = -t; b <= t; b += 2)
      for (std::int64_t c = -t; c <= t; c += 2)
        out.push_back(to + Vec3{a, b, c});
  return out;
}

}  // namespace weylwalk
