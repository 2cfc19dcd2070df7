#include "weylwalk/walk.hpp"

#include <stdexcept>

namespace weylwalk {

SpinMatrix b_matrix(int a, int b) {
  if ((a & ~1) || (b & ~1)) throw std::invalid_argument("B index bits must be 0/1");
  static const std::array<SpinMatrix, 4> tbl = {
      SpinMatrix::from_ints(1, 0, -1, 0),  // B00
      SpinMatrix::from_ints(1, 0, 1, 0),   // B01
      SpinMatrix::from_ints(0, -1, 0, 1),  // B10
      SpinMatrix::from_ints(0, 1, 0, 1),   // B11
  };
  return tbl[a * 2 + b];
}

SpinMatrix a_tilde_matrix(StepCode code, Chirality c) {
  return b_matrix(code.b1, code.b2)
      .scaled(unit_power(c, code.parity()));
}

SpinMatrix transition_matrix(StepIndex l, Chirality c) {
  // Forward labels have even parity and inverse labels odd parity, so this
  // puts zeta* on forward generators and zeta = zeta* * (s*i) on inverses.
  return a_tilde_matrix(step_codec(l), c).scaled(zeta_conj(c));
}

std::array<SpinMatrix, 8> transition_table(Chirality c) {
  std::array<SpinMatrix, 8> t;
  for (const auto& l : StepIndex::all()) t[l.dense()] = transition_matrix(l, c);
  return t;
}

std::optional<std::string> unitarity_report(
    const std::array<SpinMatrix, 8>& table) {
  std::map<Vec3, std::pair<SpinMatrix, SpinMatrix>> sums;
  for (const auto& h : StepIndex::all()) {
    for (const auto& hp : StepIndex::all()) {
      const Vec3 g = step_vector(hp) + (-step_vector(h));
      auto& [right, left] = sums[g];
      right = right + table[hp.dense()] * table[h.dense()].dagger();
      left = left + table[hp.dense()].dagger() * table[h.dense()];
    }
  }
  for (const auto& [g, pair] : sums) {
    const bool zero_disp = g == Vec3{0, 0, 0};
    const SpinMatrix want = zero_disp ? SpinMatrix::identity() : SpinMatrix::zero();
    if (pair.first != want)
      return "sum A_{h+g} A_h^dagger for g=(" + std::to_string(g[0]) + "," +
             std::to_string(g[1]) + "," + std::to_string(g[2]) +
             ") = " + pair.first.str();
    if (pair.second != want)
      return "sum A_{h+g}^dagger A_h for g=(" + std::to_string(g[0]) + "," +
             std::to_string(g[1]) + "," + std::to_string(g[2]) +
             ") = " + pair.second.str();
  }
  return std::nullopt;
}

bool verify_unitarity(Chirality c) {
  return !unitarity_report(transition_table(c)).has_value();
}

WalkState WalkState::delta(const Site& x, Spinor value) {
  WalkState s;
  s.add(x, value);
  return s;
}

void WalkState::add(const Site& x, const Spinor& v) {
  if (v.is_zero()) return;
  if (!amps_.empty() && amps_.begin()->first.even_parity() != x.even_parity())
    throw std::invalid_argument("state mixes lattice parities");
  auto [it, inserted] = amps_.try_emplace(x, v);
  if (!inserted) {
    it->second = it->second + v;
    if (it->second.is_zero()) amps_.erase(it);
  }
}

Spinor WalkState::at(const Site& x) const {
  auto it = amps_.find(x);
  return it == amps_.end() ? Spinor{} : it->second;
}

Amplitude WalkState::norm2() const {
  Amplitude n;
  for (const auto& [x, v] : amps_) n += v.norm2();
  return n;
}

WalkState WalkState::conjugated() const {
  WalkState s;
  s.amps_ = amps_;
  for (auto& [x, v] : s.amps_) v = v.conjugated();
  return s;
}

void WalkState::accumulate_shifted(const WalkState& src, const Vec3& delta,
                                   const SpinMatrix& m) {
  if (src.amps_.empty()) return;
  if (!amps_.empty() &&
      amps_.begin()->first.even_parity() !=
          (src.amps_.begin()->first + delta).even_parity())
    throw std::invalid_argument("state mixes lattice parities");
  // Shifting by a constant preserves the site order, so one forward-moving
  // iterator turns the whole pass into a linear merge.
  auto it = amps_.begin();
  for (const auto& [y, v] : src.amps_) {
    Spinor w = m.apply(v);
    if (w.is_zero()) continue;
    const Site x = y + delta;
    while (it != amps_.end() && it->first < x) ++it;
    if (it != amps_.end() && it->first == x) {
      it->second = it->second + w;
      if (it->second.is_zero()) it = amps_.erase(it);
    } else {
      it = amps_.emplace_hint(it, x, std::move(w));
      ++it;
    }
  }
}

namespace {

// One-step update, factored: A_h = zeta* * (s*i)^parity * B_{b1 b2}, and
// every B has a single signed unit entry per row reading one source
// component.  The kernel accumulates the unit-phase part with in-place
// big-integer adds and applies the common zeta* once per output site.
struct HopAction {
  Vec3 delta;              // target offset: -h
  int src = 0;             // source spinor component: 0 = up, 1 = down
  int sign_up = 1;         // row signs of B_{b1 b2}
  int sign_down = 1;
  long quarter_turns = 0;  // (s*i)^parity as a power of i
};

std::array<HopAction, 8> hop_actions(Chirality c) {
  std::array<HopAction, 8> acts;
  for (const auto& l : StepIndex::all()) {
    const StepCode code = step_codec(l);
    HopAction& a = acts[l.dense()];
    a.delta = -step_vector(l);
    a.src = code.b1;
    a.sign_up = (code.b1 == 1 && code.b2 == 0) ? -1 : 1;
    a.sign_down = (code.b1 == 0 && code.b2 == 0) ? -1 : 1;
    const int p = code.parity();
    a.quarter_turns = sign_of(c) > 0 ? p : (4 - p) % 4;
  }
  return acts;
}

}  // namespace

WalkState step(const WalkState& s, Chirality c) {
  WalkState out;
  // The source at y feeds site y - h through A_h; one merge pass per h.
  for (const HopAction& act : hop_actions(c)) {
    auto& dst = out.amps_;
    auto it = dst.begin();
    for (const auto& [y, v] : s.amps_) {
      const Amplitude& comp = act.src ? v.down : v.up;
      if (comp.is_zero()) continue;
      const Site x = y + act.delta;
      while (it != dst.end() && it->first < x) ++it;
      if (it != dst.end() && it->first == x) {
        it->second.up.accumulate_rotated(comp, act.sign_up, act.quarter_turns);
        it->second.down.accumulate_rotated(comp, act.sign_down,
                                           act.quarter_turns);
        if (it->second.is_zero()) it = dst.erase(it);
      } else {
        Spinor w;
        w.up.accumulate_rotated(comp, act.sign_up, act.quarter_turns);
        w.down.accumulate_rotated(comp, act.sign_down, act.quarter_turns);
        it = dst.emplace_hint(it, x, std::move(w));
        ++it;
      }
    }
  }
  const Amplitude zc = zeta_conj(c);
  for (auto& [x, v] : out.amps_) {
    v.up = v.up * zc;
    v.down = v.down * zc;
  }
  return out;
}

WalkState evolve(WalkState s, std::int64_t t, Chirality c) {
  if (t < 0) throw std::invalid_argument("negative time");
  for (std::int64_t k = 0; k < t; ++k) s = step(s, c);
  return s;
}

SpinMatrix factorization_matrix(const ProductFactorization& f) {
  SpinMatrix m = b_matrix(f.a, f.b).times_i(f.quarter_turns);
  return f.sign < 0 ? SpinMatrix::zero() - m : m;
}

ProductFactorization closed_matrix_product(const BitString& w1,
                                           const BitString& w2,
                                           const BitString& w3, Chirality c) {
  const int t = w1.length();
  if (t == 0 || w2.length() != t || w3.length() != t)
    throw std::invalid_argument(
        "matrix product needs three strings of one positive length");
  ProductFactorization f;
  // Sign: parity of the overlap between w2 and the shift mask of w1.
  const int sign_exp = ((w1 ^ w1.cyclic_shift()) & w2).weight();
  f.sign = (sign_exp & 1) ? -1 : 1;
  const int turns = (w1 ^ w2 ^ w3).weight();
  f.quarter_turns = static_cast<int>(
      (((sign_of(c) > 0 ? turns : -turns) % 4) + 4) % 4);
  f.a = w1.bit(0);
  f.b = w2.bit(t - 1);
  return f;
}

}  // namespace weylwalk
