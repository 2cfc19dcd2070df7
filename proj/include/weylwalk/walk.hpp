#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "weylwalk/amplitude.hpp"
#include "weylwalk/bitstring.hpp"
#include "weylwalk/lattice.hpp"
#include "weylwalk/spin.hpp"

namespace weylwalk {

/// Hopping matrix A_h attached to generator h: the one-step update is
/// psi_x(t+1) = sum_h A_h psi_{x+h}(t).
SpinMatrix transition_matrix(StepIndex l, Chirality c);

/// The four base matrices B_ab; every product of hopping matrices is a
/// phase times one of them.  Index bits: a = first-row selector, b = column
/// selector (B00=[[1,0],[-1,0]], B01=[[1,0],[1,0]], B10=[[0,-1],[0,1]],
/// B11=[[0,1],[0,1]]).
SpinMatrix b_matrix(int a, int b);

/// Phase-normalized hopping matrix keyed by the three-bit label:
/// (s*i)^(b1^b2^b3) * B_{b1 b2}.  transition_matrix(l) equals
/// zeta_conj * a_tilde_matrix(step_codec(l)).
SpinMatrix a_tilde_matrix(StepCode code, Chirality c);

/// All eight hopping matrices, indexed by StepIndex::dense().
std::array<SpinMatrix, 8> transition_table(Chirality c);

/// Empty result means the table passes all one-step unitarity conditions:
/// the two completeness sums equal the identity and, for every nonzero
/// displacement reachable as a difference of generators, both cross sums
/// vanish.  Otherwise returns a description of the first violated condition.
std::optional<std::string> unitarity_report(const std::array<SpinMatrix, 8>& table);

bool verify_unitarity(Chirality c);

/// Sparse spinor field over one parity class of the lattice.  Zero spinors
/// are pruned, so equal states have identical site maps.
class WalkState {
 public:
  WalkState() = default;

  static WalkState delta(const Site& x, Spinor value);

  /// Accumulate; enforces that all sites share parity.
  void add(const Site& x, const Spinor& v);

  /// this += m * (src translated by delta), as one ordered merge pass.
  void accumulate_shifted(const WalkState& src, const Vec3& delta,
                          const SpinMatrix& m);

  const std::map<Site, Spinor>& sites() const { return amps_; }
  bool empty() const { return amps_.empty(); }
  std::size_t support_size() const { return amps_.size(); }

  Spinor at(const Site& x) const;  // zero spinor if absent

  Amplitude norm2() const;
  WalkState conjugated() const;

  bool operator==(const WalkState& o) const { return amps_ == o.amps_; }

 private:
  friend WalkState step(const WalkState& s, Chirality c);

  std::map<Site, Spinor> amps_;
};

/// One application of the step operator.
WalkState step(const WalkState& s, Chirality c);

/// t applications of the step operator.
WalkState evolve(WalkState s, std::int64_t t, Chirality c);

/// Factorized value of a product of phase-normalized hopping matrices.
/// The matrix equals sign * i^quarter_turns * B_{a b}.
struct ProductFactorization {
  int sign = 1;           // +1 or -1
  int quarter_turns = 0;  // 0..3, chirality already applied
  int a = 0, b = 0;       // B-matrix index bits

  bool operator==(const ProductFactorization&) const = default;
};

SpinMatrix factorization_matrix(const ProductFactorization& f);

/// Closed form of the right-to-left product of the t phase-normalized
/// hopping matrices whose labels are read off the three strings position by
/// position (position 0 is the innermost factor).  Strings must share a
/// common positive length.
ProductFactorization closed_matrix_product(const BitString& w1,
                                           const BitString& w2,
                                           const BitString& w3, Chirality c);

}  // namespace weylwalk
