#pragma once

#include <optional>
#include <string>
#include <vector>

#include "whq/gauss.hpp"
#include "whq/linmap.hpp"

namespace whq {

/// A weak Hopf quasigroup candidate: a unital magma that is also a
/// comonoid, together with an antipode and an invertible braiding on
/// H (x) H (the flip by default).
///
/// Construction enforces only the unital-magma laws, the counit laws,
/// coassociativity and invertibility of the braiding (plus the
/// Yang-Baxter relation for a non-flip braiding). The antipode axioms
/// are deliberately *not* enforced here: they are verdicts produced by
/// the verifier, so non-examples can be represented and diagnosed.
///
/// Values are immutable after construction; the four canonical
/// idempotent candidates (pi_l, pi_r and their barred variants) are
/// precomputed, so concurrent reads are safe.
class WeakHopfQuasigroup {
 public:
  WeakHopfQuasigroup(LinMap unit, LinMap mul, LinMap counit, LinMap comul, LinMap antipode,
                     std::optional<LinMap> braiding = std::nullopt,
                     std::optional<std::vector<std::string>> basis_labels = std::nullopt);

  const Field& field() const { return field_; }
  int dim() const { return dim_; }

  const LinMap& unit() const { return unit_; }          // 1 -> H
  const LinMap& mul() const { return mul_; }            // H(x)H -> H
  const LinMap& counit() const { return counit_; }      // H -> 1
  const LinMap& comul() const { return comul_; }        // H -> H(x)H
  const LinMap& antipode() const { return antipode_; }  // H -> H
  const LinMap& braiding() const { return braiding_; }
  const LinMap& braiding_inv() const { return braiding_inv_; }
  bool braiding_is_flip() const { return braiding_is_flip_; }

  const LinMap& id() const { return id_; }  // identity on H

  /// Target-side idempotent candidate id * antipode (convolution form).
  const LinMap& pi_l() const { return pi_l_; }
  /// Source-side idempotent candidate antipode * id.
  const LinMap& pi_r() const { return pi_r_; }
  /// Closed forms built from unit, counit, product, coproduct and the
  /// braiding alone; agreement with the convolution forms is exactly
  /// what the verifier reports for the defining axioms.
  const LinMap& pi_l_closed() const { return pi_l_closed_; }
  const LinMap& pi_r_closed() const { return pi_r_closed_; }
  const LinMap& pi_bar_l() const { return pi_bar_l_; }
  const LinMap& pi_bar_r() const { return pi_bar_r_; }

  const std::optional<std::vector<std::string>>& basis_labels() const { return basis_labels_; }

  /// Structural equality: dimension, field, all structure maps and labels.
  bool operator==(const WeakHopfQuasigroup& o) const;

 private:
  Field field_;
  int dim_;
  LinMap unit_, mul_, counit_, comul_, antipode_, braiding_, braiding_inv_;
  bool braiding_is_flip_;
  LinMap id_;
  LinMap pi_l_, pi_r_, pi_l_closed_, pi_r_closed_, pi_bar_l_, pi_bar_r_;
  std::optional<std::vector<std::string>> basis_labels_;
};

/// Convolution product of endomorphisms: f * g = mul ∘ (f (x) g) ∘ comul.
LinMap convolution(const LinMap& f, const LinMap& g, const WeakHopfQuasigroup& H);

/// A split subobject of H together with the structure it inherits.
struct SubobjectData {
  LinMap inclusion;   // H_sub -> H
  LinMap projection;  // H -> H_sub
  int dim;
  LinMap unit, mul, counit, comul;  // induced structure on the subspace
};

/// Splits pi_l and transports unit/product/counit/coproduct onto the image.
/// Verifies the inherited unital-magma and comonoid laws and the
/// equalizer/coequalizer forks that characterize the image.
SubobjectData subobject_l(const WeakHopfQuasigroup& H);
/// Same for pi_r.
SubobjectData subobject_r(const WeakHopfQuasigroup& H);

}  // namespace whq
