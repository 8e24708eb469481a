#pragma once

#include <optional>
#include <string>
#include <vector>

#include "whq/structure.hpp"

namespace whq {

/// Outcome of one exact identity check. `group` collects the sub-equalities
/// a multi-part law splits into (e.g. the counit-product law compares three
/// composites against the first one).
struct IdentityResult {
  std::string group;
  std::string name;     // unique within a report
  std::string formula;  // human-readable statement of the equality
  bool pass = false;
  // Failure witness: first differing column (basis input, lowest flat
  // index), the first differing row inside it, and both entries there.
  int witness_col = -1;
  int witness_row = -1;
  std::string lhs_entry, rhs_entry;
  // Derived identities evaluated although a defining axiom already failed.
  bool conditional = false;
};

struct StructureFlags {
  bool weak_hopf_quasigroup = false;
  bool weak_hopf_algebra = false;  // + associativity of mul
  bool hopf_quasigroup = false;    // + counit/coproduct are unital-magma morphisms
  bool commutative = false;        // mul∘c = mul
  bool cocommutative = false;      // c∘comul = comul
};

struct Report {
  std::vector<IdentityResult> identities;
  std::optional<StructureFlags> flags;

  bool all_pass() const;
  const IdentityResult* first_failure() const;
};

/// Checks the ten defining identities (the compatibility law of product
/// and coproduct, the counit-product law, the unit-coproduct law and the
/// seven antipode laws) as exact matrix equalities, and computes the
/// classification flags. Failures are verdicts, never exceptions.
/// `jobs` > 1 evaluates identities in parallel; results are identical.
Report check_axioms(const WeakHopfQuasigroup& H, int jobs = 1);

/// Checks the full catalog of consequences: alternative closed forms of
/// pi_l/pi_r, convolution inverses, idempotency, the product/coproduct
/// exchange laws against all four idempotents, their unit/counit
/// corollaries, composition tables, partial associativity laws and the
/// antimultiplicativity/anticomultiplicativity of the antipode.
/// When a defining axiom fails, results carry conditional = true.
Report check_derived(const WeakHopfQuasigroup& H, int jobs = 1);

/// mul∘c^n = mul and c^n∘comul = comul.
std::pair<bool, bool> check_dyslexia(const WeakHopfQuasigroup& H, int n);

/// Least n <= max_n with antipode^n = id, if any.
std::optional<int> antipode_order(const WeakHopfQuasigroup& H, int max_n);

}  // namespace whq
