#pragma once

#include <memory>

#include "whq/axioms.hpp"
#include "whq/structure.hpp"

namespace whq {

/// A right-right Hopf module candidate over a fixed weak Hopf quasigroup:
/// a carrier M with action M(x)H -> M and coaction M -> M(x)H.
///
/// Construction enforces the comodule laws ((M⊗eps)∘rho = id and
/// coassociativity of the coaction); the action axioms are verdicts
/// produced by check_hopf_module.
class HopfModule {
 public:
  HopfModule(std::shared_ptr<const WeakHopfQuasigroup> over, LinMap action, LinMap coaction);

  const WeakHopfQuasigroup& algebra() const { return *over_; }
  const std::shared_ptr<const WeakHopfQuasigroup>& algebra_ptr() const { return over_; }
  int dim() const { return dim_; }
  const LinMap& action() const { return action_; }      // M(x)H -> M
  const LinMap& coaction() const { return coaction_; }  // M -> M(x)H
  const LinMap& id() const { return id_; }              // identity on M

 private:
  std::shared_ptr<const WeakHopfQuasigroup> over_;
  int dim_;
  LinMap action_, coaction_, id_;
};

/// The algebra acting on itself: action = mul, coaction = comul.
HopfModule regular_module(std::shared_ptr<const WeakHopfQuasigroup> H);

/// Checks the action axioms: unit action, comodule-morphism law of the
/// action, the two antipode cancellation laws, the projection law and its
/// consequences. Failures are verdicts with witnesses.
Report check_hopf_module(const HopfModule& M, int jobs = 1);

/// Coinvariants М^co: image of q = action∘(M⊗antipode)∘coaction.
struct CoinvariantData {
  LinMap q;
  Splitting split;  // section: M^co -> M, retraction: M -> M^co
  int coinvariant_dim = 0;
};

/// Computes q, verifies it is idempotent (NotIdempotent otherwise),
/// verifies the coaction-projection law rho∘q = (M⊗piL)∘rho∘q, both
/// equalizer descriptions of the image and the reconstruction law
/// action∘(q⊗H)∘rho = id (CertificateFailure naming the equation), then
/// splits q.
CoinvariantData coinvariants(const HopfModule& M);

/// Everything the structure-transport theorem produces for one module,
/// verified equation by equation. Built by fundamental_certificate, which
/// throws CertificateFailure at the first violated equation.
struct FundamentalCertificate {
  CoinvariantData coinv;
  LinMap nabla;            // idempotent on M^co (x) H
  Splitting nabla_split;   // section: M^co x H -> M^co (x) H
  int times_dim = 0;       // rank of nabla
  LinMap omega, omega_prime;
  LinMap alpha, alpha_inv;            // M <-> M^co x H
  LinMap induced_action;              // on M^co x H
  LinMap induced_coaction;
  LinMap twisted_action;              // action∘(q⊗mul)∘(rho⊗H) on M
  std::vector<std::string> verified;  // equation names, in check order
};

FundamentalCertificate fundamental_certificate(const HopfModule& M);

/// Twisted action of any module: action∘(q⊗mul)∘(coaction⊗H).
LinMap twisted_action(const HopfModule& M);

/// Exact check of the intertwiner law
/// twisted_action(N)∘(f⊗H) = f∘twisted_action(M) for f: M -> N.
bool is_quasilinear(const LinMap& f, const HopfModule& M, const HopfModule& N);

/// Transports the structure of N back along an invertible comodule
/// morphism g: M -> N (checked; NotComoduleIso otherwise): the result has
/// carrier M, action g^-1∘action_N∘(g⊗H) and the coaction of M.
HopfModule twisted_module(const HopfModule& M, const HopfModule& N, const LinMap& g);

}  // namespace whq
