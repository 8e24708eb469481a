#include "whq/hopf_modules.hpp"

#include <thread>

namespace whq {

HopfModule::HopfModule(std::shared_ptr<const WeakHopfQuasigroup> over, LinMap action,
                       LinMap coaction)
    : over_(std::move(over)),
      dim_(action.codomain_dim()),
      action_(std::move(action)),
      coaction_(std::move(coaction)),
      id_(LinMap::identity(action_.field(), dim_)) {
  if (!over_) throw Error("module requires an algebra");
  const int h = over_->dim();
  if (!(action_.field() == over_->field()) || !(coaction_.field() == over_->field()))
    throw FieldMismatch("module maps over a different field than the algebra");
  if (dim_ < 1) throw InvalidStructure("module dimension must be positive");
  if (action_.domain_dim() != dim_ * h)
    throw DimensionMismatch("action must be M x (M*H), got domain " +
                            std::to_string(action_.domain_dim()));
  if (coaction_.codomain_dim() != dim_ * h || coaction_.domain_dim() != dim_)
    throw DimensionMismatch("coaction must be (M*H) x M");

  if (compose(tensor(id_, over_->counit()), coaction_) != id_)
    throw InvalidStructure("comodule law fails: (M⊗eps)∘rho != id");
  if (compose(tensor(coaction_, over_->id()), coaction_) !=
      compose(tensor(id_, over_->comul()), coaction_))
    throw InvalidStructure("coaction is not coassociative");
}

HopfModule regular_module(std::shared_ptr<const WeakHopfQuasigroup> H) {
  LinMap action = H->mul();
  LinMap coaction = H->comul();
  return HopfModule(std::move(H), std::move(action), std::move(coaction));
}

namespace {

struct ModuleEntry {
  const char* group;
  const char* name;
  const char* formula;
  std::pair<LinMap, LinMap> (*build)(const HopfModule&);
};

const std::vector<ModuleEntry>& module_catalog() {
  static const std::vector<ModuleEntry> entries = {
      {"c2-1", "c2-1", "phi∘(M⊗eta) = id",
       [](const HopfModule& M) {
         return std::pair{compose(M.action(), tensor(M.id(), M.algebra().unit())), M.id()};
       }},
      {"c2-2", "c2-2", "rho∘phi = (phi⊗mu)∘(M⊗c⊗H)∘(rho⊗delta)",
       [](const HopfModule& M) {
         const auto& H = M.algebra();
         return std::pair{compose(M.coaction(), M.action()),
                          compose(tensor(M.action(), H.mul()),
                                  tensor(M.id(), H.braiding(), H.id()),
                                  tensor(M.coaction(), H.comul()))};
       }},
      {"c3", "c3", "phi∘(phi⊗lam)∘(M⊗delta) = phi∘(M⊗piL)",
       [](const HopfModule& M) {
         const auto& H = M.algebra();
         return std::pair{compose(M.action(), tensor(M.action(), H.antipode()),
                                  tensor(M.id(), H.comul())),
                          compose(M.action(), tensor(M.id(), H.pi_l()))};
       }},
      {"c4", "c4", "phi∘(phi⊗H)∘(M⊗lam⊗H)∘(M⊗delta) = phi∘(M⊗piR)",
       [](const HopfModule& M) {
         const auto& H = M.algebra();
         return std::pair{compose(M.action(), tensor(M.action(), H.id()),
                                  tensor(M.id(), H.antipode(), H.id()),
                                  tensor(M.id(), H.comul())),
                          compose(M.action(), tensor(M.id(), H.pi_r()))};
       }},
      {"c5", "c5", "phi∘(phi⊗H)∘(M⊗piL⊗H)∘(M⊗delta) = phi",
       [](const HopfModule& M) {
         const auto& H = M.algebra();
         return std::pair{compose(M.action(), tensor(M.action(), H.id()),
                                  tensor(M.id(), H.pi_l(), H.id()), tensor(M.id(), H.comul())),
                          M.action()};
       }},
      {"c5", "new-c5", "phi∘(phi⊗piR)∘(M⊗delta) = phi",
       [](const HopfModule& M) {
         const auto& H = M.algebra();
         return std::pair{
             compose(M.action(), tensor(M.action(), H.pi_r()), tensor(M.id(), H.comul())),
             M.action()};
       }},
      {"c5", "new-c5-1", "phi∘(phi⊗piR)∘(M⊗delta) = phi∘(phi⊗H)∘(M⊗piL⊗H)∘(M⊗delta)",
       [](const HopfModule& M) {
         const auto& H = M.algebra();
         return std::pair{
             compose(M.action(), tensor(M.action(), H.pi_r()), tensor(M.id(), H.comul())),
             compose(M.action(), tensor(M.action(), H.id()), tensor(M.id(), H.pi_l(), H.id()),
                     tensor(M.id(), H.comul()))};
       }},
      {"new-c2-2-1", "new-c2-2-1", "phi∘(M⊗piR)∘rho = id",
       [](const HopfModule& M) {
         const auto& H = M.algebra();
         return std::pair{compose(M.action(), tensor(M.id(), H.pi_r()), M.coaction()), M.id()};
       }},
      {"new-c5-2", "new-c5-2", "phi∘(phi⊗H)∘(M⊗piL⊗H)∘(M⊗(delta∘eta)) = id",
       [](const HopfModule& M) {
         const auto& H = M.algebra();
         return std::pair{compose(M.action(), tensor(M.action(), H.id()),
                                  tensor(M.id(), H.pi_l(), H.id()),
                                  tensor(M.id(), compose(H.comul(), H.unit()))),
                          M.id()};
       }},
      {"new-c5-3", "new-c5-3", "phi∘(phi⊗piR)∘(M⊗(delta∘eta)) = id",
       [](const HopfModule& M) {
         const auto& H = M.algebra();
         return std::pair{compose(M.action(), tensor(M.action(), H.pi_r()),
                                  tensor(M.id(), compose(H.comul(), H.unit()))),
                          M.id()};
       }},
  };
  return entries;
}

IdentityResult evaluate_one(const ModuleEntry& e, const HopfModule& M) {
  IdentityResult r;
  r.group = e.group;
  r.name = e.name;
  r.formula = e.formula;
  auto [lhs, rhs] = e.build(M);
  auto diff = first_difference(lhs, rhs);
  r.pass = !diff.has_value();
  if (diff) {
    r.witness_col = diff->first;
    r.witness_row = diff->second;
    r.lhs_entry = lhs.entry(diff->second, diff->first).str();
    r.rhs_entry = rhs.entry(diff->second, diff->first).str();
  }
  return r;
}

void require(bool ok, const char* equation, const LinMap& lhs, const LinMap& rhs) {
  if (ok) return;
  auto w = first_difference(lhs, rhs);
  throw CertificateFailure(equation, "first difference at column " + std::to_string(w->first) +
                                         ", row " + std::to_string(w->second));
}

void check_equation(std::vector<std::string>& verified, const char* equation, const LinMap& lhs,
                    const LinMap& rhs) {
  require(lhs == rhs, equation, lhs, rhs);
  verified.emplace_back(equation);
}

}  // namespace

Report check_hopf_module(const HopfModule& M, int jobs) {
  const auto& entries = module_catalog();
  Report rep;
  rep.identities.resize(entries.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      rep.identities[i] = evaluate_one(entries[i], M);
    return rep;
  }
  std::vector<std::thread> pool;
  const int n = static_cast<int>(entries.size());
  for (int w = 0; w < jobs && w < n; ++w)
    pool.emplace_back([&, w]() {
      for (int i = w; i < n; i += jobs)
        rep.identities[static_cast<std::size_t>(i)] =
            evaluate_one(entries[static_cast<std::size_t>(i)], M);
    });
  for (auto& t : pool) t.join();
  return rep;
}

CoinvariantData coinvariants(const HopfModule& M) {
  const auto& H = M.algebra();
  LinMap q = compose(M.action(), tensor(M.id(), H.antipode()), M.coaction());
  if (compose(q, q) != q) {
    auto w = first_difference(compose(q, q), q);
    throw NotIdempotent("q is not idempotent, first difference at column " +
                        std::to_string(w->first) + ", row " + std::to_string(w->second));
  }

  std::vector<std::string> verified;
  const LinMap rho_q = compose(M.coaction(), q);
  check_equation(verified, "idemp-1", rho_q, compose(tensor(M.id(), H.pi_l()), rho_q));
  check_equation(verified, "new-c5-2-1",
                 compose(M.action(), tensor(q, H.id()), M.coaction()), M.id());

  Splitting split = split_idempotent(q);
  const int co_dim = split.rank;

  // Both equalizer descriptions of the coinvariants must carve out im(q).
  const LinMap eq_bar =
      equalizer(M.coaction(), compose(tensor(M.id(), H.pi_bar_r()), M.coaction()));
  if (!same_column_space(split.section, eq_bar))
    throw CertificateFailure("coinvariants-equalizer-pibarR",
                             "im(q) differs from the equalizer against pibarR");
  const LinMap eq_pl = equalizer(M.coaction(), compose(tensor(M.id(), H.pi_l()), M.coaction()));
  if (!same_column_space(split.section, eq_pl))
    throw CertificateFailure("coinvariants-equalizer-piL",
                             "im(q) differs from the equalizer against piL");

  return CoinvariantData{std::move(q), std::move(split), co_dim};
}

LinMap twisted_action(const HopfModule& M) {
  const auto& H = M.algebra();
  LinMap q = compose(M.action(), tensor(M.id(), H.antipode()), M.coaction());
  return compose(M.action(), tensor(q, H.mul()), tensor(M.coaction(), H.id()));
}

FundamentalCertificate fundamental_certificate(const HopfModule& M) {
  const auto& H = M.algebra();
  CoinvariantData coinv = coinvariants(M);
  const LinMap& q = coinv.q;
  const LinMap& i_m = coinv.split.section;
  const LinMap& p_m = coinv.split.retraction;
  const LinMap id_co = LinMap::identity(H.field(), coinv.coinvariant_dim);
  std::vector<std::string> verified;

  // Exchange laws of the action through the splitting of q.
  check_equation(verified, "new-c5-2-2",
                 compose(M.coaction(), M.action(), tensor(i_m, H.id())),
                 compose(tensor(M.action(), H.id()), tensor(i_m, H.comul())));
  check_equation(verified, "new-c5-2-3",
                 compose(p_m, M.action(), tensor(i_m, H.id())),
                 compose(p_m, M.action(), tensor(i_m, H.pi_l())));
  check_equation(verified, "new-c5-2-4",
                 compose(p_m, M.action(), tensor(i_m, H.id())),
                 compose(p_m, M.action(), tensor(i_m, H.pi_bar_l())));

  LinMap nabla = compose(tensor(p_m, H.id()), M.coaction(), M.action(), tensor(i_m, H.id()));
  check_equation(verified, "nabla-idempotent", compose(nabla, nabla), nabla);
  check_equation(verified, "tensor-idempotent-1", nabla,
                 compose(tensor(compose(p_m, M.action()), H.id()), tensor(i_m, H.comul())));
  check_equation(verified, "tensor-idempotent-2", compose(tensor(id_co, H.comul()), nabla),
                 compose(tensor(nabla, H.id()), tensor(id_co, H.comul())));
  check_equation(verified, "tensor-idempotent-3", nabla,
                 compose(tensor(id_co, H.mul()),
                         tensor(compose(nabla, tensor(id_co, H.unit())), H.id())));

  LinMap omega = compose(M.action(), tensor(i_m, H.id()));
  LinMap omega_prime = compose(tensor(p_m, H.id()), M.coaction());
  check_equation(verified, "omega-retraction", compose(omega, omega_prime), M.id());
  check_equation(verified, "nabla-factorization", nabla, compose(omega_prime, omega));

  Splitting nabla_split = split_idempotent(nabla);
  const int times_dim = nabla_split.rank;
  const LinMap& i_t = nabla_split.section;
  const LinMap& p_t = nabla_split.retraction;
  const LinMap id_t = LinMap::identity(H.field(), times_dim);

  LinMap alpha = compose(p_t, omega_prime);
  LinMap alpha_inv = compose(omega, i_t);
  check_equation(verified, "alpha-left-inverse", compose(alpha_inv, alpha), M.id());
  check_equation(verified, "alpha-right-inverse", compose(alpha, alpha_inv), id_t);

  LinMap induced_coaction = compose(tensor(p_t, H.id()), tensor(id_co, H.comul()), i_t);
  check_equation(verified, "alpha-comodule", compose(induced_coaction, alpha),
                 compose(tensor(alpha, H.id()), M.coaction()));

  check_equation(verified, "nabla-i-phi", compose(M.action(), tensor(i_m, H.id()), nabla),
                 compose(M.action(), tensor(i_m, H.id())));
  check_equation(verified, "rho-p-phi", compose(nabla, tensor(p_m, H.id()), M.coaction()),
                 compose(tensor(p_m, H.id()), M.coaction()));

  LinMap induced_action = compose(p_t, tensor(id_co, H.mul()), tensor(i_t, H.id()));
  LinMap phi_alpha = compose(M.action(), tensor(q, H.mul()), tensor(M.coaction(), H.id()));

  // The transported structures are themselves modules satisfying every
  // axiom; construction failures count against the same equation names.
  auto make_module = [&](const char* equation, const LinMap& action,
                         const LinMap& coaction) -> HopfModule {
    try {
      HopfModule mod(M.algebra_ptr(), action, coaction);
      Report r = check_hopf_module(mod);
      if (!r.all_pass())
        throw CertificateFailure(equation, "axiom " + r.first_failure()->name + " fails");
      verified.emplace_back(equation);
      return mod;
    } catch (const InvalidStructure& e) {
      throw CertificateFailure(equation, e.what());
    }
  };

  HopfModule induced = make_module("induced-module", induced_action, induced_coaction);
  check_equation(verified, "action-alpha", phi_alpha,
                 compose(alpha_inv, induced_action, tensor(alpha, H.id())));
  make_module("twisted-module", phi_alpha, M.coaction());

  const LinMap q_alpha = compose(phi_alpha, tensor(M.id(), H.antipode()), M.coaction());
  check_equation(verified, "twisted-coinvariants", q_alpha, q);
  const LinMap nabla_alpha =
      compose(tensor(p_m, H.id()), M.coaction(), phi_alpha, tensor(i_m, H.id()));
  check_equation(verified, "twisted-nabla", nabla_alpha, nabla);
  check_equation(verified, "phi-square",
                 compose(phi_alpha, tensor(q, H.mul()), tensor(M.coaction(), H.id())),
                 phi_alpha);

  const LinMap strong = twisted_action(induced);
  check_equation(verified, "strong-hoof", strong, induced_action);
  check_equation(verified, "alpha-quasilinear", compose(strong, tensor(alpha, H.id())),
                 compose(alpha, phi_alpha));

  return FundamentalCertificate{std::move(coinv),
                                std::move(nabla),
                                std::move(nabla_split),
                                times_dim,
                                std::move(omega),
                                std::move(omega_prime),
                                std::move(alpha),
                                std::move(alpha_inv),
                                std::move(induced_action),
                                std::move(induced_coaction),
                                std::move(phi_alpha),
                                std::move(verified)};
}

bool is_quasilinear(const LinMap& f, const HopfModule& M, const HopfModule& N) {
  if (!(M.algebra() == N.algebra()))
    throw DimensionMismatch("modules live over different algebras");
  if (f.domain_dim() != M.dim() || f.codomain_dim() != N.dim())
    throw DimensionMismatch("morphism shape does not match the modules");
  const auto& H = M.algebra();
  return compose(twisted_action(N), tensor(f, H.id())) == compose(f, twisted_action(M));
}

HopfModule twisted_module(const HopfModule& M, const HopfModule& N, const LinMap& g) {
  if (!(M.algebra() == N.algebra()))
    throw DimensionMismatch("modules live over different algebras");
  if (g.domain_dim() != M.dim() || g.codomain_dim() != N.dim())
    throw DimensionMismatch("morphism shape does not match the modules");
  const auto& H = M.algebra();
  auto g_inv = inverse(g);
  if (!g_inv) throw NotComoduleIso("morphism is not invertible");
  if (compose(N.coaction(), g) != compose(tensor(g, H.id()), M.coaction()))
    throw NotComoduleIso("morphism is not a comodule morphism");
  return HopfModule(M.algebra_ptr(), compose(*g_inv, N.action(), tensor(g, H.id())),
                    M.coaction());
}

}  // namespace whq
