#include "whq/axioms.hpp"

#include <thread>

namespace whq {

namespace {

using W = WeakHopfQuasigroup;

// Shorthand used by the catalog below. Notation in formula strings:
// eta/mu/eps/delta are the structure maps, lam the antipode, c the
// braiding, piL/piR = id*lam / lam*id, pibarL/pibarR the unit-counit
// idempotents, delta2/mu2 the coproduct/product of H⊗H, de = delta∘eta,
// em = eps∘mu, * the convolution product.
LinMap de(const W& H) { return compose(H.comul(), H.unit()); }
LinMap em(const W& H) { return compose(H.counit(), H.mul()); }
LinMap delta2(const W& H) {
  return compose(tensor(H.id(), H.braiding(), H.id()), tensor(H.comul(), H.comul()));
}

struct Entry {
  const char* group;
  const char* name;
  const char* formula;
  std::pair<LinMap, LinMap> (*build)(const W&);
};

const std::vector<Entry>& axiom_catalog() {
  static const std::vector<Entry> entries = {
      {"a1", "a1", "delta∘mu = (mu⊗mu)∘delta2",
       [](const W& H) {
         return std::pair{compose(H.comul(), H.mul()),
                          compose(tensor(H.mul(), H.mul()), delta2(H))};
       }},
      {"a2", "a2/1", "em∘(mu⊗H) = em∘(H⊗mu)",
       [](const W& H) {
         return std::pair{compose(em(H), tensor(H.mul(), H.id())),
                          compose(em(H), tensor(H.id(), H.mul()))};
       }},
      {"a2", "a2/2", "em∘(mu⊗H) = (em⊗em)∘(H⊗delta⊗H)",
       [](const W& H) {
         return std::pair{compose(em(H), tensor(H.mul(), H.id())),
                          compose(tensor(em(H), em(H)), tensor(H.id(), H.comul(), H.id()))};
       }},
      {"a2", "a2/3", "em∘(mu⊗H) = (em⊗em)∘(H⊗(c^-1∘delta)⊗H)",
       [](const W& H) {
         return std::pair{
             compose(em(H), tensor(H.mul(), H.id())),
             compose(tensor(em(H), em(H)),
                     tensor(H.id(), compose(H.braiding_inv(), H.comul()), H.id()))};
       }},
      {"a3", "a3/1", "(delta⊗H)∘de = (H⊗mu⊗H)∘(de⊗de)",
       [](const W& H) {
         return std::pair{compose(tensor(H.comul(), H.id()), de(H)),
                          compose(tensor(H.id(), H.mul(), H.id()), tensor(de(H), de(H)))};
       }},
      {"a3", "a3/2", "(delta⊗H)∘de = (H⊗(mu∘c^-1)⊗H)∘(de⊗de)",
       [](const W& H) {
         return std::pair{
             compose(tensor(H.comul(), H.id()), de(H)),
             compose(tensor(H.id(), compose(H.mul(), H.braiding_inv()), H.id()),
                     tensor(de(H), de(H)))};
       }},
      {"a4-1", "a4-1", "id*lam = (em⊗H)∘(H⊗c)∘(de⊗H)",
       [](const W& H) { return std::pair{H.pi_l(), H.pi_l_closed()}; }},
      {"a4-2", "a4-2", "lam*id = (H⊗em)∘(c⊗H)∘(H⊗de)",
       [](const W& H) { return std::pair{H.pi_r(), H.pi_r_closed()}; }},
      {"a4-3", "a4-3/1", "lam*piL = lam",
       [](const W& H) {
         return std::pair{convolution(H.antipode(), H.pi_l(), H), H.antipode()};
       }},
      {"a4-3", "a4-3/2", "piR*lam = lam",
       [](const W& H) {
         return std::pair{convolution(H.pi_r(), H.antipode(), H), H.antipode()};
       }},
      {"a4-4", "a4-4", "mu∘(lam⊗mu)∘(delta⊗H) = mu∘(piR⊗H)",
       [](const W& H) {
         return std::pair{
             compose(H.mul(), tensor(H.antipode(), H.mul()), tensor(H.comul(), H.id())),
             compose(H.mul(), tensor(H.pi_r(), H.id()))};
       }},
      {"a4-5", "a4-5", "mu∘(H⊗mu)∘(H⊗lam⊗H)∘(delta⊗H) = mu∘(piL⊗H)",
       [](const W& H) {
         return std::pair{compose(H.mul(), tensor(H.id(), H.mul()),
                                  tensor(H.id(), H.antipode(), H.id()),
                                  tensor(H.comul(), H.id())),
                          compose(H.mul(), tensor(H.pi_l(), H.id()))};
       }},
      {"a4-6", "a4-6", "mu∘(mu⊗lam)∘(H⊗delta) = mu∘(H⊗piL)",
       [](const W& H) {
         return std::pair{
             compose(H.mul(), tensor(H.mul(), H.antipode()), tensor(H.id(), H.comul())),
             compose(H.mul(), tensor(H.id(), H.pi_l()))};
       }},
      {"a4-7", "a4-7", "mu∘(mu⊗H)∘(H⊗lam⊗H)∘(H⊗delta) = mu∘(H⊗piR)",
       [](const W& H) {
         return std::pair{compose(H.mul(), tensor(H.mul(), H.id()),
                                  tensor(H.id(), H.antipode(), H.id()),
                                  tensor(H.id(), H.comul())),
                          compose(H.mul(), tensor(H.id(), H.pi_r()))};
       }},
  };
  return entries;
}

const std::vector<Entry>& derived_catalog() {
  static const std::vector<Entry> entries = {
      {"new-pi-1", "new-pi-1/1", "piL = ((em∘c^-1)⊗H)∘(H⊗de)",
       [](const W& H) {
         return std::pair{H.pi_l(), compose(tensor(compose(em(H), H.braiding_inv()), H.id()),
                                            tensor(H.id(), de(H)))};
       }},
      {"new-pi-1", "new-pi-1/2", "piL = (H⊗em)∘((c^-1∘de)⊗H)",
       [](const W& H) {
         return std::pair{H.pi_l(), compose(tensor(H.id(), em(H)),
                                            tensor(compose(H.braiding_inv(), de(H)), H.id()))};
       }},
      {"new-pi-2", "new-pi-2/1", "piR = (H⊗(em∘c^-1))∘(de⊗H)",
       [](const W& H) {
         return std::pair{H.pi_r(), compose(tensor(H.id(), compose(em(H), H.braiding_inv())),
                                            tensor(de(H), H.id()))};
       }},
      {"new-pi-2", "new-pi-2/2", "piR = (em⊗H)∘(H⊗(c^-1∘de))",
       [](const W& H) {
         return std::pair{H.pi_r(), compose(tensor(em(H), H.id()),
                                            tensor(H.id(), compose(H.braiding_inv(), de(H))))};
       }},
      {"pi-l", "pi-l/1", "piL*id = id",
       [](const W& H) { return std::pair{convolution(H.pi_l(), H.id(), H), H.id()}; }},
      {"pi-l", "pi-l/2", "id*piR = id",
       [](const W& H) { return std::pair{convolution(H.id(), H.pi_r(), H), H.id()}; }},
      {"pi-eta", "pi-eta/1", "piL∘eta = eta",
       [](const W& H) { return std::pair{compose(H.pi_l(), H.unit()), H.unit()}; }},
      {"pi-eta", "pi-eta/2", "piR∘eta = eta",
       [](const W& H) { return std::pair{compose(H.pi_r(), H.unit()), H.unit()}; }},
      {"pi-varep", "pi-varep/1", "eps∘piL = eps",
       [](const W& H) { return std::pair{compose(H.counit(), H.pi_l()), H.counit()}; }},
      {"pi-varep", "pi-varep/2", "eps∘piR = eps",
       [](const W& H) { return std::pair{compose(H.counit(), H.pi_r()), H.counit()}; }},
      {"antipode-unit", "antipode-unit", "lam∘eta = eta",
       [](const W& H) { return std::pair{compose(H.antipode(), H.unit()), H.unit()}; }},
      {"antipode-counit", "antipode-counit", "eps∘lam = eps",
       [](const W& H) { return std::pair{compose(H.counit(), H.antipode()), H.counit()}; }},
      {"idemp", "idemp/pi-l", "piL∘piL = piL",
       [](const W& H) { return std::pair{compose(H.pi_l(), H.pi_l()), H.pi_l()}; }},
      {"idemp", "idemp/pi-r", "piR∘piR = piR",
       [](const W& H) { return std::pair{compose(H.pi_r(), H.pi_r()), H.pi_r()}; }},
      {"idemp", "idemp/pi-bar-l", "pibarL∘pibarL = pibarL",
       [](const W& H) { return std::pair{compose(H.pi_bar_l(), H.pi_bar_l()), H.pi_bar_l()}; }},
      {"idemp", "idemp/pi-bar-r", "pibarR∘pibarR = pibarR",
       [](const W& H) { return std::pair{compose(H.pi_bar_r(), H.pi_bar_r()), H.pi_bar_r()}; }},
      {"mu-pi-l", "mu-pi-l", "mu∘(H⊗piL) = (em⊗H)∘(H⊗c)∘(delta⊗H)",
       [](const W& H) {
         return std::pair{compose(H.mul(), tensor(H.id(), H.pi_l())),
                          compose(tensor(em(H), H.id()), tensor(H.id(), H.braiding()),
                                  tensor(H.comul(), H.id()))};
       }},
      {"mu-pi-r", "mu-pi-r", "mu∘(piR⊗H) = (H⊗em)∘(c⊗H)∘(H⊗delta)",
       [](const W& H) {
         return std::pair{compose(H.mul(), tensor(H.pi_r(), H.id())),
                          compose(tensor(H.id(), em(H)), tensor(H.braiding(), H.id()),
                                  tensor(H.id(), H.comul()))};
       }},
      {"mu-pi-l-var", "mu-pi-l-var", "mu∘(H⊗pibarL) = (H⊗em)∘(delta⊗H)",
       [](const W& H) {
         return std::pair{compose(H.mul(), tensor(H.id(), H.pi_bar_l())),
                          compose(tensor(H.id(), em(H)), tensor(H.comul(), H.id()))};
       }},
      {"mu-pi-r-var", "mu-pi-r-var", "mu∘(pibarR⊗H) = (em⊗H)∘(H⊗delta)",
       [](const W& H) {
         return std::pair{compose(H.mul(), tensor(H.pi_bar_r(), H.id())),
                          compose(tensor(em(H), H.id()), tensor(H.id(), H.comul()))};
       }},
      {"mu-pi-l-varep", "mu-pi-l-varep", "em∘(H⊗piL) = em",
       [](const W& H) {
         return std::pair{compose(em(H), tensor(H.id(), H.pi_l())), em(H)};
       }},
      {"mu-pi-r-varep", "mu-pi-r-varep", "em∘(piR⊗H) = em",
       [](const W& H) {
         return std::pair{compose(em(H), tensor(H.pi_r(), H.id())), em(H)};
       }},
      {"mu-pi-l-var-varep", "mu-pi-l-var-varep", "em∘(H⊗pibarL) = em",
       [](const W& H) {
         return std::pair{compose(em(H), tensor(H.id(), H.pi_bar_l())), em(H)};
       }},
      {"mu-pi-r-var-varep", "mu-pi-r-var-varep", "em∘(pibarR⊗H) = em",
       [](const W& H) {
         return std::pair{compose(em(H), tensor(H.pi_bar_r(), H.id())), em(H)};
       }},
      {"delta-pi-l", "delta-pi-l", "(H⊗piL)∘delta = (mu⊗H)∘(H⊗c)∘(de⊗H)",
       [](const W& H) {
         return std::pair{compose(tensor(H.id(), H.pi_l()), H.comul()),
                          compose(tensor(H.mul(), H.id()), tensor(H.id(), H.braiding()),
                                  tensor(de(H), H.id()))};
       }},
      {"delta-pi-r", "delta-pi-r", "(piR⊗H)∘delta = (H⊗mu)∘(c⊗H)∘(H⊗de)",
       [](const W& H) {
         return std::pair{compose(tensor(H.pi_r(), H.id()), H.comul()),
                          compose(tensor(H.id(), H.mul()), tensor(H.braiding(), H.id()),
                                  tensor(H.id(), de(H)))};
       }},
      {"delta-pi-l-var", "delta-pi-l-var", "(pibarL⊗H)∘delta = (H⊗mu)∘(de⊗H)",
       [](const W& H) {
         return std::pair{compose(tensor(H.pi_bar_l(), H.id()), H.comul()),
                          compose(tensor(H.id(), H.mul()), tensor(de(H), H.id()))};
       }},
      {"delta-pi-r-var", "delta-pi-r-var", "(H⊗pibarR)∘delta = (mu⊗H)∘(H⊗de)",
       [](const W& H) {
         return std::pair{compose(tensor(H.id(), H.pi_bar_r()), H.comul()),
                          compose(tensor(H.mul(), H.id()), tensor(H.id(), de(H)))};
       }},
      {"delta-pi-l-eta", "delta-pi-l-eta", "(H⊗piL)∘de = de",
       [](const W& H) {
         return std::pair{compose(tensor(H.id(), H.pi_l()), de(H)), de(H)};
       }},
      {"delta-pi-r-eta", "delta-pi-r-eta", "(piR⊗H)∘de = de",
       [](const W& H) {
         return std::pair{compose(tensor(H.pi_r(), H.id()), de(H)), de(H)};
       }},
      {"delta-pi-l-var-eta", "delta-pi-l-var-eta", "(pibarL⊗H)∘de = de",
       [](const W& H) {
         return std::pair{compose(tensor(H.pi_bar_l(), H.id()), de(H)), de(H)};
       }},
      {"delta-pi-r-var-eta", "delta-pi-r-var-eta", "(H⊗pibarR)∘de = de",
       [](const W& H) {
         return std::pair{compose(tensor(H.id(), H.pi_bar_r()), de(H)), de(H)};
       }},
      {"pi-delta-mu-pi-1", "pi-delta-mu-pi-1", "piL∘mu∘(H⊗piL) = piL∘mu",
       [](const W& H) {
         return std::pair{compose(H.pi_l(), H.mul(), tensor(H.id(), H.pi_l())),
                          compose(H.pi_l(), H.mul())};
       }},
      {"pi-delta-mu-pi-2", "pi-delta-mu-pi-2", "piR∘mu∘(piR⊗H) = piR∘mu",
       [](const W& H) {
         return std::pair{compose(H.pi_r(), H.mul(), tensor(H.pi_r(), H.id())),
                          compose(H.pi_r(), H.mul())};
       }},
      {"pi-delta-mu-pi-3", "pi-delta-mu-pi-3", "(H⊗piL)∘delta∘piL = delta∘piL",
       [](const W& H) {
         return std::pair{compose(tensor(H.id(), H.pi_l()), H.comul(), H.pi_l()),
                          compose(H.comul(), H.pi_l())};
       }},
      {"pi-delta-mu-pi-4", "pi-delta-mu-pi-4", "(piR⊗H)∘delta∘piR = delta∘piR",
       [](const W& H) {
         return std::pair{compose(tensor(H.pi_r(), H.id()), H.comul(), H.pi_r()),
                          compose(H.comul(), H.pi_r())};
       }},
      {"pi-delta-mu-pi-1-var", "pi-delta-mu-pi-1-var", "pibarL∘mu∘(H⊗piL) = pibarL∘mu",
       [](const W& H) {
         return std::pair{compose(H.pi_bar_l(), H.mul(), tensor(H.id(), H.pi_l())),
                          compose(H.pi_bar_l(), H.mul())};
       }},
      {"pi-delta-mu-pi-2-var", "pi-delta-mu-pi-2-var", "pibarR∘mu∘(piR⊗H) = pibarR∘mu",
       [](const W& H) {
         return std::pair{compose(H.pi_bar_r(), H.mul(), tensor(H.pi_r(), H.id())),
                          compose(H.pi_bar_r(), H.mul())};
       }},
      {"pi-delta-mu-pi-3-var", "pi-delta-mu-pi-3-var", "(piR⊗H)∘delta∘pibarL = delta∘pibarL",
       [](const W& H) {
         return std::pair{compose(tensor(H.pi_r(), H.id()), H.comul(), H.pi_bar_l()),
                          compose(H.comul(), H.pi_bar_l())};
       }},
      {"pi-delta-mu-pi-4-var", "pi-delta-mu-pi-4-var", "(H⊗piL)∘delta∘pibarR = delta∘pibarR",
       [](const W& H) {
         return std::pair{compose(tensor(H.id(), H.pi_l()), H.comul(), H.pi_bar_r()),
                          compose(H.comul(), H.pi_bar_r())};
       }},
      {"pi-composition-1", "pi-composition-1/1", "piL∘pibarL = piL",
       [](const W& H) { return std::pair{compose(H.pi_l(), H.pi_bar_l()), H.pi_l()}; }},
      {"pi-composition-1", "pi-composition-1/2", "piL∘pibarR = pibarR",
       [](const W& H) { return std::pair{compose(H.pi_l(), H.pi_bar_r()), H.pi_bar_r()}; }},
      {"pi-composition-2", "pi-composition-2/1", "pibarL∘piL = pibarL",
       [](const W& H) { return std::pair{compose(H.pi_bar_l(), H.pi_l()), H.pi_bar_l()}; }},
      {"pi-composition-2", "pi-composition-2/2", "pibarR∘piL = piL",
       [](const W& H) { return std::pair{compose(H.pi_bar_r(), H.pi_l()), H.pi_l()}; }},
      {"pi-composition-3", "pi-composition-3/1", "piR∘pibarL = pibarL",
       [](const W& H) { return std::pair{compose(H.pi_r(), H.pi_bar_l()), H.pi_bar_l()}; }},
      {"pi-composition-3", "pi-composition-3/2", "piR∘pibarR = piR",
       [](const W& H) { return std::pair{compose(H.pi_r(), H.pi_bar_r()), H.pi_r()}; }},
      {"pi-composition-4", "pi-composition-4/1", "pibarL∘piR = piR",
       [](const W& H) { return std::pair{compose(H.pi_bar_l(), H.pi_r()), H.pi_r()}; }},
      {"pi-composition-4", "pi-composition-4/2", "pibarR∘piR = pibarR",
       [](const W& H) { return std::pair{compose(H.pi_bar_r(), H.pi_r()), H.pi_bar_r()}; }},
      {"pi-antipode-composition-1", "pi-antipode-composition-1/1", "piL∘lam = piL∘piR",
       [](const W& H) {
         return std::pair{compose(H.pi_l(), H.antipode()), compose(H.pi_l(), H.pi_r())};
       }},
      {"pi-antipode-composition-1", "pi-antipode-composition-1/2", "lam∘piR = piL∘piR",
       [](const W& H) {
         return std::pair{compose(H.antipode(), H.pi_r()), compose(H.pi_l(), H.pi_r())};
       }},
      {"pi-antipode-composition-2", "pi-antipode-composition-2/1", "piR∘lam = piR∘piL",
       [](const W& H) {
         return std::pair{compose(H.pi_r(), H.antipode()), compose(H.pi_r(), H.pi_l())};
       }},
      {"pi-antipode-composition-2", "pi-antipode-composition-2/2", "lam∘piL = piR∘piL",
       [](const W& H) {
         return std::pair{compose(H.antipode(), H.pi_l()), compose(H.pi_r(), H.pi_l())};
       }},
      {"pi-antipode-composition-3", "pi-antipode-composition-3/1", "pibarR∘lam = piL",
       [](const W& H) {
         return std::pair{compose(H.pi_bar_r(), H.antipode()), H.pi_l()};
       }},
      {"pi-antipode-composition-3", "pi-antipode-composition-3/2", "lam∘pibarL = piL",
       [](const W& H) {
         return std::pair{compose(H.antipode(), H.pi_bar_l()), H.pi_l()};
       }},
      {"pi-antipode-composition-4", "pi-antipode-composition-4/1", "pibarL∘lam = piR",
       [](const W& H) {
         return std::pair{compose(H.pi_bar_l(), H.antipode()), H.pi_r()};
       }},
      {"pi-antipode-composition-4", "pi-antipode-composition-4/2", "lam∘pibarR = piR",
       [](const W& H) {
         return std::pair{compose(H.antipode(), H.pi_bar_r()), H.pi_r()};
       }},
      {"aux-1", "aux-1", "(mu⊗H)∘(H⊗c)∘(de⊗H) = ((mu∘c^-1)⊗H)∘(H⊗de)",
       [](const W& H) {
         return std::pair{compose(tensor(H.mul(), H.id()), tensor(H.id(), H.braiding()),
                                  tensor(de(H), H.id())),
                          compose(tensor(compose(H.mul(), H.braiding_inv()), H.id()),
                                  tensor(H.id(), de(H)))};
       }},
      {"aux-2", "aux-2", "(H⊗mu)∘(c⊗H)∘(H⊗de) = (H⊗(mu∘c^-1))∘(de⊗H)",
       [](const W& H) {
         return std::pair{compose(tensor(H.id(), H.mul()), tensor(H.braiding(), H.id()),
                                  tensor(H.id(), de(H))),
                          compose(tensor(H.id(), compose(H.mul(), H.braiding_inv())),
                                  tensor(de(H), H.id()))};
       }},
      {"mu-assoc-1", "mu-assoc-1/1", "mu∘(mu⊗H)∘(H⊗((piL⊗H)∘delta)) = mu",
       [](const W& H) {
         return std::pair{
             compose(H.mul(), tensor(H.mul(), H.id()),
                     tensor(H.id(), compose(tensor(H.pi_l(), H.id()), H.comul()))),
             H.mul()};
       }},
      {"mu-assoc-1", "mu-assoc-1/2", "mu∘(mu⊗piR)∘(H⊗delta) = mu",
       [](const W& H) {
         return std::pair{
             compose(H.mul(), tensor(H.mul(), H.pi_r()), tensor(H.id(), H.comul())), H.mul()};
       }},
      {"mu-assoc-2", "mu-assoc-2/1", "mu∘(piL⊗mu)∘(delta⊗H) = mu",
       [](const W& H) {
         return std::pair{
             compose(H.mul(), tensor(H.pi_l(), H.mul()), tensor(H.comul(), H.id())), H.mul()};
       }},
      {"mu-assoc-2", "mu-assoc-2/2", "mu∘(H⊗(mu∘(piR⊗H)))∘(delta⊗H) = mu",
       [](const W& H) {
         return std::pair{
             compose(H.mul(), tensor(H.id(), compose(H.mul(), tensor(H.pi_r(), H.id()))),
                     tensor(H.comul(), H.id())),
             H.mul()};
       }},
      {"mu-assoc-3", "mu-assoc-3/1", "mu∘(lam⊗(mu∘(piL⊗H)))∘(delta⊗H) = mu∘(lam⊗H)",
       [](const W& H) {
         return std::pair{
             compose(H.mul(), tensor(H.antipode(), compose(H.mul(), tensor(H.pi_l(), H.id()))),
                     tensor(H.comul(), H.id())),
             compose(H.mul(), tensor(H.antipode(), H.id()))};
       }},
      {"mu-assoc-3", "mu-assoc-3/2", "mu∘(piR⊗(mu∘(lam⊗H)))∘(delta⊗H) = mu∘(lam⊗H)",
       [](const W& H) {
         return std::pair{
             compose(H.mul(), tensor(H.pi_r(), compose(H.mul(), tensor(H.antipode(), H.id()))),
                     tensor(H.comul(), H.id())),
             compose(H.mul(), tensor(H.antipode(), H.id()))};
       }},
      {"mu-assoc-4", "mu-assoc-4/1", "mu∘(mu⊗H)∘(H⊗((lam⊗piL)∘delta)) = mu∘(H⊗lam)",
       [](const W& H) {
         return std::pair{
             compose(H.mul(), tensor(H.mul(), H.id()),
                     tensor(H.id(), compose(tensor(H.antipode(), H.pi_l()), H.comul()))),
             compose(H.mul(), tensor(H.id(), H.antipode()))};
       }},
      {"mu-assoc-4", "mu-assoc-4/2", "mu∘(mu⊗H)∘(H⊗((piR⊗lam)∘delta)) = mu∘(H⊗lam)",
       [](const W& H) {
         return std::pair{
             compose(H.mul(), tensor(H.mul(), H.id()),
                     tensor(H.id(), compose(tensor(H.pi_r(), H.antipode()), H.comul()))),
             compose(H.mul(), tensor(H.id(), H.antipode()))};
       }},
      {"mu-assoc-5", "mu-assoc-5/1", "piL*id = id",
       [](const W& H) { return std::pair{convolution(H.pi_l(), H.id(), H), H.id()}; }},
      {"mu-assoc-5", "mu-assoc-5/2", "id*piR = id",
       [](const W& H) { return std::pair{convolution(H.id(), H.pi_r(), H), H.id()}; }},
      {"2-mu-delta-pi-l", "2-mu-delta-pi-l",
       "(mu⊗(mu∘(H⊗piL)))∘delta2 = (mu⊗H)∘(H⊗c)∘(delta⊗H)",
       [](const W& H) {
         return std::pair{
             compose(tensor(H.mul(), compose(H.mul(), tensor(H.id(), H.pi_l()))), delta2(H)),
             compose(tensor(H.mul(), H.id()), tensor(H.id(), H.braiding()),
                     tensor(H.comul(), H.id()))};
       }},
      {"2-mu-delta-pi-r", "2-mu-delta-pi-r",
       "((mu∘(piR⊗H))⊗mu)∘delta2 = (H⊗mu)∘(c⊗H)∘(H⊗delta)",
       [](const W& H) {
         return std::pair{
             compose(tensor(compose(H.mul(), tensor(H.pi_r(), H.id())), H.mul()), delta2(H)),
             compose(tensor(H.id(), H.mul()), tensor(H.braiding(), H.id()),
                     tensor(H.id(), H.comul()))};
       }},
      {"mu-delta-anti-1", "mu-delta-anti-1", "mu∘(piL⊗piR) = mu∘c^-1∘(piL⊗piR)",
       [](const W& H) {
         return std::pair{compose(H.mul(), tensor(H.pi_l(), H.pi_r())),
                          compose(H.mul(), H.braiding_inv(), tensor(H.pi_l(), H.pi_r()))};
       }},
      {"mu-delta-anti-2", "mu-delta-anti-2", "(piL⊗piR)∘delta = (piL⊗piR)∘c^-1∘delta",
       [](const W& H) {
         return std::pair{compose(tensor(H.pi_l(), H.pi_r()), H.comul()),
                          compose(tensor(H.pi_l(), H.pi_r()), H.braiding_inv(), H.comul())};
       }},
      {"mu-delta-anti-3", "mu-delta-anti-3", "mu∘(piR⊗piL) = mu∘c∘(piR⊗piL)",
       [](const W& H) {
         return std::pair{compose(H.mul(), tensor(H.pi_r(), H.pi_l())),
                          compose(H.mul(), H.braiding(), tensor(H.pi_r(), H.pi_l()))};
       }},
      {"mu-delta-anti-4", "mu-delta-anti-4", "(piR⊗piL)∘delta = (piR⊗piL)∘c∘delta",
       [](const W& H) {
         return std::pair{compose(tensor(H.pi_r(), H.pi_l()), H.comul()),
                          compose(tensor(H.pi_r(), H.pi_l()), H.braiding(), H.comul())};
       }},
      {"anti-antipode-1", "anti-antipode-1", "lam∘mu = mu∘c∘(lam⊗lam)",
       [](const W& H) {
         return std::pair{compose(H.antipode(), H.mul()),
                          compose(H.mul(), H.braiding(), tensor(H.antipode(), H.antipode()))};
       }},
      {"anti-antipode-2", "anti-antipode-2", "delta∘lam = (lam⊗lam)∘c∘delta",
       [](const W& H) {
         return std::pair{compose(H.comul(), H.antipode()),
                          compose(tensor(H.antipode(), H.antipode()), H.braiding(), H.comul())};
       }},
  };
  return entries;
}

IdentityResult evaluate_one(const Entry& e, const W& H) {
  IdentityResult r;
  r.group = e.group;
  r.name = e.name;
  r.formula = e.formula;
  auto [lhs, rhs] = e.build(H);
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

std::vector<IdentityResult> evaluate(const std::vector<Entry>& entries, const W& H, int jobs) {
  std::vector<IdentityResult> results(entries.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) results[i] = evaluate_one(entries[i], H);
    return results;
  }
  // Identities are independent; workers fill disjoint slots, so the
  // output is schedule-independent.
  std::vector<std::thread> pool;
  const int n = static_cast<int>(entries.size());
  for (int w = 0; w < jobs && w < n; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = w; i < n; i += jobs)
        results[static_cast<std::size_t>(i)] = evaluate_one(entries[static_cast<std::size_t>(i)], H);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

StructureFlags compute_flags(const W& H, bool axioms_pass) {
  StructureFlags f;
  f.weak_hopf_quasigroup = axioms_pass;
  const bool associative = compose(H.mul(), tensor(H.mul(), H.id())) ==
                           compose(H.mul(), tensor(H.id(), H.mul()));
  f.weak_hopf_algebra = axioms_pass && associative;
  const bool counit_multiplicative = em(H) == tensor(H.counit(), H.counit());
  const bool counit_unital =
      compose(H.counit(), H.unit()) == LinMap::identity(H.field(), 1);
  const bool coproduct_grouplike_unit = de(H) == tensor(H.unit(), H.unit());
  f.hopf_quasigroup =
      axioms_pass && counit_multiplicative && counit_unital && coproduct_grouplike_unit;
  f.commutative = compose(H.mul(), H.braiding()) == H.mul();
  f.cocommutative = compose(H.braiding(), H.comul()) == H.comul();
  return f;
}

}  // namespace

bool Report::all_pass() const {
  for (const auto& r : identities)
    if (!r.pass) return false;
  return true;
}

const IdentityResult* Report::first_failure() const {
  for (const auto& r : identities)
    if (!r.pass) return &r;
  return nullptr;
}

Report check_axioms(const WeakHopfQuasigroup& H, int jobs) {
  Report rep;
  rep.identities = evaluate(axiom_catalog(), H, jobs);
  rep.flags = compute_flags(H, rep.all_pass());
  return rep;
}

Report check_derived(const WeakHopfQuasigroup& H, int jobs) {
  Report axioms;
  axioms.identities = evaluate(axiom_catalog(), H, jobs);
  const bool conditional = !axioms.all_pass();
  Report rep;
  rep.identities = evaluate(derived_catalog(), H, jobs);
  for (auto& r : rep.identities) r.conditional = conditional;
  return rep;
}

std::pair<bool, bool> check_dyslexia(const WeakHopfQuasigroup& H, int n) {
  if (n < 1) throw Error("check_dyslexia requires n >= 1");
  LinMap cn = H.braiding();
  for (int i = 1; i < n; ++i) cn = compose(H.braiding(), cn);
  return {compose(H.mul(), cn) == H.mul(), compose(cn, H.comul()) == H.comul()};
}

std::optional<int> antipode_order(const WeakHopfQuasigroup& H, int max_n) {
  LinMap pow = H.id();
  for (int k = 1; k <= max_n; ++k) {
    pow = compose(H.antipode(), pow);
    if (pow == H.id()) return k;
  }
  return std::nullopt;
}

}  // namespace whq
