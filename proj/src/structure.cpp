#include "whq/structure.hpp"

namespace whq {

namespace {

void require_shape(const LinMap& m, int rows, int cols, const char* name) {
  if (m.codomain_dim() != rows || m.domain_dim() != cols)
    throw DimensionMismatch(std::string(name) + " must be " + std::to_string(rows) + "x" +
                            std::to_string(cols) + ", got " + std::to_string(m.codomain_dim()) +
                            "x" + std::to_string(m.domain_dim()));
}

}  // namespace

WeakHopfQuasigroup::WeakHopfQuasigroup(LinMap unit, LinMap mul, LinMap counit, LinMap comul,
                                       LinMap antipode, std::optional<LinMap> braiding,
                                       std::optional<std::vector<std::string>> basis_labels)
    : field_(unit.field()),
      dim_(unit.codomain_dim()),
      unit_(std::move(unit)),
      mul_(std::move(mul)),
      counit_(std::move(counit)),
      comul_(std::move(comul)),
      antipode_(std::move(antipode)),
      braiding_(braiding ? std::move(*braiding) : flip(field_, dim_, dim_)),
      braiding_inv_(LinMap(field_, dim_ * dim_, dim_ * dim_)),
      braiding_is_flip_(false),
      id_(LinMap::identity(field_, dim_)),
      pi_l_(LinMap(field_, dim_, dim_)),
      pi_r_(LinMap(field_, dim_, dim_)),
      pi_l_closed_(LinMap(field_, dim_, dim_)),
      pi_r_closed_(LinMap(field_, dim_, dim_)),
      pi_bar_l_(LinMap(field_, dim_, dim_)),
      pi_bar_r_(LinMap(field_, dim_, dim_)),
      basis_labels_(std::move(basis_labels)) {
  if (dim_ < 1) throw InvalidStructure("carrier dimension must be positive");
  for (const LinMap* m : {&mul_, &counit_, &comul_, &antipode_, &braiding_})
    if (!(m->field() == field_)) throw FieldMismatch("structure maps over different fields");

  require_shape(unit_, dim_, 1, "unit");
  require_shape(mul_, dim_, dim_ * dim_, "mul");
  require_shape(counit_, 1, dim_, "counit");
  require_shape(comul_, dim_ * dim_, dim_, "comul");
  require_shape(antipode_, dim_, dim_, "antipode");
  require_shape(braiding_, dim_ * dim_, dim_ * dim_, "braiding");
  if (basis_labels_ && static_cast<int>(basis_labels_->size()) != dim_)
    throw DimensionMismatch("basis label count != dimension");

  const LinMap flip_hh = flip(field_, dim_, dim_);
  braiding_is_flip_ = (braiding_ == flip_hh);
  if (braiding_is_flip_) {
    braiding_inv_ = flip_hh;
  } else {
    auto inv = inverse(braiding_);
    if (!inv) throw InvalidStructure("braiding is not invertible");
    braiding_inv_ = std::move(*inv);
    // Yang-Baxter on H^3: (c(x)H)∘(H(x)c)∘(c(x)H) = (H(x)c)∘(c(x)H)∘(H(x)c).
    const LinMap cH = tensor(braiding_, id_);
    const LinMap Hc = tensor(id_, braiding_);
    if (compose(cH, Hc, cH) != compose(Hc, cH, Hc))
      throw InvalidStructure("braiding fails the Yang-Baxter relation");
  }

  if (compose(mul_, tensor(id_, unit_)) != id_ || compose(mul_, tensor(unit_, id_)) != id_)
    throw InvalidStructure("unital-magma law fails: mul∘(H⊗unit) or mul∘(unit⊗H) != id");
  if (compose(tensor(counit_, id_), comul_) != id_ || compose(tensor(id_, counit_), comul_) != id_)
    throw InvalidStructure("counit law fails: (ε⊗H)∘δ or (H⊗ε)∘δ != id");
  if (compose(tensor(comul_, id_), comul_) != compose(tensor(id_, comul_), comul_))
    throw InvalidStructure("coproduct is not coassociative");

  // The four canonical idempotent candidates, convolution and closed form.
  const LinMap delta_eta = compose(comul_, unit_);
  const LinMap eps_mul = compose(counit_, mul_);
  pi_l_ = convolution(id_, antipode_, *this);
  pi_r_ = convolution(antipode_, id_, *this);
  pi_l_closed_ =
      compose(tensor(eps_mul, id_), tensor(id_, braiding_), tensor(delta_eta, id_));
  pi_r_closed_ =
      compose(tensor(id_, eps_mul), tensor(braiding_, id_), tensor(id_, delta_eta));
  pi_bar_l_ = compose(tensor(id_, eps_mul), tensor(delta_eta, id_));
  pi_bar_r_ = compose(tensor(eps_mul, id_), tensor(id_, delta_eta));
}

bool WeakHopfQuasigroup::operator==(const WeakHopfQuasigroup& o) const {
  if (!(field_ == o.field_) || dim_ != o.dim_) return false;
  return unit_ == o.unit_ && mul_ == o.mul_ && counit_ == o.counit_ && comul_ == o.comul_ &&
         antipode_ == o.antipode_ && braiding_ == o.braiding_ && basis_labels_ == o.basis_labels_;
}

LinMap convolution(const LinMap& f, const LinMap& g, const WeakHopfQuasigroup& H) {
  const int d = H.dim();
  if (f.domain_dim() != d || f.codomain_dim() != d || g.domain_dim() != d ||
      g.codomain_dim() != d)
    throw DimensionMismatch("convolution expects endomorphisms of H");
  return compose(H.mul(), tensor(f, g), H.comul());
}

namespace {

SubobjectData make_subobject(const WeakHopfQuasigroup& H, const LinMap& idem, bool left) {
  if (compose(idem, idem) != idem)
    throw NotIdempotent(std::string(left ? "pi_l" : "pi_r") + " is not idempotent");
  Splitting s = split_idempotent(idem);
  const LinMap& i = s.section;
  const LinMap& p = s.retraction;
  SubobjectData out{
      i,
      p,
      s.rank,
      compose(p, H.unit()),
      compose(p, H.mul(), tensor(i, i)),
      compose(H.counit(), i),
      compose(tensor(p, p), H.comul(), i),
  };

  const LinMap idsub = LinMap::identity(H.field(), s.rank);
  if (compose(out.mul, tensor(idsub, out.unit)) != idsub ||
      compose(out.mul, tensor(out.unit, idsub)) != idsub)
    throw InvalidStructure("induced product is not unital on the subobject");
  if (compose(tensor(out.counit, idsub), out.comul) != idsub ||
      compose(tensor(idsub, out.counit), out.comul) != idsub)
    throw InvalidStructure("induced coproduct fails the counit law on the subobject");
  if (compose(tensor(out.comul, idsub), out.comul) != compose(tensor(idsub, out.comul), out.comul))
    throw InvalidStructure("induced coproduct is not coassociative on the subobject");

  // Fork identities: the inclusion equalizes comul against its projected
  // variant, and the projection coequalizes mul against its variant.
  const LinMap proj_comul = left ? compose(tensor(H.id(), H.pi_l()), H.comul())
                                 : compose(tensor(H.pi_r(), H.id()), H.comul());
  const LinMap proj_mul = left ? compose(H.mul(), tensor(H.id(), H.pi_l()))
                               : compose(H.mul(), tensor(H.pi_r(), H.id()));
  if (compose(H.comul(), i) != compose(proj_comul, i))
    throw InvalidStructure("inclusion does not equalize the coproduct fork");
  if (compose(p, H.mul()) != compose(p, proj_mul))
    throw InvalidStructure("projection does not coequalize the product fork");
  if (!same_column_space(i, equalizer(H.comul(), proj_comul)))
    throw InvalidStructure("subobject image differs from the equalizer of the coproduct fork");
  return out;
}

}  // namespace

SubobjectData subobject_l(const WeakHopfQuasigroup& H) { return make_subobject(H, H.pi_l(), true); }

SubobjectData subobject_r(const WeakHopfQuasigroup& H) { return make_subobject(H, H.pi_r(), false); }

}  // namespace whq
