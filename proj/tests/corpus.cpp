#include "corpus.hpp"

#include <array>

namespace corpus {

using namespace whq;

LoopTable cyclic_group(int n) {
  LoopTable L;
  L.order = n;
  L.identity = 0;
  L.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) L.table[i][j] = (i + j) % n;
  return L;
}

namespace {

// Quaternion basis products, 0=1, 1=i, 2=j, 3=k.
struct QuatUnit {
  int sign;
  int idx;
};

QuatUnit quat_mul(int i, int j) {
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  return {sgn[i][j], idx[i][j]};
}

struct Quat {
  std::array<int, 4> v{0, 0, 0, 0};
};

Quat mul(const Quat& a, const Quat& b) {
  Quat r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (!a.v[i] || !b.v[j]) continue;
      QuatUnit e = quat_mul(i, j);
      r.v[e.idx] += e.sign * a.v[i] * b.v[j];
    }
  return r;
}

Quat conj(const Quat& a) { return Quat{{a.v[0], -a.v[1], -a.v[2], -a.v[3]}}; }

Quat add(const Quat& a, const Quat& b) {
  Quat r;
  for (int i = 0; i < 4; ++i) r.v[i] = a.v[i] + b.v[i];
  return r;
}

Quat neg(const Quat& a) {
  Quat r;
  for (int i = 0; i < 4; ++i) r.v[i] = -a.v[i];
  return r;
}

// Doubling: (a,b)(c,d) = (ac - d*b, da + bc*) with * conjugation.
struct Oct {
  Quat a, b;
};

Oct mul(const Oct& x, const Oct& y) {
  return {add(mul(x.a, y.a), neg(mul(conj(y.b), x.b))), add(mul(y.b, x.a), mul(x.b, conj(y.a)))};
}

}  // namespace

LoopTable octonion_sign_loop() {
  std::array<Oct, 8> basis{};
  for (int t = 0; t < 8; ++t) {
    if (t < 4)
      basis[t].a.v[t] = 1;
    else
      basis[t].b.v[t - 4] = 1;
  }
  LoopTable L;
  L.order = 16;
  L.identity = 0;
  L.table.assign(16, std::vector<int>(16));
  // Element x = unit index + 8 * sign bit.
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y) {
      Oct p = mul(basis[x % 8], basis[y % 8]);
      int k = -1, s = 0;
      for (int t = 0; t < 4; ++t) {
        if (p.a.v[t]) {
          k = t;
          s = p.a.v[t];
        }
        if (p.b.v[t]) {
          k = 4 + t;
          s = p.b.v[t];
        }
      }
      const int neg_bit = (x / 8) ^ (y / 8) ^ (s < 0 ? 1 : 0);
      L.table[x][y] = k + 8 * neg_bit;
    }
  return L;
}

LoopTable smallest_nonassoc_ip_loop() {
  LoopTable L;
  L.order = 7;
  L.identity = 0;
  L.table = {
      {0, 1, 2, 3, 4, 5, 6},
      {1, 2, 0, 5, 6, 4, 3},
      {2, 0, 1, 6, 5, 3, 4},
      {3, 6, 5, 4, 0, 1, 2},
      {4, 5, 6, 0, 3, 2, 1},
      {5, 3, 4, 2, 1, 6, 0},
      {6, 4, 3, 1, 2, 0, 5},
  };
  return L;
}

GroupoidPresentation pair_groupoid() {
  GroupoidPresentation G;
  G.objects = {"1", "2"};
  G.arrows = {{"id1", "1", "1"}, {"id2", "2", "2"}, {"f", "1", "2"}, {"g", "2", "1"}};
  G.identity_of = {{"1", "id1"}, {"2", "id2"}};
  G.composition = {
      {{"id1", "id1"}, "id1"}, {{"id2", "id2"}, "id2"}, {{"f", "id1"}, "f"},
      {{"id2", "f"}, "f"},     {{"g", "id2"}, "g"},     {{"id1", "g"}, "g"},
      {{"g", "f"}, "id1"},     {{"f", "g"}, "id2"},
  };
  G.inverse = {{"id1", "id1"}, {"id2", "id2"}, {"f", "g"}, {"g", "f"}};
  return G;
}

GroupoidPresentation two_z2_disjoint() {
  GroupoidPresentation G;
  G.objects = {"1", "2"};
  G.arrows = {{"id1", "1", "1"}, {"a", "1", "1"}, {"id2", "2", "2"}, {"b", "2", "2"}};
  G.identity_of = {{"1", "id1"}, {"2", "id2"}};
  G.composition = {
      {{"id1", "id1"}, "id1"}, {{"id1", "a"}, "a"}, {{"a", "id1"}, "a"}, {{"a", "a"}, "id1"},
      {{"id2", "id2"}, "id2"}, {{"id2", "b"}, "b"}, {{"b", "id2"}, "b"}, {{"b", "b"}, "id2"},
  };
  G.inverse = {{"id1", "id1"}, {"a", "a"}, {"id2", "id2"}, {"b", "b"}};
  return G;
}

BigroupoidPresentation merged_parallel_cells() {
  BigroupoidPresentation B;
  B.zero_cells = {"x", "y"};
  B.one_cells = {{"ex", "x", "x"}, {"ey", "y", "y"}, {"f", "x", "y"}, {"f2", "x", "y"},
                 {"g", "y", "x"}};
  B.identity_of = {{"x", "ex"}, {"y", "ey"}};
  B.composition = {
      {{"ex", "ex"}, "ex"}, {{"ey", "ey"}, "ey"}, {{"f", "ex"}, "f"},   {{"ey", "f"}, "f"},
      {{"f2", "ex"}, "f2"}, {{"ey", "f2"}, "f2"}, {{"g", "ey"}, "g"},   {{"ex", "g"}, "g"},
      {{"g", "f"}, "ex"},   {{"g", "f2"}, "ex"},  {{"f", "g"}, "ey"},   {{"f2", "g"}, "ey"},
  };
  // g inverts both parallel cells; listing both under g is what glues
  // [f] = [f2] in the quotient.
  B.inverses = {{"ex", {"ex"}}, {"ey", {"ey"}}, {"f", {"g"}}, {"f2", {"g"}}, {"g", {"f", "f2"}}};
  return B;
}

BigroupoidPresentation ip7_plus_point() {
  BigroupoidPresentation B = as_bigroupoid(smallest_nonassoc_ip_loop());
  B.zero_cells.push_back("y");
  B.one_cells.push_back({"idy", "y", "y"});
  B.identity_of["y"] = "idy";
  B.composition[{"idy", "idy"}] = "idy";
  B.inverses["idy"] = {"idy"};
  return B;
}

std::vector<Entry> full_corpus() {
  const Field q = Field::rationals();
  const Field f5 = Field::prime(5);
  std::vector<Entry> entries;
  entries.push_back({"z2-rationals", from_loop(cyclic_group(2), q)});
  entries.push_back({"z3-rationals", from_loop(cyclic_group(3), q)});
  entries.push_back({"z2-f5", from_loop(cyclic_group(2), f5)});
  entries.push_back({"z3-f5", from_loop(cyclic_group(3), f5)});
  entries.push_back({"pair-groupoid", from_groupoid(pair_groupoid(), q)});
  entries.push_back({"two-z2-disjoint", from_groupoid(two_z2_disjoint(), q)});
  entries.push_back({"octonion-loop", from_loop(octonion_sign_loop(), q)});
  entries.push_back({"ip7-loop", from_loop(smallest_nonassoc_ip_loop(), q)});
  entries.push_back({"ip7-plus-point", from_bigroupoid(ip7_plus_point(), q).whq});
  return entries;
}

namespace {

// Rebuild with one structure map replaced.
WeakHopfQuasigroup with_maps(const WeakHopfQuasigroup& H, std::optional<LinMap> unit,
                             std::optional<LinMap> mul, std::optional<LinMap> counit,
                             std::optional<LinMap> comul, std::optional<LinMap> antipode,
                             std::optional<LinMap> braiding = std::nullopt) {
  return WeakHopfQuasigroup(unit ? *unit : H.unit(), mul ? *mul : H.mul(),
                            counit ? *counit : H.counit(), comul ? *comul : H.comul(),
                            antipode ? *antipode : H.antipode(),
                            braiding ? braiding : std::optional<LinMap>{}, H.basis_labels());
}

}  // namespace

WeakHopfQuasigroup z2_delta_primitive() {
  const Field q = Field::rationals();
  WeakHopfQuasigroup z2 = from_loop(cyclic_group(2), q);
  const Scalar one = Scalar::one(q);
  // delta(e) = e⊗e, delta(g) = e⊗g + g⊗e; counit picks the e coordinate.
  LinMap comul(q, 4, 2);
  comul.set(0, 0, one);
  comul.set(1, 1, one);
  comul.set(2, 1, one);
  LinMap counit(q, 1, 2);
  counit.set(0, 0, one);
  return with_maps(z2, {}, {}, counit, comul, z2.id());
}

WeakHopfQuasigroup z2_delta_unit_skew() {
  const Field q = Field::rationals();
  WeakHopfQuasigroup z2 = from_loop(cyclic_group(2), q);
  const Scalar one = Scalar::one(q);
  // delta(e) = e⊗e + 2 g⊗g, delta(g) = e⊗g + g⊗e.
  LinMap comul(q, 4, 2);
  comul.set(0, 0, one);
  comul.set(3, 0, Scalar::integer(q, 2));
  comul.set(1, 1, one);
  comul.set(2, 1, one);
  LinMap counit(q, 1, 2);
  counit.set(0, 0, one);
  return with_maps(z2, {}, {}, counit, comul, z2.id());
}

WeakHopfQuasigroup pair_groupoid_dropped_product() {
  const Field q = Field::rationals();
  WeakHopfQuasigroup G = from_groupoid(pair_groupoid(), q);
  // Basis sorted by name: f=0, g=1, id1=2, id2=3. Erase g∘f = id1.
  LinMap mul = G.mul();
  mul.set(2, 1 * 4 + 0, Scalar::zero(q));
  return with_maps(G, {}, mul, {}, {}, {});
}

WeakHopfQuasigroup z2_antipode_zero() {
  const Field q = Field::rationals();
  WeakHopfQuasigroup z2 = from_loop(cyclic_group(2), q);
  return with_maps(z2, {}, {}, {}, {}, LinMap(q, 2, 2));
}

WeakHopfQuasigroup pair_groupoid_antipode_skew() {
  const Field q = Field::rationals();
  WeakHopfQuasigroup G = from_groupoid(pair_groupoid(), q);
  // lambda(f) = g + f: the extra summand convolves to zero against the
  // identity on both sides, so only the a4-3 pair detects it.
  LinMap antipode = G.antipode();
  antipode.set(0, 0, Scalar::one(q));
  return with_maps(G, {}, {}, {}, {}, antipode);
}

WeakHopfQuasigroup z3_mul_corrupted() {
  const Field q = Field::rationals();
  WeakHopfQuasigroup z3 = from_loop(cyclic_group(3), q);
  // Redirect 1.1 from 2 to 0; unit row/column stay intact.
  LinMap mul = z3.mul();
  mul.set(2, 1 * 3 + 1, Scalar::zero(q));
  mul.set(0, 1 * 3 + 1, Scalar::one(q));
  return with_maps(z3, {}, mul, {}, {}, {});
}

WeakHopfQuasigroup z3_antipode_identity() {
  const Field q = Field::rationals();
  WeakHopfQuasigroup z3 = from_loop(cyclic_group(3), q);
  return with_maps(z3, {}, {}, {}, {}, z3.id());
}

WeakHopfQuasigroup z3_delta_non_coassociative() {
  const Field q = Field::rationals();
  WeakHopfQuasigroup z3 = from_loop(cyclic_group(3), q);
  // delta(e) = e⊗e + (g-h)⊗(g-h): counital, not coassociative.
  LinMap comul = z3.comul();
  const Scalar one = Scalar::one(q);
  comul.set(1 * 3 + 1, 0, one);
  comul.set(1 * 3 + 2, 0, -one);
  comul.set(2 * 3 + 1, 0, -one);
  comul.set(2 * 3 + 2, 0, one);
  return with_maps(z3, {}, {}, {}, comul, {});
}

WeakHopfQuasigroup z2_braiding_singular() {
  const Field q = Field::rationals();
  WeakHopfQuasigroup z2 = from_loop(cyclic_group(2), q);
  return with_maps(z2, {}, {}, {}, {}, {}, LinMap(q, 4, 4));
}

HopfModule z3_module_action_twisted() {
  auto H = std::make_shared<WeakHopfQuasigroup>(from_loop(cyclic_group(3), Field::rationals()));
  LinMap action = compose(H->mul(), tensor(H->id(), H->antipode()));
  LinMap coaction = H->comul();
  return HopfModule(std::move(H), std::move(action), std::move(coaction));
}

HopfModule z3_module_action_scaled() {
  auto H = std::make_shared<WeakHopfQuasigroup>(from_loop(cyclic_group(3), Field::rationals()));
  LinMap action = scale(Scalar::integer(Field::rationals(), 2), H->mul());
  LinMap coaction = H->comul();
  return HopfModule(std::move(H), std::move(action), std::move(coaction));
}

}  // namespace corpus
