#include "doctest.h"

#include "corpus.hpp"
#include "whq/axioms.hpp"
#include "whq/gauss.hpp"

using namespace whq;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("loop validation catches broken tables") {
  LoopTable L = corpus::cyclic_group(3);

  SUBCASE("non-Latin row") {
    L.table[1][1] = 1;
    CHECK_THROWS_AS(validate_loop(L), NotIPLoop);
  }
  SUBCASE("identity out of range") {
    L.identity = 7;
    CHECK_THROWS_AS(validate_loop(L), NotIPLoop);
  }
  SUBCASE("identity not acting trivially") {
    L.identity = 1;
    CHECK_THROWS_AS(validate_loop(L), NotIPLoop);
  }
}

TEST_CASE("inverse-property check rejects a plain nonassociative loop") {
  // Smallest nonassociative loop (order 5); it has one-sided inverses only.
  LoopTable L;
  L.order = 5;
  L.identity = 0;
  L.table = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0},
  };
  validate_loop(L);  // it is a loop
  CHECK_THROWS_AS(ip_inverses(L), NotIPLoop);
}

TEST_CASE("cyclic group tables build Hopf algebras") {
  WeakHopfQuasigroup z2 = from_loop(corpus::cyclic_group(2), Q);
  CHECK(z2.dim() == 2);
  Report r = check_axioms(z2);
  CHECK(r.all_pass());
  CHECK(r.flags->weak_hopf_algebra);
  CHECK(r.flags->hopf_quasigroup);
}

TEST_CASE("loop algebras work over prime fields") {
  WeakHopfQuasigroup z3 = from_loop(corpus::cyclic_group(3), Field::prime(5));
  CHECK(check_axioms(z3).all_pass());
}

TEST_CASE("octonion sign loop is a Moufang inverse-property loop of order 16") {
  LoopTable L = corpus::octonion_sign_loop();
  std::vector<int> inv = ip_inverses(L);
  CHECK(L.order == 16);
  CHECK_FALSE(is_associative(L));
  // -e_i inverts e_i for i >= 1.
  for (int i = 1; i < 8; ++i) CHECK(inv[i] == i + 8);
  CHECK(inv[0] == 0);
  CHECK(inv[8] == 8);
  // Moufang law z(x(zy)) = ((zx)z)y.
  for (int z = 0; z < 16; ++z)
    for (int x = 0; x < 16; ++x)
      for (int y = 0; y < 16; ++y) {
        int lhs = L.table[z][L.table[x][L.table[z][y]]];
        int rhs = L.table[L.table[L.table[z][x]][z]][y];
        REQUIRE(lhs == rhs);
      }
}

TEST_CASE("groupoid validation catches broken presentations") {
  GroupoidPresentation G = corpus::pair_groupoid();

  SUBCASE("valid") { validate_groupoid(G); }
  SUBCASE("missing composable entry") {
    G.composition.erase({"g", "f"});
    CHECK_THROWS_AS(validate_groupoid(G), InvalidPresentation);
  }
  SUBCASE("composition on non-composable pair") {
    G.composition[{"f", "f"}] = "id1";
    CHECK_THROWS_AS(validate_groupoid(G), InvalidPresentation);
  }
  SUBCASE("wrong inverse") {
    G.inverse["f"] = "id2";
    CHECK_THROWS_AS(validate_groupoid(G), InconsistentPresentation);
  }
  SUBCASE("broken associativity") {
    GroupoidPresentation B = corpus::two_z2_disjoint();
    B.composition[{"a", "a"}] = "a";  // also breaks the inverse law
    CHECK_THROWS_AS(validate_groupoid(B), NotGroupoid);
  }
  SUBCASE("duplicate arrow names") {
    G.arrows.push_back({"f", "1", "2"});
    CHECK_THROWS_AS(validate_groupoid(G), InvalidPresentation);
  }
}

TEST_CASE("one-object groupoid matches the loop constructor") {
  // Z2 as a one-object groupoid, names chosen to sort like loop labels.
  GroupoidPresentation G;
  G.objects = {"x"};
  G.arrows = {{"g0", "x", "x"}, {"g1", "x", "x"}};
  G.identity_of = {{"x", "g0"}};
  G.composition = {{{"g0", "g0"}, "g0"},
                   {{"g0", "g1"}, "g1"},
                   {{"g1", "g0"}, "g1"},
                   {{"g1", "g1"}, "g0"}};
  G.inverse = {{"g0", "g0"}, {"g1", "g1"}};
  WeakHopfQuasigroup A = from_groupoid(G, Q);
  WeakHopfQuasigroup B = from_loop(corpus::cyclic_group(2), Q);
  CHECK(A == B);
}

TEST_CASE("pair groupoid algebra satisfies the projection formulas") {
  QuotientResult qr = from_bigroupoid(as_bigroupoid(corpus::pair_groupoid()), Q);
  const auto& H = qr.whq;
  CHECK(qr.ideal_dim == 0);
  for (const auto& [name, k] : qr.class_of) {
    CAPTURE(name);
    // pi_l picks the identity at the target, pi_r at the source.
    const GroupoidPresentation G = corpus::pair_groupoid();
    for (const auto& arrow : G.arrows) {
      if (arrow.name != name) continue;
      const int tgt_id = qr.class_of.at(G.identity_of.at(arrow.tgt));
      const int src_id = qr.class_of.at(G.identity_of.at(arrow.src));
      CHECK(H.pi_l().entry(tgt_id, k).is_one());
      CHECK(H.pi_l().col(k).size() == 1);
      CHECK(H.pi_r().entry(src_id, k).is_one());
      CHECK(H.pi_r().col(k).size() == 1);
    }
  }
}

TEST_CASE("disjoint union of two Z2 groups") {
  WeakHopfQuasigroup H = from_groupoid(corpus::two_z2_disjoint(), Q);
  CHECK(H.dim() == 4);
  Report r = check_axioms(H);
  CHECK(r.all_pass());
  CHECK(r.flags->weak_hopf_algebra);
  CHECK(rank(H.pi_l()) == 2);
  CHECK(rank(H.pi_r()) == 2);
}

TEST_CASE("quotient of a groupoid presentation reproduces the groupoid algebra") {
  for (const GroupoidPresentation& G : {corpus::pair_groupoid(), corpus::two_z2_disjoint()}) {
    QuotientResult qr = from_bigroupoid(as_bigroupoid(G), Q);
    CHECK(qr.ideal_dim == 0);
    CHECK(qr.whq == from_groupoid(G, Q));
    for (const auto& [cell, k] : qr.class_of) CHECK(k >= 0);
  }
}

TEST_CASE("quotient of a one-object presentation reproduces the loop algebra") {
  for (const LoopTable& L : {corpus::cyclic_group(2), corpus::cyclic_group(3),
                             corpus::smallest_nonassoc_ip_loop()}) {
    QuotientResult qr = from_bigroupoid(as_bigroupoid(L), Q);
    CHECK(qr.ideal_dim == 0);
    CHECK(qr.whq == from_loop(L, Q));
  }
}

TEST_CASE("parallel cells sharing an inverse collapse in the quotient") {
  QuotientResult qr = from_bigroupoid(corpus::merged_parallel_cells(), Q);
  CHECK(qr.ideal_dim == 1);
  CHECK(qr.whq.dim() == 4);
  CHECK(qr.class_of.at("f") == qr.class_of.at("f2"));
  // The class map respects the partition: sizes sum to the cell count.
  CHECK(qr.class_of.size() == 5);

  // The quotient is a perfectly good structure: every axiom holds.
  Report r = check_axioms(qr.whq);
  CHECK(r.all_pass());
  CHECK(check_derived(qr.whq).all_pass());
  CHECK(r.flags->weak_hopf_algebra);

  // It is the pair groupoid algebra in disguise.
  WeakHopfQuasigroup pg = from_groupoid(corpus::pair_groupoid(), Q);
  CHECK(qr.whq.dim() == pg.dim());
  CHECK(rank(qr.whq.pi_l()) == 2);
}

TEST_CASE("quotient products agree with the class map cell by cell") {
  const BigroupoidPresentation B = corpus::merged_parallel_cells();
  QuotientResult qr = from_bigroupoid(B, Q);
  const int dim = qr.whq.dim();
  std::map<std::string, std::pair<std::string, std::string>> endpoints;
  for (const auto& cell : B.one_cells) endpoints[cell.name] = {cell.src, cell.tgt};
  for (const auto& a : B.one_cells)
    for (const auto& b : B.one_cells) {
      const int col = qr.class_of.at(a.name) * dim + qr.class_of.at(b.name);
      auto it = B.composition.find({a.name, b.name});
      if (it == B.composition.end()) {
        // Non-composable pairs multiply to zero.
        CHECK(qr.whq.mul().col(col).empty());
      } else {
        CHECK(qr.whq.mul().entry(qr.class_of.at(it->second), col).is_one());
        CHECK(qr.whq.mul().col(col).size() == 1);
      }
    }
}

TEST_CASE("validate_bigroupoid accepts the fixtures and rejects gaps") {
  validate_bigroupoid(corpus::merged_parallel_cells());
  validate_bigroupoid(corpus::ip7_plus_point());
  BigroupoidPresentation B = corpus::merged_parallel_cells();
  B.composition.erase({"g", "f"});
  CHECK_THROWS_AS(validate_bigroupoid(B), InvalidPresentation);
  BigroupoidPresentation C = corpus::merged_parallel_cells();
  C.inverses.erase("f2");
  CHECK_THROWS_AS(validate_bigroupoid(C), InvalidPresentation);
}

TEST_CASE("the base subalgebra of a cell quotient is associative") {
  // Identity classes multiply like the object set, so the induced
  // product on the image of piL is a genuine monoid product.
  for (const BigroupoidPresentation& B :
       {as_bigroupoid(corpus::pair_groupoid()), corpus::merged_parallel_cells(),
        corpus::ip7_plus_point()}) {
    QuotientResult qr = from_bigroupoid(B, Q);
    SubobjectData L = subobject_l(qr.whq);
    LinMap id_l = LinMap::identity(Q, L.dim);
    CHECK(compose(L.mul, tensor(L.mul, id_l)) == compose(L.mul, tensor(id_l, L.mul)));
  }
}

TEST_CASE("a loop beside an extra object gives a strict weak Hopf quasigroup") {
  QuotientResult qr = from_bigroupoid(corpus::ip7_plus_point(), Q);
  CHECK(qr.ideal_dim == 0);
  CHECK(qr.whq.dim() == 8);
  Report r = check_axioms(qr.whq);
  CHECK(r.all_pass());
  CHECK(r.flags->weak_hopf_quasigroup);
  // Strictness: nonassociative, so not a weak Hopf algebra, and with two
  // objects the counit is not multiplicative, so not a Hopf quasigroup.
  CHECK_FALSE(r.flags->weak_hopf_algebra);
  CHECK_FALSE(r.flags->hopf_quasigroup);
  CHECK(rank(qr.whq.pi_l()) == 2);
}

TEST_CASE("improper ideals are detected") {
  // Point the composite g∘f at the identity of the wrong object. The
  // relation id1 - g∘f then pairs cells with different endpoints, and
  // multiplying it by f leaves the bare one-cell f in the ideal.
  BigroupoidPresentation B = as_bigroupoid(corpus::pair_groupoid());
  B.composition[{"g", "f"}] = "id2";
  CHECK_THROWS_AS(from_bigroupoid(B, Q), ImproperIdeal);
}

TEST_CASE("inverse endpoint violations are rejected") {
  BigroupoidPresentation B = as_bigroupoid(corpus::pair_groupoid());
  B.inverses["f"] = {"id1"};
  CHECK_THROWS_AS(from_bigroupoid(B, Q), InconsistentPresentation);
}

TEST_CASE("loop labels are zero-padded and sorted like indices") {
  auto labels = loop_labels(16);
  CHECK(labels[0] == "g00");
  CHECK(labels[15] == "g15");
  CHECK(std::is_sorted(labels.begin(), labels.end()));
}
