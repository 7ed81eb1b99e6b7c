#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "g2/g2group.hpp"

using namespace g2;

namespace {
const Field& F8() {
  static Field F(3);
  return F;
}
const Group& G8() {
  static Group G(F8());
  return G;
}
}  // namespace

TEST_CASE("root elements: identity, additivity, self-inverse") {
  const Field& F = F8();
  const Group& G = G8();
  Mat id = identity_mat();
  for (int r = 0; r < 12; ++r) {
    CHECK(G.kappa(r, 0) == id);
    for (felem a = 0; a < 8; ++a) {
      CHECK(mul(F, G.kappa(r, a), G.kappa(r, a)) == id);
      for (felem b = 0; b < 8; ++b)
        CHECK(mul(F, G.kappa(r, a), G.kappa(r, b)) == G.kappa(r, (felem)(a ^ b)));
    }
  }
}

TEST_CASE("weyl representatives square to the identity") {
  const Field& F = F8();
  const Group& G = G8();
  for (int r = 0; r < 12; ++r) {
    Mat s = G.s_delta(r);
    CHECK_FALSE(s == identity_mat());
    CHECK(mul(F, s, s) == identity_mat());
  }
}

TEST_CASE("weyl conjugation permutes root subgroups") {
  const Field& F = F8();
  const Group& G = G8();
  Mat sa = G.s_delta(kAlpha);
  // alpha fixes omega, so conjugation fixes each kappa_omega(a)
  for (felem a = 0; a < 8; ++a)
    CHECK(mul(F, mul(F, sa, G.kappa(kOmega, a)), sa) == G.kappa(kOmega, a));
  // beta reflects to 3*alpha + beta
  std::unordered_set<Mat, MatHash> u3ab;
  for (felem a = 0; a < 8; ++a) u3ab.insert(G.kappa(Root{3, 1}, a));
  for (felem a = 0; a < 8; ++a) {
    Mat c = mul(F, mul(F, sa, G.kappa(kBeta, a)), sa);
    CHECK(u3ab.count(c) == 1);
  }
}

TEST_CASE("coroot elements: identity, diagonality, order") {
  const Field& F = F8();
  const Group& G = G8();
  for (int r = 0; r < 12; ++r) CHECK(G.coroot_elt(r, 1) == identity_mat());
  CHECK_THROWS(G.coroot_elt(root_index(kAlpha), 0));
  felem mu = F.element_of_order(7);
  Mat h = G.coroot_elt(kAlpha, mu);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (i != j) CHECK(h.at(i, j) == 0);
  CHECK(h.at(root_index(kOmega), root_index(kOmega)) == 1);  // pairing(omega, alpha) = 0
  CHECK(mat_order(F, h) == 7);
  for (int j = 0; j < 12; ++j)
    CHECK(h.at(j, j) == F.pow_int(mu, pairing(all_roots()[j], kAlpha)));
}

TEST_CASE("torus conjugation scales root parameters") {
  const Field& F = F8();
  const Group& G = G8();
  for (felem lam = 1; lam < 8; ++lam) {
    Mat h = G.coroot_elt(kBeta, lam);
    Mat hinv = inverse(F, h);
    for (int e = 0; e < 12; ++e) {
      int pw = pairing(all_roots()[e], kBeta);
      for (felem a = 0; a < 8; ++a)
        CHECK(mul(F, mul(F, h, G.kappa(e, a)), hinv) ==
              G.kappa(e, F.mul(F.pow_int(lam, pw), a)));
    }
  }
}

TEST_CASE("commutator formula: specific pairs") {
  const Group& G = G8();
  // [G_alpha, G_omega] = 1: no interior roots at all
  auto c = G.commutator_check(root_index(kAlpha), root_index(kOmega));
  CHECK(c.ok);
  CHECK(c.terms.empty());
  // beta + (3a+b) = omega is the only combination
  c = G.commutator_check(root_index(kBeta), root_index(Root{3, 1}));
  CHECK(c.ok);
  REQUIRE(c.terms.size() == 1);
  CHECK(c.terms[0].root_idx == root_index(kOmega));
  CHECK(c.terms[0].constant == 1);
  // (alpha, beta) spans the four interior roots
  c = G.commutator_check(root_index(kAlpha), root_index(kBeta));
  CHECK(c.ok);
  REQUIRE(c.terms.size() == 4);
  std::unordered_set<int> idx;
  for (auto& t : c.terms) idx.insert(t.root_idx);
  CHECK(idx == std::unordered_set<int>{root_index(Root{1, 1}), root_index(Root{2, 1}),
                                       root_index(Root{3, 1}), root_index(kOmega)});
}

TEST_CASE("commutator formula: all ordered pairs") {
  const Group& G = G8();
  int pairs = 0;
  for (int d = 0; d < 12; ++d)
    for (int e = 0; e < 12; ++e) {
      if (e == negate_index(d)) continue;
      ++pairs;
      auto c = G.commutator_check(d, e);
      CHECK(c.ok);
      CHECK(c.cases == 64);
      if (d == e) CHECK(c.terms.empty());
    }
  CHECK(pairs == 132);
}

TEST_CASE("generators preserve the mod-2 bracket") {
  const Group& G = G8();
  for (int r = 0; r < 12; ++r) {
    CHECK(G.is_lie_automorphism(G.kappa(r, 5)));
    CHECK(G.is_lie_automorphism(G.s_delta(r)));
  }
  for (felem lam = 2; lam < 8; ++lam) {
    CHECK(G.is_lie_automorphism(G.coroot_elt(kAlpha, lam)));
    CHECK(G.is_lie_automorphism(G.coroot_elt(kBeta, lam)));
  }
}

TEST_CASE("subgroup closure sizes over GF(8)") {
  const Group& G = G8();
  std::vector<Mat> gens;
  for (felem a = 1; a < 8; ++a) {
    gens.push_back(G.kappa(kOmega, a));
    gens.push_back(G.kappa(negate_index(root_index(kOmega)), a));
  }
  CHECK(G.enumerate_subgroup(gens, 1000).size() == 504);  // |SL_2(8)|

  gens.clear();
  for (felem a = 2; a < 8; ++a) {
    gens.push_back(G.coroot_elt(kAlpha, a));
    gens.push_back(G.coroot_elt(kBeta, a));
  }
  CHECK(G.enumerate_subgroup(gens, 100).size() == 49);

  gens.clear();
  for (int k : kVRootIdx)
    for (felem a = 1; a < 8; ++a) gens.push_back(G.kappa(k, a));
  CHECK(G.enumerate_subgroup(gens, 1u << 15).size() == 32768);

  // same SL_2(8) generators, but with a bound the closure must overrun
  std::vector<Mat> sl2;
  for (felem a = 1; a < 8; ++a) {
    sl2.push_back(G.kappa(kOmega, a));
    sl2.push_back(G.kappa(negate_index(root_index(kOmega)), a));
  }
  CHECK_THROWS(G.enumerate_subgroup(sl2, 100));
}

TEST_CASE("coordinates on the unipotent radical") {
  const Field& F = F8();
  const Group& G = G8();
  auto zero = G.v_coords(identity_mat());
  REQUIRE(zero.has_value());
  CHECK(*zero == std::array<felem, 5>{0, 0, 0, 0, 0});
  for (felem a = 0; a < 8; ++a) {
    auto c = G.v_coords(G.kappa(kOmega, a));
    REQUIRE(c.has_value());
    CHECK(*c == std::array<felem, 5>{0, 0, 0, 0, a});
  }
  CHECK_FALSE(G.v_coords(G.s_delta(kAlpha)).has_value());
  CHECK_FALSE(G.v_coords(G.kappa(negate_index(root_index(kOmega)), 3)).has_value());

  // exhaustive normal form: injective on all 8^5 coordinate tuples
  std::unordered_set<Mat, MatHash> seen;
  std::array<felem, 5> x;
  for (x[0] = 0; x[0] < 8; ++x[0])
    for (x[1] = 0; x[1] < 8; ++x[1])
      for (x[2] = 0; x[2] < 8; ++x[2])
        for (x[3] = 0; x[3] < 8; ++x[3])
          for (x[4] = 0; x[4] < 8; ++x[4]) {
            Mat v = G.v_elem(x);
            auto back = G.v_coords(v);
            REQUIRE(back.has_value());
            CHECK(*back == x);
            CHECK(seen.insert(v).second);
          }
  CHECK(seen.size() == 32768);
  (void)F;
}

TEST_CASE("peel recovers unipotent factorizations") {
  const Field& F = F8();
  const Group& G = G8();
  std::vector<int> roots = {root_index(Root{1, 1}), root_index(Root{2, 1}),
                            root_index(kOmega)};
  Mat w = mul(F, mul(F, G.kappa(roots[0], 3), G.kappa(roots[1], 6)), G.kappa(roots[2], 7));
  auto c = G.peel(w, roots);
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<felem>{3, 6, 7});
  CHECK_FALSE(G.peel(G.s_delta(kAlpha), roots).has_value());
}
