#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "g2/rootsys.hpp"

using namespace g2;

TEST_CASE("twelve distinct roots, six short and six long") {
  const auto& rs = all_roots();
  std::set<Root> seen(rs.begin(), rs.end());
  CHECK(seen.size() == 12);
  int nshort = 0, nlong = 0;
  for (Root r : rs) {
    if (half_norm(r) == 1) ++nshort;
    if (half_norm(r) == 3) ++nlong;
    CHECK(is_root(-r));
    CHECK(root_index(-r) == negate_index(root_index(r)));
  }
  CHECK(nshort == 6);
  CHECK(nlong == 6);
  CHECK(half_norm(kAlpha) == 1);
  CHECK(half_norm(kBeta) == 3);
  CHECK(half_norm(kOmega) == 3);
}

TEST_CASE("canonical order: positives by height, negatives mirrored") {
  const auto& rs = all_roots();
  std::multiset<int> h;
  for (int i = 0; i < 6; ++i) h.insert(height(rs[i]));
  CHECK(h == std::multiset<int>{1, 1, 2, 3, 4, 5});
  CHECK(rs[5] == kOmega);  // the highest root
  CHECK(root_index(kAlpha) == 1);
  CHECK(root_index(kBeta) == 0);
}

TEST_CASE("pairings") {
  CHECK(pairing(kAlpha, kAlpha) == 2);
  CHECK(pairing(kBeta, kBeta) == 2);
  CHECK(pairing(kBeta, kAlpha) == -3);
  CHECK(pairing(kAlpha, kBeta) == -1);
  CHECK(pairing(kOmega, kAlpha) == 0);
  for (Root d : all_roots()) CHECK(pairing(d, d) == 2);
}

TEST_CASE("pairing matches the root-string formula") {
  for (Root d : all_roots())
    for (Root e : all_roots()) {
      if (d == e || d == -e) continue;
      auto [p, q] = root_string(d, e);
      CHECK(p - q == pairing(e, d));
    }
}

TEST_CASE("reflections") {
  CHECK(reflect(kAlpha, kAlpha) == -kAlpha);
  CHECK(reflect(kAlpha, kOmega) == kOmega);
  CHECK(reflect(kAlpha, kBeta) == Root{3, 1});
  for (Root e : all_roots())
    for (Root d : all_roots()) {
      Root r = reflect(e, d);
      CHECK(is_root(r));
      CHECK(reflect(e, r) == d);       // involution
      CHECK(half_norm(r) == half_norm(d));
    }
}

TEST_CASE("root strings") {
  CHECK(root_string(kAlpha, kBeta) == std::pair(0, 3));
  CHECK(root_string(kBeta, kAlpha) == std::pair(0, 1));
  CHECK(root_string(kAlpha, kOmega) == std::pair(0, 0));
  CHECK_THROWS(root_string(kAlpha, kAlpha));
  CHECK_THROWS(root_string(kAlpha, -kAlpha));
}

TEST_CASE("coroot coefficients") {
  CHECK(coroot_coeffs(kAlpha) == std::pair(1, 0));
  CHECK(coroot_coeffs(kBeta) == std::pair(0, 1));
  CHECK(coroot_coeffs(Root{1, 1}) == std::pair(1, 3));
  CHECK(coroot_coeffs(Root{2, 1}) == std::pair(2, 3));
  CHECK(coroot_coeffs(Root{3, 1}) == std::pair(1, 1));
  CHECK(coroot_coeffs(kOmega) == std::pair(1, 2));
  // pairing through the coroot decomposition agrees with the direct form
  for (Root d : all_roots())
    for (Root e : all_roots()) {
      auto [ca, cb] = coroot_coeffs(e);
      CHECK(pairing(d, e) == ca * pairing(d, kAlpha) + cb * pairing(d, kBeta));
    }
}
