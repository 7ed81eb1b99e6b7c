#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "g2/gammagrp.hpp"

using namespace g2;

TEST_CASE("construction guards") {
  CHECK_THROWS(Gamma(4));
  CHECK_THROWS(Gamma(1));
  CHECK(Gamma(7).order() == 28);
  CHECK(Gamma(5).order() == 20);
}

TEST_CASE("dihedral relations at q = 7") {
  Gamma g(7);
  GammaElem r = Gamma::r(), s = Gamma::s(), z = Gamma::z(), e = Gamma::one();
  // r^7 = s^2 = z^2 = 1
  GammaElem p = e;
  for (int i = 0; i < 7; ++i) p = g.mul(p, r);
  CHECK(p == e);
  CHECK(g.mul(s, s) == e);
  CHECK(g.mul(z, z) == e);
  // s r = r^{q-1} s
  CHECK(g.mul(s, r) == GammaElem{6, 1, 0});
  // s r s^{-1} = r^{-1}
  CHECK(g.mul(g.mul(s, r), g.inv(s)) == g.inv(r));
  // z is central
  for (GammaElem x : g.elements()) CHECK(g.mul(z, x) == g.mul(x, z));
}

TEST_CASE("group axioms exhaustively at q = 5") {
  Gamma g(5);
  auto els = g.elements();
  CHECK(els.size() == 20);
  for (GammaElem x : els) {
    CHECK(g.mul(x, g.inv(x)) == Gamma::one());
    CHECK(g.mul(g.inv(x), x) == Gamma::one());
    for (GammaElem y : els)
      for (GammaElem w : els)
        CHECK(g.mul(g.mul(x, y), w) == g.mul(x, g.mul(y, w)));
  }
}

TEST_CASE("rotation powers add") {
  Gamma g(7);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      CHECK(g.mul({a, 0, 0}, {b, 0, 0}) == GammaElem{(a + b) % 7, 0, 0});
}

TEST_CASE("element indexing is the enumeration order") {
  Gamma g(7);
  auto els = g.elements();
  std::set<GammaElem> distinct(els.begin(), els.end());
  CHECK(distinct.size() == 28);
  for (std::size_t i = 0; i < els.size(); ++i) CHECK(g.index_of(els[i]) == (int)i);
}

TEST_CASE("sylow 2-subgroup") {
  Gamma g(7);
  auto syl = Gamma::sylow2();
  CHECK(syl.size() == 4);
  CHECK(std::find(syl.begin(), syl.end(), Gamma::s()) != syl.end());
  CHECK(std::find(syl.begin(), syl.end(), Gamma::z()) != syl.end());
  for (GammaElem x : syl) {
    CHECK(g.mul(x, x) == Gamma::one());  // C2 x C2
    for (GammaElem y : syl) {
      GammaElem p = g.mul(x, y);
      CHECK(std::find(syl.begin(), syl.end(), p) != syl.end());
    }
  }
}
