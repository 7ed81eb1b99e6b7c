#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2/gf2m.hpp"

using namespace g2;

TEST_CASE("canonical moduli") {
  CHECK(Field(1).modulus() == 0b10u);  // x itself: any degree-1 modulus gives GF(2)
  CHECK(Field(2).modulus() == 0b111u);
  CHECK(Field(3).modulus() == 0b1011u);   // x^3 + x + 1
  CHECK(Field(4).modulus() == 0b10011u);  // x^4 + x + 1
  CHECK_THROWS(Field(0));
  CHECK_THROWS(Field(17));
}

TEST_CASE("field axioms exhaustively in GF(8)") {
  Field F(3);
  for (felem a = 0; a < 8; ++a)
    for (felem b = 0; b < 8; ++b) {
      CHECK(F.mul(a, b) == F.mul(b, a));
      for (felem c = 0; c < 8; ++c) {
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        CHECK(F.mul(a, Field::add(b, c)) == Field::add(F.mul(a, b), F.mul(a, c)));
      }
    }
  for (felem a = 1; a < 8; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK_THROWS(F.inv(0));
}

TEST_CASE("table arithmetic matches shift-and-reduce in GF(16)") {
  Field F(4);
  auto slow = [&](felem a, felem b) {
    felem r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & 16u) a ^= F.modulus();
    }
    return r;
  };
  for (felem a = 0; a < 16; ++a)
    for (felem b = 0; b < 16; ++b) CHECK(F.mul(a, b) == slow(a, b));
}

TEST_CASE("square roots") {
  Field F(3);
  CHECK(F.sqrt(0) == 0);
  CHECK(F.sqrt(1) == 1);
  for (felem a = 0; a < 8; ++a) {
    felem r = F.sqrt(a);
    CHECK(F.mul(r, r) == a);
  }
  Field F4(4);
  for (felem a = 0; a < 16; ++a) CHECK(F4.mul(F4.sqrt(a), F4.sqrt(a)) == a);
}

TEST_CASE("element orders") {
  Field F(3);
  CHECK(F.element_order(1) == 1);
  CHECK(F.element_order(F.generator()) == 7);
  int n7 = 0;
  for (felem a = 1; a < 8; ++a)
    if (F.element_order(a) == 7) ++n7;
  CHECK(n7 == 6);  // phi(7) primitive elements
  Field F4(4);
  bool has5 = false;
  for (felem a = 1; a < 16; ++a) has5 = has5 || F4.element_order(a) == 5;
  CHECK(has5);
}

TEST_CASE("least element of a given order") {
  Field F(3);
  CHECK(F.element_of_order(1) == 1);
  felem z = F.element_of_order(7);
  CHECK(F.element_order(z) == 7);
  for (felem a = 1; a < z; ++a) CHECK(F.element_order(a) != 7);
  CHECK_THROWS(F.element_of_order(5));  // 5 does not divide 7
  Field F4(4);
  CHECK(F4.element_order(F4.element_of_order(5)) == 5);
  CHECK(F4.element_order(F4.element_of_order(3)) == 3);
}

TEST_CASE("pow and pow_int") {
  Field F(4);
  for (felem a = 1; a < 16; ++a) {
    CHECK(F.pow(a, 0) == 1);
    CHECK(F.pow(a, 15) == 1);
    CHECK(F.pow_int(a, -1) == F.inv(a));
    felem p = 1;
    for (int e = 1; e <= 6; ++e) {
      p = F.mul(p, a);
      CHECK(F.pow(a, (std::uint64_t)e) == p);
      CHECK(F.pow_int(a, -e) == F.inv(p));
    }
  }
  CHECK(F.pow(0, 0) == 1);
  CHECK(F.pow(0, 3) == 0);
}

TEST_CASE("hex round-trips, least-significant nibble first") {
  Field F(3);
  CHECK(F.to_hex(5) == "5");
  for (felem a = 0; a < 8; ++a) CHECK(F.from_hex(F.to_hex(a)) == a);
  Field F8(8);
  CHECK(F8.to_hex(0x2b) == "b2");
  for (felem a = 0; a < 256; ++a) CHECK(F8.from_hex(F8.to_hex(a)) == a);
  CHECK_THROWS(F.from_hex("x"));
  CHECK_THROWS(F.from_hex("ff"));  // out of range for GF(8)
}

TEST_CASE("irreducibility oracle") {
  CHECK(Field::is_irreducible(0b1011, 3));
  CHECK(Field::is_irreducible(0b1101, 3));
  CHECK_FALSE(Field::is_irreducible(0b1001, 3));  // x^3+1 = (x+1)(x^2+x+1)
  CHECK_FALSE(Field::is_irreducible(0b1111, 3));  // divisible by x+1
}
