// Gamma = D_{2q} x C_2 with normal form r^i s^j z^k.
#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

namespace g2 {

struct GammaElem {
  int i;  // exponent of r, mod q
  int j;  // exponent of s
  int k;  // exponent of z
  friend auto operator<=>(const GammaElem&, const GammaElem&) = default;
};

class Gamma {
 public:
  explicit Gamma(int q) : q_(q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("q must be odd and >= 3");
  }

  int q() const { return q_; }
  int order() const { return 4 * q_; }

  static GammaElem one() { return {0, 0, 0}; }
  static GammaElem r() { return {1, 0, 0}; }
  static GammaElem s() { return {0, 1, 0}; }
  static GammaElem z() { return {0, 0, 1}; }

  GammaElem mul(GammaElem x, GammaElem y) const {
    // s r^i = r^{-i} s; z is central
    int i = x.j ? (x.i - y.i) : (x.i + y.i);
    return {((i % q_) + q_) % q_, x.j ^ y.j, x.k ^ y.k};
  }

  GammaElem inv(GammaElem x) const {
    if (x.j) return x;  // reflections are involutions (z^k squares away too)
    return {(q_ - x.i) % q_, x.j, x.k};
  }

  // All 4q elements in lexicographic (i, j, k) order.
  std::vector<GammaElem> elements() const {
    std::vector<GammaElem> v;
    v.reserve(order());
    for (int i = 0; i < q_; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) v.push_back({i, j, k});
    return v;
  }

  int index_of(GammaElem x) const { return x.i * 4 + x.j * 2 + x.k; }

  // The fixed Sylow 2-subgroup <s, z> = {1, z, s, sz}.
  static std::vector<GammaElem> sylow2() {
    return {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}};
  }

 private:
  int q_;
};

}  // namespace g2
