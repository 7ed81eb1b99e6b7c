// The G2 root system in simple-root coordinates: alpha short, beta long.
// All pairings go through the integer Cartan data; no floating point.
#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <utility>

namespace g2 {

struct Root {
  int a;  // coefficient of alpha
  int b;  // coefficient of beta
  friend auto operator<=>(const Root&, const Root&) = default;
  Root operator-() const { return {-a, -b}; }
  Root operator+(Root o) const { return {a + o.a, b + o.b}; }
  Root operator-(Root o) const { return {a - o.a, b - o.b}; }
};

inline constexpr Root kAlpha{1, 0};
inline constexpr Root kBeta{0, 1};
inline constexpr Root kOmega{3, 2};

// Canonical order: positive roots by height then lexicographic, then the
// negatives in the same order.
inline const std::array<Root, 12>& all_roots() {
  static const std::array<Root, 12> r = {{{0, 1},
                                          {1, 0},
                                          {1, 1},
                                          {2, 1},
                                          {3, 1},
                                          {3, 2},
                                          {0, -1},
                                          {-1, 0},
                                          {-1, -1},
                                          {-2, -1},
                                          {-3, -1},
                                          {-3, -2}}};
  return r;
}

inline int root_index(Root d) {
  const auto& rs = all_roots();
  for (int i = 0; i < 12; ++i)
    if (rs[i] == d) return i;
  return -1;
}

inline bool is_root(Root d) { return root_index(d) >= 0; }

inline int negate_index(int i) { return i < 6 ? i + 6 : i - 6; }

inline int height(Root d) { return d.a + d.b; }

// Half squared length: 1 for short roots, 3 for long ones.
inline int half_norm(Root d) { return d.a * d.a + 3 * d.b * d.b - 3 * d.a * d.b; }

// <delta, eps^vee>, bilinear in delta.
inline int pairing(Root delta, Root eps) {
  int pa = 2 * delta.a - 3 * delta.b;  // <delta, alpha^vee>
  int pb = -delta.a + 2 * delta.b;     // <delta, beta^vee>
  int de = half_norm(eps);
  // eps^vee = (eps.a * 1 / de) alpha^vee + (eps.b * 3 / de) beta^vee
  return (eps.a * pa + eps.b * 3 * pb) / de;
}

// eps^vee as an integer combination of alpha^vee and beta^vee.
inline std::pair<int, int> coroot_coeffs(Root eps) {
  int de = half_norm(eps);
  if ((eps.a * 1) % de != 0 || (eps.b * 3) % de != 0)
    throw std::logic_error("coroot is not integral");
  return {eps.a / de, eps.b * 3 / de};
}

// Reflection through eps applied to delta.
inline Root reflect(Root eps, Root delta) {
  int p = pairing(delta, eps);
  return {delta.a - p * eps.a, delta.b - p * eps.b};
}

// The delta-string through eps: largest p, q >= 0 with eps - p*delta and
// eps + q*delta roots.
inline std::pair<int, int> root_string(Root delta, Root eps) {
  if (delta == eps || delta == -eps)
    throw std::invalid_argument("root string undefined for delta = +-eps");
  int p = 0, q = 0;
  while (is_root(eps - Root{(p + 1) * delta.a, (p + 1) * delta.b})) ++p;
  while (is_root(eps + Root{(q + 1) * delta.a, (q + 1) * delta.b})) ++q;
  return {p, q};
}

}  // namespace g2
