// Exact arithmetic in GF(2^m), polynomial basis over a fixed irreducible
// modulus.  Elements are bitmasks: bit i is the coefficient of x^i.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2 {

using felem = std::uint32_t;

class Field {
 public:
  explicit Field(int m) : m_(m) {
    if (m < 1 || m > 16)
      throw std::invalid_argument("extension degree must be in [1,16]");
    mod_ = least_irreducible(m);
    build_tables();
  }

  int degree() const { return m_; }
  std::uint32_t size() const { return 1u << m_; }
  std::uint32_t group_order() const { return size() - 1; }
  std::uint32_t modulus() const { return mod_; }
  felem generator() const { return gen_; }

  static felem add(felem a, felem b) { return a ^ b; }

  felem mul(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  felem inv(felem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : group_order() - l];
  }

  felem pow(felem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    std::uint64_t l = (std::uint64_t)log_[a] * (e % group_order()) % group_order();
    return exp_[l];
  }

  // Integer exponent, possibly negative (a != 0 in that case).
  felem pow_int(felem a, long long e) const {
    if (e >= 0) return pow(a, (std::uint64_t)e);
    return pow(inv(a), (std::uint64_t)(-e));
  }

  // Unique square root: squaring is a bijection in characteristic 2.
  felem sqrt(felem a) const {
    felem r = a;
    for (int i = 0; i + 1 < m_; ++i) r = mul(r, r);
    return r;
  }

  std::uint32_t element_order(felem a) const {
    if (a == 0) throw std::domain_error("order of zero");
    std::uint32_t n = group_order();
    return n / std::gcd(n, log_[a]);
  }

  // Least element (in numeric order) of the given multiplicative order.
  felem element_of_order(std::uint32_t n) const {
    if (n == 0 || group_order() % n != 0)
      throw std::domain_error("requested order does not divide 2^m - 1");
    for (felem a = 1; a < size(); ++a)
      if (element_order(a) == n) return a;
    throw std::logic_error("cyclic group is missing a divisor order");
  }

  // Hex serialization, least-significant coefficient nibble first.
  std::string to_hex(felem a) const {
    static const char* digits = "0123456789abcdef";
    int n = (m_ + 3) / 4;
    std::string s(n, '0');
    for (int k = 0; k < n; ++k) s[k] = digits[(a >> (4 * k)) & 0xf];
    return s;
  }

  felem from_hex(const std::string& s) const {
    felem a = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      char c = s[k];
      felem d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
      else throw std::invalid_argument("bad hex digit");
      a |= d << (4 * k);
    }
    if (a >= size()) throw std::invalid_argument("element out of range");
    return a;
  }

  // Trial division by every polynomial of degree 1..deg/2.
  static bool is_irreducible(std::uint32_t poly, int deg) {
    for (std::uint32_t d = 2; d < (1u << (deg / 2 + 1)); ++d) {
      if (poly_deg(d) < 1) continue;
      if (poly_mod(poly, d) == 0) return false;
    }
    return true;
  }

  static std::uint32_t least_irreducible(int m) {
    for (std::uint32_t p = 1u << m; p < (2u << m); ++p)
      if (is_irreducible(p, m)) return p;
    throw std::logic_error("no irreducible polynomial found");
  }

 private:
  static int poly_deg(std::uint32_t p) {
    int d = -1;
    while (p) { ++d; p >>= 1; }
    return d;
  }

  static std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    int db = poly_deg(b);
    while (poly_deg(a) >= db) a ^= b << (poly_deg(a) - db);
    return a;
  }

  felem mul_slow(felem a, felem b) const {
    felem r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & (1u << m_)) a ^= mod_;
    }
    return r;
  }

  felem pow_slow(felem a, std::uint32_t e) const {
    felem r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  }

  void build_tables() {
    std::uint32_t n = group_order();
    // Primitive element: x need not be primitive for every modulus.
    gen_ = 1;
    if (n > 1) {
      std::vector<std::uint32_t> primes;
      std::uint32_t t = n;
      for (std::uint32_t p = 2; p * p <= t; ++p)
        if (t % p == 0) { primes.push_back(p); while (t % p == 0) t /= p; }
      if (t > 1) primes.push_back(t);
      for (felem g = 2; g < size(); ++g) {
        bool ok = true;
        for (std::uint32_t p : primes)
          if (pow_slow(g, n / p) == 1) { ok = false; break; }
        if (ok) { gen_ = g; break; }
      }
    }
    log_.assign(size(), 0);
    exp_.assign(2 * n + 1, 1);
    felem v = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = v;
      exp_[i + n] = v;
      log_[v] = i;
      v = mul_slow(v, gen_);
    }
  }

  int m_;
  std::uint32_t mod_;
  felem gen_ = 1;
  std::vector<std::uint32_t> log_;
  std::vector<felem> exp_;
};

}  // namespace g2
