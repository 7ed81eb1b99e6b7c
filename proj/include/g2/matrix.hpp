// Dense 14x14 matrices over GF(2^m): the ambient space for the adjoint
// representation and everything built on it.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "g2/gf2m.hpp"

namespace g2 {

inline constexpr int kDim = 14;

struct Mat {
  std::array<felem, kDim * kDim> e{};

  felem& at(int r, int c) { return e[r * kDim + c]; }
  felem at(int r, int c) const { return e[r * kDim + c]; }

  friend bool operator==(const Mat&, const Mat&) = default;
};

inline Mat identity_mat() {
  Mat m;
  for (int i = 0; i < kDim; ++i) m.at(i, i) = 1;
  return m;
}

inline Mat mul(const Field& F, const Mat& A, const Mat& B) {
  Mat C;
  for (int i = 0; i < kDim; ++i) {
    for (int k = 0; k < kDim; ++k) {
      felem a = A.at(i, k);
      if (!a) continue;
      const felem* brow = &B.e[k * kDim];
      felem* crow = &C.e[i * kDim];
      for (int j = 0; j < kDim; ++j)
        if (brow[j]) crow[j] ^= F.mul(a, brow[j]);
    }
  }
  return C;
}

// A*V == V*B, computed row by row with early exit.
inline bool products_equal(const Field& F, const Mat& A, const Mat& V, const Mat& B) {
  for (int i = 0; i < kDim; ++i) {
    std::array<felem, kDim> left{}, right{};
    for (int k = 0; k < kDim; ++k) {
      felem a = A.at(i, k);
      if (a) {
        const felem* vrow = &V.e[k * kDim];
        for (int j = 0; j < kDim; ++j)
          if (vrow[j]) left[j] ^= F.mul(a, vrow[j]);
      }
      felem v = V.at(i, k);
      if (v) {
        const felem* brow = &B.e[k * kDim];
        for (int j = 0; j < kDim; ++j)
          if (brow[j]) right[j] ^= F.mul(v, brow[j]);
      }
    }
    if (left != right) return false;
  }
  return true;
}

inline bool commute(const Field& F, const Mat& A, const Mat& B) {
  return products_equal(F, A, B, A);
}

inline Mat inverse(const Field& F, Mat A) {
  Mat R = identity_mat();
  for (int c = 0; c < kDim; ++c) {
    int piv = -1;
    for (int r = c; r < kDim; ++r)
      if (A.at(r, c)) { piv = r; break; }
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != c)
      for (int j = 0; j < kDim; ++j) {
        std::swap(A.e[piv * kDim + j], A.e[c * kDim + j]);
        std::swap(R.e[piv * kDim + j], R.e[c * kDim + j]);
      }
    felem s = F.inv(A.at(c, c));
    for (int j = 0; j < kDim; ++j) {
      A.e[c * kDim + j] = F.mul(s, A.e[c * kDim + j]);
      R.e[c * kDim + j] = F.mul(s, R.e[c * kDim + j]);
    }
    for (int r = 0; r < kDim; ++r) {
      if (r == c) continue;
      felem f = A.at(r, c);
      if (!f) continue;
      for (int j = 0; j < kDim; ++j) {
        A.e[r * kDim + j] ^= F.mul(f, A.e[c * kDim + j]);
        R.e[r * kDim + j] ^= F.mul(f, R.e[c * kDim + j]);
      }
    }
  }
  return R;
}

inline bool lex_less(const Mat& a, const Mat& b) { return a.e < b.e; }

struct MatHash {
  std::size_t operator()(const Mat& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (felem v : m.e) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return (std::size_t)h;
  }
};

inline Mat mat_pow(const Field& F, Mat a, std::uint64_t e) {
  Mat r = identity_mat();
  while (e) {
    if (e & 1) r = mul(F, r, a);
    a = mul(F, a, a);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t mat_order(const Field& F, const Mat& a, std::uint64_t bound = 1 << 20) {
  Mat p = a;
  Mat id = identity_mat();
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (p == id) return n;
    p = mul(F, p, a);
  }
  throw std::runtime_error("element order exceeds bound");
}

}  // namespace g2
