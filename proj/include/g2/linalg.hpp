// Exact Gaussian elimination over GF(2^m) for rank and kernel dimensions.
#pragma once

#include <vector>

#include "g2/gf2m.hpp"

namespace g2 {

// Row-major rows x cols matrix; destroys its copy of the input.
inline int rank(const Field& F, std::vector<felem> M, int rows, int cols) {
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (M[i * cols + c]) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(M[piv * cols + j], M[r * cols + j]);
    felem inv = F.inv(M[r * cols + c]);
    for (int j = c; j < cols; ++j) M[r * cols + j] = F.mul(inv, M[r * cols + j]);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      felem f = M[i * cols + c];
      if (!f) continue;
      for (int j = c; j < cols; ++j) M[i * cols + j] ^= F.mul(f, M[r * cols + j]);
    }
    ++r;
  }
  return r;
}

inline int kernel_dim(const Field& F, const std::vector<felem>& M, int rows, int cols) {
  return cols - rank(F, M, rows, cols);
}

}  // namespace g2
