// Integer Chevalley basis of the 14-dimensional Lie algebra of type G2:
// basis e_delta (12 roots, canonical order) then h_alpha, h_beta.
//
// Structure-constant magnitudes are |N(d,e)| = p+1 from the root strings.
// Signs: the extraspecial pairs are pinned positive and the remaining free
// signs are resolved by a deterministic search for the first assignment
// satisfying the Jacobi identity, which pins the rest up to nothing.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "g2/gf2m.hpp"
#include "g2/matrix.hpp"
#include "g2/rootsys.hpp"

namespace g2 {

using IVec = std::array<long long, kDim>;
using IMat = std::array<long long, kDim * kDim>;

inline constexpr int kHAlpha = 12;
inline constexpr int kHBeta = 13;

class ChevalleyBasis {
 public:
  // flip_extraspecial: index into the extraspecial-pair list whose pinned
  // sign is negated; used to confirm the mod-2 reduction is sign-independent.
  static ChevalleyBasis build(int flip_extraspecial = -1) {
    ChevalleyBasis B;
    B.solve_signs(flip_extraspecial);
    return B;
  }

  static const ChevalleyBasis& standard() {
    static const ChevalleyBasis B = build();
    return B;
  }

  int structconst(int i, int j) const { return N_[i][j]; }

  IVec bracket_basis(int i, int j) const {
    IVec v{};
    if (i == j) return v;
    if (i >= 12 && j >= 12) return v;
    if (i >= 12) {  // [h, e_j]
      Root sr = (i == kHAlpha) ? kAlpha : kBeta;
      v[j] = pairing(all_roots()[j], sr);
      return v;
    }
    if (j >= 12) {
      Root sr = (j == kHAlpha) ? kAlpha : kBeta;
      v[i] = -pairing(all_roots()[i], sr);
      return v;
    }
    Root d = all_roots()[i], e = all_roots()[j];
    if (d + e == Root{0, 0}) {  // [e_d, e_{-d}] = h_d
      auto [ca, cb] = coroot_coeffs(d);
      v[kHAlpha] = ca;
      v[kHBeta] = cb;
      return v;
    }
    int s = root_index(d + e);
    if (s >= 0) v[s] = N_[i][j];
    return v;
  }

  IVec bracket(const IVec& x, const IVec& y) const {
    IVec v{};
    for (int i = 0; i < kDim; ++i) {
      if (!x[i]) continue;
      for (int j = 0; j < kDim; ++j) {
        if (!y[j]) continue;
        IVec b = bracket_basis(i, j);
        for (int k = 0; k < kDim; ++k) v[k] += x[i] * y[j] * b[k];
      }
    }
    return v;
  }

  IMat ad(int idx) const {
    IMat m{};
    for (int j = 0; j < kDim; ++j) {
      IVec col = bracket_basis(idx, j);
      for (int i = 0; i < kDim; ++i) m[i * kDim + j] = col[i];
    }
    return m;
  }

  bool jacobi_ok() const {
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j)
        for (int k = j + 1; k < kDim; ++k)
          if (!jacobi_triple(i, j, k)) return false;
    return true;
  }

  // Exhaustive form over all ordered triples, bilinear-extension based.
  bool jacobi_ok_full() const {
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k)
          if (!jacobi_triple(i, j, k)) return false;
    return true;
  }

  struct ExtraspecialPair { int i, j; };
  const std::vector<ExtraspecialPair>& extraspecial_pairs() const { return extraspecial_; }

 private:
  bool jacobi_triple(int i, int j, int k) const {
    IVec xi{}, xj{}, xk{};
    xi[i] = xj[j] = xk[k] = 1;
    IVec t1 = bracket(xi, bracket(xj, xk));
    IVec t2 = bracket(xj, bracket(xk, xi));
    IVec t3 = bracket(xk, bracket(xi, xj));
    for (int l = 0; l < kDim; ++l)
      if (t1[l] + t2[l] + t3[l] != 0) return false;
    return true;
  }

  static int magnitude(int i, int j) {
    auto [p, q] = root_string(all_roots()[i], all_roots()[j]);
    (void)q;
    return p + 1;
  }

  void solve_signs(int flip_extraspecial) {
    const auto& rs = all_roots();

    // Orbit representatives: unordered pairs {i,j} with root sum, identified
    // with their negation partners.
    struct Orbit { int i, j; std::optional<int> pinned; };
    std::vector<Orbit> orbits;
    for (int i = 0; i < 12; ++i)
      for (int j = i + 1; j < 12; ++j) {
        if (rs[i] + rs[j] == Root{0, 0} || !is_root(rs[i] + rs[j])) continue;
        int ni = negate_index(i), nj = negate_index(j);
        int pi = std::min(ni, nj), pj = std::max(ni, nj);
        if (std::pair(pi, pj) < std::pair(i, j)) continue;  // partner is rep
        orbits.push_back({i, j, std::nullopt});
      }

    // Extraspecial pins: per composite positive root, the special pair with
    // the least first member gets sign +1.
    extraspecial_.clear();
    for (int g = 0; g < 6; ++g) {
      if (height(rs[g]) < 2) continue;
      int besti = -1, bestj = -1;
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          if (rs[i] + rs[j] == rs[g] && (besti < 0 || i < besti)) { besti = i; bestj = j; }
      if (besti >= 0) extraspecial_.push_back({besti, bestj});
    }
    for (std::size_t k = 0; k < extraspecial_.size(); ++k) {
      int sign = ((int)k == flip_extraspecial) ? -1 : 1;
      for (auto& o : orbits)
        if (o.i == extraspecial_[k].i && o.j == extraspecial_[k].j) o.pinned = sign;
    }

    std::vector<int> free_idx;
    for (std::size_t k = 0; k < orbits.size(); ++k)
      if (!orbits[k].pinned) free_idx.push_back((int)k);
    if (free_idx.size() > 20) throw std::logic_error("unexpected orbit count");

    for (std::uint32_t mask = 0; mask < (1u << free_idx.size()); ++mask) {
      std::vector<int> signs(orbits.size());
      for (std::size_t k = 0; k < orbits.size(); ++k)
        signs[k] = orbits[k].pinned.value_or(1);
      for (std::size_t b = 0; b < free_idx.size(); ++b)
        if (mask & (1u << b)) signs[free_idx[b]] = -1;
      apply_signs(orbits, signs);
      if (jacobi_ok()) return;
    }
    throw std::logic_error("no consistent structure-constant signs found");
  }

  template <typename Orbits>
  void apply_signs(const Orbits& orbits, const std::vector<int>& signs) {
    for (auto& row : N_) row.fill(0);
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      int i = orbits[k].i, j = orbits[k].j;
      int m = magnitude(i, j);
      int v = signs[k] * m;
      N_[i][j] = v;
      N_[j][i] = -v;
      int ni = negate_index(i), nj = negate_index(j);
      N_[ni][nj] = -v;
      N_[nj][ni] = v;
    }
  }

  std::array<std::array<int, 12>, 12> N_{};
  std::vector<ExtraspecialPair> extraspecial_;
};

struct DividedPowerFamily {
  int root_index;
  std::array<IMat, 4> mats;  // M_0 = I, M_1 = ad, M_n = ad^n / n!
};

inline IMat imat_mul(const IMat& A, const IMat& B) {
  IMat C{};
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k) {
      long long a = A[i * kDim + k];
      if (!a) continue;
      for (int j = 0; j < kDim; ++j) C[i * kDim + j] += a * B[k * kDim + j];
    }
  return C;
}

inline DividedPowerFamily divided_powers(const ChevalleyBasis& B, Root delta) {
  int ridx = root_index(delta);
  if (ridx < 0) throw std::invalid_argument("not a root");
  DividedPowerFamily fam;
  fam.root_index = ridx;
  IMat id{};
  for (int i = 0; i < kDim; ++i) id[i * kDim + i] = 1;
  fam.mats[0] = id;
  fam.mats[1] = B.ad(ridx);
  IMat pw = fam.mats[1];
  long long fact = 1;
  for (int n = 2; n <= 3; ++n) {
    pw = imat_mul(pw, B.ad(ridx));
    fact *= n;
    IMat m{};
    for (int k = 0; k < kDim * kDim; ++k) {
      if (pw[k] % fact != 0) throw std::logic_error("divided power is not integral");
      m[k] = pw[k] / fact;
    }
    fam.mats[n] = m;
  }
  pw = imat_mul(pw, B.ad(ridx));
  for (long long v : pw)
    if (v != 0) throw std::logic_error("ad(e_delta)^4 != 0");
  return fam;
}

inline std::array<Mat, 4> reduce_mod2(const DividedPowerFamily& fam, const Field& F) {
  (void)F;
  std::array<Mat, 4> out;
  for (int n = 0; n < 4; ++n)
    for (int k = 0; k < kDim * kDim; ++k)
      out[n].e[k] = (felem)(((fam.mats[n][k] % 2) + 2) % 2);
  return out;
}

}  // namespace g2
