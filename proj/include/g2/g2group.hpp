// G2(GF(2^m)) in the adjoint representation: kappa_delta(a) as truncated
// exponentials of the reduced divided powers, Weyl representatives s_delta,
// torus elements from coroots, subgroup closure, and coordinates on the
// unipotent radical V of the alpha-parabolic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "g2/chevalley.hpp"
#include "g2/gf2m.hpp"
#include "g2/matrix.hpp"
#include "g2/rootsys.hpp"

namespace g2 {

// V = R_u(P_alpha) factor order: beta, alpha+beta, 2alpha+beta, 3alpha+beta, omega.
inline constexpr std::array<int, 5> kVRootIdx = {0, 2, 3, 4, 5};

struct CommutatorTerm {
  int i, j;      // exponents: root = i*delta + j*eps
  int root_idx;  // index of i*delta + j*eps
  felem constant;
};

struct CommutatorCheck {
  bool ok = true;
  std::uint64_t cases = 0;
  std::vector<CommutatorTerm> terms;
  std::string note;
};

class Group {
 public:
  explicit Group(const Field& F, const ChevalleyBasis& B = ChevalleyBasis::standard())
      : F_(F), B_(B), id_(identity_mat()) {
    for (int r = 0; r < 12; ++r) {
      k_[r] = reduce_mod2(divided_powers(B_, all_roots()[r]), F_);
      for (int pos = 0; pos < kDim * kDim; ++pos)
        if (k_[r][1].e[pos] == 1 && k_[r][2].e[pos] == 0 && k_[r][3].e[pos] == 0)
          readers_[r].push_back(pos);
    }
    // mod-2 bracket table for the automorphism test
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        IVec v = B_.bracket_basis(i, j);
        for (int k = 0; k < kDim; ++k) brk2_[i][j][k] = (felem)(((v[k] % 2) + 2) % 2);
      }
  }

  const Field& field() const { return F_; }
  const ChevalleyBasis& basis() const { return B_; }
  const Mat& id() const { return id_; }

  Mat kappa(int ridx, felem a) const {
    Mat m = k_[ridx][0];
    felem an = a;
    for (int n = 1; n <= 3 && an; ++n) {
      const Mat& Mn = k_[ridx][n];
      for (int pos = 0; pos < kDim * kDim; ++pos)
        if (Mn.e[pos]) m.e[pos] ^= an;
      an = F_.mul(an, a);
    }
    return m;
  }

  Mat kappa(Root d, felem a) const { return kappa(checked_index(d), a); }

  Mat s_delta(int ridx) const {
    Mat a = kappa(ridx, 1);
    Mat b = kappa(negate_index(ridx), 1);
    return mul(F_, mul(F_, a, b), a);
  }

  Mat s_delta(Root d) const { return s_delta(checked_index(d)); }

  // h_delta(lam) = n_delta(lam) n_delta(1)^{-1}, n_delta(lam) =
  // kappa_d(lam) kappa_{-d}(lam^{-1}) kappa_d(lam).
  Mat coroot_elt(int ridx, felem lam) const {
    if (lam == 0) throw std::domain_error("torus parameter must be nonzero");
    Mat n = weyl_word(ridx, lam);
    return mul(F_, n, inverse(F_, weyl_word(ridx, 1)));
  }

  Mat coroot_elt(Root d, felem lam) const { return coroot_elt(checked_index(d), lam); }

  bool is_lie_automorphism(const Mat& g) const {
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j) {
        std::array<felem, kDim> lhs{}, rhs{};
        for (int k = 0; k < kDim; ++k) {
          felem c = brk2_[i][j][k];
          if (!c) continue;
          for (int r = 0; r < kDim; ++r)
            if (g.at(r, k)) lhs[r] ^= g.at(r, k);
        }
        for (int k = 0; k < kDim; ++k) {
          felem gki = g.at(k, i);
          if (!gki) continue;
          for (int l = 0; l < kDim; ++l) {
            felem glj = g.at(l, j);
            if (!glj) continue;
            felem f = F_.mul(gki, glj);
            for (int r = 0; r < kDim; ++r)
              if (brk2_[k][l][r]) rhs[r] ^= f;
          }
        }
        if (lhs != rhs) return false;
      }
    return true;
  }

  // Breadth-first closure under multiplication; result sorted canonically.
  std::vector<Mat> enumerate_subgroup(const std::vector<Mat>& gens, std::size_t bound) const {
    std::unordered_set<Mat, MatHash> seen;
    std::vector<Mat> frontier{id_};
    seen.insert(id_);
    while (!frontier.empty()) {
      std::vector<Mat> next;
      for (const Mat& x : frontier)
        for (const Mat& g : gens) {
          Mat y = mul(F_, x, g);
          if (seen.insert(y).second) {
            if (seen.size() > bound) throw std::runtime_error("subgroup closure exceeds bound");
            next.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
    std::vector<Mat> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }

  Mat v_elem(const std::array<felem, 5>& x) const {
    Mat m = kappa(kVRootIdx[0], x[0]);
    for (int k = 1; k < 5; ++k) m = mul(F_, m, kappa(kVRootIdx[k], x[k]));
    return m;
  }

  // Closed-form coordinate reads on the e_{-omega} column, verified by
  // reconstructing the product.  Non-membership is a normal return.
  std::optional<std::array<felem, 5>> v_coords(const Mat& g) const {
    const int col = root_index(-kOmega);
    std::array<felem, 5> x;
    x[0] = g.at(root_index(Root{-3, -1}), col);
    x[1] = g.at(root_index(Root{-2, -1}), col);
    x[2] = g.at(root_index(Root{-1, -1}), col);
    x[3] = g.at(root_index(Root{0, -1}), col);
    x[4] = g.at(kHAlpha, col) ^ F_.mul(x[1], x[2]);
    if (v_elem(x) == g) return x;
    return std::nullopt;
  }

  // Decompose w as a product of root elements for the given root indices in
  // the given order; nullopt if w is not in that unipotent set.
  std::optional<std::vector<felem>> peel(const Mat& w, const std::vector<int>& roots) const {
    std::vector<felem> out;
    if (peel_rec(w, roots, 0, out)) return out;
    return std::nullopt;
  }

  // Exhaustively validates [kappa_d(a), kappa_e(b)] = prod kappa_{id+je}(c_ij a^i b^j)
  // over the whole field, with c_ij in GF(2) fixed across all (a,b).
  CommutatorCheck commutator_check(int di, int ei) const {
    Root d = all_roots()[di], e = all_roots()[ei];
    if (d == -e) throw std::invalid_argument("need delta != -eps");
    // delta = eps degenerates to the empty product: [kappa(a), kappa(b)] = 1
    CommutatorCheck rep;
    struct TermKey { int i, j, ridx; };
    std::vector<TermKey> keys;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        Root s{i * d.a + j * e.a, i * d.b + j * e.b};
        int ridx = root_index(s);
        if (ridx >= 0) keys.push_back({i, j, ridx});
      }
    std::sort(keys.begin(), keys.end(), [](const TermKey& a, const TermKey& b) {
      return std::pair(a.i + a.j, a.i) < std::pair(b.i + b.j, b.i);
    });
    std::vector<int> roots;
    for (auto& k : keys) roots.push_back(k.ridx);

    std::vector<felem> constants(keys.size(), 0);
    bool have_constants = false;
    for (felem a = 0; a < F_.size(); ++a)
      for (felem b = 0; b < F_.size(); ++b) {
        Mat ka = kappa(di, a), kb = kappa(ei, b);
        Mat w = mul(F_, mul(F_, mul(F_, ka, kb), ka), kb);  // char 2: inverses are selves
        auto coords = peel(w, roots);
        ++rep.cases;
        if (!coords) {
          rep.ok = false;
          rep.note = "commutator left the expected root groups";
          return rep;
        }
        for (std::size_t k = 0; k < keys.size(); ++k) {
          felem mono = F_.mul(F_.pow(a, keys[k].i), F_.pow(b, keys[k].j));
          if (a == 1 && b == 1 && !have_constants) constants[k] = (*coords)[k];
          felem expect = F_.mul(constants.empty() ? 0 : constants[k], mono);
          if (a == 1 && b == 1) continue;  // defining case, revisited below
          if ((*coords)[k] != expect) {
            rep.ok = false;
            rep.note = "coordinate is not the expected monomial";
            return rep;
          }
        }
        if (a == 1 && b == 1) have_constants = true;
      }
    // cross-check the leading constant against the integer structure constants
    for (std::size_t k = 0; k < keys.size(); ++k) {
      rep.terms.push_back({keys[k].i, keys[k].j, keys[k].ridx, constants[k]});
      if (keys[k].i == 1 && keys[k].j == 1) {
        int n = B_.structconst(di, ei);
        if ((felem)(((n % 2) + 2) % 2) != constants[k]) {
          rep.ok = false;
          rep.note = "leading constant disagrees with N mod 2";
        }
      }
    }
    return rep;
  }

 private:
  static int checked_index(Root d) {
    int i = root_index(d);
    if (i < 0) throw std::invalid_argument("not a G2 root");
    return i;
  }

  Mat weyl_word(int ridx, felem lam) const {
    Mat a = kappa(ridx, lam);
    Mat b = kappa(negate_index(ridx), F_.inv(lam));
    return mul(F_, mul(F_, a, b), a);
  }

  bool peel_rec(const Mat& w, const std::vector<int>& roots, std::size_t k,
                std::vector<felem>& out) const {
    if (k == roots.size()) return w == id_;
    int d = roots[k];
    // reader-entry guesses first, then the rest of the field
    std::vector<felem> cand;
    for (int pos : readers_[d]) {
      felem x = w.e[pos];
      if (std::find(cand.begin(), cand.end(), x) == cand.end()) cand.push_back(x);
      if (cand.size() >= 2) break;
    }
    for (felem x = 0; x < F_.size(); ++x)
      if (std::find(cand.begin(), cand.end(), x) == cand.end()) cand.push_back(x);
    for (felem x : cand) {
      Mat w2 = mul(F_, kappa(d, x), w);  // kappa(d,x)^{-1} = kappa(d,x)
      out.push_back(x);
      if (peel_rec(w2, roots, k + 1, out)) return true;
      out.pop_back();
    }
    return false;
  }

  const Field& F_;
  ChevalleyBasis B_;
  Mat id_;
  std::array<std::array<Mat, 4>, 12> k_;
  std::array<std::vector<int>, 12> readers_;
  felem brk2_[kDim][kDim][kDim];
};

}  // namespace g2
