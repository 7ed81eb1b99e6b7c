// Nonabelian 1-cocycles Gamma -> V for the sigma-twisted conjugation action,
// the representation/cocycle correspondence, the witness search behind
// "V-conjugate iff cohomologous", the restriction-fiber demonstration, and
// the abelian (linear) cocycle dimensions used for contrast.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "g2/counterexample.hpp"
#include "g2/g2group.hpp"
#include "g2/gammagrp.hpp"
#include "g2/linalg.hpp"
#include "g2/parallel.hpp"

namespace g2 {

struct Cocycle {
  bool on_sylow = false;
  std::vector<Mat> vals;  // indexed by Gamma::index_of, or sylow2 order
};

class Cohomology {
 public:
  Cohomology(const Gamma& gam, const Counterexample& cex)
      : gam_(gam), cex_(cex), G_(cex.group()), F_(G_.field()) {
    // sigma(r) = t, sigma(s) = s_alpha, sigma(z) = 1
    sigma_r_ = cex_.t();
    sigma_s_ = cex_.s_alpha();
    sigma_z_ = identity_mat();
    if (!cex_.check_relations(sigma_r_, sigma_s_, sigma_z_))
      throw std::logic_error("sigma is not a homomorphism");
    for (GammaElem g : gam_.elements()) {
      Mat m = mat_pow(F_, sigma_r_, (std::uint64_t)g.i);
      if (g.j) m = mul(F_, m, sigma_s_);
      sigma_.push_back(m);
      sigma_inv_.push_back(inverse(F_, m));
    }
  }

  const Mat& sigma_of(GammaElem g) const { return sigma_[gam_.index_of(g)]; }

  Mat act(GammaElem g, const Mat& v) const {
    int i = gam_.index_of(g);
    return mul(F_, mul(F_, sigma_[i], v), sigma_inv_[i]);
  }

  // theta(gamma) = rho(gamma) sigma(gamma)^{-1}; every value must land in V.
  Cocycle cocycle_of(const Representation& rho) const {
    Cocycle th;
    for (GammaElem g : gam_.elements()) {
      Mat v = mul(F_, cex_.rho_of(rho, g), sigma_inv_[gam_.index_of(g)]);
      if (!G_.v_coords(v)) throw std::logic_error("cocycle value is not in V");
      th.vals.push_back(v);
    }
    if (!is_cocycle(th)) throw std::logic_error("cocycle identity fails");
    return th;
  }

  Representation rep_of(const Cocycle& th) const {
    if (th.on_sylow) throw std::invalid_argument("rep_of needs a full-domain cocycle");
    Representation rho;
    rho.q = gam_.q();
    rho.a = 0;
    rho.img_r = mul(F_, th.vals[gam_.index_of(Gamma::r())], sigma_r_);
    rho.img_s = mul(F_, th.vals[gam_.index_of(Gamma::s())], sigma_s_);
    rho.img_z = mul(F_, th.vals[gam_.index_of(Gamma::z())], sigma_z_);
    if (!cex_.check_relations(rho.img_r, rho.img_s, rho.img_z))
      throw std::logic_error("cocycle does not define a homomorphism");
    return rho;
  }

  Cocycle restrict_to_sylow(const Cocycle& th) const {
    if (th.on_sylow) return th;
    Cocycle out;
    out.on_sylow = true;
    for (GammaElem s : Gamma::sylow2()) out.vals.push_back(th.vals[gam_.index_of(s)]);
    return out;
  }

  // theta(g1 g2) = theta(g1) * (g1 . theta(g2)) over every pair of the domain.
  bool is_cocycle(const Cocycle& th) const {
    auto dom = th.on_sylow ? Gamma::sylow2() : gam_.elements();
    for (std::size_t i = 0; i < dom.size(); ++i)
      for (std::size_t j = 0; j < dom.size(); ++j) {
        GammaElem p = gam_.mul(dom[i], dom[j]);
        const Mat& lhs = value(th, p);
        Mat rhs = mul(F_, value(th, dom[i]), act(dom[i], value(th, dom[j])));
        if (!(lhs == rhs)) return false;
      }
    return value(th, Gamma::one()) == identity_mat();
  }

  struct WitnessResult {
    std::optional<std::array<felem, 5>> witness;
    std::uint64_t scanned = 0;
  };

  // Exhaustive scan over V (lexicographic coordinate order) for v with
  // theta2(g) = v^{-1} theta1(g) (g . v) on the domain generators, i.e.
  // v conjugating rep(theta1) to rep(theta2).  Returns the least witness.
  WitnessResult cohomologous(const Cocycle& t1, const Cocycle& t2) const {
    if (t1.on_sylow != t2.on_sylow) throw std::invalid_argument("domain mismatch");
    std::vector<std::pair<Mat, Mat>> conds = pair_conditions(t1, t2);
    WitnessResult res;
    std::uint32_t n = F_.size();
    std::array<felem, 5> x{};
    for (x[0] = 0; x[0] < n; ++x[0]) {
      Mat p0 = G_.kappa(kVRootIdx[0], x[0]);
      for (x[1] = 0; x[1] < n; ++x[1]) {
        Mat p1 = mul(F_, p0, G_.kappa(kVRootIdx[1], x[1]));
        for (x[2] = 0; x[2] < n; ++x[2]) {
          Mat p2 = mul(F_, p1, G_.kappa(kVRootIdx[2], x[2]));
          for (x[3] = 0; x[3] < n; ++x[3]) {
            Mat p3 = mul(F_, p2, G_.kappa(kVRootIdx[3], x[3]));
            for (x[4] = 0; x[4] < n; ++x[4]) {
              Mat v = mul(F_, p3, G_.kappa(kVRootIdx[4], x[4]));
              ++res.scanned;
              bool ok = true;
              for (auto& [A, B] : conds)
                if (!products_equal(F_, A, v, B)) { ok = false; break; }
              if (ok) { res.witness = x; return res; }
            }
          }
        }
      }
    }
    return res;
  }

  struct FiberReport {
    std::vector<felem> family;
    // pairs in lexicographic (a, b) order, a < b
    std::vector<std::array<felem, 2>> pairs;
    std::vector<bool> upstairs_distinct;                         // per pair
    std::vector<std::optional<std::array<felem, 5>>> downstairs; // per pair
    std::uint64_t v_size = 0;
    std::uint64_t fiber_lower_bound = 0;
    bool ok = false;
  };

  // The finite shadow of the fat-fiber statement: the classes of the whole
  // family are pairwise distinct over Gamma yet pairwise equal after
  // restriction to the Sylow 2-subgroup.
  FiberReport fiber_demo() const {
    FiberReport rep;
    std::uint32_t n = F_.size();
    for (felem a = 0; a < n; ++a) rep.family.push_back(a);
    std::vector<Representation> rhos;
    for (felem a = 0; a < n; ++a) rhos.push_back(cex_.build_rho(a));
    for (felem a = 0; a < n; ++a)
      for (felem b = a + 1; b < n; ++b) rep.pairs.push_back({a, b});
    rep.v_size = (std::uint64_t)1 << (5 * F_.degree());

    // Upstairs: the r- and z-conditions are shared by every pair, so one
    // exhaustive pass over V prefilters for all pairs at once.
    std::size_t npairs = rep.pairs.size();
    std::vector<std::optional<std::array<felem, 5>>> up(npairs);
    {
      std::vector<std::vector<std::pair<std::array<felem, 5>, std::size_t>>> found(n);
      parallel_for(n, [&](std::size_t task) {
        std::array<felem, 5> x{};
        x[0] = (felem)task;
        Mat p0 = G_.kappa(kVRootIdx[0], x[0]);
        for (x[1] = 0; x[1] < n; ++x[1]) {
          Mat p1 = mul(F_, p0, G_.kappa(kVRootIdx[1], x[1]));
          for (x[2] = 0; x[2] < n; ++x[2]) {
            Mat p2 = mul(F_, p1, G_.kappa(kVRootIdx[2], x[2]));
            for (x[3] = 0; x[3] < n; ++x[3]) {
              Mat p3 = mul(F_, p2, G_.kappa(kVRootIdx[3], x[3]));
              for (x[4] = 0; x[4] < n; ++x[4]) {
                Mat v = mul(F_, p3, G_.kappa(kVRootIdx[4], x[4]));
                if (!commute(F_, v, cex_.t())) continue;
                if (!commute(F_, v, cex_.kappa_omega_one())) continue;
                for (std::size_t p = 0; p < npairs; ++p) {
                  auto [a, b] = rep.pairs[p];
                  if (products_equal(F_, rhos[a].img_s, v, rhos[b].img_s))
                    found[task].push_back({x, p});
                }
              }
            }
          }
        }
      });
      for (std::size_t task = 0; task < n; ++task)
        for (auto& [x, p] : found[task])
          if (!up[p] || x < *up[p]) up[p] = x;
    }
    for (std::size_t p = 0; p < npairs; ++p) rep.upstairs_distinct.push_back(!up[p]);

    // Downstairs: only the s- and z-conditions remain; one pass records the
    // least witness per pair.
    rep.downstairs.assign(npairs, std::nullopt);
    {
      std::vector<std::vector<std::optional<std::array<felem, 5>>>> best(
          n, std::vector<std::optional<std::array<felem, 5>>>(npairs));
      parallel_for(n, [&](std::size_t task) {
        std::array<felem, 5> x{};
        x[0] = (felem)task;
        Mat p0 = G_.kappa(kVRootIdx[0], x[0]);
        for (x[1] = 0; x[1] < n; ++x[1]) {
          Mat p1 = mul(F_, p0, G_.kappa(kVRootIdx[1], x[1]));
          for (x[2] = 0; x[2] < n; ++x[2]) {
            Mat p2 = mul(F_, p1, G_.kappa(kVRootIdx[2], x[2]));
            for (x[3] = 0; x[3] < n; ++x[3]) {
              Mat p3 = mul(F_, p2, G_.kappa(kVRootIdx[3], x[3]));
              for (x[4] = 0; x[4] < n; ++x[4]) {
                bool all_done = true;
                for (std::size_t p = 0; p < npairs; ++p)
                  if (!best[task][p]) { all_done = false; break; }
                if (all_done) return;
                Mat v = mul(F_, p3, G_.kappa(kVRootIdx[4], x[4]));
                if (!commute(F_, v, cex_.kappa_omega_one())) continue;
                for (std::size_t p = 0; p < npairs; ++p) {
                  if (best[task][p]) continue;
                  auto [a, b] = rep.pairs[p];
                  if (products_equal(F_, rhos[a].img_s, v, rhos[b].img_s))
                    best[task][p] = x;
                }
              }
            }
          }
        }
      });
      for (std::size_t p = 0; p < npairs; ++p)
        for (std::size_t task = 0; task < n; ++task)
          if (best[task][p]) { rep.downstairs[p] = best[task][p]; break; }
    }

    bool all_up = true, all_down = true;
    for (std::size_t p = 0; p < npairs; ++p) {
      all_up = all_up && rep.upstairs_distinct[p];
      all_down = all_down && rep.downstairs[p].has_value();
    }
    rep.ok = all_up && all_down;
    rep.fiber_lower_bound = rep.ok ? n : 1;
    return rep;
  }

  struct LinearDims {
    int z1_full, b1_full, z1_sylow, b1_sylow;
    bool restriction_injective;
  };

  // Abelian contrast: Z^1 and B^1 for the 14-dimensional adjoint module with
  // gamma . X = Ad(rho(gamma)) X, and injectivity of the restriction on H^1.
  LinearDims linear_cocycle_dims(const Representation& rho) const {
    using Word = std::vector<std::pair<int, bool>>;  // (generator, inverted)
    std::vector<Mat> A = {rho.img_r, rho.img_s, rho.img_z};
    std::vector<Mat> Ainv;
    for (auto& m : A) Ainv.push_back(inverse(F_, m));

    std::vector<Word> rel_full;
    Word rq;
    for (int i = 0; i < gam_.q(); ++i) rq.push_back({0, false});
    rel_full.push_back(rq);
    rel_full.push_back({{1, false}, {1, false}});
    rel_full.push_back({{2, false}, {2, false}});
    rel_full.push_back({{1, false}, {0, false}, {1, true}, {0, false}});
    rel_full.push_back({{2, false}, {0, false}, {2, true}, {0, true}});
    rel_full.push_back({{2, false}, {1, false}, {2, true}, {1, true}});

    std::vector<Word> rel_sylow = {{{1, false}, {1, false}},
                                   {{2, false}, {2, false}},
                                   {{2, false}, {1, false}, {2, true}, {1, true}}};

    auto word_coeffs = [&](const Word& w, int ngens, const std::vector<int>& gmap) {
      // theta(word) as 14 x (14*ngens) linear map in the generator values
      std::vector<Mat> C(ngens);
      Mat P = identity_mat();
      for (auto [g, invd] : w) {
        int slot = gmap[g];
        if (!invd) {
          for (int k = 0; k < kDim * kDim; ++k) C[slot].e[k] ^= P.e[k];
          P = mul(F_, P, A[g]);
        } else {
          P = mul(F_, P, Ainv[g]);
          for (int k = 0; k < kDim * kDim; ++k) C[slot].e[k] ^= P.e[k];
        }
      }
      return C;
    };

    auto z1_dim = [&](const std::vector<Word>& rels, const std::vector<int>& gens) {
      int ngens = (int)gens.size();
      std::vector<int> gmap(3, -1);
      for (int i = 0; i < ngens; ++i) gmap[gens[i]] = i;
      int cols = kDim * ngens;
      std::vector<felem> M;
      for (const Word& w : rels) {
        auto C = word_coeffs(w, ngens, gmap);
        for (int r = 0; r < kDim; ++r) {
          std::vector<felem> row(cols, 0);
          for (int s = 0; s < ngens; ++s)
            for (int c = 0; c < kDim; ++c) row[s * kDim + c] = C[s].at(r, c);
          M.insert(M.end(), row.begin(), row.end());
        }
      }
      return cols - rank(F_, M, (int)rels.size() * kDim, cols);
    };

    auto fix_dim = [&](const std::vector<int>& gens) {
      std::vector<felem> M;
      for (int g : gens) {
        Mat m = A[g];
        for (int i = 0; i < kDim; ++i) m.at(i, i) ^= 1;
        M.insert(M.end(), m.e.begin(), m.e.end());
      }
      return kernel_dim(F_, M, (int)gens.size() * kDim, kDim);
    };

    LinearDims d{};
    d.z1_full = z1_dim(rel_full, {0, 1, 2});
    d.b1_full = kDim - fix_dim({0, 1, 2});
    d.z1_sylow = z1_dim(rel_sylow, {1, 2});
    d.b1_sylow = kDim - fix_dim({1, 2});

    // W = cocycles on Gamma whose restriction is a Sylow coboundary; the
    // restriction on H^1 is injective iff dim W equals dim B^1(Gamma).
    {
      int cols = kDim * 4;  // X_r, X_s, X_z, Y
      std::vector<felem> M;
      std::vector<int> gmap = {0, 1, 2};
      for (const Word& w : rel_full) {
        auto C = word_coeffs(w, 3, gmap);
        for (int r = 0; r < kDim; ++r) {
          std::vector<felem> row(cols, 0);
          for (int s = 0; s < 3; ++s)
            for (int c = 0; c < kDim; ++c) row[s * kDim + c] = C[s].at(r, c);
          M.insert(M.end(), row.begin(), row.end());
        }
      }
      for (int g : {1, 2}) {
        Mat m = A[g];
        for (int i = 0; i < kDim; ++i) m.at(i, i) ^= 1;
        for (int r = 0; r < kDim; ++r) {
          std::vector<felem> row(cols, 0);
          row[g * kDim + r] = 1;  // X_g component
          for (int c = 0; c < kDim; ++c) row[3 * kDim + c] = m.at(r, c);
          M.insert(M.end(), row.begin(), row.end());
        }
      }
      int rows = (int)(M.size() / cols);
      int dim_solutions = cols - rank(F_, M, rows, cols);
      int dim_w = dim_solutions - fix_dim({1, 2});
      d.restriction_injective = (dim_w == d.b1_full);
    }
    return d;
  }

 private:
  const Mat& value(const Cocycle& th, GammaElem g) const {
    if (!th.on_sylow) return th.vals[gam_.index_of(g)];
    auto syl = Gamma::sylow2();
    for (std::size_t i = 0; i < syl.size(); ++i)
      if (syl[i] == g) return th.vals[i];
    throw std::invalid_argument("element outside the Sylow domain");
  }

  // Conjugation conditions (A, B) meaning A*v == v*B for domain generators.
  std::vector<std::pair<Mat, Mat>> pair_conditions(const Cocycle& t1, const Cocycle& t2) const {
    std::vector<GammaElem> gens = t1.on_sylow
        ? std::vector<GammaElem>{Gamma::s(), Gamma::z()}
        : std::vector<GammaElem>{Gamma::r(), Gamma::s(), Gamma::z()};
    std::vector<std::pair<Mat, Mat>> conds;
    for (GammaElem g : gens) {
      Mat r1 = mul(F_, value(t1, g), sigma_[gam_.index_of(g)]);
      Mat r2 = mul(F_, value(t2, g), sigma_[gam_.index_of(g)]);
      conds.push_back({r1, r2});
    }
    return conds;
  }

  const Gamma& gam_;
  const Counterexample& cex_;
  const Group& G_;
  const Field& F_;
  Mat sigma_r_, sigma_s_, sigma_z_;
  std::vector<Mat> sigma_, sigma_inv_;
};

}  // namespace g2
