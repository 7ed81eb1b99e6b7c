// The representation family rho_a : Gamma -> G2(GF(2^m)) and every step of
// the non-conjugacy argument at finite scale: restriction conjugator,
// centralizer fixed-space dimension, exhaustive conjugator searches over
// T*G_omega, the SL2 pair test, and the structural subgroup facts.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "g2/g2group.hpp"
#include "g2/gammagrp.hpp"
#include "g2/linalg.hpp"

namespace g2 {

struct Representation {
  int q;
  felem a;
  Mat img_r, img_s, img_z;
};

class Counterexample {
 public:
  Counterexample(int q, const Group& G) : q_(q), G_(G), F_(G.field()) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("q must be odd and >= 3");
    if (F_.group_order() % (std::uint32_t)q != 0)
      throw std::invalid_argument("q does not divide 2^m - 1");
    mu_ = F_.element_of_order((std::uint32_t)q);
    t_ = G_.coroot_elt(kAlpha, mu_);
    s_alpha_ = G_.s_delta(kAlpha);
    komega1_ = G_.kappa(kOmega, 1);
  }

  int q() const { return q_; }
  const Group& group() const { return G_; }
  const Mat& t() const { return t_; }
  felem mu() const { return mu_; }
  const Mat& s_alpha() const { return s_alpha_; }
  const Mat& kappa_omega_one() const { return komega1_; }

  bool check_relations(const Mat& R, const Mat& S, const Mat& Z) const {
    Mat id = identity_mat();
    if (mat_pow(F_, R, (std::uint64_t)q_) != id) return false;
    if (mul(F_, S, S) != id) return false;
    if (mul(F_, Z, Z) != id) return false;
    // S R S^{-1} = R^{-1}
    if (!products_equal(F_, inverse(F_, R), S, R)) return false;
    if (!commute(F_, R, Z)) return false;
    if (!commute(F_, S, Z)) return false;
    return true;
  }

  Representation build_rho(felem a) const {
    Representation rho{q_, a, t_, mul(F_, s_alpha_, G_.kappa(kOmega, a)), komega1_};
    if (!check_relations(rho.img_r, rho.img_s, rho.img_z))
      throw std::logic_error("generator images violate the Gamma relations");
    return rho;
  }

  Mat rho_of(const Representation& rho, GammaElem g) const {
    Mat m = mat_pow(F_, rho.img_r, (std::uint64_t)g.i);
    if (g.j) m = mul(F_, m, rho.img_s);
    if (g.k) m = mul(F_, m, rho.img_z);
    return m;
  }

  Mat conj_u(felem x) const {
    return mul(F_, G_.kappa(kBeta, x), G_.kappa(Root{3, 1}, x));
  }

  // Witness conjugating rho_0|Sylow to rho_a|Sylow; throws on failure.
  Mat restriction_witness(felem a) const {
    Mat g = conj_u(F_.sqrt(a));
    Representation r0 = build_rho(0), ra = build_rho(a);
    for (GammaElem s : Gamma::sylow2())
      if (!products_equal(F_, rho_of(ra, s), g, rho_of(r0, s)))
        throw std::logic_error("restriction conjugator failed");
    return g;
  }

  // dim ker(Ad(t) - I) on the 14-dimensional algebra.
  int centralizer_fixed_dim() const {
    std::vector<felem> M(t_.e.begin(), t_.e.end());
    for (int i = 0; i < kDim; ++i) M[i * kDim + i] ^= 1;
    return kernel_dim(F_, M, kDim, kDim);
  }

  const std::vector<Mat>& torus() const {
    if (torus_.empty()) {
      for (felem l1 = 1; l1 < F_.size(); ++l1)
        for (felem l2 = 1; l2 < F_.size(); ++l2)
          torus_.push_back(mul(F_, G_.coroot_elt(kAlpha, l1), G_.coroot_elt(kBeta, l2)));
      std::sort(torus_.begin(), torus_.end(), lex_less);
    }
    return torus_;
  }

  std::vector<Mat> root_pair_subgroup(Root d) const {
    std::vector<Mat> gens;
    for (felem a = 1; a < F_.size(); ++a) {
      gens.push_back(G_.kappa(d, a));
      gens.push_back(G_.kappa(-d, a));
    }
    std::uint64_t n = F_.size();
    return G_.enumerate_subgroup(gens, (std::size_t)(n * (n * n - 1)));
  }

  const std::vector<Mat>& g_omega() const {
    if (g_omega_.empty()) g_omega_ = root_pair_subgroup(kOmega);
    return g_omega_;
  }

  std::uint64_t conjugator_candidates() const {
    return (std::uint64_t)torus().size() * g_omega().size();
  }

  struct SearchResult {
    std::optional<Mat> witness;
    std::uint64_t scanned = 0;
  };

  // Exhaustive scan of g = h*m over T x G_omega for a conjugator taking
  // rho_a to rho_b.  The r- and z-conditions do not depend on (a, b), so
  // they are evaluated once per candidate and cached.
  SearchResult nonconjugacy_search(felem a, felem b) const {
    build_survivors();
    Representation ra = build_rho(a), rb = build_rho(b);
    SearchResult res;
    res.scanned = conjugator_candidates();
    for (const Mat& g : survivors_)
      if (products_equal(F_, rb.img_s, g, ra.img_s)) {
        res.witness = g;
        return res;
      }
    return res;
  }

  // Scan of G_omega for g with g kappa_omega(a) g^{-1} = kappa_omega(b)
  // fixing kappa_omega(1).
  SearchResult sl2_pair_test(felem a, felem b) const {
    Mat ka = G_.kappa(kOmega, a), kb = G_.kappa(kOmega, b);
    SearchResult res;
    for (const Mat& g : g_omega()) {
      ++res.scanned;
      if (products_equal(F_, kb, g, ka) && commute(F_, g, komega1_)) {
        res.witness = g;
        return res;
      }
    }
    return res;
  }

  struct Structural {
    std::uint64_t intersection_size = 0;
    int ker_alpha_torus_count = 0;
    bool ker_alpha_in_g_omega = false;
    bool alpha_omega_generators_commute = false;
    bool ok() const {
      return intersection_size == 1 && ker_alpha_in_g_omega && alpha_omega_generators_commute;
    }
  };

  Structural structural_checks() const {
    Structural st;
    std::vector<Mat> ga = root_pair_subgroup(kAlpha);
    std::unordered_set<Mat, MatHash> gw(g_omega().begin(), g_omega().end());
    for (const Mat& x : ga)
      if (gw.count(x)) ++st.intersection_size;
    Mat kalpha1 = G_.kappa(kAlpha, 1);
    st.ker_alpha_in_g_omega = true;
    for (const Mat& h : torus())
      if (commute(F_, h, kalpha1)) {
        ++st.ker_alpha_torus_count;
        if (!gw.count(h)) st.ker_alpha_in_g_omega = false;
      }
    st.alpha_omega_generators_commute = true;
    for (felem x = 0; x < F_.size() && st.alpha_omega_generators_commute; ++x)
      for (felem y = 0; y < F_.size(); ++y) {
        bool c = commute(F_, G_.kappa(kAlpha, x), G_.kappa(kOmega, y)) &&
                 commute(F_, G_.kappa(negate_index(root_index(kAlpha)), x),
                         G_.kappa(kOmega, y)) &&
                 commute(F_, G_.kappa(kAlpha, x),
                         G_.kappa(negate_index(root_index(kOmega)), y)) &&
                 commute(F_, G_.kappa(negate_index(root_index(kAlpha)), x),
                         G_.kappa(negate_index(root_index(kOmega)), y));
        if (!c) { st.alpha_omega_generators_commute = false; break; }
      }
    return st;
  }

  struct RandomWordReport {
    std::uint64_t words = 0;
    std::uint64_t conjugators_found = 0;
  };

  // Seeded smoke test: random words in the root-group generators, tested as
  // conjugator candidates for every unordered pair a != b.
  RandomWordReport random_word_search(std::uint64_t n, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::vector<Representation> reps;
    for (felem a = 0; a < F_.size(); ++a) reps.push_back(build_rho(a));
    RandomWordReport rep;
    for (std::uint64_t w = 0; w < n; ++w) {
      Mat g = identity_mat();
      int len = 4 + (int)(rng() % 5);
      for (int l = 0; l < len; ++l) {
        int ridx = (int)(rng() % 12);
        felem a = (felem)(rng() % F_.size());
        g = mul(F_, g, G_.kappa(ridx, a));
      }
      ++rep.words;
      if (!commute(F_, g, t_)) continue;
      if (!commute(F_, g, komega1_)) continue;
      for (felem a = 0; a < F_.size(); ++a)
        for (felem b = 0; b < F_.size(); ++b) {
          if (a == b) continue;
          if (products_equal(F_, reps[b].img_s, g, reps[a].img_s)) ++rep.conjugators_found;
        }
    }
    return rep;
  }

 private:
  void build_survivors() const {
    if (survivors_built_) return;
    for (const Mat& h : torus())
      for (const Mat& m : g_omega()) {
        Mat g = mul(F_, h, m);
        if (commute(F_, g, t_) && commute(F_, g, komega1_)) survivors_.push_back(g);
      }
    survivors_built_ = true;
  }

  int q_;
  const Group& G_;
  const Field& F_;
  felem mu_;
  Mat t_, s_alpha_, komega1_;
  mutable std::vector<Mat> torus_, g_omega_, survivors_;
  mutable bool survivors_built_ = false;
};

}  // namespace g2
