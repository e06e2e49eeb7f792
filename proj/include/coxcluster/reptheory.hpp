#pragma once

#include <utility>
#include <vector>

#include "coxcluster/adapted.hpp"

namespace coxcluster {

struct Indec {
  Root dim;
  int vertex = 0;       // tau-orbit vertex: the orbit of P(vertex)
  bool projective = false;
  bool injective = false;
  int tau = 0;          // frame index of tau M, 0 for projectives
  int tau_inv = 0;      // frame index of tau^{-1} M, 0 for injectives
};

// AR quiver and Hom/Ext tables for a simply-laced finite-type frame,
// computed by knitting.  Indecomposables are indexed 1..nu in frame order;
// M_t has dimension vector alpha^t.
class RepTheory {
 public:
  explicit RepTheory(const AdaptedFrame& frame);

  const AdaptedFrame& frame() const { return *frame_; }
  int count() const { return frame_->nu(); }
  const Indec& indec(int t) const { return indecs_[t - 1]; }

  // Irreducible-map arrows (from, to), frame indices, from < to.
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }

  int hom(int x, int y) const { return hom_[(x - 1) * count() + (y - 1)]; }
  // Auslander-Reiten formula: ext(X,Y) = hom(Y, tau X); zero for projective X.
  int ext(int x, int y) const;

  // N_t: the module behind cluster-category object t in 1..nu+n.
  int module_of(int t) const;

  // Definition of an exceptional sequence, condition (1) replaced by
  // indecomposability: Hom(E_j, E_i) = 0 for j > i, Ext(E_j, E_i) = 0 for
  // j >= i.  Entries are frame indices, at most n of them.
  bool is_exceptional_sequence(const std::vector<int>& modules) const;

  // Theorem-main condition (1): pairwise cluster-category Ext vanishing.
  bool is_cluster_tilting(const Selection& sel) const;

 private:
  const AdaptedFrame* frame_;
  std::vector<Indec> indecs_;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<int> hom_;
};

}  // namespace coxcluster
