#include "coxcluster/reptheory.hpp"

#include <algorithm>

namespace coxcluster {

RepTheory::RepTheory(const AdaptedFrame& frame) : frame_(&frame) {
  const CartanData& cd = frame.cartan();
  if (!cd.simply_laced())
    throw DomainError("module category requires a simply laced type");
  int n = frame.rank(), nu = frame.nu();

  GroupElement c = frame.coxeter();
  GroupElement cinv = c.inverse();

  indecs_.resize(nu);
  std::vector<std::vector<int>> into(nu + 1), from(nu + 1);

  for (int t = 1; t <= nu; ++t) {
    Indec& m = indecs_[t - 1];
    m.dim = frame.alpha(t);
    Root back = cinv.apply(m.dim);   // dim of tau M, if positive
    Root fwd = c.apply(m.dim);       // dim of tau^{-1} M, if positive
    m.projective = is_negative(back);
    m.injective = is_negative(fwd);
    if ((t <= n) != m.projective)
      throw Error("projectives are not the first n frame positions");
    if (!m.projective) {
      m.tau = frame.frame_index(back);
      if (m.tau >= t) throw Error("frame order is not a knitting order");
      indecs_[m.tau - 1].tau_inv = t;
    }
    m.vertex = m.projective ? t : indecs_[m.tau - 1].vertex;

    // Irreducible maps into M_t: rad P(t) for projectives, otherwise the
    // middle terms of the mesh ending here (= targets of maps out of tau M).
    if (m.projective) {
      for (const Arrow& a : cd.arrows())
        if (a.from == t)
          for (int k = 0; k < a.mult; ++k) into[t].push_back(a.to);
    } else {
      into[t] = from[m.tau];
    }
    for (int e : into[t]) {
      if (e >= t) throw Error("frame order is not a knitting order");
      from[e].push_back(t);
      arrows_.emplace_back(e, t);
    }

    // Mesh additivity certifies the arrow pattern.
    Root sum(n, 0);
    for (int e : into[t])
      for (int i = 0; i < n; ++i) sum[i] += indecs_[e - 1].dim[i];
    Root expect = m.dim;
    if (m.projective)
      expect[m.vertex - 1] -= 1;  // dim rad P = dim P - simple top
    else
      for (int i = 0; i < n; ++i) expect[i] += indecs_[m.tau - 1].dim[i];
    if (sum != expect) throw Error("mesh additivity failed while knitting");
  }
  std::sort(arrows_.begin(), arrows_.end());

  // Hammocks: h(M) = dim Hom(M, Y) satisfies h(P(i)) = (dim Y)_i and, from
  // the almost split sequence 0 -> tau M -> E -> M -> 0,
  //   h(M) = sum_E h(E) - h(tau M) + [Y = tau M].
  hom_.assign(nu * nu, 0);
  for (int y = 1; y <= nu; ++y) {
    for (int t = 1; t <= nu; ++t) {
      const Indec& m = indecs_[t - 1];
      int h;
      if (m.projective) {
        h = static_cast<int>(indecs_[y - 1].dim[m.vertex - 1]);
      } else {
        h = -hom(m.tau, y) + (y == m.tau ? 1 : 0);
        for (int e : into[t]) h += hom(e, y);
      }
      if (h < 0) throw Error("negative hammock value");
      hom_[(t - 1) * nu + (y - 1)] = h;
    }
  }
}

int RepTheory::ext(int x, int y) const {
  const Indec& m = indecs_[x - 1];
  if (m.projective) return 0;
  return hom(y, m.tau);  // Ext(X,Y) = D Hom(Y, tau X)
}

int RepTheory::module_of(int t) const {
  if (t < 1 || t > count() + frame_->rank())
    throw DomainError("object index out of range");
  return t <= count() ? t : t - count();  // position nu+k is P(k) shifted
}

bool RepTheory::is_exceptional_sequence(const std::vector<int>& mods) const {
  if (static_cast<int>(mods.size()) > frame_->rank()) return false;
  for (std::size_t j = 0; j < mods.size(); ++j) {
    if (mods[j] < 1 || mods[j] > count())
      throw DomainError("module index out of range");
    for (std::size_t i = 0; i <= j; ++i) {
      if (i < j && hom(mods[j], mods[i]) != 0) return false;
      if (ext(mods[j], mods[i]) != 0) return false;
    }
  }
  return true;
}

bool RepTheory::is_cluster_tilting(const Selection& sel) const {
  validate_selection(*frame_, sel);
  int nu = count();
  for (std::size_t a = 0; a < sel.size(); ++a) {
    for (std::size_t b = a; b < sel.size(); ++b) {
      int ti = sel[a], tj = sel[b];
      if (tj <= nu) {
        if (ext(ti, tj) != 0 || ext(tj, ti) != 0) return false;
      } else if (ti <= nu) {
        // Ext in the cluster category against a shifted projective is a
        // module Hom from that projective.
        if (hom(tj - nu, ti) != 0) return false;
      }
      // two shifted projectives never extend each other
    }
  }
  return true;
}

}  // namespace coxcluster
