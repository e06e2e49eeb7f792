#include "coxcluster/braid.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace coxcluster {

Factorization::Factorization(const CartanData& cd, std::vector<Root> roots)
    : cd_(&cd), roots_(std::move(roots)) {
  for (const Root& r : roots_) {
    if (static_cast<int>(r.size()) != cd.rank())
      throw DomainError("factorization entry has wrong rank");
    if (!is_positive(r))
      throw DomainError("factorization entry is not a positive root: " +
                        root_to_string(r));
    if (cd.pair2(r, r) <= 0)
      throw DomainError("factorization entry is not a real root: " +
                        root_to_string(r));
  }
}

GroupElement Factorization::product() const {
  GroupElement g(cd_->rank());
  for (const Root& r : roots_) g = g * reflection_in(*cd_, r);
  return g;
}

std::vector<Int> Factorization::key() const {
  std::vector<Int> k;
  k.reserve(roots_.size() * cd_->rank());
  for (const Root& r : roots_) k.insert(k.end(), r.begin(), r.end());
  return k;
}

Factorization sigma(const Factorization& f, int i) {
  if (i < 1 || i >= f.size())
    throw DomainError("braid generator index out of range");
  std::vector<Root> roots = f.roots();
  Root moved = abs_root(
      reflect_in_root(f.cartan(), roots[i - 1], roots[i]));
  roots[i] = roots[i - 1];
  roots[i - 1] = moved;
  return Factorization(f.cartan(), std::move(roots));
}

Factorization sigma_inverse(const Factorization& f, int i) {
  if (i < 1 || i >= f.size())
    throw DomainError("braid generator index out of range");
  std::vector<Root> roots = f.roots();
  Root moved = abs_root(reflect_in_root(f.cartan(), roots[i], roots[i - 1]));
  roots[i - 1] = roots[i];
  roots[i] = moved;
  return Factorization(f.cartan(), std::move(roots));
}

Factorization apply_braid(const Factorization& f, const BraidWord& bw) {
  Factorization cur = f;
  for (int g : bw) cur = (g > 0) ? sigma(cur, g) : sigma_inverse(cur, -g);
  return cur;
}

std::pair<Factorization, BraidWord> move_to_front(const Factorization& f,
                                                  int i) {
  if (i < 1 || i > f.size())
    throw DomainError("move_to_front index out of range");
  BraidWord bw;
  Factorization cur = f;
  for (int k = i - 1; k >= 1; --k) {
    cur = sigma_inverse(cur, k);
    bw.push_back(-k);
  }
  return {cur, bw};
}

std::vector<Factorization> enumerate_factorizations(const CartanData& cd,
                                                    const GroupElement& target,
                                                    int m) {
  if (!cd.finite_type())
    throw DomainError("factorization enumeration requires finite type");
  if (m < 0) throw DomainError("negative factorization length");

  std::vector<Root> phi = positive_roots(cd);
  std::vector<GroupElement> refl;
  refl.reserve(phi.size());
  for (const Root& r : phi) refl.push_back(reflection_in(cd, r));

  std::vector<Factorization> out;
  std::vector<Root> chosen;
  // remaining = (prefix)^{-1} * target; extend while the absolute length of
  // the remaining element fits in the remaining slots.
  auto dfs = [&](auto&& self, const GroupElement& remaining, int slots) -> void {
    if (slots == 0) {
      if (remaining.is_identity()) out.emplace_back(cd, chosen);
      return;
    }
    for (std::size_t r = 0; r < phi.size(); ++r) {
      GroupElement next = refl[r] * remaining;
      if (reflection_length(next) > slots - 1) continue;
      chosen.push_back(phi[r]);
      self(self, next, slots - 1);
      chosen.pop_back();
    }
  };
  if (reflection_length(target) <= m) dfs(dfs, target, m);
  return out;
}

BraidWord OrbitReport::witness(int idx) const {
  BraidWord bw;
  for (int v = idx; parent[v] >= 0; v = parent[v]) bw.push_back(move[v]);
  std::reverse(bw.begin(), bw.end());
  return bw;
}

OrbitReport hurwitz_orbit(const Factorization& base, OrbitOptions opts) {
  const CartanData& cd = base.cartan();
  if (!cd.finite_type() && !opts.depth_limit)
    throw DomainError(
        "hurwitz_orbit in infinite type requires an explicit depth limit");

  OrbitReport rep;
  std::unordered_map<std::vector<Int>, int, RootHash> seen;
  std::deque<std::pair<int, int>> queue;  // (orbit index, depth)

  auto add = [&](const Factorization& f, int par, int mv, int depth) -> bool {
    auto [it, fresh] = seen.emplace(f.key(), static_cast<int>(rep.orbit.size()));
    if (!fresh) return false;
    rep.orbit.push_back(f);
    rep.parent.push_back(par);
    rep.move.push_back(mv);
    queue.emplace_back(it->second, depth);
    rep.depth_used = std::max(rep.depth_used, depth);
    return true;
  };

  add(base, -1, 0, 0);
  while (!queue.empty()) {
    auto [idx, depth] = queue.front();
    queue.pop_front();
    if (opts.depth_limit && depth >= *opts.depth_limit) {
      rep.truncated = true;
      continue;
    }
    Factorization cur = rep.orbit[idx];
    for (int i = 1; i < cur.size(); ++i) {
      add(sigma(cur, i), idx, i, depth + 1);
      add(sigma_inverse(cur, i), idx, -i, depth + 1);
      if (static_cast<long long>(rep.orbit.size()) > opts.node_limit) {
        rep.orbit_size = static_cast<long long>(rep.orbit.size());
        rep.truncated = true;
        throw ResourceError("hurwitz orbit exceeded the node limit", rep);
      }
    }
  }
  rep.orbit_size = static_cast<long long>(rep.orbit.size());

  if (cd.finite_type() && !rep.truncated && opts.count_factorizations) {
    rep.factorization_count = static_cast<long long>(
        enumerate_factorizations(cd, base.product(), base.size()).size());
    rep.transitive = (rep.factorization_count == rep.orbit_size);
  }
  return rep;
}

}  // namespace coxcluster
