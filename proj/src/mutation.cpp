#include "coxcluster/mutation.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace coxcluster {

namespace {

// s_i acting on a coordinate vector: x -> x - (sum_j a_ij x_j) e_i.
void apply_simple(const CartanData& cd, int i, Root& x) {
  Int c = 0;
  for (int j = 1; j <= cd.rank(); ++j) c += cd.a(i, j) * x[j - 1];
  x[i - 1] -= c;
}

std::optional<int> scan(const AdaptedFrame& frame, const std::vector<char>& del,
                        int tk, int step) {
  const CartanData& cd = frame.cartan();
  Root v(cd.rank(), 0);
  v[frame.letter(tk) - 1] = 1;
  for (int l = tk + step; l >= 1 && l <= frame.size(); l += step) {
    if (del[l]) continue;  // barred letter acts as the identity
    apply_simple(cd, frame.letter(l), v);
    if (is_negative(v)) return l;
  }
  return std::nullopt;
}

}  // namespace

MutationStep algebraic_mutate(const AdaptedFrame& frame, const Selection& sel,
                              int k) {
  if (!is_reduced_w0(frame, sel))
    throw DomainError("mutation requires a cluster selection");
  if (k < 1 || k > frame.rank())
    throw DomainError("mutation direction out of range");

  MutationStep st;
  st.from = sel;
  st.k = k;
  st.removed = sel[k - 1];

  std::vector<char> del(frame.size() + 1, 0);
  for (int t : sel) del[t] = 1;
  std::optional<int> left = scan(frame, del, st.removed, -1);
  std::optional<int> right = scan(frame, del, st.removed, +1);
  if (left.has_value() == right.has_value())
    throw Error("mutation scan did not succeed on exactly one side");
  st.inserted = left ? *left : *right;
  st.scan_side = left ? ScanSide::left : ScanSide::right;

  st.to = sel;
  st.to[k - 1] = st.inserted;
  std::sort(st.to.begin(), st.to.end());
  if (!is_reduced_w0(frame, st.to))
    throw Error("mutation produced a non-cluster selection");
  if (!condition3(frame, st.to))
    throw Error("mutation broke the reflection-product identity");
  return st;
}

bool verify_unique_complement(const AdaptedFrame& frame, const Selection& sel,
                              int k) {
  MutationStep st = algebraic_mutate(frame, sel, k);
  int found = 0;
  for (int p = 1; p <= frame.size(); ++p) {
    if (std::find(sel.begin(), sel.end(), p) != sel.end()) continue;
    Selection cand = sel;
    cand[k - 1] = p;
    std::sort(cand.begin(), cand.end());
    if (is_reduced_w0(frame, cand)) {
      if (p != st.inserted) return false;
      ++found;
    }
  }
  return found == 1;
}

ExchangeGraph exchange_graph(const AdaptedFrame& frame) {
  ExchangeGraph g;
  g.base.resize(frame.rank());
  for (int i = 0; i < frame.rank(); ++i) g.base[i] = i + 1;

  std::map<Selection, int> index;
  g.vertices.push_back(g.base);
  index[g.base] = 0;
  for (std::size_t head = 0; head < g.vertices.size(); ++head) {
    Selection cur = g.vertices[head];
    for (int k = 1; k <= frame.rank(); ++k) {
      MutationStep st = algebraic_mutate(frame, cur, k);
      auto [it, fresh] = index.emplace(st.to, static_cast<int>(g.vertices.size()));
      if (fresh) g.vertices.push_back(st.to);
      // record each unordered edge once, from the BFS-earlier endpoint
      if (static_cast<int>(head) < it->second) g.edges.push_back(st);
    }
  }
  return g;
}

}  // namespace coxcluster
