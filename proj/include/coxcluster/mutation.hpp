#pragma once

#include <vector>

#include "coxcluster/adapted.hpp"

namespace coxcluster {

enum class ScanSide { left, right };

struct MutationStep {
  Selection from;
  int k = 0;         // direction: index into the sorted selection, 1..n
  int removed = 0;   // = from[k-1]
  int inserted = 0;  // the unique replacement position
  ScanSide scan_side = ScanSide::left;
  Selection to;      // re-sorted result
};

// Exchanges the k-th deleted position for the unique alternative that keeps
// the deleted word reduced for w_0.  The replacement is found by scanning
// barred partial products away from t_k: left scan takes the largest l < t_k
// with s_{j_l}...s_{j_{t_k-1}} applied to alpha_{j_{t_k}} (skipping deleted
// letters) negative, right scan the least such l > t_k in the mirrored
// product.  Exactly one side succeeds on a cluster.
MutationStep algebraic_mutate(const AdaptedFrame& frame, const Selection& sel,
                              int k);

// Independent check: tries every replacement position by brute force and
// confirms that exactly one yields a cluster, namely algebraic_mutate's.
bool verify_unique_complement(const AdaptedFrame& frame, const Selection& sel,
                              int k);

struct ExchangeGraph {
  Selection base;
  std::vector<Selection> vertices;   // BFS discovery order from base
  std::vector<MutationStep> edges;   // one step per unordered edge
};

// BFS over all clusters under the n mutation directions, starting from the
// projective slice (1..n).
ExchangeGraph exchange_graph(const AdaptedFrame& frame);

}  // namespace coxcluster
