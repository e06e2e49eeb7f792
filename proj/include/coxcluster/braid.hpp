#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coxcluster/group.hpp"

namespace coxcluster {

// Ordered sequence of positive real roots standing for the product of the
// corresponding reflections, read left to right:
//   s_{beta_1} s_{beta_2} ... s_{beta_m} = product().
class Factorization {
 public:
  Factorization(const CartanData& cd, std::vector<Root> roots);

  const CartanData& cartan() const { return *cd_; }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int i) const { return roots_[i - 1]; }  // 1-based
  int size() const { return static_cast<int>(roots_.size()); }

  GroupElement product() const;

  bool operator==(const Factorization& other) const {
    return roots_ == other.roots_;
  }

  std::vector<Int> key() const;  // concatenated coordinates, for hashing

 private:
  const CartanData* cd_;
  std::vector<Root> roots_;
};

// Braid word: +i means sigma_i, -i means sigma_i^{-1}.
using BraidWord = std::vector<int>;

// sigma_i: (.., b_i, b_{i+1}, ..) -> (.., |s_{b_i}(b_{i+1})|, b_i, ..).
Factorization sigma(const Factorization& f, int i);
// (.., b_i, b_{i+1}, ..) -> (.., b_{i+1}, |s_{b_{i+1}}(b_i)|, ..).
Factorization sigma_inverse(const Factorization& f, int i);
Factorization apply_braid(const Factorization& f, const BraidWord& bw);

// Brings entry i to the front via (sigma_{i-1} ... sigma_1)^{-1}; returns the
// new factorization together with the braid word that realizes it.
std::pair<Factorization, BraidWord> move_to_front(const Factorization& f, int i);

// All length-m factorizations of target into reflections, by exhaustive DFS
// over positive roots pruned by absolute length.  Finite type only.
std::vector<Factorization> enumerate_factorizations(const CartanData& cd,
                                                    const GroupElement& target,
                                                    int m);

struct OrbitReport {
  std::vector<Factorization> orbit;  // BFS order from the base
  long long orbit_size = 0;
  long long factorization_count = -1;  // -1 when not enumerated
  bool transitive = false;
  bool truncated = false;
  int depth_used = 0;

  // Braid word reaching orbit element idx (0-based) from the base.
  BraidWord witness(int idx) const;

  std::vector<int> parent;   // BFS tree, -1 at the base
  std::vector<int> move;     // generator applied at the tree edge
};

struct ResourceError : Error {
  ResourceError(const std::string& what, OrbitReport report)
      : Error(what), partial(std::move(report)) {}
  OrbitReport partial;
};

struct OrbitOptions {
  std::optional<int> depth_limit;    // required in infinite type
  long long node_limit = 2'000'000;  // exceeding this throws ResourceError
  bool count_factorizations = true;  // fill factorization_count in finite type
};

OrbitReport hurwitz_orbit(const Factorization& base, OrbitOptions opts = {});

}  // namespace coxcluster
