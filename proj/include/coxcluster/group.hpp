#pragma once

#include <cstddef>
#include <vector>

#include "coxcluster/cartan.hpp"
#include "coxcluster/types.hpp"

namespace coxcluster {

// Element of the Weyl group as its faithful integer matrix on the root
// lattice, simple-root basis.  Equality is matrix equality.
class GroupElement {
 public:
  explicit GroupElement(int n);  // identity
  static GroupElement from_matrix(int n, std::vector<Int> entries);

  int rank() const { return n_; }
  Int at(int i, int j) const { return m_[(i - 1) * n_ + (j - 1)]; }
  Int& at(int i, int j) { return m_[(i - 1) * n_ + (j - 1)]; }

  Root apply(const Root& x) const;
  Root column(int j) const;  // image of alpha_j

  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;

  bool operator==(const GroupElement& other) const { return m_ == other.m_; }
  bool operator!=(const GroupElement& other) const { return m_ != other.m_; }
  bool is_identity() const;

  const std::vector<Int>& data() const { return m_; }

  struct Hash {
    std::size_t operator()(const GroupElement& g) const {
      return RootHash{}(g.m_);
    }
  };

 private:
  int n_;
  std::vector<Int> m_;
};

// Reflection convention, used everywhere: s_i(alpha_j) = alpha_j - a_ij alpha_i
// with a_ij = 2 B(alpha_i, alpha_j) / B(alpha_i, alpha_i).
GroupElement simple_reflection(const CartanData& cd, int i);

// s_beta(x) = x - (2 B(beta,x) / B(beta,beta)) beta.  Errors when the
// coefficient is non-integral, which signals that beta is not a real root.
Root reflect_in_root(const CartanData& cd, const Root& beta, const Root& x);

// Matrix of s_beta.
GroupElement reflection_in(const CartanData& cd, const Root& beta);

// |w(beta)|; the reflection in the result equals w s_beta w^{-1}.
Root conjugate_reflection(const CartanData& cd, const GroupElement& w,
                          const Root& beta);

GroupElement word_to_element(const CartanData& cd, const Word& w);
GroupElement coxeter_element(const CartanData& cd);

// Coxeter length by greedy descent; works in infinite type too.
int length(const CartanData& cd, GroupElement w);
bool is_reduced(const CartanData& cd, const Word& w);

// Finite type only.  Deterministic order: by height, then lexicographic.
std::vector<Root> positive_roots(const CartanData& cd);

// p_i = s_1 ... s_{i-1}(alpha_i).
std::vector<Root> projective_roots(const CartanData& cd);

// Longest element w_0; finite type only.
GroupElement longest_element(const CartanData& cd);

// Absolute (reflection) length: rank of (matrix - identity).  Valid in
// finite Weyl groups (Carter's lemma); used to prune factorization search.
int reflection_length(const GroupElement& w);

Int determinant(const std::vector<Int>& m, int n);
int matrix_rank(std::vector<Int> m, int rows, int cols);

}  // namespace coxcluster
