#pragma once

#include <string>
#include <vector>

#include "coxcluster/types.hpp"

namespace coxcluster {

struct Arrow {
  int from = 0;
  int to = 0;
  int mult = 1;
};

// A generalized symmetrizable Cartan matrix together with a symmetrizer and
// an acyclic quiver orientation.  Vertices are renumbered at construction so
// that 1,2,...,n is a sink sequence, making s_1 s_2 ... s_n adapted; the
// original labels are kept for I/O.
//
// The bilinear form is carried by pair2(x,y) = x^T diag(d) A y = 2 B(x,y),
// in the scale where B(alpha_i, alpha_i) = d_i.  All arithmetic is exact.
class CartanData {
 public:
  // label in {A_n, B_n, C_n, D_n, E6, E7, E8, F4, G2}, e.g. "A4" or "D4".
  // Default orientation: every Dynkin edge points toward its smaller vertex.
  static CartanData from_type(const std::string& label);

  // Arbitrary acyclic quiver; parallel arrows allowed (multiplicity counts).
  static CartanData from_quiver(int n, std::vector<Arrow> arrows);

  int rank() const { return n_; }
  Int a(int i, int j) const { return cartan_[(i - 1) * n_ + (j - 1)]; }
  Int d(int i) const { return sym_[i - 1]; }

  // x^T diag(d) A y == 2 B(x,y); symmetric in its arguments.
  Int pair2(const Root& x, const Root& y) const;

  bool finite_type() const { return finite_; }
  bool simply_laced() const;
  const std::vector<Arrow>& arrows() const { return arrows_; }

  // Original vertex label of adapted vertex i.
  int original_label(int i) const { return original_[i - 1]; }

  std::string describe() const { return label_; }

 private:
  CartanData() = default;
  void finish();

  int n_ = 0;
  std::vector<Int> cartan_;
  std::vector<Int> sym_;
  std::vector<Arrow> arrows_;
  std::vector<int> original_;
  bool finite_ = false;
  std::string label_;
};

}  // namespace coxcluster
