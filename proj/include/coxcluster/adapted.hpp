#pragma once

#include <map>
#include <memory>
#include <vector>

#include "coxcluster/group.hpp"

namespace coxcluster {

// Sorted n-tuple 1 <= t_1 < ... < t_n <= nu+n of deleted positions.
using Selection = std::vector<int>;

// The adapted word data for a finite-type Cartan datum:
//   j_1..j_{n+nu}  with (j_1..j_n) = (1..n) followed by an adapted reduced
//   word for w_0 whose root sequence lists the injectives last, in order
//   1..n;  alpha^t = s_{j_1}...s_{j_{t-1}}(alpha_{j_t}).
// Positions 1..nu carry each positive root once; position nu+k carries
// -dim P(k).  All invariants are verified at construction.
class AdaptedFrame {
 public:
  static AdaptedFrame build(const CartanData& cd);

  const CartanData& cartan() const { return *cd_; }
  int rank() const { return cd_->rank(); }
  int nu() const { return nu_; }
  int size() const { return nu_ + rank(); }  // nu + n

  int letter(int t) const { return j_[t - 1]; }        // 1 <= t <= nu+n
  const Root& alpha(int t) const { return alpha_[t - 1]; }
  const Word& j_sequence() const { return j_; }
  const Word& w0_word() const { return w0_word_; }     // (i_1..i_nu)
  const GroupElement& w0() const { return w0_; }
  const GroupElement& w1() const { return w1_; }
  const GroupElement& coxeter() const { return coxeter_; }

  // Matrix of s_{|alpha^t|}, precomputed.
  const GroupElement& reflection(int t) const { return refl_[t - 1]; }

  // Frame position 1..nu of a positive root; throws if unknown.
  int frame_index(const Root& positive_root) const;

  const std::vector<Root>& projectives() const { return proj_; }
  const std::vector<Root>& injectives() const { return inj_; }

 private:
  AdaptedFrame() = default;

  std::shared_ptr<const CartanData> cd_;  // owned copy: frames outlive input
  int nu_ = 0;
  Word j_;
  Word w0_word_;
  std::vector<Root> alpha_;
  std::vector<GroupElement> refl_;
  GroupElement w0_{0}, w1_{0}, coxeter_{0};
  std::vector<Root> proj_, inj_;
  std::map<Root, int> index_;
};

void validate_selection(const AdaptedFrame& frame, const Selection& sel);

// The length-nu word for w_1 with the n selected letters removed.
Word deleted_word(const AdaptedFrame& frame, const Selection& sel);

// Theorem-main condition (4).
bool is_reduced_w0(const AdaptedFrame& frame, const Selection& sel);

// Theorem-main condition (3): s_{alpha^{t_n}} ... s_{alpha^{t_1}} == C.
bool condition3(const AdaptedFrame& frame, const Selection& sel);

// (s_{alpha^{t_1}} ... s_{alpha^{t_n}}) w_1 == element of the deleted word;
// holds for every selection, cluster or not.
bool lemma34_identity(const AdaptedFrame& frame, const Selection& sel);

// Letter permutation induced by conjugation by w_0: w_0 s_i w_0 = s_{rho(i)}.
std::vector<int> rho(const CartanData& cd);

struct LongWord {
  Word letters;               // copies * (nu+n) letters, rho-twisted per block
  std::vector<char> deleted;  // same mask in every block
  int block_len = 0;

  int copies() const { return static_cast<int>(letters.size()) / block_len; }
};

LongWord long_word(const AdaptedFrame& frame, const Selection& sel, int copies);

// For each deleted position t, the next undeleted long-word position carrying
// the same letter.
std::map<int, int> projective_positions(const AdaptedFrame& frame,
                                        const Selection& sel);

struct LeveledQuiver {
  struct Vertex {
    int position;  // undeleted position in the first block
    int level;     // its letter
  };
  struct Arc {
    int from;
    int to;     // identified label (mod nu+n)
    bool wrap;  // crosses into the rho-twisted continuation
  };
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
};

// Leveled AR-quiver sketch of the deleted word, including the wrap arrows
// from the rho-twisted continuation.  Requires is_reduced_w0(sel).
LeveledQuiver ar_quiver_from_word(const AdaptedFrame& frame,
                                  const Selection& sel);

// All C(nu+n, n) selections in lexicographic order.
std::vector<Selection> all_selections(const AdaptedFrame& frame);

}  // namespace coxcluster
