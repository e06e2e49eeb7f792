#pragma once

#include <optional>
#include <vector>

#include "coxcluster/braid.hpp"
#include "coxcluster/reptheory.hpp"

namespace coxcluster {

// Quadratic-form test: beta is a real root iff its self-pairing equals that
// of some simple root.
bool is_real_root(const CartanData& cd, const Root& beta);

struct PrefixVerdict {
  enum class Status { yes, no, unknown };
  Status status = Status::unknown;
  // On yes: a reflection factorization of C of length n whose first entry
  // is beta.
  std::optional<Factorization> witness;
  int depth_used = 0;
};

// Whether s_beta is a prefix of the Coxeter element, i.e. whether beta is a
// real Schur root of the quiver.  Finite type is decided exhaustively; in
// infinite type a bounded Hurwitz search from the simple-roots factorization
// reports yes-with-witness or unknown (never no).  Default depth: 10n moves.
PrefixVerdict prefix_test(const CartanData& cd, const Root& beta,
                          std::optional<int> depth = std::nullopt);

// First r entries of a full factorization of C, reversed: the exceptional
// sequence generating the subcategory attached to the prefix t_1...t_r.
// Returned as frame indices; validated against the Hom/Ext tables.
std::vector<int> prefix_to_generators(const RepTheory& rt,
                                      const Factorization& witness, int r);

// All left products t_1...t_k over all reflection factorizations of C and
// all 0 <= k <= n, deduplicated, in a deterministic order.
std::vector<GroupElement> prefix_set(const CartanData& cd);

}  // namespace coxcluster
