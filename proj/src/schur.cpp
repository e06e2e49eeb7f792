#include "coxcluster/schur.hpp"

#include <algorithm>
#include <unordered_set>

namespace coxcluster {

bool is_real_root(const CartanData& cd, const Root& beta) {
  if (static_cast<int>(beta.size()) != cd.rank())
    throw DomainError("root has wrong rank");
  if (is_zero(beta)) throw DomainError("zero vector is not a root");
  Int q = cd.pair2(beta, beta);
  for (int i = 1; i <= cd.rank(); ++i)
    if (q == 2 * cd.d(i)) return true;
  return false;
}

namespace {

Factorization front_witness(const Factorization& f, const Root& beta) {
  for (int i = 1; i <= f.size(); ++i)
    if (f.root(i) == beta) return move_to_front(f, i).first;
  throw Error("witness factorization does not contain the root");
}

}  // namespace

PrefixVerdict prefix_test(const CartanData& cd, const Root& beta,
                          std::optional<int> depth) {
  if (!is_real_root(cd, beta))
    throw DomainError("prefix test requires a real root");
  if (!is_positive(beta))
    throw DomainError("prefix test requires a positive root");

  int n = cd.rank();
  PrefixVerdict v;
  if (cd.finite_type()) {
    // Exhaustive: beta is a prefix root iff it appears in some length-n
    // factorization of C; any appearance can be braided to the front.
    auto all = enumerate_factorizations(cd, coxeter_element(cd), n);
    for (const Factorization& f : all) {
      const auto& roots = f.roots();
      if (std::find(roots.begin(), roots.end(), beta) != roots.end()) {
        v.status = PrefixVerdict::Status::yes;
        v.witness = front_witness(f, beta);
        return v;
      }
    }
    v.status = PrefixVerdict::Status::no;
    return v;
  }

  std::vector<Root> simples;
  for (int i = 1; i <= n; ++i) {
    Root e(n, 0);
    e[i - 1] = 1;
    simples.push_back(std::move(e));
  }
  OrbitOptions opts;
  opts.depth_limit = depth.value_or(10 * n);
  opts.count_factorizations = false;
  OrbitReport rep = hurwitz_orbit(Factorization(cd, simples), opts);
  v.depth_used = rep.depth_used;
  for (const Factorization& f : rep.orbit) {
    const auto& roots = f.roots();
    if (std::find(roots.begin(), roots.end(), beta) != roots.end()) {
      v.status = PrefixVerdict::Status::yes;
      v.witness = front_witness(f, beta);
      return v;
    }
  }
  v.status = PrefixVerdict::Status::unknown;
  return v;
}

std::vector<int> prefix_to_generators(const RepTheory& rt,
                                      const Factorization& witness, int r) {
  const AdaptedFrame& frame = rt.frame();
  if (witness.size() != frame.rank())
    throw DomainError("witness must be a full factorization");
  if (!(witness.product() == frame.coxeter()))
    throw DomainError("witness does not multiply to the Coxeter element");
  if (r < 0 || r > witness.size())
    throw DomainError("prefix length out of range");

  std::vector<int> gens;
  for (int i = r; i >= 1; --i)
    gens.push_back(frame.frame_index(witness.root(i)));
  if (!rt.is_exceptional_sequence(gens))
    throw Error("prefix generators fail the exceptional-sequence test");
  return gens;
}

std::vector<GroupElement> prefix_set(const CartanData& cd) {
  if (!cd.finite_type())
    throw DomainError("prefix set enumeration requires finite type");
  auto all = enumerate_factorizations(cd, coxeter_element(cd), cd.rank());
  std::unordered_set<std::vector<Int>, RootHash> seen;
  std::vector<GroupElement> out;
  for (const Factorization& f : all) {
    GroupElement g(cd.rank());
    for (int k = 0; k <= f.size(); ++k) {
      if (k) g = g * reflection_in(cd, f.root(k));
      if (seen.insert(g.data()).second) out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end(), [](const GroupElement& a,
                                       const GroupElement& b) {
    return a.data() < b.data();
  });
  return out;
}

}  // namespace coxcluster
