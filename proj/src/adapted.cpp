#include "coxcluster/adapted.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace coxcluster {

namespace {

// Backtracking construction of an adapted reduced word for w_0 whose root
// sequence places the injective dimension vectors last, in order 1..n.
// The paper assumes such a word exists "without loss of generality"; we
// search for one and fail loudly if none exists.
struct WordSearch {
  const CartanData& cd;
  int n, nu;
  std::vector<Root> injectives;
  Word word;

  WordSearch(const CartanData& c, int nu_count, std::vector<Root> inj)
      : cd(c), n(c.rank()), nu(nu_count), injectives(std::move(inj)) {}

  bool run() {
    std::vector<std::multiset<int>> out(n + 1);
    for (const Arrow& a : cd.arrows())
      for (int k = 0; k < a.mult; ++k) out[a.from].insert(a.to);
    std::vector<std::multiset<int>> in(n + 1);
    for (int u = 1; u <= n; ++u)
      for (int v : out[u]) in[v].insert(u);
    GroupElement v(n);
    return extend(out, in, v, 1);
  }

  bool extend(std::vector<std::multiset<int>>& out,
              std::vector<std::multiset<int>>& in, const GroupElement& v,
              int t) {
    if (t > nu) return true;
    for (int i = 1; i <= n; ++i) {
      if (!out[i].empty()) continue;  // not a sink
      Root r = v.column(i);
      if (!is_positive(r)) continue;  // reducedness
      // Word positions nu-n+1..nu must carry dim I(1)..dim I(n); earlier
      // positions must avoid them (the roots of a reduced word are distinct).
      int slot = t - (nu - n);
      if (slot > 0) {
        if (r != injectives[slot - 1]) continue;
      } else if (std::find(injectives.begin(), injectives.end(), r) !=
                 injectives.end()) {
        continue;
      }
      // reverse arrows at i
      auto saved_in = in[i];
      for (int u : saved_in) {
        out[u].erase(out[u].find(i));
        out[i].insert(u);
        in[u].insert(i);
      }
      in[i].clear();
      word.push_back(i);
      if (extend(out, in, v * simple_reflection(cd, i), t + 1)) return true;
      word.pop_back();
      // undo
      for (int u : out[i]) {
        in[u].erase(in[u].find(i));
        out[u].insert(i);
      }
      out[i].clear();
      in[i] = saved_in;
    }
    return false;
  }
};

}  // namespace

AdaptedFrame AdaptedFrame::build(const CartanData& input) {
  if (!input.finite_type())
    throw DomainError("adapted frame requires finite type");
  AdaptedFrame f;
  f.cd_ = std::make_shared<const CartanData>(input);
  const CartanData& cd = *f.cd_;
  int n = cd.rank();

  std::vector<Root> phi = positive_roots(cd);
  f.nu_ = static_cast<int>(phi.size());
  f.proj_ = projective_roots(cd);
  f.coxeter_ = coxeter_element(cd);
  GroupElement cinv = f.coxeter_.inverse();

  f.inj_.reserve(n);
  for (int k = 1; k <= n; ++k) {
    Root img = cinv.apply(f.proj_[k - 1]);
    if (!is_negative(img))
      throw Error("projective root not sent negative by C^{-1}");
    f.inj_.push_back(negated(img));  // C(dim I(k)) = -p_k
  }

  WordSearch search(cd, f.nu_, f.inj_);
  if (!search.run())
    throw Error(
        "no adapted reduced word for w0 with injectives last was found");
  f.w0_word_ = search.word;

  f.j_.resize(n);
  std::iota(f.j_.begin(), f.j_.end(), 1);
  f.j_.insert(f.j_.end(), f.w0_word_.begin(), f.w0_word_.end());

  GroupElement prefix(n);
  for (int t = 1; t <= f.size(); ++t) {
    f.alpha_.push_back(prefix.column(f.letter(t)));
    prefix = prefix * simple_reflection(cd, f.letter(t));
  }
  f.w1_ = prefix;
  f.w0_ = word_to_element(cd, f.w0_word_);

  // Invariant checks.
  if (f.w1_ != f.coxeter_ * f.w0_) throw Error("w1 != C w0");
  if (!(f.w0_ * f.w0_).is_identity()) throw Error("w0 is not an involution");
  if (length(cd, f.w0_) != f.nu_) throw Error("w0 word is not reduced");
  std::set<Root> firsts(f.alpha_.begin(), f.alpha_.begin() + f.nu_);
  if (firsts != std::set<Root>(phi.begin(), phi.end()))
    throw Error("alpha^1..alpha^nu is not a permutation of the positive roots");
  for (int k = 1; k <= n; ++k) {
    if (f.alpha_[k - 1] != f.proj_[k - 1])
      throw Error("alpha^k != dim P(k) for k <= n");
    if (f.alpha_[f.nu_ + k - 1] != negated(f.proj_[k - 1]))
      throw Error("alpha^{nu+k} != -dim P(k)");
  }
  // The last n roots of the w0 word itself are the injectives, in order.
  {
    GroupElement prefix(n);
    for (int t = 1; t <= f.nu_; ++t) {
      Root r = prefix.column(f.w0_word_[t - 1]);
      int k = t - (f.nu_ - n);
      if (k > 0 && r != f.inj_[k - 1])
        throw Error("w0 word root " + std::to_string(t) + " != dim I(k)");
      prefix = prefix * simple_reflection(cd, f.w0_word_[t - 1]);
    }
  }

  for (int t = 1; t <= f.size(); ++t)
    f.refl_.push_back(reflection_in(cd, abs_root(f.alpha(t))));
  for (int t = 1; t <= f.nu_; ++t) f.index_[f.alpha_[t - 1]] = t;
  return f;
}

int AdaptedFrame::frame_index(const Root& positive_root) const {
  auto it = index_.find(positive_root);
  if (it == index_.end())
    throw DomainError("not a positive root of this frame: " +
                      root_to_string(positive_root));
  return it->second;
}

void validate_selection(const AdaptedFrame& frame, const Selection& sel) {
  if (static_cast<int>(sel.size()) != frame.rank())
    throw DomainError("selection must have exactly n positions");
  for (std::size_t i = 0; i < sel.size(); ++i) {
    if (sel[i] < 1 || sel[i] > frame.size())
      throw DomainError("selection position out of range");
    if (i && sel[i] <= sel[i - 1])
      throw DomainError("selection positions must be strictly increasing");
  }
}

Word deleted_word(const AdaptedFrame& frame, const Selection& sel) {
  validate_selection(frame, sel);
  Word out;
  out.reserve(frame.nu());
  std::size_t k = 0;
  for (int t = 1; t <= frame.size(); ++t) {
    if (k < sel.size() && sel[k] == t) {
      ++k;
      continue;
    }
    out.push_back(frame.letter(t));
  }
  return out;
}

bool is_reduced_w0(const AdaptedFrame& frame, const Selection& sel) {
  // The deleted word always has nu letters, so equality with w0 (whose
  // length is nu) already forces reducedness.
  return word_to_element(frame.cartan(), deleted_word(frame, sel)) ==
         frame.w0();
}

bool condition3(const AdaptedFrame& frame, const Selection& sel) {
  validate_selection(frame, sel);
  GroupElement g(frame.rank());
  for (int i = frame.rank(); i >= 1; --i) g = g * frame.reflection(sel[i - 1]);
  return g == frame.coxeter();
}

bool lemma34_identity(const AdaptedFrame& frame, const Selection& sel) {
  validate_selection(frame, sel);
  GroupElement g(frame.rank());
  for (int i = 1; i <= frame.rank(); ++i) g = g * frame.reflection(sel[i - 1]);
  return g * frame.w1() ==
         word_to_element(frame.cartan(), deleted_word(frame, sel));
}

std::vector<int> rho(const CartanData& cd) {
  GroupElement w0 = longest_element(cd);
  std::vector<int> perm(cd.rank() + 1, 0);
  for (int i = 1; i <= cd.rank(); ++i) {
    Root img = negated(w0.column(i));  // -w0(alpha_i) = alpha_{rho(i)}
    int target = 0;
    for (int j = 1; j <= cd.rank(); ++j) {
      if (img[j - 1] == 1) {
        if (target) throw Error("-w0(alpha_i) is not simple");
        target = j;
      } else if (img[j - 1] != 0) {
        throw Error("-w0(alpha_i) is not simple");
      }
    }
    perm[i] = target;
  }
  return perm;
}

LongWord long_word(const AdaptedFrame& frame, const Selection& sel,
                   int copies) {
  validate_selection(frame, sel);
  if (copies < 1) throw DomainError("long word needs at least one copy");
  std::vector<int> perm = rho(frame.cartan());
  LongWord lw;
  lw.block_len = frame.size();
  std::vector<char> mask(frame.size() + 1, 0);
  for (int t : sel) mask[t] = 1;
  std::vector<int> letters(frame.size());
  for (int t = 1; t <= frame.size(); ++t) letters[t - 1] = frame.letter(t);
  for (int c = 0; c < copies; ++c) {
    for (int t = 1; t <= frame.size(); ++t) {
      lw.letters.push_back(letters[t - 1]);
      lw.deleted.push_back(mask[t]);
    }
    for (int& l : letters) l = perm[l];  // next block is rho-twisted
  }
  return lw;
}

std::map<int, int> projective_positions(const AdaptedFrame& frame,
                                        const Selection& sel) {
  if (!is_reduced_w0(frame, sel))
    throw DomainError("projective positions require a cluster selection");
  std::map<int, int> out;
  int copies = 2;
  for (int t : sel) {
    int target = frame.letter(t);
    int found = 0;
    while (!found && copies <= 8) {
      LongWord lw = long_word(frame, sel, copies);
      for (int p = t + 1; p <= static_cast<int>(lw.letters.size()); ++p) {
        if (!lw.deleted[p - 1] && lw.letters[p - 1] == target) {
          found = p;
          break;
        }
      }
      if (!found) copies *= 2;  // extend lazily
    }
    if (!found) throw Error("no matching undeleted letter in the long word");
    out[t] = found;
  }
  return out;
}

LeveledQuiver ar_quiver_from_word(const AdaptedFrame& frame,
                                  const Selection& sel) {
  if (!is_reduced_w0(frame, sel))
    throw DomainError("AR quiver from word requires a cluster selection");
  const CartanData& cd = frame.cartan();
  LongWord lw = long_word(frame, sel, 2);
  int len = frame.size();

  LeveledQuiver q;
  std::vector<int> verts;  // undeleted positions of the first block
  for (int p = 1; p <= len; ++p)
    if (!lw.deleted[p - 1]) {
      verts.push_back(p);
      q.vertices.push_back({p, lw.letters[p - 1]});
    }

  auto adjacent = [&](int a, int b) { return a != b && cd.a(a, b) != 0; };
  int total = static_cast<int>(lw.letters.size());
  for (int p : verts) {
    int lp = lw.letters[p - 1];
    for (int l2 = 1; l2 <= cd.rank(); ++l2) {
      if (!adjacent(lp, l2)) continue;
      // next occurrence of level l2 after p, not blocked by an occurrence
      // of either level in between
      for (int r = p + 1; r <= total; ++r) {
        if (lw.deleted[r - 1]) continue;
        int lr = lw.letters[r - 1];
        if (lr == l2) {
          int to = ((r - 1) % len) + 1;
          q.arcs.push_back({p, to, r > len});
          break;
        }
        if (lr == lp) break;
      }
    }
  }
  std::sort(q.arcs.begin(), q.arcs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  return q;
}

std::vector<Selection> all_selections(const AdaptedFrame& frame) {
  int n = frame.rank(), m = frame.size();
  std::vector<Selection> out;
  Selection cur(n);
  std::iota(cur.begin(), cur.end(), 1);
  for (;;) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == m - (n - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace coxcluster
