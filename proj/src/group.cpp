#include "coxcluster/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace coxcluster {

GroupElement::GroupElement(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, 0) {
  for (int i = 1; i <= n; ++i) at(i, i) = 1;
}

GroupElement GroupElement::from_matrix(int n, std::vector<Int> entries) {
  if (static_cast<int>(entries.size()) != n * n)
    throw DomainError("matrix size mismatch");
  GroupElement g(n);
  g.m_ = std::move(entries);
  return g;
}

Root GroupElement::apply(const Root& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw DomainError("vector rank mismatch");
  Root y(n_, 0);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) y[i - 1] += at(i, j) * x[j - 1];
  return y;
}

Root GroupElement::column(int j) const {
  Root y(n_);
  for (int i = 1; i <= n_; ++i) y[i - 1] = at(i, j);
  return y;
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (n_ != other.n_) throw DomainError("rank mismatch in product");
  GroupElement r(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      Int acc = 0;
      for (int k = 1; k <= n_; ++k) acc += at(i, k) * other.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

bool GroupElement::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Int determinant(const std::vector<Int>& m, int n) {
  // Bareiss fraction-free elimination.
  std::vector<Int> a = m;
  Int prev = 1;
  Int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r * n + k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c) {
        a[r * n + c] =
            (a[r * n + c] * a[k * n + k] - a[r * n + k] * a[k * n + c]) / prev;
      }
    prev = a[k * n + k];
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

GroupElement GroupElement::inverse() const {
  Int det = determinant(m_, n_);
  if (det != 1 && det != -1)
    throw DomainError("group element determinant is not a unit");
  // Adjugate; cheap at these ranks.
  GroupElement r(n_);
  int k = n_ - 1;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      std::vector<Int> minor;
      minor.reserve(static_cast<std::size_t>(k) * k);
      for (int r2 = 0; r2 < n_; ++r2) {
        if (r2 == j) continue;
        for (int c2 = 0; c2 < n_; ++c2) {
          if (c2 == i) continue;
          minor.push_back(m_[r2 * n_ + c2]);
        }
      }
      Int cof = (k == 0) ? 1 : determinant(minor, k);
      if ((i + j) % 2) cof = -cof;
      r.m_[i * n_ + j] = cof * det;  // det = +-1, so division is a product
    }
  return r;
}

int matrix_rank(std::vector<Int> m, int rows, int cols) {
  std::vector<__int128> a(m.begin(), m.end());
  auto gcd128 = [](__int128 x, __int128 y) {
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y) {
      __int128 t = x % y;
      x = y;
      y = t;
    }
    return x;
  };
  auto reduce_row = [&](int r) {
    __int128 g = 0;
    for (int c = 0; c < cols && g != 1; ++c) g = gcd128(g, a[r * cols + c]);
    if (g > 1)
      for (int c = 0; c < cols; ++c) a[r * cols + c] /= g;
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r * cols + col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != rank)
      for (int c = 0; c < cols; ++c)
        std::swap(a[rank * cols + c], a[p * cols + c]);
    __int128 piv = a[rank * cols + col];
    for (int r = rank + 1; r < rows; ++r) {
      __int128 v = a[r * cols + col];
      if (v == 0) continue;
      for (int c = col; c < cols; ++c)
        a[r * cols + c] = a[r * cols + c] * piv - a[rank * cols + c] * v;
      reduce_row(r);
    }
    ++rank;
  }
  return rank;
}

int reflection_length(const GroupElement& w) {
  int n = w.rank();
  std::vector<Int> m = w.data();
  for (int i = 0; i < n; ++i) m[i * n + i] -= 1;
  return matrix_rank(std::move(m), n, n);
}

GroupElement simple_reflection(const CartanData& cd, int i) {
  int n = cd.rank();
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  GroupElement s(n);
  for (int j = 1; j <= n; ++j) s.at(i, j) = (i == j ? -1 : -cd.a(i, j));
  return s;
}

Root reflect_in_root(const CartanData& cd, const Root& beta, const Root& x) {
  Int den = cd.pair2(beta, beta);  // 2 B(beta,beta)
  if (den <= 0)
    throw DomainError("reflection in a non-real root: " + root_to_string(beta));
  Int num = 2 * cd.pair2(beta, x);  // 4 B(beta,x)
  if (num % den != 0)
    throw DomainError("non-integral reflection coefficient; " +
                      root_to_string(beta) + " is not a real root here");
  Int c = num / den;
  Root y = x;
  for (int i = 0; i < cd.rank(); ++i) y[i] -= c * beta[i];
  return y;
}

GroupElement reflection_in(const CartanData& cd, const Root& beta) {
  int n = cd.rank();
  GroupElement g(n);
  for (int j = 1; j <= n; ++j) {
    Root e(n, 0);
    e[j - 1] = 1;
    Root img = reflect_in_root(cd, beta, e);
    for (int i = 1; i <= n; ++i) g.at(i, j) = img[i - 1];
  }
  return g;
}

Root conjugate_reflection(const CartanData& cd, const GroupElement& w,
                          const Root& beta) {
  if (!is_positive(beta))
    throw DomainError("conjugate_reflection expects a positive root");
  return abs_root(w.apply(beta));
}

GroupElement word_to_element(const CartanData& cd, const Word& w) {
  GroupElement g(cd.rank());
  for (int letter : w) g = g * simple_reflection(cd, letter);
  return g;
}

GroupElement coxeter_element(const CartanData& cd) {
  Word w(cd.rank());
  std::iota(w.begin(), w.end(), 1);
  return word_to_element(cd, w);
}

int length(const CartanData& cd, GroupElement w) {
  int n = cd.rank();
  int len = 0;
  while (!w.is_identity()) {
    int descent = 0;
    for (int i = 1; i <= n; ++i) {
      if (is_negative(w.column(i))) {
        descent = i;
        break;
      }
    }
    if (!descent)
      throw Error("length: no descent found for a non-identity element");
    w = w * simple_reflection(cd, descent);
    ++len;
  }
  return len;
}

bool is_reduced(const CartanData& cd, const Word& w) {
  return length(cd, word_to_element(cd, w)) == static_cast<int>(w.size());
}

std::vector<Root> positive_roots(const CartanData& cd) {
  if (!cd.finite_type())
    throw DomainError("positive_roots requires finite type");
  int n = cd.rank();
  std::set<Root> seen;
  std::vector<Root> work;
  std::vector<GroupElement> gens;
  for (int i = 1; i <= n; ++i) {
    gens.push_back(simple_reflection(cd, i));
    Root e(n, 0);
    e[i - 1] = 1;
    seen.insert(e);
    work.push_back(e);
  }
  while (!work.empty()) {
    Root r = work.back();
    work.pop_back();
    for (const GroupElement& s : gens) {
      Root img = s.apply(r);
      if (is_positive(img) && seen.insert(img).second) work.push_back(img);
    }
  }
  std::vector<Root> out(seen.begin(), seen.end());
  auto height = [](const Root& r) {
    return std::accumulate(r.begin(), r.end(), Int{0});
  };
  std::sort(out.begin(), out.end(), [&](const Root& x, const Root& y) {
    Int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return out;
}

std::vector<Root> projective_roots(const CartanData& cd) {
  int n = cd.rank();
  std::vector<Root> out;
  out.reserve(n);
  GroupElement prefix(n);
  for (int i = 1; i <= n; ++i) {
    Root e(n, 0);
    e[i - 1] = 1;
    out.push_back(prefix.apply(e));
    prefix = prefix * simple_reflection(cd, i);
  }
  return out;
}

GroupElement longest_element(const CartanData& cd) {
  if (!cd.finite_type())
    throw DomainError("longest element requires finite type");
  int n = cd.rank();
  GroupElement v(n);
  for (;;) {
    int ascent = 0;
    for (int i = 1; i <= n; ++i)
      if (is_positive(v.column(i))) {
        ascent = i;
        break;
      }
    if (!ascent) return v;
    v = v * simple_reflection(cd, ascent);
  }
}

}  // namespace coxcluster
