#include "coxcluster/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "coxcluster/group.hpp"

namespace coxcluster {

namespace {

struct Edge {
  int i, j;
  Int aij, aji;  // Cartan entries a(i,j), a(j,i)
};

void set_entry(std::vector<Int>& c, int n, int i, int j, Int v) {
  c[(i - 1) * n + (j - 1)] = v;
}

}  // namespace

Int CartanData::pair2(const Root& x, const Root& y) const {
  Int acc = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      acc += x[i - 1] * d(i) * a(i, j) * y[j - 1];
  return acc;
}

bool CartanData::simply_laced() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (i != j && a(i, j) < -1) return false;
  return true;
}

CartanData CartanData::from_type(const std::string& label) {
  if (label.empty()) throw DomainError("empty type label");
  char fam = static_cast<char>(std::toupper(label[0]));
  int n = 0;
  try {
    n = std::stoi(label.substr(1));
  } catch (...) {
    throw DomainError("unparsable type label: " + label);
  }
  if (fam == 'H' || fam == 'I')
    throw DomainError("non-crystallographic type rejected: " + label);

  std::vector<Edge> edges;
  auto chain = [&](int upto) {
    for (int i = 1; i < upto; ++i) edges.push_back({i, i + 1, -1, -1});
  };
  switch (fam) {
    case 'A':
      if (n < 1) throw DomainError("bad rank for type A");
      chain(n);
      break;
    case 'B':
      if (n < 2) throw DomainError("bad rank for type B");
      chain(n - 1);
      edges.push_back({n - 1, n, -2, -1});
      break;
    case 'C':
      if (n < 2) throw DomainError("bad rank for type C");
      chain(n - 1);
      edges.push_back({n - 1, n, -1, -2});
      break;
    case 'D':
      if (n < 3) throw DomainError("bad rank for type D");
      chain(n - 1);
      edges.push_back({n - 2, n, -1, -1});
      break;
    case 'E':
      if (n < 6 || n > 8) throw DomainError("bad rank for type E");
      edges.push_back({1, 3, -1, -1});
      edges.push_back({2, 4, -1, -1});
      for (int i = 3; i < n; ++i) edges.push_back({i, i + 1, -1, -1});
      break;
    case 'F':
      if (n != 4) throw DomainError("bad rank for type F");
      edges.push_back({1, 2, -1, -1});
      edges.push_back({2, 3, -2, -1});
      edges.push_back({3, 4, -1, -1});
      break;
    case 'G':
      if (n != 2) throw DomainError("bad rank for type G");
      edges.push_back({1, 2, -3, -1});
      break;
    default:
      throw DomainError("unknown type label: " + label);
  }

  CartanData cd;
  cd.n_ = n;
  cd.label_ = std::string(1, fam) + std::to_string(n);
  cd.cartan_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 1; i <= n; ++i) set_entry(cd.cartan_, n, i, i, 2);
  for (const Edge& e : edges) {
    set_entry(cd.cartan_, n, e.i, e.j, e.aij);
    set_entry(cd.cartan_, n, e.j, e.i, e.aji);
    // Edge oriented toward the smaller vertex: 1..n is then a sink sequence.
    cd.arrows_.push_back({std::max(e.i, e.j), std::min(e.i, e.j), 1});
  }
  cd.original_.resize(n);
  std::iota(cd.original_.begin(), cd.original_.end(), 1);
  cd.finish();
  return cd;
}

CartanData CartanData::from_quiver(int n, std::vector<Arrow> arrows) {
  if (n < 1) throw DomainError("quiver must have at least one vertex");
  for (const Arrow& ar : arrows) {
    if (ar.from < 1 || ar.from > n || ar.to < 1 || ar.to > n || ar.from == ar.to)
      throw DomainError("bad arrow in quiver");
    if (ar.mult < 1) throw DomainError("arrow multiplicity must be positive");
  }

  // Renumber by repeatedly removing sinks, smallest original label first.
  std::vector<int> outdeg(n + 1, 0);
  std::vector<std::vector<int>> into(n + 1);  // into[v] = sources of arrows to v
  for (const Arrow& ar : arrows) {
    outdeg[ar.from] += 1;
    into[ar.to].push_back(ar.from);
  }
  std::vector<int> newlabel(n + 1, 0), order;
  std::set<int> alive;
  for (int v = 1; v <= n; ++v) alive.insert(v);
  while (!alive.empty()) {
    int sink = 0;
    for (int v : alive)
      if (outdeg[v] == 0) {
        sink = v;
        break;
      }
    if (!sink) throw DomainError("quiver orientation is cyclic");
    order.push_back(sink);
    alive.erase(sink);
    for (int u : into[sink])
      if (alive.count(u)) outdeg[u] -= 1;
  }
  for (int k = 0; k < n; ++k) newlabel[order[k]] = k + 1;

  CartanData cd;
  cd.n_ = n;
  cd.label_ = "quiver";
  cd.cartan_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 1; i <= n; ++i) set_entry(cd.cartan_, n, i, i, 2);
  std::map<std::pair<int, int>, int> mult;
  for (const Arrow& ar : arrows)
    mult[{newlabel[ar.from], newlabel[ar.to]}] += ar.mult;
  for (const auto& [key, m] : mult) {
    auto [u, v] = key;
    Int cur = cd.a(u, v);
    set_entry(cd.cartan_, n, u, v, cur - m);
    set_entry(cd.cartan_, n, v, u, cd.a(v, u) - m);
    cd.arrows_.push_back({u, v, m});
  }
  std::sort(cd.arrows_.begin(), cd.arrows_.end(),
            [](const Arrow& x, const Arrow& y) {
              return std::tie(x.from, x.to) < std::tie(y.from, y.to);
            });
  cd.original_.resize(n);
  for (int v = 1; v <= n; ++v) cd.original_[newlabel[v] - 1] = v;
  cd.finish();
  return cd;
}

void CartanData::finish() {
  for (int i = 1; i <= n_; ++i) {
    if (a(i, i) != 2) throw DomainError("Cartan diagonal must be 2");
    for (int j = 1; j <= n_; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) throw DomainError("off-diagonal Cartan entry positive");
      if ((a(i, j) == 0) != (a(j, i) == 0))
        throw DomainError("Cartan zero pattern not symmetric");
    }
  }

  // Symmetrizer: propagate d along Dynkin edges, then scale to integers.
  if (sym_.empty()) {
    std::vector<Int> num(n_ + 1, 0), den(n_ + 1, 0);
    for (int start = 1; start <= n_; ++start) {
      if (num[start]) continue;
      num[start] = 1;
      den[start] = 1;
      std::vector<int> stack{start};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 1; v <= n_; ++v) {
          if (v == u || a(u, v) == 0) continue;
          // d_u a_uv = d_v a_vu
          Int nv = num[u] * (-a(u, v));
          Int dv = den[u] * (-a(v, u));
          Int g = std::gcd(nv, dv);
          nv /= g;
          dv /= g;
          if (!num[v]) {
            num[v] = nv;
            den[v] = dv;
            stack.push_back(v);
          } else if (num[v] * dv != nv * den[v]) {
            throw DomainError("Cartan matrix is not symmetrizable");
          }
        }
      }
    }
    Int l = 1;
    for (int v = 1; v <= n_; ++v) l = std::lcm(l, den[v]);
    sym_.resize(n_);
    for (int v = 1; v <= n_; ++v) sym_[v - 1] = num[v] * (l / den[v]);
    Int g = 0;
    for (Int s : sym_) g = std::gcd(g, s);
    for (Int& s : sym_) s /= g;
  }
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (d(i) * a(i, j) != d(j) * a(j, i))
        throw DomainError("symmetrizer check failed");

  // Finite type iff the symmetrized matrix is positive definite.
  finite_ = true;
  for (int k = 1; k <= n_ && finite_; ++k) {
    std::vector<Int> minor(static_cast<std::size_t>(k) * k);
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j)
        minor[(i - 1) * k + (j - 1)] = d(i) * a(i, j);
    if (determinant(minor, k) <= 0) finite_ = false;
  }
}

}  // namespace coxcluster
