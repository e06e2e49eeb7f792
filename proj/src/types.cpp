#include "coxcluster/types.hpp"

#include <algorithm>

namespace coxcluster {

bool is_positive(const Root& r) {
  bool nonzero = false;
  for (Int v : r) {
    if (v < 0) return false;
    if (v > 0) nonzero = true;
  }
  return nonzero;
}

bool is_negative(const Root& r) {
  bool nonzero = false;
  for (Int v : r) {
    if (v > 0) return false;
    if (v < 0) nonzero = true;
  }
  return nonzero;
}

bool is_zero(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](Int v) { return v == 0; });
}

Root negated(Root r) {
  for (Int& v : r) v = -v;
  return r;
}

Root abs_root(const Root& r) {
  if (is_positive(r)) return r;
  if (is_negative(r)) return negated(r);
  throw DomainError("abs_root: vector is neither positive nor negative: " +
                    root_to_string(r));
}

std::string root_to_string(const Root& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  s += ")";
  return s;
}

}  // namespace coxcluster
