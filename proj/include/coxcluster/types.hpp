#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcluster {

using Int = long long;

// Coordinates in the simple-root basis.
using Root = std::vector<Int>;

// Generator indices, 1-based.
using Word = std::vector<int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mathematically invalid input: wrong type, index out of range, imaginary
// root where a real one is required, and so on.
struct DomainError : Error {
  using Error::Error;
};

bool is_positive(const Root& r);
bool is_negative(const Root& r);
bool is_zero(const Root& r);
Root negated(Root r);

// |beta|: beta if positive, -beta if negative.
Root abs_root(const Root& r);

std::string root_to_string(const Root& r);

struct RootHash {
  std::size_t operator()(const Root& r) const {
    std::size_t h = 1469598103934665603ull;
    for (Int v : r) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace coxcluster
