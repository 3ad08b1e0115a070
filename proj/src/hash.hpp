#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rrb::detail {

struct VectorHash {
  template <typename T>
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (const T& x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace rrb::detail
