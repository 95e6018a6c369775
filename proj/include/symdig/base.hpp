#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace symdig {

/// Thrown on violated preconditions (bad parameters, mismatched domains,
/// exceeded caps). The message names the violated condition.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

using Vertex = std::uint32_t;
using VertexPair = std::pair<Vertex, Vertex>;

// Hard ceiling on enumerated domains (field elements, vertex sets).
inline constexpr std::int64_t kMaxDomain = std::int64_t{1} << 20;

}  // namespace symdig
