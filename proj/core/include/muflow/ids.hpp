#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>

namespace muflow {

// Opaque integer identifier. Distinct tags keep vertex, arc and tree ids from
// being mixed up.
template <typename Tag>
class StrongId {
 public:
  constexpr StrongId() = default;
  constexpr explicit StrongId(std::int64_t value) : value_(value) {}

  constexpr std::int64_t value() const { return value_; }

  friend constexpr auto operator<=>(StrongId, StrongId) = default;

  friend std::ostream& operator<<(std::ostream& os, StrongId id) {
    return os << id.value_;
  }

 private:
  std::int64_t value_ = -1;
};

using VertexId = StrongId<struct VertexTag>;
using ArcId = StrongId<struct ArcTag>;
using TreeVertexId = StrongId<struct TreeVertexTag>;
using TreeEdgeId = StrongId<struct TreeEdgeTag>;

using Capacity = std::int64_t;

}  // namespace muflow

template <typename Tag>
struct std::hash<muflow::StrongId<Tag>> {
  std::size_t operator()(muflow::StrongId<Tag> id) const noexcept {
    return std::hash<std::int64_t>{}(id.value());
  }
};
