// Copyright 2026 The crossdesc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>

namespace crossdesc {

// Dense index into one structure's object or arrow table. Indices follow the
// structure's identifier order, which is the order "least identifier" refers
// to everywhere in the library.
template <typename Tag>
struct StrongId {
  static constexpr std::uint32_t kInvalidValue =
      std::numeric_limits<std::uint32_t>::max();

  std::uint32_t value = kInvalidValue;

  constexpr StrongId() = default;
  template <std::integral I>
  constexpr explicit StrongId(I v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr bool valid() const { return value != kInvalidValue; }
  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(StrongId, StrongId) = default;
};

using ObjId = StrongId<struct ObjTag>;
using ArrowId = StrongId<struct ArrowTag>;

inline constexpr ArrowId kNoArrow{};
inline constexpr ObjId kNoObject{};

}  // namespace crossdesc

template <typename Tag>
struct std::hash<crossdesc::StrongId<Tag>> {
  std::size_t operator()(crossdesc::StrongId<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
