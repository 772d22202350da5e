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

#include <array>

#include "crossdesc/cosimplicial.hpp"

namespace crossdesc::detail {

inline const Face& vertex(int i, int q) {
  static const std::array<std::array<Face, 4>, 4> table = [] {
    std::array<std::array<Face, 4>, 4> t{};
    for (int qq = 0; qq <= kTopLevel; ++qq) {
      for (int ii = 0; ii <= qq; ++ii) t[qq][ii] = Face::from_seq({ii}, qq);
    }
    return t;
  }();
  return table[q][i];
}

inline const Face& edge(int i, int j, int q) {
  static const std::array<std::array<std::array<Face, 4>, 4>, 4> table = [] {
    std::array<std::array<std::array<Face, 4>, 4>, 4> t{};
    for (int qq = 1; qq <= kTopLevel; ++qq) {
      for (int ii = 0; ii <= qq; ++ii) {
        for (int jj = ii + 1; jj <= qq; ++jj) t[qq][ii][jj] = Face::from_seq({ii, jj}, qq);
      }
    }
    return t;
  }();
  return table[q][i][j];
}

inline const Face& triangle(int i, int j, int k) {
  static const std::array<Face, 4> table = {
      Face::from_seq({1, 2, 3}, 3), Face::from_seq({0, 2, 3}, 3),
      Face::from_seq({0, 1, 3}, 3), Face::from_seq({0, 1, 2}, 3)};
  // Indexed by the omitted vertex.
  return table[6 - i - j - k];
}

}  // namespace crossdesc::detail
