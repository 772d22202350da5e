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
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "crossdesc/crossed.hpp"

namespace crossdesc {

inline constexpr int kTopLevel = 3;

/// An injective monotone map {0..p} -> {0..q}, stored as its vertex list
/// (i0 < ... < ip). Only dimensions up to kTopLevel exist.
class Face {
 public:
  /// Throws DomainError unless the sequence is strictly increasing within
  /// [0, q] and q <= 3.
  static Face from_seq(std::span<const int> seq, int q);
  static Face from_seq(std::initializer_list<int> seq, int q) {
    return from_seq(std::span<const int>(seq.begin(), seq.size()), q);
  }
  static Face identity(int p);
  /// The coface d^k : p -> p+1 skipping vertex k.
  static Face coface(int p, int k);

  int source_dim() const { return p_; }
  int target_dim() const { return q_; }
  int operator[](int i) const { return v_[i]; }
  std::vector<int> seq() const { return {v_.begin(), v_.begin() + p_ + 1}; }

  /// Coface indices in application order: applying d^{k0}, then d^{k1}, ...
  /// yields this face. The omitted vertices are inserted in increasing order,
  /// which makes the factorization unique.
  std::vector<int> factorize() const;

  /// `after ∘ this` (apply this face first).
  Face then(const Face& after) const;

  std::string to_string() const;
  friend bool operator==(const Face&, const Face&) = default;

 private:
  int p_ = 0, q_ = 0;
  std::array<int, 4> v_{};
};

/// Functor from injective monotone maps of dimensions 0..3 into crossed
/// groupoids, presented by levels and cofaces.
struct CrossedDiagram {
  std::array<CrossedPtr, 4> levels;
  // cofaces[p][k] : levels[p] -> levels[p+1], 0 <= k <= p+1, 0 <= p <= 2.
  std::array<std::vector<CrossedMorphism>, 3> cofaces;

  const CrossedGroupoid& level(int p) const { return *levels[p]; }
  const CrossedMorphism& coface(int p, int k) const { return cofaces[p][k]; }
};

using DiagramPtr = std::shared_ptr<const CrossedDiagram>;

/// A natural transformation between diagrams, one crossed morphism per level.
struct DiagramMorphism {
  DiagramPtr source, target;
  std::vector<CrossedMorphism> levels;  // size 4

  static DiagramMorphism identity(DiagramPtr d);
};

/// Images of elements of level p under the diagram's map for `face`.
ObjId push_object(const CrossedDiagram& d, const Face& face, ObjId x);
ArrowId push_g1(const CrossedDiagram& d, const Face& face, ArrowId g);
ArrowId push_g2(const CrossedDiagram& d, const Face& face, ArrowId a);

/// Every level, every coface, and the identities d^j d^i = d^i d^(j-1) for
/// i < j, checked elementwise on objects, 1- and 2-morphisms.
ValidationReport validate_diagram(const CrossedDiagram& d);

/// Each level map is a crossed morphism and F^(p+1) ∘ d^k = d^k ∘ F^p holds
/// elementwise.
ValidationReport validate_diagram_morphism(const DiagramMorphism& f);

}  // namespace crossdesc
