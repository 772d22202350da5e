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

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "crossdesc/crossed.hpp"

namespace crossdesc {

/// g1(x) modulo the image of the feedback, as a group. Cosets are sorted and
/// represented by their least element; cosets are ordered by representative.
struct CosetGroup {
  ObjId object;
  std::vector<std::vector<ArrowId>> cosets;
  std::unordered_map<ArrowId, std::size_t> coset_of;
  std::vector<std::vector<std::size_t>> product;  // product[i][j] = coset of (rep i) o (rep j)

  std::size_t order() const { return cosets.size(); }
  ArrowId representative(std::size_t i) const { return cosets[i].front(); }
};

/// pi0 of g1, and per object the cokernel (pi1) and kernel (pi2) of D.
struct HomotopyData {
  ObjectPartition pi0;
  std::vector<CosetGroup> pi1;               // indexed by object
  std::vector<std::vector<ArrowId>> pi2;     // sorted kernel, indexed by object
  std::vector<std::vector<ArrowId>> image;   // sorted image of D in g1(x)
};

HomotopyData homotopy(const CrossedGroupoid& c);

/// Hom-set g1(x, x') under the right action g -> g ∘ D(a) of g2(x).
class QuotientFibers {
 public:
  QuotientFibers(const CrossedGroupoid& c, ObjId from, ObjId to);

  const std::vector<std::vector<ArrowId>>& classes() const { return classes_; }
  std::size_t class_of(ArrowId g) const { return class_of_.at(g); }
  /// {a in g2(from) | g' = g ∘ D(a)}, sorted.
  std::vector<ArrowId> fiber(ArrowId g, ArrowId g_prime) const;

  ObjId from() const { return from_; }
  ObjId to() const { return to_; }

 private:
  const CrossedGroupoid* c_;
  ObjId from_, to_;
  std::vector<std::vector<ArrowId>> classes_;
  std::unordered_map<ArrowId, std::size_t> class_of_;
};

QuotientFibers hom_quotient(const CrossedGroupoid& c, ObjId from, ObjId to);

struct WeakEquivalenceReport {
  bool ok = true;
  std::string invariant;  // "pi0", "pi1", "pi2" for the first failure
  std::string object;     // source object label, when relevant
  std::string detail;
  std::optional<int> level;  // set by the diagram-level check
};

/// Bijectivity of pi0(F) and of pi1(F, x), pi2(F, x) for every source object.
/// The maps on pi1 and pi2 are homomorphisms because F is a crossed morphism.
WeakEquivalenceReport is_weak_equivalence_crossed(const CrossedMorphism& f);

/// Enumerates every x, x' of the source and every pair g, g' in g1(x, x'),
/// and checks that F induces bijections on quotient classes and on fibers.
/// Returns the violations found (empty when all maps are bijective).
ValidationReport check_quotient_bijections(const CrossedMorphism& f);

}  // namespace crossdesc
