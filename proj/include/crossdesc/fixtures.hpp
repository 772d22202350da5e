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

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "crossdesc/cosimplicial.hpp"

namespace crossdesc {

/// A finite group on elements 0..n-1 with labels in the same order.
struct FiniteGroup {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a ∘ b
  int identity = 0;
  std::vector<int> inverse;

  int order() const { return static_cast<int>(labels.size()); }
  int operator()(int a, int b) const { return mul[a][b]; }
  int element_order(int a) const;
  int find(const std::string& label) const;  // -1 when absent

  /// Labels "0".."n-1", zero-padded to a common width.
  static FiniteGroup cyclic(int n);
  /// Permutations of 1..n in one-line notation, composed right to left.
  static FiniteGroup symmetric(int n);
  static FiniteGroup trivial();
  /// Throws LoadError for unresolved labels or a partial table.
  static FiniteGroup from_tables(const GroupTables& t);
  GroupTables tables() const;
};

inline constexpr const char* kFixtureObject = "x";

/// One-object crossed groupoid from group data. `twist(g, a)` and
/// `feedback[a]` are in element indices.
CrossedPtr crossed_group(const FiniteGroup& g1, const FiniteGroup& g2,
                         const std::function<int(int, int)>& twist,
                         const std::vector<int>& feedback);

/// N ⊴ G with D the inclusion and conjugation as twist. Throws DomainError
/// naming a witness when N is not a normal subgroup.
CrossedPtr crossed_from_normal_subgroup(const FiniteGroup& g, const std::vector<int>& subgroup);

/// All automorphisms of G, as image vectors, in lexicographic order. The
/// identity comes first. Throws ResourceError above `max_order`.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g, int max_order = 24);

/// G -> Aut(G), g |-> conjugation by g, with Aut(G) acting by evaluation.
/// Automorphisms are labelled aut00, aut01, ... in lexicographic order.
CrossedPtr inner_crossed(const FiniteGroup& g, int max_order = 24);

/// One object, trivial groups.
CrossedPtr terminal_crossed();

DiagramPtr constant_diagram(const CrossedPtr& c);

/// Level p is the product of C over {0..m-1}^(p+1), with cofaces deleting
/// one tuple position. Throws DomainError unless C has one object and
/// ResourceError when a level would exceed `max_elements` 2-morphisms.
DiagramPtr cech_diagram(const CrossedPtr& c, int m, std::size_t max_elements = 1u << 26);

/// Product of k copies of a one-object crossed groupoid, computed on demand.
CrossedPtr product_crossed(const CrossedPtr& c, std::size_t k);

struct Fattened {
  CrossedPtr crossed;
  CrossedMorphism inclusion;  // x |-> x#0
};

/// Every object becomes n copies x#0..x#(n-1). A 1-morphism m: x -> y gives
/// m#i>j: x#i -> y#j for all copies; 2-morphisms a become a#k at x#k.
Fattened fatten(const CrossedPtr& c, int n);

struct FattenedDiagram {
  DiagramPtr diagram;
  DiagramMorphism inclusion;
};

FattenedDiagram fatten(const DiagramPtr& d, int n);

/// The unique morphism to constant_diagram(terminal_crossed()).
DiagramMorphism terminal_morphism(const DiagramPtr& d);

/// Named fixtures: FixA, FixB, FixC, FixCech, FixA-fat, FixCech-fat,
/// inner-S3, inner-S3-fat, trivial.
std::vector<std::string> builtin_diagram_names();
DiagramPtr builtin_diagram(const std::string& name);

/// Named morphisms: FixA->FixA-fat, FixCech->FixCech-fat,
/// inner-S3->inner-S3-fat, FixA->trivial, and id:<diagram> for every named
/// diagram.
std::vector<std::string> builtin_morphism_names();
DiagramMorphism builtin_morphism(const std::string& name);

/// Crossed cores of the named fixtures.
CrossedPtr fix_a_core();
CrossedPtr fix_b_core();
CrossedPtr fix_c_core();

}  // namespace crossdesc
