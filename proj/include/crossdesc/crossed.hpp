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
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "crossdesc/groupoid.hpp"

namespace crossdesc {

/// A crossed module over a groupoid: 1-morphisms `g1`, a totally
/// disconnected groupoid `g2` of 2-morphisms on the same objects, an action
/// `twist` of g1 on g2 and a feedback functor `feedback: g2 -> g1`.
///
/// Two different conjugations appear in descent formulas. The library keeps
/// them apart: `twist(g, a)` is the action of a 1-morphism on a 2-morphism,
/// while conjugation inside g1 (`g ∘ h ∘ g⁻¹`) is always spelled out as a
/// word.
class CrossedGroupoid {
 public:
  virtual ~CrossedGroupoid() = default;

  virtual const Groupoid& g1() const = 0;
  virtual const Groupoid& g2() const = 0;

  /// `g: x -> y` in g1, `a` in g2(x); result in g2(y). kNoArrow when a
  /// table-backed structure lacks the entry.
  virtual ArrowId twist(ArrowId g, ArrowId a) const = 0;
  /// `a` in g2(x); result in g1(x, x).
  virtual ArrowId feedback(ArrowId a) const = 0;

  /// Set for computed structures whose axioms hold exactly when they hold for
  /// the returned base (products, fattenings). Large instances are validated
  /// through it.
  virtual const CrossedGroupoid* structural_base() const { return nullptr; }
  virtual void table_issues(ValidationReport&) const {}

  std::size_t object_count() const { return g1().object_count(); }
  std::string object_label(ObjId x) const { return g1().object_label(x); }
};

using CrossedPtr = std::shared_ptr<const CrossedGroupoid>;

/// Throws DomainError unless `g` starts at the object of `a`.
ArrowId twist_checked(const CrossedGroupoid& c, ArrowId g, ArrowId a);
ArrowId feedback_checked(const CrossedGroupoid& c, ArrowId a);

/// One group of a totally disconnected groupoid, by labels.
struct GroupTables {
  std::vector<std::string> elements;
  std::string identity;
  std::vector<std::array<std::string, 3>> compose;  // {after, before, result}
  std::map<std::string, std::string> inverse;
};

struct CrossedTables {
  GroupoidTables g1;
  std::map<std::string, GroupTables> g2;  // object -> group at that object
  std::vector<std::array<std::string, 3>> twist;  // {g, a, result}
  std::map<std::string, std::string> feedback;    // a -> D(a)
};

/// Explicit crossed groupoid. The twist table is stored in full.
class TableCrossed final : public CrossedGroupoid {
 public:
  /// Throws LoadError if the object sets of g1 and g2 differ or an id does
  /// not resolve.
  static std::shared_ptr<const TableCrossed> from_tables(const CrossedTables& t);

  const Groupoid& g1() const override { return g1_; }
  const Groupoid& g2() const override { return g2_; }
  ArrowId twist(ArrowId g, ArrowId a) const override;
  ArrowId feedback(ArrowId a) const override { return feedback_[a.index()]; }
  void table_issues(ValidationReport& report) const override;

 private:
  FiniteGroupoid g1_, g2_;
  std::unordered_map<std::uint64_t, ArrowId> twist_;
  std::vector<ArrowId> feedback_;
  std::vector<Violation> issues_;
};

CrossedTables tables_of(const CrossedGroupoid& c);

/// Checks, instance by instance: matching object sets, that g1 and g2 are
/// groupoids with g2 totally disconnected ("object-sets", "g1.*", "g2.*"),
/// that twist is an action by group isomorphisms ("twist-action"), that the
/// feedback is a functor into automorphism groups ("feedback-functor"),
/// equivariance of the feedback ("equivariance") and the Peiffer identity
/// ("peiffer"). Computed structures beyond `work_budget` checks are
/// validated through their structural base.
ValidationReport validate_crossed(const CrossedGroupoid& c,
                                  std::size_t work_budget = 20'000'000);

/// A morphism of crossed groupoids, given by its three component maps.
class CrossedMorphism {
 public:
  using ObjectMap = std::function<ObjId(ObjId)>;
  using ArrowMap = std::function<ArrowId(ArrowId)>;

  CrossedMorphism(CrossedPtr source, CrossedPtr target, ObjectMap objects,
                  ArrowMap g1, ArrowMap g2);

  static CrossedMorphism identity(CrossedPtr c);

  /// Label-level maps, as stored in documents.
  struct Tables {
    std::map<std::string, std::string> objects, g1, g2;
  };
  /// Throws LoadError for unresolved ids; unmapped entries map to the
  /// invalid id and are reported by validate_crossed_morphism.
  static CrossedMorphism from_tables(CrossedPtr source, CrossedPtr target,
                                     const Tables& t);
  Tables tables() const;

  ObjId object(ObjId x) const { return objects_(x); }
  ArrowId g1(ArrowId g) const { return g1_(g); }
  ArrowId g2(ArrowId a) const { return g2_(a); }

  const CrossedGroupoid& source() const { return *source_; }
  const CrossedGroupoid& target() const { return *target_; }
  const CrossedPtr& source_ptr() const { return source_; }
  const CrossedPtr& target_ptr() const { return target_; }

  /// `after ∘ before`.
  static CrossedMorphism compose(const CrossedMorphism& after,
                                 const CrossedMorphism& before);

 private:
  CrossedPtr source_, target_;
  ObjectMap objects_;
  ArrowMap g1_, g2_;
};

/// Functoriality on g1 and g2 plus compatibility with twist and feedback.
/// When a check family exceeds `work_budget` instances it is run on a fixed
/// pseudo-random sample of that size and the report coverage says "sampled".
ValidationReport validate_crossed_morphism(const CrossedMorphism& f,
                                           std::size_t work_budget = 4'000'000);

}  // namespace crossdesc
