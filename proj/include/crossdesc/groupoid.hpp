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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "crossdesc/ids.hpp"
#include "crossdesc/report.hpp"

namespace crossdesc {

/// A finite groupoid seen through its operations.
///
/// Composition is written right to left: `compose(h, g)` is "g first, then h"
/// and is defined when `target(g) == source(h)`. Table-backed implementations
/// return `kNoArrow` for entries that are missing; validated structures never
/// do. Arrows within a hom-set are enumerated in ascending id order.
class Groupoid {
 public:
  virtual ~Groupoid() = default;

  virtual std::size_t object_count() const = 0;
  virtual std::size_t arrow_count() const = 0;

  virtual ObjId source(ArrowId g) const = 0;
  virtual ObjId target(ArrowId g) const = 0;
  virtual ArrowId identity(ObjId x) const = 0;
  virtual ArrowId compose(ArrowId after, ArrowId before) const = 0;
  virtual ArrowId inverse(ArrowId g) const = 0;

  virtual std::size_t hom_count(ObjId from, ObjId to) const = 0;
  virtual ArrowId hom_at(ObjId from, ObjId to, std::size_t k) const = 0;

  virtual std::string object_label(ObjId x) const = 0;
  virtual std::string arrow_label(ArrowId g) const = 0;

  // Linear scans by default; table-backed groupoids index their labels.
  virtual std::optional<ObjId> find_object(std::string_view label) const;
  virtual std::optional<ArrowId> find_arrow(std::string_view label) const;

  // Defects in the underlying tables that the operations above cannot
  // express (entries on non-composable pairs, conflicting duplicates).
  virtual void table_issues(ValidationReport&) const {}

  std::vector<ArrowId> hom(ObjId from, ObjId to) const;
  bool composable(ArrowId after, ArrowId before) const {
    return target(before) == source(after);
  }
  /// Throws CompositionError naming both arrows when they do not compose.
  ArrowId compose_checked(ArrowId after, ArrowId before) const;
  bool contains(ArrowId g) const { return g.valid() && g.index() < arrow_count(); }
  bool contains(ObjId x) const { return x.valid() && x.index() < object_count(); }
};

/// Label-level description of a groupoid, as read from or written to a
/// document. Compose entries are `{after, before, result}`.
struct GroupoidTables {
  struct Arrow {
    std::string id, src, dst;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::map<std::string, std::string> identity;
  std::map<std::string, std::string> inverse;
  std::vector<std::array<std::string, 3>> compose;
};

/// Groupoid given by explicit tables. Ids are assigned in lexicographic label
/// order, so "least id" and "lexicographically least label" coincide.
class FiniteGroupoid final : public Groupoid {
 public:
  /// Throws LoadError for empty, duplicate or unresolved identifiers.
  /// Missing or inconsistent table entries are kept and surface in
  /// validate_groupoid.
  static FiniteGroupoid from_tables(const GroupoidTables& tables);

  std::size_t object_count() const override { return object_labels_.size(); }
  std::size_t arrow_count() const override { return arrow_labels_.size(); }
  ObjId source(ArrowId g) const override { return src_[g.index()]; }
  ObjId target(ArrowId g) const override { return dst_[g.index()]; }
  ArrowId identity(ObjId x) const override { return identity_[x.index()]; }
  ArrowId compose(ArrowId after, ArrowId before) const override;
  ArrowId inverse(ArrowId g) const override { return inverse_[g.index()]; }
  std::size_t hom_count(ObjId from, ObjId to) const override;
  ArrowId hom_at(ObjId from, ObjId to, std::size_t k) const override;
  std::string object_label(ObjId x) const override {
    return object_labels_[x.index()];
  }
  std::string arrow_label(ArrowId g) const override {
    return arrow_labels_[g.index()];
  }
  std::optional<ObjId> find_object(std::string_view label) const override;
  std::optional<ArrowId> find_arrow(std::string_view label) const override;
  void table_issues(ValidationReport& report) const override;

 private:
  static std::uint64_t key(std::uint32_t a, std::uint32_t b) {
    return (std::uint64_t{a} << 32) | b;
  }

  std::vector<std::string> object_labels_;
  std::vector<std::string> arrow_labels_;
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, ArrowId> arrow_index_;
  std::vector<ObjId> src_, dst_;
  std::vector<ArrowId> identity_, inverse_;
  std::unordered_map<std::uint64_t, std::vector<ArrowId>> homs_;
  std::unordered_map<std::uint64_t, ArrowId> compose_;
  std::vector<Violation> issues_;
};

/// Enumerates every table of `g` by label; the inverse of from_tables for
/// table-backed groupoids and a materialization for computed ones.
GroupoidTables tables_of(const Groupoid& g);

/// Checks closure and typing of composition, unit laws, inverse laws and
/// associativity over every composable triple.
ValidationReport validate_groupoid(const Groupoid& g);

struct WordFactor {
  ArrowId arrow;
  int exponent = 1;  // +1 or -1
};

/// Factors are written as in `f1 ∘ f2 ∘ ... ∘ fn`: the last factor acts first.
using Word = std::vector<WordFactor>;

/// Evaluates a composite. An empty word needs `anchor` and yields its
/// identity. Throws CompositionError naming the first non-composable pair.
ArrowId evaluate_word(const Groupoid& g, std::span<const WordFactor> word,
                      std::optional<ObjId> anchor = std::nullopt);

/// Connected components. Blocks are sorted, each block's first element is its
/// label, and blocks are ordered by label.
struct ObjectPartition {
  std::vector<std::vector<ObjId>> blocks;
  std::vector<std::size_t> block_of;  // indexed by object

  ObjId label(std::size_t block) const { return blocks[block].front(); }
};

ObjectPartition pi0_groupoid(const Groupoid& g);

}  // namespace crossdesc
