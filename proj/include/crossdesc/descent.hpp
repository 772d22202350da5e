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
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crossdesc/cosimplicial.hpp"

namespace crossdesc {

inline constexpr std::size_t kDefaultBound = 1'000'000;

/// x in level 0, g: x_(0) -> x_(1) in level 1, a in level 2 at x_(0).
struct DescentDatum {
  ObjId x;
  ArrowId g;
  ArrowId a;
  friend auto operator<=>(const DescentDatum&, const DescentDatum&) = default;
};

struct PartialDescentDatum {
  ObjId x;
  ArrowId g;
  friend auto operator<=>(const PartialDescentDatum&, const PartialDescentDatum&) = default;
};

/// f: x -> x' in level 0 and c a 2-morphism of level 1 at x_(0).
struct GaugeTransformation {
  ArrowId f;
  ArrowId c;
  friend auto operator<=>(const GaugeTransformation&, const GaugeTransformation&) = default;
};

/// Outcome of a descent or gauge check. On failure `clause` names the
/// condition and `lhs`, `rhs` hold the labels of both sides at `level`.
struct CheckResult {
  bool ok = true;
  std::string clause;
  int level = 0;
  std::string lhs, rhs;

  explicit operator bool() const { return ok; }
};

/// Clauses: "cocycle-failure" for g_(0,2)^-1 ∘ g_(1,2) ∘ g_(0,1) = D(a) in
/// level 2 and "twisted-cocycle" for
/// a_(0,1,3)^-1 ∘ a_(0,2,3) ∘ a_(0,1,2) = Ad(g_(0,1)^-1)(a_(1,2,3)) in level 3.
/// Throws DomainError when the triple is mistyped.
CheckResult is_descent_datum(const CrossedDiagram& d, const DescentDatum& t);

/// g_(0,2)^-1 ∘ g_(1,2) ∘ g_(0,1) in level 2.
ArrowId cocycle_failure(const CrossedDiagram& d, ArrowId g);

/// a_(0,1,3)^-1 ∘ a_(0,2,3) ∘ a_(0,1,2) ∘ Ad(g_(0,1)^-1)(a_(1,2,3))^-1 in
/// level 3; the identity exactly when the twisted-cocycle condition holds.
ArrowId twisted_cocycle_defect(const CrossedDiagram& d, const DescentDatum& t);

/// All descent data, ordered lexicographically by (x, g, a) ids. Throws
/// ResourceError when more than `bound` candidates would be scanned.
std::vector<DescentDatum> enumerate_descent(const CrossedDiagram& d,
                                            std::size_t bound = kDefaultBound);

/// f_(1) ∘ g ∘ D(c) ∘ f_(0)^-1.
ArrowId gauge_image_g(const CrossedDiagram& d, const GaugeTransformation& t, ArrowId g);

/// Ad(f_(0))(c_(0,2)^-1 ∘ a ∘ Ad(g_(0,1)^-1)(c_(1,2)) ∘ c_(0,1)).
ArrowId gauge_image_a(const CrossedDiagram& d, const GaugeTransformation& t, ArrowId g,
                      ArrowId a);

/// The datum that `t` sends `src` to. Throws DomainError when t is mistyped.
DescentDatum gauge_act(const CrossedDiagram& d, const DescentDatum& src,
                       const GaugeTransformation& t);

/// Clauses "gauge-object", "gauge-g" and "gauge-a". Throws DomainError when
/// t is mistyped relative to src.
CheckResult is_gauge(const CrossedDiagram& d, const GaugeTransformation& t,
                     const DescentDatum& src, const DescentDatum& dst);

/// Only condition (i) of a gauge transformation between partial data.
CheckResult is_partial_gauge(const CrossedDiagram& d, const GaugeTransformation& t,
                             const PartialDescentDatum& src, const PartialDescentDatum& dst);

GaugeTransformation gauge_identity(const CrossedDiagram& d, ObjId x);

/// `second ∘ first` = (f' ∘ f, c ∘ Ad(f_(0)^-1)(c')). Throws DomainError when
/// the target of f is not the source of f'.
GaugeTransformation gauge_compose(const CrossedDiagram& d, const GaugeTransformation& second,
                                  const GaugeTransformation& first);

/// (f^-1, Ad(f_(0))(c^-1)).
GaugeTransformation gauge_invert(const CrossedDiagram& d, const GaugeTransformation& t);

/// Given a descent datum src and a partial gauge t: (x, g) -> (x', g'),
/// returns (x', g', a') with a' = gauge_image_a(t, g, a). The result is a
/// descent datum and t a gauge transformation onto it; both are re-checked
/// and a failure raises InternalError. Throws DomainError when t does not
/// satisfy condition (i).
DescentDatum complete_descent(const CrossedDiagram& d, const DescentDatum& src,
                              const PartialDescentDatum& dst, const GaugeTransformation& t);

struct GaugeEdge {
  std::size_t from, to;  // member indices
  GaugeTransformation gauge;
};

struct ClassTable {
  std::vector<DescentDatum> members;          // enumeration order
  std::vector<std::size_t> class_of;          // member -> class
  std::vector<std::size_t> representatives;   // class -> least member
  std::vector<GaugeTransformation> witness;   // member -> gauge onto its representative
  std::size_t candidates_scanned = 0;

  std::size_t class_count() const { return representatives.size(); }
  std::optional<std::size_t> index_of(const DescentDatum& t) const;
  std::vector<std::size_t> class_members(std::size_t cls) const;
};

/// Every typed pair (f, c) out of every member, as edges between members.
/// Throws ResourceError when more than `bound` pairs would be scanned and
/// InternalError if a gauge image is not an enumerated datum.
std::vector<GaugeEdge> gauge_edges(const CrossedDiagram& d, const std::vector<DescentDatum>& data,
                                   std::size_t bound = kDefaultBound,
                                   std::size_t* scanned = nullptr);

/// Gauge classes by edge scanning and union-find. Witnesses are assembled
/// from edges with gauge_compose / gauge_invert and each one is re-checked.
ClassTable gauge_classes(const CrossedDiagram& d, std::size_t bound = kDefaultBound);

}  // namespace crossdesc
