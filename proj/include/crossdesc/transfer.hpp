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
#include <vector>

#include "crossdesc/descent.hpp"
#include "crossdesc/homotopy.hpp"

namespace crossdesc {

DescentDatum apply_morphism(const DiagramMorphism& f, const DescentDatum& t);
GaugeTransformation apply_morphism(const DiagramMorphism& f, const GaugeTransformation& t);

/// Levelwise weak equivalence; on failure `level` names the first bad level.
WeakEquivalenceReport is_weak_equivalence_diagram(const DiagramMorphism& f);

/// One recorded intermediate: `symbol` at `level` of the "source" or
/// "target" diagram, living at `object`, with value `value`.
struct TraceStep {
  std::string symbol;
  std::string side;
  int level = 0;
  std::string object;
  std::string value;
};

/// Intermediates of the surjectivity construction for one target datum
/// (y, h, b). `c2`, `h2`, `b2` stand for c'', h'', b'' and `c1`, `h1`, `b1`
/// for c', h', b'.
struct DescentLiftTrace {
  DescentDatum target;
  ObjId x;
  ArrowId f, h2, c2, b2, g, c1, h1, b1, a, u;
  DescentDatum lifted;
  GaugeTransformation gauge;  // target -> F(lifted)
};

/// Intermediates of the injectivity construction for a gauge (f, c) between
/// F(src) and F(dst). `d1` stands for d' and `v2` for the π2-preimage of w.
struct GaugeLiftTrace {
  DescentDatum src, dst;
  GaugeTransformation target_gauge;
  ArrowId e, v, f_tilde, c_tilde, d1, w, v2, d, u;
  GaugeTransformation lifted;  // src -> dst
};

std::vector<TraceStep> trace_steps(const DiagramMorphism& f, const DescentLiftTrace& t);
std::vector<TraceStep> trace_steps(const DiagramMorphism& f, const GaugeLiftTrace& t);

/// Re-evaluates every recorded equation; an empty report means all hold.
ValidationReport revalidate(const DiagramMorphism& f, const DescentLiftTrace& t);
ValidationReport revalidate(const DiagramMorphism& f, const GaugeLiftTrace& t);

/// Lifting along a weak equivalence F. Construction checks F and throws
/// PreconditionError (with the failure as JSON) when it is not one. Every
/// existential choice is the least identifier satisfying it; an exhausted
/// search throws InternalError naming the step.
class Lifter {
 public:
  explicit Lifter(const DiagramMorphism& f);

  const DiagramMorphism& morphism() const { return *f_; }

  /// A source datum and a gauge from `target` to its image.
  DescentLiftTrace lift_descent(const DescentDatum& target) const;

  /// A gauge src -> dst from a gauge t: F(src) -> F(dst) in the target.
  GaugeLiftTrace lift_gauge(const DescentDatum& src, const DescentDatum& dst,
                            const GaugeTransformation& t) const;

 private:
  const DiagramMorphism* f_;
};

DescentLiftTrace lift_descent(const DiagramMorphism& f, const DescentDatum& target);
GaugeLiftTrace lift_gauge(const DiagramMorphism& f, const DescentDatum& src,
                          const DescentDatum& dst, const GaugeTransformation& t);

struct BijectionReport {
  ClassTable source_classes, target_classes;
  /// source class -> target class of the image of its representative.
  std::vector<std::size_t> class_map;
  bool class_map_well_defined = true;

  /// Oracle route: counts agree and class_map is injective.
  bool oracle_bijective = false;

  /// Constructive route. One descent lift per target datum and, for every
  /// ordered pair of source data whose images are gauge equivalent, a gauge
  /// lift of every target gauge between the images.
  std::vector<DescentLiftTrace> descent_lifts;
  std::vector<std::size_t> target_class_witness;  // target class -> index into descent_lifts
  std::vector<GaugeLiftTrace> gauge_lifts;        // first lift per merged pair
  std::size_t gauge_lift_count = 0;
  bool constructive_surjective = false;
  bool constructive_injective = false;
  bool constructive_bijective = false;

  /// Both routes give the same verdict and the same class correspondence.
  bool agree = false;
  std::vector<std::string> problems;
};

/// Runs both routes. Throws PreconditionError unless F is a weak equivalence
/// and ResourceError when a scan would exceed `bound`.
BijectionReport verify_bijection(const DiagramMorphism& f, std::size_t bound = kDefaultBound);

}  // namespace crossdesc
