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

#include "crossdesc/transfer.hpp"

#include <map>
#include <set>

#include <json.hpp>

#include "crossdesc/error.hpp"
#include "faces.hpp"

namespace crossdesc {

namespace {

using detail::edge;
using detail::vertex;

const Groupoid& g1_of(const CrossedDiagram& d, int p) { return d.level(p).g1(); }
const Groupoid& g2_of(const CrossedDiagram& d, int p) { return d.level(p).g2(); }

ArrowId compose(const Groupoid& g, std::initializer_list<WordFactor> w) {
  return evaluate_word(g, std::span<const WordFactor>(w.begin(), w.size()));
}

std::string weq_json(const WeakEquivalenceReport& r) {
  nlohmann::json j = {{"weakEquivalence", r.ok},
                      {"invariant", r.invariant},
                      {"object", r.object},
                      {"detail", r.detail}};
  if (r.level) j["level"] = *r.level;
  return j.dump();
}

TraceStep step1(const CrossedDiagram& d, const char* symbol, const char* side, int level,
                ArrowId a) {
  const Groupoid& g = g1_of(d, level);
  return {symbol, side, level, g.object_label(g.source(a)), g.arrow_label(a)};
}

TraceStep step2(const CrossedDiagram& d, const char* symbol, const char* side, int level,
                ArrowId a) {
  const Groupoid& g = g2_of(d, level);
  return {symbol, side, level, g.object_label(g.source(a)), g.arrow_label(a)};
}

}  // namespace

DescentDatum apply_morphism(const DiagramMorphism& f, const DescentDatum& t) {
  return {f.levels[0].object(t.x), f.levels[1].g1(t.g), f.levels[2].g2(t.a)};
}

GaugeTransformation apply_morphism(const DiagramMorphism& f, const GaugeTransformation& t) {
  return {f.levels[0].g1(t.f), f.levels[1].g2(t.c)};
}

WeakEquivalenceReport is_weak_equivalence_diagram(const DiagramMorphism& f) {
  for (int p = 0; p <= kTopLevel; ++p) {
    WeakEquivalenceReport r = is_weak_equivalence_crossed(f.levels[p]);
    if (!r.ok) {
      r.level = p;
      return r;
    }
  }
  return {};
}

Lifter::Lifter(const DiagramMorphism& f) : f_(&f) {
  WeakEquivalenceReport r = is_weak_equivalence_diagram(f);
  if (!r.ok) {
    throw PreconditionError("not a weak equivalence: " + r.invariant + " fails at level " +
                                std::to_string(*r.level) + " (" + r.detail + ")",
                            weq_json(r));
  }
}

DescentLiftTrace Lifter::lift_descent(const DescentDatum& target) const {
  const DiagramMorphism& F = *f_;
  const CrossedDiagram& G = *F.source;
  const CrossedDiagram& H = *F.target;
  if (CheckResult r = is_descent_datum(H, target); !r) {
    throw DomainError("lift target is not a descent datum (" + r.clause + ")");
  }
  DescentLiftTrace t;
  t.target = target;
  const ObjId y = target.x;

  // Step 1: an object x and f: y -> F(x).
  bool found = false;
  for (std::size_t i = 0; i < G.level(0).object_count() && !found; ++i) {
    const ObjId x{i};
    const ObjId yp = F.levels[0].object(x);
    if (g1_of(H, 0).hom_count(y, yp) > 0) {
      t.x = x;
      t.f = g1_of(H, 0).hom_at(y, yp, 0);
      found = true;
    }
  }
  if (!found) throw InternalError("lift step 1: no object of the source reaches the target component");
  const ObjId yp = F.levels[0].object(t.x);

  // Step 2: h'' = f_(1) ∘ h ∘ f_(0)^-1, c'' = 1, and its completion b''.
  t.c2 = g2_of(H, 1).identity(push_object(H, vertex(0, 1), y));
  t.h2 = gauge_image_g(H, {t.f, t.c2}, target.g);
  t.b2 = complete_descent(H, target, {yp, t.h2}, {t.f, t.c2}).a;

  // Step 3: h'' = F(g) ∘ D(c'), then complete along (1, c'^-1).
  const ObjId x0 = push_object(G, vertex(0, 1), t.x);
  const ObjId x1 = push_object(G, vertex(1, 1), t.x);
  const ObjId yp0 = push_object(H, vertex(0, 1), yp);
  found = false;
  for (ArrowId g : g1_of(G, 1).hom(x0, x1)) {
    const ArrowId h1 = F.levels[1].g1(g);
    const std::size_t n = g2_of(H, 1).hom_count(yp0, yp0);
    for (std::size_t k = 0; k < n; ++k) {
      const ArrowId c1 = g2_of(H, 1).hom_at(yp0, yp0, k);
      if (compose(g1_of(H, 1), {{h1, 1}, {H.level(1).feedback(c1), 1}}) == t.h2) {
        t.g = g;
        t.c1 = c1;
        t.h1 = h1;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) throw InternalError("lift step 3: h'' is not in the image of F up to D");
  const GaugeTransformation move{g1_of(H, 0).identity(yp), g2_of(H, 1).inverse(t.c1)};
  t.b1 = complete_descent(H, {yp, t.h2, t.b2}, {yp, t.h1}, move).a;

  // Step 4: the unique a with D(a) = g_(0,2)^-1 ∘ g_(1,2) ∘ g_(0,1) and F(a) = b'.
  const ArrowId loop = cocycle_failure(G, t.g);
  const ObjId z0 = push_object(G, vertex(0, 2), t.x);
  std::size_t hits = 0;
  for (std::size_t k = 0, n = g2_of(G, 2).hom_count(z0, z0); k < n; ++k) {
    const ArrowId a = g2_of(G, 2).hom_at(z0, z0, k);
    if (G.level(2).feedback(a) == loop && F.levels[2].g2(a) == t.b1) {
      if (hits++ == 0) t.a = a;
    }
  }
  if (hits == 0) throw InternalError("lift step 4: b' has no preimage over the cocycle failure");
  if (hits > 1) throw InternalError("lift step 4: the preimage of b' is not unique");
  t.lifted = {t.x, t.g, t.a};

  // Step 5: u must vanish; c = Ad(f_(0)^-1)(c')^-1.
  t.u = twisted_cocycle_defect(G, t.lifted);
  const ObjId w0 = push_object(G, vertex(0, 3), t.x);
  if (t.u != g2_of(G, 3).identity(w0)) throw InternalError("lift step 5: u is not the identity");
  const ArrowId f0_inv = g1_of(H, 1).inverse(push_g1(H, vertex(0, 1), t.f));
  t.gauge = {t.f, g2_of(H, 1).inverse(twist_checked(H.level(1), f0_inv, t.c1))};

  if (CheckResult r = is_descent_datum(G, t.lifted); !r) {
    throw InternalError("lift: the lifted triple fails " + r.clause);
  }
  if (CheckResult r = is_gauge(H, t.gauge, target, apply_morphism(F, t.lifted)); !r) {
    throw InternalError("lift: the returned gauge fails " + r.clause);
  }
  return t;
}

GaugeLiftTrace Lifter::lift_gauge(const DescentDatum& src, const DescentDatum& dst,
                                  const GaugeTransformation& gauge) const {
  const DiagramMorphism& F = *f_;
  const CrossedDiagram& G = *F.source;
  const CrossedDiagram& H = *F.target;
  const DescentDatum img_src = apply_morphism(F, src), img_dst = apply_morphism(F, dst);
  if (CheckResult r = is_gauge(H, gauge, img_src, img_dst); !r) {
    throw PreconditionError("gauge to lift does not connect the images (" + r.clause + ")");
  }
  GaugeLiftTrace t;
  t.src = src;
  t.dst = dst;
  t.target_gauge = gauge;
  const ArrowId h = img_src.g;

  // Step 1: F(e) = f ∘ D(v).
  const ObjId y = img_src.x;
  bool found = false;
  const std::size_t nv = g2_of(H, 0).hom_count(y, y);
  for (ArrowId e : g1_of(G, 0).hom(src.x, dst.x)) {
    const ArrowId fe = F.levels[0].g1(e);
    for (std::size_t k = 0; k < nv; ++k) {
      const ArrowId v = g2_of(H, 0).hom_at(y, y, k);
      const ArrowId fdv = compose(g1_of(H, 0), {{gauge.f, 1}, {H.level(0).feedback(v), 1}});
      if (fe == fdv) {
        t.e = e;
        t.v = v;
        t.f_tilde = fdv;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) throw InternalError("gauge lift step 1: f is not in the image of F up to D");

  // c~ = Ad(h^-1)(v_(1)^-1) ∘ c ∘ v_(0).
  const ArrowId v1_inv = g2_of(H, 1).inverse(push_g2(H, vertex(1, 1), t.v));
  const ArrowId moved = twist_checked(H.level(1), g1_of(H, 1).inverse(h), v1_inv);
  t.c_tilde = compose(g2_of(H, 1), {{moved, 1}, {gauge.c, 1}, {push_g2(H, vertex(0, 1), t.v), 1}});

  // Step 2: D(d') = g^-1 ∘ e_(1)^-1 ∘ g' ∘ e_(0).
  const ArrowId loop = compose(g1_of(G, 1), {{src.g, -1},
                                             {push_g1(G, vertex(1, 1), t.e), -1},
                                             {dst.g, 1},
                                             {push_g1(G, vertex(0, 1), t.e), 1}});
  const ObjId x0 = push_object(G, vertex(0, 1), src.x);
  const std::size_t nd = g2_of(G, 1).hom_count(x0, x0);
  found = false;
  for (std::size_t k = 0; k < nd; ++k) {
    const ArrowId d1 = g2_of(G, 1).hom_at(x0, x0, k);
    if (G.level(1).feedback(d1) == loop) {
      t.d1 = d1;
      found = true;
      break;
    }
  }
  if (!found) throw InternalError("gauge lift step 2: the loop is not in the image of D");

  // Step 3: w = c~ ∘ F(d')^-1 and its unique preimage in the kernel of D.
  t.w = compose(g2_of(H, 1), {{t.c_tilde, 1}, {F.levels[1].g2(t.d1), -1}});
  const ArrowId one = g1_of(G, 1).identity(x0);
  std::size_t hits = 0;
  for (std::size_t k = 0; k < nd; ++k) {
    const ArrowId v2 = g2_of(G, 1).hom_at(x0, x0, k);
    if (G.level(1).feedback(v2) == one && F.levels[1].g2(v2) == t.w) {
      if (hits++ == 0) t.v2 = v2;
    }
  }
  if (hits == 0) throw InternalError("gauge lift step 3: w has no preimage in the kernel of D");
  if (hits > 1) throw InternalError("gauge lift step 3: the preimage of w is not unique");
  t.d = g2_of(G, 1).compose_checked(t.v2, t.d1);

  // Step 4: u = Ad(e_(0)^-1)(a')^-1 ∘ d_(0,2)^-1 ∘ a ∘ Ad(g_(0,1)^-1)(d_(1,2)) ∘ d_(0,1).
  const auto& l2 = G.level(2);
  const ArrowId e0_inv = l2.g1().inverse(push_g1(G, vertex(0, 2), t.e));
  const ArrowId g01_inv = l2.g1().inverse(push_g1(G, edge(0, 1, 2), src.g));
  t.u = compose(l2.g2(), {{twist_checked(l2, e0_inv, dst.a), -1},
                          {push_g2(G, edge(0, 2, 2), t.d), -1},
                          {src.a, 1},
                          {twist_checked(l2, g01_inv, push_g2(G, edge(1, 2, 2), t.d)), 1},
                          {push_g2(G, edge(0, 1, 2), t.d), 1}});
  if (t.u != l2.g2().identity(push_object(G, vertex(0, 2), src.x))) {
    throw InternalError("gauge lift step 4: u is not the identity");
  }
  t.lifted = {t.e, t.d};
  if (CheckResult r = is_gauge(G, t.lifted, src, dst); !r) {
    throw InternalError("gauge lift: the lifted gauge fails " + r.clause);
  }
  return t;
}

DescentLiftTrace lift_descent(const DiagramMorphism& f, const DescentDatum& target) {
  return Lifter(f).lift_descent(target);
}

GaugeLiftTrace lift_gauge(const DiagramMorphism& f, const DescentDatum& src,
                          const DescentDatum& dst, const GaugeTransformation& t) {
  return Lifter(f).lift_gauge(src, dst, t);
}

std::vector<TraceStep> trace_steps(const DiagramMorphism& F, const DescentLiftTrace& t) {
  const CrossedDiagram& G = *F.source;
  const CrossedDiagram& H = *F.target;
  const std::string x = G.level(0).object_label(t.x);
  return {
      {"x", "source", 0, x, x},
      step1(H, "f", "target", 0, t.f),
      step1(H, "h''", "target", 1, t.h2),
      step2(H, "c''", "target", 1, t.c2),
      step2(H, "b''", "target", 2, t.b2),
      step1(G, "g", "source", 1, t.g),
      step2(H, "c'", "target", 1, t.c1),
      step1(H, "h'", "target", 1, t.h1),
      step2(H, "b'", "target", 2, t.b1),
      step2(G, "a", "source", 2, t.a),
      step2(G, "u", "source", 3, t.u),
      step2(H, "c", "target", 1, t.gauge.c),
  };
}

std::vector<TraceStep> trace_steps(const DiagramMorphism& F, const GaugeLiftTrace& t) {
  const CrossedDiagram& G = *F.source;
  const CrossedDiagram& H = *F.target;
  return {
      step1(G, "e", "source", 0, t.e),
      step2(H, "v", "target", 0, t.v),
      step1(H, "f~", "target", 0, t.f_tilde),
      step2(H, "c~", "target", 1, t.c_tilde),
      step2(G, "d'", "source", 1, t.d1),
      step2(H, "w", "target", 1, t.w),
      step2(G, "v2", "source", 1, t.v2),
      step2(G, "d", "source", 1, t.d),
      step2(G, "u", "source", 2, t.u),
  };
}

ValidationReport revalidate(const DiagramMorphism& F, const DescentLiftTrace& t) {
  ValidationReport report;
  const CrossedDiagram& G = *F.source;
  const CrossedDiagram& H = *F.target;
  auto expect = [&](bool ok, const char* clause, const char* detail) {
    if (!ok) report.add(clause, detail);
  };
  try {
    const ObjId yp = F.levels[0].object(t.x);
    expect(g1_of(H, 0).source(t.f) == t.target.x && g1_of(H, 0).target(t.f) == yp, "f",
           "f does not run from y to F(x)");
    expect(t.h2 == compose(g1_of(H, 1), {{push_g1(H, vertex(1, 1), t.f), 1},
                                         {t.target.g, 1},
                                         {push_g1(H, vertex(0, 1), t.f), -1}}),
           "h''", "h'' differs from f_(1) ∘ h ∘ f_(0)^-1");
    expect(t.c2 == g2_of(H, 1).identity(push_object(H, vertex(0, 1), t.target.x)), "c''",
           "c'' is not the identity");
    const DescentDatum mid{yp, t.h2, t.b2};
    expect(is_descent_datum(H, mid).ok && is_gauge(H, {t.f, t.c2}, t.target, mid).ok, "b''",
           "(f, c'') is not a gauge onto (y', h'', b'')");
    expect(t.h1 == F.levels[1].g1(t.g), "h'", "h' differs from F(g)");
    expect(t.h2 == compose(g1_of(H, 1), {{t.h1, 1}, {H.level(1).feedback(t.c1), 1}}), "c'",
           "h'' differs from h' ∘ D(c')");
    const DescentDatum image{yp, t.h1, t.b1};
    expect(is_descent_datum(H, image).ok &&
               is_gauge(H, {g1_of(H, 0).identity(yp), g2_of(H, 1).inverse(t.c1)}, mid, image).ok,
           "b'", "(1, c'^-1) is not a gauge onto (y', h', b')");
    expect(G.level(2).feedback(t.a) == cocycle_failure(G, t.g), "a",
           "D(a) differs from g_(0,2)^-1 ∘ g_(1,2) ∘ g_(0,1)");
    expect(F.levels[2].g2(t.a) == t.b1, "a", "F(a) differs from b'");
    expect(t.lifted == DescentDatum{t.x, t.g, t.a}, "lifted", "lifted triple is not (x, g, a)");
    expect(t.u == twisted_cocycle_defect(G, t.lifted), "u", "u is not the recorded defect");
    expect(t.u == g2_of(G, 3).identity(push_object(G, vertex(0, 3), t.x)), "u",
           "u is not the identity");
    expect(F.levels[3].g2(t.u) == g2_of(H, 3).identity(push_object(H, vertex(0, 3), yp)), "u",
           "F(u) is not the identity");
    expect(is_descent_datum(G, t.lifted).ok, "lifted", "lifted triple is not a descent datum");
    const ArrowId f0_inv = g1_of(H, 1).inverse(push_g1(H, vertex(0, 1), t.f));
    expect(t.gauge.f == t.f &&
               t.gauge.c == g2_of(H, 1).inverse(twist_checked(H.level(1), f0_inv, t.c1)),
           "c", "c differs from Ad(f_(0)^-1)(c')^-1");
    expect(is_gauge(H, t.gauge, t.target, image).ok, "c", "(f, c) is not a gauge onto F(x, g, a)");
    expect(apply_morphism(F, t.lifted) == image, "lifted", "F(x, g, a) differs from (y', h', b')");
  } catch (const Error& e) {
    report.add("typing", e.what());
  }
  return report;
}

ValidationReport revalidate(const DiagramMorphism& F, const GaugeLiftTrace& t) {
  ValidationReport report;
  const CrossedDiagram& G = *F.source;
  const CrossedDiagram& H = *F.target;
  auto expect = [&](bool ok, const char* clause, const char* detail) {
    if (!ok) report.add(clause, detail);
  };
  try {
    const DescentDatum img_src = apply_morphism(F, t.src), img_dst = apply_morphism(F, t.dst);
    expect(is_gauge(H, t.target_gauge, img_src, img_dst).ok, "input",
           "(f, c) is not a gauge between the images");
    expect(F.levels[0].g1(t.e) == t.f_tilde, "e", "F(e) differs from f~");
    expect(t.f_tilde ==
               compose(g1_of(H, 0), {{t.target_gauge.f, 1}, {H.level(0).feedback(t.v), 1}}),
           "f~", "f~ differs from f ∘ D(v)");
    const ArrowId v1_inv = g2_of(H, 1).inverse(push_g2(H, vertex(1, 1), t.v));
    const ArrowId moved =
        twist_checked(H.level(1), g1_of(H, 1).inverse(img_src.g), v1_inv);
    expect(t.c_tilde == compose(g2_of(H, 1), {{moved, 1},
                                              {t.target_gauge.c, 1},
                                              {push_g2(H, vertex(0, 1), t.v), 1}}),
           "c~", "c~ differs from Ad(h^-1)(v_(1)^-1) ∘ c ∘ v_(0)");
    expect(is_gauge(H, {t.f_tilde, t.c_tilde}, img_src, img_dst).ok, "c~",
           "(f~, c~) is not a gauge between the images");
    expect(G.level(1).feedback(t.d1) == compose(g1_of(G, 1), {{t.src.g, -1},
                                                              {push_g1(G, vertex(1, 1), t.e), -1},
                                                              {t.dst.g, 1},
                                                              {push_g1(G, vertex(0, 1), t.e), 1}}),
           "d'", "D(d') differs from g^-1 ∘ e_(1)^-1 ∘ g' ∘ e_(0)");
    expect(t.w == compose(g2_of(H, 1), {{t.c_tilde, 1}, {F.levels[1].g2(t.d1), -1}}), "w",
           "w differs from c~ ∘ F(d')^-1");
    const ObjId x0 = push_object(G, vertex(0, 1), t.src.x);
    const ObjId y0 = push_object(H, vertex(0, 1), img_src.x);
    expect(H.level(1).feedback(t.w) == g1_of(H, 1).identity(y0), "w", "D(w) is not the identity");
    expect(G.level(1).feedback(t.v2) == g1_of(G, 1).identity(x0), "v2",
           "D(v2) is not the identity");
    expect(F.levels[1].g2(t.v2) == t.w, "v2", "F(v2) differs from w");
    expect(t.d == g2_of(G, 1).compose_checked(t.v2, t.d1), "d", "d differs from v2 ∘ d'");
    expect(F.levels[1].g2(t.d) == t.c_tilde, "d", "F(d) differs from c~");
    expect(t.u == g2_of(G, 2).identity(push_object(G, vertex(0, 2), t.src.x)), "u",
           "u is not the identity");
    expect(t.lifted == GaugeTransformation{t.e, t.d}, "lifted", "lifted gauge is not (e, d)");
    expect(is_gauge(G, t.lifted, t.src, t.dst).ok, "lifted",
           "(e, d) is not a gauge between the source data");
  } catch (const Error& e) {
    report.add("typing", e.what());
  }
  return report;
}

BijectionReport verify_bijection(const DiagramMorphism& f, std::size_t bound) {
  const Lifter lifter(f);
  const CrossedDiagram& G = *f.source;
  const CrossedDiagram& H = *f.target;
  BijectionReport r;
  r.source_classes = gauge_classes(G, bound);
  r.target_classes = gauge_classes(H, bound);
  const ClassTable& S = r.source_classes;
  const ClassTable& T = r.target_classes;

  auto target_class = [&](const DescentDatum& t) {
    auto idx = T.index_of(apply_morphism(f, t));
    if (!idx) throw InternalError("the image of a descent datum is not a descent datum");
    return T.class_of[*idx];
  };

  // Oracle route.
  std::vector<std::size_t> image_class(S.members.size());
  for (std::size_t m = 0; m < S.members.size(); ++m) image_class[m] = target_class(S.members[m]);
  for (std::size_t c = 0; c < S.class_count(); ++c) {
    r.class_map.push_back(image_class[S.representatives[c]]);
  }
  for (std::size_t m = 0; m < S.members.size(); ++m) {
    if (image_class[m] != r.class_map[S.class_of[m]]) r.class_map_well_defined = false;
  }
  if (!r.class_map_well_defined) r.problems.push_back("gauge-equivalent data have inequivalent images");
  const std::set<std::size_t> distinct(r.class_map.begin(), r.class_map.end());
  r.oracle_bijective = r.class_map_well_defined && distinct.size() == r.class_map.size() &&
                       S.class_count() == T.class_count();

  // Constructive route, surjectivity.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  r.target_class_witness.assign(T.class_count(), kNone);
  std::vector<std::size_t> lifted_class(T.class_count(), kNone);
  for (std::size_t m = 0; m < T.members.size(); ++m) {
    DescentLiftTrace trace = lifter.lift_descent(T.members[m]);
    auto src = S.index_of(trace.lifted);
    if (!src) throw InternalError("a lifted triple is missing from the source enumeration");
    const std::size_t cls = T.class_of[m];
    if (r.class_map[S.class_of[*src]] != cls) {
      r.problems.push_back("the lift of target datum " + std::to_string(m) +
                           " lands in a source class mapped elsewhere by the oracle route");
    }
    if (r.target_class_witness[cls] == kNone) {
      r.target_class_witness[cls] = r.descent_lifts.size();
      lifted_class[cls] = S.class_of[*src];
    }
    r.descent_lifts.push_back(std::move(trace));
  }
  r.constructive_surjective =
      std::find(r.target_class_witness.begin(), r.target_class_witness.end(), kNone) ==
      r.target_class_witness.end();

  // Constructive route, injectivity.
  std::map<std::size_t, std::vector<std::size_t>> by_image;
  for (std::size_t m = 0; m < S.members.size(); ++m) by_image[image_class[m]].push_back(m);
  std::size_t scanned = 0;
  bool injective = true;
  for (const auto& [cls, members] : by_image) {
    for (std::size_t i : members) {
      const DescentDatum yi = apply_morphism(f, S.members[i]);
      const ObjId y0 = push_object(H, vertex(0, 1), yi.x);
      const std::size_t nc = g2_of(H, 1).hom_count(y0, y0);
      for (std::size_t j : members) {
        const DescentDatum yj = apply_morphism(f, S.members[j]);
        const auto homs = g1_of(H, 0).hom(yi.x, yj.x);
        scanned += homs.size() * nc;
        if (scanned > bound) {
          throw ResourceError("gauge lifting needs more than " + std::to_string(bound) +
                              " candidates");
        }
        bool lifted = false;
        for (ArrowId hf : homs) {
          for (std::size_t k = 0; k < nc; ++k) {
            const GaugeTransformation gt{hf, g2_of(H, 1).hom_at(y0, y0, k)};
            if (!is_gauge(H, gt, yi, yj)) continue;
            GaugeLiftTrace trace = lifter.lift_gauge(S.members[i], S.members[j], gt);
            ++r.gauge_lift_count;
            if (!lifted && i != j) r.gauge_lifts.push_back(std::move(trace));
            lifted = true;
          }
        }
        if (!lifted) {
          injective = false;
          r.problems.push_back("no target gauge connects the images of source data " +
                               std::to_string(i) + " and " + std::to_string(j));
        } else if (S.class_of[i] != S.class_of[j]) {
          injective = false;
          r.problems.push_back("a lifted gauge connects data in different source classes");
        }
      }
    }
  }
  r.constructive_injective = injective;
  r.constructive_bijective = r.constructive_surjective && r.constructive_injective;

  bool same_correspondence = true;
  for (std::size_t c = 0; c < T.class_count(); ++c) {
    if (lifted_class[c] == kNone || r.class_map[lifted_class[c]] != c) same_correspondence = false;
  }
  r.agree = r.problems.empty() && same_correspondence &&
            r.oracle_bijective == r.constructive_bijective;
  return r;
}

}  // namespace crossdesc
