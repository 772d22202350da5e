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

#include "crossdesc/crossed.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "crossdesc/error.hpp"

namespace crossdesc {

namespace {

std::uint64_t pair_key(ArrowId a, ArrowId b) {
  return (std::uint64_t{a.value} << 32) | b.value;
}

std::string label_or_none(const Groupoid& g, ArrowId a) {
  return g.contains(a) ? g.arrow_label(a) : std::string("<none>");
}

// Arrows leaving each object, in id order.
std::vector<std::vector<ArrowId>> out_arrows(const Groupoid& g) {
  std::vector<std::vector<ArrowId>> out(g.object_count());
  for (std::size_t i = 0; i < g.arrow_count(); ++i) {
    out[g.source(ArrowId{i}).index()].push_back(ArrowId{i});
  }
  return out;
}

std::size_t composable_pair_count(const Groupoid& g) {
  std::vector<std::size_t> outdeg(g.object_count(), 0);
  for (std::size_t y = 0; y < g.object_count(); ++y) {
    for (std::size_t z = 0; z < g.object_count(); ++z) {
      outdeg[y] += g.hom_count(ObjId{y}, ObjId{z});
    }
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < g.arrow_count(); ++i) {
    total += outdeg[g.target(ArrowId{i}).index()];
  }
  return total;
}

// Calls fn(after, before) on every composable pair, or on `budget` sampled
// pairs when there are more. Returns false when sampling was used.
template <typename Fn>
bool for_composable_pairs(const Groupoid& g, std::size_t budget, Fn&& fn) {
  const std::size_t total = composable_pair_count(g);
  if (total <= budget) {
    for (std::size_t i = 0; i < g.arrow_count(); ++i) {
      ArrowId before{i};
      ObjId y = g.target(before);
      for (std::size_t z = 0; z < g.object_count(); ++z) {
        const std::size_t n = g.hom_count(y, ObjId{z});
        for (std::size_t k = 0; k < n; ++k) fn(g.hom_at(y, ObjId{z}, k), before);
      }
    }
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick_arrow(0, g.arrow_count() - 1);
  for (std::size_t s = 0; s < budget; ++s) {
    ArrowId before{pick_arrow(rng)};
    ObjId y = g.target(before);
    std::vector<std::pair<ObjId, std::size_t>> targets;
    for (std::size_t z = 0; z < g.object_count(); ++z) {
      if (std::size_t n = g.hom_count(y, ObjId{z}); n > 0) targets.emplace_back(ObjId{z}, n);
    }
    auto [z, n] = targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)];
    fn(g.hom_at(y, z, std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)), before);
  }
  return false;
}

std::size_t validation_work(const CrossedGroupoid& c) {
  std::size_t work = 0;
  const auto& g2 = c.g2();
  for (std::size_t x = 0; x < g2.object_count(); ++x) {
    std::size_t n = g2.hom_count(ObjId{x}, ObjId{x});
    work += n * n * n;
  }
  std::size_t n1 = c.g1().arrow_count();
  std::size_t obj = std::max<std::size_t>(1, c.g1().object_count());
  work += n1 * n1 * n1 / (obj * obj);
  return work;
}

}  // namespace

ArrowId twist_checked(const CrossedGroupoid& c, ArrowId g, ArrowId a) {
  if (!c.g1().contains(g) || !c.g2().contains(a)) {
    throw DomainError("twist: unknown morphism");
  }
  if (c.g1().source(g) != c.g2().source(a)) {
    throw DomainError("twist: " + c.g1().arrow_label(g) + " starts at " +
                      c.object_label(c.g1().source(g)) + " but " +
                      c.g2().arrow_label(a) + " lives at " +
                      c.object_label(c.g2().source(a)));
  }
  ArrowId r = c.twist(g, a);
  if (!r.valid()) throw DomainError("twist: missing table entry");
  return r;
}

ArrowId feedback_checked(const CrossedGroupoid& c, ArrowId a) {
  if (!c.g2().contains(a)) throw DomainError("feedback: unknown 2-morphism");
  ArrowId r = c.feedback(a);
  if (!r.valid()) throw DomainError("feedback: missing table entry");
  return r;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const TableCrossed> TableCrossed::from_tables(const CrossedTables& t) {
  auto c = std::shared_ptr<TableCrossed>(new TableCrossed());
  c->g1_ = FiniteGroupoid::from_tables(t.g1);

  std::set<std::string> g1_objects(t.g1.objects.begin(), t.g1.objects.end());
  std::set<std::string> g2_objects;
  for (const auto& [obj, _] : t.g2) g2_objects.insert(obj);
  if (g1_objects != g2_objects) {
    throw LoadError("object sets of g1 and g2 differ");
  }

  GroupoidTables g2;
  for (const auto& [obj, grp] : t.g2) {
    g2.objects.push_back(obj);
    for (const auto& e : grp.elements) g2.arrows.push_back({e, obj, obj});
    if (!grp.identity.empty()) g2.identity[obj] = grp.identity;
    for (const auto& [a, b] : grp.inverse) g2.inverse[a] = b;
    for (const auto& entry : grp.compose) g2.compose.push_back(entry);
  }
  c->g2_ = FiniteGroupoid::from_tables(g2);

  auto g1_arrow = [&](const std::string& l) {
    auto a = c->g1_.find_arrow(l);
    if (!a) throw LoadError("unknown 1-morphism '" + l + "'");
    return *a;
  };
  auto g2_arrow = [&](const std::string& l) {
    auto a = c->g2_.find_arrow(l);
    if (!a) throw LoadError("unknown 2-morphism '" + l + "'");
    return *a;
  };

  for (const auto& [g_l, a_l, r_l] : t.twist) {
    ArrowId g = g1_arrow(g_l), a = g2_arrow(a_l), r = g2_arrow(r_l);
    if (c->g1_.source(g) != c->g2_.source(a)) {
      c->issues_.push_back({"twist-action",
                            "twist entry for a 2-morphism not at the source object",
                            {g_l, a_l, r_l}});
      continue;
    }
    auto [it, inserted] = c->twist_.emplace(pair_key(g, a), r);
    if (!inserted && it->second != r) {
      c->issues_.push_back({"twist-action", "conflicting twist entries",
                            {g_l, a_l, r_l, c->g2_.arrow_label(it->second)}});
    }
  }

  c->feedback_.assign(c->g2_.arrow_count(), kNoArrow);
  for (const auto& [a_l, d_l] : t.feedback) {
    c->feedback_[g2_arrow(a_l).index()] = g1_arrow(d_l);
  }
  return c;
}

ArrowId TableCrossed::twist(ArrowId g, ArrowId a) const {
  auto it = twist_.find(pair_key(g, a));
  return it == twist_.end() ? kNoArrow : it->second;
}

void TableCrossed::table_issues(ValidationReport& report) const {
  for (const auto& v : issues_) report.add(v.clause, v.detail, v.witnesses);
}

CrossedTables tables_of(const CrossedGroupoid& c) {
  CrossedTables t;
  const auto& g1 = c.g1();
  const auto& g2 = c.g2();
  t.g1 = tables_of(g1);
  for (std::size_t i = 0; i < g2.object_count(); ++i) {
    ObjId x{i};
    GroupTables grp;
    for (ArrowId a : g2.hom(x, x)) {
      grp.elements.push_back(g2.arrow_label(a));
      if (g2.inverse(a).valid()) grp.inverse[g2.arrow_label(a)] = g2.arrow_label(g2.inverse(a));
    }
    if (g2.identity(x).valid()) grp.identity = g2.arrow_label(g2.identity(x));
    for (ArrowId a : g2.hom(x, x)) {
      for (ArrowId b : g2.hom(x, x)) {
        ArrowId r = g2.compose(a, b);
        if (r.valid()) grp.compose.push_back({g2.arrow_label(a), g2.arrow_label(b), g2.arrow_label(r)});
      }
    }
    t.g2[g2.object_label(x)] = std::move(grp);
  }
  for (std::size_t i = 0; i < g1.arrow_count(); ++i) {
    ArrowId g{i};
    ObjId x = g1.source(g);
    for (ArrowId a : g2.hom(x, x)) {
      ArrowId r = c.twist(g, a);
      if (r.valid()) t.twist.push_back({g1.arrow_label(g), g2.arrow_label(a), g2.arrow_label(r)});
    }
  }
  for (std::size_t i = 0; i < g2.arrow_count(); ++i) {
    ArrowId d = c.feedback(ArrowId{i});
    if (d.valid()) t.feedback[g2.arrow_label(ArrowId{i})] = g1.arrow_label(d);
  }
  return t;
}

// ---------------------------------------------------------------------------

ValidationReport validate_crossed(const CrossedGroupoid& c, std::size_t work_budget) {
  if (const CrossedGroupoid* base = c.structural_base();
      base != nullptr && validation_work(c) > work_budget) {
    ValidationReport r = validate_crossed(*base, work_budget);
    r.set_coverage("structural");
    return r;
  }

  ValidationReport report;
  c.table_issues(report);
  const Groupoid& g1 = c.g1();
  const Groupoid& g2 = c.g2();

  if (g1.object_count() != g2.object_count()) {
    report.add("object-sets", "g1 and g2 have different object counts");
    return report;
  }
  for (std::size_t i = 0; i < g1.object_count(); ++i) {
    if (g1.object_label(ObjId{i}) != g2.object_label(ObjId{i})) {
      report.add("object-sets", "object labels of g1 and g2 differ",
                 {g1.object_label(ObjId{i}), g2.object_label(ObjId{i})});
    }
  }
  report.merge("g1", validate_groupoid(g1));
  report.merge("g2", validate_groupoid(g2));
  for (std::size_t i = 0; i < g2.arrow_count(); ++i) {
    ArrowId a{i};
    if (g2.source(a) != g2.target(a)) {
      report.add("g2.totally-disconnected", "2-morphism between distinct objects",
                 {g2.arrow_label(a)});
    }
  }
  if (!report.ok()) return report;  // the remaining checks assume groupoids

  auto l1 = [&](ArrowId g) { return label_or_none(g1, g); };
  auto l2 = [&](ArrowId a) { return label_or_none(g2, a); };
  auto conj1 = [&](ArrowId g, ArrowId h) {  // g ∘ h ∘ g⁻¹ in g1
    return g1.compose(g1.compose(g, h), g1.inverse(g));
  };
  auto conj2 = [&](ArrowId a, ArrowId b) {
    return g2.compose(g2.compose(a, b), g2.inverse(a));
  };

  // Feedback is a functor into the automorphism groups of g1.
  bool feedback_ok = true;
  for (std::size_t i = 0; i < g2.arrow_count(); ++i) {
    ArrowId a{i};
    ArrowId d = c.feedback(a);
    ObjId x = g2.source(a);
    if (!g1.contains(d) || g1.source(d) != x || g1.target(d) != x) {
      report.add("feedback-functor", "feedback is missing or not an automorphism of the object",
                 {l2(a), l1(d)});
      feedback_ok = false;
    }
  }
  if (feedback_ok) {
    for (std::size_t i = 0; i < g2.object_count(); ++i) {
      ObjId x{i};
      if (c.feedback(g2.identity(x)) != g1.identity(x)) {
        report.add("feedback-functor", "feedback does not preserve the identity",
                   {g2.object_label(x)});
      }
      const auto cells = g2.hom(x, x);
      for (ArrowId a : cells) {
        for (ArrowId b : cells) {
          if (c.feedback(g2.compose(a, b)) != g1.compose(c.feedback(a), c.feedback(b))) {
            report.add("feedback-functor", "D(a o b) differs from D(a) o D(b)", {l2(a), l2(b)});
          }
        }
      }
    }
  }

  // Twist is an action by group isomorphisms.
  bool twist_ok = true;
  for (std::size_t i = 0; i < g1.arrow_count(); ++i) {
    ArrowId g{i};
    ObjId x = g1.source(g), y = g1.target(g);
    const auto cells = g2.hom(x, x);
    for (ArrowId a : cells) {
      ArrowId r = c.twist(g, a);
      if (!g2.contains(r) || g2.source(r) != y) {
        report.add("twist-action", "twist entry missing or not at the target object",
                   {l1(g), l2(a), l2(r)});
        twist_ok = false;
      }
    }
  }
  if (twist_ok) {
    for (std::size_t i = 0; i < g1.object_count(); ++i) {
      ObjId x{i};
      for (ArrowId a : g2.hom(x, x)) {
        if (c.twist(g1.identity(x), a) != a) {
          report.add("twist-action", "twist by an identity is not the identity",
                     {l1(g1.identity(x)), l2(a)});
        }
      }
    }
    auto out = out_arrows(g1);
    for (std::size_t i = 0; i < g1.arrow_count(); ++i) {
      ArrowId g{i};
      ObjId x = g1.source(g);
      const auto cells = g2.hom(x, x);
      for (ArrowId h : out[g1.target(g).index()]) {
        ArrowId hg = g1.compose(h, g);
        for (ArrowId a : cells) {
          if (c.twist(hg, a) != c.twist(h, c.twist(g, a))) {
            report.add("twist-action", "twist(h o g) differs from twist(h) o twist(g)",
                       {l1(h), l1(g), l2(a)});
          }
        }
      }
      for (ArrowId a : cells) {
        for (ArrowId b : cells) {
          if (c.twist(g, g2.compose(a, b)) != g2.compose(c.twist(g, a), c.twist(g, b))) {
            report.add("twist-action", "twist(g) is not a group homomorphism",
                       {l1(g), l2(a), l2(b)});
          }
        }
      }
    }
  }

  if (!feedback_ok || !twist_ok) return report;

  for (std::size_t i = 0; i < g1.arrow_count(); ++i) {
    ArrowId g{i};
    ObjId x = g1.source(g);
    for (ArrowId a : g2.hom(x, x)) {
      ArrowId lhs = c.feedback(c.twist(g, a));
      ArrowId rhs = conj1(g, c.feedback(a));
      if (lhs != rhs) {
        report.add("equivariance", "D(twist(g)(a)) differs from g o D(a) o g^-1",
                   {l1(g), l2(a), l1(lhs), l1(rhs)});
      }
    }
  }

  for (std::size_t i = 0; i < g2.object_count(); ++i) {
    ObjId x{i};
    const auto cells = g2.hom(x, x);
    for (ArrowId a : cells) {
      ArrowId d = c.feedback(a);
      for (ArrowId b : cells) {
        ArrowId lhs = c.twist(d, b);
        ArrowId rhs = conj2(a, b);
        if (lhs != rhs) {
          report.add("peiffer", "twist(D(a))(b) differs from a o b o a^-1",
                     {l2(a), l2(b), l2(lhs), l2(rhs)});
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

CrossedMorphism::CrossedMorphism(CrossedPtr source, CrossedPtr target, ObjectMap objects,
                                 ArrowMap g1, ArrowMap g2)
    : source_(std::move(source)),
      target_(std::move(target)),
      objects_(std::move(objects)),
      g1_(std::move(g1)),
      g2_(std::move(g2)) {}

CrossedMorphism CrossedMorphism::identity(CrossedPtr c) {
  return CrossedMorphism(c, c, [](ObjId x) { return x; }, [](ArrowId g) { return g; },
                         [](ArrowId a) { return a; });
}

CrossedMorphism CrossedMorphism::from_tables(CrossedPtr source, CrossedPtr target,
                                             const Tables& t) {
  auto objects = std::make_shared<std::vector<ObjId>>(source->object_count(), kNoObject);
  auto g1 = std::make_shared<std::vector<ArrowId>>(source->g1().arrow_count(), kNoArrow);
  auto g2 = std::make_shared<std::vector<ArrowId>>(source->g2().arrow_count(), kNoArrow);
  auto resolve_obj = [](const Groupoid& g, const std::string& l, const char* side) {
    auto x = g.find_object(l);
    if (!x) throw LoadError(std::string("morphism ") + side + ": unknown object '" + l + "'");
    return *x;
  };
  auto resolve_arrow = [](const Groupoid& g, const std::string& l, const char* side) {
    auto a = g.find_arrow(l);
    if (!a) throw LoadError(std::string("morphism ") + side + ": unknown morphism '" + l + "'");
    return *a;
  };
  for (const auto& [s, d] : t.objects) {
    (*objects)[resolve_obj(source->g1(), s, "source").index()] =
        resolve_obj(target->g1(), d, "target");
  }
  for (const auto& [s, d] : t.g1) {
    (*g1)[resolve_arrow(source->g1(), s, "source").index()] =
        resolve_arrow(target->g1(), d, "target");
  }
  for (const auto& [s, d] : t.g2) {
    (*g2)[resolve_arrow(source->g2(), s, "source").index()] =
        resolve_arrow(target->g2(), d, "target");
  }
  return CrossedMorphism(
      std::move(source), std::move(target),
      [objects](ObjId x) { return x.index() < objects->size() ? (*objects)[x.index()] : kNoObject; },
      [g1](ArrowId g) { return g.index() < g1->size() ? (*g1)[g.index()] : kNoArrow; },
      [g2](ArrowId a) { return a.index() < g2->size() ? (*g2)[a.index()] : kNoArrow; });
}

CrossedMorphism::Tables CrossedMorphism::tables() const {
  Tables t;
  const auto& s = source();
  const auto& d = target();
  for (std::size_t i = 0; i < s.object_count(); ++i) {
    ObjId y = object(ObjId{i});
    if (d.g1().contains(y)) t.objects[s.object_label(ObjId{i})] = d.object_label(y);
  }
  for (std::size_t i = 0; i < s.g1().arrow_count(); ++i) {
    ArrowId h = g1(ArrowId{i});
    if (d.g1().contains(h)) t.g1[s.g1().arrow_label(ArrowId{i})] = d.g1().arrow_label(h);
  }
  for (std::size_t i = 0; i < s.g2().arrow_count(); ++i) {
    ArrowId b = g2(ArrowId{i});
    if (d.g2().contains(b)) t.g2[s.g2().arrow_label(ArrowId{i})] = d.g2().arrow_label(b);
  }
  return t;
}

CrossedMorphism CrossedMorphism::compose(const CrossedMorphism& after,
                                         const CrossedMorphism& before) {
  return CrossedMorphism(
      before.source_, after.target_,
      [a = after.objects_, b = before.objects_](ObjId x) { return a(b(x)); },
      [a = after.g1_, b = before.g1_](ArrowId g) { return a(b(g)); },
      [a = after.g2_, b = before.g2_](ArrowId g) { return a(b(g)); });
}

ValidationReport validate_crossed_morphism(const CrossedMorphism& f, std::size_t work_budget) {
  ValidationReport report;
  const CrossedGroupoid& s = f.source();
  const CrossedGroupoid& t = f.target();

  bool typed = true;
  for (std::size_t i = 0; i < s.object_count(); ++i) {
    if (!t.g1().contains(f.object(ObjId{i}))) {
      report.add("object-map", "object is not mapped", {s.object_label(ObjId{i})});
      typed = false;
    }
  }
  auto check_arrows = [&](const Groupoid& sg, const Groupoid& tg, auto&& map,
                          const std::string& clause) {
    for (std::size_t i = 0; i < sg.arrow_count(); ++i) {
      ArrowId a{i};
      ArrowId b = map(a);
      if (!tg.contains(b)) {
        report.add(clause, "morphism is not mapped", {sg.arrow_label(a)});
        typed = false;
      } else if (tg.source(b) != f.object(sg.source(a)) || tg.target(b) != f.object(sg.target(a))) {
        report.add(clause, "image has the wrong source or target",
                   {sg.arrow_label(a), tg.arrow_label(b)});
        typed = false;
      }
    }
  };
  if (!typed) return report;
  check_arrows(s.g1(), t.g1(), [&](ArrowId a) { return f.g1(a); }, "g1-functor");
  check_arrows(s.g2(), t.g2(), [&](ArrowId a) { return f.g2(a); }, "g2-functor");
  if (!typed) return report;

  auto check_functor = [&](const Groupoid& sg, const Groupoid& tg, auto&& map,
                           const std::string& clause) {
    for (std::size_t i = 0; i < sg.object_count(); ++i) {
      ObjId x{i};
      if (map(sg.identity(x)) != tg.identity(f.object(x))) {
        report.add(clause, "identity is not preserved", {sg.object_label(x)});
      }
    }
    bool exhaustive = for_composable_pairs(sg, work_budget, [&](ArrowId h, ArrowId g) {
      if (map(sg.compose(h, g)) != tg.compose(map(h), map(g))) {
        report.add(clause, "composition is not preserved",
                   {sg.arrow_label(h), sg.arrow_label(g)});
      }
    });
    if (!exhaustive) report.set_coverage("sampled");
  };
  check_functor(s.g1(), t.g1(), [&](ArrowId a) { return f.g1(a); }, "g1-functor");
  check_functor(s.g2(), t.g2(), [&](ArrowId a) { return f.g2(a); }, "g2-functor");

  for (std::size_t i = 0; i < s.g1().arrow_count(); ++i) {
    ArrowId g{i};
    ObjId x = s.g1().source(g);
    const std::size_t n = s.g2().hom_count(x, x);
    for (std::size_t k = 0; k < n; ++k) {
      ArrowId a = s.g2().hom_at(x, x, k);
      if (f.g2(s.twist(g, a)) != t.twist(f.g1(g), f.g2(a))) {
        report.add("twist-compat", "F(twist(g)(a)) differs from twist(F g)(F a)",
                   {s.g1().arrow_label(g), s.g2().arrow_label(a)});
      }
    }
  }
  for (std::size_t i = 0; i < s.g2().arrow_count(); ++i) {
    ArrowId a{i};
    if (f.g1(s.feedback(a)) != t.feedback(f.g2(a))) {
      report.add("feedback-compat", "F(D(a)) differs from D(F a)", {s.g2().arrow_label(a)});
    }
  }
  return report;
}

}  // namespace crossdesc
