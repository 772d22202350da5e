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

#include "crossdesc/descent.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "crossdesc/error.hpp"
#include "faces.hpp"

namespace crossdesc {

namespace {

using detail::edge;
using detail::triangle;
using detail::vertex;

std::string arrow_name(const Groupoid& g, ArrowId a) {
  return g.contains(a) ? g.arrow_label(a) : std::string("<undefined>");
}

ArrowId require(ArrowId a, const char* what) {
  if (!a.valid()) throw DomainError(std::string("table lacks an entry needed for ") + what);
  return a;
}

void check_datum_typing(const CrossedDiagram& d, const DescentDatum& t) {
  const auto& l0 = d.level(0);
  const auto& l1 = d.level(1);
  const auto& l2 = d.level(2);
  if (!l0.g1().contains(t.x)) throw DomainError("descent datum: x is not an object of level 0");
  if (!l1.g1().contains(t.g)) throw DomainError("descent datum: g is not a 1-morphism of level 1");
  if (!l2.g2().contains(t.a)) throw DomainError("descent datum: a is not a 2-morphism of level 2");
  if (l1.g1().source(t.g) != push_object(d, vertex(0, 1), t.x) ||
      l1.g1().target(t.g) != push_object(d, vertex(1, 1), t.x)) {
    throw DomainError("descent datum: g does not run from x_(0) to x_(1)");
  }
  if (l2.g2().source(t.a) != push_object(d, vertex(0, 2), t.x)) {
    throw DomainError("descent datum: a does not live at x_(0)");
  }
}

void check_gauge_typing(const CrossedDiagram& d, const GaugeTransformation& t, ObjId x) {
  const auto& l0 = d.level(0);
  const auto& l1 = d.level(1);
  if (!l0.g1().contains(t.f)) throw DomainError("gauge: f is not a 1-morphism of level 0");
  if (!l1.g2().contains(t.c)) throw DomainError("gauge: c is not a 2-morphism of level 1");
  if (l0.g1().source(t.f) != x) throw DomainError("gauge: f does not start at x");
  if (l1.g2().source(t.c) != push_object(d, vertex(0, 1), x)) {
    throw DomainError("gauge: c does not live at x_(0)");
  }
}

}  // namespace

ArrowId cocycle_failure(const CrossedDiagram& d, ArrowId g) {
  const Word w = {{push_g1(d, edge(0, 2, 2), g), -1},
                  {push_g1(d, edge(1, 2, 2), g), +1},
                  {push_g1(d, edge(0, 1, 2), g), +1}};
  return evaluate_word(d.level(2).g1(), w);
}

ArrowId twisted_cocycle_defect(const CrossedDiagram& d, const DescentDatum& t) {
  const auto& l3 = d.level(3);
  const ArrowId g01 = push_g1(d, edge(0, 1, 3), t.g);
  const ArrowId twisted =
      twist_checked(l3, l3.g1().inverse(g01), push_g2(d, triangle(1, 2, 3), t.a));
  const Word w = {{push_g2(d, triangle(0, 1, 3), t.a), -1},
                  {push_g2(d, triangle(0, 2, 3), t.a), +1},
                  {push_g2(d, triangle(0, 1, 2), t.a), +1},
                  {twisted, -1}};
  return evaluate_word(l3.g2(), w);
}

CheckResult is_descent_datum(const CrossedDiagram& d, const DescentDatum& t) {
  check_datum_typing(d, t);
  CheckResult r;
  const auto& l2 = d.level(2);
  const ArrowId lhs1 = require(cocycle_failure(d, t.g), "the cocycle-failure condition");
  const ArrowId rhs1 = require(l2.feedback(t.a), "the cocycle-failure condition");
  if (lhs1 != rhs1) {
    return {false, "cocycle-failure", 2, arrow_name(l2.g1(), lhs1), arrow_name(l2.g1(), rhs1)};
  }

  const auto& l3 = d.level(3);
  const Word w = {{push_g2(d, triangle(0, 1, 3), t.a), -1},
                  {push_g2(d, triangle(0, 2, 3), t.a), +1},
                  {push_g2(d, triangle(0, 1, 2), t.a), +1}};
  const ArrowId lhs2 = require(evaluate_word(l3.g2(), w), "the twisted-cocycle condition");
  const ArrowId g01 = push_g1(d, edge(0, 1, 3), t.g);
  const ArrowId rhs2 = require(twist_checked(l3, l3.g1().inverse(g01), push_g2(d, triangle(1, 2, 3), t.a)),
                               "the twisted-cocycle condition");
  if (lhs2 != rhs2) {
    return {false, "twisted-cocycle", 3, arrow_name(l3.g2(), lhs2), arrow_name(l3.g2(), rhs2)};
  }
  return r;
}

std::vector<DescentDatum> enumerate_descent(const CrossedDiagram& d, std::size_t bound) {
  const auto& l0 = d.level(0);
  const auto& l1 = d.level(1);
  const auto& l2 = d.level(2);
  std::size_t candidates = 0;
  for (std::size_t i = 0; i < l0.object_count(); ++i) {
    ObjId x{i};
    ObjId x0 = push_object(d, vertex(0, 1), x), x1 = push_object(d, vertex(1, 1), x);
    ObjId y0 = push_object(d, vertex(0, 2), x);
    candidates += l1.g1().hom_count(x0, x1) * l2.g2().hom_count(y0, y0);
    if (candidates > bound) {
      throw ResourceError("descent enumeration needs more than " + std::to_string(bound) +
                          " candidates");
    }
  }

  std::vector<DescentDatum> out;
  for (std::size_t i = 0; i < l0.object_count(); ++i) {
    ObjId x{i};
    ObjId x0 = push_object(d, vertex(0, 1), x), x1 = push_object(d, vertex(1, 1), x);
    ObjId y0 = push_object(d, vertex(0, 2), x);
    const std::size_t n_g = l1.g1().hom_count(x0, x1);
    const std::size_t n_a = l2.g2().hom_count(y0, y0);
    for (std::size_t kg = 0; kg < n_g; ++kg) {
      ArrowId g = l1.g1().hom_at(x0, x1, kg);
      const ArrowId target = cocycle_failure(d, g);
      for (std::size_t ka = 0; ka < n_a; ++ka) {
        ArrowId a = l2.g2().hom_at(y0, y0, ka);
        if (l2.feedback(a) != target) continue;
        DescentDatum t{x, g, a};
        if (is_descent_datum(d, t)) out.push_back(t);
      }
    }
  }
  return out;
}

ArrowId gauge_image_g(const CrossedDiagram& d, const GaugeTransformation& t, ArrowId g) {
  const auto& l1 = d.level(1);
  const Word w = {{push_g1(d, vertex(1, 1), t.f), +1},
                  {g, +1},
                  {l1.feedback(t.c), +1},
                  {push_g1(d, vertex(0, 1), t.f), -1}};
  return evaluate_word(l1.g1(), w);
}

ArrowId gauge_image_a(const CrossedDiagram& d, const GaugeTransformation& t, ArrowId g,
                      ArrowId a) {
  const auto& l2 = d.level(2);
  const Groupoid& g2 = l2.g2();
  const ArrowId g01_inv = l2.g1().inverse(push_g1(d, edge(0, 1, 2), g));
  const ArrowId twisted = twist_checked(l2, g01_inv, push_g2(d, edge(1, 2, 2), t.c));
  const Word w = {{push_g2(d, edge(0, 2, 2), t.c), -1},
                  {a, +1},
                  {twisted, +1},
                  {push_g2(d, edge(0, 1, 2), t.c), +1}};
  return twist_checked(l2, push_g1(d, vertex(0, 2), t.f), evaluate_word(g2, w));
}

DescentDatum gauge_act(const CrossedDiagram& d, const DescentDatum& src,
                       const GaugeTransformation& t) {
  check_gauge_typing(d, t, src.x);
  return {d.level(0).g1().target(t.f), gauge_image_g(d, t, src.g), gauge_image_a(d, t, src.g, src.a)};
}

CheckResult is_partial_gauge(const CrossedDiagram& d, const GaugeTransformation& t,
                             const PartialDescentDatum& src, const PartialDescentDatum& dst) {
  check_gauge_typing(d, t, src.x);
  const auto& l0 = d.level(0);
  const auto& l1 = d.level(1);
  if (l0.g1().target(t.f) != dst.x) {
    return {false, "gauge-object", 0, l0.object_label(l0.g1().target(t.f)), l0.object_label(dst.x)};
  }
  const ArrowId g = gauge_image_g(d, t, src.g);
  if (g != dst.g) return {false, "gauge-g", 1, arrow_name(l1.g1(), g), arrow_name(l1.g1(), dst.g)};
  return {};
}

CheckResult is_gauge(const CrossedDiagram& d, const GaugeTransformation& t,
                     const DescentDatum& src, const DescentDatum& dst) {
  CheckResult r = is_partial_gauge(d, t, {src.x, src.g}, {dst.x, dst.g});
  if (!r) return r;
  const auto& l2 = d.level(2);
  const ArrowId a = gauge_image_a(d, t, src.g, src.a);
  if (a != dst.a) return {false, "gauge-a", 2, arrow_name(l2.g2(), a), arrow_name(l2.g2(), dst.a)};
  return r;
}

GaugeTransformation gauge_identity(const CrossedDiagram& d, ObjId x) {
  const ObjId x0 = push_object(d, vertex(0, 1), x);
  return {d.level(0).g1().identity(x), d.level(1).g2().identity(x0)};
}

GaugeTransformation gauge_compose(const CrossedDiagram& d, const GaugeTransformation& second,
                                  const GaugeTransformation& first) {
  const auto& l0 = d.level(0);
  const auto& l1 = d.level(1);
  if (l0.g1().target(first.f) != l0.g1().source(second.f)) {
    throw DomainError("gauge composition: the chain does not compose");
  }
  const ArrowId f0_inv = l1.g1().inverse(push_g1(d, vertex(0, 1), first.f));
  const ArrowId moved = twist_checked(l1, f0_inv, second.c);
  return {l0.g1().compose_checked(second.f, first.f), l1.g2().compose_checked(first.c, moved)};
}

GaugeTransformation gauge_invert(const CrossedDiagram& d, const GaugeTransformation& t) {
  const auto& l0 = d.level(0);
  const auto& l1 = d.level(1);
  const ArrowId f0 = push_g1(d, vertex(0, 1), t.f);
  return {l0.g1().inverse(t.f), twist_checked(l1, f0, l1.g2().inverse(t.c))};
}

DescentDatum complete_descent(const CrossedDiagram& d, const DescentDatum& src,
                              const PartialDescentDatum& dst, const GaugeTransformation& t) {
  if (CheckResult r = is_partial_gauge(d, t, {src.x, src.g}, dst); !r) {
    throw DomainError("completion: (f, c) is not a partial gauge transformation (" + r.clause +
                      ": " + r.lhs + " vs " + r.rhs + ")");
  }
  DescentDatum out{dst.x, dst.g, gauge_image_a(d, t, src.g, src.a)};
  if (CheckResult r = is_descent_datum(d, out); !r) {
    throw InternalError("completion produced a triple failing " + r.clause);
  }
  if (CheckResult r = is_gauge(d, t, src, out); !r) {
    throw InternalError("completion produced a gauge failing " + r.clause);
  }
  return out;
}

std::optional<std::size_t> ClassTable::index_of(const DescentDatum& t) const {
  auto it = std::lower_bound(members.begin(), members.end(), t);
  if (it == members.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

std::vector<std::size_t> ClassTable::class_members(std::size_t cls) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (class_of[i] == cls) out.push_back(i);
  }
  return out;
}

std::vector<GaugeEdge> gauge_edges(const CrossedDiagram& d, const std::vector<DescentDatum>& data,
                                   std::size_t bound, std::size_t* scanned) {
  const auto& l0 = d.level(0);
  const auto& l1 = d.level(1);
  std::size_t candidates = 0;
  for (const auto& t : data) {
    const ObjId x0 = push_object(d, vertex(0, 1), t.x);
    std::size_t fs = 0;
    for (std::size_t j = 0; j < l0.object_count(); ++j) fs += l0.g1().hom_count(t.x, ObjId{j});
    candidates += fs * l1.g2().hom_count(x0, x0);
    if (candidates > bound) {
      throw ResourceError("gauge classification needs more than " + std::to_string(bound) +
                          " candidates");
    }
  }
  if (scanned) *scanned = candidates;

  std::map<DescentDatum, std::size_t> index;
  for (std::size_t i = 0; i < data.size(); ++i) index.emplace(data[i], i);

  std::vector<GaugeEdge> edges;
  for (std::size_t s = 0; s < data.size(); ++s) {
    const DescentDatum& t = data[s];
    const ObjId x0 = push_object(d, vertex(0, 1), t.x);
    const std::size_t n_c = l1.g2().hom_count(x0, x0);
    for (std::size_t j = 0; j < l0.object_count(); ++j) {
      for (ArrowId f : l0.g1().hom(t.x, ObjId{j})) {
        for (std::size_t kc = 0; kc < n_c; ++kc) {
          GaugeTransformation g{f, l1.g2().hom_at(x0, x0, kc)};
          auto to = index.find(gauge_act(d, t, g));
          if (to == index.end()) {
            throw InternalError("a gauge transformation leaves the set of descent data");
          }
          edges.push_back({s, to->second, g});
        }
      }
    }
  }
  return edges;
}

ClassTable gauge_classes(const CrossedDiagram& d, std::size_t bound) {
  ClassTable table;
  table.members = enumerate_descent(d, bound);
  const std::size_t n = table.members.size();
  const auto edges = gauge_edges(d, table.members, bound, &table.candidates_scanned);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::vector<std::size_t>> adjacent(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    adjacent[edge.from].push_back(e);
    adjacent[edge.to].push_back(e);
    std::size_t a = find(edge.from), b = find(edge.to);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  table.class_of.assign(n, 0);
  table.witness.assign(n, GaugeTransformation{});
  std::vector<bool> reached(n, false);
  for (std::size_t m = 0; m < n; ++m) {
    if (find(m) != m) continue;
    const std::size_t cls = table.representatives.size();
    table.representatives.push_back(m);
    reached[m] = true;
    table.class_of[m] = cls;
    table.witness[m] = gauge_identity(d, table.members[m].x);
    std::deque<std::size_t> queue{m};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t e : adjacent[v]) {
        const auto& edge = edges[e];
        const std::size_t u = edge.from == v ? edge.to : edge.from;
        if (reached[u]) continue;
        reached[u] = true;
        table.class_of[u] = cls;
        // witness[v]: v -> rep. An edge u -> v is followed by it; an edge
        // v -> u is inverted first.
        table.witness[u] = edge.to == v ? gauge_compose(d, table.witness[v], edge.gauge)
                                        : gauge_compose(d, table.witness[v],
                                                        gauge_invert(d, edge.gauge));
        queue.push_back(u);
      }
    }
  }

  for (std::size_t m = 0; m < n; ++m) {
    const DescentDatum& rep = table.members[table.representatives[table.class_of[m]]];
    if (CheckResult r = is_gauge(d, table.witness[m], table.members[m], rep); !r) {
      throw InternalError("class witness fails to verify (" + r.clause + ")");
    }
  }
  return table;
}

}  // namespace crossdesc
