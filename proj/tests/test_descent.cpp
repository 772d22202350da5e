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

#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "crossdesc/descent.hpp"
#include "crossdesc/error.hpp"
#include "crossdesc/fixtures.hpp"
#include "oracle.hpp"

using namespace crossdesc;

namespace {

oracle::Datum as_tuple(const DescentDatum& t) { return {t.x, t.g, t.a}; }

// Typed gauge candidates out of a datum, in the library's own terms.
std::vector<GaugeTransformation> gauges_from(const CrossedDiagram& d, const DescentDatum& t) {
  std::vector<GaugeTransformation> out;
  const Groupoid& z = d.level(0).g1();
  ObjId x0 = d.coface(0, 1).object(t.x);
  for (std::size_t j = 0; j < d.level(0).object_count(); ++j) {
    for (ArrowId f : z.hom(t.x, ObjId{j})) {
      for (ArrowId c : d.level(1).g2().hom(x0, x0)) out.push_back({f, c});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("descent data match the brute-force enumerator") {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> frozen = {
      {"FixA", {2, 1}},     {"FixB", {1, 1}},         {"FixC", {2, 1}},
      {"FixA-fat", {4, 1}}, {"FixCech", {8, 1}},      {"FixCech-fat", {16, 1}},
      {"inner-S3", {6, 1}}, {"inner-S3-fat", {12, 1}}, {"trivial", {1, 1}}};
  for (const auto& [name, counts] : frozen) {
    CAPTURE(name);
    DiagramPtr d = builtin_diagram(name);
    auto data = enumerate_descent(*d);
    auto expected = oracle::enumerate(*d);
    REQUIRE(data.size() == expected.size());
    for (std::size_t i = 0; i < data.size(); ++i) CHECK(as_tuple(data[i]) == expected[i]);
    CHECK(data.size() == counts.first);
    ClassTable table = gauge_classes(*d);
    CHECK(table.class_count() == oracle::classify(*d).count);
    CHECK(table.class_count() == counts.second);
  }
}

TEST_CASE("descent data of a constant diagram are the triples (x, D(a), a)") {
  for (const auto& core : {fix_a_core(), fix_b_core(), fix_c_core(),
                           inner_crossed(FiniteGroup::cyclic(3)),
                           crossed_from_normal_subgroup(FiniteGroup::symmetric(3), {0, 3, 4})}) {
    DiagramPtr d = constant_diagram(core);
    std::set<DescentDatum> expected;
    for (std::size_t i = 0; i < core->g2().arrow_count(); ++i) {
      ArrowId a{i};
      expected.insert({core->g2().source(a), core->feedback(a), a});
    }
    auto data = enumerate_descent(*d);
    CHECK(std::set<DescentDatum>(data.begin(), data.end()) == expected);
  }
}

TEST_CASE("the Cech fixture counts match the cocycle count") {
  auto counts = oracle::cech_z2_degree2(2);
  CHECK(counts.cocycles == 8);
  CHECK(counts.coboundaries == 8);
  DiagramPtr d = builtin_diagram("FixCech");
  CHECK(enumerate_descent(*d).size() == counts.cocycles);
  CHECK(gauge_classes(*d).class_count() == counts.cocycles / counts.coboundaries);
}

TEST_CASE("Cech cocycles of larger covers are all coboundaries") {
  for (int m = 1; m <= 3; ++m) {
    CAPTURE(m);
    auto counts = oracle::cech_z2_degree2(m);
    CHECK(counts.cocycles == counts.coboundaries);
    CHECK(counts.coboundaries == (std::size_t{1} << (m * m - m + 1)));
  }
  CHECK_THROWS_AS(cech_diagram(fix_a_core(), 3), ResourceError);
}

TEST_CASE("descent checks name the failing condition") {
  DiagramPtr d = builtin_diagram("FixB");
  // FixB: g1 = Z/2, g2 trivial; only g = 0 satisfies the cocycle failure.
  ArrowId one = *d->level(1).g1().find_arrow("1");
  CheckResult r = is_descent_datum(*d, {ObjId{0u}, one, ArrowId{0u}});
  CHECK_FALSE(r.ok);
  CHECK(r.clause == "cocycle-failure");
  CHECK(r.level == 2);

  DiagramPtr c = builtin_diagram("FixCech");
  ArrowId a = *c->level(2).g2().find_arrow("(1,0,0,0,0,0,0,0)");
  CheckResult s = is_descent_datum(*c, {ObjId{0u}, c->level(1).g1().identity(ObjId{0u}), a});
  CHECK_FALSE(s.ok);
  CHECK(s.clause == "twisted-cocycle");
  CHECK(s.level == 3);

  CHECK_THROWS_AS(is_descent_datum(*d, {ObjId{5u}, one, ArrowId{0u}}), DomainError);
}

TEST_CASE("enumeration respects the bound") {
  DiagramPtr d = builtin_diagram("FixCech");
  CHECK_THROWS_AS(enumerate_descent(*d, 10), ResourceError);
  CHECK_THROWS_AS(gauge_classes(*d, 100), ResourceError);
}

TEST_CASE("gauge images agree with the brute-force action") {
  for (const char* name : {"FixA", "FixA-fat", "FixCech", "inner-S3-fat"}) {
    CAPTURE(name);
    DiagramPtr d = builtin_diagram(name);
    for (const auto& t : enumerate_descent(*d)) {
      std::map<oracle::Gauge, oracle::Datum> expected;
      for (const auto& [g, img] : oracle::act_all(*d, as_tuple(t))) expected[g] = img;
      for (const auto& u : gauges_from(*d, t)) {
        DescentDatum img = gauge_act(*d, t, u);
        CHECK(as_tuple(img) == expected.at({u.f, u.c}));
        CHECK(is_gauge(*d, u, t, img).ok);
      }
    }
  }
}

TEST_CASE("gauge identity, composition and inversion") {
  std::mt19937 rng(1014);
  for (const char* name : {"FixA-fat", "FixCech", "inner-S3-fat"}) {
    CAPTURE(name);
    DiagramPtr d = builtin_diagram(name);
    auto data = enumerate_descent(*d);
    for (const auto& t : data) {
      GaugeTransformation id = gauge_identity(*d, t.x);
      CHECK(gauge_act(*d, t, id) == t);
    }
    for (int trial = 0; trial < 200; ++trial) {
      const DescentDatum& t = data[rng() % data.size()];
      auto out1 = gauges_from(*d, t);
      GaugeTransformation u = out1[rng() % out1.size()];
      DescentDatum s = gauge_act(*d, t, u);
      auto out2 = gauges_from(*d, s);
      GaugeTransformation v = out2[rng() % out2.size()];
      DescentDatum r = gauge_act(*d, s, v);

      GaugeTransformation vu = gauge_compose(*d, v, u);
      CHECK(is_gauge(*d, vu, t, r).ok);
      CHECK(gauge_act(*d, t, vu) == r);
      GaugeTransformation inv = gauge_invert(*d, u);
      CHECK(is_gauge(*d, inv, s, t).ok);
      CHECK(gauge_compose(*d, inv, u) == gauge_identity(*d, t.x));
    }
  }
}

TEST_CASE("composition rejects gauges that do not chain") {
  DiagramPtr d = builtin_diagram("FixA-fat");
  const Groupoid& z = d->level(0).g1();
  ArrowId f01 = *z.find_arrow("1#0>1");
  GaugeTransformation u{f01, d->level(1).g2().identity(d->coface(0, 1).object(z.source(f01)))};
  CHECK_THROWS_AS(gauge_compose(*d, u, u), DomainError);
}

TEST_CASE("a gauge check reports the failing equation") {
  DiagramPtr d = builtin_diagram("FixA");
  auto data = enumerate_descent(*d);
  REQUIRE(data.size() == 2);
  GaugeTransformation id = gauge_identity(*d, data[0].x);
  CheckResult r = is_gauge(*d, id, data[0], data[1]);
  CHECK_FALSE(r.ok);
  CHECK(r.clause == "gauge-a");
}

TEST_CASE("complete_descent returns the unique completion") {
  for (const char* name : {"FixA", "FixA-fat", "inner-S3"}) {
    CAPTURE(name);
    DiagramPtr d = builtin_diagram(name);
    const Groupoid& one = d->level(1).g1();
    std::size_t triples = 0;
    for (const auto& src : enumerate_descent(*d)) {
      for (const auto& u : gauges_from(*d, src)) {
        ObjId y = d->level(0).g1().target(u.f);
        ObjId y0 = d->coface(0, 1).object(y), y1 = d->coface(0, 0).object(y);
        for (ArrowId g : one.hom(y0, y1)) {
          PartialDescentDatum dst{y, g};
          if (!is_partial_gauge(*d, u, {src.x, src.g}, dst).ok) {
            CHECK_THROWS_AS(complete_descent(*d, src, dst, u), DomainError);
            continue;
          }
          ++triples;
          DescentDatum out = complete_descent(*d, src, dst, u);
          CHECK(out.x == y);
          CHECK(out.g == g);
          std::size_t valid = 0;
          ObjId z0 = d->coface(1, 2).object(y0);
          for (ArrowId a : d->level(2).g2().hom(z0, z0)) {
            DescentDatum cand{y, g, a};
            if (is_descent_datum(*d, cand).ok && is_gauge(*d, u, src, cand).ok) {
              ++valid;
              CHECK(cand == out);
            }
          }
          CHECK(valid == 1);
        }
      }
    }
    CHECK(triples > 0);
  }
}

TEST_CASE("classes carry verified witnesses") {
  for (const char* name : {"FixA-fat", "FixCech-fat", "inner-S3-fat"}) {
    CAPTURE(name);
    DiagramPtr d = builtin_diagram(name);
    ClassTable t = gauge_classes(*d);
    for (std::size_t i = 0; i < t.members.size(); ++i) {
      const DescentDatum& rep = t.members[t.representatives[t.class_of[i]]];
      CHECK(is_gauge(*d, t.witness[i], t.members[i], rep).ok);
      CHECK(t.index_of(t.members[i]) == i);
    }
    for (std::size_t k = 0; k < t.class_count(); ++k) {
      auto members = t.class_members(k);
      CHECK(members.front() == t.representatives[k]);
    }
  }
}

TEST_CASE("a diagram without objects has no descent data") {
  DiagramPtr d = constant_diagram(TableCrossed::from_tables({}));
  CHECK(enumerate_descent(*d).empty());
  ClassTable t = gauge_classes(*d);
  CHECK(t.class_count() == 0);
}

TEST_CASE("several gauge classes on a disconnected diagram") {
  // Two unrelated objects each carrying FixB: two classes.
  CrossedTables t = tables_of(*fatten(fix_b_core(), 1).crossed);
  CrossedTables u = t;
  auto rename = [](CrossedTables& tab, const std::string& suffix) {
    CrossedTables out;
    auto r = [&](const std::string& s) { return s + suffix; };
    for (auto& o : tab.g1.objects) out.g1.objects.push_back(r(o));
    for (auto& a : tab.g1.arrows) out.g1.arrows.push_back({r(a.id), r(a.src), r(a.dst)});
    for (auto& [k, v] : tab.g1.identity) out.g1.identity[r(k)] = r(v);
    for (auto& [k, v] : tab.g1.inverse) out.g1.inverse[r(k)] = r(v);
    for (auto& e : tab.g1.compose) out.g1.compose.push_back({r(e[0]), r(e[1]), r(e[2])});
    for (auto& [o, grp] : tab.g2) {
      GroupTables g;
      for (auto& e : grp.elements) g.elements.push_back(r(e));
      g.identity = r(grp.identity);
      for (auto& e : grp.compose) g.compose.push_back({r(e[0]), r(e[1]), r(e[2])});
      for (auto& [k, v] : grp.inverse) g.inverse[r(k)] = r(v);
      out.g2[r(o)] = g;
    }
    for (auto& e : tab.twist) out.twist.push_back({r(e[0]), r(e[1]), r(e[2])});
    for (auto& [k, v] : tab.feedback) out.feedback[r(k)] = r(v);
    return out;
  };
  CrossedTables a = rename(t, "p"), b = rename(u, "q");
  a.g1.objects.insert(a.g1.objects.end(), b.g1.objects.begin(), b.g1.objects.end());
  a.g1.arrows.insert(a.g1.arrows.end(), b.g1.arrows.begin(), b.g1.arrows.end());
  a.g1.identity.insert(b.g1.identity.begin(), b.g1.identity.end());
  a.g1.inverse.insert(b.g1.inverse.begin(), b.g1.inverse.end());
  a.g1.compose.insert(a.g1.compose.end(), b.g1.compose.begin(), b.g1.compose.end());
  a.g2.insert(b.g2.begin(), b.g2.end());
  a.twist.insert(a.twist.end(), b.twist.begin(), b.twist.end());
  a.feedback.insert(b.feedback.begin(), b.feedback.end());
  auto c = TableCrossed::from_tables(a);
  REQUIRE(validate_crossed(*c).ok());
  DiagramPtr d = constant_diagram(c);
  CHECK(enumerate_descent(*d).size() == 2);
  CHECK(gauge_classes(*d).class_count() == 2);
  CHECK(oracle::classify(*d).count == 2);
}
