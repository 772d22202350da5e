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

#include <numeric>
#include <set>

#include "crossdesc/error.hpp"
#include "crossdesc/fixtures.hpp"
#include "crossdesc/homotopy.hpp"
#include "crossdesc/transfer.hpp"

using namespace crossdesc;

namespace {

int euler_phi(int n) {
  int out = 0;
  for (int k = 1; k <= n; ++k) out += std::gcd(k, n) == 1;
  return out;
}

bool is_group(const FiniteGroup& g) {
  int n = g.order();
  for (int a = 0; a < n; ++a) {
    if (g(g.identity, a) != a || g(a, g.identity) != a) return false;
    if (g(a, g.inverse[a]) != g.identity) return false;
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (g(g(a, b), c) != g(a, g(b, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("group constructors") {
  CHECK(FiniteGroup::cyclic(12).labels[3] == "03");
  CHECK(FiniteGroup::symmetric(3).labels ==
        std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
  for (int n = 1; n <= 8; ++n) CHECK(is_group(FiniteGroup::cyclic(n)));
  for (int n = 1; n <= 4; ++n) CHECK(is_group(FiniteGroup::symmetric(n)));
  CHECK(FiniteGroup::symmetric(4).order() == 24);
  CHECK(FiniteGroup::trivial().order() == 1);

  // Right to left: (12) o (23) applies (23) first and sends 1->2, 2->3, 3->1.
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.labels[s3(s3.find("213"), s3.find("132"))] == "231");
  CHECK(s3.element_order(s3.find("231")) == 3);
}

TEST_CASE("explicit group tables load and round trip") {
  auto s3 = FiniteGroup::symmetric(3);
  FiniteGroup t = FiniteGroup::from_tables(s3.tables());
  CHECK(t.labels == s3.labels);
  CHECK(t.mul == s3.mul);
  GroupTables broken = s3.tables();
  broken.compose.pop_back();
  CHECK_THROWS_AS(FiniteGroup::from_tables(broken), LoadError);
}

TEST_CASE("automorphism groups by exhaustive search") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(static_cast<int>(automorphisms(FiniteGroup::cyclic(n)).size()) == euler_phi(n));
  }
  auto s3 = automorphisms(FiniteGroup::symmetric(3));
  CHECK(s3.size() == 6);
  std::vector<int> id(6);
  std::iota(id.begin(), id.end(), 0);
  CHECK(s3.front() == id);
  CHECK(automorphisms(FiniteGroup::symmetric(4)).size() == 24);
  CHECK_THROWS_AS(automorphisms(FiniteGroup::cyclic(30)), ResourceError);
}

TEST_CASE("normal subgroups and the rejection witness") {
  auto s3 = FiniteGroup::symmetric(3);
  auto a3 = crossed_from_normal_subgroup(s3, {s3.find("123"), s3.find("231"), s3.find("312")});
  CHECK(validate_crossed(*a3).ok());
  try {
    crossed_from_normal_subgroup(s3, {s3.find("123"), s3.find("213")});
    FAIL("accepted a non-normal subgroup");
  } catch (const DomainError& e) {
    std::string msg = e.what();
    CHECK(msg.find("213") != std::string::npos);
  }
  CHECK_THROWS_AS(crossed_from_normal_subgroup(s3, {s3.find("123"), s3.find("231")}), DomainError);
}

TEST_CASE("the inner crossed group of S3 maps onto its automorphisms") {
  auto c = inner_crossed(FiniteGroup::symmetric(3));
  CHECK(c->g1().arrow_count() == 6);
  std::set<ArrowId> image;
  for (std::size_t i = 0; i < c->g2().arrow_count(); ++i) image.insert(c->feedback(ArrowId{i}));
  CHECK(image.size() == 6);
}

TEST_CASE("Cech levels have the expected sizes") {
  DiagramPtr d = builtin_diagram("FixCech");
  for (int p = 0; p <= kTopLevel; ++p) {
    CHECK(d->level(p).g2().arrow_count() == (std::size_t{1} << (std::size_t{1} << (p + 1))));
    CHECK(d->level(p).g1().arrow_count() == 1);
  }
  CHECK_THROWS_AS(cech_diagram(fix_a_core(), 2, 1000), ResourceError);
  CHECK_THROWS_AS(cech_diagram(fatten(fix_a_core(), 2).crossed, 2), DomainError);
}

TEST_CASE("a single cover member gives the constant diagram") {
  for (const auto& core : {fix_a_core(), inner_crossed(FiniteGroup::symmetric(3))}) {
    DiagramPtr c = cech_diagram(core, 1);
    DiagramPtr k = constant_diagram(core);
    CHECK(validate_diagram(*c).ok());
    for (int p = 0; p <= kTopLevel; ++p) {
      const auto& a = c->level(p);
      const auto& b = k->level(p);
      REQUIRE(a.g2().arrow_count() == b.g2().arrow_count());
      REQUIRE(a.g1().arrow_count() == b.g1().arrow_count());
      for (std::size_t i = 0; i < a.g2().arrow_count(); ++i) {
        ArrowId x{i};
        CHECK(a.feedback(x) == b.feedback(x));
        for (std::size_t j = 0; j < a.g1().arrow_count(); ++j) {
          CHECK(a.twist(ArrowId{j}, x) == b.twist(ArrowId{j}, x));
        }
      }
    }
    for (int p = 0; p < kTopLevel; ++p) {
      for (int kk = 0; kk <= p + 1; ++kk) {
        for (std::size_t i = 0; i < c->level(p).g2().arrow_count(); ++i) {
          CHECK(c->coface(p, kk).g2(ArrowId{i}) == ArrowId{i});
        }
      }
    }
  }
}

TEST_CASE("fattened diagrams include by a weak equivalence") {
  for (const char* name : {"FixA", "FixB", "FixC", "FixCech", "inner-S3"}) {
    CAPTURE(name);
    for (int n : {1, 2}) {
      FattenedDiagram f = fatten(builtin_diagram(name), n);
      CHECK(validate_diagram(*f.diagram).ok());
      CHECK(validate_diagram_morphism(f.inclusion).ok());
      CHECK(is_weak_equivalence_diagram(f.inclusion).ok);
    }
  }
}

TEST_CASE("fattened labels") {
  Fattened f = fatten(fix_a_core(), 3);
  const auto& c = *f.crossed;
  CHECK(c.object_count() == 3);
  CHECK(c.g1().arrow_count() == 9);
  CHECK(c.g2().arrow_count() == 6);
  CHECK(c.object_label(ObjId{2u}) == "x#2");
  CHECK(c.g1().arrow_label(*c.g1().find_arrow("1#2>0")) == "1#2>0");
  CHECK(c.g1().source(*c.g1().find_arrow("1#2>0")) == ObjId{2u});
  CHECK_FALSE(c.g1().find_arrow("1#3>0").has_value());
  CHECK(f.inclusion.object(ObjId{0u}) == ObjId{0u});
}

TEST_CASE("the terminal morphism is not a weak equivalence on FixA") {
  DiagramMorphism f = terminal_morphism(builtin_diagram("FixA"));
  WeakEquivalenceReport r = is_weak_equivalence_diagram(f);
  CHECK_FALSE(r.ok);
  CHECK(r.invariant == "pi2");
  REQUIRE(r.level.has_value());
  CHECK(*r.level == 0);
}

TEST_CASE("named fixtures resolve") {
  for (const auto& name : builtin_diagram_names()) CHECK(builtin_diagram(name) != nullptr);
  for (const auto& name : builtin_morphism_names()) {
    CAPTURE(name);
    DiagramMorphism f = builtin_morphism(name);
    CHECK(f.levels.size() == 4);
  }
  CHECK_THROWS_AS(builtin_diagram("FixZ"), LoadError);
  CHECK_THROWS_AS(builtin_morphism("FixA->FixB"), LoadError);
}
