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

#include <random>

#include "crossdesc/error.hpp"
#include "crossdesc/fixtures.hpp"
#include "crossdesc/groupoid.hpp"

using namespace crossdesc;

namespace {

// Two objects a, b joined by an isomorphism u: a -> b; a has a loop s of
// order 2 and b the conjugate loop t = u s u^-1.
GroupoidTables two_object_tables() {
  GroupoidTables t;
  t.objects = {"a", "b"};
  t.arrows = {{"1a", "a", "a"}, {"s", "a", "a"}, {"1b", "b", "b"}, {"t", "b", "b"},
              {"u", "a", "b"}, {"us", "a", "b"}, {"v", "b", "a"}, {"sv", "b", "a"}};
  t.identity = {{"a", "1a"}, {"b", "1b"}};
  t.inverse = {{"1a", "1a"}, {"s", "s"}, {"1b", "1b"}, {"t", "t"},
               {"u", "v"}, {"v", "u"}, {"us", "sv"}, {"sv", "us"}};
  // Arrows a->a: {1,s}; a->b: u s^k; b->a: s^k v; b->b: {1, t = u s v}.
  auto aa = [](int k) { return k ? "s" : "1a"; };
  auto ab = [](int k) { return k ? "us" : "u"; };
  auto ba = [](int k) { return k ? "sv" : "v"; };
  auto bb = [](int k) { return k ? "t" : "1b"; };
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      int k = i ^ j;
      t.compose.push_back({aa(i), aa(j), aa(k)});
      t.compose.push_back({ab(i), aa(j), ab(k)});
      t.compose.push_back({bb(i), ab(j), ab(k)});
      t.compose.push_back({ba(i), bb(j), ba(k)});
      t.compose.push_back({aa(i), ba(j), ba(k)});
      t.compose.push_back({ab(i), ba(j), bb(k)});
      t.compose.push_back({ba(i), ab(j), aa(k)});
      t.compose.push_back({bb(i), bb(j), bb(k)});
    }
  }
  return t;
}

}  // namespace

TEST_CASE("table groupoid loads and composes right to left") {
  FiniteGroupoid g = FiniteGroupoid::from_tables(two_object_tables());
  CHECK(validate_groupoid(g).ok());
  CHECK(g.object_count() == 2);
  CHECK(g.arrow_count() == 8);

  ArrowId u = *g.find_arrow("u"), v = *g.find_arrow("v"), s = *g.find_arrow("s");
  CHECK(g.arrow_label(g.compose(v, u)) == "1a");
  CHECK(g.arrow_label(g.compose(u, s)) == "us");
  CHECK(g.arrow_label(g.inverse(u)) == "v");
  CHECK_THROWS_AS(g.compose_checked(u, u), CompositionError);

  Word w = {{u, 1}, {s, 1}, {u, -1}};
  CHECK(g.arrow_label(evaluate_word(g, w)) == "t");
  CHECK(g.arrow_label(evaluate_word(g, {}, *g.find_object("b"))) == "1b");
  CHECK_THROWS_AS(evaluate_word(g, {}), DomainError);
}

TEST_CASE("hom sets are listed in id order") {
  FiniteGroupoid g = FiniteGroupoid::from_tables(two_object_tables());
  auto homs = g.hom(*g.find_object("a"), *g.find_object("b"));
  REQUIRE(homs.size() == 2);
  CHECK(homs[0] < homs[1]);
  CHECK(g.arrow_label(homs[0]) == "u");
}

TEST_CASE("loader rejects malformed identifiers") {
  GroupoidTables t = two_object_tables();
  SUBCASE("duplicate object") {
    t.objects.push_back("a");
    CHECK_THROWS_AS(FiniteGroupoid::from_tables(t), LoadError);
  }
  SUBCASE("empty arrow id") {
    t.arrows.push_back({"", "a", "a"});
    CHECK_THROWS_AS(FiniteGroupoid::from_tables(t), LoadError);
  }
  SUBCASE("unknown source") {
    t.arrows.push_back({"w", "c", "a"});
    CHECK_THROWS_AS(FiniteGroupoid::from_tables(t), LoadError);
  }
  SUBCASE("unknown arrow in compose") {
    t.compose.push_back({"zz", "1a", "1a"});
    CHECK_THROWS_AS(FiniteGroupoid::from_tables(t), LoadError);
  }
}

TEST_CASE("validator names the broken law") {
  GroupoidTables t = two_object_tables();
  SUBCASE("missing composite") {
    t.compose.pop_back();
    CHECK(validate_groupoid(FiniteGroupoid::from_tables(t)).has_clause("composition-domain"));
  }
  SUBCASE("wrong identity") {
    t.identity["a"] = "s";
    CHECK(validate_groupoid(FiniteGroupoid::from_tables(t)).has_clause("unit"));
  }
  SUBCASE("wrong inverse") {
    t.inverse["u"] = "sv";
    CHECK(validate_groupoid(FiniteGroupoid::from_tables(t)).has_clause("inverse"));
  }
  SUBCASE("composite on a non-composable pair") {
    t.compose.push_back({"u", "u", "u"});
    CHECK(validate_groupoid(FiniteGroupoid::from_tables(t)).has_clause("composition-domain"));
  }
  SUBCASE("associativity") {
    for (auto& e : t.compose) {
      if (e[0] == "s" && e[1] == "sv") e[2] = "sv";
    }
    CHECK(validate_groupoid(FiniteGroupoid::from_tables(t)).has_clause("associativity"));
  }
}

TEST_CASE("tables round trip through the loader") {
  FiniteGroupoid g = FiniteGroupoid::from_tables(two_object_tables());
  FiniteGroupoid h = FiniteGroupoid::from_tables(tables_of(g));
  CHECK(validate_groupoid(h).ok());
  for (std::size_t i = 0; i < g.arrow_count(); ++i) {
    for (std::size_t j = 0; j < g.arrow_count(); ++j) {
      ArrowId a{i}, b{j};
      if (!g.composable(a, b)) continue;
      CHECK(g.arrow_label(g.compose(a, b)) == h.arrow_label(h.compose(a, b)));
    }
  }
}

TEST_CASE("connected components are labelled by their least object") {
  GroupoidTables t = two_object_tables();
  t.objects.push_back("c");
  t.arrows.push_back({"1c", "c", "c"});
  t.identity["c"] = "1c";
  t.inverse["1c"] = "1c";
  t.compose.push_back({"1c", "1c", "1c"});
  FiniteGroupoid g = FiniteGroupoid::from_tables(t);
  CHECK(validate_groupoid(g).ok());
  ObjectPartition p = pi0_groupoid(g);
  REQUIRE(p.blocks.size() == 2);
  CHECK(g.object_label(p.label(0)) == "a");
  CHECK(p.blocks[0].size() == 2);
  CHECK(p.block_of[g.find_object("b")->index()] == 0);
  CHECK(g.object_label(p.label(1)) == "c");
}

TEST_CASE("random words evaluate like iterated composition") {
  FiniteGroupoid g = FiniteGroupoid::from_tables(two_object_tables());
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 200; ++trial) {
    // Walk backwards from a random end object to build a composable word.
    ObjId end{rng() % 2};
    Word w;
    ObjId at = end;
    ArrowId expected = g.identity(end);
    int len = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) {
      std::vector<ArrowId> into;
      for (std::size_t k = 0; k < g.arrow_count(); ++k) {
        if (g.target(ArrowId{k}) == at) into.push_back(ArrowId{k});
      }
      ArrowId f = into[rng() % into.size()];
      bool invert = rng() % 2;
      ArrowId eff = invert ? g.inverse(f) : f;
      if (g.target(eff) != at) {
        eff = f;
        invert = false;
      }
      w.push_back({invert ? g.inverse(eff) : eff, invert ? -1 : 1});
      expected = g.compose(expected, eff);
      at = g.source(eff);
    }
    CHECK(evaluate_word(g, w) == expected);
  }
}
