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

#include "crossdesc/cosimplicial.hpp"
#include "crossdesc/error.hpp"
#include "crossdesc/fixtures.hpp"
#include "oracle.hpp"

using namespace crossdesc;

namespace {

// Every increasing vertex list of length p + 1 in {0..q}.
std::vector<std::vector<int>> faces(int p, int q) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << (q + 1)); ++mask) {
    std::vector<int> v;
    for (int i = 0; i <= q; ++i) {
      if (mask & (1 << i)) v.push_back(i);
    }
    if (static_cast<int>(v.size()) == p + 1) out.push_back(v);
  }
  return out;
}

Face compose_cofaces(int p, const std::vector<int>& ks) {
  Face f = Face::identity(p);
  for (int k : ks) {
    f = f.then(Face::coface(f.target_dim(), k));
  }
  return f;
}

}  // namespace

TEST_CASE("faces validate their vertex lists") {
  CHECK_THROWS_AS(Face::from_seq({0, 0}, 2), DomainError);
  CHECK_THROWS_AS(Face::from_seq({0, 4}, 4), DomainError);
  CHECK_THROWS_AS(Face::from_seq({1, 3}, 2), DomainError);
  CHECK_THROWS_AS(Face::coface(3, 0), DomainError);
  CHECK(Face::coface(1, 1).seq() == std::vector<int>{0, 2});
  CHECK(Face::from_seq({0, 2}, 3).to_string() == "(0,2)");
}

TEST_CASE("the edge (0,2) of the 3-simplex factors through two cofaces") {
  Face f = Face::from_seq({0, 2}, 3);
  std::vector<int> ks = f.factorize();
  CHECK(ks == std::vector<int>{1, 3});
  Face g = compose_cofaces(1, ks);
  CHECK(g == f);
  CHECK(g[0] == 0);
  CHECK(g[1] == 2);
}

TEST_CASE("every face is the composite of its factorization") {
  for (int q = 0; q <= kTopLevel; ++q) {
    for (int p = 0; p <= q; ++p) {
      for (const auto& v : faces(p, q)) {
        Face f = Face::from_seq(v, q);
        auto ks = f.factorize();
        CHECK(static_cast<int>(ks.size()) == q - p);
        CHECK(compose_cofaces(p, ks) == f);
      }
    }
  }
}

TEST_CASE("face composition is associative and unital") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int p = static_cast<int>(rng() % 2);
    auto pick = [&](int a, int b) {
      auto all = faces(a, b);
      return Face::from_seq(all[rng() % all.size()], b);
    };
    Face f = pick(p, p + 1), g = pick(p + 1, p + 2);
    CHECK(f.then(Face::identity(p + 1)) == f);
    CHECK(Face::identity(p).then(f) == f);
    if (p + 3 <= kTopLevel) {
      Face h = pick(p + 2, p + 3);
      CHECK(f.then(g).then(h) == f.then(g.then(h)));
    }
  }
}

TEST_CASE("cosimplicial identities hold for cofaces as maps") {
  for (int p = 0; p + 2 <= kTopLevel; ++p) {
    for (int j = 1; j <= p + 2; ++j) {
      for (int i = 0; i < j; ++i) {
        Face lhs = Face::coface(p, i).then(Face::coface(p + 1, j));
        Face rhs = Face::coface(p, j - 1).then(Face::coface(p + 1, i));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("pushforwards agree with an independent coface chain") {
  DiagramPtr d = builtin_diagram("FixCech");
  oracle::Pusher P{*d};
  std::mt19937 rng(3);
  for (int p = 0; p <= 2; ++p) {
    for (int q = p; q <= kTopLevel; ++q) {
      for (const auto& v : faces(p, q)) {
        Face f = Face::from_seq(v, q);
        for (int trial = 0; trial < 10; ++trial) {
          ArrowId a{rng() % d->level(p).g2().arrow_count()};
          CHECK(push_g2(*d, f, a) == P.g2(a, v, q));
          ArrowId g{rng() % d->level(p).g1().arrow_count()};
          CHECK(push_g1(*d, f, g) == P.g1(g, v, q));
        }
        CHECK(push_object(*d, f, ObjId{0u}) == P.obj(ObjId{0u}, v, q));
      }
    }
  }
}

TEST_CASE("Cech pushforwards reindex tuples") {
  DiagramPtr d = builtin_diagram("FixCech");
  const Groupoid& l1 = d->level(1).g2();
  const Groupoid& l3 = d->level(3).g2();
  // Level-1 components are the pairs 00, 01, 10, 11.
  ArrowId a = *l1.find_arrow("(0,1,0,0)");
  // The edge (0, 2) of the 3-simplex sends (i0,i1,i2,i3) to (i0, i2).
  ArrowId b = push_g2(*d, Face::from_seq({0, 2}, 3), a);
  std::string label = l3.arrow_label(b);
  // Components are 4-tuples in base-2 order; exactly those with i0 = 0 and
  // i2 = 1 pick up the nontrivial entry.
  std::string expected = "(";
  for (int t = 0; t < 16; ++t) {
    int i0 = (t >> 3) & 1, i2 = (t >> 1) & 1;
    if (t) expected += ",";
    expected += (i0 == 0 && i2 == 1) ? "1" : "0";
  }
  expected += ")";
  CHECK(label == expected);
}

TEST_CASE("diagram validation") {
  for (const auto& name : builtin_diagram_names()) {
    CAPTURE(name);
    CHECK(validate_diagram(*builtin_diagram(name)).ok());
  }
}

TEST_CASE("swapped cofaces break the cosimplicial identities") {
  auto base = builtin_diagram("FixCech");
  auto d = std::make_shared<CrossedDiagram>(*base);
  std::swap(d->cofaces[0][0], d->cofaces[0][1]);
  ValidationReport r = validate_diagram(*d);
  CHECK(r.has_clause("cosimplicial-identity"));
}

TEST_CASE("a coface between the wrong levels is a typing error") {
  auto base = builtin_diagram("FixA");
  auto d = std::make_shared<CrossedDiagram>(*base);
  d->levels[1] = fix_b_core();
  CHECK(validate_diagram(*d).has_clause("coface0.0.typing"));
}

TEST_CASE("diagram morphisms are natural") {
  auto f = builtin_morphism("FixA->FixA-fat");
  CHECK(validate_diagram_morphism(f).ok());
  auto id = DiagramMorphism::identity(builtin_diagram("inner-S3"));
  CHECK(validate_diagram_morphism(id).ok());
  auto t = builtin_morphism("FixA->trivial");
  CHECK(validate_diagram_morphism(t).ok());

  // Shifting level 1 along a non-identity automorphism breaks naturality.
  DiagramPtr s3 = builtin_diagram("inner-S3");
  DiagramMorphism bad = DiagramMorphism::identity(s3);
  auto tables = bad.levels[1].tables();
  for (auto& [from, to] : tables.g2) {
    if (from == "132") to = "213";
    if (from == "213") to = "132";
  }
  bad.levels[1] = CrossedMorphism::from_tables(s3->levels[1], s3->levels[1], tables);
  CHECK_FALSE(validate_diagram_morphism(bad).ok());
}
