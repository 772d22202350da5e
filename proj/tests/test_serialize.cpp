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

#include <fstream>
#include <sstream>

#include "crossdesc/error.hpp"
#include "crossdesc/serialize.hpp"

using namespace crossdesc;

namespace {

const std::filesystem::path kData = CROSSDESC_TEST_DATA;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Document spec(Json payload) {
  return parse_document(envelope("fixture-spec", std::move(payload)).dump(), kData);
}

}  // namespace

TEST_CASE("canonical documents round trip byte for byte") {
  for (const char* name : {"fix_a.json", "inner_s3.json", "inner_s3_core.json", "id_fix_a.json"}) {
    CAPTURE(name);
    std::string text = slurp(kData / name);
    Document doc = parse_document(text, kData);
    CHECK(canonicalize(doc) == text);
    CHECK(canonicalize(parse_document(canonicalize(doc), kData)) == text);
  }
}

TEST_CASE("materialized diagrams reload to the same tables") {
  for (const char* name : {"FixA", "FixB", "FixC", "FixA-fat", "inner-S3"}) {
    CAPTURE(name);
    Json doc = materialize(parse_document(builtin_spec(name).dump()));
    CHECK(doc["kind"] == "diagram");
    DiagramPtr d = resolve_diagram(parse_document(doc.dump()));
    CHECK(validate_diagram(*d).ok());
    CHECK(diagram_payload(*d) == doc["payload"]);
  }
}

TEST_CASE("envelope errors are load errors") {
  CHECK(parse_document(R"({"formatVersion":"crossed-desc/1","kind":"diagram","payload":{}})").kind ==
        "diagram");
  CHECK_THROWS_AS(parse_document("{"), LoadError);
  CHECK_THROWS_AS(parse_document("[]"), LoadError);
  CHECK_THROWS_AS(parse_document(R"({"formatVersion":"crossed-desc/2","kind":"diagram","payload":{}})"),
                  LoadError);
  CHECK_THROWS_AS(parse_document(R"({"formatVersion":"crossed-desc/1","kind":"sheaf","payload":{}})"),
                  LoadError);
  CHECK_THROWS_AS(parse_document(R"({"formatVersion":"crossed-desc/1","kind":"diagram","payload":3})"),
                  LoadError);
  CHECK_THROWS_AS(load_document(kData / "missing.json"), LoadError);
  CHECK_THROWS_AS(load_document(kData / "malformed.json"), LoadError);
}

TEST_CASE("payload shape errors are load errors") {
  Json bad = Json::parse(slurp(kData / "inner_s3_core.json"));
  bad["payload"]["feedback"] = Json::array();
  CHECK_THROWS_AS(resolve_crossed(parse_document(bad.dump())), LoadError);
  Json unknown = Json::parse(slurp(kData / "inner_s3_core.json"));
  unknown["payload"]["twist"][0][0] = "nope";
  CHECK_THROWS_AS(resolve_crossed(parse_document(unknown.dump())), LoadError);
  CHECK_THROWS_AS(resolve_diagram(parse_document(slurp(kData / "id_fix_a.json"), kData)),
                  LoadError);
  CHECK_THROWS_AS(resolve_morphism(parse_document(slurp(kData / "fix_a.json"))), LoadError);
}

TEST_CASE("morphism documents resolve path references") {
  DiagramMorphism f = resolve_morphism(load_document(kData / "id_fix_a.json"));
  CHECK(validate_diagram_morphism(f).ok());
  CHECK(is_weak_equivalence_diagram(f).ok);
  Json m = Json::parse(slurp(kData / "id_fix_a.json"));
  m["payload"]["source"] = "nowhere.json";
  CHECK_THROWS_AS(resolve_morphism(parse_document(m.dump(), kData)), LoadError);
}

TEST_CASE("fixture specs") {
  SUBCASE("normal subgroup") {
    Resolved r = resolve(spec({{"kind", "normal-subgroup"},
                               {"group", {{"symmetric", 3}}},
                               {"subgroup", {"123", "231", "312"}}}));
    REQUIRE(r.crossed);
    CHECK(r.crossed->g2().arrow_count() == 3);
    CHECK_THROWS_AS(resolve(spec({{"kind", "normal-subgroup"},
                                  {"group", {{"symmetric", 3}}},
                                  {"subgroup", {"123", "213"}}})),
                    DomainError);
  }
  SUBCASE("inner and constant") {
    Resolved r = resolve(spec({{"kind", "constant-diagram"},
                               {"crossed", {{"kind", "inner"}, {"group", {{"cyclic", 3}}}}}}));
    REQUIRE(r.diagram);
    CHECK(validate_diagram(*r.diagram).ok());
    CHECK(enumerate_descent(*r.diagram).size() == 3);
  }
  SUBCASE("fatten a diagram from a path") {
    Resolved r = resolve(load_document(kData / "fix_a_fat.json"));
    REQUIRE(r.diagram);
    REQUIRE(r.morphism);
    CHECK(r.diagram->level(0).object_count() == 2);
    CHECK(is_weak_equivalence_diagram(*r.morphism).ok);
  }
  SUBCASE("terminal") {
    DiagramMorphism f = resolve_morphism(load_document(kData / "fix_a_to_trivial.json"));
    CHECK_FALSE(is_weak_equivalence_diagram(f).ok);
  }
  SUBCASE("cech") {
    DiagramPtr d = resolve_diagram(load_document(kData / "fix_cech.json"));
    CHECK(d->level(3).g2().arrow_count() == 65536);
  }
  SUBCASE("unknown kind") {
    CHECK_THROWS_AS(resolve(spec({{"kind", "sphere"}})), LoadError);
    CHECK_THROWS_AS(resolve(spec({{"kind", "builtin"}, {"name", "FixZ"}})), LoadError);
  }
}

TEST_CASE("specs stay specs under canonicalization") {
  Document doc = load_document(kData / "fix_cech.json");
  Json j = Json::parse(canonicalize(doc));
  CHECK(j["kind"] == "fixture-spec");
  CHECK(j["payload"]["kind"] == "cech");
}

TEST_CASE("materialization respects its bound") {
  CHECK_THROWS_AS(materialize(load_document(kData / "fix_cech.json")), ResourceError);
  CHECK_THROWS_AS(materialize(parse_document(builtin_spec("inner-S3").dump()), 100),
                  ResourceError);
}

TEST_CASE("report shapes") {
  DiagramPtr d = builtin_diagram("FixA");
  ClassTable t = gauge_classes(*d);
  Json j = class_table_json(*d, t);
  CHECK(j["count"] == 2);
  CHECK(j["classCount"] == 1);
  REQUIRE(j["classes"].size() == 1);
  CHECK(j["classes"][0]["members"].size() == 2);
  CHECK(j["classes"][0]["representative"].contains("x"));
  CHECK(j["classes"][0]["members"][0]["witness"].contains("c"));

  DescentDatum back = datum_from_json(*d, j["classes"][0]["representative"]);
  CHECK(back == t.members[t.representatives[0]]);
  CHECK_THROWS_AS(datum_from_json(*d, Json::array({"x", "1"})), LoadError);

  DiagramMorphism f = builtin_morphism("FixA->FixA-fat");
  Json b = bijection_json(f, verify_bijection(f), true);
  CHECK(b["agree"] == true);
  CHECK(b["oracle"]["bijective"] == true);
  CHECK(b["constructive"]["bijective"] == true);
  CHECK(b["traces"]["descent"].size() == 4);

  Json w = weq_json(is_weak_equivalence_diagram(builtin_morphism("FixA->trivial")));
  CHECK(w["weakEquivalence"] == false);
  CHECK(w["invariant"] == "pi2");
  CHECK(w["level"] == 0);
}
