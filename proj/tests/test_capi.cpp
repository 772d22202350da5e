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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "crossdesc/crossdesc.h"

using nlohmann::json;

namespace {

const std::string kCli = CROSSDESC_CLI;
const std::string kData = CROSSDESC_TEST_DATA;

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into the captured output.
Run cli(const std::string& args) {
  Run r;
  std::string cmd = "\"" + kCli + "\" " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return "\"" + kData + "/" + name + "\""; }

struct Doc {
  cd_document* doc = nullptr;
  explicit Doc(const std::string& path) {
    REQUIRE(cd_document_load(path.c_str(), &doc) == CD_OK);
  }
  ~Doc() { cd_document_free(doc); }
};

struct Out {
  char* s = nullptr;
  ~Out() { cd_string_free(s); }
  json parse() const { return json::parse(s); }
};

}  // namespace

TEST_CASE("C API version and errors") {
  CHECK(std::string(cd_version()).size() > 0);
  cd_document* doc = nullptr;
  CHECK(cd_document_parse("{", nullptr, &doc) == CD_PARSE);
  CHECK(doc == nullptr);
  CHECK(std::string(cd_last_error()).size() > 0);
  CHECK(cd_document_parse(nullptr, nullptr, &doc) == CD_INVALID_ARGUMENT);
  CHECK(cd_document_load((kData + "/missing.json").c_str(), &doc) == CD_PARSE);
  Out o;
  CHECK(cd_validate(nullptr, &o.s) == CD_INVALID_ARGUMENT);
  cd_document_free(nullptr);
  cd_string_free(nullptr);
}

TEST_CASE("C API validate and desc") {
  Doc d(kData + "/fix_a.json");
  CHECK(std::string(cd_document_kind(d.doc)) == "diagram");
  {
    Out o;
    CHECK(cd_validate(d.doc, &o.s) == CD_OK);
    CHECK(o.parse()["ok"] == true);
  }
  {
    Out o;
    CHECK(cd_desc(d.doc, 1, 0, &o.s) == CD_OK);
    json j = o.parse();
    CHECK(j["count"] == 2);
    CHECK(j["classCount"] == 1);
  }
  Doc bad(kData + "/broken_peiffer.json");
  Out o;
  CHECK(cd_validate(bad.doc, &o.s) == CD_FAILED);
  CHECK(o.parse()["ok"] == false);
}

TEST_CASE("C API weq, transfer and lift") {
  Doc id(kData + "/id_fix_a.json");
  {
    Out o;
    CHECK(cd_weq(id.doc, &o.s) == CD_OK);
    CHECK(o.parse()["weakEquivalence"] == true);
  }
  {
    Out o;
    CHECK(cd_transfer(id.doc, 1, 0, &o.s) == CD_OK);
    CHECK(o.parse()["agree"] == true);
  }
  {
    Out o;
    CHECK(cd_lift(id.doc, "1", 0, &o.s) == CD_OK);
    CHECK(o.parse()["revalidation"]["ok"] == true);
  }
  {
    Out o;
    CHECK(cd_lift(id.doc, "7", 0, &o.s) != CD_OK);
  }
  Doc t(kData + "/fix_a_to_trivial.json");
  {
    Out o;
    CHECK(cd_weq(t.doc, &o.s) == CD_FAILED);
    CHECK(o.parse()["failure"]["invariant"] == "pi2");
  }
  {
    Out o;
    CHECK(cd_transfer(t.doc, 0, 0, &o.s) == CD_PRECONDITION);
    CHECK(o.parse()["report"]["level"] == 0);
  }
}

TEST_CASE("C API fixtures") {
  Out list;
  CHECK(cd_fixture_builtin(nullptr, &list.s) == CD_OK);
  CHECK(list.parse()["diagrams"].size() >= 5);
  Out spec;
  CHECK(cd_fixture_builtin("FixB", &spec.s) == CD_OK);
  cd_document* doc = nullptr;
  REQUIRE(cd_document_parse(spec.s, nullptr, &doc) == CD_OK);
  Out tables;
  CHECK(cd_fixture(doc, &tables.s) == CD_OK);
  CHECK(tables.parse()["kind"] == "diagram");
  cd_document_free(doc);
  Out missing;
  CHECK(cd_fixture_builtin("FixZ", &missing.s) == CD_PARSE);

  Doc cech(kData + "/fix_cech.json");
  Out big;
  CHECK(cd_fixture(cech.doc, &big.s) == CD_RESOURCE);
  Out canon;
  CHECK(cd_canonicalize(cech.doc, &canon.s) == CD_OK);
}

TEST_CASE("CLI exit codes") {
  CHECK(cli("validate " + data("fix_a.json")).code == 0);
  Run peiffer = cli("validate " + data("broken_peiffer.json"));
  CHECK(peiffer.code == 1);
  CHECK(peiffer.out.find("peiffer") != std::string::npos);
  CHECK(cli("validate " + data("malformed.json")).code == 2);
  CHECK(cli("validate " + data("s3_a3.json")).code == 0);
  CHECK(cli("validate " + data("s3_not_normal.json")).code == 1);
  CHECK(cli("validate").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("--help").code == 0);
  CHECK(cli("--version").code == 0);
}

TEST_CASE("CLI desc") {
  Run r = cli("desc " + data("fix_a.json"));
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["count"] == 2);
  Run c = cli("desc --classes " + data("fix_a.json"));
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out)["classCount"] == 1);
  Run e = cli("desc --classes " + data("empty_diagram.json"));
  REQUIRE(e.code == 0);
  CHECK(json::parse(e.out)["count"] == 0);
  CHECK(cli("desc --bound 10 " + data("fix_cech.json")).code == 3);
  CHECK(cli("desc " + data("broken_peiffer.json")).code == 2);
  Run bad = cli("desc " + data("broken_diagram.json"));
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out.substr(0, bad.out.rfind('}') + 1))["error"] == "invalid input");
}

TEST_CASE("CLI weq and transfer") {
  CHECK(cli("weq " + data("id_fix_a.json")).code == 0);
  CHECK(cli("weq " + data("fix_a_fat.json")).code == 0);
  Run w = cli("weq " + data("fix_a_to_trivial.json"));
  CHECK(w.code != 0);
  CHECK(w.out.find("pi2") != std::string::npos);
  CHECK(json::parse(w.out)["failure"]["level"] == 0);
  CHECK(cli("transfer " + data("fix_a_to_trivial.json")).code == 4);
  CHECK(cli("lift " + data("fix_a_to_trivial.json")).code == 4);
  Run t = cli("transfer --trace " + data("fix_a_fat.json"));
  REQUIRE(t.code == 0);
  json j = json::parse(t.out);
  CHECK(j["agree"] == true);
  CHECK(j["traces"]["descent"].size() == 4);
  Run l = cli("lift --target 3 --trace " + data("fix_a_fat.json"));
  REQUIRE(l.code == 0);
  CHECK(json::parse(l.out)["revalidation"]["ok"] == true);
  CHECK(cli("weq " + data("fix_a.json")).code == 2);
}

TEST_CASE("CLI fixtures") {
  Run list = cli("fixture --list");
  REQUIRE(list.code == 0);
  CHECK(json::parse(list.out)["morphisms"].size() >= 5);
  Run b = cli("fixture --builtin FixA");
  REQUIRE(b.code == 0);
  CHECK(json::parse(b.out)["kind"] == "diagram");
  CHECK(cli("fixture " + data("fix_cech.json")).code == 3);
  Run c = cli("fixture --canonical " + data("fix_a.json"));
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out)["kind"] == "diagram");
}
