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

// Command-line front end over the C API. Exit codes: 0 success, 1 semantic
// failure, 2 parse failure, 3 resource bound, 4 precondition failure.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "crossdesc/crossdesc.h"

namespace {

struct DocumentDeleter {
  void operator()(cd_document* d) const { cd_document_free(d); }
};
using DocumentPtr = std::unique_ptr<cd_document, DocumentDeleter>;

int exit_code(cd_status s) {
  switch (s) {
    case CD_OK:
    case CD_FAILED:
    case CD_PARSE:
    case CD_RESOURCE:
    case CD_PRECONDITION:
      return static_cast<int>(s);
    case CD_INVALID_ARGUMENT:
      return 2;
    default:
      return 1;
  }
}

int finish(cd_status s, char* out) {
  if (out) {
    std::fputs(out, stdout);
    cd_string_free(out);
  }
  if (s != CD_OK && *cd_last_error()) std::fprintf(stderr, "crossdesc: %s\n", cd_last_error());
  return exit_code(s);
}

DocumentPtr load(const std::string& path, cd_status& status) {
  cd_document* d = nullptr;
  status = cd_document_load(path.c_str(), &d);
  return DocumentPtr(d);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descent data of crossed groupoid diagrams"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cd_version());
  bool json = true;
  app.add_flag("--json", json, "Emit JSON reports (the only format)");

  std::string path;
  std::uint64_t bound = 1000000;
  bool classes = false, trace = false, verify = true, canonical = false, list = false;
  std::string target = "0", builtin;

  auto* validate = app.add_subcommand("validate", "Check the axioms of a document");
  validate->add_option("file", path, "Document path")->required();

  auto* desc = app.add_subcommand("desc", "Enumerate descent data of a diagram");
  desc->add_option("file", path, "Diagram document path")->required();
  desc->add_flag("--classes", classes, "Classify up to gauge equivalence, with witnesses");
  desc->add_option("--bound", bound, "Maximum candidates scanned")->capture_default_str();

  auto* weq = app.add_subcommand("weq", "Check that a diagram morphism is a weak equivalence");
  weq->add_option("file", path, "Diagram morphism document path")->required();

  auto* transfer = app.add_subcommand("transfer", "Verify the class bijection along a morphism");
  transfer->add_option("file", path, "Diagram morphism document path")->required();
  transfer->add_flag("--verify", verify, "Run both routes (always on)");
  transfer->add_flag("--trace", trace, "Include every lift trace");
  transfer->add_option("--bound", bound, "Maximum candidates scanned")->capture_default_str();

  auto* lift = app.add_subcommand("lift", "Lift one target descent datum");
  lift->add_option("file", path, "Diagram morphism document path")->required();
  lift->add_option("--target", target, "Index into the target's data or [x, g, a]")
      ->capture_default_str();
  lift->add_flag("--trace", trace, "Include the lift trace (always on)");
  lift->add_option("--bound", bound, "Maximum candidates scanned")->capture_default_str();

  auto* fixture = app.add_subcommand("fixture", "Generate explicit tables from a fixture spec");
  auto* file_opt = fixture->add_option("file", path, "Fixture spec or other document");
  auto* builtin_opt = fixture->add_option("--builtin", builtin, "Named built-in fixture");
  fixture->add_flag("--canonical", canonical, "Re-emit the document canonically instead");
  auto* list_opt = fixture->add_flag("--list", list, "List the built-in fixture names");
  file_opt->excludes(builtin_opt)->excludes(list_opt);
  builtin_opt->excludes(list_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  char* out = nullptr;
  cd_status s = CD_OK;

  if (*fixture) {
    if (list) {
      s = cd_fixture_builtin(nullptr, &out);
      return finish(s, out);
    }
    DocumentPtr doc;
    if (!builtin.empty()) {
      s = cd_fixture_builtin(builtin.c_str(), &out);
      if (s != CD_OK) return finish(s, out);
      cd_document* d = nullptr;
      s = cd_document_parse(out, nullptr, &d);
      cd_string_free(out);
      out = nullptr;
      doc.reset(d);
    } else if (!path.empty()) {
      doc = load(path, s);
    } else {
      std::fprintf(stderr, "crossdesc: fixture needs a file, --builtin or --list\n");
      return 2;
    }
    if (s != CD_OK) return finish(s, nullptr);
    s = canonical ? cd_canonicalize(doc.get(), &out) : cd_fixture(doc.get(), &out);
    return finish(s, out);
  }

  DocumentPtr doc = load(path, s);
  if (s != CD_OK) return finish(s, nullptr);

  if (*validate) {
    s = cd_validate(doc.get(), &out);
  } else if (*desc) {
    s = cd_desc(doc.get(), classes ? 1 : 0, bound, &out);
  } else if (*weq) {
    s = cd_weq(doc.get(), &out);
  } else if (*transfer) {
    s = cd_transfer(doc.get(), trace ? 1 : 0, bound, &out);
  } else if (*lift) {
    s = cd_lift(doc.get(), target.c_str(), bound, &out);
  }
  return finish(s, out);
}
