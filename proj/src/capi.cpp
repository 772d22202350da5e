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

#include "crossdesc/crossdesc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "crossdesc/error.hpp"
#include "crossdesc/serialize.hpp"

struct cd_document {
  crossdesc::Document doc;
};

namespace {

using namespace crossdesc;

thread_local std::string g_last_error;

struct Outcome {
  cd_status status = CD_OK;
  Json report;
};

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
cd_status run(char** out, F&& body) {
  g_last_error.clear();
  if (out) *out = nullptr;
  cd_status status = CD_INTERNAL;
  std::string report;
  try {
    Outcome o = body();
    status = o.status;
    if (!o.report.is_null()) report = dump_canonical(o.report);
  } catch (const PreconditionError& e) {
    status = CD_PRECONDITION;
    g_last_error = e.what();
    Json r = {{"error", "precondition"}, {"message", e.what()}};
    if (!e.report().empty()) r["report"] = Json::parse(e.report());
    report = dump_canonical(r);
  } catch (const LoadError& e) {
    status = CD_PARSE;
    g_last_error = e.what();
  } catch (const ResourceError& e) {
    status = CD_RESOURCE;
    g_last_error = e.what();
  } catch (const DomainError& e) {
    status = CD_FAILED;
    g_last_error = e.what();
  } catch (const std::bad_alloc&) {
    status = CD_RESOURCE;
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    status = CD_INTERNAL;
    g_last_error = e.what();
  } catch (...) {
    status = CD_INTERNAL;
    g_last_error = "unknown exception";
  }
  if (out && !report.empty()) *out = copy_out(report);
  return status;
}

cd_status invalid(const char* what) {
  g_last_error = what;
  return CD_INVALID_ARGUMENT;
}

std::size_t effective_bound(uint64_t bound) {
  return bound == 0 ? kDefaultBound : static_cast<std::size_t>(bound);
}

ValidationReport validate_resolved(const Resolved& r) {
  ValidationReport report;
  if (r.morphism) {
    report.merge("source", validate_diagram(*r.morphism->source));
    report.merge("target", validate_diagram(*r.morphism->target));
    report.merge("morphism", validate_diagram_morphism(*r.morphism));
  } else if (r.diagram) {
    report.merge("", validate_diagram(*r.diagram));
  } else if (r.crossed) {
    report.merge("", validate_crossed(*r.crossed));
  } else if (r.groupoid) {
    report.merge("", validate_groupoid(*r.groupoid));
  }
  return report;
}

/// Non-empty failure report for an invalid morphism, else null.
Json morphism_failure(const DiagramMorphism& f) {
  ValidationReport report;
  report.merge("source", validate_diagram(*f.source));
  report.merge("target", validate_diagram(*f.target));
  report.merge("morphism", validate_diagram_morphism(f));
  if (report.ok()) return nullptr;
  return {{"error", "invalid input"}, {"validation", report_json(report)}};
}

Json weq_levels(const DiagramMorphism& f) {
  Json levels = Json::array();
  Json first = nullptr;
  for (int p = 0; p <= kTopLevel; ++p) {
    WeakEquivalenceReport r = is_weak_equivalence_crossed(f.levels[p]);
    r.level = p;
    Json j = weq_json(r);
    levels.push_back(j);
    if (!r.ok && first.is_null()) first = j;
  }
  Json out = {{"weakEquivalence", first.is_null()}, {"levels", levels}};
  if (!first.is_null()) out["failure"] = first;
  return out;
}

}  // namespace

extern "C" {

const char* cd_version(void) { return "crossdesc 1.0.0 (format crossed-desc/1)"; }

const char* cd_last_error(void) { return g_last_error.c_str(); }

void cd_string_free(char* s) { std::free(s); }

cd_status cd_document_parse(const char* json, const char* base_dir, cd_document** out) {
  if (!json || !out) return invalid("cd_document_parse: null argument");
  *out = nullptr;
  return run(nullptr, [&] {
    *out = new cd_document{parse_document(json, base_dir ? base_dir : "")};
    return Outcome{};
  });
}

cd_status cd_document_load(const char* path, cd_document** out) {
  if (!path || !out) return invalid("cd_document_load: null argument");
  *out = nullptr;
  return run(nullptr, [&] {
    *out = new cd_document{load_document(path)};
    return Outcome{};
  });
}

void cd_document_free(cd_document* doc) { delete doc; }

const char* cd_document_kind(const cd_document* doc) {
  return doc ? doc->doc.kind.c_str() : "";
}

cd_status cd_validate(const cd_document* doc, char** out) {
  if (!doc) return invalid("cd_validate: null document");
  return run(out, [&] {
    ValidationReport r = validate_resolved(resolve(doc->doc));
    Json j = report_json(r);
    j["kind"] = doc->doc.kind;
    return Outcome{r.ok() ? CD_OK : CD_FAILED, j};
  });
}

cd_status cd_desc(const cd_document* doc, int classes, uint64_t bound, char** out) {
  if (!doc) return invalid("cd_desc: null document");
  return run(out, [&] {
    DiagramPtr d = resolve_diagram(doc->doc);
    ValidationReport v = validate_diagram(*d);
    if (!v.ok()) {
      return Outcome{CD_FAILED, {{"error", "invalid input"}, {"validation", report_json(v)}}};
    }
    if (classes) return Outcome{CD_OK, class_table_json(*d, gauge_classes(*d, effective_bound(bound)))};
    Json data = Json::array();
    for (const auto& t : enumerate_descent(*d, effective_bound(bound))) data.push_back(datum_json(*d, t));
    return Outcome{CD_OK, {{"count", data.size()}, {"data", data}}};
  });
}

cd_status cd_weq(const cd_document* doc, char** out) {
  if (!doc) return invalid("cd_weq: null document");
  return run(out, [&] {
    DiagramMorphism f = resolve_morphism(doc->doc);
    if (Json bad = morphism_failure(f); !bad.is_null()) return Outcome{CD_FAILED, bad};
    Json j = weq_levels(f);
    return Outcome{j["weakEquivalence"].get<bool>() ? CD_OK : CD_FAILED, j};
  });
}

cd_status cd_transfer(const cd_document* doc, int traces, uint64_t bound, char** out) {
  if (!doc) return invalid("cd_transfer: null document");
  return run(out, [&] {
    DiagramMorphism f = resolve_morphism(doc->doc);
    if (Json bad = morphism_failure(f); !bad.is_null()) return Outcome{CD_FAILED, bad};
    BijectionReport r = verify_bijection(f, effective_bound(bound));
    bool ok = r.agree && r.oracle_bijective && r.constructive_bijective;
    return Outcome{ok ? CD_OK : CD_FAILED, bijection_json(f, r, traces != 0)};
  });
}

cd_status cd_lift(const cd_document* doc, const char* target, uint64_t bound, char** out) {
  if (!doc) return invalid("cd_lift: null document");
  return run(out, [&] {
    DiagramMorphism f = resolve_morphism(doc->doc);
    if (Json bad = morphism_failure(f); !bad.is_null()) return Outcome{CD_FAILED, bad};
    Lifter lifter(f);
    std::string spec = target ? target : "0";
    DescentDatum t;
    if (!spec.empty() && spec.find_first_not_of("0123456789") == std::string::npos) {
      auto data = enumerate_descent(*f.target, effective_bound(bound));
      std::size_t i = std::stoull(spec);
      if (i >= data.size()) {
        throw LoadError("target index " + spec + " out of range (" + std::to_string(data.size()) +
                        " target data)");
      }
      t = data[i];
    } else {
      Json j;
      try {
        j = Json::parse(spec);
      } catch (const Json::parse_error&) {
        throw LoadError("target must be an index or a JSON array [x, g, a]");
      }
      t = datum_from_json(*f.target, j);
      if (CheckResult c = is_descent_datum(*f.target, t); !c) {
        throw DomainError("target is not a descent datum (" + c.clause + ")");
      }
    }
    DescentLiftTrace trace = lifter.lift_descent(t);
    Json j = trace_json(f, trace);
    bool ok = j["revalidation"]["ok"].get<bool>();
    return Outcome{ok ? CD_OK : CD_FAILED, j};
  });
}

cd_status cd_fixture(const cd_document* doc, char** out) {
  if (!doc) return invalid("cd_fixture: null document");
  return run(out, [&] { return Outcome{CD_OK, materialize(doc->doc)}; });
}

cd_status cd_fixture_builtin(const char* name, char** out) {
  return run(out, [&] {
    if (!name) {
      return Outcome{CD_OK, {{"diagrams", builtin_diagram_names()},
                             {"morphisms", builtin_morphism_names()}}};
    }
    return Outcome{CD_OK, builtin_spec(name)};
  });
}

cd_status cd_canonicalize(const cd_document* doc, char** out) {
  if (!doc) return invalid("cd_canonicalize: null document");
  return run(out, [&] { return Outcome{CD_OK, Json::parse(canonicalize(doc->doc))}; });
}

}  // extern "C"
