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

#include "crossdesc/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "crossdesc/error.hpp"

namespace crossdesc {

namespace {

const std::set<std::string> kKinds = {"groupoid", "crossed", "diagram", "diagram-morphism",
                                      "fixture-spec"};

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw LoadError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw LoadError(where + ": missing field '" + key + "'");
  return *it;
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) throw LoadError(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::string> text_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw LoadError(where + ": expected an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(text(e, where));
  return out;
}

std::map<std::string, std::string> text_map(const Json& j, const std::string& where) {
  if (!j.is_object()) throw LoadError(where + ": expected an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out[k] = text(v, where + "." + k);
  return out;
}

std::vector<std::array<std::string, 3>> triples(const Json& j, const std::string& where) {
  if (!j.is_array()) throw LoadError(where + ": expected an array");
  std::vector<std::array<std::string, 3>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw LoadError(where + ": expected [x, y, z] entries");
    out.push_back({text(e[0], where), text(e[1], where), text(e[2], where)});
  }
  return out;
}

std::size_t count(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw LoadError(where + ": '" + key + "' must be a positive integer");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

Json sorted_triples(std::vector<std::array<std::string, 3>> t) {
  std::sort(t.begin(), t.end());
  Json out = Json::array();
  for (const auto& e : t) out.push_back({e[0], e[1], e[2]});
  return out;
}

Json group_json(const GroupTables& t) {
  std::vector<std::string> elements = t.elements;
  std::sort(elements.begin(), elements.end());
  return {{"elements", elements},
          {"identity", t.identity},
          {"compose", sorted_triples(t.compose)},
          {"inverse", t.inverse}};
}

GroupTables group_tables_from_json(const Json& j, const std::string& where) {
  GroupTables t;
  t.elements = text_list(field(j, "elements", where), where + ".elements");
  t.identity = text(field(j, "identity", where), where + ".identity");
  t.compose = triples(field(j, "compose", where), where + ".compose");
  t.inverse = text_map(field(j, "inverse", where), where + ".inverse");
  return t;
}

void charge(std::size_t& used, std::size_t n, std::size_t bound, const char* what) {
  used += n;
  if (used > bound) {
    throw ResourceError(std::string("materializing ") + what + " would exceed " +
                        std::to_string(bound) + " table entries");
  }
}

std::size_t groupoid_entries(const Groupoid& g) {
  std::size_t n = g.object_count();
  std::size_t total = g.arrow_count();
  for (std::size_t y = 0; y < n; ++y) {
    std::size_t in = 0, out = 0;
    for (std::size_t x = 0; x < n; ++x) {
      in += g.hom_count(ObjId{x}, ObjId{y});
      out += g.hom_count(ObjId{y}, ObjId{x});
    }
    total += in * out;
  }
  return total;
}

std::size_t crossed_entries(const CrossedGroupoid& c) {
  std::size_t total = groupoid_entries(c.g1()) + groupoid_entries(c.g2());
  const Groupoid& g1 = c.g1();
  const Groupoid& g2 = c.g2();
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    std::size_t out = 0;
    for (std::size_t y = 0; y < c.object_count(); ++y) out += g1.hom_count(ObjId{x}, ObjId{y});
    total += out * g2.hom_count(ObjId{x}, ObjId{x});
  }
  return total;
}

std::size_t morphism_entries(const CrossedMorphism& f) {
  return f.source().object_count() + f.source().g1().arrow_count() +
         f.source().g2().arrow_count();
}

CrossedPtr crossed_from_payload(const Json& payload) {
  return TableCrossed::from_tables(crossed_tables_from_json(payload));
}

DiagramPtr diagram_from_payload(const Json& payload) {
  auto d = std::make_shared<CrossedDiagram>();
  const Json& levels = field(payload, "levels", "diagram");
  if (!levels.is_array() || levels.size() != 4) {
    throw LoadError("diagram: 'levels' must list four crossed groupoids");
  }
  for (int p = 0; p <= kTopLevel; ++p) d->levels[p] = crossed_from_payload(levels[p]);
  const Json& cofaces = field(payload, "cofaces", "diagram");
  if (!cofaces.is_array() || cofaces.size() != 3) {
    throw LoadError("diagram: 'cofaces' must have three rows");
  }
  for (int p = 0; p < kTopLevel; ++p) {
    const Json& row = cofaces[p];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(p + 2)) {
      throw LoadError("diagram: coface row " + std::to_string(p) + " must have " +
                      std::to_string(p + 2) + " maps");
    }
    for (int k = 0; k <= p + 1; ++k) {
      d->cofaces[p].push_back(CrossedMorphism::from_tables(
          d->levels[p], d->levels[p + 1], morphism_tables_from_json(row[k])));
    }
  }
  return d;
}

DiagramPtr require_diagram(const Resolved& r, const std::string& where) {
  if (!r.diagram) throw LoadError(where + ": does not describe a diagram");
  return r.diagram;
}

CrossedPtr require_crossed(const Resolved& r, const std::string& where) {
  if (!r.crossed) throw LoadError(where + ": does not describe a crossed groupoid");
  return r.crossed;
}

DiagramMorphism morphism_from_payload(const Json& payload, const std::filesystem::path& base) {
  DiagramMorphism f;
  f.source = require_diagram(resolve(field(payload, "source", "diagram-morphism"), base),
                             "diagram-morphism source");
  f.target = require_diagram(resolve(field(payload, "target", "diagram-morphism"), base),
                             "diagram-morphism target");
  const Json& levels = field(payload, "levels", "diagram-morphism");
  if (!levels.is_array() || levels.size() != 4) {
    throw LoadError("diagram-morphism: 'levels' must list four maps");
  }
  for (int p = 0; p <= kTopLevel; ++p) {
    f.levels.push_back(CrossedMorphism::from_tables(f.source->levels[p], f.target->levels[p],
                                                    morphism_tables_from_json(levels[p])));
  }
  return f;
}

std::vector<int> subgroup_from_json(const FiniteGroup& g, const Json& j) {
  std::vector<int> out;
  for (const auto& l : text_list(j, "subgroup")) {
    int e = g.find(l);
    if (e < 0) throw LoadError("subgroup: unknown element '" + l + "'");
    out.push_back(e);
  }
  return out;
}

Resolved resolve_spec(const Json& spec, const std::filesystem::path& base) {
  const std::string kind = text(field(spec, "kind", "fixture-spec"), "fixture-spec.kind");
  const std::string where = "fixture-spec " + kind;
  Resolved r;
  if (kind == "builtin") {
    std::string name = text(field(spec, "name", where), where + ".name");
    auto diagrams = builtin_diagram_names();
    if (name == "FixA-core") {
      r.crossed = fix_a_core();
    } else if (name == "FixB-core") {
      r.crossed = fix_b_core();
    } else if (name == "FixC-core") {
      r.crossed = fix_c_core();
    } else if (std::find(diagrams.begin(), diagrams.end(), name) != diagrams.end()) {
      r.diagram = builtin_diagram(name);
    } else {
      r.morphism = builtin_morphism(name);
    }
  } else if (kind == "normal-subgroup") {
    FiniteGroup g = group_from_json(field(spec, "group", where));
    r.crossed = crossed_from_normal_subgroup(g, subgroup_from_json(g, field(spec, "subgroup", where)));
  } else if (kind == "inner") {
    r.crossed = inner_crossed(group_from_json(field(spec, "group", where)));
  } else if (kind == "constant-diagram") {
    r.diagram = constant_diagram(require_crossed(resolve(field(spec, "crossed", where), base), where));
  } else if (kind == "fatten") {
    Resolved of = resolve(field(spec, "of", where), base);
    int n = static_cast<int>(count(spec, "n", where));
    if (of.diagram) {
      FattenedDiagram fd = fatten(of.diagram, n);
      r.diagram = fd.diagram;
      r.morphism = fd.inclusion;
    } else {
      r.crossed = fatten(require_crossed(of, where), n).crossed;
    }
  } else if (kind == "cech") {
    CrossedPtr c = require_crossed(resolve(field(spec, "crossed", where), base), where);
    r.diagram = cech_diagram(c, static_cast<int>(count(spec, "m", where)));
  } else if (kind == "identity") {
    r.morphism = DiagramMorphism::identity(require_diagram(resolve(field(spec, "of", where), base), where));
  } else if (kind == "terminal") {
    if (spec.contains("of")) {
      r.morphism = terminal_morphism(require_diagram(resolve(spec["of"], base), where));
    } else {
      r.diagram = constant_diagram(terminal_crossed());
    }
  } else {
    throw LoadError("unknown fixture-spec kind '" + kind + "'");
  }
  return r;
}

Resolved resolve_payload(const std::string& kind, const Json& payload,
                         const std::filesystem::path& base) {
  Resolved r;
  if (kind == "groupoid") {
    r.groupoid = FiniteGroupoid::from_tables(groupoid_tables_from_json(payload));
  } else if (kind == "crossed") {
    r.crossed = crossed_from_payload(payload);
  } else if (kind == "diagram") {
    r.diagram = diagram_from_payload(payload);
  } else if (kind == "diagram-morphism") {
    r.morphism = morphism_from_payload(payload, base);
    r.diagram = r.morphism->source;
  } else {
    r = resolve_spec(payload, base);
  }
  return r;
}

template <typename F>
auto guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw LoadError(std::string("malformed document: ") + e.what());
  }
}

Json canonical_payload(const std::string& kind, const Json& payload,
                       const std::filesystem::path& base);

Json canonical_ref(const Json& j, const std::filesystem::path& base) {
  if (j.is_string()) return j;
  if (j.is_object() && j.contains("formatVersion")) {
    Document d = parse_document(j.dump(), base);
    return envelope(d.kind, canonical_payload(d.kind, d.payload, base));
  }
  return j;
}

Json canonical_payload(const std::string& kind, const Json& payload,
                       const std::filesystem::path& base) {
  resolve_payload(kind, payload, base);
  if (kind == "groupoid") return to_json(groupoid_tables_from_json(payload));
  if (kind == "crossed") return to_json(crossed_tables_from_json(payload));
  if (kind == "diagram") {
    Json levels = Json::array(), cofaces = Json::array();
    for (const auto& l : payload["levels"]) levels.push_back(to_json(crossed_tables_from_json(l)));
    for (const auto& row : payload["cofaces"]) {
      Json out = Json::array();
      for (const auto& m : row) out.push_back(to_json(morphism_tables_from_json(m)));
      cofaces.push_back(out);
    }
    return {{"levels", levels}, {"cofaces", cofaces}};
  }
  if (kind == "diagram-morphism") {
    Json levels = Json::array();
    for (const auto& m : payload["levels"]) levels.push_back(to_json(morphism_tables_from_json(m)));
    return {{"source", canonical_ref(payload["source"], base)},
            {"target", canonical_ref(payload["target"], base)},
            {"levels", levels}};
  }
  return payload;
}

std::string label_of_object(const CrossedDiagram& d, int p, ObjId x) {
  return d.level(p).object_label(x);
}

}  // namespace

Document parse_document(std::string_view text_in, const std::filesystem::path& base_dir) {
  Json j;
  try {
    j = Json::parse(text_in);
  } catch (const Json::parse_error& e) {
    throw LoadError(std::string("malformed JSON: ") + e.what());
  }
  return guard([&] {
    if (!j.is_object()) throw LoadError("document: expected an object");
    std::string version = text(field(j, "formatVersion", "document"), "formatVersion");
    if (version != kFormatVersion) {
      throw LoadError("unsupported formatVersion '" + version + "'");
    }
    std::string kind = text(field(j, "kind", "document"), "kind");
    if (!kKinds.count(kind)) throw LoadError("unknown document kind '" + kind + "'");
    const Json& payload = field(j, "payload", "document");
    if (!payload.is_object()) throw LoadError("payload: expected an object");
    return Document{kind, payload, base_dir};
  });
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot read '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path.parent_path());
}

Json envelope(const std::string& kind, Json payload) {
  return {{"formatVersion", kFormatVersion}, {"kind", kind}, {"payload", std::move(payload)}};
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

GroupoidTables groupoid_tables_from_json(const Json& p) {
  return guard([&] {
    GroupoidTables t;
    t.objects = text_list(field(p, "objects", "groupoid"), "groupoid.objects");
    const Json& arrows = field(p, "arrows", "groupoid");
    if (!arrows.is_array()) throw LoadError("groupoid.arrows: expected an array");
    for (const auto& a : arrows) {
      t.arrows.push_back({text(field(a, "id", "arrow"), "arrow.id"),
                          text(field(a, "src", "arrow"), "arrow.src"),
                          text(field(a, "dst", "arrow"), "arrow.dst")});
    }
    t.identity = text_map(field(p, "identity", "groupoid"), "groupoid.identity");
    t.inverse = text_map(field(p, "inverse", "groupoid"), "groupoid.inverse");
    t.compose = triples(field(p, "compose", "groupoid"), "groupoid.compose");
    return t;
  });
}

CrossedTables crossed_tables_from_json(const Json& p) {
  return guard([&] {
    CrossedTables t;
    t.g1 = groupoid_tables_from_json(field(p, "g1", "crossed"));
    const Json& g2 = field(p, "g2", "crossed");
    if (!g2.is_object()) throw LoadError("crossed.g2: expected an object");
    for (const auto& [obj, grp] : g2.items()) {
      t.g2[obj] = group_tables_from_json(grp, "crossed.g2." + obj);
    }
    t.twist = triples(field(p, "twist", "crossed"), "crossed.twist");
    t.feedback = text_map(field(p, "feedback", "crossed"), "crossed.feedback");
    return t;
  });
}

CrossedMorphism::Tables morphism_tables_from_json(const Json& j) {
  return guard([&] {
    CrossedMorphism::Tables t;
    t.objects = text_map(field(j, "objects", "map"), "map.objects");
    t.g1 = text_map(field(j, "g1", "map"), "map.g1");
    t.g2 = text_map(field(j, "g2", "map"), "map.g2");
    return t;
  });
}

FiniteGroup group_from_json(const Json& j) {
  return guard([&] {
    if (!j.is_object()) throw LoadError("group: expected an object");
    if (j.contains("cyclic")) return FiniteGroup::cyclic(static_cast<int>(count(j, "cyclic", "group")));
    if (j.contains("symmetric")) {
      return FiniteGroup::symmetric(static_cast<int>(count(j, "symmetric", "group")));
    }
    if (j.contains("trivial")) return FiniteGroup::trivial();
    return FiniteGroup::from_tables(group_tables_from_json(j, "group"));
  });
}

Json to_json(const GroupoidTables& t) {
  std::vector<std::string> objects = t.objects;
  std::sort(objects.begin(), objects.end());
  auto arrows = t.arrows;
  std::sort(arrows.begin(), arrows.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  Json a = Json::array();
  for (const auto& e : arrows) a.push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
  return {{"objects", objects},
          {"arrows", a},
          {"identity", t.identity},
          {"inverse", t.inverse},
          {"compose", sorted_triples(t.compose)}};
}

Json to_json(const CrossedTables& t) {
  Json g2 = Json::object();
  for (const auto& [obj, grp] : t.g2) g2[obj] = group_json(grp);
  return {{"g1", to_json(t.g1)},
          {"g2", g2},
          {"twist", sorted_triples(t.twist)},
          {"feedback", t.feedback}};
}

Json to_json(const CrossedMorphism::Tables& t) {
  return {{"objects", t.objects}, {"g1", t.g1}, {"g2", t.g2}};
}

Json groupoid_payload(const Groupoid& g, std::size_t bound) {
  std::size_t used = 0;
  charge(used, groupoid_entries(g), bound, "groupoid");
  return to_json(tables_of(g));
}

Json crossed_payload(const CrossedGroupoid& c, std::size_t bound) {
  std::size_t used = 0;
  charge(used, crossed_entries(c), bound, "crossed groupoid");
  return to_json(tables_of(c));
}

Json diagram_payload(const CrossedDiagram& d, std::size_t bound) {
  std::size_t used = 0;
  for (int p = 0; p <= kTopLevel; ++p) charge(used, crossed_entries(d.level(p)), bound, "diagram");
  for (int p = 0; p < kTopLevel; ++p) {
    for (const auto& m : d.cofaces[p]) charge(used, morphism_entries(m), bound, "diagram");
  }
  Json levels = Json::array(), cofaces = Json::array();
  for (int p = 0; p <= kTopLevel; ++p) levels.push_back(to_json(tables_of(d.level(p))));
  for (int p = 0; p < kTopLevel; ++p) {
    Json row = Json::array();
    for (const auto& m : d.cofaces[p]) row.push_back(to_json(m.tables()));
    cofaces.push_back(row);
  }
  return {{"levels", levels}, {"cofaces", cofaces}};
}

Json morphism_payload(const DiagramMorphism& f, std::size_t bound) {
  std::size_t used = 0;
  for (const auto& m : f.levels) charge(used, morphism_entries(m), bound, "diagram morphism");
  Json source = envelope("diagram", diagram_payload(*f.source, bound - used));
  Json target = envelope("diagram", diagram_payload(*f.target, bound - used));
  Json levels = Json::array();
  for (const auto& m : f.levels) levels.push_back(to_json(m.tables()));
  return {{"source", source}, {"target", target}, {"levels", levels}};
}

Resolved resolve(const Json& j, const std::filesystem::path& base_dir) {
  return guard([&] {
    if (j.is_string()) {
      std::filesystem::path p = j.get<std::string>();
      return resolve(load_document(p.is_absolute() ? p : base_dir / p));
    }
    if (j.is_object() && j.contains("formatVersion")) {
      return resolve(parse_document(j.dump(), base_dir));
    }
    if (j.is_object() && j.contains("kind")) return resolve_spec(j, base_dir);
    throw LoadError("expected a document, a fixture spec or a path");
  });
}

Resolved resolve(const Document& doc) {
  return guard([&] { return resolve_payload(doc.kind, doc.payload, doc.base_dir); });
}

CrossedPtr resolve_crossed(const Document& doc) {
  return require_crossed(resolve(doc), doc.kind + " document");
}

DiagramPtr resolve_diagram(const Document& doc) {
  Resolved r = resolve(doc);
  if (doc.kind == "diagram-morphism") throw LoadError("expected a diagram, got a diagram-morphism");
  return require_diagram(r, doc.kind + " document");
}

DiagramMorphism resolve_morphism(const Document& doc) {
  Resolved r = resolve(doc);
  if (!r.morphism) throw LoadError(doc.kind + " document: does not describe a diagram morphism");
  return *r.morphism;
}

std::string canonicalize(const Document& doc) {
  return guard([&] {
    return dump_canonical(envelope(doc.kind, canonical_payload(doc.kind, doc.payload, doc.base_dir)));
  });
}

Json materialize(const Document& doc, std::size_t bound) {
  Resolved r = resolve(doc);
  if (r.morphism) return envelope("diagram-morphism", morphism_payload(*r.morphism, bound));
  if (r.diagram) return envelope("diagram", diagram_payload(*r.diagram, bound));
  if (r.crossed) return envelope("crossed", crossed_payload(*r.crossed, bound));
  return envelope("groupoid", groupoid_payload(*r.groupoid, bound));
}

Json builtin_spec(const std::string& name) {
  auto d = builtin_diagram_names();
  auto m = builtin_morphism_names();
  d.insert(d.end(), {"FixA-core", "FixB-core", "FixC-core"});
  if (std::find(d.begin(), d.end(), name) == d.end() &&
      std::find(m.begin(), m.end(), name) == m.end()) {
    throw LoadError("unknown built-in fixture '" + name + "'");
  }
  return envelope("fixture-spec", {{"kind", "builtin"}, {"name", name}});
}

Json report_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations()) {
    v.push_back({{"clause", x.clause}, {"detail", x.detail}, {"witnesses", x.witnesses}});
  }
  return {{"ok", r.ok()}, {"coverage", r.coverage()}, {"violations", v},
          {"truncated", r.truncated()}};
}

Json weq_json(const WeakEquivalenceReport& r) {
  Json j = {{"weakEquivalence", r.ok}};
  if (!r.ok) {
    j["invariant"] = r.invariant;
    j["object"] = r.object;
    j["detail"] = r.detail;
  }
  if (r.level) j["level"] = *r.level;
  return j;
}

Json datum_json(const CrossedDiagram& d, const DescentDatum& t) {
  return {{"x", label_of_object(d, 0, t.x)},
          {"g", d.level(1).g1().arrow_label(t.g)},
          {"a", d.level(2).g2().arrow_label(t.a)}};
}

Json gauge_json(const CrossedDiagram& d, const GaugeTransformation& t) {
  return {{"f", d.level(0).g1().arrow_label(t.f)}, {"c", d.level(1).g2().arrow_label(t.c)}};
}

Json class_table_json(const CrossedDiagram& d, const ClassTable& t) {
  Json classes = Json::array();
  for (std::size_t k = 0; k < t.class_count(); ++k) {
    Json members = Json::array();
    for (std::size_t m : t.class_members(k)) {
      members.push_back({{"datum", datum_json(d, t.members[m])},
                         {"witness", gauge_json(d, t.witness[m])}});
    }
    classes.push_back({{"representative", datum_json(d, t.members[t.representatives[k]])},
                       {"members", members}});
  }
  return {{"count", t.members.size()},
          {"classCount", t.class_count()},
          {"candidatesScanned", t.candidates_scanned},
          {"classes", classes}};
}

namespace {

Json steps_json(const std::vector<TraceStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) {
    out.push_back({{"symbol", s.symbol},
                   {"side", s.side},
                   {"level", s.level},
                   {"object", s.object},
                   {"value", s.value}});
  }
  return out;
}

Json class_summary(const CrossedDiagram& d, const ClassTable& t) {
  Json reps = Json::array();
  for (std::size_t r : t.representatives) reps.push_back(datum_json(d, t.members[r]));
  return {{"count", t.members.size()}, {"classCount", t.class_count()},
          {"representatives", reps}};
}

}  // namespace

Json trace_json(const DiagramMorphism& f, const DescentLiftTrace& t) {
  return {{"target", datum_json(*f.target, t.target)},
          {"lifted", datum_json(*f.source, t.lifted)},
          {"gauge", gauge_json(*f.target, t.gauge)},
          {"steps", steps_json(trace_steps(f, t))},
          {"revalidation", report_json(revalidate(f, t))}};
}

Json trace_json(const DiagramMorphism& f, const GaugeLiftTrace& t) {
  return {{"source", datum_json(*f.source, t.src)},
          {"destination", datum_json(*f.source, t.dst)},
          {"targetGauge", gauge_json(*f.target, t.target_gauge)},
          {"lifted", gauge_json(*f.source, t.lifted)},
          {"steps", steps_json(trace_steps(f, t))},
          {"revalidation", report_json(revalidate(f, t))}};
}

Json bijection_json(const DiagramMorphism& f, const BijectionReport& r, bool include_traces) {
  const CrossedDiagram& G = *f.source;
  const CrossedDiagram& H = *f.target;
  Json class_map = Json::array();
  for (std::size_t i = 0; i < r.class_map.size(); ++i) {
    std::size_t j = r.class_map[i];
    class_map.push_back(
        {{"source", i},
         {"target", j},
         {"sourceRepresentative", datum_json(G, r.source_classes.members[r.source_classes.representatives[i]])},
         {"targetRepresentative", datum_json(H, r.target_classes.members[r.target_classes.representatives[j]])}});
  }
  Json witnesses = Json::array();
  for (std::size_t j = 0; j < r.target_class_witness.size(); ++j) {
    const DescentLiftTrace& t = r.descent_lifts[r.target_class_witness[j]];
    witnesses.push_back({{"targetClass", j},
                         {"target", datum_json(H, t.target)},
                         {"lifted", datum_json(G, t.lifted)},
                         {"gauge", gauge_json(H, t.gauge)}});
  }
  Json constructive = {{"surjective", r.constructive_surjective},
                       {"injective", r.constructive_injective},
                       {"bijective", r.constructive_bijective},
                       {"descentLifts", r.descent_lifts.size()},
                       {"gaugeLifts", r.gauge_lift_count},
                       {"classWitnesses", witnesses}};
  Json out = {{"weakEquivalence", true},
              {"sourceClasses", class_summary(G, r.source_classes)},
              {"targetClasses", class_summary(H, r.target_classes)},
              {"classMap", class_map},
              {"classMapWellDefined", r.class_map_well_defined},
              {"oracle", {{"bijective", r.oracle_bijective}}},
              {"constructive", constructive},
              {"agree", r.agree},
              {"problems", r.problems}};
  if (include_traces) {
    Json descent = Json::array(), gauge = Json::array();
    for (const auto& t : r.descent_lifts) descent.push_back(trace_json(f, t));
    for (const auto& t : r.gauge_lifts) gauge.push_back(trace_json(f, t));
    out["traces"] = {{"descent", descent}, {"gauge", gauge}};
  }
  return out;
}

DescentDatum datum_from_json(const CrossedDiagram& d, const Json& j) {
  return guard([&] {
    std::string x, g, a;
    if (j.is_array() && j.size() == 3) {
      x = text(j[0], "datum");
      g = text(j[1], "datum");
      a = text(j[2], "datum");
    } else {
      x = text(field(j, "x", "datum"), "datum.x");
      g = text(field(j, "g", "datum"), "datum.g");
      a = text(field(j, "a", "datum"), "datum.a");
    }
    auto xo = d.level(0).g1().find_object(x);
    auto ga = d.level(1).g1().find_arrow(g);
    auto aa = d.level(2).g2().find_arrow(a);
    if (!xo) throw LoadError("datum: unknown object '" + x + "'");
    if (!ga) throw LoadError("datum: unknown 1-morphism '" + g + "'");
    if (!aa) throw LoadError("datum: unknown 2-morphism '" + a + "'");
    return DescentDatum{*xo, *ga, *aa};
  });
}

}  // namespace crossdesc
