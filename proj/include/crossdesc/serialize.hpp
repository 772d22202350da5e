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

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "crossdesc/cosimplicial.hpp"
#include "crossdesc/descent.hpp"
#include "crossdesc/fixtures.hpp"
#include "crossdesc/homotopy.hpp"
#include "crossdesc/transfer.hpp"

namespace crossdesc {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "crossed-desc/1";

/// Upper bound on table entries written by a materializing serializer.
inline constexpr std::size_t kDefaultTableBound = 4'000'000;

/// A parsed envelope. `kind` is one of groupoid, crossed, diagram,
/// diagram-morphism, fixture-spec; `base_dir` resolves relative references.
struct Document {
  std::string kind;
  Json payload;
  std::filesystem::path base_dir;
};

/// Throws LoadError on malformed JSON, an unknown version or kind, or a
/// payload that is not an object.
Document parse_document(std::string_view text, const std::filesystem::path& base_dir = {});
Document load_document(const std::filesystem::path& path);

Json envelope(const std::string& kind, Json payload);

/// Two-space indented dump with sorted keys and a trailing newline.
std::string dump_canonical(const Json& j);

// Payload readers. All throw LoadError for a wrong shape or an unresolved id.
GroupoidTables groupoid_tables_from_json(const Json& payload);
CrossedTables crossed_tables_from_json(const Json& payload);
CrossedMorphism::Tables morphism_tables_from_json(const Json& j);
FiniteGroup group_from_json(const Json& j);

// Payload writers. Every list is sorted by label. Throw ResourceError when
// more than `bound` table entries would be written.
Json to_json(const GroupoidTables& t);
Json to_json(const CrossedTables& t);
Json to_json(const CrossedMorphism::Tables& t);
Json groupoid_payload(const Groupoid& g, std::size_t bound = kDefaultTableBound);
Json crossed_payload(const CrossedGroupoid& c, std::size_t bound = kDefaultTableBound);
Json diagram_payload(const CrossedDiagram& d, std::size_t bound = kDefaultTableBound);
Json morphism_payload(const DiagramMorphism& f, std::size_t bound = kDefaultTableBound);

/// What a document or fixture spec denotes. A fatten spec fills both
/// `diagram` (or `crossed`) and `morphism` (the inclusion).
struct Resolved {
  std::optional<FiniteGroupoid> groupoid;
  CrossedPtr crossed;
  DiagramPtr diagram;
  std::optional<DiagramMorphism> morphism;
};

/// Resolves an envelope, a bare fixture spec, or a path string relative to
/// `base_dir`.
Resolved resolve(const Json& j, const std::filesystem::path& base_dir);
Resolved resolve(const Document& doc);

/// Throw LoadError when the document denotes no structure of that sort.
CrossedPtr resolve_crossed(const Document& doc);
DiagramPtr resolve_diagram(const Document& doc);
DiagramMorphism resolve_morphism(const Document& doc);

/// Re-emits a document in canonical form. A fixture spec stays a spec.
std::string canonicalize(const Document& doc);

/// Materializes a document as explicit tables: a morphism when there is one,
/// otherwise a diagram, crossed groupoid or groupoid envelope.
Json materialize(const Document& doc, std::size_t bound = kDefaultTableBound);

/// A spec envelope for a named built-in diagram or morphism.
Json builtin_spec(const std::string& name);

// Report emission.
Json report_json(const ValidationReport& r);
Json weq_json(const WeakEquivalenceReport& r);
Json datum_json(const CrossedDiagram& d, const DescentDatum& t);
Json gauge_json(const CrossedDiagram& d, const GaugeTransformation& t);
Json class_table_json(const CrossedDiagram& d, const ClassTable& t);
Json trace_json(const DiagramMorphism& f, const DescentLiftTrace& t);
Json trace_json(const DiagramMorphism& f, const GaugeLiftTrace& t);
Json bijection_json(const DiagramMorphism& f, const BijectionReport& r, bool include_traces);

/// Parses a datum given as [x, g, a] labels. Throws LoadError.
DescentDatum datum_from_json(const CrossedDiagram& d, const Json& j);

}  // namespace crossdesc
