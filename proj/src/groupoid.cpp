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

#include "crossdesc/groupoid.hpp"

#include <algorithm>
#include <numeric>

#include "crossdesc/error.hpp"

namespace crossdesc {

std::optional<ObjId> Groupoid::find_object(std::string_view label) const {
  for (std::size_t i = 0; i < object_count(); ++i) {
    if (object_label(ObjId{i}) == label) return ObjId{i};
  }
  return std::nullopt;
}

std::optional<ArrowId> Groupoid::find_arrow(std::string_view label) const {
  for (std::size_t i = 0; i < arrow_count(); ++i) {
    if (arrow_label(ArrowId{i}) == label) return ArrowId{i};
  }
  return std::nullopt;
}

std::vector<ArrowId> Groupoid::hom(ObjId from, ObjId to) const {
  std::vector<ArrowId> out(hom_count(from, to));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = hom_at(from, to, k);
  return out;
}

ArrowId Groupoid::compose_checked(ArrowId after, ArrowId before) const {
  if (!contains(after) || !contains(before)) {
    throw DomainError("compose: unknown arrow");
  }
  if (!composable(after, before)) {
    throw CompositionError("cannot compose " + arrow_label(after) + " after " +
                           arrow_label(before) + ": target of " +
                           arrow_label(before) + " is " +
                           object_label(target(before)) + ", source of " +
                           arrow_label(after) + " is " +
                           object_label(source(after)));
  }
  ArrowId r = compose(after, before);
  if (!r.valid()) {
    throw DomainError("composition table has no entry for (" +
                      arrow_label(after) + ", " + arrow_label(before) + ")");
  }
  return r;
}

// ---------------------------------------------------------------------------

FiniteGroupoid FiniteGroupoid::from_tables(const GroupoidTables& t) {
  FiniteGroupoid g;

  g.object_labels_ = t.objects;
  std::sort(g.object_labels_.begin(), g.object_labels_.end());
  for (std::size_t i = 0; i < g.object_labels_.size(); ++i) {
    const auto& l = g.object_labels_[i];
    if (l.empty()) throw LoadError("empty object id");
    if (!g.object_index_.emplace(l, ObjId{i}).second) {
      throw LoadError("duplicate object id '" + l + "'");
    }
  }
  auto obj = [&](const std::string& l, const char* where) {
    auto it = g.object_index_.find(l);
    if (it == g.object_index_.end()) {
      throw LoadError(std::string(where) + ": unknown object '" + l + "'");
    }
    return it->second;
  };

  std::vector<std::size_t> order(t.arrows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return t.arrows[a].id < t.arrows[b].id;
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& a = t.arrows[order[i]];
    if (a.id.empty()) throw LoadError("empty morphism id");
    if (!g.arrow_index_.emplace(a.id, ArrowId{i}).second) {
      throw LoadError("duplicate morphism id '" + a.id + "'");
    }
    g.arrow_labels_.push_back(a.id);
    g.src_.push_back(obj(a.src, "morphism source"));
    g.dst_.push_back(obj(a.dst, "morphism target"));
  }
  auto arrow = [&](const std::string& l, const char* where) {
    auto it = g.arrow_index_.find(l);
    if (it == g.arrow_index_.end()) {
      throw LoadError(std::string(where) + ": unknown morphism '" + l + "'");
    }
    return it->second;
  };

  for (std::size_t i = 0; i < g.arrow_labels_.size(); ++i) {
    g.homs_[key(g.src_[i].value, g.dst_[i].value)].push_back(ArrowId{i});
  }

  g.identity_.assign(g.object_labels_.size(), kNoArrow);
  for (const auto& [o, a] : t.identity) {
    g.identity_[obj(o, "identity table").index()] = arrow(a, "identity table");
  }
  g.inverse_.assign(g.arrow_labels_.size(), kNoArrow);
  for (const auto& [a, b] : t.inverse) {
    g.inverse_[arrow(a, "inverse table").index()] = arrow(b, "inverse table");
  }

  for (const auto& [after_l, before_l, result_l] : t.compose) {
    ArrowId after = arrow(after_l, "compose table");
    ArrowId before = arrow(before_l, "compose table");
    ArrowId result = arrow(result_l, "compose table");
    if (g.dst_[before.index()] != g.src_[after.index()]) {
      g.issues_.push_back({"composition-domain",
                           "entry given for a non-composable pair",
                           {after_l, before_l, result_l}});
      continue;
    }
    auto [it, inserted] =
        g.compose_.emplace(key(after.value, before.value), result);
    if (!inserted && it->second != result) {
      g.issues_.push_back({"composition-conflict",
                           "two different results for one pair",
                           {after_l, before_l, result_l,
                            g.arrow_labels_[it->second.index()]}});
    }
  }
  return g;
}

ArrowId FiniteGroupoid::compose(ArrowId after, ArrowId before) const {
  auto it = compose_.find(key(after.value, before.value));
  return it == compose_.end() ? kNoArrow : it->second;
}

std::size_t FiniteGroupoid::hom_count(ObjId from, ObjId to) const {
  auto it = homs_.find(key(from.value, to.value));
  return it == homs_.end() ? 0 : it->second.size();
}

ArrowId FiniteGroupoid::hom_at(ObjId from, ObjId to, std::size_t k) const {
  return homs_.at(key(from.value, to.value))[k];
}

std::optional<ObjId> FiniteGroupoid::find_object(std::string_view label) const {
  auto it = object_index_.find(std::string(label));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> FiniteGroupoid::find_arrow(std::string_view label) const {
  auto it = arrow_index_.find(std::string(label));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

void FiniteGroupoid::table_issues(ValidationReport& report) const {
  for (const auto& v : issues_) report.add(v.clause, v.detail, v.witnesses);
}

// ---------------------------------------------------------------------------

GroupoidTables tables_of(const Groupoid& g) {
  GroupoidTables t;
  for (std::size_t i = 0; i < g.object_count(); ++i) {
    ObjId x{i};
    t.objects.push_back(g.object_label(x));
    if (g.identity(x).valid()) {
      t.identity[g.object_label(x)] = g.arrow_label(g.identity(x));
    }
  }
  std::vector<std::vector<ArrowId>> out(g.object_count());
  for (std::size_t i = 0; i < g.arrow_count(); ++i) {
    ArrowId a{i};
    t.arrows.push_back(
        {g.arrow_label(a), g.object_label(g.source(a)), g.object_label(g.target(a))});
    if (g.inverse(a).valid()) t.inverse[g.arrow_label(a)] = g.arrow_label(g.inverse(a));
    out[g.source(a).index()].push_back(a);
  }
  for (std::size_t i = 0; i < g.arrow_count(); ++i) {
    ArrowId before{i};
    for (ArrowId after : out[g.target(before).index()]) {
      ArrowId r = g.compose(after, before);
      if (r.valid()) {
        t.compose.push_back({g.arrow_label(after), g.arrow_label(before), g.arrow_label(r)});
      }
    }
  }
  return t;
}

ValidationReport validate_groupoid(const Groupoid& g) {
  ValidationReport report;
  g.table_issues(report);

  const std::size_t n_obj = g.object_count();
  const std::size_t n_arr = g.arrow_count();
  auto label = [&](ArrowId a) { return a.valid() ? g.arrow_label(a) : std::string("<none>"); };

  for (std::size_t i = 0; i < n_obj; ++i) {
    ObjId x{i};
    ArrowId id = g.identity(x);
    if (!id.valid()) {
      report.add("unit", "no identity for object", {g.object_label(x)});
    } else if (g.source(id) != x || g.target(id) != x) {
      report.add("unit", "identity is not an endomorphism of its object",
                 {g.object_label(x), g.arrow_label(id)});
    }
  }

  std::vector<std::vector<ArrowId>> out(n_obj);
  for (std::size_t i = 0; i < n_arr; ++i) out[g.source(ArrowId{i}).index()].push_back(ArrowId{i});

  // Closure and typing of the table on composable pairs.
  bool closed = true;
  for (std::size_t i = 0; i < n_arr; ++i) {
    ArrowId before{i};
    for (ArrowId after : out[g.target(before).index()]) {
      ArrowId r = g.compose(after, before);
      if (!r.valid()) {
        report.add("composition-domain", "missing entry for a composable pair",
                   {g.arrow_label(after), g.arrow_label(before)});
        closed = false;
      } else if (g.source(r) != g.source(before) || g.target(r) != g.target(after)) {
        report.add("composition-domain", "result has the wrong source or target",
                   {g.arrow_label(after), g.arrow_label(before), g.arrow_label(r)});
        closed = false;
      }
    }
  }

  for (std::size_t i = 0; i < n_arr; ++i) {
    ArrowId a{i};
    ArrowId s_id = g.identity(g.source(a));
    ArrowId t_id = g.identity(g.target(a));
    if (s_id.valid() && g.compose(a, s_id) != a) {
      report.add("unit", "right unit law fails", {g.arrow_label(a), g.arrow_label(s_id)});
    }
    if (t_id.valid() && g.compose(t_id, a) != a) {
      report.add("unit", "left unit law fails", {g.arrow_label(t_id), g.arrow_label(a)});
    }
    ArrowId inv = g.inverse(a);
    if (!inv.valid()) {
      report.add("inverse", "no inverse entry", {g.arrow_label(a)});
      continue;
    }
    if (g.source(inv) != g.target(a) || g.target(inv) != g.source(a)) {
      report.add("inverse", "inverse has the wrong source or target",
                 {g.arrow_label(a), g.arrow_label(inv)});
      continue;
    }
    if (g.compose(inv, a) != s_id) {
      report.add("inverse", "inverse(g) o g is not the identity",
                 {g.arrow_label(a), g.arrow_label(inv), label(g.compose(inv, a))});
    }
    if (g.compose(a, inv) != t_id) {
      report.add("inverse", "g o inverse(g) is not the identity",
                 {g.arrow_label(a), g.arrow_label(inv), label(g.compose(a, inv))});
    }
  }

  if (!closed) return report;  // associativity needs a closed table
  for (std::size_t i = 0; i < n_arr; ++i) {
    ArrowId f{i};
    for (ArrowId gg : out[g.target(f).index()]) {
      ArrowId gf = g.compose(gg, f);
      for (ArrowId h : out[g.target(gg).index()]) {
        ArrowId lhs = g.compose(g.compose(h, gg), f);
        ArrowId rhs = g.compose(h, gf);
        if (lhs != rhs) {
          report.add("associativity", "(h o g) o f differs from h o (g o f)",
                     {g.arrow_label(h), g.arrow_label(gg), g.arrow_label(f)});
        }
      }
    }
  }
  return report;
}

ArrowId evaluate_word(const Groupoid& g, std::span<const WordFactor> word,
                      std::optional<ObjId> anchor) {
  ArrowId acc = kNoArrow;
  if (anchor) {
    if (!g.contains(*anchor)) throw DomainError("evaluate_word: unknown anchor object");
    if (word.empty()) return g.identity(*anchor);
  } else if (word.empty()) {
    throw DomainError("evaluate_word: empty word needs an anchor object");
  }
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (!g.contains(it->arrow)) throw DomainError("evaluate_word: unknown arrow");
    if (it->exponent != 1 && it->exponent != -1) {
      throw DomainError("evaluate_word: exponent must be +1 or -1");
    }
    ArrowId a = it->exponent == 1 ? it->arrow : g.inverse(it->arrow);
    if (!acc.valid()) {
      if (anchor && g.source(a) != *anchor) {
        throw CompositionError("word does not start at its anchor object " +
                               g.object_label(*anchor));
      }
      acc = a;
    } else {
      acc = g.compose_checked(a, acc);
    }
  }
  return acc;
}

ObjectPartition pi0_groupoid(const Groupoid& g) {
  const std::size_t n = g.object_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < g.arrow_count(); ++i) {
    std::size_t a = find(g.source(ArrowId{i}).index());
    std::size_t b = find(g.target(ArrowId{i}).index());
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  ObjectPartition p;
  p.block_of.assign(n, 0);
  std::vector<std::size_t> block_of_root(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (block_of_root[r] == SIZE_MAX) {
      block_of_root[r] = p.blocks.size();
      p.blocks.emplace_back();
    }
    p.blocks[block_of_root[r]].push_back(ObjId{i});
    p.block_of[i] = block_of_root[r];
  }
  return p;
}

}  // namespace crossdesc
