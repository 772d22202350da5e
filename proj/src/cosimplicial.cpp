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

#include "crossdesc/cosimplicial.hpp"

#include "crossdesc/error.hpp"

namespace crossdesc {

Face Face::from_seq(std::span<const int> seq, int q) {
  if (q < 0 || q > kTopLevel) throw DomainError("face: target dimension out of range");
  if (seq.empty() || seq.size() > static_cast<std::size_t>(q + 1)) {
    throw DomainError("face: vertex list must have between 1 and q+1 entries");
  }
  Face f;
  f.p_ = static_cast<int>(seq.size()) - 1;
  f.q_ = q;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0 || seq[i] > q) throw DomainError("face: vertex out of range");
    if (i > 0 && seq[i] <= seq[i - 1]) {
      throw DomainError("face: vertices must be strictly increasing");
    }
    f.v_[i] = seq[i];
  }
  return f;
}

Face Face::identity(int p) {
  std::array<int, 4> v{0, 1, 2, 3};
  return from_seq(std::span<const int>(v.data(), static_cast<std::size_t>(p) + 1), p);
}

Face Face::coface(int p, int k) {
  if (p < 0 || p >= kTopLevel || k < 0 || k > p + 1) {
    throw DomainError("coface index out of range");
  }
  std::vector<int> v;
  for (int i = 0; i <= p + 1; ++i) {
    if (i != k) v.push_back(i);
  }
  return from_seq(v, p + 1);
}

std::vector<int> Face::factorize() const {
  std::vector<int> out;
  int j = 0;
  for (int vertex = 0; vertex <= q_; ++vertex) {
    if (j <= p_ && v_[j] == vertex) {
      ++j;
    } else {
      out.push_back(vertex);
    }
  }
  return out;
}

Face Face::then(const Face& after) const {
  if (after.p_ != q_) throw DomainError("face composition: dimension mismatch");
  std::vector<int> v;
  for (int i = 0; i <= p_; ++i) v.push_back(after.v_[v_[i]]);
  return from_seq(v, after.q_);
}

std::string Face::to_string() const {
  std::string s = "(";
  for (int i = 0; i <= p_; ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v_[i]);
  }
  return s + ")";
}

DiagramMorphism DiagramMorphism::identity(DiagramPtr d) {
  DiagramMorphism f;
  f.source = d;
  f.target = d;
  for (int p = 0; p <= kTopLevel; ++p) f.levels.push_back(CrossedMorphism::identity(d->levels[p]));
  return f;
}

namespace {

template <typename Step>
auto push(const CrossedDiagram& d, const Face& face, auto value, Step step) {
  int level = face.source_dim();
  for (int k : face.factorize()) {
    value = step(d.coface(level, k), value);
    ++level;
  }
  return value;
}

}  // namespace

ObjId push_object(const CrossedDiagram& d, const Face& face, ObjId x) {
  return push(d, face, x, [](const CrossedMorphism& m, ObjId v) { return m.object(v); });
}

ArrowId push_g1(const CrossedDiagram& d, const Face& face, ArrowId g) {
  return push(d, face, g, [](const CrossedMorphism& m, ArrowId v) { return m.g1(v); });
}

ArrowId push_g2(const CrossedDiagram& d, const Face& face, ArrowId a) {
  return push(d, face, a, [](const CrossedMorphism& m, ArrowId v) { return m.g2(v); });
}

ValidationReport validate_diagram(const CrossedDiagram& d) {
  ValidationReport report;
  for (int p = 0; p <= kTopLevel; ++p) {
    if (!d.levels[p]) {
      report.add("levels", "missing level " + std::to_string(p));
      return report;
    }
    report.merge("level" + std::to_string(p), validate_crossed(d.level(p)));
  }
  for (int p = 0; p < kTopLevel; ++p) {
    if (d.cofaces[p].size() != static_cast<std::size_t>(p + 2)) {
      report.add("cofaces", "level " + std::to_string(p) + " needs " + std::to_string(p + 2) +
                                " cofaces");
      return report;
    }
    for (int k = 0; k <= p + 1; ++k) {
      const auto& m = d.coface(p, k);
      const std::string tag = "coface" + std::to_string(p) + "." + std::to_string(k);
      if (m.source_ptr() != d.levels[p] || m.target_ptr() != d.levels[p + 1]) {
        report.add(tag + ".typing", "coface does not run between consecutive levels");
        return report;
      }
      report.merge(tag, validate_crossed_morphism(m));
    }
  }
  if (!report.ok()) return report;

  // d^j ∘ d^i = d^i ∘ d^(j-1) for i < j, from level p to level p + 2.
  for (int p = 0; p + 2 <= kTopLevel; ++p) {
    const CrossedGroupoid& src = d.level(p);
    for (int j = 1; j <= p + 2; ++j) {
      for (int i = 0; i < j; ++i) {
        const auto& l1 = d.coface(p, i);
        const auto& l2 = d.coface(p + 1, j);
        const auto& r1 = d.coface(p, j - 1);
        const auto& r2 = d.coface(p + 1, i);
        const std::string identity = "d" + std::to_string(j) + "d" + std::to_string(i) + "=d" +
                                     std::to_string(i) + "d" + std::to_string(j - 1) +
                                     " at level " + std::to_string(p);
        for (std::size_t e = 0; e < src.object_count(); ++e) {
          ObjId x{e};
          if (l2.object(l1.object(x)) != r2.object(r1.object(x))) {
            report.add("cosimplicial-identity", identity, {"object", src.object_label(x)});
          }
        }
        for (std::size_t e = 0; e < src.g1().arrow_count(); ++e) {
          ArrowId g{e};
          if (l2.g1(l1.g1(g)) != r2.g1(r1.g1(g))) {
            report.add("cosimplicial-identity", identity, {"g1", src.g1().arrow_label(g)});
          }
        }
        for (std::size_t e = 0; e < src.g2().arrow_count(); ++e) {
          ArrowId a{e};
          if (l2.g2(l1.g2(a)) != r2.g2(r1.g2(a))) {
            report.add("cosimplicial-identity", identity, {"g2", src.g2().arrow_label(a)});
          }
        }
      }
    }
  }
  return report;
}

ValidationReport validate_diagram_morphism(const DiagramMorphism& f) {
  ValidationReport report;
  if (!f.source || !f.target || f.levels.size() != 4) {
    report.add("typing", "diagram morphism needs a source, a target and four level maps");
    return report;
  }
  for (int p = 0; p <= kTopLevel; ++p) {
    const auto& m = f.levels[p];
    if (m.source_ptr() != f.source->levels[p] || m.target_ptr() != f.target->levels[p]) {
      report.add("typing", "level map " + std::to_string(p) + " has the wrong endpoints");
      return report;
    }
    report.merge("level" + std::to_string(p), validate_crossed_morphism(m));
  }
  if (!report.ok()) return report;

  for (int p = 0; p < kTopLevel; ++p) {
    const CrossedGroupoid& src = f.source->level(p);
    for (int k = 0; k <= p + 1; ++k) {
      const auto& ds = f.source->coface(p, k);
      const auto& dt = f.target->coface(p, k);
      const auto& fp = f.levels[p];
      const auto& fq = f.levels[p + 1];
      const std::string where = "d" + std::to_string(k) + " at level " + std::to_string(p);
      for (std::size_t e = 0; e < src.object_count(); ++e) {
        ObjId x{e};
        if (fq.object(ds.object(x)) != dt.object(fp.object(x))) {
          report.add("naturality", where, {"object", src.object_label(x)});
        }
      }
      for (std::size_t e = 0; e < src.g1().arrow_count(); ++e) {
        ArrowId g{e};
        if (fq.g1(ds.g1(g)) != dt.g1(fp.g1(g))) {
          report.add("naturality", where, {"g1", src.g1().arrow_label(g)});
        }
      }
      for (std::size_t e = 0; e < src.g2().arrow_count(); ++e) {
        ArrowId a{e};
        if (fq.g2(ds.g2(a)) != dt.g2(fp.g2(a))) {
          report.add("naturality", where, {"g2", src.g2().arrow_label(a)});
        }
      }
    }
  }
  return report;
}

}  // namespace crossdesc
