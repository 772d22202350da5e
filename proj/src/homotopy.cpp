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

#include "crossdesc/homotopy.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace crossdesc {

namespace {

std::vector<ArrowId> feedback_image(const CrossedGroupoid& c, ObjId x) {
  std::unordered_set<ArrowId> seen;
  const std::size_t n = c.g2().hom_count(x, x);
  for (std::size_t k = 0; k < n; ++k) seen.insert(c.feedback(c.g2().hom_at(x, x, k)));
  std::vector<ArrowId> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Orbits of hom(from, to) under g -> g ∘ d for d in `image`, ordered by their
// least element.
std::vector<std::vector<ArrowId>> orbits(const Groupoid& g1, ObjId from, ObjId to,
                                         const std::vector<ArrowId>& image,
                                         std::unordered_map<ArrowId, std::size_t>& class_of) {
  std::vector<std::vector<ArrowId>> out;
  for (ArrowId g : g1.hom(from, to)) {
    if (class_of.contains(g)) continue;
    std::vector<ArrowId> orbit;
    orbit.reserve(image.size());
    for (ArrowId d : image) orbit.push_back(g1.compose(g, d));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (ArrowId h : orbit) class_of[h] = out.size();
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

HomotopyData homotopy(const CrossedGroupoid& c) {
  HomotopyData h;
  const Groupoid& g1 = c.g1();
  const Groupoid& g2 = c.g2();
  h.pi0 = pi0_groupoid(g1);
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    ObjId x{i};
    h.image.push_back(feedback_image(c, x));

    std::vector<ArrowId> kernel;
    const ArrowId one = g1.identity(x);
    const std::size_t n = g2.hom_count(x, x);
    for (std::size_t k = 0; k < n; ++k) {
      ArrowId a = g2.hom_at(x, x, k);
      if (c.feedback(a) == one) kernel.push_back(a);
    }
    h.pi2.push_back(std::move(kernel));

    CosetGroup q;
    q.object = x;
    q.cosets = orbits(g1, x, x, h.image.back(), q.coset_of);
    q.product.assign(q.order(), std::vector<std::size_t>(q.order()));
    for (std::size_t a = 0; a < q.order(); ++a) {
      for (std::size_t b = 0; b < q.order(); ++b) {
        q.product[a][b] = q.coset_of.at(g1.compose(q.representative(a), q.representative(b)));
      }
    }
    h.pi1.push_back(std::move(q));
  }
  return h;
}

QuotientFibers::QuotientFibers(const CrossedGroupoid& c, ObjId from, ObjId to)
    : c_(&c), from_(from), to_(to) {
  classes_ = orbits(c.g1(), from, to, feedback_image(c, from), class_of_);
}

std::vector<ArrowId> QuotientFibers::fiber(ArrowId g, ArrowId g_prime) const {
  std::vector<ArrowId> out;
  const Groupoid& g1 = c_->g1();
  const Groupoid& g2 = c_->g2();
  const std::size_t n = g2.hom_count(from_, from_);
  for (std::size_t k = 0; k < n; ++k) {
    ArrowId a = g2.hom_at(from_, from_, k);
    if (g1.compose(g, c_->feedback(a)) == g_prime) out.push_back(a);
  }
  return out;
}

QuotientFibers hom_quotient(const CrossedGroupoid& c, ObjId from, ObjId to) {
  return QuotientFibers(c, from, to);
}

WeakEquivalenceReport is_weak_equivalence_crossed(const CrossedMorphism& f) {
  WeakEquivalenceReport r;
  const CrossedGroupoid& s = f.source();
  const CrossedGroupoid& t = f.target();
  const HomotopyData hs = homotopy(s);
  const HomotopyData ht = homotopy(t);

  auto fail = [&](std::string inv, std::string obj, std::string detail) {
    r.ok = false;
    r.invariant = std::move(inv);
    r.object = std::move(obj);
    r.detail = std::move(detail);
    return r;
  };

  std::vector<bool> hit(ht.pi0.blocks.size(), false);
  std::set<std::size_t> images;
  for (std::size_t b = 0; b < hs.pi0.blocks.size(); ++b) {
    ObjId x = hs.pi0.label(b);
    std::size_t tb = ht.pi0.block_of[f.object(x).index()];
    if (!images.insert(tb).second) {
      return fail("pi0", s.object_label(x), "pi0(F) is not injective");
    }
    hit[tb] = true;
  }
  for (std::size_t tb = 0; tb < hit.size(); ++tb) {
    if (!hit[tb]) {
      return fail("pi0", "", "pi0(F) misses the component of " +
                                 t.object_label(ht.pi0.label(tb)));
    }
  }

  for (std::size_t i = 0; i < s.object_count(); ++i) {
    ObjId x{i};
    ObjId y = f.object(x);
    const CosetGroup& qs = hs.pi1[i];
    const CosetGroup& qt = ht.pi1[y.index()];
    std::set<std::size_t> coset_images;
    for (std::size_t k = 0; k < qs.order(); ++k) {
      std::size_t img = qt.coset_of.at(f.g1(qs.representative(k)));
      for (ArrowId g : qs.cosets[k]) {
        if (qt.coset_of.at(f.g1(g)) != img) {
          return fail("pi1", s.object_label(x), "pi1(F) is not well defined");
        }
      }
      if (!coset_images.insert(img).second) {
        return fail("pi1", s.object_label(x), "pi1(F) is not injective");
      }
    }
    if (qs.order() != qt.order()) {
      return fail("pi1", s.object_label(x),
                  "pi1(F) is not surjective (" + std::to_string(qs.order()) + " -> " +
                      std::to_string(qt.order()) + " elements)");
    }

    const auto& ks = hs.pi2[i];
    const auto& kt = ht.pi2[y.index()];
    std::unordered_set<ArrowId> kernel_images;
    for (ArrowId a : ks) {
      ArrowId b = f.g2(a);
      if (!std::binary_search(kt.begin(), kt.end(), b)) {
        return fail("pi2", s.object_label(x), "F does not map pi2 into pi2");
      }
      if (!kernel_images.insert(b).second) {
        return fail("pi2", s.object_label(x),
                    "pi2(F) is not injective (" + std::to_string(ks.size()) + " -> " +
                        std::to_string(kt.size()) + " elements)");
      }
    }
    if (ks.size() != kt.size()) {
      return fail("pi2", s.object_label(x),
                  "pi2(F) is not surjective (" + std::to_string(ks.size()) + " -> " +
                      std::to_string(kt.size()) + " elements)");
    }
  }
  return r;
}

ValidationReport check_quotient_bijections(const CrossedMorphism& f) {
  ValidationReport report;
  const CrossedGroupoid& s = f.source();
  const CrossedGroupoid& t = f.target();
  for (std::size_t i = 0; i < s.object_count(); ++i) {
    for (std::size_t j = 0; j < s.object_count(); ++j) {
      ObjId x{i}, xp{j};
      QuotientFibers qs(s, x, xp);
      QuotientFibers qt(t, f.object(x), f.object(xp));
      const std::string where = s.object_label(x) + "->" + s.object_label(xp);

      std::set<std::size_t> imgs;
      for (const auto& cls : qs.classes()) {
        std::size_t img = qt.class_of(f.g1(cls.front()));
        if (!imgs.insert(img).second) {
          report.add("quotient-classes", "induced map on classes is not injective", {where});
        }
      }
      if (qs.classes().size() != qt.classes().size()) {
        report.add("quotient-classes", "induced map on classes is not surjective", {where});
      }

      const auto hom = s.g1().hom(x, xp);
      for (ArrowId g : hom) {
        for (ArrowId gp : hom) {
          auto fs = qs.fiber(g, gp);
          auto ft = qt.fiber(f.g1(g), f.g1(gp));
          std::vector<ArrowId> mapped;
          mapped.reserve(fs.size());
          for (ArrowId a : fs) mapped.push_back(f.g2(a));
          std::sort(mapped.begin(), mapped.end());
          if (mapped != ft) {
            report.add("quotient-fibers", "F is not a bijection between fibers",
                       {where, s.g1().arrow_label(g), s.g1().arrow_label(gp)});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace crossdesc
