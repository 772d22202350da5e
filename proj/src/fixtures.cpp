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

#include "crossdesc/fixtures.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

#include "crossdesc/error.hpp"

namespace crossdesc {

// ---------------------------------------------------------------------------
// Finite groups

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity; x = mul[x][a]) ++k;
  return k;
}

int FiniteGroup::find(const std::string& label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return -1;
  return static_cast<int>(it - labels.begin());
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw DomainError("cyclic group needs n >= 1");
  FiniteGroup g;
  const std::size_t width = std::to_string(n - 1).size();
  for (int i = 0; i < n; ++i) {
    std::string s = std::to_string(i);
    g.labels.push_back(std::string(width - s.size(), '0') + s);
  }
  g.mul.assign(n, std::vector<int>(n));
  g.inverse.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    g.inverse[a] = (n - a) % n;
  }
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) throw DomainError("symmetric group needs 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  FiniteGroup g;
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    std::string s;
    for (int v : perms[i]) s += static_cast<char>('1' + v);
    g.labels.push_back(s);
    index[perms[i]] = static_cast<int>(i);
  }
  const int order = static_cast<int>(perms.size());
  g.mul.assign(order, std::vector<int>(order));
  g.inverse.resize(order);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      g.mul[a][b] = index.at(c);
    }
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perms[a][i]] = i;
    g.inverse[a] = index.at(inv);
  }
  return g;
}

FiniteGroup FiniteGroup::trivial() {
  FiniteGroup g;
  g.labels = {"1"};
  g.mul = {{0}};
  g.inverse = {0};
  return g;
}

FiniteGroup FiniteGroup::from_tables(const GroupTables& t) {
  FiniteGroup g;
  g.labels = t.elements;
  std::sort(g.labels.begin(), g.labels.end());
  if (g.labels.empty()) throw LoadError("group has no elements");
  if (std::adjacent_find(g.labels.begin(), g.labels.end()) != g.labels.end()) {
    throw LoadError("group has duplicate elements");
  }
  auto resolve = [&](const std::string& s) {
    int i = g.find(s);
    if (i < 0) throw LoadError("unresolved group element '" + s + "'");
    return i;
  };
  const int n = g.order();
  g.identity = resolve(t.identity);
  g.mul.assign(n, std::vector<int>(n, -1));
  for (const auto& [a, b, r] : t.compose) g.mul[resolve(a)][resolve(b)] = resolve(r);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul[a][b] < 0) {
        throw LoadError("group table lacks " + g.labels[a] + " * " + g.labels[b]);
      }
    }
  }
  g.inverse.assign(n, -1);
  for (const auto& [a, b] : t.inverse) g.inverse[resolve(a)] = resolve(b);
  for (int a = 0; a < n; ++a) {
    if (g.inverse[a] >= 0) continue;
    for (int b = 0; b < n; ++b) {
      if (g.mul[a][b] == g.identity) g.inverse[a] = b;
    }
    if (g.inverse[a] < 0) throw LoadError("group element " + g.labels[a] + " has no inverse");
  }
  return g;
}

GroupTables FiniteGroup::tables() const {
  GroupTables t;
  t.elements = labels;
  t.identity = labels[identity];
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < order(); ++b) t.compose.push_back({labels[a], labels[b], labels[mul[a][b]]});
    t.inverse[labels[a]] = labels[inverse[a]];
  }
  return t;
}

// ---------------------------------------------------------------------------
// Explicit one-object crossed groupoids

CrossedPtr crossed_group(const FiniteGroup& g1, const FiniteGroup& g2,
                         const std::function<int(int, int)>& twist,
                         const std::vector<int>& feedback) {
  const std::string x = kFixtureObject;
  CrossedTables t;
  t.g1.objects = {x};
  const GroupTables base = g1.tables();
  for (const auto& e : base.elements) t.g1.arrows.push_back({e, x, x});
  t.g1.identity[x] = base.identity;
  t.g1.inverse = base.inverse;
  t.g1.compose = base.compose;
  t.g2[x] = g2.tables();
  for (int g = 0; g < g1.order(); ++g) {
    for (int a = 0; a < g2.order(); ++a) {
      t.twist.push_back({g1.labels[g], g2.labels[a], g2.labels[twist(g, a)]});
    }
  }
  for (int a = 0; a < g2.order(); ++a) t.feedback[g2.labels[a]] = g1.labels[feedback[a]];
  return TableCrossed::from_tables(t);
}

CrossedPtr crossed_from_normal_subgroup(const FiniteGroup& g, const std::vector<int>& subgroup) {
  std::vector<int> n = subgroup;
  std::sort(n.begin(), n.end());
  n.erase(std::unique(n.begin(), n.end()), n.end());
  auto in_n = [&](int v) { return std::binary_search(n.begin(), n.end(), v); };
  if (!in_n(g.identity)) throw DomainError("subgroup does not contain the identity");
  for (int a : n) {
    for (int b : n) {
      if (!in_n(g(a, b))) {
        throw DomainError("subset is not closed: " + g.labels[a] + " * " + g.labels[b]);
      }
    }
  }
  for (int x : n) {
    for (int h = 0; h < g.order(); ++h) {
      if (!in_n(g(g(h, x), g.inverse[h]))) {
        throw DomainError("subgroup is not normal: conjugating " + g.labels[x] + " by " +
                          g.labels[h] + " leaves it");
      }
    }
  }

  FiniteGroup sub;
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < n.size(); ++i) {
    sub.labels.push_back(g.labels[n[i]]);
    pos[n[i]] = static_cast<int>(i);
  }
  const int k = static_cast<int>(n.size());
  sub.mul.assign(k, std::vector<int>(k));
  sub.inverse.resize(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) sub.mul[a][b] = pos[g(n[a], n[b])];
    sub.inverse[a] = pos[g.inverse[n[a]]];
  }
  sub.identity = pos[g.identity];
  return crossed_group(
      g, sub, [&](int h, int a) { return pos[g(g(h, n[a]), g.inverse[h])]; }, n);
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g, int max_order) {
  const int n = g.order();
  if (n > max_order) {
    throw ResourceError("automorphism search is limited to groups of order " +
                        std::to_string(max_order));
  }
  // Greedy generating set in index order.
  std::vector<int> gens;
  std::vector<bool> covered(n, false);
  covered[g.identity] = true;
  for (int c = 0; c < n; ++c) {
    if (covered[c]) continue;
    gens.push_back(c);
    std::deque<int> queue;
    for (int v = 0; v < n; ++v) {
      if (covered[v]) queue.push_back(v);
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int s : gens) {
        int w = g(v, s);
        if (!covered[w]) {
          covered[w] = true;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<int> orders(n);
  for (int v = 0; v < n; ++v) orders[v] = g.element_order(v);

  std::vector<std::vector<int>> out;
  std::vector<int> images(gens.size());
  auto extend = [&]() -> std::vector<int> {
    std::vector<int> map(n, -1);
    map[g.identity] = g.identity;
    std::deque<int> queue{g.identity};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        int w = g(v, gens[i]);
        int img = g(map[v], images[i]);
        if (map[w] < 0) {
          map[w] = img;
          queue.push_back(w);
        } else if (map[w] != img) {
          return {};
        }
      }
    }
    std::vector<bool> hit(n, false);
    for (int v : map) {
      if (v < 0 || hit[v]) return {};
      hit[v] = true;
    }
    return map;
  };
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (i == gens.size()) {
      if (auto m = extend(); !m.empty()) out.push_back(std::move(m));
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (orders[c] != orders[gens[i]]) continue;
      images[i] = c;
      search(i + 1);
    }
  };
  search(0);
  std::sort(out.begin(), out.end());
  return out;
}

CrossedPtr inner_crossed(const FiniteGroup& g, int max_order) {
  const auto auts = automorphisms(g, max_order);
  const int k = static_cast<int>(auts.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < k; ++i) index[auts[i]] = i;

  FiniteGroup aut;
  const std::size_t width = std::max<std::size_t>(2, std::to_string(k - 1).size());
  for (int i = 0; i < k; ++i) {
    std::string s = std::to_string(i);
    aut.labels.push_back("aut" + std::string(width - s.size(), '0') + s);
  }
  aut.identity = 0;
  aut.mul.assign(k, std::vector<int>(k));
  aut.inverse.resize(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      std::vector<int> c(g.order());
      for (int v = 0; v < g.order(); ++v) c[v] = auts[a][auts[b][v]];
      aut.mul[a][b] = index.at(c);
    }
    for (int b = 0; b < k; ++b) {
      if (aut.mul[a][b] == 0) aut.inverse[a] = b;
    }
  }
  std::vector<int> feedback(g.order());
  for (int h = 0; h < g.order(); ++h) {
    std::vector<int> conj(g.order());
    for (int v = 0; v < g.order(); ++v) conj[v] = g(g(h, v), g.inverse[h]);
    feedback[h] = index.at(conj);
  }
  return crossed_group(
      aut, g, [&](int phi, int a) { return auts[phi][a]; }, feedback);
}

CrossedPtr terminal_crossed() {
  const FiniteGroup one = FiniteGroup::trivial();
  return crossed_group(
      one, one, [](int, int) { return 0; }, {0});
}

DiagramPtr constant_diagram(const CrossedPtr& c) {
  auto d = std::make_shared<CrossedDiagram>();
  d->levels.fill(c);
  for (int p = 0; p < kTopLevel; ++p) {
    for (int k = 0; k <= p + 1; ++k) d->cofaces[p].push_back(CrossedMorphism::identity(c));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Products

namespace {

std::vector<std::string> split_tuple(std::string_view label) {
  std::vector<std::string> out;
  if (label.size() < 2 || label.front() != '(' || label.back() != ')') return out;
  int depth = 0;
  std::string cur;
  for (std::size_t i = 1; i + 1 < label.size(); ++i) {
    char ch = label[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// The group G^k for a one-object groupoid G, elements in mixed radix with the
// first component most significant.
class ProductGroup final : public Groupoid {
 public:
  ProductGroup(const Groupoid& base, std::size_t k) : base_(base), k_(k) {
    n_ = base.arrow_count();
    size_ = 1;
    for (std::size_t i = 0; i < k; ++i) size_ *= n_;
    mul_.assign(n_ * n_, 0);
    inv_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        mul_[a * n_ + b] = base.compose(ArrowId{a}, ArrowId{b}).value;
      }
      inv_[a] = base.inverse(ArrowId{a}).value;
    }
    const std::uint32_t e = base.identity(ObjId{0u}).value;
    identity_ = 0;
    for (std::size_t i = 0; i < k; ++i) identity_ = identity_ * n_ + e;
    std::size_t len = base.arrow_label(ArrowId{0u}).size();
    uniform_ = true;
    for (std::size_t a = 0; a < n_; ++a) uniform_ &= base.arrow_label(ArrowId{a}).size() == len;
    width_ = std::to_string(n_ - 1).size();
    if (size_ <= kFullTable) {
      full_.resize(size_ * size_);
      for (std::size_t a = 0; a < size_; ++a) {
        for (std::size_t b = 0; b < size_; ++b) {
          full_[a * size_ + b] = static_cast<std::uint32_t>(digitwise(a, b));
        }
      }
    }
  }

  std::size_t components() const { return k_; }
  std::size_t base_order() const { return n_; }

  void digits(ArrowId a, std::vector<std::uint32_t>& out) const {
    out.resize(k_);
    std::uint64_t v = a.value;
    for (std::size_t i = k_; i-- > 0;) {
      out[i] = static_cast<std::uint32_t>(v % n_);
      v /= n_;
    }
  }
  ArrowId encode(const std::vector<std::uint32_t>& d) const {
    std::uint64_t v = 0;
    for (std::uint32_t x : d) v = v * n_ + x;
    return ArrowId{v};
  }

  std::size_t object_count() const override { return 1; }
  std::size_t arrow_count() const override { return size_; }
  ObjId source(ArrowId) const override { return ObjId{0u}; }
  ObjId target(ArrowId) const override { return ObjId{0u}; }
  ArrowId identity(ObjId) const override { return ArrowId{identity_}; }
  ArrowId compose(ArrowId after, ArrowId before) const override {
    if (!full_.empty()) return ArrowId{full_[after.value * size_ + before.value]};
    return ArrowId{digitwise(after.value, before.value)};
  }
  ArrowId inverse(ArrowId g) const override {
    std::uint64_t a = g.value, r = 0, scale = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      r += scale * inv_[a % n_];
      a /= n_;
      scale *= n_;
    }
    return ArrowId{r};
  }
  std::size_t hom_count(ObjId, ObjId) const override { return size_; }
  ArrowId hom_at(ObjId, ObjId, std::size_t k) const override { return ArrowId{k}; }
  std::string object_label(ObjId) const override { return base_.object_label(ObjId{0u}); }
  std::string arrow_label(ArrowId g) const override {
    std::vector<std::uint32_t> d;
    digits(g, d);
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i > 0) s += ",";
      if (uniform_) {
        s += base_.arrow_label(ArrowId{d[i]});
      } else {
        std::string v = std::to_string(d[i]);
        s += "#" + std::string(width_ - v.size(), '0') + v;
      }
    }
    return s + ")";
  }
  std::optional<ObjId> find_object(std::string_view label) const override {
    if (label == base_.object_label(ObjId{0u})) return ObjId{0u};
    return std::nullopt;
  }
  std::optional<ArrowId> find_arrow(std::string_view label) const override {
    auto parts = split_tuple(label);
    if (parts.size() != k_) return std::nullopt;
    std::vector<std::uint32_t> d(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      if (uniform_) {
        auto a = base_.find_arrow(parts[i]);
        if (!a) return std::nullopt;
        d[i] = a->value;
      } else {
        if (parts[i].size() != width_ + 1 || parts[i][0] != '#') return std::nullopt;
        std::size_t v = 0;
        for (char ch : parts[i].substr(1)) {
          if (ch < '0' || ch > '9') return std::nullopt;
          v = v * 10 + static_cast<std::size_t>(ch - '0');
        }
        if (v >= n_) return std::nullopt;
        d[i] = static_cast<std::uint32_t>(v);
      }
    }
    return encode(d);
  }

 private:
  static constexpr std::size_t kFullTable = 1024;

  std::uint64_t digitwise(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0, scale = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      r += scale * mul_[(a % n_) * n_ + (b % n_)];
      a /= n_;
      b /= n_;
      scale *= n_;
    }
    return r;
  }

  const Groupoid& base_;
  std::size_t k_, n_, size_;
  std::vector<std::uint32_t> mul_, inv_, full_;
  std::uint64_t identity_;
  bool uniform_;
  std::size_t width_;
};

class ProductCrossed final : public CrossedGroupoid {
 public:
  ProductCrossed(CrossedPtr base, std::size_t k)
      : base_(std::move(base)), g1_(base_->g1(), k), g2_(base_->g2(), k) {
    n1_ = base_->g1().arrow_count();
    n2_ = base_->g2().arrow_count();
    twist_.assign(n1_ * n2_, 0);
    for (std::size_t g = 0; g < n1_; ++g) {
      for (std::size_t a = 0; a < n2_; ++a) {
        twist_[g * n2_ + a] = base_->twist(ArrowId{g}, ArrowId{a}).value;
      }
    }
    feedback_.assign(n2_, 0);
    for (std::size_t a = 0; a < n2_; ++a) feedback_[a] = base_->feedback(ArrowId{a}).value;
  }

  const Groupoid& g1() const override { return g1_; }
  const Groupoid& g2() const override { return g2_; }
  const ProductGroup& product_g1() const { return g1_; }
  const ProductGroup& product_g2() const { return g2_; }

  ArrowId twist(ArrowId g, ArrowId a) const override {
    std::uint64_t x = g.value, y = a.value, r = 0, scale = 1;
    for (std::size_t i = 0; i < g1_.components(); ++i) {
      r += scale * twist_[(x % n1_) * n2_ + (y % n2_)];
      x /= n1_;
      y /= n2_;
      scale *= n2_;
    }
    return ArrowId{r};
  }
  ArrowId feedback(ArrowId a) const override {
    std::uint64_t y = a.value, r = 0, scale = 1;
    for (std::size_t i = 0; i < g2_.components(); ++i) {
      r += scale * feedback_[y % n2_];
      y /= n2_;
      scale *= n1_;
    }
    return ArrowId{r};
  }
  const CrossedGroupoid* structural_base() const override { return base_.get(); }

 private:
  CrossedPtr base_;
  ProductGroup g1_, g2_;
  std::size_t n1_, n2_;
  std::vector<std::uint32_t> twist_, feedback_;
};

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && v > limit / base) return limit + 1;
    v *= base;
  }
  return v;
}

// Reindexing map G^(m^(p+1)) -> G^(m^(p+2)) that reads component t of the
// target from the tuple t with position k deleted.

CrossedMorphism cech_coface(const std::shared_ptr<const ProductCrossed>& from,
                            const std::shared_ptr<const ProductCrossed>& to, int m, int p,
                            int k) {
  const std::size_t len = static_cast<std::size_t>(p) + 2;
  const std::size_t count = checked_power(m, len, std::numeric_limits<std::size_t>::max());
  auto src_of = std::make_shared<std::vector<std::uint32_t>>(count);
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<std::size_t> tuple(len);
    std::size_t v = t;
    for (std::size_t i = len; i-- > 0;) {
      tuple[i] = v % m;
      v /= m;
    }
    std::size_t s = 0;
    for (std::size_t i = 0; i < len; ++i) {
      if (static_cast<int>(i) != k) s = s * m + tuple[i];
    }
    (*src_of)[t] = static_cast<std::uint32_t>(s);
  }
  auto reindex = [src_of](const ProductGroup& a, const ProductGroup& b) {
    return [src_of, &a, &b](ArrowId x) {
      std::vector<std::uint32_t> d, e(src_of->size());
      a.digits(x, d);
      for (std::size_t t = 0; t < e.size(); ++t) e[t] = d[(*src_of)[t]];
      return b.encode(e);
    };
  };
  return CrossedMorphism(from, to, [](ObjId) { return ObjId{0u}; },
                         reindex(from->product_g1(), to->product_g1()),
                         reindex(from->product_g2(), to->product_g2()));
}

}  // namespace

CrossedPtr product_crossed(const CrossedPtr& c, std::size_t k) {
  if (c->object_count() != 1) throw DomainError("products need a single object");
  return std::make_shared<ProductCrossed>(c, k);
}

DiagramPtr cech_diagram(const CrossedPtr& c, int m, std::size_t max_elements) {
  if (c->object_count() != 1) throw DomainError("the Čech construction needs a single object");
  if (m < 1) throw DomainError("the Čech construction needs a cover of size m >= 1");
  std::array<std::shared_ptr<const ProductCrossed>, 4> levels;
  for (int p = 0; p <= kTopLevel; ++p) {
    const std::size_t k = checked_power(m, p + 1, max_elements);
    const std::size_t biggest = std::max(c->g1().arrow_count(), c->g2().arrow_count());
    if (k > max_elements || checked_power(biggest, k, max_elements) > max_elements) {
      throw ResourceError("Čech level " + std::to_string(p) + " exceeds " +
                          std::to_string(max_elements) + " elements");
    }
    levels[p] = std::make_shared<ProductCrossed>(c, k);
  }
  auto d = std::make_shared<CrossedDiagram>();
  for (int p = 0; p <= kTopLevel; ++p) d->levels[p] = levels[p];
  for (int p = 0; p < kTopLevel; ++p) {
    for (int k = 0; k <= p + 1; ++k) {
      d->cofaces[p].push_back(cech_coface(levels[p], levels[p + 1], m, p, k));
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Fattening

namespace {

std::optional<std::pair<std::string, std::size_t>> split_copy(std::string_view label, char sep,
                                                              std::size_t n) {
  auto pos = label.rfind(sep);
  if (pos == std::string_view::npos || pos + 1 == label.size()) return std::nullopt;
  std::size_t v = 0;
  for (char ch : label.substr(pos + 1)) {
    if (ch < '0' || ch > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  if (v >= n) return std::nullopt;
  return std::make_pair(std::string(label.substr(0, pos)), v);
}

// Objects x*n + k; arrows m*n*n + i*n + j for m: x -> y giving x#i -> y#j.
class FattenedGroupoid final : public Groupoid {
 public:
  FattenedGroupoid(const Groupoid& base, std::size_t n) : base_(base), n_(n) {}

  std::size_t object_count() const override { return base_.object_count() * n_; }
  std::size_t arrow_count() const override { return base_.arrow_count() * n_ * n_; }
  ObjId source(ArrowId g) const override {
    const std::size_t m = g.value / (n_ * n_), i = (g.value / n_) % n_;
    return ObjId{base_.source(ArrowId{m}).value * n_ + i};
  }
  ObjId target(ArrowId g) const override {
    const std::size_t m = g.value / (n_ * n_), j = g.value % n_;
    return ObjId{base_.target(ArrowId{m}).value * n_ + j};
  }
  ArrowId identity(ObjId x) const override {
    const std::size_t b = x.value / n_, k = x.value % n_;
    return ArrowId{base_.identity(ObjId{b}).value * n_ * n_ + k * n_ + k};
  }
  ArrowId compose(ArrowId after, ArrowId before) const override {
    const std::size_t m2 = after.value / (n_ * n_), j2 = (after.value / n_) % n_,
                      l = after.value % n_;
    const std::size_t m1 = before.value / (n_ * n_), i = (before.value / n_) % n_,
                      j1 = before.value % n_;
    if (j1 != j2) return kNoArrow;
    const ArrowId r = base_.compose(ArrowId{m2}, ArrowId{m1});
    if (!r.valid()) return kNoArrow;
    return ArrowId{r.value * n_ * n_ + i * n_ + l};
  }
  ArrowId inverse(ArrowId g) const override {
    const std::size_t m = g.value / (n_ * n_), i = (g.value / n_) % n_, j = g.value % n_;
    return ArrowId{base_.inverse(ArrowId{m}).value * n_ * n_ + j * n_ + i};
  }
  std::size_t hom_count(ObjId from, ObjId to) const override {
    return base_.hom_count(ObjId{from.value / n_}, ObjId{to.value / n_});
  }
  ArrowId hom_at(ObjId from, ObjId to, std::size_t k) const override {
    const ArrowId m = base_.hom_at(ObjId{from.value / n_}, ObjId{to.value / n_}, k);
    return ArrowId{m.value * n_ * n_ + (from.value % n_) * n_ + to.value % n_};
  }
  std::string object_label(ObjId x) const override {
    return base_.object_label(ObjId{x.value / n_}) + "#" + std::to_string(x.value % n_);
  }
  std::string arrow_label(ArrowId g) const override {
    const std::size_t m = g.value / (n_ * n_), i = (g.value / n_) % n_, j = g.value % n_;
    return base_.arrow_label(ArrowId{m}) + "#" + std::to_string(i) + ">" + std::to_string(j);
  }
  std::optional<ObjId> find_object(std::string_view label) const override {
    auto s = split_copy(label, '#', n_);
    if (!s) return std::nullopt;
    auto b = base_.find_object(s->first);
    if (!b) return std::nullopt;
    return ObjId{b->value * n_ + s->second};
  }
  std::optional<ArrowId> find_arrow(std::string_view label) const override {
    auto j = split_copy(label, '>', n_);
    if (!j) return std::nullopt;
    auto i = split_copy(j->first, '#', n_);
    if (!i) return std::nullopt;
    auto m = base_.find_arrow(i->first);
    if (!m) return std::nullopt;
    return ArrowId{m->value * n_ * n_ + i->second * n_ + j->second};
  }

 private:
  const Groupoid& base_;
  std::size_t n_;
};

// Objects x*n + k; arrows a*n + k living at x#k.
class FattenedDisconnected final : public Groupoid {
 public:
  FattenedDisconnected(const Groupoid& base, std::size_t n) : base_(base), n_(n) {}

  std::size_t object_count() const override { return base_.object_count() * n_; }
  std::size_t arrow_count() const override { return base_.arrow_count() * n_; }
  ObjId source(ArrowId a) const override {
    return ObjId{base_.source(ArrowId{a.value / n_}).value * n_ + a.value % n_};
  }
  ObjId target(ArrowId a) const override {
    return ObjId{base_.target(ArrowId{a.value / n_}).value * n_ + a.value % n_};
  }
  ArrowId identity(ObjId x) const override {
    return ArrowId{base_.identity(ObjId{x.value / n_}).value * n_ + x.value % n_};
  }
  ArrowId compose(ArrowId after, ArrowId before) const override {
    if (after.value % n_ != before.value % n_) return kNoArrow;
    const ArrowId r = base_.compose(ArrowId{after.value / n_}, ArrowId{before.value / n_});
    if (!r.valid()) return kNoArrow;
    return ArrowId{r.value * n_ + after.value % n_};
  }
  ArrowId inverse(ArrowId a) const override {
    return ArrowId{base_.inverse(ArrowId{a.value / n_}).value * n_ + a.value % n_};
  }
  std::size_t hom_count(ObjId from, ObjId to) const override {
    if (from.value % n_ != to.value % n_) return 0;
    return base_.hom_count(ObjId{from.value / n_}, ObjId{to.value / n_});
  }
  ArrowId hom_at(ObjId from, ObjId to, std::size_t k) const override {
    const ArrowId a = base_.hom_at(ObjId{from.value / n_}, ObjId{to.value / n_}, k);
    return ArrowId{a.value * n_ + from.value % n_};
  }
  std::string object_label(ObjId x) const override {
    return base_.object_label(ObjId{x.value / n_}) + "#" + std::to_string(x.value % n_);
  }
  std::string arrow_label(ArrowId a) const override {
    return base_.arrow_label(ArrowId{a.value / n_}) + "#" + std::to_string(a.value % n_);
  }
  std::optional<ObjId> find_object(std::string_view label) const override {
    auto s = split_copy(label, '#', n_);
    if (!s) return std::nullopt;
    auto b = base_.find_object(s->first);
    if (!b) return std::nullopt;
    return ObjId{b->value * n_ + s->second};
  }
  std::optional<ArrowId> find_arrow(std::string_view label) const override {
    auto s = split_copy(label, '#', n_);
    if (!s) return std::nullopt;
    auto b = base_.find_arrow(s->first);
    if (!b) return std::nullopt;
    return ArrowId{b->value * n_ + s->second};
  }

 private:
  const Groupoid& base_;
  std::size_t n_;
};

class FattenedCrossed final : public CrossedGroupoid {
 public:
  FattenedCrossed(CrossedPtr base, std::size_t n)
      : base_(std::move(base)), n_(n), g1_(base_->g1(), n), g2_(base_->g2(), n) {}

  const Groupoid& g1() const override { return g1_; }
  const Groupoid& g2() const override { return g2_; }
  ArrowId twist(ArrowId g, ArrowId a) const override {
    const std::size_t m = g.value / (n_ * n_), i = (g.value / n_) % n_, j = g.value % n_;
    if (a.value % n_ != i) return kNoArrow;
    const ArrowId r = base_->twist(ArrowId{m}, ArrowId{a.value / n_});
    if (!r.valid()) return kNoArrow;
    return ArrowId{r.value * n_ + j};
  }
  ArrowId feedback(ArrowId a) const override {
    const std::size_t k = a.value % n_;
    const ArrowId d = base_->feedback(ArrowId{a.value / n_});
    if (!d.valid()) return kNoArrow;
    return ArrowId{d.value * n_ * n_ + k * n_ + k};
  }
  const CrossedGroupoid* structural_base() const override { return base_.get(); }
  void table_issues(ValidationReport& report) const override { base_->table_issues(report); }

  std::size_t copies() const { return n_; }

 private:
  CrossedPtr base_;
  std::size_t n_;
  FattenedGroupoid g1_;
  FattenedDisconnected g2_;
};

}  // namespace

Fattened fatten(const CrossedPtr& c, int n) {
  if (n < 1) throw DomainError("fattening needs n >= 1");
  const std::size_t k = static_cast<std::size_t>(n);
  auto fat = std::make_shared<FattenedCrossed>(c, k);
  CrossedMorphism inclusion(
      c, fat, [k](ObjId x) { return ObjId{x.value * k}; },
      [k](ArrowId g) { return ArrowId{g.value * k * k}; },
      [k](ArrowId a) { return ArrowId{a.value * k}; });
  return {fat, std::move(inclusion)};
}

FattenedDiagram fatten(const DiagramPtr& d, int n) {
  if (n < 1) throw DomainError("fattening needs n >= 1");
  const std::size_t k = static_cast<std::size_t>(n);
  auto out = std::make_shared<CrossedDiagram>();
  DiagramMorphism inclusion;
  inclusion.source = d;
  for (int p = 0; p <= kTopLevel; ++p) {
    Fattened f = fatten(d->levels[p], n);
    out->levels[p] = f.crossed;
    inclusion.levels.push_back(std::move(f.inclusion));
  }
  for (int p = 0; p < kTopLevel; ++p) {
    for (int j = 0; j <= p + 1; ++j) {
      const CrossedMorphism base = d->coface(p, j);
      out->cofaces[p].push_back(CrossedMorphism(
          out->levels[p], out->levels[p + 1],
          [base, k](ObjId x) { return ObjId{base.object(ObjId{x.value / k}).value * k + x.value % k}; },
          [base, k](ArrowId g) {
            return ArrowId{base.g1(ArrowId{g.value / (k * k)}).value * k * k + g.value % (k * k)};
          },
          [base, k](ArrowId a) { return ArrowId{base.g2(ArrowId{a.value / k}).value * k + a.value % k}; }));
    }
  }
  inclusion.target = out;
  return {out, std::move(inclusion)};
}

DiagramMorphism terminal_morphism(const DiagramPtr& d) {
  static const DiagramPtr terminal = constant_diagram(terminal_crossed());
  DiagramMorphism f;
  f.source = d;
  f.target = terminal;
  for (int p = 0; p <= kTopLevel; ++p) {
    f.levels.emplace_back(
        d->levels[p], terminal->levels[p], [](ObjId) { return ObjId{0u}; },
        [](ArrowId) { return ArrowId{0u}; }, [](ArrowId) { return ArrowId{0u}; });
  }
  return f;
}

// ---------------------------------------------------------------------------
// Named fixtures

CrossedPtr fix_a_core() {
  return crossed_group(
      FiniteGroup::trivial(), FiniteGroup::cyclic(2), [](int, int a) { return a; }, {0, 0});
}

CrossedPtr fix_b_core() {
  return crossed_group(
      FiniteGroup::cyclic(2), FiniteGroup::trivial(), [](int, int) { return 0; }, {0});
}

CrossedPtr fix_c_core() {
  return crossed_from_normal_subgroup(FiniteGroup::cyclic(2), {0, 1});
}

std::vector<std::string> builtin_diagram_names() {
  return {"FixA",        "FixB",     "FixC",         "FixCech", "FixA-fat",
          "FixCech-fat", "inner-S3", "inner-S3-fat", "trivial"};
}

DiagramPtr builtin_diagram(const std::string& name) {
  if (name == "FixA") return constant_diagram(fix_a_core());
  if (name == "FixB") return constant_diagram(fix_b_core());
  if (name == "FixC") return constant_diagram(fix_c_core());
  if (name == "FixCech") return cech_diagram(fix_a_core(), 2);
  if (name == "FixA-fat") return fatten(builtin_diagram("FixA"), 2).diagram;
  if (name == "FixCech-fat") return fatten(builtin_diagram("FixCech"), 2).diagram;
  if (name == "inner-S3") return constant_diagram(inner_crossed(FiniteGroup::symmetric(3)));
  if (name == "inner-S3-fat") return fatten(builtin_diagram("inner-S3"), 2).diagram;
  if (name == "trivial") return constant_diagram(terminal_crossed());
  throw LoadError("unknown builtin diagram '" + name + "'");
}

std::vector<std::string> builtin_morphism_names() {
  std::vector<std::string> out = {"FixA->FixA-fat", "FixCech->FixCech-fat",
                                  "inner-S3->inner-S3-fat", "FixA->trivial"};
  for (const auto& d : builtin_diagram_names()) out.push_back("id:" + d);
  return out;
}

DiagramMorphism builtin_morphism(const std::string& name) {
  if (name.starts_with("id:")) return DiagramMorphism::identity(builtin_diagram(name.substr(3)));
  if (name == "FixA->trivial") return terminal_morphism(builtin_diagram("FixA"));
  const auto arrow = name.find("->");
  if (arrow != std::string::npos) {
    const std::string from = name.substr(0, arrow), to = name.substr(arrow + 2);
    if (to == from + "-fat" &&
        (from == "FixA" || from == "FixCech" || from == "inner-S3")) {
      return fatten(builtin_diagram(from), 2).inclusion;
    }
  }
  throw LoadError("unknown builtin morphism '" + name + "'");
}

}  // namespace crossdesc
