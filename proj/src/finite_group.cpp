#include "chev/finite_group.hpp"

#include <algorithm>
#include <limits>

namespace chev {

FiniteGroup::FiniteGroup(Index identity, std::vector<Index> gens, std::vector<Gen> gen_inverse,
                         std::vector<Index> right_table, std::vector<Index> inverse_table)
    : identity_(identity),
      gens_(std::move(gens)),
      gen_inverse_(std::move(gen_inverse)),
      right_(std::move(right_table)),
      inverse_(std::move(inverse_table)) {
  const std::size_t n = inverse_.size();
  if (gens_.size() > std::numeric_limits<Gen>::max() || gen_inverse_.size() != gens_.size() ||
      right_.size() != n * gens_.size()) {
    throw Error(Errc::invalid_spec, "inconsistent group tables");
  }
  constexpr Index kUnset = std::numeric_limits<Index>::max();
  parent_.assign(n, kUnset);
  parent_gen_.assign(n, 0);
  depth_.assign(n, 0);
  parent_[identity_] = identity_;
  std::vector<Index> queue{identity_};
  queue.reserve(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index g = queue[head];
    for (Gen x = 0; x < gens_.size(); ++x) {
      const Index h = right(g, x);
      if (parent_[h] == kUnset) {
        parent_[h] = g;
        parent_gen_[h] = x;
        depth_[h] = depth_[g] + 1;
        queue.push_back(h);
      }
    }
  }
  if (queue.size() != n) throw Error(Errc::invalid_spec, "generators do not generate the group");
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<Index>>& table) {
  const Index n = static_cast<Index>(table.size());
  Index identity = n;
  for (Index e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (identity == n) throw Error(Errc::invalid_spec, "table has no identity");
  std::vector<Index> gens(n);
  std::vector<Index> inverse(n, n);
  std::vector<Index> right(std::size_t(n) * n);
  for (Index a = 0; a < n; ++a) {
    gens[a] = a;
    for (Index b = 0; b < n; ++b) {
      right[std::size_t(a) * n + b] = table[a][b];
      if (table[a][b] == identity) inverse[a] = b;
    }
    if (inverse[a] == n) throw Error(Errc::invalid_spec, "element without inverse");
  }
  std::vector<Gen> gen_inverse(inverse.begin(), inverse.end());
  return FiniteGroup(identity, std::move(gens), std::move(gen_inverse), std::move(right),
                     std::move(inverse));
}

Index FiniteGroup::multiply(Index a, Index b) const {
  // a = p * x gives a * b = p * (x * b); walk whichever factor is shorter.
  if (depth_[a] <= depth_[b]) {
    while (a != identity_) {
      b = left(parent_gen_[a], b);
      a = parent_[a];
    }
    return b;
  }
  Index u = inverse_[b], v = inverse_[a];
  while (u != identity_) {
    v = left(parent_gen_[u], v);
    u = parent_[u];
  }
  return inverse_[v];
}

std::vector<Gen> FiniteGroup::word(Index g) const {
  std::vector<Gen> w(depth_[g]);
  for (std::size_t i = w.size(); i-- > 0;) {
    w[i] = parent_gen_[g];
    g = parent_[g];
  }
  return w;
}

const ConjugacyClasses& FiniteGroup::classes() const {
  std::call_once(class_cache_->once, [this] {
    auto cc = std::make_unique<ConjugacyClasses>();
    const std::uint32_t n = order();
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    cc->class_of.assign(n, kUnset);
    std::vector<Index> orbit;
    for (Index g = 0; g < n; ++g) {
      if (cc->class_of[g] != kUnset) continue;
      const std::uint32_t id = static_cast<std::uint32_t>(cc->members.size());
      orbit.assign(1, g);
      cc->class_of[g] = id;
      for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (Gen x = 0; x < gens_.size(); ++x) {
          const Index h = conjugate_by_generator(orbit[head], x);
          if (cc->class_of[h] == kUnset) {
            cc->class_of[h] = id;
            orbit.push_back(h);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      Index rep = orbit.front();
      for (Index h : orbit) {
        if (depth_[h] < depth_[rep]) rep = h;
      }
      cc->reps.push_back(rep);
      cc->members.push_back(orbit);
    }
    class_cache_->value = std::move(cc);
  });
  return *class_cache_->value;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::uint32_t ng = g.order(), nh = h.order();
  const std::size_t kg = g.num_generators(), kh = h.num_generators();
  std::vector<Index> gens;
  std::vector<Gen> gen_inverse;
  for (std::size_t x = 0; x < kg; ++x) {
    gens.push_back(product_index(h, g.generators()[x], h.identity()));
    gen_inverse.push_back(g.generator_inverse(static_cast<Gen>(x)));
  }
  for (std::size_t y = 0; y < kh; ++y) {
    gens.push_back(product_index(h, g.identity(), h.generators()[y]));
    gen_inverse.push_back(static_cast<Gen>(kg + h.generator_inverse(static_cast<Gen>(y))));
  }
  const std::size_t k = kg + kh;
  std::vector<Index> right(std::size_t(ng) * nh * k);
  std::vector<Index> inverse(std::size_t(ng) * nh);
  for (Index a = 0; a < ng; ++a) {
    for (Index b = 0; b < nh; ++b) {
      const Index p = product_index(h, a, b);
      inverse[p] = product_index(h, g.inverse(a), h.inverse(b));
      for (std::size_t x = 0; x < kg; ++x) {
        right[p * k + x] = product_index(h, g.right(a, static_cast<Gen>(x)), b);
      }
      for (std::size_t y = 0; y < kh; ++y) {
        right[p * k + kg + y] = product_index(h, a, h.right(b, static_cast<Gen>(y)));
      }
    }
  }
  return FiniteGroup(product_index(h, g.identity(), h.identity()), std::move(gens),
                     std::move(gen_inverse), std::move(right), std::move(inverse));
}

std::vector<std::uint32_t> closure_classes(const FiniteGroup& g, std::span<const Index> s) {
  const auto& cc = g.classes();
  std::vector<std::uint32_t> ids;
  for (Index x : s) {
    ids.push_back(cc.class_of[x]);
    ids.push_back(cc.class_of[g.inverse(x)]);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::vector<std::int32_t> class_distances(const FiniteGroup& g,
                                          std::span<const std::uint32_t> step_classes,
                                          std::int32_t max_depth) {
  // Balls are unions of classes, and the classes met in X*Y are those of
  // x*Y for any single x in X.
  const auto& cc = g.classes();
  std::vector<std::int32_t> dist(cc.count(), -1);
  const std::uint32_t start = cc.class_of[g.identity()];
  dist[start] = 0;
  std::vector<std::uint32_t> frontier{start};
  std::size_t reached = 1;
  for (std::int32_t d = 0; !frontier.empty() && (max_depth < 0 || d < max_depth); ++d) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t x : frontier) {
      const Index rep = cc.reps[x];
      for (std::uint32_t y : step_classes) {
        for (Index member : cc.members[y]) {
          const std::uint32_t z = cc.class_of[g.multiply(rep, member)];
          if (dist[z] < 0) {
            dist[z] = d + 1;
            next.push_back(z);
            ++reached;
          }
        }
        if (reached == cc.count()) break;
      }
      if (reached == cc.count()) break;
    }
    frontier = std::move(next);
  }
  return dist;
}

std::vector<std::uint8_t> normal_closure_members(const FiniteGroup& g, std::span<const Index> s) {
  const auto& cc = g.classes();
  auto steps = closure_classes(g, s);
  auto dist = class_distances(g, steps);
  std::vector<std::uint8_t> members(g.order(), 0);
  for (std::uint32_t c = 0; c < cc.count(); ++c) {
    if (dist[c] < 0) continue;
    for (Index m : cc.members[c]) members[m] = 1;
  }
  return members;
}

std::uint32_t normal_closure_order(const FiniteGroup& g, std::span<const Index> s) {
  const auto& cc = g.classes();
  auto dist = class_distances(g, closure_classes(g, s));
  std::uint32_t total = 0;
  for (std::uint32_t c = 0; c < cc.count(); ++c) {
    if (dist[c] >= 0) total += static_cast<std::uint32_t>(cc.members[c].size());
  }
  return total;
}

std::vector<std::uint8_t> commutator_subgroup(const FiniteGroup& g) {
  std::vector<Index> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      comms.push_back(g.commutator(gens[i], gens[j]));
    }
  }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  if (comms.empty()) comms.push_back(g.identity());
  return normal_closure_members(g, comms);
}

Quotient quotient_by_normal(const FiniteGroup& g, const std::vector<std::uint8_t>& normal) {
  Quotient q;
  const std::uint32_t n = g.order();
  if (normal.size() != n || !normal[g.identity()]) {
    throw Error(Errc::invalid_spec, "not a subgroup membership table");
  }
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  q.label.assign(n, kUnset);
  std::vector<Index> subgroup;
  for (Index x = 0; x < n; ++x) {
    if (normal[x]) subgroup.push_back(x);
  }
  for (Index x = 0; x < n; ++x) {
    if (q.label[x] != kUnset) continue;
    const std::uint32_t id = static_cast<std::uint32_t>(q.reps.size());
    q.reps.push_back(x);
    for (Index m : subgroup) q.label[g.multiply(x, m)] = id;
  }
  q.identity = q.label[g.identity()];
  const std::size_t k = q.reps.size();
  q.table.assign(k, std::vector<std::uint32_t>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      q.table[a][b] = q.label[g.multiply(q.reps[a], q.reps[b])];
    }
  }
  return q;
}

bool generates_quotient(const Quotient& q, std::span<const Index> s) {
  const std::size_t k = q.reps.size();
  std::vector<std::uint8_t> seen(k, 0);
  std::vector<std::uint32_t> gens;
  for (Index x : s) gens.push_back(q.label[x]);
  const std::uint32_t identity = q.identity;
  std::vector<std::uint32_t> members{identity};
  seen[identity] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::uint32_t x : gens) {
      const std::uint32_t y = q.table[members[head]][x];
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  }
  return members.size() == k;
}

}  // namespace chev
