#include "chev/constructions.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace chev {

nlohmann::json SplitData::to_json() const {
  return {{"D", D}, {"kind", split_kind_name(kind)}, {"r", r}, {"residue_degrees", residue_degrees}};
}

SplitData split_data(long long D) {
  const SplitResult s = split_two_quadratic(D);
  SplitData out{D, s.kind, s.r, {}};
  for (const auto& f : local_factors(make_ring(RingSpec::quad(D, 2)))) {
    out.residue_degrees.push_back(std::countr_zero(f.residue_size));
  }
  return out;
}

nlohmann::json LowerBoundSet::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators) gens.push_back(chev::to_json(g));
  nlohmann::json p = nlohmann::json::array();
  for (const auto& ideal : primes) p.push_back(ideal.to_string());
  return {{"generators", gens}, {"claimed_bound", claimed_bound}, {"primes", p}};
}

namespace {

Elem product_except(const Ring& r, std::span<const Elem> xs, std::size_t skip) {
  Elem p = r.one();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != skip) p = r.mul(p, xs[i]);
  }
  return p;
}

void require_coprime_primes(const RingHandle& ring, std::span<const Elem> t) {
  const auto maximal = maximal_ideals(ring);
  std::vector<Ideal> ideals;
  for (Elem x : t) {
    Ideal ideal(ring, {x});
    if (std::find(maximal.begin(), maximal.end(), ideal) == maximal.end()) {
      throw Error(Errc::not_coprime, ring->format(x) + " does not generate a maximal ideal");
    }
    for (const auto& other : ideals) {
      if (!ideal_sum(ideal, other).is_full()) {
        throw Error(Errc::not_coprime, "generators " + ideal.to_string() + " and " +
                                           other.to_string() + " are not coprime");
      }
    }
    ideals.push_back(std::move(ideal));
  }
}

}  // namespace

LowerBoundSet lower_bound_set_higher_rank(const GroupId& group, const RingHandle& ring,
                                          const Root& phi, std::span<const Elem> t) {
  if (t.empty()) throw Error(Errc::invalid_spec, "need at least one prime generator");
  require_coprime_primes(ring, t);
  LowerBoundSet out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    out.generators.push_back(root_matrix(group, ring, phi, product_except(*ring, t, i)));
    out.primes.emplace_back(ring, std::vector<Elem>{t[i]});
  }
  out.claimed_bound = static_cast<int>(t.size());
  return out;
}

LowerBoundSet lower_bound_set_rank2(const RingHandle& ring, std::span<const Elem> x,
                                    std::span<const Elem> v, int k) {
  const int r = static_cast<int>(x.size());
  if (k < r) {
    throw Error(Errc::k_too_small, "k = " + std::to_string(k) + " is below r = " + std::to_string(r));
  }
  if (v.size() != static_cast<std::size_t>(k - r)) {
    throw Error(Errc::invalid_spec, "expected " + std::to_string(k - r) + " extra primes");
  }
  std::vector<Elem> all(x.begin(), x.end());
  all.insert(all.end(), v.begin(), v.end());
  require_coprime_primes(ring, all);

  const GroupId group = GroupId::SP4();
  const Root alpha = make_root(group.root_system(), 1, 0);
  LowerBoundSet out;
  // Both cases of r_u are the product of every generator except the u-th.
  for (int u = 0; u < k; ++u) {
    out.generators.push_back(root_matrix(group, ring, alpha, product_except(*ring, all, u)));
    out.primes.emplace_back(ring, std::vector<Elem>{all[u]});
  }
  out.claimed_bound = k;
  return out;
}

// ---------------------------------------------------------------------------
// F2 quotients

SignEpimorphism::SignEpimorphism(const MatrixGroup& mg) {
  if (mg.id().kind != GroupId::Kind::SP4 || mg.ring()->size() != 2) {
    throw Error(Errc::wrong_group, "the sign map needs Sp4 over F2, got " + to_string(mg.id()) +
                                       " over " + mg.ring()->name());
  }
  kernel_ = commutator_subgroup(mg.group());
  kernel_size_ = static_cast<std::uint32_t>(std::count(kernel_.begin(), kernel_.end(), 1));
}

namespace {

struct CanonicalSp4F2 {
  MatrixGroup mg;
  SignEpimorphism sign;

  CanonicalSp4F2()
      : mg(enumerate_group(GroupId::SP4(), make_ring(RingSpec::zmod(2)))), sign(mg) {}
};

const CanonicalSp4F2& canonical_sp4_f2() {
  static const CanonicalSp4F2 instance;
  return instance;
}

}  // namespace

int sp4_sign_epimorphism(const GroupElem& g) {
  const Ring& r = *g.ring();
  if (g.group().kind != GroupId::Kind::SP4 || r.size() != 2) {
    throw Error(Errc::wrong_group, "the sign map needs Sp4 over F2");
  }
  const auto& c = canonical_sp4_f2();
  Matrix m = g.matrix();
  for (Elem& x : m.entries) x = x == r.zero() ? 0 : 1;
  return c.sign(c.mg.index_checked(GroupElem(GroupId::SP4(), c.mg.ring(), std::move(m))));
}

int sp4_sign_epimorphism(const MatrixGroup& mg, Index x) {
  return sp4_sign_epimorphism(mg.element(x));
}

F2rEpimorphism::F2rEpimorphism(const RingHandle& ring) : ring_(ring) {
  for (const auto& f : local_factors(ring)) {
    if (f.residue_size == 2) maps_.push_back({f.projection, residue_field_map(f.ring)});
  }
  if (maps_.empty()) throw Error(Errc::no_f2_factors, ring->name() + " has no residue field F2");
}

std::vector<int> F2rEpimorphism::operator()(const GroupElem& g) const {
  if (g.ring().get() != ring_.get()) throw Error(Errc::wrong_group, "element over another ring");
  std::vector<int> out;
  for (const auto& m : maps_) {
    out.push_back(sp4_sign_epimorphism(reduce_mod(reduce_mod(g, m.to_local), m.to_residue)));
  }
  return out;
}

std::vector<int> f2r_epimorphism(const GroupElem& g) { return F2rEpimorphism(g.ring())(g); }

int abelianization_dim(const FiniteGroup& g) {
  const Quotient q = quotient_by_normal(g, commutator_subgroup(g));
  for (std::size_t a = 0; a < q.reps.size(); ++a) {
    if (q.table[a][a] != q.identity) {
      throw Error(Errc::not_two_torsion, "G/[G,G] has an element of order above 2");
    }
  }
  return std::countr_zero(static_cast<std::uint64_t>(q.reps.size()));
}

bool check_unit_normal_generation(const MatrixGroup& mg, Elem x) {
  const RingHandle& ring = mg.ring();
  int f2 = 0;
  for (const auto& f : local_factors(ring)) f2 += f.residue_size == 2 ? 1 : 0;
  if (f2 >= 2) {
    throw Error(Errc::hypothesis_violated,
                ring->name() + " has " + std::to_string(f2) + " local factors with residue F2");
  }
  if (!ring->is_unit(x)) throw Error(Errc::not_unit, ring->format(x) + " is not a unit");
  const Root alpha = make_root(mg.id().root_system(), 1, 0);
  const Index e = mg.index_checked(root_matrix(mg.id(), ring, alpha, x));
  const Index s[] = {e};
  return normal_closure_order(mg.group(), s) == mg.order();
}

bool check_unit_normal_generation(const RingHandle& ring, Elem x) {
  int f2 = 0;
  for (const auto& f : local_factors(ring)) f2 += f.residue_size == 2 ? 1 : 0;
  if (f2 >= 2) {
    throw Error(Errc::hypothesis_violated,
                ring->name() + " has " + std::to_string(f2) + " local factors with residue F2");
  }
  return check_unit_normal_generation(enumerate_group(GroupId::SP4(), ring), x);
}

std::vector<std::uint8_t> congruence_subgroup(const MatrixGroup& mg) {
  const Ring& r = *mg.ring();
  std::vector<Index> s;
  for (const Root& phi : all_roots(mg.id().root_system())) {
    for (Elem a = 0; a < r.size(); ++a) {
      s.push_back(mg.index_checked(root_matrix(mg.id(), mg.ring(), phi, r.add(a, a))));
    }
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return normal_closure_members(mg.group(), s);
}

nlohmann::json GenerationVerdict::to_json() const {
  return {{"pi_empty", pi_empty},
          {"quotient_generates", quotient_generates},
          {"actually_generates", actually_generates},
          {"consistent", consistent()}};
}

GenerationChecker::GenerationChecker(const MatrixGroup& mg) : mg_(&mg) {
  const auto n = congruence_subgroup(mg);
  n_order_ = static_cast<std::uint32_t>(std::count(n.begin(), n.end(), 1));
  q_ = quotient_by_normal(mg.group(), n);
  quotient_ = std::make_unique<FiniteGroup>(FiniteGroup::from_cayley_table(q_.table));
}

GenerationVerdict GenerationChecker::check(std::span<const Index> s) const {
  GenerationVerdict v;
  if (s.empty()) return v;
  std::vector<GroupElem> elems;
  std::vector<Index> labels;
  for (Index x : s) {
    elems.push_back(mg_->element(x));
    labels.push_back(q_.label[x]);
  }
  v.pi_empty = pi_set(elems).empty();
  v.quotient_generates = normal_closure_order(*quotient_, labels) == quotient_->order();
  v.actually_generates = normal_closure_order(mg_->group(), s) == mg_->order();
  return v;
}

GenerationVerdict generation_criteria_check(const MatrixGroup& mg, std::span<const Index> s) {
  return GenerationChecker(mg).check(s);
}

std::vector<std::vector<Index>> sample_small_sets(const MatrixGroup& mg,
                                                  const std::vector<std::uint8_t>& n_members,
                                                  int count, int max_size, std::uint64_t seed) {
  std::vector<Index> n;
  for (Index x = 0; x < n_members.size(); ++x) {
    if (n_members[x]) n.push_back(x);
  }
  // Plain modular reduction keeps the draws identical across standard libraries.
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Index>> out;
  for (int i = 0; i < count; ++i) {
    const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size));
    std::vector<Index> set;
    for (int j = 0; j < size; ++j) {
      if (rng() % 2 == 0 || n.empty()) {
        set.push_back(static_cast<Index>(rng() % mg.order()));
      } else {
        set.push_back(n[rng() % n.size()]);
      }
    }
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace chev
