// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "chev/chevalley.hpp"
#include "chev/constructions.hpp"
#include "chev/levels.hpp"
#include "chev/norms.hpp"
#include "oracle_groups.hpp"

using namespace chev;

namespace {

const GroupId kSp4 = GroupId::SP4();

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

// 1. Commutator, additivity and Weyl identities over Z/101.
void relations(Outcome& o) {
  auto probe = make_ring("Z/101");
  const Ring& r = *probe;
  for (const GroupId& g : {GroupId::SL(3), kSp4}) {
    const SignTable table = resolve_signs(g, probe);
    const auto roots = all_roots(g.root_system());
    std::uint64_t checks = 0, failures = 0;
    for (const Root& x : roots) {
      for (const Root& y : roots) {
        if (x == -y) continue;
        for (Elem a = 0; a < r.size(); ++a) {
          for (Elem b = 0; b < r.size(); ++b) {
            ++checks;
            failures += !check_commutator_identity(g, probe, x, y, a, b, table);
          }
        }
      }
    }
    for (const Root& phi : roots) {
      for (Elem s = 0; s < r.size(); ++s) {
        const GroupElem es = root_matrix(g, probe, phi, s);
        for (Elem t = 0; t < r.size(); ++t) {
          ++checks;
          failures += !(root_matrix(g, probe, phi, r.add(s, t)) == es * root_matrix(g, probe, phi, t));
        }
      }
    }
    for (const Root& phi : roots) {
      for (const Root& psi : roots) {
        for (Elem x = 0; x < r.size(); ++x) {
          ++checks;
          failures += !check_weyl_conjugation(g, probe, phi, psi, x);
        }
      }
    }
    o.detail << " " << to_string(g) << ": " << checks << " identities";
    o.require(failures == 0, std::to_string(failures) + " identities in " + to_string(g));
  }
}

// 2. Group orders.
void orders(Outcome& o) {
  struct Row {
    GroupId g;
    const char* ring;
    std::uint32_t order;
  };
  for (const Row& row : {Row{kSp4, "Z/2", 720}, Row{kSp4, "Z/3", 51840}, Row{kSp4, "Z/4", 737280},
                         Row{GroupId::SL(2), "Z/3", 24}}) {
    const auto n = enumerate_group(row.g, make_ring(row.ring)).order();
    o.detail << " |" << to_string(row.g) << "(" << row.ring << ")|=" << n;
    o.require(n == row.order, "expected " + std::to_string(row.order));
  }
}

// 3. Sign map and abelianization.
void sign_and_abelianization(Outcome& o) {
  const auto f2 = enumerate_group(kSp4, make_ring("Z/2"));
  const SignEpimorphism sign(f2);
  int ones = 0;
  for (const Root& phi : all_roots(RootSystemId::B2())) {
    ones += sign(f2.index_checked(root_matrix(kSp4, f2.ring(), phi, 1)));
  }
  o.require(ones == 8, "sign of e_phi(1) for all 8 roots");
  o.require(sign.kernel_size() == 360, "kernel size");
  const int d1 = abelianization_dim(f2.group());
  const int d2 = abelianization_dim(direct_product(f2.group(), f2.group()));
  const int d3 = abelianization_dim(enumerate_group(kSp4, make_ring("Z/3")).group());
  o.detail << " kernel=" << sign.kernel_size() << " dims=" << d1 << "," << d2 << "," << d3;
  o.require(d1 == 1 && d2 == 2 && d3 == 0, "abelianization dimensions");
}

// 4. e_a(u) normally generates Sp4 for every unit u.
void unit_generation(Outcome& o) {
  for (const char* spec : {"Z/2", "Z/3", "Z/4", "Quad(5)/2"}) {
    const auto mg = enumerate_group(kSp4, make_ring(spec));
    int units = 0;
    for (Elem u = 0; u < mg.ring()->size(); ++u) {
      if (!mg.ring()->is_unit(u)) continue;
      ++units;
      o.require(check_unit_normal_generation(mg, u),
                std::string(spec) + " unit " + mg.ring()->format(u));
    }
    o.detail << " " << spec << ":" << units << " units";
  }
}

// 5. No single class normally generates Sp4(Quad(-7)/2) = S6 x S6.
void single_class(Outcome& o) {
  const auto mg = enumerate_group(kSp4, make_ring("Quad(-7)/2"));
  const auto& g = mg.group();
  const auto& cc = g.classes();
  o.require(mg.order() == 518400, "order");
  o.require(cc.count() == 121, "121 classes");
  // Every class closure, directly.
  int generating = 0;
  for (std::uint32_t c = 0; c < cc.count(); ++c) {
    const Index s[] = {cc.reps[c]};
    generating += normal_closure_order(g, s) == g.order();
  }
  o.require(generating == 0, std::to_string(generating) + " classes generate");
  // The F2^2 quotient: a single element has cyclic image.
  const F2rEpimorphism f(mg.ring());
  std::set<std::vector<int>> images;
  for (std::uint32_t c = 0; c < cc.count(); ++c) images.insert(f(mg.element(cc.reps[c])));
  o.require(images.size() == 4, "F2^2 image not onto");
  const auto delta = delta_k_exact(g, 1);
  const auto delta_raw = delta_k_exact(g, 1, {.cap = 10'000'000, .abelian_prefilter = false});
  o.require(delta.value == ExtInt::neg_inf() && delta_raw.value == ExtInt::neg_inf(), "delta_1");
  o.detail << " classes=" << cc.count() << " generating=" << generating
           << " delta_1=" << delta.value.to_string();
}

// 6. Pi-certificates, and the norm bound seen directly in SL3(Z/6).
void certificates(Outcome& o) {
  const GroupId sl3 = GroupId::SL(3);
  const Root phi = make_root_e(RootSystemId::A(2), 1, 2);
  auto z6 = make_ring("Z/6");
  auto z30 = make_ring("Z/30");
  const Elem t6[] = {2, 3};
  const Elem t30[] = {2, 3, 5};
  const auto s6 = lower_bound_set_higher_rank(sl3, z6, phi, t6);
  const auto s30 = lower_bound_set_higher_rank(sl3, z30, phi, t30);
  const int b6 = pi_lower_bound_certificate(s6.generators, root_matrix(sl3, z6, phi, 1), s6.primes).bound;
  const int b30 =
      pi_lower_bound_certificate(s30.generators, root_matrix(sl3, z30, phi, 1), s30.primes).bound;
  o.require(b6 == 2 && b30 == 3, "certificate bounds");

  const auto mg = enumerate_group(sl3, z6);
  std::vector<Index> s;
  for (const auto& x : s6.generators) s.push_back(mg.index_checked(x));
  const Index target = mg.index_checked(root_matrix(sl3, z6, phi, 1));
  const auto b1 = ball(mg.group(), s, 1);
  const bool outside = !std::binary_search(b1.begin(), b1.end(), target);
  const ExtInt norm = word_norm(mg.group(), s, target);
  o.require(outside, "e_phi(1) in B_S(1)");
  o.detail << " bounds=" << b6 << "," << b30 << " |SL3(Z/6)|=" << mg.order()
           << " ||e(1)||_S=" << norm.to_string();
}

// 7. SL2 over Z/n in at most four unitriangular factors.
void sl2(Outcome& o) {
  for (long long n : {4LL, 5LL, 6LL, 9LL}) {
    const auto mg = enumerate_group(GroupId::SL(2), make_ring(RingSpec::zmod(n)));
    std::size_t longest = 0, failures = 0;
    for (Index i = 0; i < mg.order(); ++i) {
      const auto m = mg.element(i);
      const auto fs = sl2_unitriangular_decompose(m);
      GroupElem p = identity_element(GroupId::SL(2), mg.ring());
      bool ok = fs.size() <= 4;
      for (std::size_t k = 0; k < fs.size(); ++k) {
        const bool up = is_upper_unitriangular(fs[k]);
        ok = ok && (up || is_lower_unitriangular(fs[k]));
        if (k) ok = ok && up != is_upper_unitriangular(fs[k - 1]);
        p = p * fs[k];
      }
      failures += !(ok && p == m);
      longest = std::max(longest, fs.size());
    }
    o.detail << " Z/" << n << ":" << mg.order() << " max " << longest;
    o.require(failures == 0, std::to_string(failures) + " failures over Z/" + std::to_string(n));
  }
}

// 8. Generation criteria.
void generation(Outcome& o) {
  const auto f3 = enumerate_group(kSp4, make_ring("Z/3"));
  int reps = 0;
  for (Index rep : f3.group().classes().reps) {
    const std::vector<GroupElem> s = {f3.element(rep)};
    const Index idx[] = {rep};
    const bool gen = normal_closure_order(f3.group(), idx) == f3.order();
    o.require(gen == pi_set(s).empty(), "SP4(F3) class rep " + std::to_string(rep));
    ++reps;
  }
  const auto z4 = enumerate_group(kSp4, make_ring("Z/4"));
  const GenerationChecker checker(z4);
  const auto sets = sample_small_sets(z4, congruence_subgroup(z4), 50, 2, 0);
  int generating = 0, pi_nonempty = 0;
  for (const auto& s : sets) {
    const auto v = checker.check(s);
    o.require(v.consistent(), "SP4(Z/4) sample");
    generating += v.actually_generates;
    pi_nonempty += !v.pi_empty;
  }
  o.detail << " F3 reps=" << reps << " Z/4 sets=" << sets.size() << " (generating " << generating
           << ", Pi nonempty " << pi_nonempty << ")";
}

// 9. Splitting of 2 by D mod 8.
void splitting(Outcome& o) {
  struct Row {
    long long D;
    SplitKind kind;
    int r;
  };
  // D = 1 mod 8 splits, 5 mod 8 is inert, 2 and 3 mod 4 ramify.
  for (const Row& row : {Row{-7, SplitKind::split, 2}, Row{-5, SplitKind::ramified, 1},
                         Row{-1, SplitKind::ramified, 1}, Row{2, SplitKind::ramified, 1},
                         Row{3, SplitKind::ramified, 1}, Row{5, SplitKind::inert, 0},
                         Row{17, SplitKind::split, 2}}) {
    const auto s = split_two_quadratic(row.D);
    o.require(s.kind == row.kind && s.r == row.r, "D = " + std::to_string(row.D));
  }
  for (long long D : {-7LL, -5LL, 5LL}) {
    int f2 = 0;
    for (const auto& f : local_factors(make_ring(RingSpec::quad(D, 2)))) f2 += f.residue_size == 2;
    o.require(f2 == split_two_quadratic(D).r, "F2 factors for D = " + std::to_string(D));
    o.detail << " D=" << D << ":r=" << f2;
  }
}

// 10. BFS balls and norms against direct products of conjugates.
void oracle_equivalence(Outcome& o) {
  for (const char* spec : {"Z/2", "Z/3"}) {
    const auto mg = enumerate_group(GroupId::SL(2), make_ring(spec));
    const auto& g = mg.group();
    // Multiplication table from the matrices themselves.
    oracle::Table t(g.order(), std::vector<Index>(g.order()));
    for (Index a = 0; a < g.order(); ++a) {
      for (Index b = 0; b < g.order(); ++b) t[a][b] = *mg.index_of(mg.element(a) * mg.element(b));
    }
    std::uint64_t sets = 0, mismatches = 0;
    for (Index a = 0; a < g.order(); ++a) {
      for (Index b = a; b < g.order(); ++b) {
        std::vector<Index> s{a};
        if (b != a) s.push_back(b);
        if (oracle::naive_normal_closure(t, s).size() != g.order()) continue;
        ++sets;
        for (int k = 0; k <= 3; ++k) {
          const auto got = ball(g, s, k);
          mismatches += std::set<Index>(got.begin(), got.end()) != oracle::naive_ball(t, s, k);
        }
        const auto norms = oracle::naive_norms(t, s);
        const NormTable nt(g, s);
        for (Index x = 0; x < g.order(); ++x) {
          mismatches += nt.norm(x) != ExtInt::finite(norms[x]);
        }
      }
    }
    o.detail << " SL2(" << spec << "):" << sets << " generating sets";
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches over " + spec);
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "relation suite", 60, relations},
      {2, "group orders", 300, orders},
      {3, "sign epimorphism and abelianization", 120, sign_and_abelianization},
      {4, "unit normal generation", 600, unit_generation},
      {5, "single-class obstruction", 600, single_class},
      {6, "lower-bound certificates", 120, certificates},
      {7, "SL2 decomposition", 120, sl2},
      {8, "generation criteria", 900, generation},
      {9, "splitting table", 1, splitting},
      {10, "oracle equivalence", 60, oracle_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.detail << " [over time budget " << c.budget_s << "s]";
    }
    failed += !o.pass;
    std::printf("criterion %2d %s: %s (%.2fs)%s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", secs,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
