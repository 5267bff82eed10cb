#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chev/constructions.hpp"

using namespace chev;

namespace {

const GroupId kSp4 = GroupId::SP4();
Root b2(int i, int j) { return make_root(RootSystemId::B2(), i, j); }

std::vector<Elem> params(const LowerBoundSet& s, const Root& phi) {
  std::vector<Elem> out;
  for (const auto& g : s.generators) {
    // e_phi(t) carries t at the position of its first off-diagonal entry.
    const auto& m = g.matrix();
    Elem t = 0;
    for (int i = 0; i < m.dim && t == 0; ++i) {
      for (int j = 0; j < m.dim && t == 0; ++j) {
        if (i != j) t = m.at(i, j);
      }
    }
    CHECK(g == root_matrix(g.group(), g.ring(), phi, t));
    out.push_back(t);
  }
  return out;
}

void check_certificate(const LowerBoundSet& s, const Root& phi) {
  REQUIRE(!s.generators.empty());
  const auto& ring = s.generators.front().ring();
  CHECK(pi_set(s.generators).empty());
  const auto target = root_matrix(s.generators.front().group(), ring, phi, ring->one());
  CHECK(pi_lower_bound_certificate(s.generators, target, s.primes).bound == s.claimed_bound);
}

Index random_element(const MatrixGroup& mg, std::mt19937& rng) {
  return static_cast<Index>(rng() % mg.order());
}

}  // namespace

TEST_CASE("split data") {
  const auto d = split_data(-7);
  CHECK(d.kind == SplitKind::split);
  CHECK(d.r == 2);
  CHECK(d.residue_degrees == std::vector<int>{1, 1});
  CHECK(split_data(5).residue_degrees == std::vector<int>{2});
  CHECK(split_data(5).r == 0);
  CHECK(split_data(-5).residue_degrees == std::vector<int>{1});
  for (long long D : {-7LL, -5LL, -1LL, 2LL, 3LL, 5LL, 17LL, -3LL, 13LL}) {
    const auto s = split_data(D);
    CHECK(s.r == std::count(s.residue_degrees.begin(), s.residue_degrees.end(), 1));
    CHECK(s.to_json()["r"] == s.r);
  }
}

TEST_CASE("higher-rank lower-bound sets") {
  const auto sl3 = GroupId::SL(3);
  const Root phi = make_root_e(RootSystemId::A(2), 1, 2);
  auto z6 = make_ring("Z/6");
  const Elem t23[] = {2, 3};
  const auto s = lower_bound_set_higher_rank(sl3, z6, phi, t23);
  CHECK(params(s, phi) == std::vector<Elem>{3, 2});
  CHECK(s.claimed_bound == 2);
  check_certificate(s, phi);

  const Elem t2[] = {2};
  const auto one = lower_bound_set_higher_rank(sl3, z6, phi, t2);
  CHECK(params(one, phi) == std::vector<Elem>{1});

  auto z30 = make_ring("Z/30");
  const Elem t235[] = {2, 3, 5};
  const auto s3 = lower_bound_set_higher_rank(sl3, z30, phi, t235);
  CHECK(params(s3, phi) == std::vector<Elem>{15, 10, 6});
  check_certificate(s3, phi);
  const auto sp = lower_bound_set_higher_rank(kSp4, z30, b2(1, 0), t235);
  check_certificate(sp, b2(1, 0));

  auto z12 = make_ring("Z/12");
  const Elem bad1[] = {2, 2};
  const Elem bad2[] = {4, 3};
  CHECK_THROWS_AS(lower_bound_set_higher_rank(sl3, z30, phi, bad1), Error);
  try {
    lower_bound_set_higher_rank(sl3, z12, phi, bad2);
    FAIL("expected not_coprime");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_coprime);
  }
}

TEST_CASE("rank-two lower-bound sets") {
  const Root alpha = b2(1, 0);
  auto z6 = make_ring("Z/6");
  const Elem x[] = {2};
  const Elem v[] = {3};
  const auto s = lower_bound_set_rank2(z6, x, v, 2);
  CHECK(params(s, alpha) == std::vector<Elem>{3, 2});
  check_certificate(s, alpha);

  auto q = make_ring("Quad(-7)/2");
  const Elem w = q->omega(), w1 = q->add(q->omega(), q->one());
  const Elem xs[] = {w, w1};
  const auto s2 = lower_bound_set_rank2(q, xs, {}, 2);
  CHECK(params(s2, alpha) == std::vector<Elem>{w1, w});
  check_certificate(s2, alpha);

  try {
    lower_bound_set_rank2(q, xs, {}, 1);
    FAIL("expected k_too_small");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::k_too_small);
  }
  CHECK_THROWS_AS(lower_bound_set_rank2(z6, x, {}, 2), Error);

  // Quad(-7)/6: w and 1+w generate the primes over 2, 3 the inert prime.
  auto q6 = make_ring("Quad(-7)/6");
  const Elem y[] = {q6->parse("w"), q6->parse("1+w")};
  const Elem u[] = {q6->from_int(3)};
  CHECK(maximal_ideals(q6).size() == 3);
  const auto s3 = lower_bound_set_rank2(q6, y, u, 3);
  CHECK(params(s3, alpha) ==
        std::vector<Elem>{q6->mul(y[1], u[0]), q6->mul(y[0], u[0]), q6->mul(y[0], y[1])});
  check_certificate(s3, alpha);
}

TEST_CASE("sign epimorphism on SP4(F2)") {
  const auto mg = enumerate_group(kSp4, make_ring("Z/2"));
  const SignEpimorphism sign(mg);
  CHECK(sign.kernel_size() == 360);
  const auto& r = mg.ring();
  for (const Root& phi : all_roots(RootSystemId::B2())) {
    CHECK(sign(mg.index_checked(root_matrix(kSp4, r, phi, 1))) == 1);
    CHECK(sp4_sign_epimorphism(root_matrix(kSp4, r, phi, 1)) == 1);
  }
  CHECK(sign(0) == 0);
  CHECK(sp4_sign_epimorphism(root_matrix(kSp4, r, b2(1, 0), 1) * root_matrix(kSp4, r, b2(0, 1), 1)) ==
        0);
  const auto& g = mg.group();
  for (Index a = 0; a < g.order(); ++a) {
    for (Index b = 0; b < g.order(); b += 7) {
      REQUIRE(sign(g.multiply(a, b)) == (sign(a) ^ sign(b)));
    }
  }
  CHECK_THROWS_AS(SignEpimorphism(enumerate_group(kSp4, make_ring("Z/3"))), Error);
  CHECK_THROWS_AS(sp4_sign_epimorphism(identity_element(kSp4, make_ring("Z/3"))), Error);
  // A two-element table ring from a quotient works too.
  auto z6 = make_ring("Z/6");
  const auto q = quotient_map(Ideal(z6, {2}));
  CHECK(sp4_sign_epimorphism(reduce_mod(root_matrix(kSp4, z6, b2(1, 1), 3), q)) == 1);
}

TEST_CASE("F2^r epimorphism") {
  auto q = make_ring("Quad(-7)/2");
  CHECK(F2rEpimorphism(q).r() == 2);
  CHECK(f2r_epimorphism(root_matrix(kSp4, q, b2(1, 0), q->one())) == std::vector<int>{1, 1});
  CHECK(f2r_epimorphism(identity_element(kSp4, q)) == std::vector<int>{0, 0});
  const auto w = f2r_epimorphism(root_matrix(kSp4, q, b2(1, 0), q->omega()));
  CHECK(w[0] + w[1] == 1);

  std::mt19937 rng(6);
  for (const char* spec : {"Quad(-7)/2", "Quad(-7)/4", "Quad(-5)/6", "Z/2xZ/4"}) {
    CAPTURE(spec);
    auto ring = make_ring(spec);
    const F2rEpimorphism f(ring);
    const auto roots = all_roots(RootSystemId::B2());
    auto random_elem = [&] {
      GroupElem x = identity_element(kSp4, ring);
      for (int k = 0; k < 4; ++k) {
        x = x * root_matrix(kSp4, ring, roots[rng() % 8], rng() % ring->size());
      }
      return x;
    };
    for (int trial = 0; trial < 10000; ++trial) {
      const auto a = random_elem(), b = random_elem();
      const auto fa = f(a), fb = f(b), fab = f(a * b);
      for (int u = 0; u < f.r(); ++u) REQUIRE(fab[u] == (fa[u] ^ fb[u]));
    }
    // Surjective on root elements: the idempotents hit each coordinate.
    std::set<std::vector<int>> images;
    for (Elem t = 0; t < ring->size(); ++t) images.insert(f(root_matrix(kSp4, ring, b2(1, 0), t)));
    CHECK(images.size() == (std::size_t(1) << f.r()));
  }
  try {
    F2rEpimorphism(make_ring("Quad(5)/2"));
    FAIL("expected no_f2_factors");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_f2_factors);
  }
}

TEST_CASE("abelianization") {
  const auto f2 = enumerate_group(kSp4, make_ring("Z/2"));
  CHECK(abelianization_dim(f2.group()) == 1);
  CHECK(abelianization_dim(direct_product(f2.group(), f2.group())) == 2);
  CHECK(abelianization_dim(enumerate_group(kSp4, make_ring("Z/3")).group()) == 0);
  CHECK_THROWS_AS(abelianization_dim(enumerate_group(GroupId::SL(2), make_ring("Z/3")).group()),
                  Error);
  for (long long D : {-7LL, -5LL, -1LL}) {
    CAPTURE(D);
    const auto mg = enumerate_group(kSp4, make_ring(RingSpec::quad(D, 2)));
    CHECK(abelianization_dim(mg.group()) == split_two_quadratic(D).r);
  }
}

TEST_CASE("unit normal generation") {
  CHECK(check_unit_normal_generation(make_ring("Z/4"), 3));
  CHECK(check_unit_normal_generation(make_ring("Z/2"), 1));
  try {
    check_unit_normal_generation(make_ring("Quad(-7)/2"), 1);
    FAIL("expected hypothesis_violated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::hypothesis_violated);
  }
  try {
    check_unit_normal_generation(make_ring("Z/4"), 2);
    FAIL("expected not_unit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_unit);
  }
}

TEST_CASE("congruence subgroup is the reduction kernel") {
  for (const char* spec : {"Z/4", "Quad(-7)/2", "Z/3"}) {
    CAPTURE(spec);
    const auto mg = enumerate_group(kSp4, make_ring(spec));
    const auto n = congruence_subgroup(mg);
    const auto red = quotient_map(Ideal(mg.ring(), {mg.ring()->from_int(2)}));
    for (Index x = 0; x < mg.order(); ++x) {
      REQUIRE(bool(n[x]) == reduce_mod(mg.element(x), red).is_identity());
    }
  }
}

TEST_CASE("generation criteria") {
  const auto f3 = enumerate_group(kSp4, make_ring("Z/3"));
  const Index ea3[] = {f3.index_checked(root_matrix(kSp4, f3.ring(), b2(1, 0), 1))};
  const auto v = generation_criteria_check(f3, ea3);
  CHECK(v.pi_empty);
  CHECK(v.quotient_generates);
  CHECK(v.actually_generates);
  CHECK(v.to_json()["consistent"] == true);

  const auto f2 = enumerate_group(kSp4, make_ring("Z/2"));
  const Index id[] = {0};
  const auto v2 = generation_criteria_check(f2, id);
  CHECK_FALSE(v2.pi_empty);
  CHECK_FALSE(v2.actually_generates);

  const auto z4 = enumerate_group(kSp4, make_ring("Z/4"));
  const GenerationChecker checker(z4);
  CHECK(checker.quotient_order() == 720);
  CHECK(checker.congruence_order() == 1024);
  const Index ea4[] = {z4.index_checked(root_matrix(kSp4, z4.ring(), b2(1, 0), 1))};
  const auto v4 = checker.check(ea4);
  CHECK(v4.pi_empty);
  CHECK(v4.quotient_generates);
  CHECK(v4.actually_generates);

  // e_a(2) lies in N: Pi is nonempty and nothing is generated.
  const Index e2[] = {z4.index_checked(root_matrix(kSp4, z4.ring(), b2(1, 0), 2))};
  const auto v5 = checker.check(e2);
  CHECK_FALSE(v5.pi_empty);
  CHECK_FALSE(v5.actually_generates);
  CHECK(v5.consistent());

  std::mt19937 rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const Index s[] = {random_element(z4, rng), random_element(z4, rng)};
    CHECK(checker.check(s).consistent());
  }
}

TEST_CASE("seeded samples are reproducible") {
  const auto mg = enumerate_group(kSp4, make_ring("Z/4"));
  const auto n = congruence_subgroup(mg);
  const auto a = sample_small_sets(mg, n, 50, 2, 7);
  const auto b = sample_small_sets(mg, n, 50, 2, 7);
  CHECK(a == b);
  CHECK(a != sample_small_sets(mg, n, 50, 2, 8));
  std::size_t in_n = 0, total = 0;
  for (const auto& s : a) {
    CHECK(s.size() >= 1);
    CHECK(s.size() <= 2);
    for (Index x : s) {
      CHECK(x < mg.order());
      in_n += n[x];
      ++total;
    }
  }
  // About half the draws come from N, which has index 720.
  CHECK(in_n * 4 > total);
}
