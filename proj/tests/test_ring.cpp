#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "chev/ring.hpp"

using namespace chev;

namespace {

// Z[w]/m with w^2 = p + q w, by hand.
struct QuadOracle {
  long long m, p, q;
  explicit QuadOracle(long long D, long long mod) : m(mod) {
    if (((D % 4) + 4) % 4 == 1) {
      p = (D - 1) / 4;
      q = 1;
    } else {
      p = D;
      q = 0;
    }
  }
  long long r(long long x) const { return ((x % m) + m) % m; }
  std::pair<long long, long long> mul(std::pair<long long, long long> x,
                                      std::pair<long long, long long> y) const {
    auto [a, b] = x;
    auto [c, d] = y;
    // (a + b w)(c + d w) = ac + (ad + bc) w + bd (p + q w)
    return {r(a * c + b * d * p), r(a * d + b * c + b * d * q)};
  }
};

std::set<Elem> as_set(const std::vector<Elem>& v) { return {v.begin(), v.end()}; }

void check_axioms(const RingHandle& ring) {
  const Ring& R = *ring;
  const Elem n = R.size();
  for (Elem a = 0; a < n; ++a) {
    REQUIRE(R.add(a, 0) == a);
    REQUIRE(R.mul(a, R.one()) == a);
    REQUIRE(R.add(a, R.neg(a)) == 0);
    for (Elem b = 0; b < n; ++b) {
      REQUIRE(R.add(a, b) == R.add(b, a));
      REQUIRE(R.mul(a, b) == R.mul(b, a));
      for (Elem c = 0; c < n; ++c) {
        REQUIRE(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
        REQUIRE(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
        REQUIRE(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("ring sizes and parsing") {
  CHECK(make_ring("Z/6")->size() == 6);
  CHECK(make_ring("Quad(-7)/2")->size() == 4);
  CHECK(make_ring("Z/2xZ/3")->size() == 6);
  CHECK(make_ring("Quad(5)/2")->size() == 4);
  CHECK(to_string(parse_ring_spec("Z/2xZ/3")) == "Z/2xZ/3");
  CHECK(to_string(parse_ring_spec("Quad(-7)/2")) == "Quad(-7)/2");
  CHECK_THROWS_AS(make_ring("Z/1"), Error);
  CHECK_THROWS_AS(make_ring("Quad(4)/3"), Error);
  CHECK_THROWS_AS(make_ring("Quad(1)/3"), Error);
  CHECK_THROWS_AS(make_ring("Q/3"), Error);
  try {
    make_ring("Quad(12)/3");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_spec);
  }
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
  for (const char* spec : {"Z/2", "Z/6", "Z/8", "Quad(-7)/2", "Quad(5)/2", "Quad(-1)/3",
                           "Quad(-5)/4", "Quad(2)/3", "Z/2xZ/3", "Z/2xQuad(5)/2"}) {
    CAPTURE(spec);
    check_axioms(make_ring(spec));
  }
}

TEST_CASE("ring axioms on random triples in a larger ring") {
  auto ring = make_ring("Quad(-7)/45");
  const Ring& R = *ring;
  std::mt19937 rng(7);
  for (int i = 0; i < 20000; ++i) {
    Elem a = rng() % R.size(), b = rng() % R.size(), c = rng() % R.size();
    REQUIRE(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
    REQUIRE(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
  }
}

TEST_CASE("quadratic multiplication matches the hand formula") {
  for (long long D : {-7LL, -5LL, -1LL, 2LL, 3LL, 5LL, 17LL}) {
    for (long long m : {2LL, 3LL, 4LL, 9LL}) {
      CAPTURE(D);
      CAPTURE(m);
      auto ring = make_ring(RingSpec::quad(D, m));
      QuadOracle o(D, m);
      for (long long a = 0; a < m; ++a) {
        for (long long b = 0; b < m; ++b) {
          for (long long c = 0; c < m; ++c) {
            for (long long d = 0; d < m; ++d) {
              auto [e, f] = o.mul({a, b}, {c, d});
              REQUIRE(ring->mul(Elem(a + m * b), Elem(c + m * d)) == Elem(e + m * f));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("format and parse round-trip") {
  for (const char* spec : {"Z/6", "Quad(-7)/4", "Z/2xZ/3", "Z/3xQuad(5)/2"}) {
    auto ring = make_ring(spec);
    for (Elem x = 0; x < ring->size(); ++x) {
      CAPTURE(ring->format(x));
      CHECK(ring->parse(ring->format(x)) == x);
    }
  }
  auto q = make_ring("Quad(-7)/4");
  CHECK(q->parse("w") == q->omega());
  CHECK(q->parse("2+3w") == q->add(q->from_int(2), q->mul(q->from_int(3), q->omega())));
  CHECK(q->parse("-w") == q->neg(q->omega()));
  CHECK_THROWS_AS(q->parse("x"), Error);
}

TEST_CASE("inverses") {
  auto z6 = make_ring("Z/6");
  CHECK(z6->try_invert(5) == std::optional<Elem>(5));
  CHECK_FALSE(z6->try_invert(2));
  CHECK_THROWS_AS(invert(RingElem(z6, 2)), Error);
  auto q = make_ring("Quad(-7)/2");
  CHECK_FALSE(q->try_invert(q->omega()));
  CHECK(q->mul(q->omega(), q->add(q->omega(), q->one())) == 0);

  for (const char* spec : {"Z/12", "Quad(-7)/6", "Quad(3)/5", "Z/4xZ/9", "Quad(-1)/49"}) {
    auto ring = make_ring(spec);
    for (Elem x = 0; x < ring->size(); ++x) {
      auto y = ring->try_invert(x);
      bool any = false;
      for (Elem z = 0; z < ring->size(); ++z) any = any || ring->mul(x, z) == ring->one();
      REQUIRE(any == y.has_value());
      if (y) REQUIRE(ring->mul(x, *y) == ring->one());
    }
  }
}

TEST_CASE("ideals") {
  auto z6 = make_ring("Z/6");
  CHECK(ideal_from_generators(z6, {2}).elements() == std::vector<Elem>{0, 2, 4});
  CHECK(ideal_from_generators(z6, {}).elements() == std::vector<Elem>{0});
  CHECK_FALSE(ideal_from_generators(z6, {2}).is_full());
  CHECK(ideal_from_generators(z6, {2, 3}).is_full());
  CHECK(ideal_is_full(ideal_sum(Ideal(z6, {2}), Ideal(z6, {3}))));
  CHECK_FALSE(Ideal(make_ring("Z/5"), {}).is_full());

  auto q = make_ring("Quad(-7)/2");
  CHECK(as_set(Ideal(q, {q->omega()}).elements()) == std::set<Elem>{0, q->omega()});

  // Closure is idempotent.
  for (const char* spec : {"Z/12", "Quad(-7)/4", "Z/2xZ/4"}) {
    auto ring = make_ring(spec);
    for (Elem x = 0; x < ring->size(); ++x) {
      for (Elem y = x; y < ring->size(); ++y) {
        Ideal i(ring, {x, y});
        CHECK(Ideal(ring, i.elements()) == i);
      }
    }
  }
}

TEST_CASE("radical membership") {
  auto z8 = make_ring("Z/8");
  CHECK(radical_contains(Ideal(z8, {}), 2));
  auto z6 = make_ring("Z/6");
  CHECK_FALSE(radical_contains(Ideal(z6, {2}), 3));
  for (Elem x = 0; x < 6; ++x) CHECK(radical_contains(Ideal(z6, {1}), x));
}

TEST_CASE("maximal ideals") {
  auto names = [](const RingHandle& r) {
    std::set<std::vector<Elem>> out;
    for (const auto& m : maximal_ideals(r)) out.insert(m.elements());
    return out;
  };
  auto z6 = make_ring("Z/6");
  CHECK(names(z6) == std::set<std::vector<Elem>>{{0, 2, 4}, {0, 3}});
  CHECK(names(make_ring("Z/4")) == std::set<std::vector<Elem>>{{0, 2}});
  CHECK(names(make_ring("Z/3")) == std::set<std::vector<Elem>>{{0}});

  for (const char* spec : {"Z/30", "Z/12", "Quad(-7)/2", "Quad(-7)/4", "Quad(5)/6", "Z/2xZ/4"}) {
    CAPTURE(spec);
    auto ring = make_ring(spec);
    auto ms = maximal_ideals(ring);
    CHECK(names(ring).size() == ms.size());
    for (const auto& m : ms) {
      CHECK_FALSE(m.is_full());
      for (Elem x = 0; x < ring->size(); ++x) {
        if (m.contains(x)) continue;
        auto gens = m.elements();
        gens.push_back(x);
        CHECK(Ideal(ring, gens).is_full());
      }
    }
    // Brute force: every proper ideal generated by two elements sits in some m.
    for (Elem x = 0; x < ring->size(); ++x) {
      Ideal i(ring, {x});
      if (i.is_full()) continue;
      CHECK(std::any_of(ms.begin(), ms.end(), [&](const Ideal& m) { return i.subset_of(m); }));
    }
  }
}

TEST_CASE("local factors") {
  auto sizes = [](const RingHandle& r) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (const auto& f : local_factors(r)) out.push_back({f.ring->size(), f.residue_size});
    std::sort(out.begin(), out.end());
    return out;
  };
  using V = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  CHECK(sizes(make_ring("Z/6")) == V{{2, 2}, {3, 3}});
  CHECK(sizes(make_ring("Z/4")) == V{{4, 2}});
  CHECK(sizes(make_ring("Quad(-7)/2")) == V{{2, 2}, {2, 2}});
  CHECK(sizes(make_ring("Quad(5)/2")) == V{{4, 4}});
  CHECK(sizes(make_ring("Quad(-5)/2")) == V{{4, 2}});

  // CRT: x -> (projections) is a bijection and each projection is a ring map.
  for (const char* spec : {"Z/60", "Quad(-7)/6", "Z/2xZ/2xZ/3", "Quad(-1)/10"}) {
    CAPTURE(spec);
    auto ring = make_ring(spec);
    auto fs = local_factors(ring);
    std::set<std::vector<Elem>> images;
    for (Elem x = 0; x < ring->size(); ++x) {
      std::vector<Elem> t;
      for (const auto& f : fs) t.push_back(f.projection(x));
      images.insert(t);
      for (Elem y = 0; y < ring->size(); ++y) {
        for (const auto& f : fs) {
          REQUIRE(f.projection(ring->mul(x, y)) == f.ring->mul(f.projection(x), f.projection(y)));
          REQUIRE(f.projection(ring->add(x, y)) == f.ring->add(f.projection(x), f.projection(y)));
        }
      }
    }
    CHECK(images.size() == ring->size());
  }
}

TEST_CASE("residue fields") {
  for (const char* spec : {"Z/4", "Z/9", "Quad(5)/2", "Quad(-5)/4"}) {
    auto ring = make_ring(spec);
    auto map = residue_field_map(ring);
    const auto& k = *map.codomain;
    for (Elem x = 1; x < k.size(); ++x) CHECK(k.is_unit(x));
    for (Elem x = 0; x < ring->size(); ++x) {
      for (Elem y = 0; y < ring->size(); ++y) {
        REQUIRE(map(ring->mul(x, y)) == k.mul(map(x), map(y)));
      }
    }
  }
  CHECK(residue_field_map(make_ring("Quad(5)/2")).codomain->size() == 4);
}

TEST_CASE("splitting of 2") {
  struct Row {
    long long D;
    SplitKind kind;
    int r;
  };
  for (Row row : {Row{-7, SplitKind::split, 2}, Row{-5, SplitKind::ramified, 1},
                  Row{-1, SplitKind::ramified, 1}, Row{2, SplitKind::ramified, 1},
                  Row{3, SplitKind::ramified, 1}, Row{5, SplitKind::inert, 0},
                  Row{17, SplitKind::split, 2}, Row{-3, SplitKind::inert, 0},
                  Row{6, SplitKind::ramified, 1}}) {
    CAPTURE(row.D);
    const auto s = split_two_quadratic(row.D);
    CHECK(s.kind == row.kind);
    CHECK(s.r == row.r);
    // Count residue-F2 factors of Quad(D)/2 directly.
    int f2 = 0;
    for (const auto& f : local_factors(make_ring(RingSpec::quad(row.D, 2)))) {
      f2 += f.residue_size == 2 ? 1 : 0;
    }
    CHECK(f2 == row.r);
  }
  CHECK_THROWS_AS(split_two_quadratic(4), Error);
  CHECK_THROWS_AS(split_two_quadratic(1), Error);
  CHECK_THROWS_AS(split_two_quadratic(0), Error);
}

TEST_CASE("quotient maps") {
  auto z6 = make_ring("Z/6");
  auto q = quotient_map(Ideal(z6, {2}));
  CHECK(q.codomain->size() == 2);
  CHECK(q(3) == q.codomain->one());
  CHECK(q(4) == 0);
}
