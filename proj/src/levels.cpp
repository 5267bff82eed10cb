#include "chev/levels.hpp"

namespace chev {

std::vector<Elem> level_generators(const GroupElem& a) {
  const Ring& r = *a.ring();
  const Matrix& m = a.matrix();
  const int n = m.dim;
  std::vector<Elem> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) gens.push_back(m.at(i, j));
    }
    if (i + 1 < n) gens.push_back(r.sub(m.at(i, i), m.at(n - 1, n - 1)));
  }
  return gens;
}

Ideal level_ideal(const GroupElem& a) { return Ideal(a.ring(), level_generators(a)); }

Ideal level_ideal_power(const GroupElem& a, int e) {
  if (a.group().kind != GroupId::Kind::SP4 || e != 2) {
    throw Error(Errc::unsupported_group, "l(A)_e is only available for e = 2 in Sp4");
  }
  // Squares of all diagonal differences, not just those against a_nn.
  const Ring& r = *a.ring();
  const Matrix& m = a.matrix();
  std::vector<Elem> gens;
  for (int i = 0; i < m.dim; ++i) {
    for (int j = 0; j < m.dim; ++j) {
      const Elem g = i == j ? 0 : m.at(i, j);
      gens.push_back(r.pow(g, 2));
      gens.push_back(r.pow(r.sub(m.at(i, i), m.at(j, j)), 2));
    }
  }
  return Ideal(a.ring(), std::move(gens));
}

bool level_contained_in(const GroupElem& a, const Ideal& ideal) {
  if (ideal.ring().get() != a.ring().get()) {
    throw Error(Errc::invalid_spec, "ideal and element live over different rings");
  }
  for (Elem g : level_generators(a)) {
    if (!ideal.contains(g)) return false;
  }
  return true;
}

namespace {

const RingHandle& common_ring(std::span<const GroupElem> s) {
  for (const auto& a : s) {
    if (a.ring().get() != s.front().ring().get()) {
      throw Error(Errc::invalid_spec, "elements live over different rings");
    }
  }
  return s.front().ring();
}

}  // namespace

std::vector<Ideal> pi_set(std::span<const GroupElem> s) {
  if (s.empty()) throw Error(Errc::invalid_spec, "Pi of an empty set needs a ring");
  std::vector<Ideal> out;
  for (Ideal& m : maximal_ideals(common_ring(s))) {
    bool all = true;
    for (const auto& a : s) all = all && level_contained_in(a, m);
    if (all) out.push_back(std::move(m));
  }
  return out;
}

bool levels_sum_is_full(std::span<const GroupElem> s) {
  if (s.empty()) return false;
  std::vector<Elem> gens;
  for (const auto& a : s) {
    auto g = level_generators(a);
    gens.insert(gens.end(), g.begin(), g.end());
  }
  return Ideal(common_ring(s), std::move(gens)).is_full();
}

nlohmann::json LevelCertificate::to_json() const {
  nlohmann::json p = nlohmann::json::array();
  for (const auto& ideal : primes) p.push_back(ideal.to_string());
  nlohmann::json miss = nlohmann::json::array();
  for (const auto& m : missed) miss.push_back(m ? nlohmann::json(*m) : nlohmann::json(nullptr));
  return {{"bound", bound}, {"primes", p}, {"missed", miss}};
}

LevelCertificate pi_lower_bound_certificate(std::span<const GroupElem> s, const GroupElem& target,
                                            const std::vector<Ideal>& primes) {
  LevelCertificate cert;
  cert.primes = primes;
  for (const auto& p : primes) {
    if (level_contained_in(target, p)) return cert;
  }
  for (const auto& a : s) {
    std::optional<std::size_t> miss;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (level_contained_in(a, primes[i])) continue;
      if (miss) {
        cert.missed.clear();
        return cert;
      }
      miss = i;
    }
    cert.missed.push_back(miss);
  }
  cert.bound = static_cast<int>(primes.size());
  return cert;
}

}  // namespace chev
