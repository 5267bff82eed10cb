#include "chev/rootsys.hpp"

#include <algorithm>
#include <cctype>

namespace chev {

RootSystemId RootSystemId::A(int n) {
  if (n < 1 || n > kMaxRank) throw Error(Errc::invalid_spec, "A_n needs 1 <= n <= 8");
  return {Type::A, n};
}

std::string to_string(const RootSystemId& sys) {
  switch (sys.type) {
    case RootSystemId::Type::A: return "A" + std::to_string(sys.rank);
    case RootSystemId::Type::B2: return "B2";
    case RootSystemId::Type::G2: return "G2";
  }
  return "?";
}

namespace {

// Integer Euclidean model of the simple roots.
std::vector<std::vector<int>> simple_vectors(const RootSystemId& sys) {
  switch (sys.type) {
    case RootSystemId::Type::A: {
      std::vector<std::vector<int>> out;
      for (int i = 0; i < sys.rank; ++i) {
        std::vector<int> v(sys.rank + 1, 0);
        v[i] = 1;
        v[i + 1] = -1;
        out.push_back(v);
      }
      return out;
    }
    case RootSystemId::Type::B2: return {{1, 0}, {-1, 1}};
    case RootSystemId::Type::G2: return {{1, -1, 0}, {-2, 1, 1}};
  }
  return {};
}

std::vector<int> euclidean(const Root& r) {
  auto simple = simple_vectors(r.sys);
  std::vector<int> v(simple[0].size(), 0);
  for (int i = 0; i < r.sys.rank; ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += r.coef[i] * simple[i][k];
  }
  return v;
}

std::vector<std::array<int, kMaxRank>> positive_coefficients(const RootSystemId& sys) {
  std::vector<std::array<int, kMaxRank>> out;
  auto pair = [](int i, int j) {
    std::array<int, kMaxRank> c{};
    c[0] = i;
    c[1] = j;
    return c;
  };
  switch (sys.type) {
    case RootSystemId::Type::A:
      for (int p = 0; p < sys.rank; ++p) {
        for (int q = p + 1; q <= sys.rank; ++q) {
          std::array<int, kMaxRank> c{};
          for (int k = p; k < q; ++k) c[k] = 1;
          out.push_back(c);
        }
      }
      break;
    case RootSystemId::Type::B2:
      out = {pair(1, 0), pair(0, 1), pair(1, 1), pair(2, 1)};
      break;
    case RootSystemId::Type::G2:
      out = {pair(1, 0), pair(0, 1), pair(1, 1), pair(2, 1), pair(3, 1), pair(3, 2)};
      break;
  }
  auto height = [](const std::array<int, kMaxRank>& c) {
    int h = 0;
    for (int x : c) h += x;
    return h;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a > b;
  });
  return out;
}

}  // namespace

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coef) c = -c;
  return r;
}

int Root::height() const {
  int h = 0;
  for (int c : coef) h += c;
  return h;
}

bool Root::is_positive() const { return height() > 0; }

std::vector<Root> positive_roots(const RootSystemId& sys) {
  std::vector<Root> out;
  for (const auto& c : positive_coefficients(sys)) out.push_back(Root{sys, c});
  return out;
}

std::vector<Root> all_roots(const RootSystemId& sys) {
  auto out = positive_roots(sys);
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(-out[i]);
  return out;
}

std::vector<Root> simple_roots(const RootSystemId& sys) {
  std::vector<Root> out;
  for (int i = 0; i < sys.rank; ++i) {
    Root r{sys, {}};
    r.coef[i] = 1;
    out.push_back(r);
  }
  return out;
}

bool is_root(const RootSystemId& sys, const std::array<int, kMaxRank>& coef) {
  for (const auto& c : positive_coefficients(sys)) {
    if (c == coef) return true;
    auto n = c;
    for (int& x : n) x = -x;
    if (n == coef) return true;
  }
  return false;
}

Root make_root(const RootSystemId& sys, std::vector<int> coef) {
  if (coef.size() > static_cast<std::size_t>(sys.rank)) {
    throw Error(Errc::invalid_root, "too many coefficients for " + to_string(sys));
  }
  Root r{sys, {}};
  std::copy(coef.begin(), coef.end(), r.coef.begin());
  if (!is_root(sys, r.coef)) throw Error(Errc::invalid_root, "not a root of " + to_string(sys));
  return r;
}

Root make_root(const RootSystemId& sys, int i, int j) { return make_root(sys, {i, j}); }

Root make_root_e(const RootSystemId& sys, int p, int q) {
  if (sys.type != RootSystemId::Type::A || p == q || p < 1 || q < 1 || p > sys.rank + 1 ||
      q > sys.rank + 1) {
    throw Error(Errc::invalid_root, "bad index pair for " + to_string(sys));
  }
  Root r{sys, {}};
  int lo = std::min(p, q), hi = std::max(p, q);
  for (int k = lo - 1; k < hi - 1; ++k) r.coef[k] = p < q ? 1 : -1;
  return r;
}

std::pair<int, int> e_indices(const Root& root) {
  if (root.sys.type != RootSystemId::Type::A) {
    throw Error(Errc::invalid_root, "e-indices only exist for A_n roots");
  }
  int first = -1, last = -1;
  for (int k = 0; k < root.sys.rank; ++k) {
    if (root.coef[k] != 0) {
      if (first < 0) first = k;
      last = k;
    }
  }
  if (root.coef[first] > 0) return {first + 1, last + 2};
  return {last + 2, first + 1};
}

int inner_product(const Root& phi, const Root& psi) {
  auto u = euclidean(phi);
  auto v = euclidean(psi);
  int s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
  return s;
}

int squared_length(const Root& phi) { return inner_product(phi, phi); }

int pairing(const Root& phi, const Root& psi) {
  return 2 * inner_product(phi, psi) / squared_length(psi);
}

Root reflect(const Root& phi, const Root& alpha) {
  const int c = pairing(phi, alpha);
  Root r = phi;
  for (int k = 0; k < kMaxRank; ++k) r.coef[k] -= c * alpha.coef[k];
  return r;
}

RootLength root_length(const Root& phi) {
  int shortest = squared_length(simple_roots(phi.sys)[0]);
  return squared_length(phi) > shortest ? RootLength::Long : RootLength::Short;
}

std::vector<SupportTerm> commutator_support(const Root& alpha, const Root& beta) {
  std::vector<SupportTerm> out;
  for (int total = 2; total <= 6; ++total) {
    for (int i = 1; i < total; ++i) {
      const int j = total - i;
      std::array<int, kMaxRank> c{};
      for (int k = 0; k < kMaxRank; ++k) c[k] = i * alpha.coef[k] + j * beta.coef[k];
      if (is_root(alpha.sys, c)) out.push_back({i, j, Root{alpha.sys, c}});
    }
  }
  return out;
}

std::string to_string(const Root& root) {
  if (root.sys.type == RootSystemId::Type::A) {
    auto [p, q] = e_indices(root);
    return "e" + std::to_string(p) + "-e" + std::to_string(q);
  }
  std::string out;
  auto term = [&](int c, char name) {
    if (c == 0) return;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += name;
  };
  term(root.coef[0], 'a');
  term(root.coef[1], 'b');
  return out;
}

Root parse_root(const RootSystemId& sys, std::string_view text) {
  auto fail = [&]() -> Root {
    throw Error(Errc::invalid_root, "cannot parse root '" + std::string(text) + "' in " + to_string(sys));
  };
  if (text.empty()) return fail();
  if (text.front() == 'e') {
    if (sys.type != RootSystemId::Type::A) return fail();
    auto dash = text.find("-e");
    if (dash == std::string_view::npos) return fail();
    try {
      int p = std::stoi(std::string(text.substr(1, dash - 1)));
      int q = std::stoi(std::string(text.substr(dash + 2)));
      return make_root_e(sys, p, q);
    } catch (const std::invalid_argument&) {
      return fail();
    }
  }
  if (sys.rank != 2) return fail();
  int a = 0, b = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    }
    int coeff = 0;
    bool digits = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = coeff * 10 + (text[i] - '0');
      digits = true;
      ++i;
    }
    if (!digits) coeff = 1;
    if (i >= text.size()) return fail();
    if (text[i] == 'a') a += sign * coeff;
    else if (text[i] == 'b') b += sign * coeff;
    else return fail();
    ++i;
  }
  return make_root(sys, a, b);
}

}  // namespace chev
