#include "chev/chevalley.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace chev {

GroupId GroupId::SL(int n) {
  if (n < 2 || n > kMaxRank + 1) throw Error(Errc::invalid_spec, "SL(n) needs 2 <= n <= 9");
  return {Kind::SL, n};
}

RootSystemId GroupId::root_system() const {
  if (kind == Kind::SP4) return RootSystemId::B2();
  return RootSystemId::A(n - 1);
}

std::string to_string(const GroupId& id) {
  if (id.kind == GroupId::Kind::SP4) return "sp4";
  return "sl" + std::to_string(id.n);
}

GroupId parse_group_id(std::string_view text) {
  std::string s;
  for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "sp4") return GroupId::SP4();
  if (s.size() >= 3 && s.compare(0, 2, "sl") == 0) {
    std::string digits = s.substr(2);
    if (!digits.empty() && digits.front() == '(' && digits.back() == ')') {
      digits = digits.substr(1, digits.size() - 2);
    }
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) &&
        digits.size() < 3) {
      return GroupId::SL(std::stoi(digits));
    }
  }
  throw Error(Errc::invalid_spec, "unknown group '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Matrices

Matrix identity_matrix(const Ring& ring, int dim) {
  Matrix m{dim, std::vector<Elem>(std::size_t(dim) * dim, ring.zero())};
  for (int i = 0; i < dim; ++i) m.at(i, i) = ring.one();
  return m;
}

Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.dim != b.dim) throw Error(Errc::dimension_mismatch, "matrix sizes differ");
  const int n = a.dim;
  Matrix c{n, std::vector<Elem>(std::size_t(n) * n, 0)};
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Elem x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) {
        const Elem y = b.at(k, j);
        if (y != 0) c.at(i, j) = ring.add(c.at(i, j), ring.mul(x, y));
      }
    }
  }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t = a;
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) t.at(i, j) = a.at(j, i);
  }
  return t;
}

std::vector<Elem> characteristic_polynomial(const Ring& ring, const Matrix& a) {
  // Berkowitz: peel off the first row and column and recurse on the rest.
  const int n = a.dim;
  if (n == 0) return {ring.one()};
  if (n == 1) return {ring.one(), ring.neg(a.at(0, 0))};
  Matrix b{n - 1, std::vector<Elem>(std::size_t(n - 1) * (n - 1))};
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) b.at(i - 1, j - 1) = a.at(i, j);
  }
  const auto pb = characteristic_polynomial(ring, b);

  std::vector<Elem> t(n + 1, 0);
  t[0] = ring.one();
  t[1] = ring.neg(a.at(0, 0));
  std::vector<Elem> col(n - 1);  // B^k C
  for (int i = 1; i < n; ++i) col[i - 1] = a.at(i, 0);
  for (int k = 2; k <= n; ++k) {
    Elem s = 0;
    for (int j = 1; j < n; ++j) s = ring.add(s, ring.mul(a.at(0, j), col[j - 1]));
    t[k] = ring.neg(s);
    std::vector<Elem> next(n - 1, 0);
    for (int i = 0; i < n - 1; ++i) {
      for (int j = 0; j < n - 1; ++j) next[i] = ring.add(next[i], ring.mul(b.at(i, j), col[j]));
    }
    col = std::move(next);
  }

  std::vector<Elem> p(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= std::min(i, n - 1); ++j) {
      p[i] = ring.add(p[i], ring.mul(t[i - j], pb[j]));
    }
  }
  return p;
}

Elem determinant(const Ring& ring, const Matrix& a) {
  const auto p = characteristic_polynomial(ring, a);
  const Elem c = p[a.dim];
  return a.dim % 2 == 0 ? c : ring.neg(c);
}

namespace {

Matrix sp4_form(const Ring& ring) {
  Matrix j{4, std::vector<Elem>(16, 0)};
  j.at(0, 2) = ring.one();
  j.at(1, 3) = ring.one();
  j.at(2, 0) = ring.neg(ring.one());
  j.at(3, 1) = ring.neg(ring.one());
  return j;
}

Matrix scale(const Ring& ring, const Matrix& a, Elem s) {
  Matrix c = a;
  for (Elem& x : c.entries) x = ring.mul(x, s);
  return c;
}

Matrix inverse_matrix(const GroupId& group, const Ring& ring, const Matrix& a) {
  if (group.kind == GroupId::Kind::SP4) {
    // A^T J A = J gives A^{-1} = J^{-1} A^T J, and J^{-1} = -J.
    const Matrix j = sp4_form(ring);
    return multiply(ring, multiply(ring, transpose(j), transpose(a)), j);
  }
  // Cayley-Hamilton: A^{-1} = -c_n^{-1} (A^{n-1} + c_1 A^{n-2} + ... + c_{n-1} I).
  const int n = a.dim;
  const auto c = characteristic_polynomial(ring, a);
  auto cn_inv = ring.try_invert(c[n]);
  if (!cn_inv) throw Error(Errc::not_unit, "matrix is not invertible");
  Matrix p = identity_matrix(ring, n);
  for (int k = 1; k < n; ++k) {
    p = multiply(ring, p, a);
    for (int i = 0; i < n; ++i) p.at(i, i) = ring.add(p.at(i, i), c[k]);
  }
  return scale(ring, p, ring.neg(*cn_inv));
}

void check_dim(const GroupId& group, const Matrix& m) {
  if (m.dim != group.dim() || m.entries.size() != std::size_t(m.dim) * m.dim) {
    throw Error(Errc::dimension_mismatch, "expected a " + std::to_string(group.dim()) + "x" +
                                              std::to_string(group.dim()) + " matrix for " +
                                              to_string(group));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Group elements

GroupElem::GroupElem(GroupId group, RingHandle ring, Matrix m)
    : group_(group), ring_(std::move(ring)), m_(std::move(m)) {
  check_dim(group_, m_);
}

GroupElem GroupElem::inverse() const {
  return GroupElem(group_, ring_, inverse_matrix(group_, *ring_, m_));
}

bool GroupElem::is_identity() const { return m_ == identity_matrix(*ring_, m_.dim); }

GroupElem operator*(const GroupElem& a, const GroupElem& b) {
  if (!(a.group_ == b.group_) || a.ring_.get() != b.ring_.get()) {
    throw Error(Errc::dimension_mismatch, "factors live in different groups");
  }
  return GroupElem(a.group_, a.ring_, multiply(*a.ring_, a.m_, b.m_));
}

std::string GroupElem::to_string() const {
  std::string out = "[";
  for (int i = 0; i < m_.dim; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < m_.dim; ++j) {
      if (j) out += ",";
      out += ring_->format(m_.at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

GroupElem commutator(const GroupElem& x, const GroupElem& y) {
  return x * y * x.inverse() * y.inverse();
}

bool is_member(const GroupId& group, const Ring& ring, const Matrix& m) {
  check_dim(group, m);
  for (Elem x : m.entries) {
    if (x >= ring.size()) return false;
  }
  if (group.kind == GroupId::Kind::SP4) {
    const Matrix j = sp4_form(ring);
    return multiply(ring, multiply(ring, transpose(m), j), m) == j;
  }
  return determinant(ring, m) == ring.one();
}

GroupElem identity_element(const GroupId& group, const RingHandle& ring) {
  return GroupElem(group, ring, identity_matrix(*ring, group.dim()));
}

GroupElem scalar_element(const GroupId& group, const RingHandle& ring, Elem u) {
  return GroupElem(group, ring, scale(*ring, identity_matrix(*ring, group.dim()), u));
}

bool is_scalar(const Matrix& m) {
  for (int i = 0; i < m.dim; ++i) {
    for (int j = 0; j < m.dim; ++j) {
      if (i != j && m.at(i, j) != 0) return false;
      if (i == j && m.at(i, i) != m.at(0, 0)) return false;
    }
  }
  return true;
}

namespace {

Matrix root_raw(const GroupId& group, const Ring& ring, const Root& root, Elem t) {
  if (!(root.sys == group.root_system()) || !is_root(root.sys, root.coef)) {
    throw Error(Errc::invalid_root, "root is not in " + to_string(group.root_system()));
  }
  Matrix m = identity_matrix(ring, group.dim());
  if (group.kind == GroupId::Kind::SL) {
    auto [p, q] = e_indices(root);
    m.at(p - 1, q - 1) = t;
    return m;
  }
  const bool negative = !root.is_positive();
  const int i = negative ? -root.coef[0] : root.coef[0];
  const int j = negative ? -root.coef[1] : root.coef[1];
  auto set = [&](int r, int c, Elem v) {
    if (negative) std::swap(r, c);
    m.at(r, c) = v;
  };
  if (i == 1 && j == 0) {
    set(0, 1, t);
    set(3, 2, ring.neg(t));
  } else if (i == 0 && j == 1) {
    set(1, 3, t);
  } else if (i == 1 && j == 1) {
    set(0, 3, t);
    set(1, 2, t);
  } else {
    set(0, 2, t);
  }
  return m;
}

}  // namespace

GroupElem root_matrix(const GroupId& group, const RingHandle& ring, const Root& root, Elem t) {
  return GroupElem(group, ring, root_raw(group, *ring, root, t));
}

GroupElem weyl_matrix(const GroupId& group, const RingHandle& ring, const Root& root, Elem t) {
  auto inv = ring->try_invert(t);
  if (!inv) throw Error(Errc::not_unit, ring->format(t) + " is not a unit");
  const GroupElem e = root_matrix(group, ring, root, t);
  return e * root_matrix(group, ring, -root, ring->neg(*inv)) * e;
}

GroupElem torus_matrix(const GroupId& group, const RingHandle& ring, const Root& root, Elem t) {
  return weyl_matrix(group, ring, root, t) * weyl_matrix(group, ring, root, ring->one()).inverse();
}

GroupElem reduce_mod(const GroupElem& m, const RingMap& map) {
  if (map.domain.get() != m.ring().get()) {
    throw Error(Errc::invalid_spec, "projection domain does not match the element's ring");
  }
  Matrix out = m.matrix();
  for (Elem& x : out.entries) x = map(x);
  return GroupElem(m.group(), map.codomain, std::move(out));
}

bool commutes_with_root_elements(const GroupElem& m) {
  const auto& ring = m.ring();
  for (const Root& r : all_roots(m.group().root_system())) {
    for (Elem t : ring->additive_generators()) {
      const GroupElem e = root_matrix(m.group(), ring, r, t);
      if (!(m * e == e * m)) return false;
    }
  }
  return true;
}

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

GroupElem parse_factor(const GroupId& group, const RingHandle& ring, std::string_view tok) {
  auto fail = [&]() -> GroupElem {
    throw Error(Errc::parse_error, "cannot parse group element '" + std::string(tok) + "'");
  };
  tok = trim_view(tok);
  if (tok == "I" || tok == "1") return identity_element(group, ring);
  if (tok.size() < 4 || tok.back() != ')') return fail();
  const char kind = tok[0];
  if (kind != 'e' && kind != 'w' && kind != 'h') return fail();
  std::string_view rest = tok.substr(1);
  std::string_view root_text;
  if (rest.front() == '[') {
    auto close = rest.find(']');
    if (close == std::string_view::npos) return fail();
    root_text = rest.substr(1, close - 1);
    rest = rest.substr(close + 1);
  } else {
    auto open = rest.find('(');
    if (open == std::string_view::npos) return fail();
    root_text = rest.substr(0, open);
    rest = rest.substr(open);
  }
  if (rest.size() < 2 || rest.front() != '(') return fail();
  const Elem t = ring->parse(rest.substr(1, rest.size() - 2));
  const Root root = parse_root(group.root_system(), trim_view(root_text));
  switch (kind) {
    case 'e': return root_matrix(group, ring, root, t);
    case 'w': return weyl_matrix(group, ring, root, t);
    default: return torus_matrix(group, ring, root, t);
  }
}

}  // namespace

GroupElem parse_group_element(const GroupId& group, const RingHandle& ring, std::string_view text) {
  GroupElem out = identity_element(group, ring);
  int depth = 0;
  std::size_t start = 0;
  bool any = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(' || text[i] == '[') ++depth;
      if (text[i] == ')' || text[i] == ']') --depth;
      if (text[i] != '*' || depth != 0) continue;
    }
    out = out * parse_factor(group, ring, text.substr(start, i - start));
    any = true;
    start = i + 1;
  }
  if (!any) throw Error(Errc::parse_error, "empty group element");
  return out;
}

nlohmann::json to_json(const GroupElem& m) {
  const auto& ring = *m.ring();
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.matrix().dim; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.matrix().dim; ++j) row.push_back(ring.format(m.matrix().at(i, j)));
    rows.push_back(row);
  }
  return {{"group", to_string(m.group())},
          {"ring", ring.spec() ? to_string(*ring.spec()) : ring.name()},
          {"entries", rows}};
}

GroupElem group_elem_from_json(const nlohmann::json& j) {
  try {
    const GroupId group = parse_group_id(j.at("group").get<std::string>());
    const RingHandle ring = make_ring(j.at("ring").get<std::string>());
    const auto& rows = j.at("entries");
    const int n = static_cast<int>(rows.size());
    Matrix m{n, std::vector<Elem>(std::size_t(n) * n)};
    for (int r = 0; r < n; ++r) {
      if (rows[r].size() != std::size_t(n)) {
        throw Error(Errc::dimension_mismatch, "ragged entry list");
      }
      for (int c = 0; c < n; ++c) m.at(r, c) = ring->parse(rows[r][c].get<std::string>());
    }
    if (!is_member(group, *ring, m)) throw Error(Errc::invalid_spec, "matrix is not in the group");
    return GroupElem(group, ring, std::move(m));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

long double finite_group_order(const GroupId& group, long double q) {
  if (group.kind == GroupId::Kind::SP4) {
    return q * q * q * q * (q * q - 1) * (q * q * q * q - 1);
  }
  long double order = 1;
  for (int i = 0; i < group.n * (group.n - 1) / 2; ++i) order *= q;
  long double qi = q;
  for (int i = 2; i <= group.n; ++i) {
    qi *= q;
    order *= qi - 1;
  }
  return order;
}

int group_dimension(const GroupId& group) {
  return group.kind == GroupId::Kind::SP4 ? 10 : group.n * group.n - 1;
}

}  // namespace

std::uint64_t group_order_estimate(const GroupId& group, const RingHandle& ring) {
  // Smoothness: the kernel of G(L) -> G(L/m) has order |m|^dim G.
  long double total = 1;
  for (const auto& f : local_factors(ring)) {
    const long double q = f.residue_size;
    const long double m = static_cast<long double>(f.ring->size()) / q;
    total *= finite_group_order(group, q);
    for (int i = 0; i < group_dimension(group); ++i) total *= m;
  }
  if (total >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(total + 0.5L);
}

// Open-addressing set of matrices with 16-bit entries.
class MatrixGroup::Store {
 public:
  explicit Store(int dim) : dim_(dim), cells_(std::size_t(dim) * dim) {
    slots_.assign(1024, kEmpty);
  }

  std::size_t size() const noexcept { return count_; }
  std::size_t cells() const noexcept { return cells_; }

  Matrix decode(Index i) const {
    Matrix m{dim_, std::vector<Elem>(cells_)};
    const std::uint16_t* p = &entries_[std::size_t(i) * cells_];
    for (std::size_t k = 0; k < cells_; ++k) m.entries[k] = p[k];
    return m;
  }

  std::optional<Index> find(const std::uint16_t* key) const {
    for (std::size_t s = hash(key) & mask(); ; s = (s + 1) & mask()) {
      const Index v = slots_[s];
      if (v == kEmpty) return std::nullopt;
      if (equal(v, key)) return v;
    }
  }

  /// (index, inserted)
  std::pair<Index, bool> insert(const std::uint16_t* key) {
    if (2 * (count_ + 1) > slots_.size()) grow();
    std::size_t s = hash(key) & mask();
    for (; slots_[s] != kEmpty; s = (s + 1) & mask()) {
      if (equal(slots_[s], key)) return {slots_[s], false};
    }
    const Index id = static_cast<Index>(count_++);
    slots_[s] = id;
    entries_.insert(entries_.end(), key, key + cells_);
    return {id, true};
  }

 private:
  static constexpr Index kEmpty = std::numeric_limits<Index>::max();

  std::size_t mask() const noexcept { return slots_.size() - 1; }

  std::uint64_t hash(const std::uint16_t* key) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t k = 0; k < cells_; ++k) {
      h = (h ^ key[k]) * 0x100000001b3ull;
    }
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ull;
    return h ^ (h >> 32);
  }

  bool equal(Index v, const std::uint16_t* key) const {
    return std::equal(key, key + cells_, &entries_[std::size_t(v) * cells_]);
  }

  void grow() {
    std::vector<Index> old(slots_.size() * 2, kEmpty);
    old.swap(slots_);
    for (Index v = 0; v < count_; ++v) {
      std::size_t s = hash(&entries_[std::size_t(v) * cells_]) & mask();
      while (slots_[s] != kEmpty) s = (s + 1) & mask();
      slots_[s] = v;
    }
  }

  int dim_;
  std::size_t cells_;
  std::size_t count_ = 0;
  std::vector<std::uint16_t> entries_;
  std::vector<Index> slots_;
};

MatrixGroup::MatrixGroup(GroupId id, RingHandle ring, std::shared_ptr<const Store> store,
                         FiniteGroup group)
    : id_(id), ring_(std::move(ring)), store_(std::move(store)), group_(std::move(group)) {}

GroupElem MatrixGroup::element(Index i) const {
  return GroupElem(id_, ring_, store_->decode(i));
}

std::optional<Index> MatrixGroup::index_of(const GroupElem& m) const {
  if (!(m.group() == id_) || m.ring().get() != ring_.get()) return std::nullopt;
  std::vector<std::uint16_t> key(m.matrix().entries.begin(), m.matrix().entries.end());
  return store_->find(key.data());
}

Index MatrixGroup::index_checked(const GroupElem& m) const {
  auto i = index_of(m);
  if (!i) throw Error(Errc::invalid_spec, "element is not in " + to_string(id_));
  return *i;
}

MatrixGroup enumerate_group(const GroupId& group, const RingHandle& ring, std::uint64_t cap) {
  if (ring->size() > 65536) throw Error(Errc::cap_exceeded, "ring too large to enumerate over");
  const std::uint64_t estimate = group_order_estimate(group, ring);
  if (estimate > cap) {
    throw Error(Errc::cap_exceeded, "estimated order " + std::to_string(estimate) +
                                        " exceeds the cap " + std::to_string(cap));
  }
  const Ring& r = *ring;

  // Simple root elements e_{+-a}(t) for additive generators t and their negatives.
  std::vector<Matrix> gens;
  const auto sys = group.root_system();
  std::vector<Root> roots = simple_roots(sys);
  for (const Root& a : simple_roots(sys)) roots.push_back(-a);
  for (const Root& a : roots) {
    for (Elem t : r.additive_generators()) {
      for (Elem s : {t, r.neg(t)}) {
        Matrix m = root_raw(group, r, a, s);
        if (std::find(gens.begin(), gens.end(), m) == gens.end()) gens.push_back(std::move(m));
      }
    }
  }
  const std::size_t k = gens.size();
  std::vector<Gen> gen_inverse(k);
  for (std::size_t x = 0; x < k; ++x) {
    const Matrix inv = inverse_matrix(group, r, gens[x]);
    auto it = std::find(gens.begin(), gens.end(), inv);
    gen_inverse[x] = static_cast<Gen>(it - gens.begin());
  }

  auto store = std::make_shared<MatrixGroup::Store>(group.dim());
  const std::size_t cells = store->cells();
  std::vector<std::uint16_t> key(cells);
  auto encode = [&](const Matrix& m) {
    for (std::size_t c = 0; c < cells; ++c) key[c] = static_cast<std::uint16_t>(m.entries[c]);
    return key.data();
  };
  store->insert(encode(identity_matrix(r, group.dim())));
  std::vector<Index> right;
  std::vector<Index> parent{0};
  std::vector<Gen> parent_gen{0};
  for (Index i = 0; i < store->size(); ++i) {
    const Matrix g = store->decode(i);
    for (std::size_t x = 0; x < k; ++x) {
      auto [id, fresh] = store->insert(encode(multiply(r, g, gens[x])));
      right.push_back(id);
      if (fresh) {
        parent.push_back(i);
        parent_gen.push_back(static_cast<Gen>(x));
        if (store->size() > cap) {
          throw Error(Errc::cap_exceeded, "more than " + std::to_string(cap) +
                                              " elements (estimate " + std::to_string(estimate) +
                                              ")");
        }
      }
    }
  }

  // (p x)^{-1} = x^{-1} p^{-1}; parents precede children.
  const std::size_t n = store->size();
  std::vector<Index> inverse(n, 0);
  for (Index i = 1; i < n; ++i) {
    const Matrix pinv = store->decode(inverse[parent[i]]);
    const Matrix m = multiply(r, gens[gen_inverse[parent_gen[i]]], pinv);
    inverse[i] = *store->find(encode(m));
  }

  std::vector<Index> gen_index(k);
  for (std::size_t x = 0; x < k; ++x) gen_index[x] = right[x];
  FiniteGroup fg(0, std::move(gen_index), std::move(gen_inverse), std::move(right),
                 std::move(inverse));
  return MatrixGroup(group, ring, std::move(store), std::move(fg));
}

// ---------------------------------------------------------------------------
// SL2

bool is_upper_unitriangular(const GroupElem& m) {
  const auto& a = m.matrix();
  const Elem one = m.ring()->one();
  return a.dim == 2 && a.at(0, 0) == one && a.at(1, 1) == one && a.at(1, 0) == 0;
}

bool is_lower_unitriangular(const GroupElem& m) {
  const auto& a = m.matrix();
  const Elem one = m.ring()->one();
  return a.dim == 2 && a.at(0, 0) == one && a.at(1, 1) == one && a.at(0, 1) == 0;
}

std::vector<GroupElem> sl2_unitriangular_decompose(const GroupElem& m) {
  if (m.group().kind != GroupId::Kind::SL || m.group().n != 2) {
    throw Error(Errc::unsupported_group, "decomposition is for SL2 only");
  }
  const RingHandle& ring = m.ring();
  const Ring& r = *ring;
  // (upper?, parameter)
  std::vector<std::pair<bool, Elem>> factors;
  auto three = [&](const Matrix& a) {
    const Elem cinv = *r.try_invert(a.at(1, 0));
    factors.push_back({true, r.mul(r.sub(a.at(0, 0), r.one()), cinv)});
    factors.push_back({false, a.at(1, 0)});
    factors.push_back({true, r.mul(r.sub(a.at(1, 1), r.one()), cinv)});
  };
  const Matrix& a = m.matrix();
  if (r.is_unit(a.at(1, 0))) {
    three(a);
  } else {
    // Stable range 1: c + y a is a unit for some y, since (a, c) is unimodular.
    std::optional<Elem> found;
    for (Elem y = 0; y < r.size() && !found; ++y) {
      if (r.is_unit(r.add(a.at(1, 0), r.mul(y, a.at(0, 0))))) found = y;
    }
    if (!found) throw Error(Errc::invalid_spec, "first column is not unimodular");
    Matrix l = identity_matrix(r, 2);
    l.at(1, 0) = *found;
    factors.push_back({false, r.neg(*found)});
    three(multiply(r, l, a));
  }

  std::vector<std::pair<bool, Elem>> merged;
  for (auto f : factors) {
    if (f.second == 0) continue;
    if (!merged.empty() && merged.back().first == f.first) {
      merged.back().second = r.add(merged.back().second, f.second);
      if (merged.back().second == 0) merged.pop_back();
    } else {
      merged.push_back(f);
    }
  }
  std::vector<GroupElem> out;
  for (auto [upper, t] : merged) {
    Matrix u = identity_matrix(r, 2);
    (upper ? u.at(0, 1) : u.at(1, 0)) = t;
    out.emplace_back(m.group(), ring, std::move(u));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commutator relations

SignTable::SignTable(GroupId group, std::vector<SignEntry> entries)
    : group_(group), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_[{entries_[i].alpha, entries_[i].beta}] = i;
  }
}

const SignEntry* SignTable::find(const Root& alpha, const Root& beta) const {
  auto it = index_.find({alpha, beta});
  return it == index_.end() ? nullptr : &entries_[it->second];
}

nlohmann::json SignTable::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t k = 0; k < e.terms.size(); ++k) {
      terms.push_back({{"i", e.terms[k].i},
                       {"j", e.terms[k].j},
                       {"root", chev::to_string(e.terms[k].root)},
                       {"coeff", e.coeff[k]},
                       {"sign", e.sign[k]}});
    }
    list.push_back({{"alpha", chev::to_string(e.alpha)},
                    {"beta", chev::to_string(e.beta)},
                    {"terms", terms}});
  }
  return {{"version", kVersion}, {"group", chev::to_string(group_)}, {"entries", list}};
}

SignTable SignTable::from_json(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != kVersion) {
      throw Error(Errc::cache_mismatch, "sign table version " + j.at("version").dump());
    }
    const GroupId group = parse_group_id(j.at("group").get<std::string>());
    const auto sys = group.root_system();
    std::vector<SignEntry> entries;
    for (const auto& e : j.at("entries")) {
      SignEntry entry{parse_root(sys, e.at("alpha").get<std::string>()),
                      parse_root(sys, e.at("beta").get<std::string>()),
                      {},
                      {},
                      {}};
      for (const auto& t : e.at("terms")) {
        entry.terms.push_back({t.at("i").get<int>(), t.at("j").get<int>(),
                               parse_root(sys, t.at("root").get<std::string>())});
        entry.coeff.push_back(t.at("coeff").get<int>());
        entry.sign.push_back(t.at("sign").get<int>());
      }
      entries.push_back(std::move(entry));
    }
    return SignTable(group, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

int structure_coefficient(const Root& alpha, const Root& beta, int i, int j) {
  if (i != 1 || j != 1) return 1;
  // N_{alpha,beta} = +-(p+1) with p maximal such that beta - p alpha is a root.
  int p = 0;
  for (;;) {
    std::array<int, kMaxRank> c{};
    for (int k = 0; k < kMaxRank; ++k) c[k] = beta.coef[k] - (p + 1) * alpha.coef[k];
    if (!is_root(alpha.sys, c)) break;
    ++p;
  }
  return p + 1;
}

namespace {

Matrix commutator_lhs(const GroupId& group, const Ring& r, const Root& alpha, const Root& beta,
                      Elem a, Elem b) {
  const Matrix x = root_raw(group, r, beta, b);
  const Matrix y = root_raw(group, r, alpha, a);
  const Matrix xi = root_raw(group, r, beta, r.neg(b));
  const Matrix yi = root_raw(group, r, alpha, r.neg(a));
  return multiply(r, multiply(r, multiply(r, x, y), xi), yi);
}

Matrix commutator_rhs(const GroupId& group, const Ring& r, const std::vector<SupportTerm>& terms,
                      const std::vector<int>& coeff, const std::vector<int>& sign, Elem a,
                      Elem b) {
  Matrix m = identity_matrix(r, group.dim());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    Elem arg = r.mul(r.pow(a, terms[k].i), r.pow(b, terms[k].j));
    arg = r.mul(arg, r.from_int(static_cast<long long>(sign[k]) * coeff[k]));
    m = multiply(r, m, root_raw(group, r, terms[k].root, arg));
  }
  return m;
}

}  // namespace

SignTable resolve_signs(const GroupId& group, const RingHandle& probe) {
  const RingHandle ring = probe ? probe : make_ring(RingSpec::zmod(101));
  const Ring& r = *ring;
  const auto roots = all_roots(group.root_system());
  const Matrix id = identity_matrix(r, group.dim());
  std::vector<SignEntry> entries;
  for (const Root& alpha : roots) {
    for (const Root& beta : roots) {
      if (alpha == -beta || alpha == beta) continue;
      auto terms = commutator_support(alpha, beta);
      const std::string pair_name = to_string(alpha) + ", " + to_string(beta);
      if (terms.empty()) {
        for (Elem a = 0; a < r.size(); ++a) {
          for (Elem b = 0; b < r.size(); ++b) {
            if (!(commutator_lhs(group, r, alpha, beta, a, b) == id)) {
              throw Error(Errc::no_consistent_signs, "(" + pair_name + ") should commute");
            }
          }
        }
        continue;
      }
      std::vector<int> coeff;
      for (const auto& t : terms) coeff.push_back(structure_coefficient(alpha, beta, t.i, t.j));
      std::vector<std::vector<int>> candidates;
      for (unsigned mask = 0; mask < (1u << terms.size()); ++mask) {
        std::vector<int> s;
        for (std::size_t k = 0; k < terms.size(); ++k) s.push_back(mask >> k & 1 ? -1 : 1);
        candidates.push_back(std::move(s));
      }
      for (Elem a = 0; a < r.size() && !candidates.empty(); ++a) {
        for (Elem b = 0; b < r.size() && !candidates.empty(); ++b) {
          const Matrix lhs = commutator_lhs(group, r, alpha, beta, a, b);
          std::erase_if(candidates, [&](const std::vector<int>& s) {
            return !(commutator_rhs(group, r, terms, coeff, s, a, b) == lhs);
          });
        }
      }
      if (candidates.size() != 1) {
        throw Error(Errc::no_consistent_signs,
                    std::to_string(candidates.size()) + " sign choices fit (" + pair_name + ")");
      }
      entries.push_back({alpha, beta, std::move(terms), std::move(coeff), candidates.front()});
    }
  }
  return SignTable(group, std::move(entries));
}

bool check_commutator_identity(const GroupId& group, const RingHandle& ring, const Root& alpha,
                               const Root& beta, Elem a, Elem b, const SignTable& table) {
  const Ring& r = *ring;
  const Matrix lhs = commutator_lhs(group, r, alpha, beta, a, b);
  const SignEntry* e = table.find(alpha, beta);
  if (!e) return lhs == identity_matrix(r, group.dim());
  return lhs == commutator_rhs(group, r, e->terms, e->coeff, e->sign, a, b);
}

std::optional<int> weyl_conjugation_sign(const GroupId& group, const RingHandle& ring,
                                         const Root& phi, const Root& psi) {
  const GroupElem w = weyl_matrix(group, ring, phi, ring->one());
  const GroupElem conj = w * root_matrix(group, ring, psi, ring->one()) * w.inverse();
  const Root image = reflect(psi, phi);
  if (conj == root_matrix(group, ring, image, ring->one())) return 1;
  if (conj == root_matrix(group, ring, image, ring->neg(ring->one()))) return -1;
  return std::nullopt;
}

bool check_weyl_conjugation(const GroupId& group, const RingHandle& ring, const Root& phi,
                            const Root& psi, Elem x) {
  const auto s = weyl_conjugation_sign(group, ring, phi, psi);
  if (!s) return false;
  const GroupElem w = weyl_matrix(group, ring, phi, ring->one());
  const GroupElem conj = w * root_matrix(group, ring, psi, x) * w.inverse();
  const Elem arg = *s > 0 ? x : ring->neg(x);
  return conj == root_matrix(group, ring, reflect(psi, phi), arg);
}

}  // namespace chev
