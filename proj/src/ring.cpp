#include "chev/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace chev {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::parse_error: return "ParseError";
    case Errc::not_unit: return "NotUnit";
    case Errc::invalid_root: return "InvalidRoot";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::no_consistent_signs: return "NoConsistentSigns";
    case Errc::unsupported_group: return "UnsupportedGroup";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::k_too_small: return "KTooSmall";
    case Errc::wrong_group: return "WrongGroup";
    case Errc::no_f2_factors: return "NoF2Factors";
    case Errc::not_two_torsion: return "NotTwoTorsion";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::cache_mismatch: return "CacheMismatch";
  }
  return "Unknown";
}

namespace {

constexpr std::uint32_t kTabulateLimit = 1024;

long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long parse_integer(std::string_view s) {
  s = trim(s);
  long long value = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(Errc::parse_error, "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

// Splits at top-level separators, ignoring separators nested in parentheses.
std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::uint32_t checked_size(long long n) {
  if (n <= 0 || n > (1LL << 30)) throw Error(Errc::invalid_spec, "ring too large");
  return static_cast<std::uint32_t>(n);
}

}  // namespace

bool is_square_free(long long d) {
  if (d == 0) return false;
  long long a = d < 0 ? -d : d;
  for (long long p = 2; p * p <= a; ++p) {
    if (a % (p * p) == 0) return false;
  }
  return true;
}

RingSpec parse_ring_spec(std::string_view text) {
  text = trim(text);
  auto parts = split_top_level(text, 'x');
  if (parts.size() > 1) {
    std::vector<RingSpec> factors;
    for (auto part : parts) factors.push_back(parse_ring_spec(part));
    return RingSpec::product(std::move(factors));
  }
  if (text.size() > 2 && text.substr(0, 2) == "Z/") {
    return RingSpec::zmod(parse_integer(text.substr(2)));
  }
  if (text.size() > 5 && text.substr(0, 5) == "Quad(") {
    auto close = text.find(')');
    if (close == std::string_view::npos || close + 2 > text.size() || text[close + 1] != '/') {
      throw Error(Errc::parse_error, "malformed quadratic ring spec '" + std::string(text) + "'");
    }
    return RingSpec::quad(parse_integer(text.substr(5, close - 5)),
                          parse_integer(text.substr(close + 2)));
  }
  throw Error(Errc::parse_error, "unknown ring spec '" + std::string(text) + "'");
}

std::string to_string(const RingSpec& spec) {
  if (auto* z = std::get_if<RingSpec::ZMod>(&spec.variant)) return "Z/" + std::to_string(z->n);
  if (auto* q = std::get_if<RingSpec::QuadQuot>(&spec.variant)) {
    return "Quad(" + std::to_string(q->D) + ")/" + std::to_string(q->m);
  }
  const auto& p = std::get<RingSpec::Product>(spec.variant);
  std::string out;
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    if (i) out += "x";
    out += to_string(p.factors[i]);
  }
  return out;
}

RingHandle make_ring(const RingSpec& spec) {
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->spec_ = spec;
  ring->name_ = to_string(spec);
  if (auto* z = std::get_if<RingSpec::ZMod>(&spec.variant)) {
    if (z->n < 2) throw Error(Errc::invalid_spec, "Z/n requires n >= 2");
    ring->kind_ = Ring::Kind::zmod;
    ring->modulus_ = z->n;
    ring->size_ = checked_size(z->n);
    ring->one_ = 1;
  } else if (auto* q = std::get_if<RingSpec::QuadQuot>(&spec.variant)) {
    if (q->D == 0 || q->D == 1 || !is_square_free(q->D)) {
      throw Error(Errc::invalid_spec, "D must be square-free and not 0 or 1");
    }
    if (q->m < 1) throw Error(Errc::invalid_spec, "modulus must be positive");
    if (q->m < 2) throw Error(Errc::invalid_spec, "Quad(D)/1 is the zero ring");
    ring->kind_ = Ring::Kind::quad;
    ring->modulus_ = q->m;
    ring->disc_ = q->D;
    if (mod(q->D, 4) == 1) {
      ring->wp_ = mod((q->D - 1) / 4, q->m);
      ring->wq_ = 1 % q->m;
    } else {
      ring->wp_ = mod(q->D, q->m);
      ring->wq_ = 0;
    }
    ring->size_ = checked_size(q->m * q->m);
    ring->one_ = 1;
  } else {
    const auto& p = std::get<RingSpec::Product>(spec.variant);
    if (p.factors.empty()) throw Error(Errc::invalid_spec, "empty product");
    ring->kind_ = Ring::Kind::product;
    long long total = 1;
    long long one = 0;
    for (const auto& f : p.factors) {
      auto factor = make_ring(f);
      one += total * factor->one();
      total *= factor->size();
      checked_size(total);
      ring->radix_.push_back(factor->size());
      ring->factors_.push_back(std::move(factor));
    }
    ring->size_ = checked_size(total);
    ring->one_ = static_cast<Elem>(one);
  }
  if (ring->size_ <= kTabulateLimit) ring->build_tables();
  return ring;
}

RingHandle make_ring(std::string_view text) { return make_ring(parse_ring_spec(text)); }

RingHandle Ring::make_table(std::string name, std::uint32_t size, Elem one, Tables tables,
                            std::vector<std::string> element_names) {
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->kind_ = Kind::table;
  ring->name_ = std::move(name);
  ring->size_ = size;
  ring->one_ = one;
  ring->tables_ = std::move(tables);
  ring->tabulated_ = true;
  ring->names_ = std::move(element_names);
  ring->inverse_.assign(size, -1);
  for (Elem a = 0; a < size; ++a) {
    for (Elem b = 0; b < size; ++b) {
      if (ring->tables_.mul[std::size_t(a) * size + b] == one) {
        ring->inverse_[a] = b;
        break;
      }
    }
  }
  return ring;
}

void Ring::build_tables() {
  const std::size_t n = size_;
  tables_.add.resize(n * n);
  tables_.mul.resize(n * n);
  tables_.neg.resize(n);
  for (Elem a = 0; a < n; ++a) {
    tables_.neg[a] = neg_direct(a);
    for (Elem b = 0; b < n; ++b) {
      tables_.add[a * n + b] = add_direct(a, b);
      tables_.mul[a * n + b] = mul_direct(a, b);
    }
  }
  inverse_.assign(n, -1);
  for (Elem a = 0; a < n; ++a) {
    if (auto inv = invert_direct(a)) inverse_[a] = *inv;
  }
  tabulated_ = true;
}

Elem Ring::add(Elem a, Elem b) const {
  if (tabulated_) return tables_.add[std::size_t(a) * size_ + b];
  return add_direct(a, b);
}

Elem Ring::mul(Elem a, Elem b) const {
  if (tabulated_) return tables_.mul[std::size_t(a) * size_ + b];
  return mul_direct(a, b);
}

Elem Ring::neg(Elem a) const {
  if (tabulated_) return tables_.neg[a];
  return neg_direct(a);
}

Elem Ring::pow(Elem a, std::uint64_t e) const {
  Elem result = one_;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem Ring::add_direct(Elem a, Elem b) const {
  switch (kind_) {
    case Kind::zmod: return static_cast<Elem>((a + static_cast<long long>(b)) % modulus_);
    case Kind::quad: {
      const long long m = modulus_;
      long long a0 = a % m, a1 = a / m, b0 = b % m, b1 = b / m;
      return static_cast<Elem>((a0 + b0) % m + m * ((a1 + b1) % m));
    }
    case Kind::product: {
      Elem out = 0, scale = 1;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Elem r = radix_[i];
        out += scale * factors_[i]->add(a % r, b % r);
        a /= r;
        b /= r;
        scale *= r;
      }
      return out;
    }
    case Kind::table: break;
  }
  return tables_.add[std::size_t(a) * size_ + b];
}

Elem Ring::neg_direct(Elem a) const {
  switch (kind_) {
    case Kind::zmod: return static_cast<Elem>((modulus_ - a) % modulus_);
    case Kind::quad: {
      const long long m = modulus_;
      return static_cast<Elem>((m - a % m) % m + m * ((m - a / m) % m));
    }
    case Kind::product: {
      Elem out = 0, scale = 1;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Elem r = radix_[i];
        out += scale * factors_[i]->neg(a % r);
        a /= r;
        scale *= r;
      }
      return out;
    }
    case Kind::table: break;
  }
  return tables_.neg[a];
}

Elem Ring::mul_direct(Elem a, Elem b) const {
  switch (kind_) {
    case Kind::zmod:
      return static_cast<Elem>((static_cast<unsigned long long>(a) * b) % modulus_);
    case Kind::quad: {
      // (a0 + a1 w)(b0 + b1 w) with w^2 = p + q w.
      const long long m = modulus_;
      long long a0 = a % m, a1 = a / m, b0 = b % m, b1 = b / m;
      long long t = (a1 * b1) % m;
      long long c0 = (a0 * b0 + t * wp_) % m;
      long long c1 = (a0 * b1 + a1 * b0 + t * wq_) % m;
      return static_cast<Elem>(c0 + m * c1);
    }
    case Kind::product: {
      Elem out = 0, scale = 1;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Elem r = radix_[i];
        out += scale * factors_[i]->mul(a % r, b % r);
        a /= r;
        b /= r;
        scale *= r;
      }
      return out;
    }
    case Kind::table: break;
  }
  return tables_.mul[std::size_t(a) * size_ + b];
}

namespace {

std::optional<long long> inverse_mod(long long a, long long n) {
  long long g = n, x = 0, x1 = 1, r = mod(a, n);
  while (r != 0) {
    long long q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) return std::nullopt;
  return mod(x, n);
}

}  // namespace

std::optional<Elem> Ring::invert_direct(Elem a) const {
  switch (kind_) {
    case Kind::zmod: {
      if (modulus_ == 1) return std::nullopt;
      auto inv = inverse_mod(a, modulus_);
      if (!inv) return std::nullopt;
      return static_cast<Elem>(*inv);
    }
    case Kind::quad: {
      // (a0 + a1 w)^{-1} = (a0 + a1 q - a1 w) / N with N = a0^2 + a0 a1 q - a1^2 p.
      const long long m = modulus_;
      long long a0 = a % m, a1 = a / m;
      long long norm = mod(a0 * a0 + mod(a0 * a1, m) * wq_ - mod(a1 * a1, m) * wp_, m);
      auto ninv = inverse_mod(norm, m);
      if (!ninv) return std::nullopt;
      long long c0 = mod((a0 + a1 * wq_) % m * *ninv, m);
      long long c1 = mod(-a1 % m * *ninv, m);
      return static_cast<Elem>(c0 + m * c1);
    }
    case Kind::product: {
      Elem out = 0, scale = 1;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Elem r = radix_[i];
        auto inv = factors_[i]->try_invert(a % r);
        if (!inv) return std::nullopt;
        out += scale * *inv;
        a /= r;
        scale *= r;
      }
      return out;
    }
    case Kind::table: break;
  }
  return std::nullopt;
}

std::optional<Elem> Ring::try_invert(Elem a) const {
  if (tabulated_) {
    if (inverse_[a] < 0) return std::nullopt;
    return static_cast<Elem>(inverse_[a]);
  }
  return invert_direct(a);
}

Elem Ring::from_int(long long k) const {
  switch (kind_) {
    case Kind::zmod:
    case Kind::quad: return static_cast<Elem>(mod(k, modulus_));
    case Kind::product: {
      Elem out = 0, scale = 1;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        out += scale * factors_[i]->from_int(k);
        scale *= radix_[i];
      }
      return out;
    }
    case Kind::table: break;
  }
  Elem base = k < 0 ? neg(one_) : one_;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ULL
                               : static_cast<unsigned long long>(k);
  Elem result = 0;
  while (e) {
    if (e & 1) result = add(result, base);
    base = add(base, base);
    e >>= 1;
  }
  return result;
}

Elem Ring::omega() const {
  if (kind_ != Kind::quad) throw Error(Errc::invalid_spec, name_ + " has no element w");
  return static_cast<Elem>(modulus_);
}

std::string Ring::format(Elem a) const {
  switch (kind_) {
    case Kind::zmod: return std::to_string(a);
    case Kind::quad: {
      const long long m = modulus_;
      long long a0 = a % m, a1 = a / m;
      if (a1 == 0) return std::to_string(a0);
      std::string w = a1 == 1 ? "w" : std::to_string(a1) + "w";
      return a0 == 0 ? w : std::to_string(a0) + "+" + w;
    }
    case Kind::product: {
      std::string out = "(";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ",";
        out += factors_[i]->format(a % radix_[i]);
        a /= radix_[i];
      }
      return out + ")";
    }
    case Kind::table: break;
  }
  return names_[a];
}

Elem Ring::parse(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw Error(Errc::parse_error, "empty ring element");
  switch (kind_) {
    case Kind::zmod: return from_int(parse_integer(text));
    case Kind::quad: {
      // Sum of signed terms, each an integer or [integer][*]w.
      Elem total = 0;
      std::size_t i = 0;
      while (i < text.size()) {
        bool negative = false;
        if (text[i] == '+' || text[i] == '-') {
          negative = text[i] == '-';
          ++i;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != '+' && text[j] != '-') ++j;
        std::string_view term = trim(text.substr(i, j - i));
        if (term.empty()) throw Error(Errc::parse_error, "malformed element '" + std::string(text) + "'");
        Elem value;
        if (term.back() == 'w') {
          term.remove_suffix(1);
          if (!term.empty() && term.back() == '*') term.remove_suffix(1);
          Elem coeff = term.empty() ? one_ : from_int(parse_integer(term));
          value = mul(coeff, omega());
        } else {
          value = from_int(parse_integer(term));
        }
        total = add(total, negative ? neg(value) : value);
        i = j;
      }
      return total;
    }
    case Kind::product: {
      if (text.front() != '(') return from_int(parse_integer(text));
      if (text.back() != ')') throw Error(Errc::parse_error, "unterminated tuple");
      auto parts = split_top_level(text.substr(1, text.size() - 2), ',');
      if (parts.size() != factors_.size()) {
        throw Error(Errc::parse_error, "tuple arity does not match " + name_);
      }
      Elem out = 0, scale = 1;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out += scale * factors_[i]->parse(parts[i]);
        scale *= radix_[i];
      }
      return out;
    }
    case Kind::table: break;
  }
  for (Elem a = 0; a < size_; ++a) {
    if (names_[a] == text || "[" + names_[a] + "]" == text) return a;
  }
  return from_int(parse_integer(text));
}

std::vector<Elem> Ring::additive_generators() const {
  std::vector<Elem> gens;
  std::vector<std::uint8_t> span(size_, 0);
  span[0] = 1;
  std::vector<Elem> members{0};
  for (Elem x = 1; x < size_ && members.size() < size_; ++x) {
    if (span[x]) continue;
    gens.push_back(x);
    // Extend the span by the cyclic group generated by x.
    std::vector<Elem> multiples;
    for (Elem m = x; m != 0; m = add(m, x)) multiples.push_back(m);
    const std::size_t before = members.size();
    for (std::size_t i = 0; i < before; ++i) {
      for (Elem m : multiples) {
        Elem y = add(members[i], m);
        if (!span[y]) {
          span[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

RingElem invert(const RingElem& x) {
  auto inv = x.ring()->try_invert(x.value());
  if (!inv) throw Error(Errc::not_unit, x.to_string() + " is not a unit in " + x.ring()->name());
  return {x.ring(), *inv};
}

std::optional<RingElem> try_invert(const RingElem& x) {
  auto inv = x.ring()->try_invert(x.value());
  if (!inv) return std::nullopt;
  return RingElem{x.ring(), *inv};
}

// ---------------------------------------------------------------------------
// Ideals

Ideal::Ideal(RingHandle ring, std::vector<Elem> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  const std::uint32_t n = ring_->size();
  // R-multiples of the generators span the ideal additively.
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Elem> multiples;
  for (Elem g : generators_) {
    for (Elem r = 0; r < n; ++r) {
      Elem p = ring_->mul(r, g);
      if (p != 0 && !seen[p]) {
        seen[p] = 1;
        multiples.push_back(p);
      }
    }
  }
  member_.assign(n, 0);
  member_[0] = 1;
  elements_.push_back(0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (Elem p : multiples) {
      Elem y = ring_->add(elements_[i], p);
      if (!member_[y]) {
        member_[y] = 1;
        elements_.push_back(y);
      }
    }
  }
  std::sort(elements_.begin(), elements_.end());
}

bool Ideal::subset_of(const Ideal& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Elem x) { return other.contains(x); });
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ",";
    out += ring_->format(generators_[i]);
  }
  return out + ")";
}

Ideal ideal_from_generators(const RingHandle& ring, std::vector<Elem> gens) {
  return Ideal(ring, std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Elem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

bool radical_contains(const Ideal& ideal, Elem x) {
  const auto& ring = *ideal.ring();
  Elem power = x;
  for (std::uint32_t k = 1; k <= ring.size(); ++k) {
    if (ideal.contains(power)) return true;
    power = ring.mul(power, x);
  }
  return false;
}

RingMap quotient_map(const Ideal& ideal) {
  const auto& ring = ideal.ring();
  const std::uint32_t n = ring->size();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> label(n, kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (label[x] != kUnset) continue;
    const Elem l = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem i : ideal.elements()) label[ring->add(x, i)] = l;
  }
  const std::uint32_t q = static_cast<std::uint32_t>(reps.size());
  Ring::Tables t;
  t.add.resize(std::size_t(q) * q);
  t.mul.resize(std::size_t(q) * q);
  t.neg.resize(q);
  std::vector<std::string> names(q);
  for (Elem a = 0; a < q; ++a) {
    t.neg[a] = label[ring->neg(reps[a])];
    names[a] = "[" + ring->format(reps[a]) + "]";
    for (Elem b = 0; b < q; ++b) {
      t.add[a * q + b] = label[ring->add(reps[a], reps[b])];
      t.mul[a * q + b] = label[ring->mul(reps[a], reps[b])];
    }
  }
  auto quotient = Ring::make_table(ring->name() + "/" + ideal.to_string(), q, label[ring->one()],
                                   std::move(t), std::move(names));
  return RingMap{ring, std::move(quotient), std::move(label)};
}

namespace {

std::vector<Elem> primitive_idempotents(const Ring& ring) {
  std::vector<Elem> idempotents;
  for (Elem e = 1; e < ring.size(); ++e) {
    if (ring.mul(e, e) == e) idempotents.push_back(e);
  }
  std::vector<Elem> primitive;
  for (Elem e : idempotents) {
    bool minimal = std::none_of(idempotents.begin(), idempotents.end(), [&](Elem f) {
      return f != e && ring.mul(f, e) == f;
    });
    if (minimal) primitive.push_back(e);
  }
  return primitive;
}

}  // namespace

std::vector<LocalFactor> local_factors(const RingHandle& ring) {
  const std::uint32_t n = ring->size();
  std::vector<LocalFactor> factors;
  for (Elem e : primitive_idempotents(*ring)) {
    // e*R, indexed in ascending order of the source elements.
    std::vector<Elem> members;
    std::vector<std::uint8_t> seen(n, 0);
    for (Elem x = 0; x < n; ++x) {
      Elem y = ring->mul(e, x);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<Elem> index(n, 0);
    for (Elem i = 0; i < members.size(); ++i) index[members[i]] = i;
    const std::uint32_t q = static_cast<std::uint32_t>(members.size());
    Ring::Tables t;
    t.add.resize(std::size_t(q) * q);
    t.mul.resize(std::size_t(q) * q);
    t.neg.resize(q);
    std::vector<std::string> names(q);
    for (Elem a = 0; a < q; ++a) {
      t.neg[a] = index[ring->neg(members[a])];
      names[a] = ring->format(members[a]);
      for (Elem b = 0; b < q; ++b) {
        t.add[a * q + b] = index[ring->add(members[a], members[b])];
        t.mul[a * q + b] = index[ring->mul(members[a], members[b])];
      }
    }
    auto local = Ring::make_table(ring->name() + "[e=" + ring->format(e) + "]", q, index[e],
                                  std::move(t), std::move(names));
    std::uint32_t units = 0;
    for (Elem a = 0; a < q; ++a) units += local->is_unit(a) ? 1 : 0;
    std::vector<Elem> image(n);
    for (Elem x = 0; x < n; ++x) image[x] = index[ring->mul(e, x)];
    LocalFactor f{local, RingMap{ring, local, std::move(image)}, e, q / (q - units)};
    factors.push_back(std::move(f));
  }
  return factors;
}

std::vector<Ideal> maximal_ideals(const RingHandle& ring) {
  std::vector<Ideal> out;
  for (const auto& f : local_factors(ring)) {
    std::vector<Elem> gens;
    for (Elem x = 0; x < ring->size(); ++x) {
      if (!f.ring->is_unit(f.projection(x))) gens.push_back(x);
    }
    out.emplace_back(ring, std::move(gens));
  }
  return out;
}

RingMap residue_field_map(const RingHandle& local_ring) {
  std::vector<Elem> nonunits;
  for (Elem x = 0; x < local_ring->size(); ++x) {
    if (!local_ring->is_unit(x)) nonunits.push_back(x);
  }
  return quotient_map(Ideal(local_ring, std::move(nonunits)));
}

const char* split_kind_name(SplitKind kind) noexcept {
  switch (kind) {
    case SplitKind::split: return "split";
    case SplitKind::ramified: return "ramified";
    case SplitKind::inert: return "inert";
  }
  return "unknown";
}

SplitResult split_two_quadratic(long long D) {
  if (D == 0 || D == 1 || !is_square_free(D)) {
    throw Error(Errc::invalid_spec, "D must be square-free and not 0 or 1");
  }
  switch (mod(D, 8)) {
    case 1: return {SplitKind::split, 2};
    case 5: return {SplitKind::inert, 0};
    default: return {SplitKind::ramified, 1};
  }
}

}  // namespace chev
