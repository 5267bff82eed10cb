#pragma once

// Finite commutative rings with 1.
//
// Every ring element is addressed by a canonical index in [0, size()).  The
// zero element is always index 0.  Residue rings Z/n use the residue itself,
// quadratic quotients Quad(D)/m use a + m*b for a + b*w, products use a
// mixed-radix tuple encoding with the first factor varying fastest.  Rings
// built by quotient or idempotent splitting are stored as explicit tables.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chev/error.hpp"

namespace chev {

using Elem = std::uint32_t;

struct RingSpec {
  struct ZMod {
    long long n;
  };
  struct QuadQuot {
    long long D;
    long long m;
  };
  struct Product {
    std::vector<RingSpec> factors;
  };

  std::variant<ZMod, QuadQuot, Product> variant;

  static RingSpec zmod(long long n) { return {ZMod{n}}; }
  static RingSpec quad(long long D, long long m) { return {QuadQuot{D, m}}; }
  static RingSpec product(std::vector<RingSpec> factors) { return {Product{std::move(factors)}}; }
};

/// Parses "Z/6", "Quad(-7)/2" and products such as "Z/2xZ/3".
RingSpec parse_ring_spec(std::string_view text);
std::string to_string(const RingSpec& spec);

bool is_square_free(long long d);

class Ring;
using RingHandle = std::shared_ptr<const Ring>;

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  enum class Kind { zmod, quad, product, table };

  std::uint32_t size() const noexcept { return size_; }
  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const std::optional<RingSpec>& spec() const noexcept { return spec_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;

  /// Image of an integer under Z -> R.
  Elem from_int(long long k) const;

  std::optional<Elem> try_invert(Elem a) const;
  bool is_unit(Elem a) const { return try_invert(a).has_value(); }

  /// For Quad(D)/m: the basis element w.  Throws invalid_spec otherwise.
  Elem omega() const;

  std::string format(Elem a) const;
  /// Accepts integers, "w", "2+3w", "-w", tuples "(1,2)" for products and
  /// bracketed names for table rings.
  Elem parse(std::string_view text) const;

  /// Elements 0..size()-1 whose additive span is the whole ring; chosen
  /// greedily in index order.
  std::vector<Elem> additive_generators() const;

  // Construction.  Use make_ring() / make_table_ring() instead.
  struct Tables {
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> neg;
  };
  static RingHandle make_table(std::string name, std::uint32_t size, Elem one, Tables tables,
                               std::vector<std::string> element_names);

 private:
  friend RingHandle make_ring(const RingSpec& spec);
  Ring() = default;
  void build_tables();
  Elem add_direct(Elem a, Elem b) const;
  Elem mul_direct(Elem a, Elem b) const;
  Elem neg_direct(Elem a) const;
  std::optional<Elem> invert_direct(Elem a) const;

  Kind kind_ = Kind::zmod;
  std::uint32_t size_ = 0;
  Elem one_ = 1;
  std::string name_;
  std::optional<RingSpec> spec_;

  // zmod: modulus_.  quad: modulus_ and w^2 = wp_ + wq_*w (mod modulus_).
  long long modulus_ = 0;
  long long disc_ = 0;
  long long wp_ = 0;
  long long wq_ = 0;

  // product
  std::vector<RingHandle> factors_;
  std::vector<std::uint32_t> radix_;

  // Cached operation tables; always present for table rings.
  bool tabulated_ = false;
  Tables tables_;
  std::vector<std::int64_t> inverse_;  // -1 for non-units, filled when tabulated
  std::vector<std::string> names_;     // table rings only
};

/// Throws Error(invalid_spec) on n < 2, non-square-free D, D in {0,1},
/// m < 1 or an empty product.
RingHandle make_ring(const RingSpec& spec);
RingHandle make_ring(std::string_view text);

/// Value-semantic ring element.
class RingElem {
 public:
  RingElem() = default;
  RingElem(RingHandle ring, Elem v) : ring_(std::move(ring)), v_(v) {}

  const RingHandle& ring() const noexcept { return ring_; }
  Elem value() const noexcept { return v_; }

  friend RingElem operator+(const RingElem& a, const RingElem& b) {
    return {a.ring_, a.ring_->add(a.v_, b.v_)};
  }
  friend RingElem operator-(const RingElem& a, const RingElem& b) {
    return {a.ring_, a.ring_->sub(a.v_, b.v_)};
  }
  friend RingElem operator*(const RingElem& a, const RingElem& b) {
    return {a.ring_, a.ring_->mul(a.v_, b.v_)};
  }
  RingElem operator-() const { return {ring_, ring_->neg(v_)}; }
  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.ring_.get() == b.ring_.get() && a.v_ == b.v_;
  }

  std::string to_string() const { return ring_->format(v_); }

 private:
  RingHandle ring_;
  Elem v_ = 0;
};

/// Throws Error(not_unit) when x has no inverse.
RingElem invert(const RingElem& x);
std::optional<RingElem> try_invert(const RingElem& x);

class Ideal {
 public:
  Ideal(RingHandle ring, std::vector<Elem> generators);

  const RingHandle& ring() const noexcept { return ring_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  /// Sorted ascending.
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  bool contains(Elem x) const { return member_[x] != 0; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_full() const noexcept { return elements_.size() == ring_->size(); }
  bool subset_of(const Ideal& other) const;

  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_.get() == b.ring_.get() && a.elements_ == b.elements_;
  }

 private:
  RingHandle ring_;
  std::vector<Elem> generators_;
  std::vector<Elem> elements_;
  std::vector<std::uint8_t> member_;
};

Ideal ideal_from_generators(const RingHandle& ring, std::vector<Elem> gens);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
inline bool ideal_is_full(const Ideal& ideal) { return ideal.is_full(); }

/// x^k in I for some 1 <= k <= |R|.
bool radical_contains(const Ideal& ideal, Elem x);

/// A ring homomorphism given by its value table.
struct RingMap {
  RingHandle domain;
  RingHandle codomain;
  std::vector<Elem> image;

  Elem operator()(Elem x) const { return image[x]; }
};

/// R -> R/I with the quotient as a table ring.
RingMap quotient_map(const Ideal& ideal);

struct LocalFactor {
  RingHandle ring;      // e*R with identity e
  RingMap projection;   // x -> e*x
  Elem idempotent;      // e, as an element of the source ring
  std::uint32_t residue_size;
};

/// Splits R into local rings via its primitive idempotents, ordered by the
/// index of the idempotent.
std::vector<LocalFactor> local_factors(const RingHandle& ring);

/// One maximal ideal per local factor, in the same order.
std::vector<Ideal> maximal_ideals(const RingHandle& ring);

/// Projection of a local ring onto its residue field.
RingMap residue_field_map(const RingHandle& local_ring);

enum class SplitKind { split, ramified, inert };
const char* split_kind_name(SplitKind kind) noexcept;

struct SplitResult {
  SplitKind kind;
  int r;
};

/// Decomposition type of (2) in the ring of integers of Q(sqrt D).
SplitResult split_two_quadratic(long long D);

}  // namespace chev
