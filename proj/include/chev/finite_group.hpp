#pragma once

// Finite groups given by a right-multiplication table over an
// inverse-closed generating set.
//
// Elements are indices 0..order()-1.  Arbitrary products are evaluated by
// walking the word of one factor through the table; words come from the
// breadth-first spanning tree rooted at the identity, so their length is the
// word length with respect to the generators.

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "chev/error.hpp"

namespace chev {

using Index = std::uint32_t;
using Gen = std::uint16_t;

struct ConjugacyClasses {
  std::vector<std::uint32_t> class_of;
  std::vector<std::vector<Index>> members;  // each ascending
  std::vector<Index> reps;                  // a shortest-word member of each class

  std::size_t count() const noexcept { return members.size(); }
};

class FiniteGroup {
 public:
  /// right[g * gens.size() + x] = g * gens[x].  gen_inverse[x] is the
  /// generator index of gens[x]^{-1}.  inverse[g] = g^{-1}.
  FiniteGroup(Index identity, std::vector<Index> gens, std::vector<Gen> gen_inverse,
              std::vector<Index> right, std::vector<Index> inverse);

  /// table[a][b] = a*b.  Every element becomes a generator.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<Index>>& table);

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(inverse_.size()); }
  Index identity() const noexcept { return identity_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }
  const std::vector<Index>& generators() const noexcept { return gens_; }
  Gen generator_inverse(Gen x) const { return gen_inverse_[x]; }

  Index right(Index g, Gen x) const { return right_[std::size_t(g) * gens_.size() + x]; }
  /// gens[x] * g
  Index left(Gen x, Index g) const { return inverse_[right(inverse_[g], gen_inverse_[x])]; }
  Index inverse(Index g) const { return inverse_[g]; }
  Index multiply(Index a, Index b) const;
  /// x g x^{-1} for the generator x.
  Index conjugate_by_generator(Index g, Gen x) const { return right(left(x, g), gen_inverse_[x]); }
  /// h g h^{-1}
  Index conjugate(Index g, Index h) const { return multiply(multiply(h, g), inverse_[h]); }
  /// a b a^{-1} b^{-1}
  Index commutator(Index a, Index b) const {
    return multiply(multiply(a, b), multiply(inverse_[a], inverse_[b]));
  }

  /// Generators x_1..x_L with g = x_1 * ... * x_L.
  std::vector<Gen> word(Index g) const;
  std::uint32_t depth(Index g) const { return depth_[g]; }
  Index walk(Index g, std::span<const Gen> word) const {
    for (Gen x : word) g = right(g, x);
    return g;
  }

  /// Computed once on first use.
  const ConjugacyClasses& classes() const;

 private:
  Index identity_;
  std::vector<Index> gens_;
  std::vector<Gen> gen_inverse_;
  std::vector<Index> right_;
  std::vector<Index> inverse_;
  std::vector<Index> parent_;
  std::vector<Gen> parent_gen_;
  std::vector<std::uint32_t> depth_;

  struct ClassCache {
    std::once_flag once;
    std::unique_ptr<ConjugacyClasses> value;
  };
  std::shared_ptr<ClassCache> class_cache_ = std::make_shared<ClassCache>();
};

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Index of (a, b) in direct_product(g, h).
inline Index product_index(const FiniteGroup& h, Index a, Index b) { return a * h.order() + b; }

/// Classes of S and S^{-1} as class ids, ascending and distinct.
std::vector<std::uint32_t> closure_classes(const FiniteGroup& g, std::span<const Index> s);

/// Breadth-first search on conjugacy classes: distance from the identity
/// class when multiplying by elements of the given classes.  Unreached
/// classes get -1.
std::vector<std::int32_t> class_distances(const FiniteGroup& g,
                                          std::span<const std::uint32_t> step_classes,
                                          std::int32_t max_depth = -1);

/// Membership flags of the normal closure of S.
std::vector<std::uint8_t> normal_closure_members(const FiniteGroup& g, std::span<const Index> s);
/// Size of the normal closure of S.
std::uint32_t normal_closure_order(const FiniteGroup& g, std::span<const Index> s);

/// The subgroup generated by the commutators of generator pairs, closed
/// under conjugation.
std::vector<std::uint8_t> commutator_subgroup(const FiniteGroup& g);

/// Quotient of g by a normal subgroup.
struct Quotient {
  std::vector<std::uint32_t> label;             // element -> coset
  std::vector<Index> reps;                      // coset -> representative
  std::vector<std::vector<std::uint32_t>> table;  // coset product table
  std::uint32_t identity = 0;
};
Quotient quotient_by_normal(const FiniteGroup& g, const std::vector<std::uint8_t>& normal);

/// Does the image of S generate the quotient group?
bool generates_quotient(const Quotient& q, std::span<const Index> s);

}  // namespace chev
