#pragma once

// Generating sets with large norm, and the F2-quotients that obstruct
// normal generation of Sp4 over rings with residue field F2.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "json.hpp"

#include "chev/chevalley.hpp"
#include "chev/levels.hpp"
#include "chev/norms.hpp"
#include "chev/ring.hpp"

namespace chev {

/// How (2) decomposes in Z[w] for Q(sqrt D), read off Quad(D)/2.
struct SplitData {
  long long D = 0;
  SplitKind kind = SplitKind::split;
  int r = 0;
  /// Residue degree f of each local factor of Quad(D)/2 (residue field F_{2^f}).
  std::vector<int> residue_degrees;

  nlohmann::json to_json() const;
};

SplitData split_data(long long D);

struct LowerBoundSet {
  std::vector<GroupElem> generators;
  int claimed_bound = 0;
  std::vector<Ideal> primes;

  nlohmann::json to_json() const;
};

/// S = { e_phi(r_i) } with r_i the product of all t_j, j != i.  Each t_j must
/// generate a maximal ideal and the t_j must be pairwise coprime, otherwise
/// Error(not_coprime).
LowerBoundSet lower_bound_set_higher_rank(const GroupId& group, const RingHandle& ring,
                                          const Root& phi, std::span<const Elem> t);

/// Sp4 construction from generators x_1..x_r of the degree-one primes over 2
/// and further prime generators v_{r+1}..v_k:
///   r_u = (prod_{i != u} x_i) v_{r+1}...v_k          for u <= r
///   r_u = x_1...x_r (prod_{r < q != u} v_q)           for u > r
/// Throws Error(k_too_small) when k < r.
LowerBoundSet lower_bound_set_rank2(const RingHandle& ring, std::span<const Elem> x,
                                    std::span<const Elem> v, int k);

/// The epimorphism Sp4(F2) -> F2 with kernel the commutator subgroup.
class SignEpimorphism {
 public:
  /// Throws Error(wrong_group) unless mg is Sp4 over a field with two
  /// elements.
  explicit SignEpimorphism(const MatrixGroup& mg);

  int operator()(Index x) const { return kernel_[x] ? 0 : 1; }
  std::uint32_t kernel_size() const noexcept { return kernel_size_; }

 private:
  std::vector<std::uint8_t> kernel_;
  std::uint32_t kernel_size_ = 0;
};

/// Sign of an Sp4 element over any two-element field, through a shared
/// enumeration of Sp4(Z/2).  Throws Error(wrong_group).
int sp4_sign_epimorphism(const GroupElem& g);
/// Same, for an element of an enumerated Sp4(F2).
int sp4_sign_epimorphism(const MatrixGroup& mg, Index x);

/// Sp4(R) -> F2^r, one sign per local factor of R with residue field F2.
class F2rEpimorphism {
 public:
  /// Throws Error(no_f2_factors) when no local factor has residue field F2.
  explicit F2rEpimorphism(const RingHandle& ring);

  int r() const noexcept { return static_cast<int>(maps_.size()); }
  std::vector<int> operator()(const GroupElem& g) const;

 private:
  struct FactorMaps {
    RingMap to_local;
    RingMap to_residue;
  };
  RingHandle ring_;
  std::vector<FactorMaps> maps_;
};

std::vector<int> f2r_epimorphism(const GroupElem& g);

/// dim over F2 of G/[G,G].  Throws Error(not_two_torsion) if the quotient is
/// not elementary abelian of exponent 2.
int abelianization_dim(const FiniteGroup& g);

/// Does e_a(x) normally generate Sp4(R)?  Requires at most one local factor
/// with residue field F2 (else Error(hypothesis_violated)) and x a unit
/// (else Error(not_unit)).
bool check_unit_normal_generation(const RingHandle& ring, Elem x);
bool check_unit_normal_generation(const MatrixGroup& mg, Elem x);

/// Membership flags of N, the normal closure of { e_phi(2a) }.
std::vector<std::uint8_t> congruence_subgroup(const MatrixGroup& mg);

struct GenerationVerdict {
  bool pi_empty = false;
  bool quotient_generates = false;
  bool actually_generates = false;

  /// actually_generates == (pi_empty && quotient_generates)
  bool consistent() const { return actually_generates == (pi_empty && quotient_generates); }
  nlohmann::json to_json() const;
};

/// Precomputes N and G/N for repeated checks over one group.
class GenerationChecker {
 public:
  explicit GenerationChecker(const MatrixGroup& mg);

  GenerationVerdict check(std::span<const Index> s) const;
  std::uint32_t quotient_order() const noexcept { return quotient_->order(); }
  std::uint32_t congruence_order() const noexcept { return n_order_; }

 private:
  const MatrixGroup* mg_;
  Quotient q_;
  std::unique_ptr<FiniteGroup> quotient_;
  std::uint32_t n_order_ = 0;
};

GenerationVerdict generation_criteria_check(const MatrixGroup& mg, std::span<const Index> s);

/// Seeded random sets of 1..max_size elements.  Each element is drawn from
/// the whole group or from the congruence subgroup N with equal odds, so
/// that sets with nonempty Pi show up often.
std::vector<std::vector<Index>> sample_small_sets(const MatrixGroup& mg,
                                                  const std::vector<std::uint8_t>& n_members,
                                                  int count, int max_size, std::uint64_t seed);

}  // namespace chev
