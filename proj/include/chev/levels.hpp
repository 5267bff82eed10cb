#pragma once

// Level ideals and the obstruction set Pi(S).
//
// l(A) is generated by the off-diagonal entries of A and the differences of
// its diagonal entries.  A is central modulo an ideal J exactly when
// l(A) is contained in J, so Pi(S), the set of maximal ideals containing
// every l(A), lists the residue fields in which S becomes central.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

#include "chev/chevalley.hpp"
#include "chev/ring.hpp"

namespace chev {

/// Generators of l(A): a_ij for i != j and a_ii - a_nn.
std::vector<Elem> level_generators(const GroupElem& a);

Ideal level_ideal(const GroupElem& a);

/// The ideal generated by e-th powers of the level generators.  Only e = 2
/// for Sp4 is available; anything else throws Error(unsupported_group).
Ideal level_ideal_power(const GroupElem& a, int e);

/// Is l(A) contained in the ideal?
bool level_contained_in(const GroupElem& a, const Ideal& ideal);

/// Maximal ideals containing l(A) for every A in S.  Throws
/// Error(invalid_spec) for an empty S or if the rings differ.
std::vector<Ideal> pi_set(std::span<const GroupElem> s);

/// Is the sum of the l(A) the whole ring?
bool levels_sum_is_full(std::span<const GroupElem> s);

struct LevelCertificate {
  int bound = 0;
  std::vector<Ideal> primes;
  /// For each element of S, the index of the one prime whose Pi-set it
  /// misses, if any.
  std::vector<std::optional<std::size_t>> missed;

  nlohmann::json to_json() const;
};

/// Checks that target lies in none of the primes while each element of S
/// lies in all but at most one.  Then a product of fewer than |primes|
/// conjugates of S leaves some prime in every Pi-set, so the norm of target
/// is at least |primes|.  Returns bound 0 when the hypotheses fail.
LevelCertificate pi_lower_bound_certificate(std::span<const GroupElem> s, const GroupElem& target,
                                            const std::vector<Ideal>& primes);

}  // namespace chev
