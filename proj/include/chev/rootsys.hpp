#pragma once

// Root systems A_n, B2 and G2.
//
// A root is stored by its coefficients in the simple-root basis.  For the
// rank-2 systems the coefficients are (i, j) for i*a + j*b, with a the short
// simple root where lengths differ.  For A_n the root e_p - e_q is the sum of
// the simple roots a_p, ..., a_{q-1} (negated when p > q).

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "chev/error.hpp"

namespace chev {

struct RootSystemId {
  enum class Type { A, B2, G2 };
  Type type = Type::A;
  int rank = 1;

  static RootSystemId A(int n);
  static RootSystemId B2() { return {Type::B2, 2}; }
  static RootSystemId G2() { return {Type::G2, 2}; }

  friend bool operator==(const RootSystemId&, const RootSystemId&) = default;
};

std::string to_string(const RootSystemId& sys);

inline constexpr int kMaxRank = 8;

struct Root {
  RootSystemId sys;
  std::array<int, kMaxRank> coef{};

  int operator[](int i) const { return coef[i]; }
  Root operator-() const;
  int height() const;
  bool is_positive() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend bool operator<(const Root& a, const Root& b) { return a.coef < b.coef; }
};

enum class RootLength { Short, Long };

/// Canonical order: ascending height, ties broken by descending coefficient
/// vector (so a precedes b).
std::vector<Root> positive_roots(const RootSystemId& sys);
/// Positive roots followed by their negatives in the same order.
std::vector<Root> all_roots(const RootSystemId& sys);
std::vector<Root> simple_roots(const RootSystemId& sys);

/// Throws Error(invalid_root) if the coefficients do not describe a root.
Root make_root(const RootSystemId& sys, std::vector<int> coef);
/// Rank-2 shorthand: i*a + j*b.
Root make_root(const RootSystemId& sys, int i, int j);
/// A_n: e_p - e_q, 1-based, p != q.
Root make_root_e(const RootSystemId& sys, int p, int q);
bool is_root(const RootSystemId& sys, const std::array<int, kMaxRank>& coef);

/// For A_n roots: the pair (p, q) with root e_p - e_q (1-based).
std::pair<int, int> e_indices(const Root& root);

/// 2(phi,psi)/(psi,psi).
int pairing(const Root& phi, const Root& psi);
/// phi - <phi,alpha> alpha.
Root reflect(const Root& phi, const Root& alpha);
RootLength root_length(const Root& phi);
/// Squared Euclidean length in the fixed integer model.
int squared_length(const Root& phi);
int inner_product(const Root& phi, const Root& psi);

struct SupportTerm {
  int i;
  int j;
  Root root;  // i*alpha + j*beta
};

/// All (i, j) with i, j >= 1 and i*alpha + j*beta a root, ordered by i+j then
/// i.  Empty iff alpha + beta is not a root.
std::vector<SupportTerm> commutator_support(const Root& alpha, const Root& beta);

/// Rank-2 roots print as "a", "2a+b", "-a-b"; A_n roots as "e1-e3".
std::string to_string(const Root& root);
/// Accepts both notations where they make sense; A2 also takes "a", "b", "a+b".
Root parse_root(const RootSystemId& sys, std::string_view text);

}  // namespace chev
