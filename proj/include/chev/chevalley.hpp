#pragma once

// Matrix realizations of SL_n(R) and Sp4(R) over finite rings.
//
// Sp4 is the group of 4x4 matrices A with A^T J A = J for
//   J = [[0,0,1,0],[0,0,0,1],[-1,0,0,0],[0,-1,0,0]],
// with root elements
//   e_a(t)    = I + t(e12 - e43)     e_b(t)    = I + t e24
//   e_a+b(t)  = I + t(e14 + e23)     e_2a+b(t) = I + t e13
// and e_{-r}(t) = e_r(t)^T.  SL_n uses e_{e_p - e_q}(t) = I + t e_pq.
//
// Commutators are (x, y) = x y x^{-1} y^{-1} throughout.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "chev/finite_group.hpp"
#include "chev/ring.hpp"
#include "chev/rootsys.hpp"

namespace chev {

struct GroupId {
  enum class Kind { SL, SP4 };
  Kind kind = Kind::SL;
  int n = 2;

  static GroupId SL(int n);
  static GroupId SP4() { return {Kind::SP4, 4}; }

  int dim() const noexcept { return n; }
  RootSystemId root_system() const;

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

std::string to_string(const GroupId& id);
/// "sp4", "sl2", "sl3", ...
GroupId parse_group_id(std::string_view text);

struct Matrix {
  int dim = 0;
  std::vector<Elem> entries;  // row-major

  Elem& at(int i, int j) { return entries[std::size_t(i) * dim + j]; }
  Elem at(int i, int j) const { return entries[std::size_t(i) * dim + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix identity_matrix(const Ring& ring, int dim);
Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

/// Coefficients c_0 = 1, c_1, ..., c_n of det(xI - A) = sum c_k x^{n-k},
/// computed without division.
std::vector<Elem> characteristic_polynomial(const Ring& ring, const Matrix& a);
Elem determinant(const Ring& ring, const Matrix& a);

class GroupElem {
 public:
  GroupElem(GroupId group, RingHandle ring, Matrix m);

  const GroupId& group() const noexcept { return group_; }
  const RingHandle& ring() const noexcept { return ring_; }
  const Matrix& matrix() const noexcept { return m_; }
  RingElem entry(int i, int j) const { return {ring_, m_.at(i, j)}; }

  GroupElem inverse() const;
  bool is_identity() const;

  friend GroupElem operator*(const GroupElem& a, const GroupElem& b);
  friend bool operator==(const GroupElem& a, const GroupElem& b) {
    return a.group_ == b.group_ && a.ring_.get() == b.ring_.get() && a.m_ == b.m_;
  }

  std::string to_string() const;

 private:
  GroupId group_;
  RingHandle ring_;
  Matrix m_;
};

GroupElem commutator(const GroupElem& x, const GroupElem& y);

/// Throws Error(dimension_mismatch) if the matrix has the wrong size.
bool is_member(const GroupId& group, const Ring& ring, const Matrix& m);

GroupElem identity_element(const GroupId& group, const RingHandle& ring);
GroupElem scalar_element(const GroupId& group, const RingHandle& ring, Elem u);
bool is_scalar(const Matrix& m);

/// Throws Error(invalid_root) if the root does not belong to the group's
/// root system.
GroupElem root_matrix(const GroupId& group, const RingHandle& ring, const Root& root, Elem t);
/// e_r(t) e_{-r}(-t^{-1}) e_r(t); throws Error(not_unit).
GroupElem weyl_matrix(const GroupId& group, const RingHandle& ring, const Root& root, Elem t);
/// w_r(t) w_r(1)^{-1}; throws Error(not_unit).
GroupElem torus_matrix(const GroupId& group, const RingHandle& ring, const Root& root, Elem t);

/// Entry-wise image under a ring homomorphism.
GroupElem reduce_mod(const GroupElem& m, const RingMap& map);

/// Does the element commute with every root element e_r(t)?
bool commutes_with_root_elements(const GroupElem& m);

/// Parses "I", "ea(3)", "eb(w)", "e[2a+b](1)", "e[e1-e3](2)", "w[a](1)",
/// "h[b](2)" and '*'-separated products of these.
GroupElem parse_group_element(const GroupId& group, const RingHandle& ring, std::string_view text);

/// Row-major entry list with a ring-spec header.
nlohmann::json to_json(const GroupElem& m);
GroupElem group_elem_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Enumeration

/// |G(R)| from the local decomposition of R.
std::uint64_t group_order_estimate(const GroupId& group, const RingHandle& ring);

class MatrixGroup {
 public:
  const GroupId& id() const noexcept { return id_; }
  const RingHandle& ring() const noexcept { return ring_; }
  const FiniteGroup& group() const noexcept { return group_; }
  std::uint32_t order() const noexcept { return group_.order(); }

  GroupElem element(Index i) const;
  std::optional<Index> index_of(const GroupElem& m) const;
  /// Throws Error(invalid_spec) if m is not in the group.
  Index index_checked(const GroupElem& m) const;

 private:
  friend MatrixGroup enumerate_group(const GroupId& group, const RingHandle& ring,
                                     std::uint64_t cap);
  class Store;
  MatrixGroup(GroupId id, RingHandle ring, std::shared_ptr<const Store> store, FiniteGroup group);

  GroupId id_;
  RingHandle ring_;
  std::shared_ptr<const Store> store_;
  FiniteGroup group_;
};

inline constexpr std::uint64_t kDefaultGroupCap = 2'000'000;

/// Closure of the root elements under multiplication, in breadth-first
/// order from the identity (index 0).  Throws Error(cap_exceeded).
MatrixGroup enumerate_group(const GroupId& group, const RingHandle& ring,
                            std::uint64_t cap = kDefaultGroupCap);

// ---------------------------------------------------------------------------
// SL2 over stable-range-1 rings

/// Alternating upper/lower unitriangular factors, at most four, whose
/// product is m.  The identity decomposes into the empty list.
std::vector<GroupElem> sl2_unitriangular_decompose(const GroupElem& m);
bool is_upper_unitriangular(const GroupElem& m);
bool is_lower_unitriangular(const GroupElem& m);

// ---------------------------------------------------------------------------
// Commutator relations

/// For the ordered pair (alpha, beta):
///   (e_beta(b), e_alpha(a)) = prod_k e_{terms[k].root}(sign[k] * coeff[k] * a^i b^j)
struct SignEntry {
  Root alpha;
  Root beta;
  std::vector<SupportTerm> terms;
  std::vector<int> coeff;
  std::vector<int> sign;
};

class SignTable {
 public:
  static constexpr int kVersion = 1;

  SignTable() = default;
  SignTable(GroupId group, std::vector<SignEntry> entries);

  const GroupId& group() const noexcept { return group_; }
  const std::vector<SignEntry>& entries() const noexcept { return entries_; }
  /// nullptr when the pair commutes (empty support).
  const SignEntry* find(const Root& alpha, const Root& beta) const;

  nlohmann::json to_json() const;
  static SignTable from_json(const nlohmann::json& j);

 private:
  GroupId group_;
  std::vector<SignEntry> entries_;
  std::map<std::pair<Root, Root>, std::size_t> index_;
};

/// Magnitude of the structure constant for term (i, j) of the pair.
int structure_coefficient(const Root& alpha, const Root& beta, int i, int j);

/// Resolves the signs over the probing ring (Z/101 by default) by checking
/// every (a, b).  Throws Error(no_consistent_signs) if no sign choice, or
/// more than one, satisfies an identity.
SignTable resolve_signs(const GroupId& group, const RingHandle& probe = nullptr);

bool check_commutator_identity(const GroupId& group, const RingHandle& ring, const Root& alpha,
                               const Root& beta, Elem a, Elem b, const SignTable& table);

/// The sign s with w_phi(1) e_psi(1) w_phi(1)^{-1} = e_{w_phi(psi)}(s), if
/// any.
std::optional<int> weyl_conjugation_sign(const GroupId& group, const RingHandle& ring,
                                         const Root& phi, const Root& psi);

/// w_phi(1) e_psi(x) w_phi(1)^{-1} = e_{w_phi(psi)}(s x) with s fixed by
/// x = 1.
bool check_weyl_conjugation(const GroupId& group, const RingHandle& ring, const Root& phi,
                            const Root& psi, Elem x);

}  // namespace chev
