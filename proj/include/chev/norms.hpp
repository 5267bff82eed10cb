#pragma once

// Conjugation-invariant word norms on finite groups.
//
// ||g||_S is the least number of conjugates of elements of S or S^{-1}
// whose product is g, and +inf outside the normal closure of S.  The balls
// B_S(k) are unions of conjugacy classes, so everything here runs on classes
// rather than elements.

#include <compare>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "chev/chevalley.hpp"
#include "chev/finite_group.hpp"

namespace chev {

/// An integer or one of +inf / -inf.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  static constexpr ExtInt finite(std::int64_t v) { return ExtInt(Tag::finite, v); }
  static constexpr ExtInt pos_inf() { return ExtInt(Tag::pos_inf, 0); }
  static constexpr ExtInt neg_inf() { return ExtInt(Tag::neg_inf, 0); }

  constexpr bool is_finite() const noexcept { return tag_ == Tag::finite; }
  constexpr bool is_pos_inf() const noexcept { return tag_ == Tag::pos_inf; }
  constexpr bool is_neg_inf() const noexcept { return tag_ == Tag::neg_inf; }
  /// Throws Error(invalid_spec) for an infinite value.
  std::int64_t value() const;

  friend constexpr bool operator==(const ExtInt&, const ExtInt&) = default;
  friend constexpr auto operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.tag_ != b.tag_) return a.rank() <=> b.rank();
    return a.v_ <=> b.v_;
  }

  /// "inf", "-inf" or the decimal value.
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  enum class Tag : std::uint8_t { finite, pos_inf, neg_inf };
  constexpr ExtInt(Tag t, std::int64_t v) : tag_(t), v_(v) {}
  constexpr int rank() const { return tag_ == Tag::neg_inf ? 0 : tag_ == Tag::finite ? 1 : 2; }

  Tag tag_ = Tag::finite;
  std::int64_t v_ = 0;
};

/// All conjugates of S and S^{-1}, ascending.
std::vector<Index> conjugacy_closure(const FiniteGroup& g, std::span<const Index> s);

/// B_S(k), ascending.
std::vector<Index> ball(const FiniteGroup& g, std::span<const Index> s, int k);

ExtInt word_norm(const FiniteGroup& g, std::span<const Index> s, Index x);

/// max ||g||_S over the group.
ExtInt diameter(const FiniteGroup& g, std::span<const Index> s);

/// The normal closure of S, ascending.
std::vector<Index> normal_closure(const FiniteGroup& g, std::span<const Index> s);

/// { r in R : e_chi(r) in B_S(k) }, ascending.
std::vector<Elem> epsilon_set(const MatrixGroup& mg, std::span<const Index> s, const Root& chi,
                              int k);

/// Reference version of ball(): all products of at most k elements of the
/// conjugacy closure, expanded element by element.  Quadratic in |G|.
std::vector<Index> naive_ball(const FiniteGroup& g, std::span<const Index> s, int k);

/// ||.||_S for every element.
class NormTable {
 public:
  static constexpr std::uint32_t kVersion = 1;

  NormTable(const FiniteGroup& g, std::span<const Index> s);

  const std::vector<Index>& gen_set() const noexcept { return gens_; }
  ExtInt norm(Index x) const;
  ExtInt diameter() const;
  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(dist_.size()); }

  friend bool operator==(const NormTable&, const NormTable&) = default;

  /// Binary format: magic, version, key, generators, distances.
  void save(const std::filesystem::path& file, const std::string& key) const;
  /// Throws Error(cache_mismatch) on a foreign version or key.
  static NormTable load(const std::filesystem::path& file, const std::string& key);

 private:
  friend NormTable cached_norm_table(const std::filesystem::path&, const std::string&,
                                     const FiniteGroup&, std::span<const Index>, bool*);
  NormTable() = default;

  std::vector<Index> gens_;
  std::vector<std::int32_t> dist_;  // -1 for +inf
};

/// Cache key "<group spec>|<class ids of S>", so conjugate generating sets
/// share an entry.
std::string norm_cache_key(const std::string& group_spec, const FiniteGroup& g,
                           std::span<const Index> s);

/// Loads the table from cache_dir if a matching file exists, otherwise
/// computes and stores it.  An empty cache_dir disables caching.
NormTable cached_norm_table(const std::filesystem::path& cache_dir, const std::string& group_spec,
                            const FiniteGroup& g, std::span<const Index> s, bool* hit = nullptr);

struct DeltaOptions {
  /// Upper bound on C(c + k, k) for c nontrivial classes.
  std::uint64_t cap = 10'000'000;
  /// Reject class sets whose image does not generate G/[G,G] before any
  /// closure is computed.
  bool abelian_prefilter = true;
};

struct DeltaResult {
  ExtInt value;
  std::uint64_t candidates = 0;  // inverse-closed class sets examined
  std::uint64_t prefiltered = 0;
  std::uint64_t generating = 0;
  /// Class reps of a maximizing set (empty for -inf).
  std::vector<Index> witness;
};

/// sup of diam ||.||_S over normally generating S with |S| <= k, or -inf.
/// Throws Error(cap_exceeded).
DeltaResult delta_k_exact(const FiniteGroup& g, int k, const DeltaOptions& options = {});

}  // namespace chev
