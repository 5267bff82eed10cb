#include "chev/norms.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <set>

namespace chev {

std::int64_t ExtInt::value() const {
  if (!is_finite()) throw Error(Errc::invalid_spec, "value() of " + to_string());
  return v_;
}

std::string ExtInt::to_string() const {
  if (is_pos_inf()) return "inf";
  if (is_neg_inf()) return "-inf";
  return std::to_string(v_);
}

nlohmann::json ExtInt::to_json() const {
  if (is_finite()) return v_;
  return to_string();
}

namespace {

std::vector<Index> members_within(const FiniteGroup& g, const std::vector<std::int32_t>& dist,
                                  std::int32_t k) {
  const auto& cc = g.classes();
  std::vector<Index> out;
  for (std::uint32_t c = 0; c < cc.count(); ++c) {
    if (dist[c] >= 0 && (k < 0 || dist[c] <= k)) {
      out.insert(out.end(), cc.members[c].begin(), cc.members[c].end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int32_t> distances(const FiniteGroup& g, std::span<const Index> s,
                                    std::int32_t max_depth = -1) {
  return class_distances(g, closure_classes(g, s), max_depth);
}

}  // namespace

std::vector<Index> conjugacy_closure(const FiniteGroup& g, std::span<const Index> s) {
  const auto& cc = g.classes();
  std::vector<Index> out;
  for (std::uint32_t c : closure_classes(g, s)) {
    out.insert(out.end(), cc.members[c].begin(), cc.members[c].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> ball(const FiniteGroup& g, std::span<const Index> s, int k) {
  if (k < 0) throw Error(Errc::invalid_spec, "ball radius must be nonnegative");
  return members_within(g, distances(g, s, k), k);
}

ExtInt word_norm(const FiniteGroup& g, std::span<const Index> s, Index x) {
  const auto dist = distances(g, s);
  const std::int32_t d = dist[g.classes().class_of[x]];
  return d < 0 ? ExtInt::pos_inf() : ExtInt::finite(d);
}

ExtInt diameter(const FiniteGroup& g, std::span<const Index> s) {
  const auto dist = distances(g, s);
  std::int32_t best = 0;
  for (std::int32_t d : dist) {
    if (d < 0) return ExtInt::pos_inf();
    best = std::max(best, d);
  }
  return ExtInt::finite(best);
}

std::vector<Index> normal_closure(const FiniteGroup& g, std::span<const Index> s) {
  return members_within(g, distances(g, s), -1);
}

std::vector<Index> naive_ball(const FiniteGroup& g, std::span<const Index> s, int k) {
  if (k < 0) throw Error(Errc::invalid_spec, "ball radius must be nonnegative");
  const std::uint32_t n = g.order();
  std::vector<std::uint8_t> closure(n, 0);
  for (Index x : s) {
    for (Index h = 0; h < n; ++h) {
      closure[g.conjugate(x, h)] = 1;
      closure[g.conjugate(g.inverse(x), h)] = 1;
    }
  }
  std::vector<std::uint8_t> in(n, 0);
  in[g.identity()] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<std::uint8_t> next = in;
    for (Index a = 0; a < n; ++a) {
      if (!in[a]) continue;
      for (Index c = 0; c < n; ++c) {
        if (closure[c]) next[g.multiply(a, c)] = 1;
      }
    }
    in = std::move(next);
  }
  std::vector<Index> out;
  for (Index x = 0; x < n; ++x) {
    if (in[x]) out.push_back(x);
  }
  return out;
}

std::vector<Elem> epsilon_set(const MatrixGroup& mg, std::span<const Index> s, const Root& chi,
                              int k) {
  if (k < 0) throw Error(Errc::invalid_spec, "ball radius must be nonnegative");
  const auto& g = mg.group();
  const auto dist = distances(g, s, k);
  std::vector<Elem> out;
  for (Elem r = 0; r < mg.ring()->size(); ++r) {
    const Index x = mg.index_checked(root_matrix(mg.id(), mg.ring(), chi, r));
    const std::int32_t d = dist[g.classes().class_of[x]];
    if (d >= 0 && d <= k) out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// NormTable

NormTable::NormTable(const FiniteGroup& g, std::span<const Index> s) : gens_(s.begin(), s.end()) {
  const auto dist = distances(g, s);
  const auto& cc = g.classes();
  dist_.resize(g.order());
  for (Index x = 0; x < g.order(); ++x) dist_[x] = dist[cc.class_of[x]];
}

ExtInt NormTable::norm(Index x) const {
  return dist_[x] < 0 ? ExtInt::pos_inf() : ExtInt::finite(dist_[x]);
}

ExtInt NormTable::diameter() const {
  std::int32_t best = 0;
  for (std::int32_t d : dist_) {
    if (d < 0) return ExtInt::pos_inf();
    best = std::max(best, d);
  }
  return ExtInt::finite(best);
}

namespace {

constexpr char kMagic[8] = {'C', 'H', 'E', 'V', 'N', 'O', 'R', 'M'};

template <class T>
void put(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!in) throw Error(Errc::cache_mismatch, "truncated cache file");
  return v;
}

}  // namespace

void NormTable::save(const std::filesystem::path& file, const std::string& key) const {
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::invalid_spec, "cannot write " + tmp);
    out.write(kMagic, sizeof kMagic);
    put(out, kVersion);
    put(out, static_cast<std::uint32_t>(key.size()));
    out.write(key.data(), static_cast<std::streamsize>(key.size()));
    put(out, static_cast<std::uint32_t>(gens_.size()));
    for (Index x : gens_) put(out, x);
    put(out, static_cast<std::uint32_t>(dist_.size()));
    out.write(reinterpret_cast<const char*>(dist_.data()),
              static_cast<std::streamsize>(dist_.size() * sizeof(std::int32_t)));
  }
  std::filesystem::rename(tmp, file);
}

NormTable NormTable::load(const std::filesystem::path& file, const std::string& key) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(Errc::cache_mismatch, "cannot read " + file.string());
  char magic[sizeof kMagic];
  in.read(magic, sizeof magic);
  if (!in || !std::equal(magic, magic + sizeof magic, kMagic)) {
    throw Error(Errc::cache_mismatch, file.string() + " is not a norm table");
  }
  const auto version = get<std::uint32_t>(in);
  if (version != kVersion) {
    throw Error(Errc::cache_mismatch, "norm table version " + std::to_string(version) +
                                          ", expected " + std::to_string(kVersion));
  }
  std::string stored(get<std::uint32_t>(in), '\0');
  in.read(stored.data(), static_cast<std::streamsize>(stored.size()));
  if (!in || stored != key) throw Error(Errc::cache_mismatch, "cache key differs");
  NormTable t;
  t.gens_.resize(get<std::uint32_t>(in));
  for (Index& x : t.gens_) x = get<Index>(in);
  t.dist_.resize(get<std::uint32_t>(in));
  in.read(reinterpret_cast<char*>(t.dist_.data()),
          static_cast<std::streamsize>(t.dist_.size() * sizeof(std::int32_t)));
  if (!in) throw Error(Errc::cache_mismatch, "truncated cache file");
  return t;
}

std::string norm_cache_key(const std::string& group_spec, const FiniteGroup& g,
                           std::span<const Index> s) {
  std::vector<std::uint32_t> ids;
  for (Index x : s) ids.push_back(g.classes().class_of[x]);
  std::sort(ids.begin(), ids.end());
  std::string key = group_spec + "|";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(ids[i]);
  }
  return key;
}

NormTable cached_norm_table(const std::filesystem::path& cache_dir, const std::string& group_spec,
                            const FiniteGroup& g, std::span<const Index> s, bool* hit) {
  if (hit) *hit = false;
  if (cache_dir.empty()) return NormTable(g, s);
  const std::string key = norm_cache_key(group_spec, g, s);
  std::string name;
  for (char c : key) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  const auto file =
      cache_dir / (name + "-" + std::to_string(std::hash<std::string>{}(key) % 1000000007u) + ".nt");
  if (std::filesystem::exists(file)) {
    NormTable t = NormTable::load(file, key);
    // Cached generators may differ from S within the same classes.
    t.gens_.assign(s.begin(), s.end());
    if (hit) *hit = true;
    return t;
  }
  std::filesystem::create_directories(cache_dir);
  NormTable t(g, s);
  t.save(file, key);
  return t;
}

// ---------------------------------------------------------------------------
// Delta_k

namespace {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const unsigned __int128 next = static_cast<unsigned __int128>(r) * (n - k + i) / i;
    if (next > cap) return cap + 1;
    r = static_cast<std::uint64_t>(next);
  }
  return r;
}

}  // namespace

DeltaResult delta_k_exact(const FiniteGroup& g, int k, const DeltaOptions& options) {
  if (k < 1) throw Error(Errc::invalid_spec, "k must be positive");
  const auto& cc = g.classes();
  const std::uint32_t trivial = cc.class_of[g.identity()];
  std::vector<std::uint32_t> nontrivial;
  for (std::uint32_t c = 0; c < cc.count(); ++c) {
    if (c != trivial) nontrivial.push_back(c);
  }
  const std::uint64_t count = binomial_capped(nontrivial.size() + k, k, options.cap);
  if (count > options.cap) {
    throw Error(Errc::cap_exceeded, std::to_string(nontrivial.size()) +
                                        " classes exceed the multiset cap for k = " +
                                        std::to_string(k));
  }

  std::optional<Quotient> ab;
  if (options.abelian_prefilter) ab = quotient_by_normal(g, commutator_subgroup(g));

  DeltaResult result;
  result.value = ExtInt::neg_inf();
  // Repeating a class adds nothing to the closure, so sets of distinct
  // classes cover every multiset.
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::uint32_t> pick;
  std::function<void(std::size_t)> visit = [&](std::size_t start) {
    if (!pick.empty()) {
      std::vector<std::uint32_t> closed;
      std::vector<Index> reps;
      for (std::uint32_t c : pick) {
        reps.push_back(cc.reps[c]);
        closed.push_back(c);
        closed.push_back(cc.class_of[g.inverse(cc.reps[c])]);
      }
      std::sort(closed.begin(), closed.end());
      closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
      if (seen.insert(closed).second) {
        ++result.candidates;
        if (ab && !generates_quotient(*ab, reps)) {
          ++result.prefiltered;
        } else {
          const auto dist = class_distances(g, closed);
          if (std::none_of(dist.begin(), dist.end(), [](std::int32_t d) { return d < 0; })) {
            ++result.generating;
            const ExtInt diam = ExtInt::finite(*std::max_element(dist.begin(), dist.end()));
            if (diam > result.value) {
              result.value = diam;
              result.witness = reps;
            }
          }
        }
      }
    }
    if (pick.size() == static_cast<std::size_t>(k)) return;
    for (std::size_t i = start; i < nontrivial.size(); ++i) {
      pick.push_back(nontrivial[i]);
      visit(i + 1);
      pick.pop_back();
    }
  };
  visit(0);
  return result;
}

}  // namespace chev
