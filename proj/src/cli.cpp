#include "chev/cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>

#include "CLI11.hpp"

#include "chev/chevalley.hpp"
#include "chev/constructions.hpp"
#include "chev/levels.hpp"
#include "chev/norms.hpp"

namespace chev {

nlohmann::json RunRecord::to_json() const {
  return {{"command", command},
          {"inputs", inputs},
          {"result", result},
          {"elapsed_ms", elapsed_ms},
          {"cache_hit", cache_hit}};
}

RunRecord RunRecord::from_json(const nlohmann::json& j) {
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  r.cache_hit = j.at("cache_hit").get<bool>();
  return r;
}

std::string RunRecord::to_line() const { return to_json().dump(); }

namespace {

struct Options {
  std::string group = "sp4";
  std::string ring = "Z/2";
  std::string probe = "Z/101";
  std::vector<std::string> gens;
  int k = 1;
  std::uint64_t seed = 0;
  std::string cache_dir;
  std::uint64_t cap = kDefaultGroupCap;
  std::uint64_t multiset_cap = DeltaOptions{}.cap;
  bool no_prefilter = false;
  bool pretty = false;
  bool timing = false;
  long long D = 0;
  std::string root = "a";
  std::vector<std::string> t, x, v;
  std::vector<std::string> units;
  int random = 0;
  int max_size = 2;
};

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void emit(RunRecord r) {
    r.elapsed_ms = o_.timing ? std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start_)
                                   .count()
                             : 0;
    if (!o_.pretty) {
      out_ << r.to_line() << "\n";
      return;
    }
    out_ << r.command;
    if (r.result.is_object()) {
      for (const auto& [key, value] : r.result.items()) {
        out_ << "\n  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump());
      }
    } else {
      out_ << ": " << r.result.dump();
    }
    out_ << "\n";
  }

  RunRecord record(const std::string& command, nlohmann::json inputs) const {
    RunRecord r;
    r.command = command;
    r.inputs = std::move(inputs);
    return r;
  }

  bool failed = false;

 private:
  const Options& o_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<Index> parse_gens(const MatrixGroup& mg, const std::vector<std::string>& gens) {
  std::vector<Index> s;
  for (const auto& text : gens) {
    s.push_back(mg.index_checked(parse_group_element(mg.id(), mg.ring(), text)));
  }
  return s;
}

std::vector<Elem> parse_elems(const Ring& ring, const std::vector<std::string>& items) {
  std::vector<Elem> out;
  for (const auto& s : items) out.push_back(ring.parse(s));
  return out;
}

// ---------------------------------------------------------------------------

void relations_verify(const Options& o, Session& session) {
  const GroupId group = parse_group_id(o.group);
  const RingHandle probe = make_ring(o.probe);
  const SignTable table = resolve_signs(group, probe);
  const nlohmann::json inputs = {{"group", o.group}, {"probe", o.probe}};
  auto rec = session.record("relations verify", inputs);
  rec.result = {{"sign_table", table.to_json()}};
  session.emit(rec);

  const Ring& r = *probe;
  const auto roots = all_roots(group.root_system());
  const std::uint64_t grid = std::uint64_t(r.size()) * r.size();
  for (const Root& alpha : roots) {
    for (const Root& beta : roots) {
      if (alpha == -beta) continue;
      std::uint64_t failures = 0;
      for (Elem a = 0; a < r.size(); ++a) {
        for (Elem b = 0; b < r.size(); ++b) {
          if (!check_commutator_identity(group, probe, alpha, beta, a, b, table)) ++failures;
        }
      }
      const SignEntry* e = table.find(alpha, beta);
      auto pr = session.record("relations verify", inputs);
      pr.result = {{"identity", "commutator"},
                   {"alpha", to_string(alpha)},
                   {"beta", to_string(beta)},
                   {"terms", e ? e->terms.size() : 0},
                   {"checked", grid},
                   {"failures", failures},
                   {"pass", failures == 0}};
      session.failed |= failures != 0;
      session.emit(pr);
    }
  }
  for (const Root& phi : roots) {
    std::uint64_t failures = 0;
    for (Elem s = 0; s < r.size(); ++s) {
      const GroupElem es = root_matrix(group, probe, phi, s);
      for (Elem t = 0; t < r.size(); ++t) {
        if (!(root_matrix(group, probe, phi, r.add(s, t)) == es * root_matrix(group, probe, phi, t))) {
          ++failures;
        }
      }
    }
    auto pr = session.record("relations verify", inputs);
    pr.result = {{"identity", "additivity"}, {"root", to_string(phi)}, {"checked", grid},
                 {"failures", failures},     {"pass", failures == 0}};
    session.failed |= failures != 0;
    session.emit(pr);
  }
  for (const Root& phi : roots) {
    for (const Root& psi : roots) {
      const auto sign = weyl_conjugation_sign(group, probe, phi, psi);
      std::uint64_t failures = sign ? 0 : r.size();
      for (Elem x = 0; sign && x < r.size(); ++x) {
        if (!check_weyl_conjugation(group, probe, phi, psi, x)) ++failures;
      }
      auto pr = session.record("relations verify", inputs);
      pr.result = {{"identity", "weyl"},
                   {"phi", to_string(phi)},
                   {"psi", to_string(psi)},
                   {"image", to_string(reflect(psi, phi))},
                   {"sign", sign ? nlohmann::json(*sign) : nlohmann::json(nullptr)},
                   {"checked", r.size()},
                   {"failures", failures},
                   {"pass", failures == 0}};
      session.failed |= failures != 0;
      session.emit(pr);
    }
  }
}

nlohmann::json group_inputs(const Options& o) {
  return {{"group", o.group}, {"ring", o.ring}, {"gens", o.gens}};
}

void norm_ball(const Options& o, Session& session) {
  const MatrixGroup mg = enumerate_group(parse_group_id(o.group), make_ring(o.ring), o.cap);
  const auto s = parse_gens(mg, o.gens);
  bool hit = false;
  const NormTable table = cached_norm_table(o.cache_dir, o.group + "/" + o.ring, mg.group(), s, &hit);
  std::uint64_t size = 0;
  for (Index x = 0; x < mg.order(); ++x) {
    const ExtInt n = table.norm(x);
    if (n.is_finite() && n.value() <= o.k) ++size;
  }
  auto inputs = group_inputs(o);
  inputs["k"] = o.k;
  auto rec = session.record("norm ball", inputs);
  rec.result = {{"size", size}, {"order", mg.order()}};
  rec.cache_hit = hit;
  session.emit(rec);
}

void norm_diameter(const Options& o, Session& session) {
  const MatrixGroup mg = enumerate_group(parse_group_id(o.group), make_ring(o.ring), o.cap);
  const auto s = parse_gens(mg, o.gens);
  bool hit = false;
  const NormTable table = cached_norm_table(o.cache_dir, o.group + "/" + o.ring, mg.group(), s, &hit);
  auto rec = session.record("norm diameter", group_inputs(o));
  rec.result = {{"diameter", table.diameter().to_json()}, {"order", mg.order()}};
  rec.cache_hit = hit;
  session.emit(rec);
}

void norm_delta(const Options& o, Session& session) {
  const MatrixGroup mg = enumerate_group(parse_group_id(o.group), make_ring(o.ring), o.cap);
  DeltaOptions opts;
  opts.cap = o.multiset_cap;
  opts.abelian_prefilter = !o.no_prefilter;
  const DeltaResult d = delta_k_exact(mg.group(), o.k, opts);
  nlohmann::json witness = nlohmann::json::array();
  for (Index x : d.witness) witness.push_back(to_json(mg.element(x)));
  auto rec = session.record("norm delta", {{"group", o.group},
                                           {"ring", o.ring},
                                           {"k", o.k},
                                           {"prefilter", opts.abelian_prefilter}});
  rec.result = {{"delta", d.value.to_json()},
                {"order", mg.order()},
                {"classes", mg.group().classes().count()},
                {"candidates", d.candidates},
                {"prefiltered", d.prefiltered},
                {"generating", d.generating},
                {"witness", witness}};
  session.emit(rec);
}

void norm_oracle(const Options& o, Session& session) {
  // Every generating set of size <= 2 (up to order) against the naive ball.
  const MatrixGroup mg = enumerate_group(parse_group_id(o.group), make_ring(o.ring), o.cap);
  const FiniteGroup& g = mg.group();
  std::uint64_t checked = 0, mismatches = 0;
  for (Index a = 0; a < g.order(); ++a) {
    for (Index b = a; b < g.order(); ++b) {
      std::vector<Index> s{a};
      if (b != a) s.push_back(b);
      for (int k = 0; k <= o.k; ++k) {
        ++checked;
        if (ball(g, s, k) != naive_ball(g, s, k)) ++mismatches;
      }
    }
  }
  auto rec = session.record("norm oracle", {{"group", o.group}, {"ring", o.ring}, {"k", o.k}});
  rec.result = {{"checked", checked}, {"mismatches", mismatches}, {"pass", mismatches == 0}};
  session.failed |= mismatches != 0;
  session.emit(rec);
}

void levels_pi(const Options& o, Session& session) {
  const GroupId group = parse_group_id(o.group);
  const RingHandle ring = make_ring(o.ring);
  std::vector<GroupElem> s;
  for (const auto& text : o.gens) s.push_back(parse_group_element(group, ring, text));
  nlohmann::json pi = nlohmann::json::array();
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& a : s) levels.push_back(level_ideal(a).to_string());
  const auto primes = pi_set(s);
  for (const auto& p : primes) pi.push_back(p.to_string());
  const bool full = levels_sum_is_full(s);
  auto rec = session.record("levels pi", group_inputs(o));
  rec.result = {{"levels", levels},
                {"pi", pi},
                {"levels_sum_full", full},
                {"consistent", full == primes.empty()}};
  session.failed |= full != primes.empty();
  session.emit(rec);
}

void construct_lower_bound(const Options& o, Session& session) {
  const RingHandle ring = make_ring(o.ring);
  LowerBoundSet set;
  GroupId group = parse_group_id(o.group);
  Root phi = parse_root(group.root_system(), o.root);
  nlohmann::json inputs = {{"group", o.group}, {"ring", o.ring}};
  if (!o.x.empty()) {
    group = GroupId::SP4();
    phi = make_root(group.root_system(), 1, 0);
    set = lower_bound_set_rank2(ring, parse_elems(*ring, o.x), parse_elems(*ring, o.v), o.k);
    inputs["x"] = o.x;
    inputs["v"] = o.v;
    inputs["k"] = o.k;
  } else {
    set = lower_bound_set_higher_rank(group, ring, phi, parse_elems(*ring, o.t));
    inputs["root"] = o.root;
    inputs["t"] = o.t;
  }
  const GroupElem target = root_matrix(group, ring, phi, ring->one());
  const auto cert = pi_lower_bound_certificate(set.generators, target, set.primes);
  const bool pi_empty = pi_set(set.generators).empty();
  auto rec = session.record("construct lower-bound", inputs);
  rec.result = set.to_json();
  rec.result["certificate"] = cert.to_json();
  rec.result["target"] = to_json(target);
  rec.result["pi_empty"] = pi_empty;
  rec.result["pass"] = cert.bound == set.claimed_bound && pi_empty;
  session.failed |= !rec.result["pass"].get<bool>();
  session.emit(rec);
}

void construct_split_two(const Options& o, Session& session) {
  const SplitData d = split_data(o.D);
  const int degree_one =
      static_cast<int>(std::count(d.residue_degrees.begin(), d.residue_degrees.end(), 1));
  auto rec = session.record("construct split-two", {{"D", o.D}});
  rec.result = d.to_json();
  rec.result["f2_factors"] = degree_one;
  rec.result["consistent"] = degree_one == d.r;
  session.failed |= degree_one != d.r;
  session.emit(rec);
}

void gen_check(const Options& o, Session& session) {
  const MatrixGroup mg = enumerate_group(GroupId::SP4(), make_ring(o.ring), o.cap);
  const GenerationChecker checker(mg);
  std::vector<std::vector<Index>> sets;
  if (o.random > 0) {
    sets = sample_small_sets(mg, congruence_subgroup(mg), o.random, o.max_size, o.seed);
  } else {
    sets.push_back(parse_gens(mg, o.gens));
  }
  for (const auto& s : sets) {
    const GenerationVerdict v = checker.check(s);
    nlohmann::json elems = nlohmann::json::array();
    for (Index x : s) elems.push_back(to_json(mg.element(x)));
    auto rec = session.record("gen check", {{"ring", o.ring},
                                            {"gens", o.gens},
                                            {"random", o.random},
                                            {"seed", o.seed}});
    rec.result = v.to_json();
    rec.result["set"] = elems;
    rec.result["quotient_order"] = checker.quotient_order();
    session.failed |= !v.consistent();
    session.emit(rec);
  }
}

void gen_unit_check(const Options& o, Session& session) {
  const RingHandle ring = make_ring(o.ring);
  std::vector<Elem> units;
  if (o.units.empty()) {
    for (Elem u = 0; u < ring->size(); ++u) {
      if (ring->is_unit(u)) units.push_back(u);
    }
  } else {
    units = parse_elems(*ring, o.units);
  }
  const MatrixGroup mg = enumerate_group(GroupId::SP4(), ring, o.cap);
  for (Elem u : units) {
    const bool ok = check_unit_normal_generation(mg, u);
    auto rec = session.record("gen unit-check", {{"ring", o.ring}});
    rec.result = {{"unit", ring->format(u)}, {"order", mg.order()}, {"normally_generates", ok}};
    session.failed |= !ok;
    session.emit(rec);
  }
}

void group_order(const Options& o, Session& session) {
  const GroupId group = parse_group_id(o.group);
  const RingHandle ring = make_ring(o.ring);
  const MatrixGroup mg = enumerate_group(group, ring, o.cap);
  auto rec = session.record("group order", {{"group", o.group}, {"ring", o.ring}});
  rec.result = {{"order", mg.order()},
                {"estimate", group_order_estimate(group, ring)},
                {"classes", mg.group().classes().count()}};
  session.failed |= mg.order() != group_order_estimate(group, ring);
  session.emit(rec);
}

void group_abelianization(const Options& o, Session& session) {
  const MatrixGroup mg = enumerate_group(parse_group_id(o.group), make_ring(o.ring), o.cap);
  auto rec = session.record("group abelianization", {{"group", o.group}, {"ring", o.ring}});
  rec.result = {{"dim", abelianization_dim(mg.group())}, {"order", mg.order()}};
  session.emit(rec);
}

void group_sign(const Options& o, Session& session) {
  const MatrixGroup mg = enumerate_group(GroupId::SP4(), make_ring(o.ring), o.cap);
  const SignEpimorphism sign(mg);
  nlohmann::json roots = nlohmann::json::object();
  bool ok = true;
  for (const Root& phi : all_roots(mg.id().root_system())) {
    const int value = sign(mg.index_checked(root_matrix(mg.id(), mg.ring(), phi, mg.ring()->one())));
    roots[to_string(phi)] = value;
    ok = ok && value == 1;
  }
  auto rec = session.record("group sign", {{"ring", o.ring}});
  rec.result = {{"kernel_size", sign.kernel_size()}, {"root_images", roots}, {"pass", ok}};
  session.failed |= !ok;
  session.emit(rec);
}

void sl2_decompose(const Options& o, Session& session) {
  const RingHandle ring = make_ring(o.ring);
  const MatrixGroup mg = enumerate_group(GroupId::SL(2), ring, o.cap);
  std::uint64_t failures = 0;
  std::size_t longest = 0;
  for (Index i = 0; i < mg.order(); ++i) {
    const GroupElem m = mg.element(i);
    const auto factors = sl2_unitriangular_decompose(m);
    GroupElem p = identity_element(m.group(), ring);
    bool alternating = true;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      p = p * factors[f];
      const bool upper = is_upper_unitriangular(factors[f]);
      alternating = alternating && (upper || is_lower_unitriangular(factors[f]));
      if (f > 0) alternating = alternating && upper != is_upper_unitriangular(factors[f - 1]);
    }
    longest = std::max(longest, factors.size());
    if (!(p == m) || factors.size() > 4 || !alternating) ++failures;
  }
  auto rec = session.record("sl2 decompose", {{"ring", o.ring}});
  rec.result = {{"order", mg.order()},
                {"max_factors", longest},
                {"failures", failures},
                {"pass", failures == 0}};
  session.failed |= failures != 0;
  session.emit(rec);
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Seed for all randomness")->capture_default_str();
  cmd->add_flag("--pretty", o.pretty, "Human-readable output");
  cmd->add_flag("--timing", o.timing, "Report wall-clock elapsed_ms (otherwise 0)");
  cmd->add_option("--cap", o.cap, "Largest group to enumerate")->capture_default_str();
}

void add_group(CLI::App* cmd, Options& o, bool with_gens) {
  cmd->add_option("--group", o.group, "sp4 or slN")->capture_default_str();
  cmd->add_option("--ring", o.ring, "Z/n, Quad(D)/m or a product")->capture_default_str();
  if (with_gens) cmd->add_option("--gens", o.gens, "Elements such as ea(1), e[a+b](w)");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations in Chevalley groups over finite rings", "chevtool"};
  app.require_subcommand(1);
  std::function<void(Session&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  void (*fn)(const Options&, Session&)) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    add_common(cmd, o);
    cmd->callback([&action, fn, &o] { action = [fn, &o](Session& s) { fn(o, s); }; });
    return cmd;
  };

  auto* relations = app.add_subcommand("relations", "Commutator, additivity and Weyl identities");
  relations->require_subcommand(1);
  auto* verify = leaf(relations, "verify", "Resolve signs and check every identity", relations_verify);
  verify->add_option("--group", o.group)->capture_default_str();
  verify->add_option("--probe", o.probe, "Probing ring")->capture_default_str();

  auto* norm = app.add_subcommand("norm", "Conjugation-invariant word norms");
  norm->require_subcommand(1);
  auto* nball = leaf(norm, "ball", "Size of B_S(k)", norm_ball);
  add_group(nball, o, true);
  nball->add_option("--k", o.k)->capture_default_str();
  nball->add_option("--cache-dir", o.cache_dir, "Norm table cache");
  auto* ndiam = leaf(norm, "diameter", "Diameter of ||.||_S", norm_diameter);
  add_group(ndiam, o, true);
  ndiam->add_option("--cache-dir", o.cache_dir, "Norm table cache");
  auto* ndelta = leaf(norm, "delta", "Exact Delta_k over class sets", norm_delta);
  add_group(ndelta, o, false);
  ndelta->add_option("--k", o.k)->capture_default_str();
  ndelta->add_option("--multiset-cap", o.multiset_cap)->capture_default_str();
  ndelta->add_flag("--no-prefilter", o.no_prefilter, "Skip the abelianization test");
  auto* noracle = leaf(norm, "oracle", "Compare balls with the naive expansion", norm_oracle);
  add_group(noracle, o, false);
  noracle->add_option("--k", o.k)->capture_default_str();

  auto* levels = app.add_subcommand("levels", "Level ideals");
  levels->require_subcommand(1);
  add_group(leaf(levels, "pi", "Pi(S) and the sum of level ideals", levels_pi), o, true);

  auto* construct = app.add_subcommand("construct", "Lower-bound sets and splitting data");
  construct->require_subcommand(1);
  auto* lb = leaf(construct, "lower-bound", "Generating set with certified norm bound",
                  construct_lower_bound);
  add_group(lb, o, false);
  lb->add_option("--root", o.root)->capture_default_str();
  lb->add_option("--t", o.t, "Pairwise coprime prime generators");
  lb->add_option("--x", o.x, "Generators of the degree-one primes over 2 (Sp4)");
  lb->add_option("--v", o.v, "Further prime generators (Sp4)");
  lb->add_option("--k", o.k)->capture_default_str();
  auto* split = leaf(construct, "split-two", "Decomposition of 2 in Q(sqrt D)", construct_split_two);
  split->add_option("-D,--discriminant", o.D, "Square-free D")->required();

  auto* gen = app.add_subcommand("gen", "Normal generation of Sp4");
  gen->require_subcommand(1);
  auto* check = leaf(gen, "check", "Pi(S) and G/N against actual generation", gen_check);
  check->add_option("--ring", o.ring)->capture_default_str();
  check->add_option("--gens", o.gens);
  check->add_option("--random", o.random, "Check this many seeded random sets instead");
  check->add_option("--max-size", o.max_size)->capture_default_str();
  auto* unit = leaf(gen, "unit-check", "Does e_a(u) normally generate for each unit u", gen_unit_check);
  unit->add_option("--ring", o.ring)->capture_default_str();
  unit->add_option("--unit", o.units, "Only these units");

  auto* grp = app.add_subcommand("group", "Enumerated groups");
  grp->require_subcommand(1);
  add_group(leaf(grp, "order", "Enumerate and count", group_order), o, false);
  add_group(leaf(grp, "abelianization", "dim of G/[G,G] over F2", group_abelianization), o, false);
  leaf(grp, "sign", "The sign map of Sp4(F2)", group_sign)->add_option("--ring", o.ring)->capture_default_str();

  auto* sl2 = app.add_subcommand("sl2", "SL2 unitriangular factorizations");
  sl2->require_subcommand(1);
  leaf(sl2, "decompose", "Decompose every element of SL2(R)", sl2_decompose)
      ->add_option("--ring", o.ring)
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "chevtool: " << e.what() << "\n";
    err << "subcommands: relations verify | norm ball|diameter|delta|oracle | levels pi |\n"
           "  construct lower-bound|split-two | gen check|unit-check |\n"
           "  group order|abelianization|sign | sl2 decompose\n";
    return 2;
  }

  Session session(o, out);
  try {
    action(session);
  } catch (const Error& e) {
    err << "chevtool: " << e.what() << "\n";
    return e.code() == Errc::no_consistent_signs ? 1 : 2;
  }
  return session.failed ? 1 : 0;
}

}  // namespace chev
