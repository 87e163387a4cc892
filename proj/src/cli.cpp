#include "clusterscope/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clusterscope/algebraic.hpp"
#include "clusterscope/banff.hpp"
#include "clusterscope/catalog.hpp"
#include "clusterscope/certificate.hpp"
#include "clusterscope/explore.hpp"
#include "clusterscope/qvr.hpp"
#include "clusterscope/seed.hpp"
#include "clusterscope/surface.hpp"

namespace clusterscope {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool json_output = false;
  unsigned threads = 0;

  std::string read_input(const std::string& path) const {
    if (path.empty() || path == "-") {
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  NamedQuiver read_quiver(const std::string& path) const { return parse_qvr(read_input(path)); }

  // Either the json payload or the text report goes to `out`.
  void emit(const json& payload, const std::string& text) const {
    if (json_output)
      out << payload.dump(2) << "\n";
    else
      out << text;
  }
};

std::vector<Index> parse_vertices(const std::string& s, Index n) {
  std::vector<Index> out;
  if (s.empty()) return out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      if (v < 1 || v > n) throw UsageError("vertex " + item + " out of range 1.." + std::to_string(n));
      out.push_back(static_cast<Index>(v - 1));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("bad vertex '" + item + "'");
    }
  }
  return out;
}

BigRational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return BigRational(BigInt(s));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + s + "'");
    return BigRational(BigInt(s.substr(0, slash)), den);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("bad rational '" + s + "'");
  }
}

// "v=r,v=r,..." with 1-based vertices.
std::map<Index, BigRational> parse_assignment(const std::string& s, Index n) {
  std::map<Index, BigRational> out;
  if (s.empty()) return out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected v=r, got '" + item + "'");
    const Index v = parse_vertices(item.substr(0, eq), n).at(0);
    if (!out.emplace(v, parse_rational(item.substr(eq + 1))).second)
      throw UsageError("vertex " + vertex_name(v) + " assigned twice");
  }
  return out;
}

std::string path_text(const std::vector<Index>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? "," : "") + vertex_name(path[i]);
  return out.empty() ? "(empty)" : out;
}

json path_json(const std::vector<Index>& path) {
  json a = json::array();
  for (Index k : path) a.push_back(k + 1);
  return a;
}

json quiver_json(const IceQuiver& q, const std::string& name) {
  json arrows = json::array();
  for (Index i = 0; i < q.size(); ++i)
    for (Index j = 0; j < q.size(); ++j)
      if (q(i, j) > 0) arrows.push_back({i + 1, j + 1, q(i, j)});
  return {{"name", name}, {"vertices", q.size()}, {"frozen", path_json(q.frozen_vertices())}, {"arrows", arrows}};
}

std::string rational_text(const BigRational& r) {
  return boost::multiprecision::denominator(r) == 1 ? boost::multiprecision::numerator(r).str() : r.str();
}

int verdict_status(Verdict v) {
  switch (v) {
    case Verdict::Found: return kSuccess;
    case Verdict::ProvenAbsent: return kNegative;
    case Verdict::BudgetExhausted: return kIndeterminate;
  }
  return kUsage;
}

Budget make_budget(std::size_t class_budget, int depth, std::size_t node_budget, unsigned threads) {
  Budget b;
  b.class_budget = class_budget;
  b.depth = depth;
  b.node_budget = node_budget;
  b.threads = threads;
  return b;
}

int cmd_mutate(const Context& ctx, const std::string& file, const std::string& path_arg) {
  const NamedQuiver nq = ctx.read_quiver(file);
  const auto path = parse_vertices(path_arg, nq.quiver.size());
  const IceQuiver q = mutate_along(nq.quiver, path);
  ctx.emit({{"command", "mutate"}, {"path", path_json(path)}, {"quiver", quiver_json(q, nq.name)}},
           to_qvr(q, nq.name));
  return kSuccess;
}

int cmd_class(const Context& ctx, const std::string& file, const Budget& budget, bool list) {
  const NamedQuiver nq = ctx.read_quiver(file);
  const MutationClass cls = mutation_class(nq.quiver, budget);
  std::ostringstream text;
  text << "size " << cls.size() << "\ncomplete " << (cls.complete ? "yes" : "no") << "\nfrontier_depth "
       << cls.frontier_depth << "\n";
  json members = json::array();
  for (const auto& m : cls.members) {
    members.push_back({{"path", path_json(m.path)}, {"form", m.form}});
    if (list) text << "member path=" << path_text(m.path) << " " << m.form << "\n";
  }
  ctx.emit({{"command", "class"},
            {"size", cls.size()},
            {"complete", cls.complete},
            {"frontier_depth", cls.frontier_depth},
            {"members", members}},
           text.str());
  return cls.complete ? kSuccess : kIndeterminate;
}

json outcome_json(const SearchOutcome& o) {
  json j{{"verdict", verdict_name(o.verdict)}, {"nodes", o.nodes}, {"depth", o.depth}};
  if (o.verdict == Verdict::Found) j["path"] = path_json(o.path);
  if (o.pair) j["pair"] = {o.pair->source + 1, o.pair->target + 1};
  return j;
}

std::string outcome_text(const SearchOutcome& o) {
  std::ostringstream text;
  text << "verdict " << verdict_name(o.verdict) << "\n";
  if (o.verdict == Verdict::Found) text << "path " << path_text(o.path) << "\n";
  if (o.pair) text << "pair " << vertex_name(o.pair->source) << "," << vertex_name(o.pair->target) << "\n";
  text << "nodes " << o.nodes << "\ndepth " << o.depth << "\n";
  return text.str();
}

int cmd_find_acyclic(const Context& ctx, const std::string& file, const Budget& budget) {
  const NamedQuiver nq = ctx.read_quiver(file);
  const SearchOutcome o = find_acyclic_seed(nq.quiver, budget);
  json j = outcome_json(o);
  j["command"] = "find-acyclic";
  ctx.emit(j, outcome_text(o));
  return verdict_status(o.verdict);
}

int cmd_covering_pairs(const Context& ctx, const std::string& file, bool search, const Budget& budget) {
  const NamedQuiver nq = ctx.read_quiver(file);
  if (search) {
    const SearchOutcome o = find_covering_pair_seed(nq.quiver, budget);
    json j = outcome_json(o);
    j["command"] = "covering-pairs";
    ctx.emit(j, outcome_text(o));
    return verdict_status(o.verdict);
  }
  const auto pairs = covering_pairs(nq.quiver);
  json list = json::array();
  std::ostringstream text;
  for (const auto& p : pairs) {
    list.push_back({p.source + 1, p.target + 1});
    text << "pair " << vertex_name(p.source) << "," << vertex_name(p.target) << "\n";
  }
  if (pairs.empty()) text << "no covering pairs\n";
  ctx.emit({{"command", "covering-pairs"}, {"pairs", list}}, text.str());
  return kSuccess;
}

int failure_status(const FailureReport& f) {
  return f.kind == FailureKind::NoCoveringPairInCompleteClass ? kNegative : kIndeterminate;
}

int report_failure(const Context& ctx, const char* command, const FailureReport& f, std::size_t nodes) {
  std::ostringstream text;
  text << "failure " << failure_name(f.kind) << "\nwhere " << f.where << "\nnodes " << nodes << "\n";
  for (const auto& w : f.witness) text << "witness " << w << "\n";
  ctx.emit({{"command", command},
            {"status", "failure"},
            {"kind", failure_name(f.kind)},
            {"where", f.where},
            {"witness", f.witness},
            {"nodes", nodes}},
           text.str());
  return failure_status(f);
}

int cmd_banff(const Context& ctx, const std::string& file, const std::string& stop, const Budget& budget,
              bool seed_level, bool reduced, std::uint64_t strategy, const std::string& out_path) {
  const NamedQuiver nq = ctx.read_quiver(file);
  if (reduced) {
    if (seed_level) throw UsageError("--reduced works at the quiver level only");
    KnowledgeBase kb;
    const ReducedResult r = run_banff_reduced(nq.quiver, budget, kb);
    if (!r.success) return report_failure(ctx, "banff", *r.failure, r.nodes);
    const std::string tree = describe(*r.tree);
    ctx.emit({{"command", "banff"}, {"status", "success"}, {"reduced", true}, {"nodes", r.nodes}, {"tree", tree}},
             "reduced banff: success\n" + tree);
    return kSuccess;
  }
  BanffOptions options;
  if (stop == "acyclic")
    options.stop = StopPredicate::Acyclic;
  else if (stop == "isolated")
    options.stop = StopPredicate::Isolated;
  else
    throw UsageError("--stop must be acyclic or isolated");
  options.budget = budget;
  options.seed_level = seed_level;
  options.strategy_seed = strategy;
  const BanffResult r = seed_level ? run_banff(initial_seed(nq.quiver), options) : run_banff(nq.quiver, options);
  if (!r.ok()) return report_failure(ctx, "banff", *r.failure, r.nodes);
  const std::string cert = serialize_certificate(*r.certificate);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot write '" + out_path + "'");
    f << cert;
  }
  std::ostringstream summary;
  summary << "# banff: success, " << r.certificate->branch_count() << " branches, "
          << r.certificate->leaf_count() << " leaves, " << r.nodes << " nodes\n";
  ctx.emit({{"command", "banff"},
            {"status", "success"},
            {"branches", r.certificate->branch_count()},
            {"leaves", r.certificate->leaf_count()},
            {"nodes", r.nodes},
            {"certificate", cert}},
           out_path.empty() ? cert : summary.str());
  return kSuccess;
}

int cmd_banff_verify(const Context& ctx, const std::string& file) {
  const Verification v = verify_certificate_text(ctx.read_input(file));
  std::ostringstream text;
  if (v.accepted) {
    text << "Accept\n";
  } else {
    text << "Reject " << reject_name(v.reason);
    if (v.node >= 0) text << " node " << v.node;
    text << ": " << v.detail << "\n";
  }
  json j{{"command", "banff-verify"}, {"accepted", v.accepted}};
  if (!v.accepted) {
    j["reason"] = reject_name(v.reason);
    j["node"] = v.node;
    j["detail"] = v.detail;
  }
  ctx.emit(j, text.str());
  if (v.accepted) return kSuccess;
  return v.reason == RejectReason::Malformed ? kUsage : kNegative;
}

int cmd_surface(const Context& ctx, const std::string& file, bool classify) {
  const SurfaceDescriptor d = parse_surface(ctx.read_input(file));
  const auto violations = validate_surface(d);
  if (!violations.empty()) {
    std::ostringstream text;
    for (const auto& v : violations) text << "violation " << v << "\n";
    ctx.emit({{"command", classify ? "surface classify" : "surface rank"}, {"valid", false}, {"violations", violations}},
             text.str());
    return kUsage;
  }
  if (!classify) {
    const int rank = surface_rank(d);
    ctx.emit({{"command", "surface rank"}, {"valid", true}, {"rank", rank}}, "rank " + std::to_string(rank) + "\n");
    return kSuccess;
  }
  const SurfaceClassification c = classify_surface(d);
  std::ostringstream text;
  text << "verdict " << acyclicity_name(c.verdict) << "\n";
  json comps = json::array();
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    text << "component " << i + 1 << " " << acyclicity_name(c.components[i].verdict) << " "
         << c.components[i].reason << "\n";
    comps.push_back({{"verdict", acyclicity_name(c.components[i].verdict)}, {"reason", c.components[i].reason}});
  }
  ctx.emit({{"command", "surface classify"}, {"valid", true}, {"verdict", acyclicity_name(c.verdict)}, {"components", comps}},
           text.str());
  return c.verdict == LocalAcyclicity::NotLocallyAcyclic ? kNegative : kSuccess;
}

int cmd_catalog(const Context& ctx, const std::string& name, bool list, const std::string& out_path,
                bool surface) {
  if (list || name.empty()) {
    std::ostringstream text;
    json entries = json::array();
    for (const auto& e : catalog()) {
      text << e.name << "\t" << e.quiver.size() << " vertices\t" << e.description << "\n";
      entries.push_back({{"name", e.name}, {"vertices", e.quiver.size()}, {"description", e.description},
                         {"surface", e.surface ? e.surface->name : ""}});
    }
    ctx.emit({{"command", "catalog"}, {"entries", entries}}, text.str());
    return kSuccess;
  }
  const CatalogEntry& e = catalog_entry(name);
  std::string text;
  if (surface) {
    if (!e.surface) throw UsageError("catalog entry '" + name + "' has no surface");
    text = to_surface_text(*e.surface);
  } else {
    text = to_qvr(e.quiver, e.name);
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot write '" + out_path + "'");
    f << text;
  }
  if (ctx.json_output) {
    json j{{"command", "catalog"}, {"quiver", quiver_json(e.quiver, e.name)}};
    if (e.surface) j["surface"] = to_surface_text(*e.surface);
    ctx.out << j.dump(2) << "\n";
  } else if (out_path.empty()) {
    ctx.out << text;
  }
  return kSuccess;
}

int cmd_present(const Context& ctx, const std::string& file) {
  const NamedQuiver nq = ctx.read_quiver(file);
  if (!is_acyclic(nq.quiver)) {
    ctx.err << "present: the quiver has a directed cycle among mutable vertices\n";
    return kUsage;
  }
  const Seed s = initial_seed(nq.quiver);
  const Presentation p = acyclic_presentation(s);
  const auto gens = p.generators();
  const auto rels = relation_lines(p);
  std::ostringstream text;
  text << "generators";
  for (const auto& g : gens) text << " " << g;
  text << "\n";
  for (const auto& r : rels) text << "relation " << r << "\n";
  ctx.emit({{"command", "present"}, {"generators", gens}, {"relations", rels}}, text.str());
  return kSuccess;
}

int cmd_jacobian(const Context& ctx, const std::string& file, const std::string& frozen) {
  const NamedQuiver nq = ctx.read_quiver(file);
  if (!is_isolated(nq.quiver)) {
    ctx.err << "jacobian-check: the quiver is not isolated\n";
    return kUsage;
  }
  const JacobianResult r = isolated_jacobian_check(nq.quiver, parse_assignment(frozen, nq.quiver.size()));
  std::ostringstream text;
  text << "status " << jacobian_name(r.status) << "\n";
  if (r.status != JacobianStatus::Vacuous)
    text << "rank_phi " << r.phi_rank << "\nrank_exchange " << r.exchange_rank << "\n";
  ctx.emit({{"command", "jacobian-check"},
            {"status", jacobian_name(r.status)},
            {"phi_rank", r.phi_rank},
            {"exchange_rank", r.exchange_rank}},
           text.str());
  return r.status == JacobianStatus::Mismatch ? kNegative : kSuccess;
}

int cmd_degenerate(const Context& ctx, const std::string& file, int depth, const Budget& budget) {
  const NamedQuiver nq = ctx.read_quiver(file);
  const DegenerateHom h = build_degenerate_hom(nq.quiver, depth, budget);
  std::ostringstream text;
  text << "status " << degenerate_name(h.status) << "\n";
  json j{{"command", "degenerate-hom"},
         {"status", degenerate_name(h.status)},
         {"class_size", h.class_size},
         {"class_complete", h.class_complete}};
  if (h.pair) {
    text << "pair " << vertex_name(h.pair->source) << "," << vertex_name(h.pair->target) << " after path "
         << path_text(h.pair_path) << "\n";
    j["pair"] = {h.pair->source + 1, h.pair->target + 1};
    j["pair_path"] = path_json(h.pair_path);
  } else {
    text << "values";
    for (int v : h.values) text << " " << v;
    text << "\npartners";
    for (int v : h.partner_values) text << " " << v;
    text << "\ndepth " << h.depth << "\nrelations_checked " << h.relations_checked << "\n";
    j["values"] = h.values;
    j["partner_values"] = h.partner_values;
    j["depth"] = h.depth;
    j["relations_checked"] = h.relations_checked;
  }
  if (!h.detail.empty()) {
    text << "detail " << h.detail << "\n";
    j["detail"] = h.detail;
  }
  ctx.emit(j, text.str());
  switch (h.status) {
    case DegenerateStatus::Verified: return kSuccess;
    case DegenerateStatus::Indeterminate: return kIndeterminate;
    default: return kNegative;
  }
}

int cmd_evaluate(const Context& ctx, const std::string& file, const std::string& start_arg,
                 const std::string& path_arg) {
  const NamedQuiver nq = ctx.read_quiver(file);
  const Index n = nq.quiver.size();
  const auto assigned = parse_assignment(start_arg, n);
  std::vector<BigRational> start;
  for (Index v = 0; v < n; ++v) {
    auto it = assigned.find(v);
    if (it == assigned.end()) throw UsageError("--start has no value for vertex " + vertex_name(v));
    start.push_back(it->second);
  }
  const auto path = parse_vertices(path_arg, n);
  std::ostringstream text;
  json steps = json::array();
  try {
    const auto values = evaluate_cluster_point(nq.quiver, start, path);
    for (std::size_t s = 0; s < values.size(); ++s) {
      text << "step " << s + 1 << " vertex " << vertex_name(path[s]) << " value "
           << rational_text(values[s][static_cast<std::size_t>(path[s])]) << " :";
      json row = json::array();
      for (const auto& x : values[s]) {
        text << " " << rational_text(x);
        row.push_back(rational_text(x));
      }
      text << "\n";
      steps.push_back({{"vertex", path[s] + 1}, {"values", row}});
    }
  } catch (const EvaluationError& e) {
    ctx.emit({{"command", "evaluate"}, {"error", e.what()}, {"step", e.step() + 1}, {"steps", steps}},
             std::string("error ") + e.what() + "\n");
    return kNegative;
  }
  ctx.emit({{"command", "evaluate"}, {"steps", steps}}, text.str());
  return kSuccess;
}

int cmd_laurent_check(const Context& ctx, const std::string& file, int depth, bool enumerate) {
  const NamedQuiver nq = ctx.read_quiver(file);
  std::size_t mutations = 0, violations = 0;
  std::string first;
  std::vector<Index> path;
  std::function<void(const Seed&)> walk = [&](const Seed& s) {
    if (static_cast<int>(path.size()) == depth) return;
    for (Index k : s.quiver.mutable_vertices()) {
      ++mutations;
      path.push_back(k);
      try {
        walk(mutate_seed(s, k));
      } catch (const LaurentViolation& e) {
        if (violations++ == 0) first = "path " + path_text(path) + ": " + e.what();
      }
      path.pop_back();
    }
  };
  walk(initial_seed(nq.quiver));
  std::ostringstream text;
  text << "depth " << depth << "\nmutations " << mutations << "\nviolations " << violations << "\n";
  if (violations) text << "first " << first << "\n";
  json j{{"command", "laurent-check"}, {"depth", depth}, {"mutations", mutations}, {"violations", violations}};
  if (enumerate && violations == 0) {
    const ClusterVariables vars = enumerate_cluster_variables(initial_seed(nq.quiver), depth);
    text << "variables " << vars.variables.size() << "\ncomplete " << (vars.complete ? "yes" : "no") << "\n";
    json list = json::array();
    for (const auto& p : vars.variables) {
      text << "variable " << to_string(p) << "\n";
      list.push_back(to_string(p));
    }
    j["variables"] = list;
    j["complete"] = vars.complete;
  }
  ctx.emit(j, text.str());
  return violations ? kNegative : kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"clusterscope: exact tools for skew-symmetric cluster algebras", "clusterscope"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{in, out, err};
  app.add_flag("--json", ctx.json_output, "Structured output");
  app.add_option("--threads", ctx.threads, "Worker threads (default: CLUSTERSCOPE_THREADS or 1)");

  std::string file;
  std::size_t class_budget = 10000, node_budget = 100000;
  int depth = 8;
  std::function<int()> action;

  auto input = [&](CLI::App* sub) { sub->add_option("file", file, "Input file (default: stdin)"); };
  auto budgets = [&](CLI::App* sub) {
    sub->add_option("--class-budget", class_budget, "Members per class exploration")->capture_default_str();
    sub->add_option("--depth-budget", depth, "Breadth-first radius")->capture_default_str();
    sub->add_option("--node-budget", node_budget, "Members over a whole run")->capture_default_str();
  };
  auto budget = [&] { return make_budget(class_budget, depth, node_budget, ctx.threads); };

  std::string path_arg;
  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate along a path and print the quiver");
  input(mutate_cmd);
  mutate_cmd->add_option("--path", path_arg, "Comma-separated 1-based vertices")->required();
  mutate_cmd->callback([&] { action = [&] { return cmd_mutate(ctx, file, path_arg); }; });

  bool list = false;
  auto* class_cmd = app.add_subcommand("class", "Enumerate the mutation class");
  input(class_cmd);
  class_cmd->add_option("--budget", class_budget, "Maximum members")->capture_default_str();
  class_cmd->add_option("--depth", depth, "Maximum depth")->capture_default_str();
  class_cmd->add_flag("--list", list, "Print every member");
  class_cmd->callback([&] { action = [&] { return cmd_class(ctx, file, budget(), list); }; });

  auto* acyclic_cmd = app.add_subcommand("find-acyclic", "Search the class for an acyclic quiver");
  input(acyclic_cmd);
  acyclic_cmd->add_option("--depth", depth, "Maximum depth")->capture_default_str();
  acyclic_cmd->add_option("--budget", class_budget, "Maximum members")->capture_default_str();
  acyclic_cmd->callback([&] { action = [&] { return cmd_find_acyclic(ctx, file, budget()); }; });

  bool search = false;
  auto* pairs_cmd = app.add_subcommand("covering-pairs", "List covering pairs");
  input(pairs_cmd);
  pairs_cmd->add_flag("--search", search, "Search the class for a quiver with a covering pair");
  pairs_cmd->add_option("--depth", depth, "Maximum depth for --search")->capture_default_str();
  pairs_cmd->add_option("--budget", class_budget, "Maximum members for --search")->capture_default_str();
  pairs_cmd->callback([&] { action = [&] { return cmd_covering_pairs(ctx, file, search, budget()); }; });

  std::string stop = "acyclic", out_path;
  bool seed_level = false, reduced = false;
  std::uint64_t strategy = 0;
  auto* banff_cmd = app.add_subcommand("banff", "Run the Banff algorithm and print a certificate");
  input(banff_cmd);
  budgets(banff_cmd);
  banff_cmd->add_option("--stop", stop, "acyclic or isolated")->capture_default_str();
  banff_cmd->add_flag("--seed-level", seed_level, "Carry cluster variables");
  banff_cmd->add_flag("--reduced", reduced, "Delete vertices instead of freezing");
  banff_cmd->add_option("--strategy-seed", strategy, "0: canonical pair order; else shuffled")->capture_default_str();
  banff_cmd->add_option("--out", out_path, "Write the certificate here");
  banff_cmd->callback([&] {
    action = [&] { return cmd_banff(ctx, file, stop, budget(), seed_level, reduced, strategy, out_path); };
  });

  auto* verify_cmd = app.add_subcommand("banff-verify", "Check a certificate");
  input(verify_cmd);
  verify_cmd->callback([&] { action = [&] { return cmd_banff_verify(ctx, file); }; });

  auto* surface_cmd = app.add_subcommand("surface", "Marked-surface descriptors");
  surface_cmd->require_subcommand(1);
  auto* rank_cmd = surface_cmd->add_subcommand("rank", "Number of tagged arcs");
  input(rank_cmd);
  rank_cmd->callback([&] { action = [&] { return cmd_surface(ctx, file, false); }; });
  auto* classify_cmd = surface_cmd->add_subcommand("classify", "Local acyclicity by the classification");
  input(classify_cmd);
  classify_cmd->callback([&] { action = [&] { return cmd_surface(ctx, file, true); }; });

  std::string name;
  bool list_catalog = false, want_surface = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "Print a fixture quiver");
  catalog_cmd->add_option("name", name, "Catalog name");
  catalog_cmd->add_flag("--list", list_catalog, "List names");
  catalog_cmd->add_flag("--surface", want_surface, "Print the surface descriptor instead");
  catalog_cmd->add_option("--out", out_path, "Write to a file");
  catalog_cmd->callback([&] {
    action = [&] { return cmd_catalog(ctx, name, list_catalog, out_path, want_surface); };
  });

  auto* present_cmd = app.add_subcommand("present", "Generators and relations of an acyclic seed");
  input(present_cmd);
  present_cmd->callback([&] { action = [&] { return cmd_present(ctx, file); }; });

  std::string frozen_arg;
  auto* jacobian_cmd = app.add_subcommand("jacobian-check", "Jacobian rank at a point of an isolated seed");
  input(jacobian_cmd);
  jacobian_cmd->add_option("--frozen", frozen_arg, "v=r,... for each frozen vertex");
  jacobian_cmd->callback([&] { action = [&] { return cmd_jacobian(ctx, file, frozen_arg); }; });

  int hom_depth = 6;
  auto* hom_cmd = app.add_subcommand("degenerate-hom", "Build and check the degenerate homomorphism");
  input(hom_cmd);
  hom_cmd->add_option("--depth", hom_depth, "Relation check depth")->capture_default_str();
  hom_cmd->add_option("--budget", class_budget, "Class budget")->capture_default_str();
  hom_cmd->callback([&] {
    action = [&] { return cmd_degenerate(ctx, file, hom_depth, budget()); };
  });

  std::string start_arg;
  auto* eval_cmd = app.add_subcommand("evaluate", "Exact exchange recurrence at a point");
  input(eval_cmd);
  eval_cmd->add_option("--start", start_arg, "v=r,... for every vertex")->required();
  eval_cmd->add_option("--path", path_arg, "Comma-separated 1-based vertices");
  eval_cmd->callback([&] { action = [&] { return cmd_evaluate(ctx, file, start_arg, path_arg); }; });

  int laurent_depth = 4;
  bool enumerate = false;
  auto* laurent_cmd = app.add_subcommand("laurent-check", "Check exact divisions along all short paths");
  input(laurent_cmd);
  laurent_cmd->add_option("--depth", laurent_depth, "Path length")->capture_default_str();
  laurent_cmd->add_flag("--enumerate", enumerate, "Also list the cluster variables found");
  laurent_cmd->callback([&] {
    action = [&] { return cmd_laurent_check(ctx, file, laurent_depth, enumerate); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cin, std::cout, std::cerr);
}

}  // namespace clusterscope
