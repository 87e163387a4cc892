#include "clusterscope/banff.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace clusterscope {

const char* stop_name(StopPredicate s) { return s == StopPredicate::Acyclic ? "acyclic" : "isolated"; }

bool satisfies(const IceQuiver& q, StopPredicate s) {
  return s == StopPredicate::Acyclic ? is_acyclic(q) : is_isolated(q);
}

const char* failure_name(FailureKind k) {
  return k == FailureKind::NoCoveringPairInCompleteClass ? "NoCoveringPairInCompleteClass"
                                                          : "BudgetExhausted";
}

std::size_t BanffCertificate::branch_count() const {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const auto& n) {
    return n.kind == CertificateNode::Kind::Branch;
  }));
}

std::size_t BanffCertificate::leaf_count() const { return nodes.size() - branch_count(); }

namespace {

struct Subtree {
  CertificateNode::Kind kind = CertificateNode::Kind::Leaf;
  std::vector<Index> path;
  std::optional<Index> freeze;
  CoveringPair pair;
  Seed state;
  std::vector<Subtree> children;
};

struct Candidate {
  const ClassMember* member;
  CoveringPair pair;
};

std::vector<std::string> frontier_summary(const MutationClass& cls) {
  return {"members explored: " + std::to_string(cls.size()),
          "depth reached: " + std::to_string(cls.frontier_depth)};
}

// Shared by both Banff variants: budget accounting, the failure cache and
// candidate ordering.
class SearchState {
 public:
  SearchState(const Budget& budget, std::uint64_t strategy_seed)
      : budget_(budget), rng_(strategy_seed), shuffle_(strategy_seed != 0) {}

  std::size_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

  FailureReport out_of_nodes(const std::string& where) const {
    return {FailureKind::BudgetExhausted, where,
            {"node budget " + std::to_string(budget_.node_budget) + " spent"}};
  }

  // Explores the class of `q` on what is left of the node budget.
  MutationClass explore(const IceQuiver& q, const MemberVisitor& visit) {
    Budget b = budget_;
    b.class_budget = std::min(b.class_budget, budget_.node_budget - nodes_);
    MutationClass cls = explore_class(q, b, ClassKey::MutablePart, visit);
    nodes_ += cls.size();
    if (nodes_ >= budget_.node_budget && !cls.complete) exhausted_ = true;
    return cls;
  }

  std::vector<Candidate> candidates(const MutationClass& cls) {
    std::vector<Candidate> out;
    for (const auto& m : cls.members)
      for (const auto& p : covering_pairs(m.quiver)) out.push_back({&m, p});
    if (shuffle_) std::shuffle(out.begin(), out.end(), rng_);
    return out;
  }

  const FailureReport* cached(const std::string& key) const {
    auto it = failed_.find(key);
    return it == failed_.end() ? nullptr : &it->second;
  }

  FailureReport remember(const std::string& key, FailureReport f) {
    if (!exhausted_) failed_.emplace(key, f);
    return f;
  }

  bool budget_left() const { return !exhausted_ && nodes_ < budget_.node_budget; }

 private:
  Budget budget_;
  std::mt19937_64 rng_;
  bool shuffle_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::map<std::string, FailureReport> failed_;
};

class BanffSolver {
 public:
  explicit BanffSolver(const BanffOptions& options)
      : options_(options), state_(options.budget, options.strategy_seed) {}

  std::variant<Subtree, FailureReport> solve(const Seed& entry, const std::string& where) {
    if (!state_.budget_left()) return state_.out_of_nodes(where);
    const std::string key = mutable_canonical_form(entry.quiver);
    if (const FailureReport* f = state_.cached(key)) return *f;

    std::optional<ClassMember> hit;
    const MutationClass cls = state_.explore(entry.quiver, [&](const ClassMember& m) {
      if (!satisfies(m.quiver, options_.stop)) return false;
      hit = m;
      return true;
    });
    if (hit) {
      Subtree leaf;
      leaf.path = hit->path;
      leaf.state = advance(entry, hit->path);
      return leaf;
    }

    const auto candidates = state_.candidates(cls);
    if (candidates.empty()) {
      if (cls.complete)
        return state_.remember(key, {FailureKind::NoCoveringPairInCompleteClass, where, cls.forms()});
      if (state_.exhausted()) return state_.out_of_nodes(where);
      return state_.remember(key, {FailureKind::BudgetExhausted, where, frontier_summary(cls)});
    }

    std::optional<FailureReport> first_failure;
    for (const Candidate& c : candidates) {
      Subtree branch;
      branch.kind = CertificateNode::Kind::Branch;
      branch.path = c.member->path;
      branch.pair = c.pair;
      branch.state = advance(entry, c.member->path);
      bool ok = true;
      for (Index v : {c.pair.source, c.pair.target}) {
        Seed child = branch.state;
        child.quiver = freeze(branch.state.quiver, {v});
        child.path.clear();
        auto result = solve(child, where + "/freeze " + vertex_name(v));
        if (auto* f = std::get_if<FailureReport>(&result)) {
          if (!first_failure) first_failure = *f;
          ok = false;
          break;
        }
        Subtree sub = std::get<Subtree>(std::move(result));
        sub.freeze = v;
        branch.children.push_back(std::move(sub));
      }
      if (ok) return branch;
      if (state_.exhausted()) return state_.out_of_nodes(where);
    }
    if (!cls.complete)
      return state_.remember(key, {FailureKind::BudgetExhausted, where, frontier_summary(cls)});
    return state_.remember(key, *first_failure);
  }

  std::size_t nodes() const { return state_.nodes(); }

 private:
  Seed advance(const Seed& entry, const std::vector<Index>& path) const {
    Seed s = entry;
    if (options_.seed_level) {
      for (Index k : path) s = mutate_seed(s, k);
      s.path = path;
    } else {
      s.quiver = mutate_along(entry.quiver, path);
      s.path = path;
    }
    return s;
  }

  BanffOptions options_;
  SearchState state_;
};

BanffCertificate flatten(const IceQuiver& root, StopPredicate stop, Subtree tree) {
  BanffCertificate cert;
  cert.stop = stop;
  cert.root = root;
  std::deque<std::pair<Subtree*, int>> todo{{&tree, -1}};
  while (!todo.empty()) {
    auto [t, parent] = todo.front();
    todo.pop_front();
    CertificateNode node;
    node.kind = t->kind;
    node.id = static_cast<int>(cert.nodes.size());
    node.parent = parent;
    node.path = t->path;
    node.freeze = t->freeze;
    node.pair = t->pair;
    node.quiver = t->state.quiver;
    node.cluster = t->state.cluster;
    if (parent >= 0) cert.nodes[static_cast<std::size_t>(parent)].children.push_back(node.id);
    cert.nodes.push_back(std::move(node));
    for (auto& c : t->children) todo.emplace_back(&c, cert.nodes.back().id);
  }
  return cert;
}

}  // namespace

BanffResult run_banff(const Seed& s, const BanffOptions& options) {
  if (options.budget.class_budget == 0 || options.budget.node_budget == 0 || options.budget.depth < 0)
    throw std::invalid_argument("run_banff: budgets must be positive");
  BanffSolver solver(options);
  Seed entry = s;
  if (!options.seed_level) entry.cluster.clear();
  entry.path.clear();
  auto result = solver.solve(entry, "root");
  BanffResult out;
  out.nodes = solver.nodes();
  if (auto* f = std::get_if<FailureReport>(&result)) {
    out.failure = std::move(*f);
  } else {
    out.certificate = flatten(s.quiver, options.stop, std::get<Subtree>(std::move(result)));
  }
  return out;
}

BanffResult run_banff(const IceQuiver& q, const BanffOptions& options) {
  BanffOptions o = options;
  o.seed_level = false;
  return run_banff(Seed{q, {}, {}}, o);
}

namespace {

class ReducedSolver {
 public:
  ReducedSolver(const Budget& budget, KnowledgeBase& kb) : state_(budget, 0), kb_(kb) {}

  std::variant<ReducedNode, FailureReport> solve(const IceQuiver& entry, const std::string& where) {
    if (!state_.budget_left()) return state_.out_of_nodes(where);
    const std::string key = mutable_canonical_form(entry);
    if (const FailureReport* f = state_.cached(key)) return *f;

    std::optional<ClassMember> hit;
    std::string reason;
    const MutationClass cls = state_.explore(entry, [&](const ClassMember& m) {
      if (is_acyclic(m.quiver)) {
        reason = "acyclic";
      } else if (kb_.contains(m.form)) {
        reason = "known";
      } else {
        return false;
      }
      hit = m;
      return true;
    });
    if (hit) {
      ReducedNode leaf;
      leaf.path = hit->path;
      leaf.quiver = hit->quiver;
      leaf.reason = reason;
      learned_.push_back(key);
      return leaf;
    }

    const auto candidates = state_.candidates(cls);
    if (candidates.empty()) {
      if (cls.complete)
        return state_.remember(key, {FailureKind::NoCoveringPairInCompleteClass, where, cls.forms()});
      if (state_.exhausted()) return state_.out_of_nodes(where);
      return state_.remember(key, {FailureKind::BudgetExhausted, where, frontier_summary(cls)});
    }

    std::optional<FailureReport> first_failure;
    for (const Candidate& c : candidates) {
      ReducedNode branch;
      branch.path = c.member->path;
      branch.quiver = c.member->quiver;
      branch.pair = c.pair;
      bool ok = true;
      for (Index v : {c.pair.source, c.pair.target}) {
        const IceQuiver child = delete_vertices(branch.quiver, {v}).quiver;
        auto result = solve(child, where + "/delete " + vertex_name(v));
        if (auto* f = std::get_if<FailureReport>(&result)) {
          if (!first_failure) first_failure = *f;
          ok = false;
          break;
        }
        ReducedNode sub = std::get<ReducedNode>(std::move(result));
        sub.deleted = v;
        branch.children.push_back(std::move(sub));
      }
      if (ok) {
        learned_.push_back(key);
        return branch;
      }
      if (state_.exhausted()) return state_.out_of_nodes(where);
    }
    if (!cls.complete)
      return state_.remember(key, {FailureKind::BudgetExhausted, where, frontier_summary(cls)});
    return state_.remember(key, *first_failure);
  }

  void commit() {
    for (const auto& f : learned_) kb_.add(f);
  }

  std::size_t nodes() const { return state_.nodes(); }

 private:
  SearchState state_;
  KnowledgeBase& kb_;
  std::vector<std::string> learned_;
};

void describe_into(const ReducedNode& n, int indent, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ');
  if (n.deleted) out << "delete " << vertex_name(*n.deleted) << ": ";
  out << "path=";
  for (std::size_t i = 0; i < n.path.size(); ++i) out << (i ? "," : "") << vertex_name(n.path[i]);
  if (n.pair) {
    out << " branch pair=" << vertex_name(n.pair->source) << "," << vertex_name(n.pair->target)
        << "\n";
    for (const auto& c : n.children) describe_into(c, indent + 1, out);
  } else {
    out << " leaf " << n.reason << "\n";
  }
}

}  // namespace

ReducedResult run_banff_reduced(const IceQuiver& q, const Budget& budget, KnowledgeBase& kb) {
  if (!q.frozen_vertices().empty())
    throw std::domain_error("run_banff_reduced: quiver has frozen vertices");
  ReducedSolver solver(budget, kb);
  auto result = solver.solve(q, "root");
  ReducedResult out;
  out.nodes = solver.nodes();
  if (auto* f = std::get_if<FailureReport>(&result)) {
    out.failure = std::move(*f);
    return out;
  }
  solver.commit();
  out.success = true;
  out.tree = std::get<ReducedNode>(std::move(result));
  return out;
}

std::string describe(const ReducedNode& tree) {
  std::ostringstream out;
  describe_into(tree, 0, out);
  return out.str();
}

}  // namespace clusterscope
