#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clusterscope/explore.hpp"
#include "clusterscope/laurent.hpp"
#include "clusterscope/quiver.hpp"
#include "clusterscope/seed.hpp"

namespace clusterscope {

enum class StopPredicate { Acyclic, Isolated };

const char* stop_name(StopPredicate s);
bool satisfies(const IceQuiver& q, StopPredicate s);

/// One node of a cover certificate. A node's entry state is its parent's
/// quiver with `freeze` frozen (the root's entry state is the root quiver);
/// mutating the entry state along `path` gives `quiver`.
struct CertificateNode {
  enum class Kind { Branch, Leaf };
  Kind kind = Kind::Leaf;
  int id = 0;
  int parent = -1;
  std::vector<Index> path;
  std::optional<Index> freeze;
  /// Branch only: the covering pair split on; children freeze its source,
  /// then its target.
  CoveringPair pair;
  IceQuiver quiver;
  /// Seed-level runs only.
  std::vector<LaurentPoly> cluster;
  std::vector<int> children;
};

struct BanffCertificate {
  StopPredicate stop = StopPredicate::Acyclic;
  IceQuiver root;
  /// Breadth-first order; nodes[i].id == i and nodes[0] is the root node.
  std::vector<CertificateNode> nodes;

  bool seed_level() const { return !nodes.empty() && !nodes[0].cluster.empty(); }
  std::size_t branch_count() const;
  std::size_t leaf_count() const;
};

enum class FailureKind { NoCoveringPairInCompleteClass, BudgetExhausted };

const char* failure_name(FailureKind k);

struct FailureReport {
  FailureKind kind = FailureKind::BudgetExhausted;
  /// Location, e.g. "root" or "root/freeze 4/freeze 1".
  std::string where;
  /// The complete class (sorted canonical forms) for NoCoveringPair, or a
  /// short frontier summary for budget exhaustion.
  std::vector<std::string> witness;
};

struct BanffOptions {
  StopPredicate stop = StopPredicate::Acyclic;
  Budget budget;
  /// Carry Laurent clusters through the tree.
  bool seed_level = false;
  /// 0 tries covering pairs in canonical order; any other value shuffles the
  /// candidate order deterministically.
  std::uint64_t strategy_seed = 0;
};

struct BanffResult {
  std::optional<BanffCertificate> certificate;
  std::optional<FailureReport> failure;
  /// Class members visited over the whole run.
  std::size_t nodes = 0;

  bool ok() const { return certificate.has_value(); }
};

BanffResult run_banff(const Seed& s, const BanffOptions& options);
BanffResult run_banff(const IceQuiver& q, const BanffOptions& options);

/// Mutable canonical forms known to be locally acyclic.
class KnowledgeBase {
 public:
  bool contains(const std::string& form) const { return forms_.count(form) > 0; }
  void add(const std::string& form) { forms_.insert(form); }
  std::size_t size() const { return forms_.size(); }

 private:
  std::set<std::string> forms_;
};

struct ReducedNode {
  std::vector<Index> path;
  IceQuiver quiver;
  /// Set on branch nodes; children delete its source, then its target.
  std::optional<CoveringPair> pair;
  /// For a child: the vertex deleted from the parent's quiver.
  std::optional<Index> deleted;
  /// Leaf reason: "acyclic" or "known".
  std::string reason;
  std::vector<ReducedNode> children;
};

struct ReducedResult {
  bool success = false;
  std::optional<ReducedNode> tree;
  std::optional<FailureReport> failure;
  std::size_t nodes = 0;
};

/// Banff with vertex deletion instead of freezing. A node stops when its
/// class meets an acyclic quiver or a form in `kb`; on success every node
/// form is added to `kb`. Throws std::domain_error if `q` has frozen vertices.
ReducedResult run_banff_reduced(const IceQuiver& q, const Budget& budget, KnowledgeBase& kb);

std::string describe(const ReducedNode& tree);

}  // namespace clusterscope
