#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clusterscope/quiver.hpp"

namespace clusterscope {

/// Search limits. `class_budget` caps the members of one mutation-class
/// exploration, `depth` its breadth-first radius, `node_budget` the total
/// members visited over a whole Banff run.
struct Budget {
  std::size_t class_budget = 10000;
  int depth = 8;
  std::size_t node_budget = 100000;
  /// Worker threads for frontier expansion; 0 reads CLUSTERSCOPE_THREADS.
  unsigned threads = 0;
};

/// Thread count from `requested`, falling back to CLUSTERSCOPE_THREADS, then 1.
unsigned resolve_threads(unsigned requested);

enum class ClassKey {
  /// Identify quivers up to frozen-respecting isomorphism.
  Full,
  /// Identify quivers whose mutable subquivers are isomorphic. Sound for
  /// anything that only reads the mutable part.
  MutablePart,
};

struct ClassMember {
  std::string form;
  IceQuiver quiver;
  /// A shortest mutation path from the explored root.
  std::vector<Index> path;
};

struct MutationClass {
  /// Breadth-first discovery order; members[0] is the root.
  std::vector<ClassMember> members;
  /// Every mutation of every member is already a member.
  bool complete = false;
  /// Deepest level whose members were all recorded.
  int frontier_depth = 0;

  std::size_t size() const { return members.size(); }
  /// Canonical forms, sorted.
  std::vector<std::string> forms() const;
};

/// Called on each new member in discovery order; return true to stop.
using MemberVisitor = std::function<bool(const ClassMember&)>;

/// Breadth-first closure under single mutations. Children of a member are
/// generated by mutating at its mutable vertices in descending index order.
/// When the visitor stops the search, `complete` is false.
MutationClass explore_class(const IceQuiver& q, const Budget& budget, ClassKey key,
                            const MemberVisitor& visit = {});

MutationClass mutation_class(const IceQuiver& q, const Budget& budget);

enum class Verdict { Found, ProvenAbsent, BudgetExhausted };

struct SearchOutcome {
  Verdict verdict = Verdict::BudgetExhausted;
  std::vector<Index> path;
  /// The quiver at the end of `path` when found.
  std::optional<IceQuiver> quiver;
  std::optional<CoveringPair> pair;
  std::size_t nodes = 0;
  int depth = 0;
};

/// Shortest path to a member satisfying `accept`.
SearchOutcome find_seed(const IceQuiver& q, const std::function<bool(const IceQuiver&)>& accept,
                        const Budget& budget);

SearchOutcome find_acyclic_seed(const IceQuiver& q, const Budget& budget);
SearchOutcome find_isolated_seed(const IceQuiver& q, const Budget& budget);

/// Shortest path to a member with a covering pair; `pair` is its first one.
SearchOutcome find_covering_pair_seed(const IceQuiver& q, const Budget& budget);

const char* verdict_name(Verdict v);

}  // namespace clusterscope
