#include "clusterscope/explore.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <unordered_set>

namespace clusterscope {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CLUSTERSCOPE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0 && v <= 256) return static_cast<unsigned>(v);
  }
  return 1;
}

std::vector<std::string> MutationClass::forms() const {
  std::vector<std::string> out;
  for (const auto& m : members) out.push_back(m.form);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string key_of(const IceQuiver& q, ClassKey key) {
  return key == ClassKey::Full ? canonical_form(q) : mutable_canonical_form(q);
}

// Children of every frontier member, computed in parallel but stored by
// position so the merge order never depends on scheduling.
std::vector<std::vector<ClassMember>> expand(const std::vector<ClassMember>& frontier,
                                             ClassKey key, unsigned threads) {
  std::vector<std::vector<ClassMember>> out(frontier.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const ClassMember& m = frontier[i];
      auto vertices = m.quiver.mutable_vertices();
      std::reverse(vertices.begin(), vertices.end());
      for (Index k : vertices) {
        ClassMember child{{}, mutate(m.quiver, k), m.path};
        child.path.push_back(k);
        child.form = key_of(child.quiver, key);
        out[i].push_back(std::move(child));
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(threads, frontier.size());
  if (workers <= 1) {
    work(0, frontier.size());
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (frontier.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk, end = std::min(frontier.size(), begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace

MutationClass explore_class(const IceQuiver& q, const Budget& budget, ClassKey key,
                            const MemberVisitor& visit) {
  MutationClass out;
  const unsigned threads = resolve_threads(budget.threads);
  std::unordered_set<std::string> seen;
  ClassMember root{key_of(q, key), q, {}};
  seen.insert(root.form);
  out.members.push_back(root);
  if (visit && visit(out.members.back())) return out;

  std::vector<ClassMember> frontier{root};
  for (int level = 0;; ++level) {
    const bool probe = level >= budget.depth;
    auto children = expand(frontier, key, threads);
    std::vector<ClassMember> next;
    for (auto& group : children) {
      for (auto& child : group) {
        if (seen.count(child.form)) continue;
        if (probe || out.members.size() >= budget.class_budget) return out;
        seen.insert(child.form);
        out.members.push_back(child);
        if (visit && visit(out.members.back())) return out;
        next.push_back(std::move(child));
      }
    }
    if (next.empty()) {
      out.complete = true;
      return out;
    }
    out.frontier_depth = level + 1;
    frontier = std::move(next);
  }
}

MutationClass mutation_class(const IceQuiver& q, const Budget& budget) {
  return explore_class(q, budget, ClassKey::Full);
}

SearchOutcome find_seed(const IceQuiver& q, const std::function<bool(const IceQuiver&)>& accept,
                        const Budget& budget) {
  SearchOutcome out;
  std::optional<ClassMember> hit;
  const MutationClass cls = explore_class(q, budget, ClassKey::MutablePart, [&](const ClassMember& m) {
    if (!accept(m.quiver)) return false;
    hit = m;
    return true;
  });
  out.nodes = cls.size();
  out.depth = cls.frontier_depth;
  if (hit) {
    out.verdict = Verdict::Found;
    out.path = hit->path;
    out.quiver = hit->quiver;
    out.depth = static_cast<int>(hit->path.size());
  } else {
    out.verdict = cls.complete ? Verdict::ProvenAbsent : Verdict::BudgetExhausted;
  }
  return out;
}

SearchOutcome find_acyclic_seed(const IceQuiver& q, const Budget& budget) {
  return find_seed(q, [](const IceQuiver& m) { return is_acyclic(m); }, budget);
}

SearchOutcome find_isolated_seed(const IceQuiver& q, const Budget& budget) {
  return find_seed(q, [](const IceQuiver& m) { return is_isolated(m); }, budget);
}

SearchOutcome find_covering_pair_seed(const IceQuiver& q, const Budget& budget) {
  SearchOutcome out =
      find_seed(q, [](const IceQuiver& m) { return !covering_pairs(m).empty(); }, budget);
  if (out.quiver) out.pair = covering_pairs(*out.quiver).front();
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Found: return "Found";
    case Verdict::ProvenAbsent: return "ProvenAbsent";
    case Verdict::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

}  // namespace clusterscope
