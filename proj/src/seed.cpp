#include "clusterscope/seed.hpp"

#include <algorithm>
#include <set>

namespace clusterscope {

Seed initial_seed(const IceQuiver& q) {
  Seed s{q, {}, {}};
  const auto n = static_cast<std::size_t>(q.size());
  for (std::size_t i = 0; i < n; ++i) s.cluster.push_back(LaurentPoly::variable(n, i));
  return s;
}

namespace {

LaurentPoly exchange_side(const IceQuiver& q, const std::vector<LaurentPoly>& cluster, Index k,
                          int sign) {
  const auto n = static_cast<std::size_t>(q.size());
  LaurentPoly out = LaurentPoly::constant(n, 1);
  for (Index j = 0; j < q.size(); ++j) {
    const std::int64_t m = sign * q(k, j);
    if (m > 0) out *= pow(cluster[static_cast<std::size_t>(j)], static_cast<unsigned>(m));
  }
  return out;
}

}  // namespace

LaurentPoly exchange_plus(const IceQuiver& q, const std::vector<LaurentPoly>& cluster, Index k) {
  return exchange_side(q, cluster, k, 1);
}

LaurentPoly exchange_minus(const IceQuiver& q, const std::vector<LaurentPoly>& cluster, Index k) {
  return exchange_side(q, cluster, k, -1);
}

Seed mutate_seed(const Seed& s, Index k) {
  Seed out{mutate(s.quiver, k), s.cluster, s.path};
  const LaurentPoly numerator =
      exchange_plus(s.quiver, s.cluster, k) + exchange_minus(s.quiver, s.cluster, k);
  auto quotient = exact_div(numerator, s.cluster[static_cast<std::size_t>(k)]);
  if (!quotient) {
    throw LaurentViolation("exchange at vertex " + vertex_name(k) + ": " + to_string(numerator) +
                           " not divisible by " + to_string(s.cluster[static_cast<std::size_t>(k)]));
  }
  out.cluster[static_cast<std::size_t>(k)] = std::move(*quotient);
  out.path.push_back(k);
  return out;
}

namespace {

std::string seed_key(const Seed& s) {
  std::vector<std::string> entries;
  for (const auto& p : s.cluster) entries.push_back(to_string(p));
  std::sort(entries.begin(), entries.end());
  std::string key = canonical_form(s.quiver);
  for (const auto& e : entries) key += "|" + e;
  return key;
}

}  // namespace

ClusterVariables enumerate_cluster_variables(const Seed& s, int depth) {
  if (depth < 0) throw std::invalid_argument("enumerate_cluster_variables: negative depth");
  ClusterVariables out;
  std::set<std::string> seen_seeds{seed_key(s)};
  std::map<std::string, LaurentPoly> variables;
  auto record = [&](const Seed& seed) {
    for (Index v : seed.quiver.mutable_vertices()) {
      const auto& p = seed.cluster[static_cast<std::size_t>(v)];
      variables.try_emplace(to_string(p), p);
    }
  };
  record(s);

  std::vector<Seed> frontier{s};
  for (int level = 0; level <= depth && !frontier.empty(); ++level) {
    // The last level is expanded only to learn whether anything new lies
    // beyond the budget.
    const bool probe = level == depth;
    std::vector<Seed> next;
    bool grew = false;
    for (const Seed& seed : frontier) {
      for (Index k : seed.quiver.mutable_vertices()) {
        Seed child = mutate_seed(seed, k);
        if (!seen_seeds.insert(seed_key(child)).second) continue;
        grew = true;
        if (probe) break;
        record(child);
        next.push_back(std::move(child));
      }
      if (probe && grew) break;
    }
    if (probe) {
      out.complete = !grew;
      break;
    }
    frontier = std::move(next);
    if (frontier.empty()) out.complete = true;
  }
  out.seeds = seen_seeds.size();
  for (auto& [text, p] : variables) out.variables.push_back(std::move(p));
  return out;
}

bool markov_invariant_check(const Seed& s) {
  const IceQuiver& q = s.quiver;
  const bool shape = q.size() == 3 && q.mutable_count() == 3 &&
                     std::abs(q(0, 1)) == 2 && q(0, 1) == q(1, 2) && q(1, 2) == q(2, 0);
  if (!shape) throw std::invalid_argument("markov_invariant_check: not the Markov quiver");

  auto markov = [](const std::vector<LaurentPoly>& c) {
    return RationalFn{c[0] * c[0] + c[1] * c[1] + c[2] * c[2], c[0] * c[1] * c[2]};
  };
  const RationalFn base = markov(s.cluster);
  for (Index k = 0; k < 3; ++k)
    if (!(markov(mutate_seed(s, k).cluster) == base)) return false;
  return true;
}

}  // namespace clusterscope
