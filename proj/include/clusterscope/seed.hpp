#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "clusterscope/laurent.hpp"
#include "clusterscope/quiver.hpp"

namespace clusterscope {

/// A quiver with one Laurent polynomial per vertex, in the initial variables
/// x_1..x_n, plus the mutation path from the initial seed.
struct Seed {
  IceQuiver quiver;
  std::vector<LaurentPoly> cluster;
  std::vector<Index> path;
};

/// Raised when an exchange quotient is not Laurent. Never expected on valid
/// input; signals a bug.
class LaurentViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cluster x_1..x_n on `q`, empty path.
Seed initial_seed(const IceQuiver& q);

/// Exchange monomials at k: product of a_j^{Q_kj} over Q_kj > 0, and of
/// a_j^{-Q_kj} over Q_kj < 0. Empty products are 1.
LaurentPoly exchange_plus(const IceQuiver& q, const std::vector<LaurentPoly>& cluster, Index k);
LaurentPoly exchange_minus(const IceQuiver& q, const std::vector<LaurentPoly>& cluster, Index k);

/// Seed mutation at mutable k. Throws std::domain_error for a frozen or
/// out-of-range k, LaurentViolation if the division is not exact.
Seed mutate_seed(const Seed& s, Index k);

struct ClusterVariables {
  /// Distinct mutable cluster variables seen, sorted by printed form.
  std::vector<LaurentPoly> variables;
  bool complete = false;
  std::size_t seeds = 0;
};

/// Breadth-first closure of seeds to `depth` mutations, seeds identified by
/// (canonical quiver form, cluster multiset). `complete` is set when the
/// closure stabilises within the budget.
ClusterVariables enumerate_cluster_variables(const Seed& s, int depth);

/// Checks that (a^2+b^2+c^2)/(abc) takes the same value on the cluster of `s`
/// and on each of its three one-step mutations. Throws std::invalid_argument
/// unless `s` carries the Markov quiver with nothing frozen.
bool markov_invariant_check(const Seed& s);

}  // namespace clusterscope
