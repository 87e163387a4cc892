#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterscope/explore.hpp"
#include "clusterscope/laurent.hpp"
#include "clusterscope/numeric.hpp"
#include "clusterscope/quiver.hpp"
#include "clusterscope/seed.hpp"

namespace clusterscope {

/// a_i a_i' = pi_i^+ + pi_i^-, with each side's exponents over the vertices.
struct ExchangeRelation {
  Index vertex = 0;
  std::vector<std::int64_t> plus;
  std::vector<std::int64_t> minus;
};

/// Generators a_i (mutable), a_j^{+-1} (frozen), a_i' (mutable) and one
/// exchange relation per mutable vertex.
struct Presentation {
  IceQuiver quiver;
  std::vector<ExchangeRelation> relations;

  std::vector<std::string> generators() const;
};

/// Throws std::domain_error unless the seed's quiver is acyclic.
Presentation acyclic_presentation(const Seed& s);

/// One line per relation, e.g. "a1 * a1' = a2 + 1".
std::vector<std::string> relation_lines(const Presentation& p);

/// Substitutes the cluster of `s` and its one-step mutations into every
/// relation and compares both sides exactly.
bool check_presentation(const Seed& s, const Presentation& p);

enum class JacobianStatus { Pass, Mismatch, Vacuous };

const char* jacobian_name(JacobianStatus s);

struct JacobianResult {
  JacobianStatus status = JacobianStatus::Vacuous;
  Index phi_rank = 0;
  Index exchange_rank = 0;
  /// Rows: mutable vertices. Columns: vertices, then primed generators.
  DenseMatrix<BigRational> phi;
};

/// Rank of the Jacobian of the exchange relations at a point with every
/// mutable a_i = 0, against rank Ex(Q). Vacuous when some relation reads
/// 1 + 1 = 0 at such a point (a mutable vertex with no arrows). Throws
/// std::domain_error for a non-isolated quiver and std::invalid_argument
/// for a missing or zero frozen value.
JacobianResult isolated_jacobian_check(const IceQuiver& q,
                                       const std::map<Index, BigRational>& frozen_values);

enum class DegenerateStatus { Verified, Inapplicable, Indeterminate, RelationFailed };

const char* degenerate_name(DegenerateStatus s);

struct DegenerateHom {
  DegenerateStatus status = DegenerateStatus::Indeterminate;
  /// Inapplicable: a covering pair and the path to the seed carrying it.
  std::optional<CoveringPair> pair;
  std::vector<Index> pair_path;
  /// Values on the initial cluster and on each one-step partner.
  std::vector<int> values;
  std::vector<int> partner_values;
  int depth = 0;
  std::size_t relations_checked = 0;
  bool class_complete = false;
  std::size_t class_size = 0;
  std::string detail;
};

/// The map sending frozen variables to 1, non-isolated mutable ones to 0
/// and isolated ones into {1, 2}, checked on every exchange relation met
/// along all mutation paths of length <= depth.
DegenerateHom build_degenerate_hom(const IceQuiver& q, int depth, const Budget& budget = {});

class EvaluationError : public std::domain_error {
 public:
  EvaluationError(const std::string& what, std::size_t step)
      : std::domain_error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Values after each step of the numeric exchange recurrence along `path`.
/// Throws EvaluationError naming the step when a mutated value is zero.
std::vector<std::vector<BigRational>> evaluate_cluster_point(const IceQuiver& q,
                                                             const std::vector<BigRational>& start,
                                                             const std::vector<Index>& path);

struct KernelWitness {
  bool found = false;
  /// Zero-valued mutable vertices, each with an arrow to the next and the
  /// last to the first.
  std::vector<Index> cycle;
};

/// Follows zero out-neighbours from the first zero vertex until a vertex
/// repeats. Throws std::invalid_argument when values are negative, a frozen
/// value is zero, or some zero vertex has a nonzero exchange sum.
KernelWitness kernel_path_witness(const IceQuiver& q, const std::vector<BigRational>& values);

}  // namespace clusterscope
