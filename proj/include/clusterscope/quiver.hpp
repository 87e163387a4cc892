#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace clusterscope {

using Index = Eigen::Index;

/// Signed arrow counts: entry (i, j) is (#arrows i->j) - (#arrows j->i).
using ArrowMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer matrix with one row per mutable vertex and one column per vertex.
using ExchangeMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// A bundle of `multiplicity` arrows from `source` to `target` (0-based).
struct Arrow {
  Index source = 0;
  Index target = 0;
  std::int64_t multiplicity = 1;
};

/// An ice quiver: a loop-free, 2-cycle-free quiver with some vertices frozen.
///
/// Stored as a skew-symmetric integer matrix plus a frozen flag per vertex.
/// Every nonempty quiver has at least one mutable vertex. Values are
/// immutable once constructed; all operations return new quivers.
class IceQuiver {
 public:
  /// The empty quiver (rank-0 cluster algebra).
  IceQuiver() = default;

  /// Throws std::invalid_argument unless `arrows` is square and
  /// skew-symmetric with zero diagonal, `frozen` matches its size, and some
  /// vertex is mutable.
  IceQuiver(ArrowMatrix arrows, std::vector<bool> frozen);

  /// Builds a quiver on `n` vertices from arrow bundles (0-based indices).
  /// Bundles between the same pair accumulate with sign.
  static IceQuiver from_arrows(Index n, std::span<const Arrow> arrows,
                               std::span<const Index> frozen = {});
  static IceQuiver from_arrows(Index n, std::initializer_list<Arrow> arrows,
                               std::initializer_list<Index> frozen = {});

  Index size() const { return arrows_.rows(); }
  bool empty() const { return size() == 0; }

  std::int64_t operator()(Index i, Index j) const { return arrows_(i, j); }
  const ArrowMatrix& arrows() const { return arrows_; }

  bool is_frozen(Index v) const { return frozen_[static_cast<std::size_t>(v)]; }
  bool is_mutable(Index v) const { return !is_frozen(v); }
  const std::vector<bool>& frozen_flags() const { return frozen_; }

  std::vector<Index> mutable_vertices() const;
  std::vector<Index> frozen_vertices() const;
  Index mutable_count() const;

  friend bool operator==(const IceQuiver& a, const IceQuiver& b) {
    return a.frozen_ == b.frozen_ && a.arrows_ == b.arrows_;
  }

 private:
  ArrowMatrix arrows_;
  std::vector<bool> frozen_;
};

/// Quiver mutation at the mutable vertex `k`.
/// Throws std::domain_error if `k` is frozen or out of range.
IceQuiver mutate(const IceQuiver& q, Index k);

/// Applies `mutate` along `path` in order.
IceQuiver mutate_along(const IceQuiver& q, std::span<const Index> path);

/// True iff the mutable subquiver has no directed cycle.
bool is_acyclic(const IceQuiver& q);

/// True iff there are no arrows between mutable vertices.
bool is_isolated(const IceQuiver& q);

struct StructuralClass {
  bool isolated = false;
  bool a_type = false;
  bool finite_type = false;
  bool tree_type = false;
  bool acyclic = false;
};

/// Classification of the mutable subquiver. ADE recognition only.
StructuralClass structural_class(const IceQuiver& q);

struct CoveringPair {
  Index source = 0;
  Index target = 0;
  friend bool operator==(const CoveringPair&, const CoveringPair&) = default;
  friend auto operator<=>(const CoveringPair&, const CoveringPair&) = default;
};

/// All arrows a->b between mutable vertices lying in no bi-infinite path,
/// i.e. lacking either a directed cycle upstream of a or one downstream of
/// b. Sorted by (source, target).
std::vector<CoveringPair> covering_pairs(const IceQuiver& q);

/// True iff the mutable subquiver has a sink or a source. Isolated vertices
/// count as neither.
bool has_source_or_sink(const IceQuiver& q);

/// Freezes the given mutable vertices. Throws std::domain_error if any
/// vertex is already frozen or out of range, or if nothing would remain
/// mutable.
IceQuiver freeze(const IceQuiver& q, std::span<const Index> vertices);
IceQuiver freeze(const IceQuiver& q, std::initializer_list<Index> vertices);

struct Deletion {
  IceQuiver quiver;
  /// kept[new_index] == old_index.
  std::vector<Index> kept;
};

/// Induced subquiver on the complement of `vertices`, with compacted indices.
/// Throws std::domain_error if the result would be nonempty but entirely
/// frozen.
Deletion delete_vertices(const IceQuiver& q, std::span<const Index> vertices);
Deletion delete_vertices(const IceQuiver& q, std::initializer_list<Index> vertices);

/// The induced subquiver on the mutable vertices.
Deletion mutable_part(const IceQuiver& q);

ExchangeMatrix exchange_matrix(const IceQuiver& q);

/// Rank of the exchange matrix over the rationals (exact).
Index exchange_rank(const IceQuiver& q);

/// True iff the exchange matrix has rank equal to the number of mutable
/// vertices.
bool is_full_rank(const IceQuiver& q);

/// Byte string invariant under relabelings that preserve the frozen set;
/// equal iff the quivers are isomorphic as ice quivers.
std::string canonical_form(const IceQuiver& q);

/// Canonical form of the mutable subquiver only.
std::string mutable_canonical_form(const IceQuiver& q);

/// 1-based vertex name for messages and external formats.
inline std::string vertex_name(Index v) { return std::to_string(v + 1); }

}  // namespace clusterscope
