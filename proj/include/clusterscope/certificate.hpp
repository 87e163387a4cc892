#pragma once

#include <string>
#include <string_view>

#include "clusterscope/banff.hpp"

namespace clusterscope {

/// Text form: a header, the stop predicate, the root quiver, then one record
/// per node followed by its embedded `.qvr` block and, for seed-level runs,
/// `cluster <v> <poly>` lines.
std::string serialize_certificate(const BanffCertificate& c);

/// Throws ParseError.
BanffCertificate parse_certificate(std::string_view text);

enum class RejectReason {
  Malformed,
  StructureError,
  FreezeMismatch,
  ReplayMismatch,
  ClusterMismatch,
  InvalidCoveringPair,
  LeafPredicateFailed,
};

const char* reject_name(RejectReason r);

struct Verification {
  bool accepted = false;
  RejectReason reason = RejectReason::Malformed;
  /// Offending node id, -1 when not tied to a node.
  int node = -1;
  std::string detail;
};

/// Replays every node from the root and rechecks each covering pair and
/// each leaf predicate. Written against the raw matrices, without the
/// search or graph code used to build certificates.
Verification verify_certificate(const BanffCertificate& c);

/// Parses then verifies; parse errors become Malformed.
Verification verify_certificate_text(std::string_view text);

}  // namespace clusterscope
