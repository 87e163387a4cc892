#include "clusterscope/certificate.hpp"

#include <map>
#include <sstream>

#include "clusterscope/qvr.hpp"

namespace clusterscope {

namespace {

std::string join_path(const std::vector<Index>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? "," : "") + vertex_name(path[i]);
  return out;
}

}  // namespace

std::string serialize_certificate(const BanffCertificate& c) {
  std::ostringstream out;
  out << "clusterscope-certificate v1\n";
  out << "stop " << stop_name(c.stop) << "\n";
  out << "root\n" << to_qvr(c.root, "root");
  for (const auto& n : c.nodes) {
    const bool branch = n.kind == CertificateNode::Kind::Branch;
    out << (branch ? "branch " : "leaf ") << n.id
        << " parent=" << (n.parent < 0 ? std::string("none") : std::to_string(n.parent))
        << " path=" << join_path(n.path);
    if (branch)
      out << " pair=" << vertex_name(n.pair.source) << "," << vertex_name(n.pair.target);
    else
      out << " predicate=" << stop_name(c.stop);
    out << " freeze=" << (n.freeze ? vertex_name(*n.freeze) : std::string("none")) << "\n";
    out << to_qvr(n.quiver, "node-" + std::to_string(n.id));
    for (std::size_t v = 0; v < n.cluster.size(); ++v)
      out << "cluster " << v + 1 << " " << to_string(n.cluster[v]) << "\n";
  }
  return out.str();
}

namespace {

class LineCursor {
 public:
  explicit LineCursor(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      lines_.push_back(raw);
    }
  }

  // Next nonblank line, or nullptr at the end.
  const std::string* peek() {
    while (pos_ < lines_.size() && lines_[pos_].find_first_not_of(" \t") == std::string::npos) ++pos_;
    return pos_ < lines_.size() ? &lines_[pos_] : nullptr;
  }
  std::string take() {
    const std::string* l = peek();
    if (!l) throw ParseError("unexpected end of certificate", line());
    ++pos_;
    return *l;
  }
  int line() const { return static_cast<int>(pos_) + 1; }

  IceQuiver qvr_block() {
    const int start = line();
    std::string block;
    while (true) {
      std::string l = take();
      block += l + "\n";
      if (l == "end") break;
    }
    try {
      return parse_qvr(block).quiver;
    } catch (const ParseError& e) {
      throw ParseError(std::string("in embedded quiver: ") + e.what(), start);
    }
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

Index parse_vertex(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size() || v < 1) throw std::invalid_argument(s);
    return static_cast<Index>(v - 1);
  } catch (const std::exception&) {
    throw ParseError("bad vertex '" + s + "'", line);
  }
}

std::vector<Index> parse_vertex_list(const std::string& s, int line) {
  std::vector<Index> out;
  if (s.empty()) return out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_vertex(item, line));
  return out;
}

}  // namespace

BanffCertificate parse_certificate(std::string_view text) {
  LineCursor cur(text);
  BanffCertificate c;
  if (cur.take() != "clusterscope-certificate v1") throw ParseError("missing certificate header", 1);
  {
    const std::string l = cur.take();
    if (l == "stop acyclic")
      c.stop = StopPredicate::Acyclic;
    else if (l == "stop isolated")
      c.stop = StopPredicate::Isolated;
    else
      throw ParseError("expected 'stop acyclic' or 'stop isolated'", cur.line() - 1);
  }
  if (cur.take() != "root") throw ParseError("expected 'root'", cur.line() - 1);
  c.root = cur.qvr_block();

  while (cur.peek()) {
    const int line = cur.line();
    std::istringstream in(cur.take());
    std::string kind;
    in >> kind;
    CertificateNode n;
    if (kind == "branch")
      n.kind = CertificateNode::Kind::Branch;
    else if (kind == "leaf")
      n.kind = CertificateNode::Kind::Leaf;
    else
      throw ParseError("expected a branch or leaf record", line);
    std::string id;
    in >> id;
    try {
      n.id = std::stoi(id);
    } catch (const std::exception&) {
      throw ParseError("bad node id '" + id + "'", line);
    }
    std::map<std::string, std::string> fields;
    std::string token;
    while (in >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value, got '" + token + "'", line);
      if (!fields.emplace(token.substr(0, eq), token.substr(eq + 1)).second)
        throw ParseError("repeated field '" + token.substr(0, eq) + "'", line);
    }
    auto field = [&](const char* key) {
      auto it = fields.find(key);
      if (it == fields.end()) throw ParseError(std::string("missing field '") + key + "'", line);
      return it->second;
    };
    const std::string parent = field("parent");
    if (parent == "none") {
      n.parent = -1;
    } else {
      try {
        n.parent = std::stoi(parent);
      } catch (const std::exception&) {
        throw ParseError("bad parent '" + parent + "'", line);
      }
    }
    n.path = parse_vertex_list(field("path"), line);
    const std::string freeze = field("freeze");
    if (freeze != "none") n.freeze = parse_vertex(freeze, line);
    std::size_t expected = 3;
    if (n.kind == CertificateNode::Kind::Branch) {
      const auto pair = parse_vertex_list(field("pair"), line);
      if (pair.size() != 2) throw ParseError("pair needs two vertices", line);
      n.pair = {pair[0], pair[1]};
      ++expected;
    } else {
      if (field("predicate") != stop_name(c.stop))
        throw ParseError("leaf predicate differs from the certificate's stop predicate", line);
      ++expected;
    }
    if (fields.size() != expected) throw ParseError("unexpected fields in node record", line);
    n.quiver = cur.qvr_block();
    while (cur.peek() && cur.peek()->rfind("cluster ", 0) == 0) {
      const int cl = cur.line();
      std::istringstream cin(cur.take());
      std::string word, v;
      cin >> word >> v;
      if (parse_vertex(v, cl) != static_cast<Index>(n.cluster.size()))
        throw ParseError("cluster entries must be listed in vertex order", cl);
      std::string rest;
      std::getline(cin, rest);
      try {
        n.cluster.push_back(parse_laurent(rest, static_cast<std::size_t>(c.root.size())));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), cl);
      }
    }
    c.nodes.push_back(std::move(n));
  }
  for (auto& n : c.nodes)
    if (n.parent >= 0 && n.parent < static_cast<int>(c.nodes.size()))
      c.nodes[static_cast<std::size_t>(n.parent)].children.push_back(n.id);
  return c;
}

const char* reject_name(RejectReason r) {
  switch (r) {
    case RejectReason::Malformed: return "Malformed";
    case RejectReason::StructureError: return "StructureError";
    case RejectReason::FreezeMismatch: return "FreezeMismatch";
    case RejectReason::ReplayMismatch: return "ReplayMismatch";
    case RejectReason::ClusterMismatch: return "ClusterMismatch";
    case RejectReason::InvalidCoveringPair: return "InvalidCoveringPair";
    case RejectReason::LeafPredicateFailed: return "LeafPredicateFailed";
  }
  return "?";
}

namespace {

// The verifier keeps its own copy of the mutation rule and uses transitive
// closure instead of component condensation, so a bug in either route shows
// up as a disagreement.
struct RawState {
  ArrowMatrix q;
  std::vector<bool> frozen;
  std::vector<LaurentPoly> cluster;
};

void raw_mutate(RawState& s, Index k) {
  const Index n = s.q.rows();
  if (!s.cluster.empty()) {
    const std::size_t nv = s.cluster.size();
    LaurentPoly plus = LaurentPoly::constant(nv, 1), minus = LaurentPoly::constant(nv, 1);
    for (Index j = 0; j < n; ++j) {
      const auto& a = s.cluster[static_cast<std::size_t>(j)];
      for (std::int64_t t = 0; t < s.q(k, j); ++t) plus *= a;
      for (std::int64_t t = 0; t < -s.q(k, j); ++t) minus *= a;
    }
    auto r = exact_div(plus + minus, s.cluster[static_cast<std::size_t>(k)]);
    // A failed division leaves a zero entry, which cannot match any stated
    // cluster.
    s.cluster[static_cast<std::size_t>(k)] = r ? *r : LaurentPoly(nv);
  }
  ArrowMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == k || j == k) {
        m(i, j) = -s.q(i, j);
        continue;
      }
      std::int64_t delta = 0;
      if (s.q(i, k) > 0 && s.q(k, j) > 0) delta = s.q(i, k) * s.q(k, j);
      if (s.q(i, k) < 0 && s.q(k, j) < 0) delta = -s.q(i, k) * s.q(k, j);
      m(i, j) = s.q(i, j) + delta;
    }
  }
  s.q = std::move(m);
}

// reach(i, j): a directed path of length >= 1 from i to j through mutable
// vertices.
std::vector<std::vector<bool>> closure(const RawState& s) {
  const auto n = static_cast<std::size_t>(s.q.rows());
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r[i][j] = !s.frozen[i] && !s.frozen[j] &&
                s.q(static_cast<Index>(i), static_cast<Index>(j)) > 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

bool raw_acyclic(const RawState& s) {
  const auto r = closure(s);
  for (std::size_t v = 0; v < r.size(); ++v)
    if (r[v][v]) return false;
  return true;
}

bool raw_isolated(const RawState& s) {
  for (Index i = 0; i < s.q.rows(); ++i)
    for (Index j = 0; j < s.q.rows(); ++j)
      if (!s.frozen[static_cast<std::size_t>(i)] && !s.frozen[static_cast<std::size_t>(j)] &&
          s.q(i, j) != 0)
        return false;
  return true;
}

bool raw_covering_pair(const RawState& s, Index a, Index b) {
  const Index n = s.q.rows();
  if (a < 0 || b < 0 || a >= n || b >= n) return false;
  const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
  if (s.frozen[ua] || s.frozen[ub] || s.q(a, b) <= 0) return false;
  const auto r = closure(s);
  bool upstream = false, downstream = false;
  for (std::size_t c = 0; c < r.size(); ++c) {
    if (!r[c][c]) continue;
    if (c == ua || r[c][ua]) upstream = true;
    if (c == ub || r[ub][c]) downstream = true;
  }
  return !(upstream && downstream);
}

Verification reject(RejectReason r, int node, std::string detail) {
  return {false, r, node, std::move(detail)};
}

}  // namespace

Verification verify_certificate(const BanffCertificate& c) {
  const Index n = c.root.size();
  const auto count = static_cast<int>(c.nodes.size());
  if (count == 0) return reject(RejectReason::StructureError, -1, "no nodes");

  std::vector<std::vector<int>> children(c.nodes.size());
  const bool seed_level = !c.nodes[0].cluster.empty();
  for (int id = 0; id < count; ++id) {
    const auto& node = c.nodes[static_cast<std::size_t>(id)];
    if (node.id != id) return reject(RejectReason::StructureError, id, "node ids out of order");
    if (node.quiver.size() != n) return reject(RejectReason::StructureError, id, "vertex count differs");
    if (seed_level != !node.cluster.empty() ||
        (seed_level && node.cluster.size() != static_cast<std::size_t>(n)))
      return reject(RejectReason::StructureError, id, "cluster data incomplete");
    if (id == 0) {
      if (node.parent != -1 || node.freeze)
        return reject(RejectReason::StructureError, id, "root node has a parent or freeze");
      continue;
    }
    if (node.parent < 0 || node.parent >= id)
      return reject(RejectReason::StructureError, id, "parent must precede the node");
    if (c.nodes[static_cast<std::size_t>(node.parent)].kind != CertificateNode::Kind::Branch)
      return reject(RejectReason::StructureError, id, "parent is a leaf");
    if (!node.freeze) return reject(RejectReason::StructureError, id, "child without freeze");
    children[static_cast<std::size_t>(node.parent)].push_back(id);
  }
  for (int id = 0; id < count; ++id) {
    const auto& node = c.nodes[static_cast<std::size_t>(id)];
    const auto& kids = children[static_cast<std::size_t>(id)];
    if (node.kind == CertificateNode::Kind::Leaf) {
      if (!kids.empty()) return reject(RejectReason::StructureError, id, "leaf with children");
      continue;
    }
    if (kids.size() != 2) return reject(RejectReason::StructureError, id, "branch needs two children");
    const Index f0 = *c.nodes[static_cast<std::size_t>(kids[0])].freeze;
    const Index f1 = *c.nodes[static_cast<std::size_t>(kids[1])].freeze;
    const bool matches = (f0 == node.pair.source && f1 == node.pair.target) ||
                         (f0 == node.pair.target && f1 == node.pair.source);
    if (!matches)
      return reject(RejectReason::FreezeMismatch, id, "children do not freeze the pair's endpoints");
  }

  for (int id = 0; id < count; ++id) {
    const auto& node = c.nodes[static_cast<std::size_t>(id)];
    RawState s;
    if (id == 0) {
      s.q = c.root.arrows();
      s.frozen = c.root.frozen_flags();
      if (seed_level)
        for (Index v = 0; v < n; ++v)
          s.cluster.push_back(LaurentPoly::variable(static_cast<std::size_t>(n), static_cast<std::size_t>(v)));
    } else {
      const auto& parent = c.nodes[static_cast<std::size_t>(node.parent)];
      s.q = parent.quiver.arrows();
      s.frozen = parent.quiver.frozen_flags();
      s.cluster = parent.cluster;
      const Index f = *node.freeze;
      if (f < 0 || f >= n || s.frozen[static_cast<std::size_t>(f)])
        return reject(RejectReason::FreezeMismatch, id, "freeze vertex " + vertex_name(f) + " is not mutable");
      s.frozen[static_cast<std::size_t>(f)] = true;
    }
    for (Index k : node.path) {
      if (k < 0 || k >= n || s.frozen[static_cast<std::size_t>(k)])
        return reject(RejectReason::ReplayMismatch, id, "path vertex " + vertex_name(k) + " is not mutable");
      raw_mutate(s, k);
    }
    if (s.q != node.quiver.arrows() || s.frozen != node.quiver.frozen_flags())
      return reject(RejectReason::ReplayMismatch, id, "replayed quiver differs from the stated one");
    if (seed_level && s.cluster != node.cluster)
      return reject(RejectReason::ClusterMismatch, id, "replayed cluster differs from the stated one");
    if (node.kind == CertificateNode::Kind::Branch) {
      if (!raw_covering_pair(s, node.pair.source, node.pair.target))
        return reject(RejectReason::InvalidCoveringPair, id,
                      "(" + vertex_name(node.pair.source) + "," + vertex_name(node.pair.target) +
                          ") is not a covering pair");
    } else {
      const bool ok = c.stop == StopPredicate::Acyclic ? raw_acyclic(s) : raw_isolated(s);
      if (!ok)
        return reject(RejectReason::LeafPredicateFailed, id,
                      std::string("leaf quiver is not ") + stop_name(c.stop));
    }
  }
  return {true, RejectReason::Malformed, -1, "accepted"};
}

Verification verify_certificate_text(std::string_view text) {
  try {
    return verify_certificate(parse_certificate(text));
  } catch (const ParseError& e) {
    return reject(RejectReason::Malformed, -1, e.what());
  } catch (const std::invalid_argument& e) {
    return reject(RejectReason::Malformed, -1, e.what());
  }
}

}  // namespace clusterscope
