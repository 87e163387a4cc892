#include "clusterscope/algebraic.hpp"

namespace clusterscope {

std::vector<std::string> Presentation::generators() const {
  std::vector<std::string> out;
  for (Index v : quiver.mutable_vertices()) out.push_back("a" + vertex_name(v));
  for (Index v : quiver.frozen_vertices()) out.push_back("a" + vertex_name(v) + "^{+-1}");
  for (Index v : quiver.mutable_vertices()) out.push_back("a" + vertex_name(v) + "'");
  return out;
}

Presentation acyclic_presentation(const Seed& s) {
  if (!is_acyclic(s.quiver)) throw std::domain_error("acyclic_presentation: quiver has a directed cycle");
  Presentation p{s.quiver, {}};
  const auto n = static_cast<std::size_t>(s.quiver.size());
  for (Index i : s.quiver.mutable_vertices()) {
    ExchangeRelation r{i, std::vector<std::int64_t>(n, 0), std::vector<std::int64_t>(n, 0)};
    for (Index j = 0; j < s.quiver.size(); ++j) {
      const auto q = s.quiver(i, j);
      if (q > 0) r.plus[static_cast<std::size_t>(j)] = q;
      if (q < 0) r.minus[static_cast<std::size_t>(j)] = -q;
    }
    p.relations.push_back(std::move(r));
  }
  return p;
}

namespace {

std::string monomial_text(const std::vector<std::int64_t>& e) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += " * ";
    out += "a" + std::to_string(j + 1);
    if (e[j] != 1) out += "^" + std::to_string(e[j]);
  }
  return out.empty() ? "1" : out;
}

LaurentPoly substitute(const std::vector<std::int64_t>& e, const std::vector<LaurentPoly>& cluster) {
  LaurentPoly out = LaurentPoly::constant(cluster.front().nvars(), 1);
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] > 0) out *= pow(cluster[j], static_cast<unsigned>(e[j]));
  return out;
}

}  // namespace

std::vector<std::string> relation_lines(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relations) {
    const std::string a = "a" + vertex_name(r.vertex);
    // constants go last and merge: 1 + 1 prints as 2
    std::string rhs;
    int constant = 0;
    for (const auto* e : {&r.plus, &r.minus}) {
      const std::string m = monomial_text(*e);
      if (m == "1") {
        ++constant;
        continue;
      }
      rhs += (rhs.empty() ? "" : " + ") + m;
    }
    if (constant) rhs += (rhs.empty() ? "" : " + ") + std::to_string(constant);
    out.push_back(a + " * " + a + "' = " + rhs);
  }
  return out;
}

bool check_presentation(const Seed& s, const Presentation& p) {
  for (const auto& r : p.relations) {
    const LaurentPoly& a = s.cluster[static_cast<std::size_t>(r.vertex)];
    const LaurentPoly primed = mutate_seed(s, r.vertex).cluster[static_cast<std::size_t>(r.vertex)];
    if (!(a * primed == substitute(r.plus, s.cluster) + substitute(r.minus, s.cluster))) return false;
  }
  return true;
}

const char* jacobian_name(JacobianStatus s) {
  switch (s) {
    case JacobianStatus::Pass: return "Pass";
    case JacobianStatus::Mismatch: return "Mismatch";
    case JacobianStatus::Vacuous: return "Vacuous";
  }
  return "?";
}

JacobianResult isolated_jacobian_check(const IceQuiver& q,
                                       const std::map<Index, BigRational>& frozen_values) {
  if (!is_isolated(q)) throw std::domain_error("isolated_jacobian_check: quiver is not isolated");
  for (Index v : q.frozen_vertices()) {
    auto it = frozen_values.find(v);
    if (it == frozen_values.end())
      throw std::invalid_argument("no value for frozen vertex " + vertex_name(v));
    if (it->second == 0) throw std::invalid_argument("frozen vertex " + vertex_name(v) + " has value 0");
  }
  for (const auto& [v, value] : frozen_values)
    if (v < 0 || v >= q.size() || q.is_mutable(v))
      throw std::invalid_argument("value given for non-frozen vertex " + vertex_name(v));

  JacobianResult out;
  out.exchange_rank = exchange_rank(q);
  const auto rows = q.mutable_vertices();
  const auto m = static_cast<Index>(rows.size());
  out.phi = DenseMatrix<BigRational>::Zero(m, q.size() + m);
  for (Index r = 0; r < m; ++r) {
    const Index i = rows[static_cast<std::size_t>(r)];
    bool has_arrow = false;
    BigRational pi_plus = 1;
    for (Index j = 0; j < q.size(); ++j) {
      if (q(i, j) == 0) continue;
      has_arrow = true;
      if (q(i, j) > 0)
        for (std::int64_t t = 0; t < q(i, j); ++t) pi_plus *= frozen_values.at(j);
    }
    // a_i = 0 forces pi^+ + pi^- = 0, impossible when both are the empty
    // product.
    if (!has_arrow) return out;
    for (Index j = 0; j < q.size(); ++j)
      if (q.is_frozen(j) && q(i, j) != 0) out.phi(r, j) = BigRational(q(i, j)) * pi_plus / frozen_values.at(j);
  }
  out.phi_rank = exact_rank(out.phi);
  out.status = out.phi_rank == out.exchange_rank ? JacobianStatus::Pass : JacobianStatus::Mismatch;
  return out;
}

const char* degenerate_name(DegenerateStatus s) {
  switch (s) {
    case DegenerateStatus::Verified: return "Verified";
    case DegenerateStatus::Inapplicable: return "Inapplicable";
    case DegenerateStatus::Indeterminate: return "Indeterminate";
    case DegenerateStatus::RelationFailed: return "RelationFailed";
  }
  return "?";
}

namespace {

bool mutable_row_empty(const IceQuiver& q, Index k) {
  for (Index j = 0; j < q.size(); ++j)
    if (q.is_mutable(j) && q(k, j) != 0) return false;
  return true;
}

// psi(pi^+) + psi(pi^-) at vertex k.
long long exchange_sum(const IceQuiver& q, const std::vector<int>& values, Index k) {
  long long plus = 1, minus = 1;
  for (Index j = 0; j < q.size(); ++j) {
    const auto e = q(k, j);
    for (std::int64_t t = 0; t < (e > 0 ? e : -e); ++t) (e > 0 ? plus : minus) *= values[static_cast<std::size_t>(j)];
  }
  return plus + minus;
}

struct HomWalker {
  int depth;
  std::size_t checked = 0;
  std::string failure;

  bool walk(const IceQuiver& q, const std::vector<int>& values, std::vector<Index>& path) {
    if (static_cast<int>(path.size()) == depth) return true;
    for (Index k : q.mutable_vertices()) {
      const int old = values[static_cast<std::size_t>(k)];
      const int fresh = mutable_row_empty(q, k) ? (old == 1 ? 2 : 1) : 0;
      ++checked;
      if (static_cast<long long>(old) * fresh != exchange_sum(q, values, k)) {
        path.push_back(k);
        failure = "relation at vertex " + vertex_name(k) + " fails after path";
        for (Index v : path) failure += " " + vertex_name(v);
        return false;
      }
      std::vector<int> next = values;
      next[static_cast<std::size_t>(k)] = fresh;
      path.push_back(k);
      const bool ok = walk(mutate(q, k), next, path);
      path.pop_back();
      if (!ok) return false;
    }
    return true;
  }
};

}  // namespace

DegenerateHom build_degenerate_hom(const IceQuiver& q, int depth, const Budget& budget) {
  if (depth < 0) throw std::invalid_argument("build_degenerate_hom: negative depth");
  DegenerateHom out;
  out.depth = depth;
  std::optional<ClassMember> hit;
  const MutationClass cls = explore_class(q, budget, ClassKey::MutablePart, [&](const ClassMember& m) {
    if (covering_pairs(m.quiver).empty()) return false;
    hit = m;
    return true;
  });
  out.class_size = cls.size();
  out.class_complete = cls.complete;
  if (hit) {
    out.status = DegenerateStatus::Inapplicable;
    out.pair = covering_pairs(hit->quiver).front();
    out.pair_path = hit->path;
    return out;
  }

  const auto n = static_cast<std::size_t>(q.size());
  out.values.assign(n, 1);
  for (Index v : q.mutable_vertices())
    out.values[static_cast<std::size_t>(v)] = mutable_row_empty(q, v) ? 1 : 0;
  out.partner_values = out.values;
  for (Index v : q.mutable_vertices())
    out.partner_values[static_cast<std::size_t>(v)] = out.values[static_cast<std::size_t>(v)] == 1 ? 2 : 0;

  HomWalker walker{depth, 0, {}};
  std::vector<Index> path;
  const bool ok = walker.walk(q, out.values, path);
  out.relations_checked = walker.checked;
  if (!ok) {
    out.status = DegenerateStatus::RelationFailed;
    out.detail = walker.failure;
  } else {
    out.status = cls.complete ? DegenerateStatus::Verified : DegenerateStatus::Indeterminate;
    if (!cls.complete) out.detail = "class not exhausted within budget; relations hold to the given depth";
  }
  return out;
}

std::vector<std::vector<BigRational>> evaluate_cluster_point(const IceQuiver& q,
                                                             const std::vector<BigRational>& start,
                                                             const std::vector<Index>& path) {
  if (static_cast<Index>(start.size()) != q.size())
    throw std::invalid_argument("evaluate_cluster_point: need one value per vertex");
  std::vector<std::vector<BigRational>> out;
  IceQuiver cur = q;
  std::vector<BigRational> values = start;
  for (std::size_t step = 0; step < path.size(); ++step) {
    const Index k = path[step];
    if (k < 0 || k >= cur.size() || cur.is_frozen(k))
      throw std::domain_error("evaluate_cluster_point: vertex " + vertex_name(k) + " is not mutable");
    const BigRational& old = values[static_cast<std::size_t>(k)];
    if (old == 0)
      throw EvaluationError("value at vertex " + vertex_name(k) + " is zero before step " +
                                std::to_string(step + 1),
                            step);
    BigRational plus = 1, minus = 1;
    for (Index j = 0; j < cur.size(); ++j) {
      const auto e = cur(k, j);
      for (std::int64_t t = 0; t < (e > 0 ? e : -e); ++t) (e > 0 ? plus : minus) *= values[static_cast<std::size_t>(j)];
    }
    values[static_cast<std::size_t>(k)] = (plus + minus) / old;
    cur = mutate(cur, k);
    out.push_back(values);
  }
  return out;
}

KernelWitness kernel_path_witness(const IceQuiver& q, const std::vector<BigRational>& values) {
  if (static_cast<Index>(values.size()) != q.size())
    throw std::invalid_argument("kernel_path_witness: need one value per vertex");
  for (Index v = 0; v < q.size(); ++v) {
    const auto& x = values[static_cast<std::size_t>(v)];
    if (x < 0) throw std::invalid_argument("value at vertex " + vertex_name(v) + " is negative");
    if (q.is_frozen(v) && x == 0)
      throw std::invalid_argument("frozen vertex " + vertex_name(v) + " has value 0");
  }
  std::vector<Index> zeros;
  for (Index v : q.mutable_vertices()) {
    if (values[static_cast<std::size_t>(v)] != 0) continue;
    zeros.push_back(v);
    BigRational plus = 1, minus = 1;
    for (Index j = 0; j < q.size(); ++j) {
      const auto e = q(v, j);
      for (std::int64_t t = 0; t < (e > 0 ? e : -e); ++t) (e > 0 ? plus : minus) *= values[static_cast<std::size_t>(j)];
    }
    if (plus + minus != 0)
      throw std::invalid_argument("exchange relation at vertex " + vertex_name(v) +
                                  " fails: value 0 but pi+ + pi- = " + BigRational(plus + minus).str());
  }
  KernelWitness out;
  if (zeros.empty()) return out;

  std::vector<int> visited_at(static_cast<std::size_t>(q.size()), -1);
  std::vector<Index> walk;
  Index v = zeros.front();
  while (visited_at[static_cast<std::size_t>(v)] < 0) {
    visited_at[static_cast<std::size_t>(v)] = static_cast<int>(walk.size());
    walk.push_back(v);
    Index next = -1;
    for (Index j = 0; j < q.size() && next < 0; ++j)
      if (q(v, j) > 0 && values[static_cast<std::size_t>(j)] == 0) next = j;
    if (next < 0) return out;  // unreachable once the sweep above passed
    v = next;
  }
  out.found = true;
  out.cycle.assign(walk.begin() + visited_at[static_cast<std::size_t>(v)], walk.end());
  return out;
}

}  // namespace clusterscope
