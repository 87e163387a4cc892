#include "clusterscope/quiver.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "clusterscope/numeric.hpp"

namespace clusterscope {

namespace {

void require_vertex(const IceQuiver& q, Index v, const char* what) {
  if (v < 0 || v >= q.size()) {
    throw std::domain_error(std::string(what) + ": vertex " + vertex_name(v) +
                            " out of range 1.." + std::to_string(q.size()));
  }
}

// Adjacency lists of the mutable subquiver, one direction per call.
std::vector<std::vector<Index>> mutable_successors(const IceQuiver& q) {
  std::vector<std::vector<Index>> out(static_cast<std::size_t>(q.size()));
  for (Index i = 0; i < q.size(); ++i) {
    if (q.is_frozen(i)) continue;
    for (Index j = 0; j < q.size(); ++j) {
      if (q.is_mutable(j) && q(i, j) > 0) out[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  return out;
}

std::vector<std::vector<Index>> reversed(const std::vector<std::vector<Index>>& adj) {
  std::vector<std::vector<Index>> rev(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (Index j : adj[i]) rev[static_cast<std::size_t>(j)].push_back(static_cast<Index>(i));
  return rev;
}

// Tarjan's algorithm; returns the component id of each vertex.
std::vector<int> strongly_connected_components(const std::vector<std::vector<Index>>& adj,
                                               int* count) {
  const auto n = adj.size();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  int next_index = 0;
  int next_comp = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (Index w_ : adj[v]) {
      const auto w = static_cast<std::size_t>(w_);
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = next_comp;
      } while (w != v);
      ++next_comp;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  if (count) *count = next_comp;
  return comp;
}

std::vector<bool> reachable_from(const std::vector<std::vector<Index>>& adj,
                                 const std::vector<bool>& seeds) {
  std::vector<bool> seen = seeds;
  std::queue<std::size_t> todo;
  for (std::size_t v = 0; v < seeds.size(); ++v)
    if (seeds[v]) todo.push(v);
  while (!todo.empty()) {
    const auto v = todo.front();
    todo.pop();
    for (Index w : adj[v]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        todo.push(static_cast<std::size_t>(w));
      }
    }
  }
  return seen;
}

// Dynkin type of a tree component, given vertex degrees in the component.
enum class TreeShape { Path, DType, EType, Other };

TreeShape tree_shape(const std::vector<Index>& vertices,
                     const std::vector<std::vector<Index>>& neighbours) {
  Index branch = -1;
  for (Index v : vertices) {
    const auto deg = neighbours[static_cast<std::size_t>(v)].size();
    if (deg > 3) return TreeShape::Other;
    if (deg == 3) {
      if (branch >= 0) return TreeShape::Other;
      branch = v;
    }
  }
  if (branch < 0) return TreeShape::Path;
  std::vector<int> arms;
  for (Index start : neighbours[static_cast<std::size_t>(branch)]) {
    int length = 1;
    Index prev = branch, cur = start;
    while (true) {
      const auto& nb = neighbours[static_cast<std::size_t>(cur)];
      Index next = -1;
      for (Index w : nb)
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return TreeShape::DType;
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return TreeShape::EType;
  return TreeShape::Other;
}

}  // namespace

IceQuiver::IceQuiver(ArrowMatrix arrows, std::vector<bool> frozen)
    : arrows_(std::move(arrows)), frozen_(std::move(frozen)) {
  if (arrows_.rows() != arrows_.cols())
    throw std::invalid_argument("arrow matrix must be square");
  if (static_cast<Index>(frozen_.size()) != arrows_.rows())
    throw std::invalid_argument("frozen flags do not match the vertex count");
  for (Index i = 0; i < arrows_.rows(); ++i) {
    if (arrows_(i, i) != 0)
      throw std::invalid_argument("loop at vertex " + vertex_name(i));
    for (Index j = i + 1; j < arrows_.cols(); ++j) {
      if (arrows_(i, j) != -arrows_(j, i))
        throw std::invalid_argument("arrow matrix not skew-symmetric at (" + vertex_name(i) +
                                    "," + vertex_name(j) + ")");
    }
  }
  if (!frozen_.empty() && std::all_of(frozen_.begin(), frozen_.end(), [](bool f) { return f; }))
    throw std::invalid_argument("a nonempty ice quiver needs a mutable vertex");
}

IceQuiver IceQuiver::from_arrows(Index n, std::span<const Arrow> arrows,
                                 std::span<const Index> frozen) {
  ArrowMatrix m = ArrowMatrix::Zero(n, n);
  for (const Arrow& a : arrows) {
    if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
      throw std::invalid_argument("arrow endpoint out of range");
    if (a.source == a.target) throw std::invalid_argument("loop at vertex " + vertex_name(a.source));
    m(a.source, a.target) += a.multiplicity;
    m(a.target, a.source) -= a.multiplicity;
  }
  std::vector<bool> flags(static_cast<std::size_t>(n), false);
  for (Index v : frozen) {
    if (v < 0 || v >= n) throw std::invalid_argument("frozen vertex out of range");
    flags[static_cast<std::size_t>(v)] = true;
  }
  return IceQuiver(std::move(m), std::move(flags));
}

IceQuiver IceQuiver::from_arrows(Index n, std::initializer_list<Arrow> arrows,
                                 std::initializer_list<Index> frozen) {
  return from_arrows(n, std::span<const Arrow>(arrows.begin(), arrows.size()),
                     std::span<const Index>(frozen.begin(), frozen.size()));
}

std::vector<Index> IceQuiver::mutable_vertices() const {
  std::vector<Index> out;
  for (Index v = 0; v < size(); ++v)
    if (is_mutable(v)) out.push_back(v);
  return out;
}

std::vector<Index> IceQuiver::frozen_vertices() const {
  std::vector<Index> out;
  for (Index v = 0; v < size(); ++v)
    if (is_frozen(v)) out.push_back(v);
  return out;
}

Index IceQuiver::mutable_count() const {
  return static_cast<Index>(std::count(frozen_.begin(), frozen_.end(), false));
}

IceQuiver mutate(const IceQuiver& q, Index k) {
  require_vertex(q, k, "mutate");
  if (q.is_frozen(k)) throw std::domain_error("mutate: vertex " + vertex_name(k) + " is frozen");
  const Index n = q.size();
  ArrowMatrix m = q.arrows();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == k || j == k) {
        m(i, j) = -q(i, j);
      } else {
        const std::int64_t a = q(i, k), b = q(k, j);
        m(i, j) = q(i, j) + (std::abs(a) * b + a * std::abs(b)) / 2;
      }
    }
  }
  return IceQuiver(std::move(m), q.frozen_flags());
}

IceQuiver mutate_along(const IceQuiver& q, std::span<const Index> path) {
  IceQuiver out = q;
  for (Index k : path) out = mutate(out, k);
  return out;
}

bool is_acyclic(const IceQuiver& q) {
  int count = 0;
  const auto comp = strongly_connected_components(mutable_successors(q), &count);
  std::vector<int> sizes(static_cast<std::size_t>(count), 0);
  for (Index v = 0; v < q.size(); ++v)
    if (q.is_mutable(v)) ++sizes[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
  return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s <= 1; });
}

bool is_isolated(const IceQuiver& q) {
  for (Index i = 0; i < q.size(); ++i)
    for (Index j = 0; j < q.size(); ++j)
      if (q.is_mutable(i) && q.is_mutable(j) && q(i, j) != 0) return false;
  return true;
}

StructuralClass structural_class(const IceQuiver& q) {
  StructuralClass c;
  c.acyclic = is_acyclic(q);
  c.isolated = is_isolated(q);

  const auto n = static_cast<std::size_t>(q.size());
  std::vector<std::vector<Index>> neighbours(n);
  bool simple = true;
  for (Index i = 0; i < q.size(); ++i) {
    if (q.is_frozen(i)) continue;
    for (Index j = 0; j < q.size(); ++j) {
      if (i == j || q.is_frozen(j) || q(i, j) == 0) continue;
      neighbours[static_cast<std::size_t>(i)].push_back(j);
      if (std::abs(q(i, j)) != 1) simple = false;
    }
  }

  bool forest = simple, paths = simple, dynkin = simple;
  std::vector<bool> seen(n, false);
  for (Index root : q.mutable_vertices()) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<Index> component;
    std::queue<Index> todo;
    todo.push(root);
    seen[static_cast<std::size_t>(root)] = true;
    std::size_t degree_sum = 0;
    while (!todo.empty()) {
      const Index v = todo.front();
      todo.pop();
      component.push_back(v);
      degree_sum += neighbours[static_cast<std::size_t>(v)].size();
      for (Index w : neighbours[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          todo.push(w);
        }
      }
    }
    const bool is_tree = degree_sum / 2 + 1 == component.size();
    if (!is_tree) {
      forest = paths = dynkin = false;
      continue;
    }
    const TreeShape shape = tree_shape(component, neighbours);
    if (shape != TreeShape::Path) paths = false;
    if (shape == TreeShape::Other) dynkin = false;
  }
  c.tree_type = forest && c.acyclic;
  c.finite_type = c.tree_type && dynkin;
  c.a_type = c.finite_type && paths;
  return c;
}

std::vector<CoveringPair> covering_pairs(const IceQuiver& q) {
  const auto succ = mutable_successors(q);
  const auto pred = reversed(succ);
  int count = 0;
  const auto comp = strongly_connected_components(succ, &count);
  std::vector<int> sizes(static_cast<std::size_t>(count), 0);
  for (Index v = 0; v < q.size(); ++v)
    if (q.is_mutable(v)) ++sizes[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];

  std::vector<bool> on_cycle(succ.size(), false);
  for (Index v = 0; v < q.size(); ++v) {
    if (q.is_mutable(v) && sizes[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] >= 2)
      on_cycle[static_cast<std::size_t>(v)] = true;
  }
  const auto below_cycle = reachable_from(succ, on_cycle);  // cycle upstream
  const auto above_cycle = reachable_from(pred, on_cycle);  // cycle downstream

  std::vector<CoveringPair> out;
  for (Index a = 0; a < q.size(); ++a) {
    for (Index b : succ[static_cast<std::size_t>(a)]) {
      if (!(below_cycle[static_cast<std::size_t>(a)] && above_cycle[static_cast<std::size_t>(b)]))
        out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_source_or_sink(const IceQuiver& q) {
  for (Index v : q.mutable_vertices()) {
    bool in = false, out = false;
    for (Index w : q.mutable_vertices()) {
      if (q(v, w) > 0) out = true;
      if (q(v, w) < 0) in = true;
    }
    if (in != out) return true;
  }
  return false;
}

IceQuiver freeze(const IceQuiver& q, std::span<const Index> vertices) {
  std::vector<bool> flags = q.frozen_flags();
  for (Index v : vertices) {
    require_vertex(q, v, "freeze");
    if (q.is_frozen(v))
      throw std::domain_error("freeze: vertex " + vertex_name(v) + " is already frozen");
    flags[static_cast<std::size_t>(v)] = true;
  }
  if (std::all_of(flags.begin(), flags.end(), [](bool f) { return f; }))
    throw std::domain_error("freeze: no mutable vertex would remain");
  return IceQuiver(q.arrows(), std::move(flags));
}

IceQuiver freeze(const IceQuiver& q, std::initializer_list<Index> vertices) {
  return freeze(q, std::span<const Index>(vertices.begin(), vertices.size()));
}

Deletion delete_vertices(const IceQuiver& q, std::span<const Index> vertices) {
  std::vector<bool> drop(static_cast<std::size_t>(q.size()), false);
  for (Index v : vertices) {
    require_vertex(q, v, "delete_vertices");
    drop[static_cast<std::size_t>(v)] = true;
  }
  Deletion out;
  for (Index v = 0; v < q.size(); ++v)
    if (!drop[static_cast<std::size_t>(v)]) out.kept.push_back(v);
  const auto m = static_cast<Index>(out.kept.size());
  ArrowMatrix sub(m, m);
  std::vector<bool> flags(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) {
    flags[static_cast<std::size_t>(i)] = q.is_frozen(out.kept[static_cast<std::size_t>(i)]);
    for (Index j = 0; j < m; ++j)
      sub(i, j) = q(out.kept[static_cast<std::size_t>(i)], out.kept[static_cast<std::size_t>(j)]);
  }
  if (m > 0 && std::all_of(flags.begin(), flags.end(), [](bool f) { return f; }))
    throw std::domain_error("delete_vertices: only frozen vertices would remain");
  out.quiver = IceQuiver(std::move(sub), std::move(flags));
  return out;
}

Deletion delete_vertices(const IceQuiver& q, std::initializer_list<Index> vertices) {
  return delete_vertices(q, std::span<const Index>(vertices.begin(), vertices.size()));
}

Deletion mutable_part(const IceQuiver& q) {
  const auto frozen = q.frozen_vertices();
  return delete_vertices(q, frozen);
}

ExchangeMatrix exchange_matrix(const IceQuiver& q) {
  const auto rows = q.mutable_vertices();
  ExchangeMatrix ex(static_cast<Index>(rows.size()), q.size());
  for (std::size_t r = 0; r < rows.size(); ++r) ex.row(static_cast<Index>(r)) = q.arrows().row(rows[r]);
  return ex;
}

Index exchange_rank(const IceQuiver& q) { return exact_rank(exchange_matrix(q)); }

bool is_full_rank(const IceQuiver& q) { return exchange_rank(q) == q.mutable_count(); }

}  // namespace clusterscope
