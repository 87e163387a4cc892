// One PASS/FAIL line per acceptance criterion, with wall time against its limit.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "clusterscope/algebraic.hpp"
#include "clusterscope/banff.hpp"
#include "clusterscope/catalog.hpp"
#include "clusterscope/certificate.hpp"
#include "clusterscope/qvr.hpp"
#include "clusterscope/cli.hpp"
#include "clusterscope/surface.hpp"
#include "support.hpp"

using namespace clusterscope;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) o.expect(false, "over time limit");
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.ok ? "PASS" : "FAIL") << " " << id << " " << title << " (" << secs << "s / " << limit_s << "s)";
  if (!o.note.empty()) line << ": " << o.note;
  std::cout << line.str() << std::endl;
  failures += !o.ok;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void walk_laurent(const Seed& s, int depth, std::size_t& mutations) {
  if (depth == 0) return;
  for (Index k : s.quiver.mutable_vertices()) {
    ++mutations;
    walk_laurent(mutate_seed(s, k), depth - 1, mutations);  // throws LaurentViolation on failure
  }
}

IceQuiver isolated_instance(std::mt19937_64& rng) {
  const Index mut = 1 + Index(rng() % 3), frozen = 1 + Index(rng() % 3), n = mut + frozen;
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  ArrowMatrix a = ArrowMatrix::Zero(n, n);
  for (Index i = 0; i < mut; ++i) {
    for (Index j = mut; j < n; ++j) a(i, j) = entry(rng);
    // every mutable vertex meets a frozen one
    if ((a.row(i).segment(mut, frozen).array() != 0).count() == 0) a(i, mut + Index(rng() % frozen)) = entry(rng) >= 0 ? 1 : -1;
  }
  for (Index i = mut; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) a(i, j) = entry(rng);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < i; ++j) a(i, j) = -a(j, i);
  std::vector<bool> f(std::size_t(n), false);
  for (Index v = mut; v < n; ++v) f[std::size_t(v)] = true;
  return IceQuiver(a, f);
}

int cli_status(std::vector<std::string> args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  return run_cli(args, in, out, err);
}

}  // namespace

int main() {
  criterion(1, "mutation involution", 5, [](Outcome& o) {
    std::mt19937_64 rng(1);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
      const IceQuiver q = testing::random_quiver(rng, 8, 3);
      for (Index k : q.mutable_vertices()) {
        o.expect(mutate(mutate(q, k), k) == q, "involution failed");
        ++checked;
      }
    }
    o.expect(checked > 1000, "too few mutations");
  });

  criterion(2, "rank invariance", 10, [](Outcome& o) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 200; ++t) {
      IceQuiver q = testing::random_quiver(rng, 8, 3);
      const Index r = exchange_rank(q);
      const auto mut = q.mutable_vertices();
      for (int s = 0; s < 10; ++s) {
        q = mutate(q, mut[rng() % mut.size()]);
        o.expect(exchange_rank(q) == r, "rank changed along a path");
      }
    }
  });

  criterion(3, "Laurent phenomenon to depth 6", 60, [](Outcome& o) {
    for (const char* name : {"a2", "a3_cycle", "markov", "smallex"}) {
      std::size_t mutations = 0;
      try {
        walk_laurent(catalog_seed(name), 6, mutations);
      } catch (const LaurentViolation& e) {
        o.expect(false, std::string(name) + ": " + e.what());
      }
      o.expect(mutations > 0, "no mutations");
    }
  });

  criterion(4, "Markov suite", 30, [](Outcome& o) {
    const IceQuiver q = catalog_quiver("markov");
    const auto cls = mutation_class(q, Budget{});
    o.expect(cls.size() == 1 && cls.complete, "class is not a single complete member");
    o.expect(covering_pairs(q).empty(), "covering pair found");
    const auto b = run_banff(q, BanffOptions{});
    o.expect(!b.ok() && b.failure->kind == FailureKind::NoCoveringPairInCompleteClass, "banff outcome");
    const auto h = build_degenerate_hom(q, 6);
    o.expect(h.status == DegenerateStatus::Verified && h.values == std::vector<int>{0, 0, 0}, "psi not verified zero");
    o.expect(markov_invariant_check(catalog_seed("markov")), "invariant");
    o.expect(exchange_rank(q) == 2 && !is_full_rank(q), "rank");
  });

  criterion(5, "X6 suite", 60, [](Outcome& o) {
    const IceQuiver q = catalog_quiver("x6");
    const auto cls = mutation_class(q, Budget{});
    o.expect(cls.size() == 5 && cls.complete, "class size");
    for (const auto& m : cls.members) o.expect(!is_acyclic(m.quiver), "acyclic member");
    o.expect(find_acyclic_seed(q, Budget{}).verdict == Verdict::ProvenAbsent, "acyclic search");
    const auto b = run_banff(q, BanffOptions{});
    o.expect(b.ok(), "banff failed");
    if (!b.ok()) return;
    o.expect(verify_certificate(*b.certificate).accepted, "verifier rejected");
    o.expect(b.certificate->branch_count() >= 1, "no branch");
    for (const auto& n : b.certificate->nodes)
      if (n.kind == CertificateNode::Kind::Leaf) o.expect(is_acyclic(n.quiver), "cyclic leaf");
    o.expect(serialize_certificate(*b.certificate) == slurp(CLUSTERSCOPE_GOLDEN_DIR "/x6_certificate.txt"),
             "differs from golden certificate");
    o.note = o.ok ? std::to_string(b.certificate->branch_count()) + " branches, " +
                        std::to_string(b.certificate->leaf_count()) +
                        " leaves (the known 4-leaf tree branches at a node whose class is already acyclic)"
                  : o.note;
  });

  criterion(6, "X7 suite", 10, [](Outcome& o) {
    const IceQuiver q = catalog_quiver("x7");
    const auto cls = mutation_class(q, Budget{});
    o.expect(cls.size() == 2 && cls.complete, "class size");
    for (const auto& m : cls.members) o.expect(covering_pairs(m.quiver).empty(), "covering pair");
    o.expect(find_covering_pair_seed(q, Budget{}).verdict == Verdict::ProvenAbsent, "search verdict");
    o.expect(cli_status({"covering-pairs", "--search"}, to_qvr(q, "x7")) == kNegative, "exit status");
  });

  criterion(7, "smallex suite", 60, [](Outcome& o) {
    const IceQuiver q = catalog_quiver("smallex");
    Budget b;
    b.depth = 8;
    b.class_budget = 1000000;
    const auto search = find_acyclic_seed(q, b);
    o.expect(search.verdict == Verdict::BudgetExhausted && search.depth == 8, "search verdict or depth");
    BanffOptions opt;
    opt.seed_level = true;
    const auto r = run_banff(catalog_seed("smallex"), opt);
    o.expect(r.ok(), "banff failed");
    if (!r.ok()) return;
    const auto& c = *r.certificate;
    o.expect(c.branch_count() == 1 && c.leaf_count() == 2, "shape");
    o.expect(c.nodes[0].pair == CoveringPair{0, 3}, "root pair");
    o.expect(c.nodes[1].freeze == Index{0} && c.nodes[1].path.empty(), "first leaf");
    o.expect(c.nodes[2].freeze == Index{3} && c.nodes[2].path == std::vector<Index>{2}, "second leaf");
    o.expect(c.nodes[2].cluster[2] == parse_laurent("x1 * x3^-1 * x4 + x2 * x3^-1", 4), "cluster variable");
    o.expect(verify_certificate(c).accepted, "verifier rejected");
  });

  criterion(8, "surface ranks", 1, [](Outcome& o) {
    const std::vector<std::pair<const char*, int>> cases{
        {"markov", 3}, {"torus1", 4}, {"torus2", 5}, {"sphere4", 6}, {"triang_a", 8}};
    for (const auto& [name, rank] : cases) {
      const auto& e = catalog_entry(name);
      o.expect(e.surface && surface_rank(*e.surface) == rank, std::string(name) + " rank");
      o.expect(e.quiver.size() == rank, std::string(name) + " vertex count");
    }
  });

  criterion(9, "classifier decisions", 1, [](Outcome& o) {
    auto v = [](int g, std::vector<int> b, int p) {
      return classify_surface({"s", {SurfaceComponent{g, std::move(b), p}}}).verdict;
    };
    o.expect(v(1, {2}, 0) == LocalAcyclicity::LocallyAcyclic, "torus with two points");
    o.expect(v(1, {1}, 0) == LocalAcyclicity::NotLocallyAcyclic, "torus with one point");
    o.expect(v(1, {}, 1) == LocalAcyclicity::NotLocallyAcyclic, "once-punctured torus");
    for (int b = 1; b <= 4; ++b)
      for (int p = 0; p <= 4; ++p) {
        const SurfaceDescriptor d{"disc", {SurfaceComponent{0, {b}, p}}};
        if (!validate_surface(d).empty()) continue;
        o.expect(classify_surface(d).verdict == LocalAcyclicity::LocallyAcyclic, "punctured disc");
      }
    for (int g = 0; g <= 3; ++g)
      for (int p = 0; p <= 5; ++p) {
        const SurfaceDescriptor closed{"closed", {SurfaceComponent{g, {}, p}}};
        if (validate_surface(closed).empty())
          o.expect(classify_surface(closed).verdict == LocalAcyclicity::NotLocallyAcyclic, "closed surface");
        for (const auto& b : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {3, 1}}) {
          const SurfaceDescriptor d{"s", {SurfaceComponent{g, b, p}}};
          if (!validate_surface(d).empty()) continue;
          const bool unknown = g > 0 && b == std::vector<int>{1} && p > 0;
          o.expect((classify_surface(d).verdict == LocalAcyclicity::Unknown) == unknown, "unknown case");
        }
      }
  });

  criterion(10, "positivity propagation", 30, [](Outcome& o) {
    std::mt19937_64 rng(10);
    for (const auto& e : catalog()) {
      const auto mut = e.quiver.mutable_vertices();
      for (int t = 0; t < 100; ++t) {
        std::vector<BigRational> start;
        for (Index v = 0; v < e.quiver.size(); ++v) start.emplace_back(1 + int(rng() % 9), 1 + int(rng() % 9));
        std::vector<Index> path;
        for (int s = 0; s < 6; ++s) path.push_back(mut[rng() % mut.size()]);
        for (const auto& step : evaluate_cluster_point(e.quiver, start, path))
          for (const auto& x : step) o.expect(x > 0, e.name + ": nonpositive value");
      }
    }
  });

  criterion(11, "A2 enumeration and presentation", 5, [](Outcome& o) {
    const auto vars = enumerate_cluster_variables(catalog_seed("a2"), 6);
    o.expect(vars.variables.size() == 5 && vars.complete, "variable count");
    const Seed s = catalog_seed("a2");
    o.expect(check_presentation(s, acyclic_presentation(s)), "presentation");
    o.expect(relation_lines(acyclic_presentation(catalog_seed("single"))) == std::vector<std::string>{"a1 * a1' = 2"},
             "single vertex relation");
  });

  criterion(12, "full-rank freezing", 10, [](Outcome& o) {
    std::mt19937_64 rng(12);
    int instances = 0;
    while (instances < 200) {
      const IceQuiver q = testing::random_quiver(rng, 8, 3, 0.2, 0.6);
      if (!is_full_rank(q) || q.mutable_count() < 2) continue;
      ++instances;
      auto mut = q.mutable_vertices();
      std::shuffle(mut.begin(), mut.end(), rng);
      mut.resize(1 + rng() % (mut.size() - 1));
      o.expect(is_full_rank(freeze(q, mut)), "lost full rank");
    }
  });

  criterion(13, "isolated Jacobian identity", 10, [](Outcome& o) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
      const IceQuiver q = isolated_instance(rng);
      std::map<Index, BigRational> values;
      for (Index v : q.frozen_vertices()) {
        int num = 0;
        while (num == 0) num = int(rng() % 19) - 9;
        values[v] = BigRational(num, 1 + int(rng() % 7));
      }
      const auto r = isolated_jacobian_check(q, values);
      o.expect(r.status == JacobianStatus::Pass, "not Pass");
    }
  });

  criterion(14, "stop-predicate equivalence", 120, [](Outcome& o) {
    for (const char* name : {"smallex", "x6"}) {
      BanffOptions a, i;
      i.stop = StopPredicate::Isolated;
      const auto ra = run_banff(catalog_quiver(name), a);
      const auto ri = run_banff(catalog_quiver(name), i);
      o.expect(ra.ok() == ri.ok(), std::string(name) + ": outcomes differ");
      o.expect(ra.ok(), std::string(name) + ": acyclic run failed");
      if (ri.ok()) o.expect(verify_certificate(*ri.certificate).accepted, "isolated certificate rejected");
    }
  });

  criterion(15, "certificate tampering", 10, [](Outcome& o) {
    std::vector<BanffCertificate> valid;
    for (const char* name : {"smallex", "x6"}) {
      BanffOptions opt;
      opt.seed_level = true;
      valid.push_back(*run_banff(catalog_seed(name), opt).certificate);
      valid.push_back(*run_banff(catalog_quiver(name), BanffOptions{}).certificate);
    }
    std::mt19937_64 rng(15);
    int rejected = 0;
    for (int t = 0; t < 100; ++t) {
      BanffCertificate c = valid[rng() % valid.size()];
      std::vector<std::size_t> branches, leaves;
      for (std::size_t i = 0; i < c.nodes.size(); ++i)
        (c.nodes[i].kind == CertificateNode::Kind::Branch ? branches : leaves).push_back(i);
      switch (t % 3) {
        case 0: {
          auto& n = c.nodes[branches[rng() % branches.size()]];
          std::swap(n.pair.source, n.pair.target);
          break;
        }
        case 1: {
          // exchange the stated data of two leaves that differ
          std::size_t a = leaves[rng() % leaves.size()], b = a;
          for (std::size_t l : leaves)
            if (!(c.nodes[l].quiver == c.nodes[a].quiver)) b = l;
          std::swap(c.nodes[a].quiver, c.nodes[b].quiver);
          std::swap(c.nodes[a].cluster, c.nodes[b].cluster);
          break;
        }
        default: {
          auto& n = c.nodes[rng() % c.nodes.size()];
          // append a mutation at a vertex with arrows, so the replay moves
          for (Index v : n.quiver.mutable_vertices()) {
            bool arrows = false;
            for (Index w = 0; w < n.quiver.size(); ++w) arrows = arrows || n.quiver(v, w) != 0;
            if (arrows) {
              n.path.push_back(v);
              break;
            }
          }
          break;
        }
      }
      const auto v = verify_certificate(c);
      const bool located = !v.accepted && v.node >= 0 && v.node < int(c.nodes.size());
      o.expect(located, "tampering " + std::to_string(t) + " not rejected with a location");
      rejected += located;
    }
    o.expect(rejected == 100, "rejections");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
