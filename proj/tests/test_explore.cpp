#include <doctest.h>

#include <deque>
#include <random>

#include "clusterscope/catalog.hpp"
#include "clusterscope/explore.hpp"
#include "support.hpp"

using namespace clusterscope;

namespace {

IceQuiver linear_a(Index n) {
  std::vector<Arrow> arrows;
  for (Index i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1, 1});
  return IceQuiver::from_arrows(n, arrows);
}

IceQuiver from_signed(const std::vector<std::vector<std::int64_t>>& m, const IceQuiver& like) {
  ArrowMatrix a(like.size(), like.size());
  for (Index i = 0; i < like.size(); ++i)
    for (Index j = 0; j < like.size(); ++j) a(i, j) = m[std::size_t(i)][std::size_t(j)];
  return IceQuiver(a, like.frozen_flags());
}

// Breadth-first search with oracle mutation and brute-force isomorphism.
std::vector<IceQuiver> brute_class(const IceQuiver& q, int depth) {
  std::vector<IceQuiver> seen{q};
  std::deque<std::pair<IceQuiver, int>> todo{{q, 0}};
  while (!todo.empty()) {
    auto [cur, d] = todo.front();
    todo.pop_front();
    if (d == depth) continue;
    for (Index k : cur.mutable_vertices()) {
      const IceQuiver next = from_signed(testing::oracle_mutate(cur, k), cur);
      bool known = false;
      for (const auto& s : seen)
        if (testing::oracle_isomorphic(s, next)) {
          known = true;
          break;
        }
      if (!known) {
        seen.push_back(next);
        todo.emplace_back(next, d + 1);
      }
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("type A class sizes") {
  // unlabelled quivers in the class of A_n
  const std::vector<std::size_t> expect{1, 1, 4, 6, 19, 49};
  for (Index n = 1; n <= 6; ++n) {
    Budget b;
    b.depth = 20;
    const auto cls = mutation_class(linear_a(n), b);
    CHECK(cls.complete);
    CHECK(cls.size() == expect[std::size_t(n - 1)]);
  }
}

TEST_CASE("D4 and fixture classes") {
  Budget b;
  const auto star = IceQuiver::from_arrows(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  const auto d4 = mutation_class(star, b);
  CHECK(d4.complete);
  CHECK(d4.size() == 6);
  CHECK(brute_class(star, 10).size() == 6);
  CHECK(mutation_class(catalog_quiver("markov"), b).size() == 1);
  CHECK(mutation_class(catalog_quiver("x6"), b).size() == 5);
  CHECK(mutation_class(catalog_quiver("x7"), b).size() == 2);
}

TEST_CASE("class members match brute force within a radius") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const IceQuiver q = testing::random_quiver(rng, 4, 2, 0.25, 0.6);
    Budget b;
    b.depth = 3;
    const auto cls = mutation_class(q, b);
    const auto brute = brute_class(q, 3);
    REQUIRE(cls.size() == brute.size());
    for (const auto& m : cls.members) {
      CHECK(m.quiver == mutate_along(q, m.path));
      CHECK(m.form == canonical_form(m.quiver));
      CHECK(static_cast<int>(m.path.size()) <= 3);
      bool found = false;
      for (const auto& s : brute) found = found || testing::oracle_isomorphic(s, m.quiver);
      CHECK(found);
    }
  }
}

TEST_CASE("budgets stop exploration honestly") {
  Budget b;
  b.class_budget = 3;
  const auto cls = mutation_class(linear_a(5), b);
  CHECK(cls.size() <= 3);
  CHECK_FALSE(cls.complete);
  b.class_budget = 10000;
  b.depth = 1;
  CHECK_FALSE(mutation_class(linear_a(5), b).complete);
  // Markov needs no depth at all to be complete
  b.depth = 0;
  CHECK(mutation_class(catalog_quiver("markov"), b).complete);
}

TEST_CASE("mutable-part key ignores frozen decorations") {
  const IceQuiver q = IceQuiver::from_arrows(3, {{0, 1, 1}, {1, 2, 3}}, {2});
  Budget b;
  const auto full = explore_class(q, b, ClassKey::Full);
  const auto part = explore_class(q, b, ClassKey::MutablePart);
  CHECK(part.size() == 1);
  CHECK(full.size() >= part.size());
}

TEST_CASE("exploration does not depend on the thread count") {
  Budget one, four;
  one.threads = 1;
  four.threads = 4;
  for (const char* name : {"x6", "smallex", "la3"}) {
    one.class_budget = four.class_budget = 400;
    const auto a = mutation_class(catalog_quiver(name), one);
    const auto b = mutation_class(catalog_quiver(name), four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a.members[i].form == b.members[i].form);
      CHECK(a.members[i].path == b.members[i].path);
    }
    CHECK(a.complete == b.complete);
  }
}

TEST_CASE("searches") {
  Budget b;
  const auto cyc = find_acyclic_seed(catalog_quiver("a3_cycle"), b);
  REQUIRE(cyc.verdict == Verdict::Found);
  CHECK(cyc.path.size() == 1);
  CHECK(is_acyclic(mutate_along(catalog_quiver("a3_cycle"), cyc.path)));

  CHECK(find_acyclic_seed(catalog_quiver("markov"), b).verdict == Verdict::ProvenAbsent);
  CHECK(find_acyclic_seed(catalog_quiver("x6"), b).verdict == Verdict::ProvenAbsent);
  CHECK(find_covering_pair_seed(catalog_quiver("x7"), b).verdict == Verdict::ProvenAbsent);

  const auto pair = find_covering_pair_seed(catalog_quiver("x6"), b);
  REQUIRE(pair.verdict == Verdict::Found);
  REQUIRE(pair.pair.has_value());
  CHECK(pair.path.empty());

  const auto iso = find_isolated_seed(IceQuiver::from_arrows(2, {{0, 1, 1}}), b);
  CHECK(iso.verdict == Verdict::ProvenAbsent);
  CHECK(find_isolated_seed(IceQuiver::from_arrows(2, {}), b).verdict == Verdict::Found);

  b.depth = 2;
  CHECK(find_acyclic_seed(catalog_quiver("smallex"), b).verdict == Verdict::BudgetExhausted);
}

TEST_CASE("found paths replay to a witness") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const IceQuiver q = testing::random_quiver(rng, 5, 2, 0.2, 0.6);
    Budget b;
    b.depth = 4;
    b.class_budget = 500;
    const auto out = find_acyclic_seed(q, b);
    if (out.verdict != Verdict::Found) continue;
    CHECK(testing::oracle_acyclic(mutate_along(q, out.path)));
    REQUIRE(out.quiver.has_value());
    CHECK(*out.quiver == mutate_along(q, out.path));
  }
}

TEST_CASE("thread resolution") {
  CHECK(resolve_threads(3) == 3);
  CHECK(resolve_threads(0) >= 1);
}
