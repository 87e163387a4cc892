#include "clusterscope/catalog.hpp"

#include <stdexcept>

namespace clusterscope {

namespace {

// Arrows are written 1-based.
IceQuiver quiver_1based(Index n, std::initializer_list<Arrow> arrows) {
  std::vector<Arrow> shifted;
  for (const Arrow& a : arrows) shifted.push_back({a.source - 1, a.target - 1, a.multiplicity});
  return IceQuiver::from_arrows(n, shifted);
}

SurfaceDescriptor surface(std::string name, int genus, std::vector<int> boundary, int punctures) {
  return {std::move(name), {{genus, std::move(boundary), punctures}}};
}

std::vector<CatalogEntry> build() {
  const IceQuiver smallex = quiver_1based(4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {2, 4}, {3, 4}});
  const IceQuiver markov = quiver_1based(3, {{1, 2, 2}, {2, 3, 2}, {3, 1, 2}});
  const IceQuiver torus1 =
      quiver_1based(4, {{1, 2}, {2, 3}, {1, 3}, {4, 1}, {4, 2}, {3, 4, 2}});
  const IceQuiver torus2 =
      quiver_1based(5, {{1, 2}, {2, 3}, {1, 3}, {4, 1}, {4, 2}, {3, 4, 2}, {5, 1}, {2, 5}});
  const IceQuiver sphere4 = quiver_1based(6, {{1, 2}, {2, 3}, {3, 1}, {4, 1}, {1, 5}, {5, 3},
                                              {3, 6}, {6, 2}, {2, 4}, {5, 4}, {6, 5}, {4, 6}});
  const IceQuiver x6 =
      quiver_1based(6, {{1, 2}, {2, 4, 2}, {4, 1}, {1, 3}, {3, 5, 2}, {5, 1}, {1, 6}});
  const IceQuiver x7 = quiver_1based(
      7, {{1, 2}, {2, 4, 2}, {4, 1}, {1, 5}, {5, 3, 2}, {3, 1}, {1, 7}, {7, 6, 2}, {6, 1}});
  const IceQuiver triang_a =
      quiver_1based(8, {{1, 4}, {4, 7}, {8, 5}, {5, 2}, {1, 2}, {2, 3}, {3, 1}, {8, 7}, {7, 6},
                        {6, 8}, {3, 5}, {5, 6}, {6, 4}, {4, 3}});
  const IceQuiver triang_b =
      quiver_1based(8, {{1, 3}, {3, 2}, {3, 4}, {4, 6}, {6, 5}, {5, 3}, {8, 6}, {6, 7}});
  const IceQuiver triang_c = quiver_1based(
      8, {{1, 3}, {2, 3}, {4, 3}, {6, 4}, {6, 5}, {5, 3}, {6, 8}, {6, 7}, {3, 6}});

  const auto punctured_torus = surface("once-punctured torus", 1, {}, 1);
  const auto torus_one = surface("torus, one boundary point", 1, {1}, 0);
  const auto torus_two = surface("torus, two boundary points", 1, {2}, 0);
  const auto sphere = surface("sphere, four punctures", 0, {}, 4);
  const auto disc = surface("disc, two boundary points, three punctures", 0, {2}, 3);

  return {
      {"smallex", "small locally acyclic example: 3-cycle feeding a sink", smallex, {}},
      {"banff1_top", "top quiver of the first Banff example", smallex, {}},
      {"markov", "Markov quiver", markov, punctured_torus},
      {"torus1", "torus with one boundary marked point", torus1, torus_one},
      {"torus2", "torus with two boundary marked points", torus2, torus_two},
      {"sphere4", "sphere with four punctures", sphere4, sphere},
      {"x6", "X6", x6, {}},
      {"x7", "X7", x7, {}},
      {"triang_a", "disc triangulation (first)", triang_a, disc},
      {"triang_b", "disc triangulation (second)", triang_b, disc},
      {"triang_c", "disc triangulation (third)", triang_c, disc},
      {"la1", "locally acyclic gallery, first", smallex, {}},
      {"la2", "locally acyclic gallery, second", torus2, torus_two},
      {"la3", "locally acyclic gallery, third", triang_b, disc},
      {"la4", "locally acyclic gallery, fourth", x6, {}},
      {"nonla1", "non-locally-acyclic gallery, first", markov, punctured_torus},
      {"nonla2", "non-locally-acyclic gallery, second", torus1, torus_one},
      {"nonla3", "non-locally-acyclic gallery, third", sphere4, sphere},
      {"nonla4", "non-locally-acyclic gallery, fourth", x7, {}},
      {"a2", "A2: 1 -> 2", quiver_1based(2, {{1, 2}}), {}},
      {"a3_cycle", "directed 3-cycle", quiver_1based(3, {{1, 2}, {2, 3}, {3, 1}}), {}},
      {"single", "one mutable vertex", quiver_1based(1, {}), {}},
  };
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw std::out_of_range("unknown catalog name '" + std::string(name) + "'");
}

IceQuiver catalog_quiver(std::string_view name) { return catalog_entry(name).quiver; }

Seed catalog_seed(std::string_view name) { return initial_seed(catalog_quiver(name)); }

}  // namespace clusterscope
