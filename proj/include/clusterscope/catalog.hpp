#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clusterscope/quiver.hpp"
#include "clusterscope/seed.hpp"
#include "clusterscope/surface.hpp"

namespace clusterscope {

struct CatalogEntry {
  std::string name;
  std::string description;
  IceQuiver quiver;
  /// The marked surface the quiver triangulates, when there is one.
  std::optional<SurfaceDescriptor> surface;
};

/// Fixture quivers, in listing order.
const std::vector<CatalogEntry>& catalog();

/// Throws std::out_of_range for unknown names.
const CatalogEntry& catalog_entry(std::string_view name);
IceQuiver catalog_quiver(std::string_view name);
Seed catalog_seed(std::string_view name);

}  // namespace clusterscope
