#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace clusterscope {

struct SurfaceComponent {
  int genus = 0;
  /// Marked points on each boundary circle.
  std::vector<int> boundary;
  int punctures = 0;

  int circles() const { return static_cast<int>(boundary.size()); }
  int boundary_points() const;
  int marked_points() const { return boundary_points() + punctures; }
};

struct SurfaceDescriptor {
  std::string name;
  std::vector<SurfaceComponent> components;
};

/// Empty when valid; otherwise one message per violation.
std::vector<std::string> validate_surface(const SurfaceDescriptor& d);

/// Number of tagged arcs in a triangulation: sum over components of
/// 6g + 3h + 2p + |M| - 6. Throws std::invalid_argument on invalid input.
int surface_rank(const SurfaceDescriptor& d);

enum class LocalAcyclicity { LocallyAcyclic, NotLocallyAcyclic, Unknown };

const char* acyclicity_name(LocalAcyclicity a);

struct ComponentVerdict {
  LocalAcyclicity verdict = LocalAcyclicity::Unknown;
  /// "Thm-noboundary", "Thm-oneboundary", "Thm-inadisc", "Thm-atleast2" or
  /// "Remark-unknown".
  std::string reason;
};

struct SurfaceClassification {
  LocalAcyclicity verdict = LocalAcyclicity::Unknown;
  std::vector<ComponentVerdict> components;
};

/// Per component, the first rule that applies: closed -> not locally
/// acyclic; one marked point -> not; genus 0 with boundary -> locally
/// acyclic; two or more boundary points -> locally acyclic; else unknown.
/// Throws std::invalid_argument on invalid input.
SurfaceClassification classify_surface(const SurfaceDescriptor& d);

/// Throws ParseError.
SurfaceDescriptor parse_surface(std::string_view text);
std::string to_surface_text(const SurfaceDescriptor& d);

}  // namespace clusterscope
