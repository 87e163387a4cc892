#include "clusterscope/surface.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "clusterscope/qvr.hpp"

namespace clusterscope {

int SurfaceComponent::boundary_points() const {
  return std::accumulate(boundary.begin(), boundary.end(), 0);
}

std::vector<std::string> validate_surface(const SurfaceDescriptor& d) {
  std::vector<std::string> out;
  int total = 0;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    const std::string at = "component " + std::to_string(i + 1) + ": ";
    if (c.genus < 0) out.push_back(at + "negative genus");
    if (c.punctures < 0) out.push_back(at + "negative puncture count");
    bool unmarked = false;
    for (int b : c.boundary)
      if (b < 1) unmarked = true;
    if (unmarked) out.push_back(at + "boundary circle without marked points");
    if (c.genus < 0 || c.punctures < 0 || unmarked) continue;
    total += c.marked_points();
    if (c.marked_points() == 0) out.push_back(at + "no marked points");
    if (c.genus == 0 && c.circles() == 0 && c.punctures <= 3)
      out.push_back(at + "sphere with at most three punctures");
    if (c.genus == 0 && c.circles() == 1 && c.boundary[0] == 1 && c.punctures <= 1)
      out.push_back(at + "disc with one boundary marked point and at most one puncture");
    if (c.genus == 0 && c.circles() == 1 && c.boundary[0] <= 2 && c.punctures == 0)
      out.push_back(at + "disc with at most two boundary marked points and no punctures");
  }
  if (d.components.empty() || total == 0) out.push_back("no marked points");
  return out;
}

namespace {

void require_valid(const SurfaceDescriptor& d) {
  const auto v = validate_surface(d);
  if (v.empty()) return;
  std::string msg = "invalid surface";
  for (const auto& s : v) msg += "; " + s;
  throw std::invalid_argument(msg);
}

}  // namespace

int surface_rank(const SurfaceDescriptor& d) {
  require_valid(d);
  int rank = 0;
  for (const auto& c : d.components)
    rank += 6 * c.genus + 3 * c.circles() + 2 * c.punctures + c.marked_points() - 6;
  return rank;
}

const char* acyclicity_name(LocalAcyclicity a) {
  switch (a) {
    case LocalAcyclicity::LocallyAcyclic: return "LocallyAcyclic";
    case LocalAcyclicity::NotLocallyAcyclic: return "NotLocallyAcyclic";
    case LocalAcyclicity::Unknown: return "Unknown";
  }
  return "?";
}

SurfaceClassification classify_surface(const SurfaceDescriptor& d) {
  require_valid(d);
  SurfaceClassification out;
  bool any_not = false, all_la = true;
  for (const auto& c : d.components) {
    ComponentVerdict v;
    if (c.circles() == 0) {
      v = {LocalAcyclicity::NotLocallyAcyclic, "Thm-noboundary"};
    } else if (c.marked_points() == 1) {
      v = {LocalAcyclicity::NotLocallyAcyclic, "Thm-oneboundary"};
    } else if (c.genus == 0) {
      v = {LocalAcyclicity::LocallyAcyclic, "Thm-inadisc"};
    } else if (c.boundary_points() >= 2) {
      v = {LocalAcyclicity::LocallyAcyclic, "Thm-atleast2"};
    } else {
      v = {LocalAcyclicity::Unknown, "Remark-unknown"};
    }
    any_not = any_not || v.verdict == LocalAcyclicity::NotLocallyAcyclic;
    all_la = all_la && v.verdict == LocalAcyclicity::LocallyAcyclic;
    out.components.push_back(std::move(v));
  }
  out.verdict = any_not  ? LocalAcyclicity::NotLocallyAcyclic
                : all_la ? LocalAcyclicity::LocallyAcyclic
                         : LocalAcyclicity::Unknown;
  return out;
}

namespace {

int parse_count(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'", line);
  }
}

}  // namespace

SurfaceDescriptor parse_surface(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool header = false, ended = false;
  SurfaceDescriptor d;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream s(raw);
    std::string word;
    if (!(s >> word)) continue;
    if (ended) throw ParseError("trailing content after 'end'", line);
    if (!header) {
      if (word != "surface") throw ParseError("expected 'surface <name>'", line);
      std::getline(s, d.name);
      const auto first = d.name.find_first_not_of(' ');
      d.name = first == std::string::npos ? "" : d.name.substr(first);
      header = true;
      continue;
    }
    if (word == "end") {
      ended = true;
      continue;
    }
    if (word != "component") throw ParseError("expected 'component' or 'end'", line);
    SurfaceComponent c;
    bool g = false, b = false, p = false;
    std::string token;
    while (s >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value, got '" + token + "'", line);
      const std::string key = token.substr(0, eq), value = token.substr(eq + 1);
      if (key == "genus" && !g) {
        c.genus = parse_count(value, line);
        g = true;
      } else if (key == "boundary" && !b) {
        if (value != "none") {
          std::istringstream items(value);
          std::string item;
          while (std::getline(items, item, ',')) c.boundary.push_back(parse_count(item, line));
        }
        b = true;
      } else if (key == "punctures" && !p) {
        c.punctures = parse_count(value, line);
        p = true;
      } else {
        throw ParseError("unexpected or repeated field '" + key + "'", line);
      }
    }
    if (!(g && b && p)) throw ParseError("component needs genus, boundary and punctures", line);
    d.components.push_back(std::move(c));
  }
  if (!header) throw ParseError("missing 'surface' header", line);
  if (!ended) throw ParseError("missing 'end'", line);
  return d;
}

std::string to_surface_text(const SurfaceDescriptor& d) {
  std::ostringstream out;
  out << "surface " << (d.name.empty() ? "unnamed" : d.name) << "\n";
  for (const auto& c : d.components) {
    out << "component genus=" << c.genus << " boundary=";
    if (c.boundary.empty()) out << "none";
    for (std::size_t i = 0; i < c.boundary.size(); ++i) out << (i ? "," : "") << c.boundary[i];
    out << " punctures=" << c.punctures << "\n";
  }
  out << "end\n";
  return out.str();
}

}  // namespace clusterscope
