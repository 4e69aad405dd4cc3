#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "shadowpi/planar_map.hpp"

namespace shadowpi {

// A DiskMap with over/under data at each crossing and an orientation of every
// curve component.
class LinkDiagram {
 public:
  // over_parity[v] = p means the darts at positions p and p+2 of crossing v
  // form the overstrand. forward_darts lists, per edge, the dart pointing along
  // the orientation; an empty list picks each component's smallest dart.
  LinkDiagram(DiskMap map, std::vector<int> over_parity, std::vector<DartId> forward_darts = {});

  const DiskMap& map() const { return map_; }
  int over_parity(CrossingId v) const { return over_parity_.at(v); }
  const std::vector<int>& over_parities() const { return over_parity_; }
  bool is_over(DartId d) const { return (map_.position(d) & 1) == over_parity_[map_.vertex(d)]; }
  bool is_forward(DartId d) const { return forward_[d]; }
  DartId forward_dart(EdgeId e) const;
  std::vector<DartId> forward_darts() const;

  LinkDiagram with_over_parities(std::vector<int> over_parity) const;
  // Flips the orientation of one component (or all when component == kNone).
  LinkDiagram reversed(int component = kNone) const;

 private:
  DiskMap map_;
  std::vector<int> over_parity_;
  std::vector<char> forward_;
};

enum class RegionLabel { A, B, C, Chamber, Outer };

std::string_view to_string(RegionLabel label);
RegionLabel label_from_string(std::string_view s);

// Gleams are stored doubled so half-integers stay exact; the outer region's
// entry is unused and kept at zero.
struct ShadowedPolyhedron {
  LinkDiagram diagram;
  std::vector<int> twice_gleam;
  std::optional<std::vector<RegionLabel>> labels;
  // Geometric source of a built shadow (the divide polylines), used for
  // rendering only.
  nlohmann::json provenance;

  const DiskMap& map() const { return diagram.map(); }
};

// Regions of the disk included in Y. The annular regions are always included.
struct SubSelection {
  std::vector<char> selected;

  bool contains(RegionId r) const { return selected.at(r) != 0; }
  std::vector<RegionId> regions() const;
};

enum class Preset { Yabc, Yac, YaSquareC };

struct Diagnostic {
  std::string code;
  RegionId region = kNone;
  std::string message;
};

struct Diagnostics {
  std::vector<Diagnostic> issues;
  bool ok() const { return issues.empty(); }
};

// Doubled corner sum 2*c(R) for every region (outer included). Walking the
// region boundary counterclockwise, a corner entered along the overstrand and
// left along the understrand contributes +1/2, the reverse -1/2.
std::vector<int> compute_twice_c(const LinkDiagram& diagram);

// +1 iff (over direction, under direction) is a positively oriented frame.
int crossing_sign(const LinkDiagram& diagram, CrossingId v);

Diagnostics validate_shadow(const ShadowedPolyhedron& shadow, const SubSelection& selection);

SubSelection select_regions(const ShadowedPolyhedron& shadow, Preset preset);
// Custom subset; including the outer region is allowed but reported.
SubSelection select_regions(const ShadowedPolyhedron& shadow, const std::vector<RegionId>& regions,
                            Diagnostics* warnings = nullptr);

SubSelection all_internal(const DiskMap& map);

}  // namespace shadowpi
