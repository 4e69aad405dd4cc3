#include "shadowpi/shadow.hpp"

#include "shadowpi/error.hpp"

namespace shadowpi {

LinkDiagram::LinkDiagram(DiskMap map, std::vector<int> over_parity,
                         std::vector<DartId> forward_darts)
    : map_(std::move(map)), over_parity_(std::move(over_parity)) {
  if (static_cast<int>(over_parity_.size()) != map_.num_crossings()) {
    throw Error(ErrorCode::ParseError, "over/under data must cover every crossing",
                {{"expected", map_.num_crossings()}, {"got", over_parity_.size()}});
  }
  for (int& p : over_parity_) {
    if (p != 0 && p != 1) throw Error(ErrorCode::ParseError, "over parity must be 0 or 1");
  }
  forward_.assign(map_.num_darts(), 0);
  if (forward_darts.empty()) {
    std::vector<char> done(map_.num_edges(), 0);
    for (EdgeId e = 0; e < map_.num_edges(); ++e) {
      if (done[e]) continue;
      const DartId start = map_.edge_darts(e)[0];
      DartId d = start;
      do {
        forward_[d] = 1;
        done[map_.edge(d)] = 1;
        d = map_.next_along_curve(d);
      } while (d != start);
    }
    return;
  }
  if (static_cast<int>(forward_darts.size()) != map_.num_edges()) {
    throw Error(ErrorCode::InvalidOrientation, "orientation must name one dart per edge");
  }
  std::vector<char> covered(map_.num_edges(), 0);
  for (DartId d : forward_darts) {
    const EdgeId e = map_.edge(d);
    if (covered[e]) throw Error(ErrorCode::InvalidOrientation, "edge oriented twice", {{"edge", e}});
    covered[e] = 1;
    forward_[d] = 1;
  }
  for (CrossingId v = 0; v < map_.num_crossings(); ++v) {
    for (int p = 0; p < 2; ++p) {
      if (forward_[map_.dart_at(v, p)] == forward_[map_.dart_at(v, p + 2)]) {
        throw Error(ErrorCode::InvalidOrientation,
                    "orientation is not coherent through crossing " + std::to_string(v),
                    {{"crossing", v}});
      }
    }
  }
}

DartId LinkDiagram::forward_dart(EdgeId e) const {
  const auto& darts = map_.edge_darts(e);
  return forward_[darts[0]] ? darts[0] : darts[1];
}

std::vector<DartId> LinkDiagram::forward_darts() const {
  std::vector<DartId> out;
  out.reserve(map_.num_edges());
  for (EdgeId e = 0; e < map_.num_edges(); ++e) out.push_back(forward_dart(e));
  return out;
}

LinkDiagram LinkDiagram::with_over_parities(std::vector<int> over_parity) const {
  return LinkDiagram(map_, std::move(over_parity), forward_darts());
}

LinkDiagram LinkDiagram::reversed(int component) const {
  std::vector<DartId> fwd;
  fwd.reserve(map_.num_edges());
  for (EdgeId e = 0; e < map_.num_edges(); ++e) {
    const DartId d = forward_dart(e);
    const bool flip = component == kNone || map_.component(e) == component;
    fwd.push_back(flip ? map_.twin(d) : d);
  }
  return LinkDiagram(map_, over_parity_, std::move(fwd));
}

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::A: return "a";
    case RegionLabel::B: return "b";
    case RegionLabel::C: return "c";
    case RegionLabel::Chamber: return "chamber";
    case RegionLabel::Outer: return "outer";
  }
  return "?";
}

RegionLabel label_from_string(std::string_view s) {
  if (s == "a") return RegionLabel::A;
  if (s == "b") return RegionLabel::B;
  if (s == "c") return RegionLabel::C;
  if (s == "chamber") return RegionLabel::Chamber;
  if (s == "outer") return RegionLabel::Outer;
  throw Error(ErrorCode::ParseError, "unknown region label '" + std::string(s) + "'");
}

std::vector<RegionId> SubSelection::regions() const {
  std::vector<RegionId> out;
  for (RegionId r = 0; r < static_cast<RegionId>(selected.size()); ++r) {
    if (selected[r]) out.push_back(r);
  }
  return out;
}

std::vector<int> compute_twice_c(const LinkDiagram& diagram) {
  const DiskMap& map = diagram.map();
  std::vector<int> twice_c(map.num_regions(), 0);
  for (const Region& r : map.regions()) {
    for (DartId d : r.boundary) {
      // Corner at the far end of d: arrive along twin(d), leave along the next
      // boundary dart, which is the clockwise neighbour of twin(d).
      twice_c[r.id] += diagram.is_over(map.twin(d)) ? 1 : -1;
    }
  }
  return twice_c;
}

int crossing_sign(const LinkDiagram& diagram, CrossingId v) {
  const DiskMap& map = diagram.map();
  const int p = diagram.over_parity(v);
  const int over_out = diagram.is_forward(map.dart_at(v, p)) ? p : p + 2;
  const int under_out = diagram.is_forward(map.dart_at(v, p + 1)) ? p + 1 : p + 3;
  return (under_out % 4) == ((over_out + 1) % 4) ? 1 : -1;
}

Diagnostics validate_shadow(const ShadowedPolyhedron& shadow, const SubSelection& selection) {
  Diagnostics diag;
  const DiskMap& map = shadow.map();
  if (static_cast<int>(shadow.twice_gleam.size()) != map.num_regions() ||
      static_cast<int>(selection.selected.size()) != map.num_regions()) {
    diag.issues.push_back({"SizeMismatch", kNone, "gleam or selection does not cover all regions"});
    return diag;
  }
  const auto twice_c = compute_twice_c(shadow.diagram);
  for (RegionId r : map.internal_regions()) {
    if (!selection.contains(r)) continue;
    if ((shadow.twice_gleam[r] - twice_c[r]) % 2 != 0) {
      diag.issues.push_back({"HalfIntegerExponent", r,
                             "gl(R) - c(R) is not an integer on region " + std::to_string(r)});
    }
  }
  return diag;
}

SubSelection all_internal(const DiskMap& map) {
  SubSelection s;
  s.selected.assign(map.num_regions(), 1);
  s.selected[map.outer_region()] = 0;
  return s;
}

SubSelection select_regions(const ShadowedPolyhedron& shadow, Preset preset) {
  const DiskMap& map = shadow.map();
  if (preset == Preset::Yabc) return all_internal(map);
  if (!shadow.labels) throw Error(ErrorCode::MissingLabels, "preset selection needs region labels");
  const auto& labels = *shadow.labels;
  SubSelection s;
  s.selected.assign(map.num_regions(), 0);
  for (RegionId r = 0; r < map.num_regions(); ++r) {
    const RegionLabel l = labels.at(r);
    const bool fiber = l == RegionLabel::A || l == RegionLabel::C;
    s.selected[r] = fiber || (preset == Preset::YaSquareC && l == RegionLabel::B);
  }
  return s;
}

SubSelection select_regions(const ShadowedPolyhedron& shadow, const std::vector<RegionId>& regions,
                            Diagnostics* warnings) {
  const DiskMap& map = shadow.map();
  SubSelection s;
  s.selected.assign(map.num_regions(), 0);
  for (RegionId r : regions) {
    if (r < 0 || r >= map.num_regions()) {
      throw Error(ErrorCode::UnknownRegion, "region " + std::to_string(r) + " does not exist",
                  {{"region", r}});
    }
    s.selected[r] = 1;
    if (r == map.outer_region() && warnings) {
      warnings->issues.push_back({"OuterInCustomSelectionWarning", r,
                                  "selection contains the region touching the disk boundary"});
    }
  }
  return s;
}

}  // namespace shadowpi
