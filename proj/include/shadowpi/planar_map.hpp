#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace shadowpi {

using DartId = int;
using CrossingId = int;
using EdgeId = int;
using RegionId = int;

inline constexpr int kNone = -1;

// Raw input for a 4-valent diagram: darts listed counterclockwise around each
// crossing, plus the twin pairing of darts into edges. Dart ids must be exactly
// 0..4V-1.
struct CrossingTable {
  std::vector<std::vector<DartId>> crossings;
  std::vector<std::array<DartId, 2>> edges;
  DartId outer_dart = 0;

  bool operator==(const CrossingTable&) const = default;
};

// A face of the map. The boundary lists darts that have the region on their
// left, in traversal order, starting at the smallest dart. Internal regions are
// walked counterclockwise.
struct Region {
  RegionId id = kNone;
  std::vector<DartId> boundary;
  bool is_outer = false;
};

// Generically immersed closed curves on the disk, encoded as a rotation system
// with a marked outer region. Immutable after construction.
class DiskMap {
 public:
  // Validates and traces regions. Throws Error with NonQuadrivalent,
  // BrokenInvolution, DisconnectedCurve, EulerMismatch, EmptyDiagram or
  // UnknownDart.
  static DiskMap build(const CrossingTable& table);

  int num_crossings() const { return static_cast<int>(crossing_darts_.size()); }
  int num_darts() const { return static_cast<int>(twin_.size()); }
  int num_edges() const { return static_cast<int>(edge_darts_.size()); }
  int num_regions() const { return static_cast<int>(regions_.size()); }
  int num_components() const { return num_components_; }

  DartId twin(DartId d) const { return twin_[check(d)]; }
  CrossingId vertex(DartId d) const { return vertex_[check(d)]; }
  int position(DartId d) const { return position_[check(d)]; }
  DartId dart_at(CrossingId v, int pos) const { return crossing_darts_[v][pos & 3]; }
  // Counterclockwise successor around the crossing.
  DartId next_ccw(DartId d) const { return dart_at(vertex(d), position(d) + 1); }
  DartId prev_ccw(DartId d) const { return dart_at(vertex(d), position(d) + 3); }
  // The dart continuing the same curve straight through the crossing.
  DartId opposite(DartId d) const { return dart_at(vertex(d), position(d) + 2); }
  // Next dart along the curve: leave along d, pass straight through the far
  // crossing.
  DartId next_along_curve(DartId d) const { return opposite(twin(d)); }
  // Next dart of the face to the left of d.
  DartId next_in_face(DartId d) const { return prev_ccw(twin(d)); }

  EdgeId edge(DartId d) const { return edge_[check(d)]; }
  const std::array<DartId, 2>& edge_darts(EdgeId e) const { return edge_darts_.at(e); }
  int component(EdgeId e) const { return component_.at(e); }

  RegionId left_region(DartId d) const { return left_region_[check(d)]; }
  // Index of d inside its region's boundary list.
  int boundary_index(DartId d) const { return boundary_index_[check(d)]; }
  const Region& region(RegionId r) const { return regions_.at(r); }
  const std::vector<Region>& regions() const { return regions_; }
  RegionId outer_region() const { return outer_region_; }
  DartId outer_dart() const { return outer_dart_; }
  std::vector<RegionId> internal_regions() const;

  // Canonical crossing table; DiskMap::build(table()) reproduces this map.
  CrossingTable table() const;

 private:
  int check(DartId d) const;

  std::vector<std::array<DartId, 4>> crossing_darts_;
  std::vector<DartId> twin_;
  std::vector<CrossingId> vertex_;
  std::vector<int> position_;
  std::vector<EdgeId> edge_;
  std::vector<std::array<DartId, 2>> edge_darts_;
  std::vector<int> component_;
  int num_components_ = 0;
  std::vector<RegionId> left_region_;
  std::vector<int> boundary_index_;
  std::vector<Region> regions_;
  RegionId outer_region_ = kNone;
  DartId outer_dart_ = kNone;
};

// Left-face traversal of a valid dart structure; regions are numbered by
// their smallest dart. The outer flag is left unset.
std::vector<Region> trace_regions(const DiskMap& map);

}  // namespace shadowpi
