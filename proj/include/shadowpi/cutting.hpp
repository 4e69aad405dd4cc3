#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "shadowpi/shadow.hpp"

namespace shadowpi {

// A system of cutting trees, stored as a spanning tree of the region
// adjacency graph rooted at the outer region. Each internal region R has one
// parent dart p with left_region(p) == R; the tree edge crosses the curve at
// the cutting point on p's edge and enters the region left of twin(p).
struct CuttingSystem {
  std::vector<DartId> parent_dart;  // kNone for the outer region
  // Cutting points dropped by reduce_system.
  std::vector<char> removed;

  RegionId parent(const DiskMap& map, RegionId r) const;
  EdgeId cut_edge(const DiskMap& map, RegionId r) const;
  bool is_removed(RegionId r) const { return !removed.empty() && removed[r]; }
  int num_cutting_points() const;
  int num_active_cutting_points() const;
};

// Region -> crossed edge id pairs, as read from a cutting file.
using CutEntries = std::vector<std::pair<RegionId, EdgeId>>;

CutEntries to_entries(const DiskMap& map, const CuttingSystem& cs);

// Checks forest structure, shared-boundary edges, one vertex per internal
// region, and that the uncrossed edges form a spanning tree of the curve.
// Codes: NotAForest, EdgeNotOnSharedBoundary, ComplementNotSpanningTree,
// RegionWithoutVertex.
Diagnostics validate_cut(const DiskMap& map, const CutEntries& entries);
Diagnostics validate_cut(const DiskMap& map, const CuttingSystem& cs);

// Throws InvalidCut (diagnostics in the context) if validation fails.
CuttingSystem make_cut(const DiskMap& map, const CutEntries& entries);

// Breadth-first dual tree from the outer region. Seed 0 scans edges by id;
// other seeds scan them in a fixed pseudo-random order.
CuttingSystem auto_cut(const DiskMap& map, std::uint64_t seed = 0);
// Uniformly shuffled Kruskal dual tree; reaches non-BFS shapes.
CuttingSystem random_cut(const DiskMap& map, std::uint64_t seed);

// Marks every tree that is a single leaf hanging off the outer region.
CuttingSystem reduce_system(const DiskMap& map, const CuttingSystem& cs);

struct PieceRef {
  RegionId region = kNone;
  int piece = 0;
  bool operator==(const PieceRef&) const = default;
};

// An arc of the curve between cutting points (an edge or half an edge).
struct EdgePiece {
  EdgeId edge = kNone;
  int half = 0;  // 0 near the tail of the forward dart, 1 near the head
  PieceRef left;
  PieceRef right;
  int strand = kNone;
};

struct CuttingPoint {
  RegionId region = kNone;
  DartId dart = kNone;  // parent dart of the region
  int forward_strand = kNone;
  int backward_strand = kNone;
  PieceRef forward_piece;  // the piece of the region next to the forward strand
};

// Everything the presentation needs from a diagram plus a cutting system.
class CutLayout {
 public:
  CutLayout(const LinkDiagram& diagram, const CuttingSystem& cs);

  const CuttingSystem& system() const { return cs_; }
  int num_pieces(RegionId r) const { return static_cast<int>(std::max<std::size_t>(1, attachments_[r].size())); }
  // Boundary positions of tree-edge attachments in region r, ascending.
  const std::vector<int>& attachments(RegionId r) const { return attachments_[r]; }
  const std::vector<RegionId>& children(RegionId r) const { return children_[r]; }

  // Piece containing the part of boundary dart d after (head) or before
  // (tail) any cutting point on it.
  PieceRef head_piece(DartId d) const;
  PieceRef tail_piece(DartId d) const;

  const std::vector<EdgePiece>& edge_pieces() const { return pieces_; }
  int num_strands() const { return num_strands_; }
  // Index into edge_pieces() of the piece of d's edge touching vertex(d).
  int piece_at_tail(DartId d) const;
  int piece_at_head(DartId d) const { return piece_at_tail(map_.twin(d)); }
  bool is_cut(EdgeId e) const { return cut_region_[e] != kNone; }

  // Active cutting points, ordered by region id.
  const std::vector<CuttingPoint>& cutting_points() const { return points_; }
  const CuttingPoint* cutting_point(RegionId r) const;

  // Regions of the subtree rooted at r, counterclockwise first-visit order.
  std::vector<RegionId> subtree_ccw(RegionId r) const;

 private:
  int piece_index(RegionId r, int pos, bool head) const;

  DiskMap map_;
  CuttingSystem cs_;
  std::vector<std::vector<int>> attachments_;
  std::vector<std::vector<RegionId>> children_;
  std::vector<RegionId> cut_region_;  // per edge: region whose cut lies on it
  std::vector<EdgePiece> pieces_;
  std::vector<int> first_piece_;  // per edge
  std::vector<DartId> forward_dart_;
  int num_strands_ = 0;
  std::vector<CuttingPoint> points_;
  std::vector<int> point_of_region_;
};

std::vector<RegionId> subtree_regions_ccw(const LinkDiagram& diagram, const CuttingSystem& cs,
                                          RegionId r);
// (forward strand, backward strand) at the cutting point of r.
std::pair<int, int> forward_backward(const LinkDiagram& diagram, const CuttingSystem& cs,
                                     RegionId r);

}  // namespace shadowpi
