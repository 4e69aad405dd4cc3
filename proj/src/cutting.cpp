#include "shadowpi/cutting.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "dsu.hpp"
#include "shadowpi/error.hpp"

namespace shadowpi {

using detail::Dsu;

RegionId CuttingSystem::parent(const DiskMap& map, RegionId r) const {
  const DartId p = parent_dart.at(r);
  return p == kNone ? kNone : map.left_region(map.twin(p));
}

EdgeId CuttingSystem::cut_edge(const DiskMap& map, RegionId r) const {
  const DartId p = parent_dart.at(r);
  return p == kNone ? kNone : map.edge(p);
}

int CuttingSystem::num_cutting_points() const {
  return static_cast<int>(std::count_if(parent_dart.begin(), parent_dart.end(),
                                        [](DartId d) { return d != kNone; }));
}

int CuttingSystem::num_active_cutting_points() const {
  int n = 0;
  for (RegionId r = 0; r < static_cast<RegionId>(parent_dart.size()); ++r) {
    if (parent_dart[r] != kNone && !is_removed(r)) ++n;
  }
  return n;
}

CutEntries to_entries(const DiskMap& map, const CuttingSystem& cs) {
  CutEntries out;
  for (RegionId r = 0; r < static_cast<RegionId>(cs.parent_dart.size()); ++r) {
    if (cs.parent_dart[r] != kNone) out.emplace_back(r, map.edge(cs.parent_dart[r]));
  }
  return out;
}

namespace {

// Dart of edge e lying on the boundary of r, or kNone.
DartId dart_in_region(const DiskMap& map, EdgeId e, RegionId r) {
  for (DartId d : map.edge_darts(e)) {
    if (map.left_region(d) == r) return d;
  }
  return kNone;
}

}  // namespace

Diagnostics validate_cut(const DiskMap& map, const CutEntries& entries) {
  Diagnostics diag;
  const int nr = map.num_regions();
  std::vector<DartId> parent(nr, kNone);
  std::vector<char> seen(nr, 0);
  for (const auto& [r, e] : entries) {
    if (r < 0 || r >= nr || r == map.outer_region()) {
      diag.issues.push_back({"NotAForest", r, "only internal regions can have a parent link"});
      continue;
    }
    if (seen[r]) {
      diag.issues.push_back({"NotAForest", r, "region " + std::to_string(r) + " has two parents"});
      continue;
    }
    seen[r] = 1;
    if (e < 0 || e >= map.num_edges()) {
      diag.issues.push_back({"EdgeNotOnSharedBoundary", r, "edge " + std::to_string(e) + " does not exist"});
      continue;
    }
    const DartId d = dart_in_region(map, e, r);
    if (d == kNone) {
      diag.issues.push_back({"EdgeNotOnSharedBoundary", r,
                             "edge " + std::to_string(e) + " is not on the boundary of region " +
                                 std::to_string(r)});
      continue;
    }
    parent[r] = d;
  }
  for (RegionId r : map.internal_regions()) {
    if (!seen[r]) {
      diag.issues.push_back({"RegionWithoutVertex", r,
                             "region " + std::to_string(r) + " has no cutting-tree vertex"});
    }
  }
  if (!diag.ok()) return diag;

  // Every parent chain must reach the outer region.
  std::vector<int> state(nr, 0);  // 0 unknown, 1 on stack, 2 reaches root
  state[map.outer_region()] = 2;
  for (RegionId start : map.internal_regions()) {
    std::vector<RegionId> path;
    RegionId r = start;
    while (state[r] == 0) {
      state[r] = 1;
      path.push_back(r);
      r = map.left_region(map.twin(parent[r]));
    }
    if (state[r] == 1) {
      diag.issues.push_back({"NotAForest", r, "parent links form a cycle through region " + std::to_string(r)});
      return diag;
    }
    for (RegionId q : path) state[q] = 2;
  }

  std::vector<char> crossed(map.num_edges(), 0);
  for (RegionId r : map.internal_regions()) crossed[map.edge(parent[r])] = 1;
  Dsu dsu(map.num_crossings());
  int merges = 0;
  bool cycle = false;
  for (EdgeId e = 0; e < map.num_edges(); ++e) {
    if (crossed[e]) continue;
    const auto& darts = map.edge_darts(e);
    if (dsu.unite(map.vertex(darts[0]), map.vertex(darts[1]))) {
      ++merges;
    } else {
      cycle = true;
    }
  }
  if (cycle || merges != map.num_crossings() - 1) {
    diag.issues.push_back({"ComplementNotSpanningTree", kNone,
                           "uncrossed edges do not form a spanning tree of the curve"});
  }
  return diag;
}

Diagnostics validate_cut(const DiskMap& map, const CuttingSystem& cs) {
  if (static_cast<int>(cs.parent_dart.size()) != map.num_regions()) {
    Diagnostics diag;
    diag.issues.push_back({"RegionWithoutVertex", kNone, "cutting system does not cover every region"});
    return diag;
  }
  for (RegionId r = 0; r < map.num_regions(); ++r) {
    const DartId p = cs.parent_dart[r];
    if (p != kNone && map.left_region(p) != r) {
      Diagnostics diag;
      diag.issues.push_back({"EdgeNotOnSharedBoundary", r, "parent dart is not on the region boundary"});
      return diag;
    }
  }
  return validate_cut(map, to_entries(map, cs));
}

CuttingSystem make_cut(const DiskMap& map, const CutEntries& entries) {
  const Diagnostics diag = validate_cut(map, entries);
  if (!diag.ok()) {
    nlohmann::json issues = nlohmann::json::array();
    for (const auto& i : diag.issues) {
      issues.push_back({{"code", i.code}, {"region", i.region}, {"message", i.message}});
    }
    throw Error(ErrorCode::InvalidCut, diag.issues.front().code + ": " + diag.issues.front().message,
                {{"issues", issues}});
  }
  CuttingSystem cs;
  cs.parent_dart.assign(map.num_regions(), kNone);
  for (const auto& [r, e] : entries) cs.parent_dart[r] = dart_in_region(map, e, r);
  return cs;
}

CuttingSystem auto_cut(const DiskMap& map, std::uint64_t seed) {
  std::vector<int> priority(map.num_edges());
  std::iota(priority.begin(), priority.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(priority.begin(), priority.end(), rng);
  }
  CuttingSystem cs;
  cs.parent_dart.assign(map.num_regions(), kNone);
  std::vector<char> visited(map.num_regions(), 0);
  std::deque<RegionId> queue{map.outer_region()};
  visited[map.outer_region()] = 1;
  while (!queue.empty()) {
    const RegionId r = queue.front();
    queue.pop_front();
    std::vector<DartId> darts = map.region(r).boundary;
    std::sort(darts.begin(), darts.end(), [&](DartId a, DartId b) {
      return priority[map.edge(a)] < priority[map.edge(b)];
    });
    for (DartId d : darts) {
      const DartId t = map.twin(d);
      const RegionId s = map.left_region(t);
      if (visited[s]) continue;
      visited[s] = 1;
      cs.parent_dart[s] = t;
      queue.push_back(s);
    }
  }
  return cs;
}

CuttingSystem random_cut(const DiskMap& map, std::uint64_t seed) {
  std::vector<EdgeId> order(map.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  Dsu dsu(map.num_regions());
  std::vector<std::vector<DartId>> tree(map.num_regions());  // darts leaving each region
  for (EdgeId e : order) {
    const auto& darts = map.edge_darts(e);
    const RegionId a = map.left_region(darts[0]);
    const RegionId b = map.left_region(darts[1]);
    if (dsu.unite(a, b)) {
      tree[a].push_back(darts[0]);
      tree[b].push_back(darts[1]);
    }
  }
  CuttingSystem cs;
  cs.parent_dart.assign(map.num_regions(), kNone);
  std::vector<char> visited(map.num_regions(), 0);
  std::vector<RegionId> stack{map.outer_region()};
  visited[map.outer_region()] = 1;
  while (!stack.empty()) {
    const RegionId r = stack.back();
    stack.pop_back();
    for (DartId d : tree[r]) {
      const DartId t = map.twin(d);
      const RegionId s = map.left_region(t);
      if (visited[s]) continue;
      visited[s] = 1;
      cs.parent_dart[s] = t;
      stack.push_back(s);
    }
  }
  return cs;
}

CuttingSystem reduce_system(const DiskMap& map, const CuttingSystem& cs) {
  CuttingSystem out = cs;
  out.removed.assign(map.num_regions(), 0);
  std::vector<int> child_count(map.num_regions(), 0);
  for (RegionId r = 0; r < map.num_regions(); ++r) {
    if (cs.is_removed(r)) out.removed[r] = 1;
    const RegionId p = cs.parent(map, r);
    if (p != kNone) ++child_count[p];
  }
  for (RegionId r = 0; r < map.num_regions(); ++r) {
    if (cs.parent(map, r) == map.outer_region() && child_count[r] == 0) out.removed[r] = 1;
  }
  return out;
}

CutLayout::CutLayout(const LinkDiagram& diagram, const CuttingSystem& cs)
    : map_(diagram.map()), cs_(cs) {
  const DiskMap& map = map_;
  const int nr = map.num_regions();
  attachments_.assign(nr, {});
  children_.assign(nr, {});
  cut_region_.assign(map.num_edges(), kNone);
  for (RegionId r = 0; r < nr; ++r) {
    const DartId p = cs.parent_dart.at(r);
    if (p == kNone) continue;
    const RegionId q = map.left_region(map.twin(p));
    children_[q].push_back(r);
    if (cs.is_removed(r)) continue;
    cut_region_[map.edge(p)] = r;
    attachments_[r].push_back(map.boundary_index(p));
    attachments_[q].push_back(map.boundary_index(map.twin(p)));
  }
  for (auto& a : attachments_) std::sort(a.begin(), a.end());

  first_piece_.assign(map.num_edges(), 0);
  forward_dart_ = diagram.forward_darts();
  for (EdgeId e = 0; e < map.num_edges(); ++e) {
    first_piece_[e] = static_cast<int>(pieces_.size());
    const DartId f = forward_dart_[e];
    const DartId b = map.twin(f);
    if (is_cut(e)) {
      pieces_.push_back({e, 0, tail_piece(f), head_piece(b), kNone});
      pieces_.push_back({e, 1, head_piece(f), tail_piece(b), kNone});
    } else {
      pieces_.push_back({e, 0, head_piece(f), head_piece(b), kNone});
    }
  }

  Dsu dsu(static_cast<int>(pieces_.size()));
  for (CrossingId v = 0; v < map.num_crossings(); ++v) {
    const int p = diagram.over_parity(v);
    dsu.unite(piece_at_tail(map.dart_at(v, p)), piece_at_tail(map.dart_at(v, p + 2)));
  }
  std::vector<int> label(pieces_.size(), kNone);
  for (int i = 0; i < static_cast<int>(pieces_.size()); ++i) {
    const int root = dsu.find(i);
    if (label[root] == kNone) label[root] = num_strands_++;
    pieces_[i].strand = label[root];
  }

  point_of_region_.assign(nr, kNone);
  for (RegionId r = 0; r < nr; ++r) {
    const DartId p = cs.parent_dart[r];
    if (p == kNone || cs.is_removed(r)) continue;
    CuttingPoint c;
    c.region = r;
    c.dart = p;
    // Walking the boundary of r counterclockwise along p, the tail half of p
    // comes first.
    c.backward_strand = pieces_[piece_at_tail(p)].strand;
    c.forward_strand = pieces_[piece_at_head(p)].strand;
    c.forward_piece = head_piece(p);
    point_of_region_[r] = static_cast<int>(points_.size());
    points_.push_back(c);
  }
}

int CutLayout::piece_index(RegionId r, int pos, bool head) const {
  const auto& a = attachments_[r];
  if (a.empty()) return 0;
  const int m = static_cast<int>(a.size());
  auto it = std::lower_bound(a.begin(), a.end(), pos);
  if (it != a.end() && *it == pos) {
    const int i = static_cast<int>(it - a.begin());
    return head ? i : (i + m - 1) % m;
  }
  // Last attachment before pos, cyclically.
  const int i = static_cast<int>(it - a.begin()) - 1;
  return i < 0 ? m - 1 : i;
}

PieceRef CutLayout::head_piece(DartId d) const {
  const RegionId r = map_.left_region(d);
  return {r, piece_index(r, map_.boundary_index(d), true)};
}

PieceRef CutLayout::tail_piece(DartId d) const {
  const RegionId r = map_.left_region(d);
  return {r, piece_index(r, map_.boundary_index(d), false)};
}

int CutLayout::piece_at_tail(DartId d) const {
  const EdgeId e = map_.edge(d);
  if (!is_cut(e)) return first_piece_[e];
  // Half 0 sits at the tail of the forward dart.
  return first_piece_[e] + (forward_dart_[e] == d ? 0 : 1);
}

const CuttingPoint* CutLayout::cutting_point(RegionId r) const {
  const int i = point_of_region_.at(r);
  return i == kNone ? nullptr : &points_[i];
}

std::vector<RegionId> CutLayout::subtree_ccw(RegionId root) const {
  std::vector<RegionId> out;
  std::vector<RegionId> stack{root};
  while (!stack.empty()) {
    const RegionId r = stack.back();
    stack.pop_back();
    out.push_back(r);
    const auto& boundary = map_.region(r).boundary;
    const int len = static_cast<int>(boundary.size());
    const DartId p = cs_.parent_dart[r];
    const int start = p == kNone ? 0 : map_.boundary_index(p);
    std::vector<std::pair<int, RegionId>> kids;
    for (RegionId c : children_[r]) {
      const int pos = map_.boundary_index(map_.twin(cs_.parent_dart[c]));
      kids.emplace_back((pos - start + len) % len, c);
    }
    std::sort(kids.begin(), kids.end());
    // Push in reverse so the first counterclockwise child is visited first.
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(it->second);
  }
  return out;
}

std::vector<RegionId> subtree_regions_ccw(const LinkDiagram& diagram, const CuttingSystem& cs,
                                          RegionId r) {
  return CutLayout(diagram, cs).subtree_ccw(r);
}

std::pair<int, int> forward_backward(const LinkDiagram& diagram, const CuttingSystem& cs,
                                     RegionId r) {
  const CutLayout layout(diagram, cs);
  const CuttingPoint* c = layout.cutting_point(r);
  if (!c) throw Error(ErrorCode::UnknownRegion, "region has no active cutting point", {{"region", r}});
  return {c->forward_strand, c->backward_strand};
}

}  // namespace shadowpi
