#include "shadowpi/planar_map.hpp"

#include <algorithm>

#include "dsu.hpp"
#include "shadowpi/error.hpp"

namespace shadowpi {

using detail::Dsu;

int DiskMap::check(DartId d) const {
  if (d < 0 || d >= static_cast<int>(twin_.size())) {
    throw Error(ErrorCode::UnknownDart, "dart " + std::to_string(d) + " does not exist",
                {{"dart", d}});
  }
  return d;
}

DiskMap DiskMap::build(const CrossingTable& table) {
  const int v_count = static_cast<int>(table.crossings.size());
  if (v_count == 0) throw Error(ErrorCode::EmptyDiagram, "diagram has no crossings");

  DiskMap m;
  const int n = 4 * v_count;
  m.crossing_darts_.resize(v_count);
  m.vertex_.assign(n, kNone);
  m.position_.assign(n, kNone);
  for (int v = 0; v < v_count; ++v) {
    const auto& tuple = table.crossings[v];
    if (tuple.size() != 4) {
      throw Error(ErrorCode::NonQuadrivalent,
                  "crossing " + std::to_string(v) + " has " + std::to_string(tuple.size()) +
                      " darts",
                  {{"crossing", v}, {"valence", tuple.size()}});
    }
    for (int k = 0; k < 4; ++k) {
      const DartId d = tuple[k];
      if (d < 0 || d >= n || m.vertex_[d] != kNone) {
        throw Error(ErrorCode::BrokenInvolution,
                    "dart " + std::to_string(d) + " is out of range or listed twice",
                    {{"crossing", v}, {"dart", d}});
      }
      m.vertex_[d] = v;
      m.position_[d] = k;
      m.crossing_darts_[v][k] = d;
    }
  }

  m.twin_.assign(n, kNone);
  for (const auto& [a, b] : table.edges) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b || m.twin_[a] != kNone ||
        m.twin_[b] != kNone) {
      throw Error(ErrorCode::BrokenInvolution,
                  "edge {" + std::to_string(a) + "," + std::to_string(b) + "} is not a valid pairing",
                  {{"edge", {a, b}}});
    }
    m.twin_[a] = b;
    m.twin_[b] = a;
  }
  for (DartId d = 0; d < n; ++d) {
    if (m.twin_[d] == kNone) {
      throw Error(ErrorCode::BrokenInvolution, "dart " + std::to_string(d) + " has no twin",
                  {{"dart", d}});
    }
  }

  // Edges numbered by their smaller dart.
  m.edge_.assign(n, kNone);
  for (DartId d = 0; d < n; ++d) {
    if (m.edge_[d] != kNone) continue;
    const EdgeId e = static_cast<EdgeId>(m.edge_darts_.size());
    m.edge_darts_.push_back({d, m.twin_[d]});
    m.edge_[d] = e;
    m.edge_[m.twin_[d]] = e;
  }

  Dsu dsu(v_count);
  int pieces = v_count;
  for (const auto& [a, b] : m.edge_darts_) {
    if (dsu.unite(m.vertex_[a], m.vertex_[b])) --pieces;
  }
  if (pieces != 1) {
    throw Error(ErrorCode::DisconnectedCurve,
                "singular set is disconnected; only connected immersed curves are supported",
                {{"pieces", pieces}});
  }

  m.component_.assign(m.num_edges(), kNone);
  for (EdgeId e = 0; e < m.num_edges(); ++e) {
    if (m.component_[e] != kNone) continue;
    DartId d = m.edge_darts_[e][0];
    do {
      m.component_[m.edge_[d]] = m.num_components_;
      d = m.next_along_curve(d);
    } while (d != m.edge_darts_[e][0]);
    ++m.num_components_;
  }

  m.regions_ = trace_regions(m);
  m.left_region_.assign(n, kNone);
  m.boundary_index_.assign(n, kNone);
  for (const auto& r : m.regions_) {
    for (int i = 0; i < static_cast<int>(r.boundary.size()); ++i) {
      m.left_region_[r.boundary[i]] = r.id;
      m.boundary_index_[r.boundary[i]] = i;
    }
  }
  const int euler = v_count - m.num_edges() + m.num_regions();
  if (euler != 2) {
    throw Error(ErrorCode::EulerMismatch,
                "rotation system is not planar: V - E + F = " + std::to_string(euler),
                {{"V", v_count}, {"E", m.num_edges()}, {"F", m.num_regions()}});
  }

  m.outer_dart_ = m.check(table.outer_dart);
  m.outer_region_ = m.left_region_[m.outer_dart_];
  m.regions_[m.outer_region_].is_outer = true;
  return m;
}

std::vector<Region> trace_regions(const DiskMap& map) {
  std::vector<Region> out;
  std::vector<char> seen(map.num_darts(), 0);
  for (DartId start = 0; start < map.num_darts(); ++start) {
    if (seen[start]) continue;
    Region r;
    r.id = static_cast<RegionId>(out.size());
    DartId d = start;
    do {
      seen[d] = 1;
      r.boundary.push_back(d);
      d = map.next_in_face(d);
    } while (d != start);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RegionId> DiskMap::internal_regions() const {
  std::vector<RegionId> out;
  for (const auto& r : regions_) {
    if (!r.is_outer) out.push_back(r.id);
  }
  return out;
}

CrossingTable DiskMap::table() const {
  CrossingTable t;
  for (const auto& darts : crossing_darts_) t.crossings.emplace_back(darts.begin(), darts.end());
  t.edges = edge_darts_;
  t.outer_dart = outer_dart_;
  return t;
}

}  // namespace shadowpi
