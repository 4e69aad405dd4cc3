#include "shadowpi/builders.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "dsu.hpp"
#include "shadowpi/error.hpp"
#include "shadowpi/io.hpp"

namespace shadowpi {

using detail::Dsu;

namespace {

struct Vec {
  mpq_class x, y;
};

Vec sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
mpq_class cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
mpq_class dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }
Point along(const Point& p, const Vec& d, const mpq_class& t) { return {p.x + t * d.x, p.y + t * d.y}; }

std::string show(const Point& p) { return "(" + p.x.get_str() + ", " + p.y.get_str() + ")"; }

// Counterclockwise angle from u to a is smaller than from u to b (angles in [0, 2pi)).
bool ccw_before(const Vec& u, const Vec& a, const Vec& b) {
  auto half = [&](const Vec& v) {
    const int c = sgn(cross(u, v));
    return (c > 0 || (c == 0 && sgn(dot(u, v)) > 0)) ? 0 : 1;
  };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

struct Segment {
  int component;
  int index;
  Point a, b;
  bool a_is_end = false;  // a is an interval endpoint
  bool b_is_end = false;
  Vec dir() const { return sub(b, a); }
};

struct PointLess {
  bool operator()(const Point& p, const Point& q) const {
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
  }
};

struct Event {
  mpq_class t;
  int node;
  int in_slot;
  int out_slot;
};

[[noreturn]] void reject_vertex_touch(const Segment& s, const mpq_class& t, const Point& p) {
  const bool end = (t == 0 && s.a_is_end) || (t == 1 && s.b_is_end);
  if (end) {
    throw Error(ErrorCode::EndpointInInterior, "interval endpoint " + show(p) + " lies on the curve",
                {{"component", s.component}, {"point", point_to_json(p)}});
  }
  throw Error(ErrorCode::TangencyOrTriplePoint, "curve touches itself at vertex " + show(p),
              {{"component", s.component}, {"point", point_to_json(p)}});
}

}  // namespace

Divide ingest_polyline_divide(const DivideInput& input_raw) {
  DivideInput input = input_raw;
  for (auto& c : input.components) {
    if (c.closed && c.points.size() >= 2 && c.points.front() == c.points.back()) c.points.pop_back();
    const std::size_t need = c.closed ? 3 : 2;
    if (c.points.size() < need) {
      throw Error(ErrorCode::UnsupportedDegenerate, "component has too few points",
                  {{"points", c.points.size()}});
    }
    for (std::size_t k = 0; k + 1 < c.points.size(); ++k) {
      if (c.points[k] == c.points[k + 1]) {
        throw Error(ErrorCode::OverlappingSegments, "repeated consecutive vertex " + show(c.points[k]));
      }
    }
  }

  std::vector<Segment> segs;
  std::vector<int> first_seg;
  for (int ci = 0; ci < static_cast<int>(input.components.size()); ++ci) {
    const auto& c = input.components[ci];
    first_seg.push_back(static_cast<int>(segs.size()));
    const int n = static_cast<int>(c.points.size());
    const int count = c.closed ? n : n - 1;
    for (int k = 0; k < count; ++k) {
      Segment s{ci, k, c.points[k], c.points[(k + 1) % n]};
      s.a_is_end = !c.closed && k == 0;
      s.b_is_end = !c.closed && k == n - 2;
      segs.push_back(s);
    }
  }
  auto adjacent = [&](int i, int j) {
    const Segment& s = segs[i];
    const Segment& t = segs[j];
    if (s.component != t.component) return false;
    const auto& c = input.components[s.component];
    const int count = static_cast<int>(c.closed ? c.points.size() : c.points.size() - 1);
    if (std::abs(s.index - t.index) == 1) return true;
    return c.closed && count >= 3 && std::abs(s.index - t.index) == count - 1;
  };

  struct Crossing {
    int i, j;
    mpq_class ti, tj;
    Point p;
  };
  std::vector<Crossing> crossings;
  std::map<Point, int, PointLess> seen_points;
  for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(segs.size()); ++j) {
      const Segment& s = segs[i];
      const Segment& t = segs[j];
      const Vec r = s.dir(), d = t.dir();
      const Vec qp = sub(t.a, s.a);
      const mpq_class den = cross(r, d);
      if (den == 0) {
        if (cross(qp, r) != 0) continue;  // parallel, disjoint
        const mpq_class rr = dot(r, r);
        mpq_class t0 = dot(qp, r) / rr;
        mpq_class t1 = dot(sub(t.b, s.a), r) / rr;
        if (t0 > t1) std::swap(t0, t1);
        const mpq_class lo = std::max(t0, mpq_class(0));
        const mpq_class hi = std::min(t1, mpq_class(1));
        if (lo > hi) continue;
        if (lo < hi) {
          throw Error(ErrorCode::OverlappingSegments, "collinear segments overlap near " + show(along(s.a, r, lo)),
                      {{"components", {s.component, t.component}}});
        }
        if (adjacent(i, j)) continue;  // meeting at the shared vertex
        reject_vertex_touch(s, lo, along(s.a, r, lo));
      }
      const mpq_class ti = cross(qp, d) / den;
      const mpq_class tj = cross(qp, r) / den;
      if (ti < 0 || ti > 1 || tj < 0 || tj > 1) continue;
      const Point p = along(s.a, r, ti);
      const bool at_vertex_i = ti == 0 || ti == 1;
      const bool at_vertex_j = tj == 0 || tj == 1;
      if (at_vertex_i && at_vertex_j && adjacent(i, j)) continue;
      if (at_vertex_i) reject_vertex_touch(s, ti, p);
      if (at_vertex_j) reject_vertex_touch(t, tj, p);
      if (!seen_points.emplace(p, static_cast<int>(crossings.size())).second) {
        throw Error(ErrorCode::TangencyOrTriplePoint, "more than two branches meet at " + show(p),
                    {{"point", point_to_json(p)}});
      }
      crossings.push_back({i, j, ti, tj, p});
    }
  }
  if (crossings.empty()) {
    throw Error(ErrorCode::UnsupportedDegenerate,
                "divide has no double points; its doubled curve would have no crossing");
  }

  Divide dv;
  dv.source = input;
  dv.num_double_points = static_cast<int>(crossings.size());
  std::vector<std::vector<Event>> events(segs.size());
  for (int v = 0; v < dv.num_double_points; ++v) {
    const Crossing& c = crossings[v];
    Divide::Node node;
    node.pos = c.p;
    node.slot_edge.assign(4, kNone);
    node.slot_end.assign(4, kNone);
    dv.nodes.push_back(node);
    // Slots counterclockwise from the forward direction of the lower segment.
    const bool left_turn = sgn(cross(segs[c.i].dir(), segs[c.j].dir())) > 0;
    events[c.i].push_back({c.ti, v, 2, 0});
    events[c.j].push_back({c.tj, v, left_turn ? 3 : 1, left_turn ? 1 : 3});
  }
  for (auto& ev : events) {
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
  }

  auto add_edge = [&](int n0, int s0, int n1, int s1, int comp, std::vector<Point> path) {
    const int e = static_cast<int>(dv.edges.size());
    dv.edges.push_back({{n0, n1}, {s0, s1}, comp, std::move(path)});
    dv.nodes[n0].slot_edge[s0] = e;
    dv.nodes[n0].slot_end[s0] = 0;
    dv.nodes[n1].slot_edge[s1] = e;
    dv.nodes[n1].slot_end[s1] = 1;
  };
  auto new_endpoint = [&](const Point& p) {
    Divide::Node node;
    node.endpoint = true;
    node.pos = p;
    node.slot_edge.assign(1, kNone);
    node.slot_end.assign(1, kNone);
    dv.nodes.push_back(node);
    return static_cast<int>(dv.nodes.size()) - 1;
  };

  // Walk every component as a sequence of vertices and node stops.
  struct Stop {
    Point p;
    int node = kNone;
    int in_slot = 0;
    int out_slot = 0;
  };
  for (int ci = 0; ci < static_cast<int>(input.components.size()); ++ci) {
    const auto& comp = input.components[ci];
    const int n = static_cast<int>(comp.points.size());
    std::vector<Stop> stops;
    const int count = comp.closed ? n : n - 1;
    if (!comp.closed) stops.push_back({comp.points[0], new_endpoint(comp.points[0]), 0, 0});
    for (int k = 0; k < count; ++k) {
      if (comp.closed) stops.push_back({comp.points[k]});
      for (const Event& ev : events[first_seg[ci] + k]) {
        stops.push_back({dv.nodes[ev.node].pos, ev.node, ev.in_slot, ev.out_slot});
      }
      if (!comp.closed && k + 1 < n - 1) stops.push_back({comp.points[k + 1]});
    }
    if (!comp.closed) stops.push_back({comp.points[n - 1], new_endpoint(comp.points[n - 1]), 0, 0});

    std::vector<int> node_stops;
    for (int k = 0; k < static_cast<int>(stops.size()); ++k) {
      if (stops[k].node != kNone) node_stops.push_back(k);
    }
    if (comp.closed && node_stops.empty()) {
      throw Error(ErrorCode::UnsupportedDegenerate, "circle component without double points",
                  {{"component", ci}});
    }
    const int m = static_cast<int>(node_stops.size());
    const int edges_here = comp.closed ? m : m - 1;
    for (int q = 0; q < edges_here; ++q) {
      const int from = node_stops[q];
      const int to = node_stops[(q + 1) % m];
      std::vector<Point> path;
      const int total = static_cast<int>(stops.size());
      int k = from;
      path.push_back(stops[k].p);
      do {
        k = (k + 1) % total;
        path.push_back(stops[k].p);
      } while (k != to);
      add_edge(stops[from].node, stops[from].out_slot, stops[to].node, stops[to].in_slot, ci,
               std::move(path));
    }
  }

  Dsu dsu(static_cast<int>(dv.nodes.size()));
  int pieces = static_cast<int>(dv.nodes.size());
  for (const auto& e : dv.edges) {
    if (dsu.unite(e.node[0], e.node[1])) --pieces;
  }
  if (pieces != 1) {
    throw Error(ErrorCode::DisconnectedDivide, "divide is not connected", {{"pieces", pieces}});
  }

  // Faces of the divide graph: half-edge 2e runs node[0] -> node[1], 2e+1 back.
  const int nh = 2 * static_cast<int>(dv.edges.size());
  auto head = [&](int h) {
    const auto& e = dv.edges[h / 2];
    return std::pair{e.node[1 - h % 2], e.slot[1 - h % 2]};
  };
  auto leaving = [&](int node, int slot) {
    const auto& nd = dv.nodes[node];
    return 2 * nd.slot_edge[slot] + nd.slot_end[slot];
  };
  std::vector<int> face(nh, kNone);
  int num_faces = 0;
  for (int h0 = 0; h0 < nh; ++h0) {
    if (face[h0] != kNone) continue;
    int h = h0;
    do {
      face[h] = num_faces;
      const auto [node, slot] = head(h);
      const int deg = static_cast<int>(dv.nodes[node].slot_edge.size());
      h = leaving(node, (slot + deg - 1) % deg);
    } while (h != h0);
    ++num_faces;
  }

  // Unbounded face: look just below the lowest, then leftmost, vertex.
  int best_e = -1, best_k = -1;
  for (int e = 0; e < static_cast<int>(dv.edges.size()); ++e) {
    const auto& path = dv.edges[e].path;
    for (int k = 0; k < static_cast<int>(path.size()); ++k) {
      if (best_e < 0) {
        best_e = e;
        best_k = k;
        continue;
      }
      const Point& b = dv.edges[best_e].path[best_k];
      if (path[k].y < b.y || (path[k].y == b.y && path[k].x < b.x)) {
        best_e = e;
        best_k = k;
      }
    }
  }
  const auto& low_path = dv.edges[best_e].path;
  const int last = static_cast<int>(low_path.size()) - 1;
  int outer_face;
  bool on_left = true;
  if (best_k == 0 || best_k == last) {
    const int node = dv.edges[best_e].node[best_k == 0 ? 0 : 1];
    if (!dv.nodes[node].endpoint) {
      throw Error(ErrorCode::TangencyOrTriplePoint, "lowest point of the divide is a double point");
    }
    outer_face = face[leaving(node, 0)];
  } else {
    const Point& p = low_path[best_k];
    const Vec u = sub(low_path[best_k + 1], p);
    const Vec w = sub(low_path[best_k - 1], p);
    on_left = ccw_before(u, Vec{0, -1}, w);
    outer_face = face[2 * best_e + (on_left ? 0 : 1)];
  }
  for (int v = dv.num_double_points; v < static_cast<int>(dv.nodes.size()); ++v) {
    if (face[leaving(v, 0)] != outer_face) {
      throw Error(ErrorCode::EndpointInInterior,
                  "interval endpoint " + show(dv.nodes[v].pos) + " is enclosed by the divide",
                  {{"point", point_to_json(dv.nodes[v].pos)}});
    }
  }
  // Record a half-edge on the outer face, preferring edges between double points.
  dv.outer_edge = -1;
  for (int h = 0; h < nh; ++h) {
    const auto& e = dv.edges[h / 2];
    if (face[h] != outer_face) continue;
    const bool middle = !dv.nodes[e.node[0]].endpoint && !dv.nodes[e.node[1]].endpoint;
    if (dv.outer_edge < 0 || middle) {
      dv.outer_edge = h / 2;
      dv.outer_on_left = h % 2 == 0;
      if (middle) break;
    }
  }
  return dv;
}

DivideInput arrangement_to_divide_input(const LineArrangement& arr) {
  const int k = static_cast<int>(arr.lines.size());
  if (k < 2) throw Error(ErrorCode::NoIntersections, "an arrangement needs at least two lines", {{"lines", k}});
  for (int i = 0; i < k; ++i) {
    if (arr.lines[i][0] == 0 && arr.lines[i][1] == 0) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(i) + " has a = b = 0", {{"line", i}});
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const auto& p = arr.lines[i];
      const auto& q = arr.lines[j];
      if (p[0] * q[1] == p[1] * q[0] && p[0] * q[2] == p[2] * q[0] && p[1] * q[2] == p[2] * q[1]) {
        throw Error(ErrorCode::DuplicateLines, "lines " + std::to_string(i) + " and " + std::to_string(j) + " coincide",
                    {{"lines", {i, j}}});
      }
    }
  }
  std::vector<Point> base(k);
  std::vector<Vec> dir(k);
  for (int i = 0; i < k; ++i) {
    const auto& [a, b, c] = arr.lines[i];
    dir[i] = {-b, a};
    base[i] = b != 0 ? Point{0, -c / b} : Point{-c / a, 0};
  }
  std::vector<std::vector<mpq_class>> params(k);
  std::map<Point, std::pair<int, int>, PointLess> points;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const mpq_class den = cross(dir[i], dir[j]);
      if (den == 0) continue;
      const mpq_class t = cross(sub(base[j], base[i]), dir[j]) / den;
      const Point p = along(base[i], dir[i], t);
      auto [it, fresh] = points.emplace(p, std::pair{i, j});
      if (!fresh) {
        throw Error(ErrorCode::ConcurrentLines, "three or more lines pass through " + show(p),
                    {{"point", point_to_json(p)}});
      }
      params[i].push_back(t);
      params[j].push_back(dot(sub(p, base[j]), dir[j]) / dot(dir[j], dir[j]));
    }
  }
  DivideInput out;
  for (int i = 0; i < k; ++i) {
    if (params[i].empty()) {
      throw Error(ErrorCode::NoIntersections, "line " + std::to_string(i) + " meets no other line", {{"line", i}});
    }
    const auto [lo, hi] = std::minmax_element(params[i].begin(), params[i].end());
    DivideInput::Component c;
    c.points = {along(base[i], dir[i], *lo - 1), along(base[i], dir[i], *hi + 1)};
    out.components.push_back(std::move(c));
  }
  return out;
}

Divide arrangement_to_divide(const LineArrangement& arr) {
  return ingest_polyline_divide(arrangement_to_divide_input(arr));
}

OverPolicy OverPolicy::parse(const std::string& text) {
  if (text == "default") return {};
  if (text == "alternating") return {Kind::Alternating, 0};
  if (text.rfind("seed:", 0) == 0) {
    try {
      return {Kind::Seed, std::stoull(text.substr(5))};
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::Usage, "unknown over/under policy '" + text + "'", {{"policy", text}});
}

std::string OverPolicy::str() const {
  switch (kind) {
    case Kind::Default: return "default";
    case Kind::Alternating: return "alternating";
    case Kind::Seed: return "seed:" + std::to_string(seed);
  }
  return "?";
}

std::vector<int> choose_over(const DiskMap& map, const OverPolicy& policy) {
  std::vector<int> over(map.num_crossings(), 0);
  if (policy.kind == OverPolicy::Kind::Seed) {
    std::mt19937_64 rng(policy.seed);
    for (int& p : over) p = static_cast<int>(rng() & 1);
    return over;
  }
  if (policy.kind == OverPolicy::Kind::Alternating) {
    std::vector<int> colour(map.num_regions(), -1);
    std::deque<RegionId> queue{map.outer_region()};
    colour[map.outer_region()] = 0;
    while (!queue.empty()) {
      const RegionId r = queue.front();
      queue.pop_front();
      for (DartId d : map.region(r).boundary) {
        const RegionId s = map.left_region(map.twin(d));
        if (colour[s] < 0) {
          colour[s] = 1 - colour[r];
          queue.push_back(s);
        }
      }
    }
    for (CrossingId v = 0; v < map.num_crossings(); ++v) {
      // The corner after position 0 gets +1/2 exactly when position 1 is over.
      over[v] = colour[map.left_region(map.dart_at(v, 0))] == 1 ? 1 : 0;
    }
    return over;
  }
  for (CrossingId v = 0; v < map.num_crossings(); ++v) {
    auto key = [&](int p) {
      const EdgeId a = map.edge(map.dart_at(v, p));
      const EdgeId b = map.edge(map.dart_at(v, p + 2));
      return std::pair{map.component(a), std::min(a, b)};
    };
    over[v] = key(1) < key(0) ? 1 : 0;
  }
  return over;
}

ShadowedPolyhedron double_divide(const Divide& dv, const OverPolicy& policy) {
  const int D = dv.num_double_points;
  if (D == 0) {
    throw Error(ErrorCode::UnsupportedDegenerate, "divide has no double points");
  }
  std::vector<int> middle_index(dv.edges.size(), kNone);
  int num_middle = 0;
  for (int e = 0; e < static_cast<int>(dv.edges.size()); ++e) {
    const auto& ed = dv.edges[e];
    const bool end0 = dv.nodes[ed.node[0]].endpoint;
    const bool end1 = dv.nodes[ed.node[1]].endpoint;
    if (end0 && end1) throw Error(ErrorCode::DisconnectedDivide, "interval without double points");
    if (!end0 && !end1) middle_index[e] = num_middle++;
  }
  const int V = 4 * D + num_middle;
  auto C = [](int v, int k) { return 4 * v + ((k % 4) + 4) % 4; };
  auto dart = [](int crossing, int pos) { return 4 * crossing + pos; };

  CrossingTable table;
  for (int c = 0; c < V; ++c) table.crossings.push_back({dart(c, 0), dart(c, 1), dart(c, 2), dart(c, 3)});
  for (int v = 0; v < D; ++v) {
    for (int k = 0; k < 4; ++k) table.edges.push_back({dart(C(v, k), 2), dart(C(v, k + 1), 3)});
  }
  DartId outer = kNone;
  std::vector<DartId> bigon_darts, triangle_darts;
  for (int e = 0; e < static_cast<int>(dv.edges.size()); ++e) {
    const auto& ed = dv.edges[e];
    if (middle_index[e] != kNone) {
      const int M = 4 * D + middle_index[e];
      const int u = ed.node[0], a = ed.slot[0], w = ed.node[1], b = ed.slot[1];
      table.edges.push_back({dart(C(u, a), 0), dart(M, 1)});
      table.edges.push_back({dart(C(u, a - 1), 1), dart(M, 2)});
      table.edges.push_back({dart(C(w, b), 0), dart(M, 3)});
      table.edges.push_back({dart(C(w, b - 1), 1), dart(M, 0)});
      triangle_darts.push_back(dart(M, 1));
      triangle_darts.push_back(dart(M, 3));
      if (e == dv.outer_edge && outer == kNone) outer = dart(M, dv.outer_on_left ? 0 : 2);
    } else {
      const int side = dv.nodes[ed.node[0]].endpoint ? 1 : 0;
      const int u = ed.node[side], a = ed.slot[side];
      table.edges.push_back({dart(C(u, a), 0), dart(C(u, a - 1), 1)});
      bigon_darts.push_back(dart(C(u, a - 1), 1));
      // Both sides of the cap face the disk boundary.
      outer = dart(C(u, a), 0);
    }
  }
  table.outer_dart = outer;
  DiskMap map = DiskMap::build(table);

  std::vector<RegionLabel> labels(map.num_regions(), RegionLabel::Chamber);
  std::vector<char> assigned(map.num_regions(), 0);
  auto label = [&](DartId d, RegionLabel l) {
    const RegionId r = map.left_region(d);
    if (assigned[r] && labels[r] != l) {
      throw Error(ErrorCode::UnsupportedDegenerate, "doubled curve region received two labels", {{"region", r}});
    }
    assigned[r] = 1;
    labels[r] = l;
  };
  label(map.outer_dart(), RegionLabel::Outer);
  for (int v = 0; v < D; ++v) label(dart(C(v, 0), 2), RegionLabel::B);
  for (DartId d : bigon_darts) label(d, RegionLabel::C);
  for (DartId d : triangle_darts) label(d, RegionLabel::A);

  std::vector<int> twice_gleam(map.num_regions(), 0);
  for (RegionId r = 0; r < map.num_regions(); ++r) {
    switch (labels[r]) {
      case RegionLabel::A: twice_gleam[r] = 1; break;
      case RegionLabel::B:
      case RegionLabel::Chamber: twice_gleam[r] = -2; break;
      default: twice_gleam[r] = 0; break;
    }
  }
  std::vector<int> over = choose_over(map, policy);
  LinkDiagram diagram(std::move(map), std::move(over));
  return {std::move(diagram), std::move(twice_gleam), std::move(labels), divide_input_to_json(dv.source)};
}

DiskMap divide_curve_map(const Divide& dv) {
  CrossingTable table;
  for (int v = 0; v < static_cast<int>(dv.nodes.size()); ++v) {
    if (dv.nodes[v].endpoint) {
      throw Error(ErrorCode::UnsupportedDegenerate, "curve map needs a divide without interval endpoints");
    }
    table.crossings.push_back({4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3});
  }
  for (const auto& e : dv.edges) {
    table.edges.push_back({4 * e.node[0] + e.slot[0], 4 * e.node[1] + e.slot[1]});
  }
  const auto& oe = dv.edges[dv.outer_edge];
  table.outer_dart = dv.outer_on_left ? 4 * oe.node[0] + oe.slot[0] : 4 * oe.node[1] + oe.slot[1];
  return DiskMap::build(table);
}

}  // namespace shadowpi
