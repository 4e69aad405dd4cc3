#include "shadowpi/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "shadowpi/builders.hpp"
#include "shadowpi/error.hpp"
#include "shadowpi/io.hpp"

namespace shadowpi {

namespace {

struct P {
  double x = 0, y = 0;
};
P operator+(P a, P b) { return {a.x + b.x, a.y + b.y}; }
P operator-(P a, P b) { return {a.x - b.x, a.y - b.y}; }
P operator*(double s, P a) { return {s * a.x, s * a.y}; }
double norm(P a) { return std::hypot(a.x, a.y); }
P unit(P a) {
  const double n = norm(a);
  return n > 0 ? (1.0 / n) * a : P{1, 0};
}
P left_normal(P a) { return {-a.y, a.x}; }
P to_p(const Point& q) { return {q.x.get_d(), q.y.get_d()}; }

using Poly = std::vector<P>;

// Polylines keyed by (dart, twin): drawn from vertex(dart) to vertex(twin).
struct Layout {
  std::vector<P> crossing;
  std::map<std::pair<DartId, DartId>, Poly> curve;
  bool schematic = false;

  Poly from(const DiskMap& map, DartId d) const {
    const DartId t = map.twin(d);
    if (auto it = curve.find({d, t}); it != curve.end()) return it->second;
    Poly p = curve.at({t, d});
    std::reverse(p.begin(), p.end());
    return p;
  }
};

Poly offset(const Poly& pts, double s) {
  Poly out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const P prev = pts[i == 0 ? 0 : i - 1];
    const P next = pts[i + 1 < pts.size() ? i + 1 : i];
    out.push_back(pts[i] + s * left_normal(unit(next - prev)));
  }
  return out;
}

// Splits a polyline at half its length; both halves contain the midpoint.
std::pair<Poly, Poly> halve(const Poly& pts) {
  double total = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) total += norm(pts[i] - pts[i - 1]);
  double run = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double seg = norm(pts[i] - pts[i - 1]);
    if (run + seg >= total / 2) {
      const double f = seg > 0 ? (total / 2 - run) / seg : 0;
      const P mid = pts[i - 1] + f * (pts[i] - pts[i - 1]);
      Poly a(pts.begin(), pts.begin() + i);
      a.push_back(mid);
      Poly b{mid};
      b.insert(b.end(), pts.begin() + i, pts.end());
      return {a, b};
    }
    run += seg;
  }
  return {pts, pts};
}

Poly interior(const Poly& p) {
  return p.size() <= 2 ? Poly{} : Poly(p.begin() + 1, p.end() - 1);
}

std::optional<Layout> divide_layout(const ShadowedPolyhedron& shadow) {
  if (!shadow.provenance.is_object() || shadow.provenance.value("schema", "") != "divide/1") return std::nullopt;
  Divide dv;
  try {
    dv = ingest_polyline_divide(divide_input_from_json(shadow.provenance));
    if (!(double_divide(dv).map().table() == shadow.map().table())) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  const int D = dv.num_double_points;
  std::vector<Poly> paths;
  double shortest = 1e300;
  for (const auto& e : dv.edges) {
    Poly p;
    for (const auto& q : e.path) p.push_back(to_p(q));
    for (std::size_t i = 1; i < p.size(); ++i) shortest = std::min(shortest, norm(p[i] - p[i - 1]));
    paths.push_back(std::move(p));
  }
  const double eps = 0.18 * shortest;
  auto wrap = [](int k) { return ((k % 4) + 4) % 4; };
  auto slot_dir = [&](int v, int k) {
    const auto& nd = dv.nodes[v];
    k = wrap(k);
    const Poly& p = paths[nd.slot_edge[k]];
    return nd.slot_end[k] == 0 ? unit(p[1] - p[0]) : unit(p[p.size() - 2] - p.back());
  };
  auto C = [&](int v, int k) { return 4 * v + wrap(k); };
  auto dart = [](int c, int pos) { return 4 * c + pos; };

  Layout lay;
  int num_middle = 0;
  for (const auto& e : dv.edges) num_middle += !dv.nodes[e.node[0]].endpoint && !dv.nodes[e.node[1]].endpoint;
  lay.crossing.resize(4 * D + num_middle);
  for (int v = 0; v < D; ++v) {
    for (int k = 0; k < 4; ++k) {
      lay.crossing[C(v, k)] = to_p(dv.nodes[v].pos) + eps * (slot_dir(v, k) + slot_dir(v, k + 1));
    }
    for (int k = 0; k < 4; ++k) {
      lay.curve[{dart(C(v, k), 2), dart(C(v, k + 1), 3)}] = {lay.crossing[C(v, k)], lay.crossing[C(v, k + 1)]};
    }
  }
  int m = 0;
  for (int e = 0; e < static_cast<int>(dv.edges.size()); ++e) {
    const auto& ed = dv.edges[e];
    const Poly& path = paths[e];
    const bool end0 = dv.nodes[ed.node[0]].endpoint;
    const bool end1 = dv.nodes[ed.node[1]].endpoint;
    auto with_ends = [](P a, const Poly& mid, P b) {
      Poly out{a};
      out.insert(out.end(), mid.begin(), mid.end());
      out.push_back(b);
      return out;
    };
    if (!end0 && !end1) {
      const int M = 4 * D + m++;
      const int u = ed.node[0], a = ed.slot[0], w = ed.node[1], b = ed.slot[1];
      auto [first, second] = halve(path);
      lay.crossing[M] = first.back();
      const P mid = first.back();
      lay.curve[{dart(C(u, a), 0), dart(M, 1)}] = with_ends(lay.crossing[C(u, a)], interior(offset(first, eps)), mid);
      lay.curve[{dart(C(u, a - 1), 1), dart(M, 2)}] =
          with_ends(lay.crossing[C(u, a - 1)], interior(offset(first, -eps)), mid);
      lay.curve[{dart(M, 3), dart(C(w, b), 0)}] = with_ends(mid, interior(offset(second, -eps)), lay.crossing[C(w, b)]);
      lay.curve[{dart(M, 0), dart(C(w, b - 1), 1)}] =
          with_ends(mid, interior(offset(second, eps)), lay.crossing[C(w, b - 1)]);
    } else {
      const int side = end0 ? 1 : 0;
      const int u = ed.node[side], a = ed.slot[side];
      Poly p = path;
      if (side == 1) std::reverse(p.begin(), p.end());
      const P tip = p.back() + eps * unit(p.back() - p[p.size() - 2]);
      Poly out{lay.crossing[C(u, a)]};
      const Poly plus = offset(p, eps), minus = offset(p, -eps);
      out.insert(out.end(), plus.begin() + 1, plus.end());
      out.push_back(tip);
      for (std::size_t i = minus.size() - 1; i >= 1; --i) out.push_back(minus[i]);
      out.push_back(lay.crossing[C(u, a - 1)]);
      lay.curve[{dart(C(u, a), 0), dart(C(u, a - 1), 1)}] = out;
    }
  }
  return lay;
}

Layout schematic_layout(const DiskMap& map) {
  Layout lay;
  lay.schematic = true;
  const int n = map.num_crossings();
  lay.crossing.assign(n, P{});
  std::vector<char> fixed(n, 0);
  std::vector<CrossingId> rim;
  for (DartId d : map.region(map.outer_region()).boundary) {
    const CrossingId v = map.vertex(d);
    if (!fixed[v]) {
      fixed[v] = 1;
      rim.push_back(v);
    }
  }
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < rim.size(); ++i) {
    const double t = 2 * pi * static_cast<double>(i) / static_cast<double>(rim.size());
    // Clockwise placement: the outer face walk runs clockwise.
    lay.crossing[rim[i]] = {std::cos(t), -std::sin(t)};
  }
  for (int it = 0; it < 400; ++it) {
    for (CrossingId v = 0; v < n; ++v) {
      if (fixed[v]) continue;
      P sum{};
      for (int k = 0; k < 4; ++k) sum = sum + lay.crossing[map.vertex(map.twin(map.dart_at(v, k)))];
      lay.crossing[v] = 0.25 * sum;
    }
  }
  // Edges as bent curves; parallel edges and loops fan out.
  std::map<std::pair<int, int>, std::vector<EdgeId>> bundles;
  for (EdgeId e = 0; e < map.num_edges(); ++e) {
    const auto& d = map.edge_darts(e);
    const int a = map.vertex(d[0]), b = map.vertex(d[1]);
    bundles[{std::min(a, b), std::max(a, b)}].push_back(e);
  }
  P centre{};
  for (const P& p : lay.crossing) centre = centre + (1.0 / n) * p;
  for (const auto& [ends, edges] : bundles) {
    const int count = static_cast<int>(edges.size());
    for (int i = 0; i < count; ++i) {
      const auto& d = map.edge_darts(edges[i]);
      const P a = lay.crossing[map.vertex(d[0])];
      const P b = lay.crossing[map.vertex(d[1])];
      Poly curve;
      if (ends.first == ends.second) {
        const P out = unit(a - centre);
        const P side = left_normal(out);
        const double spread = 0.5 * (i - (count - 1) / 2.0);
        const P c1 = a + 0.35 * (out + (0.8 + spread) * side);
        const P c2 = a + 0.35 * (out - (0.8 - spread) * side);
        for (int s = 0; s <= 12; ++s) {
          const double t = s / 12.0;
          const double u = 1 - t;
          curve.push_back(u * u * u * a + 3 * u * u * t * c1 + 3 * u * t * t * c2 + t * t * t * a);
        }
      } else {
        const double bend = (i - (count - 1) / 2.0) * 0.45;
        const P ctrl = 0.5 * (a + b) + bend * norm(b - a) * left_normal(unit(b - a));
        for (int s = 0; s <= 10; ++s) {
          const double t = s / 10.0;
          curve.push_back((1 - t) * (1 - t) * a + 2 * (1 - t) * t * ctrl + t * t * b);
        }
      }
      lay.curve[{d[0], d[1]}] = std::move(curve);
    }
  }
  return lay;
}

P point_along(const Poly& p, double dist) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    const double seg = norm(p[i] - p[i - 1]);
    if (seg >= dist) return p[i - 1] + (seg > 0 ? dist / seg : 0) * (p[i] - p[i - 1]);
    dist -= seg;
  }
  return p.back();
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

std::string half_integer(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

}  // namespace

std::string render_svg(const ShadowedPolyhedron& shadow, const RenderOptions& options) {
  const DiskMap& map = shadow.map();
  std::optional<Layout> maybe = divide_layout(shadow);
  Layout lay = maybe ? std::move(*maybe) : schematic_layout(map);

  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  for (const auto& [key, poly] : lay.curve) {
    for (const P& p : poly) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  }
  const double margin = 24;
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  const double scale = (options.size - 2 * margin) / span;
  auto tx = [&](P p) { return P{margin + (p.x - x0) * scale, options.size - margin - (p.y - y0) * scale}; };
  for (auto& [key, poly] : lay.curve) {
    for (P& p : poly) p = tx(p);
  }
  for (P& p : lay.crossing) p = tx(p);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(options.size) +
         "\" height=\"" + num(options.size) + "\" viewBox=\"0 0 " + num(options.size) + " " +
         num(options.size) + "\">\n";
  svg += std::string("<title>") + (lay.schematic ? "shadow (schematic layout)" : "shadow") + "</title>\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.6\">\n";
  for (const auto& [key, poly] : lay.curve) {
    svg += "<polyline points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) svg += (i ? " " : "") + num(poly[i].x) + "," + num(poly[i].y);
    svg += "\"/>\n";
  }
  svg += "</g>\n<g class=\"crossings\">\n";
  const double gap = 6;
  for (CrossingId v = 0; v < map.num_crossings(); ++v) {
    const P c = lay.crossing[v];
    const int p = shadow.diagram.over_parity(v);
    const P a = point_along(lay.from(map, map.dart_at(v, p)), gap);
    const P b = point_along(lay.from(map, map.dart_at(v, p + 2)), gap);
    svg += "<circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" + num(gap - 1.5) +
           "\" fill=\"white\" stroke=\"none\"/>\n";
    svg += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.6\" points=\"" + num(a.x) + "," +
           num(a.y) + " " + num(c.x) + "," + num(c.y) + " " + num(b.x) + "," + num(b.y) + "\"/>\n";
  }
  svg += "</g>\n<g class=\"regions\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
  for (const Region& r : map.regions()) {
    if (r.is_outer) continue;
    P sum{};
    int count = 0;
    for (DartId d : r.boundary) {
      for (const P& q : lay.from(map, d)) {
        sum = sum + q;
        ++count;
      }
    }
    const P at = (1.0 / count) * sum;
    std::string text = half_integer(shadow.twice_gleam[r.id]);
    if (shadow.labels) text = std::string(to_string((*shadow.labels)[r.id])) + " " + text;
    const bool hot = options.selection && options.selection->contains(r.id);
    svg += "<text x=\"" + num(at.x) + "\" y=\"" + num(at.y + 4) + "\" fill=\"" + (hot ? "#1f5fbf" : "#444") +
           "\"" + (hot ? " font-weight=\"bold\"" : "") + ">" + text + "</text>\n";
  }
  svg += "</g>\n";
  if (lay.schematic) {
    svg += "<text x=\"6\" y=\"14\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#888\">schematic</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace shadowpi
