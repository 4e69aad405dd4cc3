#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "shadowpi/builders.hpp"
#include "shadowpi/error.hpp"
#include "shadowpi/io.hpp"

namespace testing {

using namespace shadowpi;

inline std::string fixture(const std::string& name) { return std::string(SHADOWPI_FIXTURES) + "/" + name; }

inline ShadowedPolyhedron load_shadow(const std::string& name) {
  return shadow_from_json(read_json_file(fixture(name)));
}

// One crossing, two monogon lobes. Darts 0 and 1 bound one lobe, 2 and 3 the
// other; the outer face is left of dart 1.
inline CrossingTable figure_eight_table() {
  CrossingTable t;
  t.crossings = {{0, 1, 2, 3}};
  t.edges = {{0, 1}, {2, 3}};
  t.outer_dart = 1;
  return t;
}

inline DivideInput polygon(const std::vector<std::pair<int, int>>& pts, bool closed = true) {
  DivideInput in;
  DivideInput::Component c;
  c.closed = closed;
  for (auto [x, y] : pts) c.points.push_back({mpq_class(x), mpq_class(y)});
  in.components.push_back(std::move(c));
  return in;
}

// The curve itself as a map (not doubled).
inline DiskMap closed_curve(const std::vector<std::pair<int, int>>& pts) {
  return divide_curve_map(ingest_polyline_divide(polygon(pts)));
}

// Three-lobed curve with three crossings.
inline std::vector<std::pair<int, int>> trefoil_polygon() {
  return {{0, -2}, {5, 1}, {3, 4}, {-2, 1}, {-2, -5}, {2, -5}, {2, 1}, {-3, 4}, {-5, 1}};
}

// Random closed polygons (one or two) on a small grid, kept when they form a
// connected curve diagram with between lo and hi crossings.
inline DiskMap random_curve_map(std::mt19937_64& rng, int lo, int hi) {
  auto coord = [&] { return static_cast<int>(rng() % 11) - 5; };
  for (;;) {
    DivideInput in;
    const int curves = 1 + static_cast<int>(rng() % 4 == 0);
    for (int c = 0; c < curves; ++c) {
      std::vector<std::pair<int, int>> pts;
      const int n = 3 + static_cast<int>(rng() % 4);
      for (int i = 0; i < n; ++i) pts.emplace_back(coord(), coord());
      in.components.push_back(polygon(pts).components[0]);
    }
    try {
      DiskMap m = divide_curve_map(ingest_polyline_divide(in));
      if (m.num_crossings() >= lo && m.num_crossings() <= hi) return m;
    } catch (const Error&) {
    }
  }
}

inline LinkDiagram alternating(DiskMap map) {
  auto over = choose_over(map, OverPolicy::parse("alternating"));
  return LinkDiagram(std::move(map), std::move(over));
}

inline Presentation pres(std::vector<std::string> gens, const std::vector<std::string>& rels) {
  Presentation p;
  p.generators = std::move(gens);
  for (const auto& r : rels) p.relators.push_back(p.parse(r));
  return p;
}

// gleam := c on every internal region.
inline ShadowedPolyhedron with_c_gleams(LinkDiagram d) {
  std::vector<int> g = compute_twice_c(d);
  g[d.map().outer_region()] = 0;
  return {std::move(d), std::move(g), std::nullopt, {}};
}

// Permutations of {0..n-1} composed by hand; independent of FiniteGroup.
using Perm = std::vector<int>;

inline std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

// Pairs (x, y) in S_n with w1(x, y) == w2(x, y), words given as strings over
// "xy" (uppercase = inverse).
inline std::uint64_t brute_pairs(int n, const std::string& lhs, const std::string& rhs) {
  const auto perms = all_perms(n);
  auto inverse = [](const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
  };
  auto eval = [&](const std::string& w, const Perm& x, const Perm& y) {
    Perm acc(n);
    std::iota(acc.begin(), acc.end(), 0);
    for (char c : w) {
      const Perm& g = (c == 'x' || c == 'X') ? x : y;
      acc = compose(acc, std::isupper(static_cast<unsigned char>(c)) ? inverse(g) : g);
    }
    return acc;
  };
  std::uint64_t count = 0;
  for (const auto& x : perms) {
    for (const auto& y : perms) count += eval(lhs, x, y) == eval(rhs, x, y);
  }
  return count;
}

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Usage;  // sentinel: nothing thrown
}

}  // namespace testing
