#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "shadowpi/shadow.hpp"

namespace shadowpi {

struct Point {
  mpq_class x;
  mpq_class y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Polylines with exact rational vertices. Open polylines are intervals whose
// endpoints sit on the (implicit) disk boundary; closed ones are circles.
struct DivideInput {
  struct Component {
    bool closed = false;
    std::vector<Point> points;
  };
  std::vector<Component> components;
};

// Lines a*u + b*v + c = 0.
struct LineArrangement {
  std::vector<std::array<mpq_class, 3>> lines;
};

// Combinatorial divide: double points (4 slots, counterclockwise) and
// interval endpoints (1 slot), joined by edges.
struct Divide {
  struct Node {
    bool endpoint = false;
    Point pos;
    std::vector<int> slot_edge;  // edge at each slot
    std::vector<int> slot_end;   // which end (0/1) of that edge
  };
  struct Edge {
    std::array<int, 2> node{};
    std::array<int, 2> slot{};
    int component = 0;
    std::vector<Point> path;  // from node[0] to node[1], both included
  };
  std::vector<Node> nodes;  // double points first
  std::vector<Edge> edges;
  int num_double_points = 0;
  // The unbounded face lies to the left (or right) of this edge, oriented
  // from node[0] to node[1].
  int outer_edge = 0;
  bool outer_on_left = true;
  DivideInput source;
};

// Throws TangencyOrTriplePoint, EndpointInInterior, OverlappingSegments,
// UnsupportedDegenerate, DisconnectedDivide.
Divide ingest_polyline_divide(const DivideInput& input);

// Throws ConcurrentLines, DuplicateLines, NoIntersections.
DivideInput arrangement_to_divide_input(const LineArrangement& arr);
Divide arrangement_to_divide(const LineArrangement& arr);

struct OverPolicy {
  enum class Kind { Default, Seed, Alternating };
  Kind kind = Kind::Default;
  std::uint64_t seed = 0;

  static OverPolicy parse(const std::string& text);
  std::string str() const;
};

// Over parities for a map: Default puts the strand of the smaller component
// (then smaller edge id) over; Seed flips fair coins; Alternating follows a
// checkerboard colouring so every corner of a region not adjacent to the
// outer colour class contributes +1/2.
std::vector<int> choose_over(const DiskMap& map, const OverPolicy& policy);

// Doubling construction with a/b/c labels; gleams 1/2, -1, 0 (chambers -1).
ShadowedPolyhedron double_divide(const Divide& divide, const OverPolicy& policy = {});

// The divide itself as a 4-valent map, for divides made only of circles.
DiskMap divide_curve_map(const Divide& divide);

}  // namespace shadowpi
