#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gf {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_);
};

struct InvalidDissection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Flavor { Puncture, Boundary };

// arc < 0 marks the boundary segment
struct Edge {
  int arc = -1;
  int side = 0;  // 0 = A, 1 = B
  bool boundary() const { return arc < 0; }
};

struct Polygon {
  std::string name;
  Flavor flavor = Flavor::Puncture;
  std::vector<Edge> edges;  // ccw
  int bpos = -1;            // position of the boundary segment
  int size() const { return static_cast<int>(edges.size()); }
};

struct Side {
  int poly = -1;
  int pos = -1;
  auto operator<=>(const Side&) const = default;
};

struct SurfaceInvariants {
  int genus = 0;
  int boundary_components = 0;
  int circ_punctures = 0;
  int bullet_punctures = 0;
  int circ_marked = 0;
  int bullet_marked = 0;
  int euler_characteristic = 0;
  int arcs = 0;
};

struct DualArc {
  int v = -1, v2 = -1;  // polygon of the A side, polygon of the B side
};

class Dissection {
 public:
  std::string name;
  int n = 0;
  std::vector<Polygon> polys;
  std::vector<std::array<Side, 2>> sides;  // per arc: A side, B side

  int poly_index(std::string_view name) const;  // -1 if absent
  const Polygon& poly(int p) const { return polys.at(p); }
  Side glued(Side s) const;
  const Edge& edge(Side s) const { return polys.at(s.poly).edges.at(s.pos); }
  // position of <arc><side> inside polygon p, -1 if not there
  int find_edge(int p, int arc, int side) const;

  // Cover coordinate of an arc edge: puncture polygons use the position,
  // boundary polygons count arc sides ccw starting after the boundary (1..m).
  int coord(int p, int pos) const;
  int pos_of_coord(int p, long long c) const;
  int period(int p) const;  // 0 for boundary polygons
  // arc sides of p in the polygon's path/cycle order
  std::vector<int> arc_positions(int p) const;

  std::string edge_token(Side s) const;  // "3A"
};

Dissection parse_dissection(std::string_view text);
Dissection load_dissection(const std::string& path);
SurfaceInvariants validate(const Dissection& d);
std::vector<DualArc> dual(const Dissection& d);
std::pair<Side, Side> adjacency(const Dissection& d, int arc);

}  // namespace gf
