#pragma once

#include "gentlefan/dissection.hpp"

#include <map>
#include <string>
#include <vector>

namespace gf {

struct Arrow {
  int id = -1;
  int source = -1, target = -1;  // arcs
  int poly = -1;
  int index = -1;  // source is arc_positions(poly)[index]
  std::string name;
};

struct Quiver {
  int n = 0;
  std::vector<Arrow> arrows;
  std::vector<std::pair<int, int>> relations;  // alpha then beta
  // per polygon: arrow ids along C_v (empty for polygons with a single arc side)
  std::vector<std::vector<int>> cycles;
  std::vector<bool> cyclic;

  std::string word(const std::vector<int>& arrows) const;
};

// Sub-path of C_v: len arrows starting at arc_positions(poly)[start]. len 0 is the trivial path at that vertex.
struct ShortPath {
  int poly = -1;
  int start = 0;
  int len = 0;
  auto operator<=>(const ShortPath&) const = default;
};

struct SpecialCycle {
  int poly = -1;
  int base = -1;  // arc
  std::vector<int> word;
};

using BrauerSpec = std::map<std::string, int>;  // polygon name -> multiplicity

struct BrauerRelation {
  std::vector<int> lhs, rhs;  // rhs empty: monomial
};

Quiver quiver_of(const Dissection& d);
// throws std::logic_error naming the failing axiom
void check_gentle(const Quiver& q);
std::vector<SpecialCycle> special_cycles(const Dissection& d, const Quiver& q);
std::vector<BrauerRelation> brauer_relations(const Dissection& d, const Quiver& q, const BrauerSpec& spec);

std::vector<int> path_arrows(const Dissection& d, const Quiver& q, const ShortPath& p);
int path_source(const Dissection& d, const ShortPath& p);
int path_target(const Dissection& d, const ShortPath& p);

}  // namespace gf
