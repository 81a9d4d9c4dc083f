#pragma once

#include "gentlefan/fan.hpp"
#include "gentlefan/quiver.hpp"

#include <string>
#include <vector>

namespace gf {

// Zigzag P_{x_0} - P_{x_1} - ... ; maps[i] joins positions i and i+1 and always
// runs from the degree -1 end to the degree 0 end.
struct StringComplex {
  int n = 0;  // vertices of the algebra
  std::vector<int> vertices;
  std::vector<int> degrees;  // 0 or -1
  std::vector<ShortPath> maps;
  std::vector<int> t_exp;  // all zero for short complexes

  bool short_complex() const;
  StringComplex reversed() const;
  // equal up to reversal
  bool isomorphic(const StringComplex& o) const;
  bool operator==(const StringComplex& o) const = default;
};

StringComplex string_complex(const Dissection& d, const Laminate& gamma);
// inverse of string_complex on short complexes
Laminate complex_laminate(const Dissection& d, const StringComplex& T);
GVector complex_g(const StringComplex& T);
// projectives shared between the two degrees (empty for presentable complexes)
std::vector<int> shared_projectives(const StringComplex& T);
std::string to_string(const Quiver& q, const StringComplex& T);

enum class ObstructionKind { Singleton, QuasiGraph };

struct HomObstruction {
  ObstructionKind kind = ObstructionKind::Singleton;
  char form = 'a';  // a..d for singletons
  ShortPath path;   // len 0: identity at arc path.start (poly -1)
  int pos = -1, pos2 = -1;  // position in T (degree -1) and in T' (degree 0)
  std::vector<std::pair<int, int>> aligned;  // quasi-graph: aligned positions (T, T')
  std::string ends;  // quasi-graph: "e"/"f" per end
};

std::vector<HomObstruction> singleton_single_maps(const Dissection& d, const StringComplex& T, const StringComplex& T2);
std::vector<HomObstruction> quasi_graph_reps(const Dissection& d, const StringComplex& T, const StringComplex& T2);
// both lists; empty iff Hom(T, T2[1]) = 0
std::vector<HomObstruction> hom_obstructions(const Dissection& d, const StringComplex& T, const StringComplex& T2);
std::string to_string(const Dissection& d, const Quiver& q, const HomObstruction& o);

bool is_presilting(const Dissection& d, const std::vector<StringComplex>& Ts);
bool is_silting(const Dissection& d, const std::vector<StringComplex>& Ts);

std::vector<StringComplex> lamination_complex(const Dissection& d, const Lamination& X);

}  // namespace gf
