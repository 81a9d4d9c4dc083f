#pragma once

#include "gentlefan/laminate.hpp"
#include "gentlefan/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gf {

struct Lamination {
  std::vector<Laminate> members;  // sorted, repeats allowed

  bool reduced() const;
  bool complete(int n) const { return reduced() && static_cast<int>(members.size()) == n; }
  std::vector<Laminate> nonclosed() const;
  std::vector<Laminate> closed() const;
  std::vector<std::pair<Laminate, int>> grouped() const;
  bool has_closed() const;
};

GVector lamination_g(const Dissection& d, const Lamination& X);

struct ModelSignature {
  int m = 1;
  Flavor flavor = Flavor::Boundary;
  auto operator<=>(const ModelSignature&) const = default;
};

struct ModelLaminate {
  Laminate lam;       // in the model dissection
  GVector g;
  Segment central;    // its piece in the central polygon, model positions
};

// Central polygon (arcs 1..m) with one digon glued on every side.
Dissection model_dissection(ModelSignature sig);
const std::vector<ModelLaminate>& model_laminates(ModelSignature sig);
// index into model_laminates(sig) with multiplicity
std::vector<std::pair<int, int>> local_solve(ModelSignature sig, const std::vector<long long>& local_g);

Lamination invert_g(const Dissection& d, const GVector& g);

struct Cone {
  std::vector<GVector> generators;
};
Cone cone_of(const Dissection& d, const Lamination& X);
bool contains(const Cone& c, const QVec& v);
bool simplicial(const Cone& c);

enum class Finiteness { Finite, Infinite, Unknown };
std::string to_string(Finiteness f);

struct Fan {
  int n = 0;
  int bound = 0;
  std::vector<Laminate> rays;
  std::vector<GVector> ray_g;
  std::vector<std::vector<int>> cones;    // every support seen, ray indices
  std::vector<std::vector<int>> maximal;  // supports of size n
  Finiteness finite = Finiteness::Unknown;
  long long closed_points = 0;
  long long points = 0;
};

Fan enumerate_fan(const Dissection& d, int R);
Q coverage(const Dissection& d, int R);

// pairwise face-intersection check over all cones of a fan; returns offending pair or {-1,-1}
std::pair<int, int> fan_defect(const Fan& f);

struct Polyline {
  std::vector<std::vector<double>> points;
};
// cone boundaries cut by the unit L1 sphere; n must be 2 or 3
std::vector<std::pair<std::vector<int>, std::vector<Polyline>>> fan_slice(const Fan& f);

void for_each_point(int n, int R, const std::function<void(const GVector&)>& fn);

}  // namespace gf
