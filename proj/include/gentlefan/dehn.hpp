#pragma once

#include "gentlefan/fan.hpp"

#include <string>
#include <vector>

namespace gf {

struct MultiTwist {
  std::vector<Laminate> loops;
  std::vector<long long> exponents;
};

// Twist of a non-closed laminate along closed loops; every loop must see gamma in positive position.
Laminate twist(const Dissection& d, const Laminate& gamma, const Laminate& loop, long long m);
// Turns left instead; needs the loop in positive position for gamma.
Laminate inverse_twist(const Dissection& d, const Laminate& gamma, const Laminate& loop, long long m);
std::vector<Laminate> multi_twist(const Dissection& d, const std::vector<Laminate>& gammas, const MultiTwist& t);

struct BridgeCurve {
  Laminate base_loop;
  int arc = -1;
  Laminate curve;
  std::pair<int, int> center{-1, -1};  // the two center segments
};

BridgeCurve bridge(const Dissection& d, const Laminate& loop, int arc, const std::vector<Laminate>& ambient);

struct DensityStep {
  long long m = 0;
  std::vector<Laminate> laminates;
  std::vector<GVector> gvectors;
  Q distance2;  // squared L2 distance from g/|g|_1 to the cone
};

struct DensityCertificate {
  GVector target;
  std::vector<Laminate> nonclosed, closed;  // closed with repeats
  std::vector<BridgeCurve> bridges;
  std::vector<long long> counts;  // n_j per closed member
  long long N = 1;
  std::vector<DensityStep> steps;
};

DensityCertificate density_sequence(const Dissection& d, const GVector& g, int M);
std::string certificate_json(const Dissection& d, const DensityCertificate& c);

}  // namespace gf
