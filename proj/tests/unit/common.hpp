#pragma once

#include "gentlefan/dehn.hpp"
#include "gentlefan/silting.hpp"

#include <cstdlib>
#include <set>
#include <string>

inline gf::Dissection fixture(const std::string& name) {
  return gf::load_dissection(std::string(FIXTURES) + "/" + name + ".dsc");
}

inline const char* kEll = "loop(P:2A>1A/R; P:1B>2B/L)";
inline const char* kEllPrime = "loop(P:2A>1B/L; P:1A>2B/R)";

// gamma_m on the torus: twists of the positive elementary laminate of arc 2
inline gf::Laminate torus_gamma(const gf::Dissection& t, int m) {
  gf::Laminate g0 = gf::elementary(t, 1, 1);
  if (m == 0) return g0;
  return gf::twist(t, g0, gf::parse_laminate(t, m > 0 ? kEll : kEllPrime), std::abs(m));
}

inline gf::Laminate torus_gamma_prime(const gf::Dissection& t, int m) {
  gf::Laminate g0 = gf::elementary(t, 1, -1);
  if (m == 0) return g0;
  return gf::inverse_twist(t, g0, gf::parse_laminate(t, m > 0 ? kEll : kEllPrime), std::abs(m));
}

inline std::set<gf::GVector> gset(std::initializer_list<gf::GVector> l) { return {l}; }
