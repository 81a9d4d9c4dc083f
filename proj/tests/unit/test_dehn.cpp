#include "common.hpp"

#include "gentlefan/arrangement.hpp"

#include <json.hpp>

#include <doctest.h>

using namespace gf;

TEST_CASE("torus gamma tables") {
  Dissection t = fixture("torus");
  for (int m = -4; m <= 4; ++m) {
    CAPTURE(m);
    CHECK(g_vector(t, torus_gamma(t, m)) == GVector{m, 1 - m});
    CHECK(g_vector(t, torus_gamma_prime(t, m)) == GVector{m, -m - 1});
  }
}

TEST_CASE("twist law") {
  Dissection t = fixture("torus");
  Laminate l = parse_laminate(t, kEll);
  Laminate g1 = elementary(t, 0, 1);
  GVector gl = g_vector(t, l);
  long long k = crossings_with(t, g1, l);
  CHECK(k == 1);
  for (int m = 0; m <= 8; ++m) {
    Laminate r = twist(t, g1, l, m);
    CHECK(g_vector(t, r) == GVector{1 + m * k * gl[0], m * k * gl[1]});
    // the twisted curve still crosses the loop once and stays compatible with it after one more twist
    CHECK(crossings_with(t, r, l) == 1);
    CHECK(compatible(t, r, twist(t, g1, l, m + 1)));
  }
  // each twist step is the next gamma
  for (int m = 0; m <= 3; ++m) CHECK(twist(t, torus_gamma(t, m), l, 1) == torus_gamma(t, m + 1));
}

TEST_CASE("twist preconditions") {
  Dissection t = fixture("torus");
  Laminate l = parse_laminate(t, kEll);
  // gamma'_0 is not in positive position for l
  CHECK_FALSE(positive_position(t, elementary(t, 1, -1), l));
  CHECK_THROWS(twist(t, elementary(t, 1, -1), l, 1));
  CHECK(twist(t, torus_gamma(t, 2), l, 0) == torus_gamma(t, 2));
}

TEST_CASE("bridges") {
  Dissection t = fixture("torus");
  Laminate l = parse_laminate(t, kEll), lp = parse_laminate(t, kEllPrime);
  BridgeCurve b = bridge(t, l, 0, {});
  CHECK(g_vector(t, b.curve) == GVector{1, 0});
  CHECK(crossings_with(t, b.curve, l) == 1);
  CHECK(positive_position(t, b.curve, l));
  BridgeCurve b2 = bridge(t, lp, 1, {});
  CHECK(g_vector(t, b2.curve) == GVector{0, 1});
  CHECK(positive_position(t, b2.curve, lp));
}

TEST_CASE("density certificate on the torus") {
  Dissection t = fixture("torus");
  DensityCertificate c = density_sequence(t, {1, -1}, 8);
  REQUIRE(c.steps.size() == 9);
  CHECK(c.N == 1);
  CHECK(c.closed.size() == 1);
  Q prev = Q(1000);
  for (const DensityStep& s : c.steps) {
    GVector sum(2, 0);
    for (const GVector& g : s.gvectors)
      for (int i = 0; i < 2; ++i) sum[i] += g[i];
    CHECK(sum == GVector{1 + s.m, -s.m});
    // distance from (1,-1)/2 to the ray through (m+1,-m), done by hand
    long long m = s.m;
    CHECK(s.distance2 == Q(1, 4 * (2 * m * m + 2 * m + 1)));
    CHECK(s.distance2 < prev);
    prev = s.distance2;
    for (const Laminate& a : s.laminates)
      for (const Laminate& b : s.laminates) CHECK(compatible(t, a, b));
  }
  CHECK(to_double(c.steps.back().distance2) < 1e-2);
  auto j = nlohmann::json::parse(certificate_json(t, c));
  CHECK(j["N"] == 1);
  CHECK(j["steps"].size() == 9);
  CHECK(j["steps"][8]["ray_distance"] == "1/580");
}

TEST_CASE("density identity in general") {
  // sum of g over X_m moves by m times the twisted loop contributions
  Dissection d = fixture("punctured_disk");
  DensityCertificate c = density_sequence(d, {1, 0, -1}, 2);
  for (const DensityStep& s : c.steps) {
    GVector sum(3, 0);
    for (const GVector& g : s.gvectors)
      for (int i = 0; i < 3; ++i) sum[i] += g[i];
    CHECK(sum == GVector{1, 0, -1});
    CHECK(s.distance2 == Q(0));
  }
}
