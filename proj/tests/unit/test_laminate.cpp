#include "common.hpp"

#include "gentlefan/arrangement.hpp"

#include <doctest.h>

using namespace gf;

namespace {

const char* kDelta = "lu:bd+>1B/R; lc:1A>3A/L; rd:3B>5A/R; ru:5B>bd+/L";
const char* kDeltaPrime = "ld:bd+>2B/R; lc:2A>4A/L; rd:4B>5A/R; ru:5B>bd+/L";
const char* kGammaGen = "ld:bd+>2B/R; lc:2A>3A/L; rd:3B>4B/R; lc:4A>3A/L; rd:3B>5A/R; ru:5B>bd+/L";

Laminate reversed(const Dissection& d, const Laminate& g) {
  std::vector<Segment> r;
  for (auto it = g.segs.rbegin(); it != g.segs.rend(); ++it) r.push_back(it->reversed());
  return build_laminate(d, r, g.closed, g.generalized);
}

}  // namespace

TEST_CASE("elementary laminates") {
  Dissection d = fixture("disk8");
  CHECK(g_vector(d, elementary(d, 0, 1)) == GVector{1, 0, 0});
  CHECK(g_vector(d, elementary(d, 1, -1)) == GVector{0, -1, 0});
  Dissection t = fixture("torus");
  Laminate g1 = elementary(t, 0, 1);
  CHECK(g_vector(t, g1) == GVector{1, 0});
  // both ends spiral the same way
  CHECK(g1.segs.front().from.kind == EndKind::SpPlus);
  CHECK(g1.segs.back().to.kind == EndKind::SpPlus);
}

TEST_CASE("g-vectors of hand-drawn laminates") {
  Dissection d = fixture("disk8");
  Laminate g = parse_laminate(d, "L:bd+>1B/R; C:1A>3A/L; R:3B>bd-/R");
  CHECK(g_vector(d, g) == GVector{1, 0, -1});
  Dissection t = fixture("torus");
  CHECK(g_vector(t, parse_laminate(t, kEll)) == GVector{1, -1});
  CHECK(g_vector(t, parse_laminate(t, kEllPrime)) == GVector{-1, 1});
}

TEST_CASE("condition (*) and sign consistency") {
  Dissection d = fixture("disk8");
  // white points on the same side at the crossing
  CHECK_THROWS_AS(parse_laminate(d, "L:bd+>1B/R; C:1A>3A/R; R:3B>bd-/R"), InvalidLaminate);
  CHECK_THROWS_AS(parse_laminate(d, "L:bd+>1B/R"), InvalidLaminate);
  Dissection e = fixture("example71");
  CHECK_THROWS_AS(parse_laminate(e, kGammaGen), InvalidLaminate);
  CHECK_NOTHROW(parse_laminate(e, kGammaGen, true));
}

TEST_CASE("orientation does not matter") {
  for (const char* name : {"disk8", "punctured_disk", "torus"}) {
    Dissection d = fixture(name);
    Fan f = enumerate_fan(d, 2);
    for (const Laminate& g : f.rays) {
      Laminate r = reversed(d, g);
      CHECK(r == g);
      CHECK(g_vector(d, r) == g_vector(d, g));
      CHECK(parse_laminate(d, to_spec(d, g)) == g);
    }
  }
  Dissection t = fixture("torus");
  Laminate l = parse_laminate(t, kEll);
  CHECK(reversed(t, l) == l);
}

TEST_CASE("|g_d| counts crossings with d") {
  Dissection t = fixture("torus");
  for (int m = -4; m <= 4; ++m) {
    Laminate g = torus_gamma(t, m);
    std::vector<long long> hits(2, 0);
    for (int i = 0; i < g.crossings(); ++i) ++hits[crossing_arc(t, g, i)];
    GVector v = g_vector(t, g);
    CHECK(std::llabs(v[0]) == hits[0]);
    CHECK(std::llabs(v[1]) == hits[1]);
  }
}

TEST_CASE("crossing numbers") {
  Dissection t = fixture("torus");
  Laminate l = parse_laminate(t, kEll);
  CHECK(crossings_with(t, torus_gamma(t, 1), l) == 1);
  CHECK(compatible(t, torus_gamma(t, 1), torus_gamma(t, 2)));
  CHECK(compatible(t, torus_gamma(t, 2), torus_gamma(t, 2)));
  CHECK_FALSE(compatible(t, torus_gamma(t, 1), torus_gamma(t, 3)));
  CHECK(compatible(t, l, l));
  Dissection d = fixture("disk8");
  CHECK_FALSE(compatible(d, elementary(d, 0, 1), elementary(d, 0, -1)));
  Dissection e = fixture("example71");
  Laminate a = parse_laminate(e, kDelta), b = parse_laminate(e, kDeltaPrime);
  CHECK(crossings_with(e, a, b) == 1);
  CHECK(crossings_with(e, b, a) == 1);
}

TEST_CASE("positive position") {
  Dissection e = fixture("example71");
  Laminate a = parse_laminate(e, kDelta), b = parse_laminate(e, kDeltaPrime);
  CHECK(positive_position(e, b, a));
  CHECK_FALSE(positive_position(e, a, b));
  Dissection t = fixture("torus");
  Laminate l = parse_laminate(t, kEll);
  // g(l)_1 > 0
  CHECK(positive_position(t, elementary(t, 0, 1), l));
}

TEST_CASE("positive both ways iff compatible") {
  for (const char* name : {"disk8", "punctured_disk"}) {
    Dissection d = fixture(name);
    Fan f = enumerate_fan(d, 2);
    for (const Laminate& x : f.rays)
      for (const Laminate& y : f.rays) {
        CHECK(crossings_with(d, x, y) == crossings_with(d, y, x));
        CHECK((positive_position(d, x, y) && positive_position(d, y, x)) == compatible(d, x, y));
      }
  }
}
