#include "common.hpp"

#include "gentlefan/arrangement.hpp"

#include <doctest.h>

using namespace gf;

namespace {

std::set<GVector> ray_set(const Fan& f) { return {f.ray_g.begin(), f.ray_g.end()}; }

// n-subsets of rays that are pairwise compatible
long long brute_maximal(const Dissection& d, const Fan& f) {
  int r = static_cast<int>(f.rays.size());
  std::vector<std::vector<bool>> ok(r, std::vector<bool>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) ok[i][j] = compatible(d, f.rays[i], f.rays[j]);
  long long count = 0;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == d.n) {
      ++count;
      return;
    }
    for (int i = from; i < r; ++i) {
      bool good = true;
      for (int p : pick) good &= ok[p][i];
      if (!good) continue;
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return count;
}

}  // namespace

TEST_CASE("disk fan") {
  Dissection d = fixture("disk8");
  Fan f = enumerate_fan(d, 3);
  CHECK(f.rays.size() == 9);
  CHECK(ray_set(f) == gset({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}, {1, -1, 0},
                            {0, 1, -1}, {1, 0, -1}}));
  CHECK(f.maximal.size() == 14);
  CHECK(brute_maximal(d, f) == 14);
  CHECK(f.finite == Finiteness::Finite);
  CHECK(fan_defect(f).first == -1);
}

TEST_CASE("punctured disk fan") {
  Dissection d = fixture("punctured_disk");
  Fan f = enumerate_fan(d, 3);
  CHECK(ray_set(f) == gset({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}, {1, -1, 0},
                            {-1, 1, 0}, {0, 1, -1}, {0, -1, 1}, {1, 0, -1}, {-1, 0, 1}}));
  CHECK(f.maximal.size() == 20);
  CHECK(brute_maximal(d, f) == 20);
  CHECK(f.finite == Finiteness::Finite);
  CHECK(fan_defect(f).first == -1);
}

TEST_CASE("torus fan is infinite") {
  Dissection t = fixture("torus");
  Fan f = enumerate_fan(t, 3);
  CHECK(f.finite == Finiteness::Infinite);
  CHECK(f.closed_points > 0);
  // every maximal cone is a pair {gamma_m, gamma_m+1} or {gamma'_m, gamma'_m+1}
  std::set<std::set<GVector>> expect;
  for (int m = -4; m <= 4; ++m) {
    expect.insert({GVector{m, 1 - m}, GVector{m + 1, -m}});
    expect.insert({GVector{m, -m - 1}, GVector{m + 1, -m - 2}});
  }
  for (const auto& c : f.maximal) CHECK(expect.count(std::set<GVector>{f.ray_g[c[0]], f.ray_g[c[1]]}) == 1);
}

TEST_CASE("model laminate counts") {
  for (int m = 1; m <= 6; ++m) {
    CHECK(model_laminates({m, Flavor::Boundary}).size() == static_cast<size_t>(m * (m + 3) / 2));
    CHECK(model_laminates({m, Flavor::Puncture}).size() == static_cast<size_t>(m * (m + 1)));
  }
}

TEST_CASE("inversion round trip") {
  for (const char* name : {"disk8", "punctured_disk", "torus", "example71"}) {
    Dissection d = fixture(name);
    int R = d.n > 3 ? 1 : 2;
    for_each_point(d.n, R, [&](const GVector& g) {
      Lamination X = invert_g(d, g);
      CHECK(lamination_g(d, X) == g);
      // members pairwise compatible
      for (const Laminate& a : X.members)
        for (const Laminate& b : X.members) CHECK(compatible(d, a, b));
      Lamination Y = invert_g(d, lamination_g(d, X));
      CHECK(Y.members == X.members);
    });
  }
}

TEST_CASE("coverage") {
  Dissection d = fixture("disk8");
  CHECK(coverage(d, 2) == Q(1));
  Dissection t = fixture("torus");
  // uncovered: the nonzero multiples of (1,-1) and (-1,1)
  long long bad = 0, all = 0;
  for_each_point(2, 3, [&](const GVector& g) {
    ++all;
    bad += g[0] == -g[1] && g[0] != 0;
    CHECK(invert_g(t, g).has_closed() == (g[0] == -g[1] && g[0] != 0));
  });
  CHECK(coverage(t, 3) == Q(all - bad, all));
  CHECK(coverage(t, 3) == Q(43, 49));
}

TEST_CASE("cones and slices") {
  Dissection d = fixture("disk8");
  Fan f = enumerate_fan(d, 3);
  for (const auto& c : f.maximal) {
    Cone cone;
    for (int r : c) cone.generators.push_back(f.ray_g[r]);
    CHECK(simplicial(cone));
  }
  auto slice = fan_slice(f);
  CHECK(slice.size() == 14);
  for (const auto& [cone, lines] : slice) {
    CHECK(lines.size() == 3);
    for (const Polyline& p : lines)
      for (const auto& pt : p.points) {
        double s = 0;
        for (double x : pt) s += std::abs(x);
        CHECK(s == doctest::Approx(1.0));
      }
  }
  Fan empty = enumerate_fan(d, 0);
  CHECK(empty.rays.empty());
}
