#include "common.hpp"

#include <algorithm>
#include <map>

#include <doctest.h>

using namespace gf;

namespace {

std::set<std::string> relation_words(const Quiver& q) {
  std::set<std::string> out;
  for (auto [a, b] : q.relations) out.insert(q.word({a, b}));
  return out;
}

// torus arrows under their usual names a1, a2, b1, b2
const std::map<std::string, std::string> kTorusNames{{"a", "a1"}, {"b", "b2"}, {"c", "a2"}, {"d", "b1"}};

std::string rename(const Quiver& q, const std::vector<int>& w, bool reverse) {
  std::vector<std::string> parts;
  for (int a : w) parts.push_back(kTorusNames.at(q.arrows[a].name));
  if (reverse) std::reverse(parts.begin(), parts.end());
  std::string s;
  for (const auto& p : parts) s += p;
  return s;
}

}  // namespace

TEST_CASE("one arc") {
  Dissection d = fixture("disk1");
  Quiver q = quiver_of(d);
  CHECK(q.n == 1);
  CHECK(q.arrows.empty());
  CHECK(q.relations.empty());
  CHECK(special_cycles(d, q).empty());
  CHECK(brauer_relations(d, q, {}).empty());
}

TEST_CASE("five arc example") {
  Dissection d = fixture("example71");
  Quiver q = quiver_of(d);
  std::vector<std::tuple<std::string, int, int>> got, want{{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 4},
                                                            {"d", 4, 1}, {"e", 5, 4}, {"f", 4, 3}};
  for (const Arrow& a : q.arrows) got.emplace_back(a.name, a.source + 1, a.target + 1);
  CHECK(got == want);
  CHECK(relation_words(q) == std::set<std::string>{"cf", "fc", "ed"});
}

TEST_CASE("torus quiver") {
  Dissection t = fixture("torus");
  Quiver q = quiver_of(t);
  REQUIRE(q.arrows.size() == 4);
  for (const Arrow& a : q.arrows) {
    bool is_a = kTorusNames.at(a.name)[0] == 'a';
    CHECK(a.source == (is_a ? 0 : 1));
    CHECK(a.target == (is_a ? 1 : 0));
  }
  std::set<std::string> rel;
  for (auto [a, b] : q.relations) rel.insert(rename(q, {a, b}, false));
  CHECK(rel == std::set<std::string>{"a1b1", "b1a2", "a2b2", "b2a1"});

  auto cycles = special_cycles(t, q);
  CHECK(cycles.size() == 4);  // one cycle, four base points
  for (const auto& c : cycles) CHECK(c.word.size() == 4);

  // binomials compared in composition order
  std::set<std::set<std::string>> br;
  for (const BrauerRelation& r : brauer_relations(t, q, {{"P", 1}}))
    br.insert({rename(q, r.lhs, true), rename(q, r.rhs, true)});
  CHECK(br == std::set<std::set<std::string>>{{"a1b1a2b2", "a2b2a1b1"}, {"b1a2b2a1", "b2a1b1a2"}});
}

TEST_CASE("brauer relations") {
  Dissection d = fixture("punctured_disk");
  Quiver q = quiver_of(d);
  auto cyc = special_cycles(d, q);
  CHECK(cyc.size() == 3);
  CHECK(cyc[0].word.size() == 3);
  auto rel = brauer_relations(d, q, {{"C", 1}});
  CHECK(rel.size() == 3);
  for (const auto& r : rel) {
    CHECK(r.rhs.empty());
    CHECK(r.lhs.size() == 3);
  }
  auto rel2 = brauer_relations(d, q, {{"C", 2}});
  CHECK(rel2[0].lhs.size() == 6);
  CHECK_THROWS_AS(brauer_relations(d, q, {}), std::invalid_argument);
  CHECK_THROWS_AS(brauer_relations(d, q, {{"L", 1}, {"C", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(brauer_relations(d, q, {{"C", 0}}), std::invalid_argument);
}

TEST_CASE("gentle axioms everywhere") {
  for (const char* name : {"disk1", "disk8", "punctured_disk", "torus", "example71"}) {
    Dissection d = fixture(name);
    Quiver q;
    CHECK_NOTHROW(q = quiver_of(d));
    // every relation is a composable pair
    for (auto [a, b] : q.relations) CHECK(q.arrows[a].target == q.arrows[b].source);
  }
}

TEST_CASE("short paths") {
  Dissection d = fixture("example71");
  Quiver q = quiver_of(d);
  ShortPath p{0, 3, 3};  // d a b
  CHECK(q.word(path_arrows(d, q, p)) == "dab");
  CHECK(path_source(d, p) == 3);
  CHECK(path_target(d, p) == 2);
}
