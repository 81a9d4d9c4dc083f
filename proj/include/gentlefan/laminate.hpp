#pragma once

#include "gentlefan/dissection.hpp"

#include <map>
#include <string>
#include <vector>

namespace gf {

struct InvalidLaminate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Free ends: bd+ sits between the last arc side and the white point going ccw,
// bd- between the white point and the first arc side. sp+ spirals ccw, sp- cw.
enum class EndKind { Arc, BdPlus, BdMinus, SpPlus, SpMinus };

struct End {
  EndKind kind = EndKind::Arc;
  int pos = -1;  // edge position when kind == Arc
  bool arc() const { return kind == EndKind::Arc; }
  bool free() const { return kind != EndKind::Arc; }
  int inf() const;  // +1 / -1 for free ends, 0 for arc points
  auto operator<=>(const End&) const = default;
};

enum class Hand { L, R };
inline Hand flip(Hand h) { return h == Hand::L ? Hand::R : Hand::L; }

struct Segment {
  int poly = -1;
  End from, to;
  Hand side = Hand::L;  // where the white point lies, traversing from -> to
  Segment reversed() const { return {poly, to, from, flip(side)}; }
  auto operator<=>(const Segment&) const = default;
};

class Laminate {
 public:
  std::vector<Segment> segs;
  bool closed = false;
  bool generalized = false;

  int crossings() const { return static_cast<int>(closed ? segs.size() : segs.size() - 1); }
  // crossing i joins segs[i] and segs[i+1]
  const Segment& before(int i) const { return segs[i]; }
  const Segment& after(int i) const { return segs[(i + 1) % segs.size()]; }
  bool operator==(const Laminate& o) const { return closed == o.closed && segs == o.segs; }
  bool operator<(const Laminate& o) const;
};

using GVector = std::vector<long long>;

// Signed base-level span of a segment between two arc ends, in polygon coordinates.
long long segment_span(const Dissection& d, const Segment& s);
// The side forced by the coordinates; nullopt-like Hand::L/R or throws if free choice
bool side_is_free(const Dissection& d, const Segment& s);
Hand forced_side(const Dissection& d, const Segment& s);

int crossing_arc(const Dissection& d, const Laminate& g, int i);
int crossing_sign(const Laminate& g, int i);  // +1 iff the exiting segment has the white point on its right

Laminate build_laminate(const Dissection& d, std::vector<Segment> segs, bool closed, bool generalized = false);
Laminate elementary(const Dissection& d, int arc, int sign);
GVector g_vector(const Dissection& d, const Laminate& g);

std::string to_spec(const Dissection& d, const Laminate& g);
Laminate parse_laminate(const Dissection& d, const std::string& spec, bool generalized = false);
// raw parse, no validation
std::vector<Segment> parse_segments(const Dissection& d, const std::string& spec, bool& closed);

std::string gvec_string(const GVector& g);

}  // namespace gf
