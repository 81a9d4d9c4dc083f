#pragma once

#include "gentlefan/laminate.hpp"

#include <climits>
#include <compare>

namespace gf {

inline constexpr long long kUnboundedCrossings = LLONG_MAX;

// Extended integer: inf = -1 / +1 for the two ideal ends, 0 for finite v.
struct Ext {
  int inf = 0;
  long long v = 0;
  static Ext fin(long long x) { return {0, x}; }
  bool finite() const { return inf == 0; }
  Ext shifted(long long s) const { return inf ? *this : Ext{0, v + s}; }
  std::strong_ordering operator<=>(const Ext& o) const {
    if (inf != o.inf) return inf <=> o.inf;
    if (inf) return std::strong_ordering::equal;
    return v <=> o.v;
  }
  bool operator==(const Ext& o) const { return (*this <=> o) == 0; }
};

struct Point {
  int curve = -1, cross = -1;
  bool operator==(const Point&) const = default;
};

// All curves of a finite family drawn in minimal position at once. Points on
// each arc get a transverse order; every segment becomes a chord between
// refined integer coordinates (polygon coordinate * K + slot). In puncture
// polygons chords live in the universal cover and repeat with period().
class Arrangement {
 public:
  struct Chord {
    int curve = -1, seg = -1, poly = -1;
    Ext a, b;  // from / to; a is finite unless the from end is free
    Ext lo() const { return a < b ? a : b; }
    Ext hi() const { return a < b ? b : a; }
  };

  Arrangement(const Dissection& d, std::vector<const Laminate*> curves);

  const Dissection& dis() const { return *d_; }
  int curve_count() const { return static_cast<int>(curves_.size()); }
  const Laminate& curve(int c) const { return *curves_[c]; }
  long long slots() const { return K_; }
  long long period(int poly) const { return d_->period(poly) * K_; }

  const Chord& chord(int curve, int seg) const { return chords_[curve][seg]; }
  const std::vector<std::pair<int, int>>& chords_in(int poly) const { return by_poly_[poly]; }
  const std::vector<Point>& points_on(int arc) const { return order_[arc]; }
  int rank(Point p) const { return rank_[p.curve][p.cross]; }
  long long coord(Point p, Side s) const;

  // -1 if p comes first along the A side of the shared arc (ccw), +1 after, 0 same point
  int compare(Point p, Point q) const;

 private:
  struct Walk {
    int seg, dir;
  };
  struct Key {
    int group;
    long long val;
    auto operator<=>(const Key&) const = default;
  };
  Walk start(Point p, bool forward) const;
  Key key(int curve, Walk w) const;
  bool advance(int curve, Walk& w) const;

  const Dissection* d_;
  std::vector<const Laminate*> curves_;
  long long K_ = 2;
  std::vector<std::vector<Point>> order_;
  std::vector<std::vector<int>> rank_;
  std::vector<std::vector<Chord>> chords_;
  std::vector<std::vector<std::pair<int, int>>> by_poly_;
};

bool interleave(Ext ua, Ext ub, Ext wa, Ext wb);
// number of j with u crossing w + j*period (period 0: no translates)
long long cross_count(const Arrangement::Chord& u, const Arrangement::Chord& w, long long period);
// translates j of w meeting u, empty when unbounded
std::vector<long long> crossing_shifts(const Arrangement::Chord& u, const Arrangement::Chord& w,
                                       long long period);

long long crossings_between(const Arrangement& A, int c1, int c2);
long long self_crossings(const Arrangement& A, int c);

long long crossings_with(const Dissection& d, const Laminate& g, const Laminate& h);
bool compatible(const Dissection& d, const Laminate& g, const Laminate& h);
// g crosses h from right to left everywhere, both strands read with the white point on their right
bool positive_position(const Dissection& d, const Laminate& g, const Laminate& h);

}  // namespace gf
