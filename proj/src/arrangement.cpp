#include "gentlefan/arrangement.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace gf {

namespace {

long long floordiv(long long a, long long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

long long mod(long long a, long long k) { return ((a % k) + k) % k; }

int seg_count(const Laminate& g) { return static_cast<int>(g.segs.size()); }

}  // namespace

Arrangement::Arrangement(const Dissection& d, std::vector<const Laminate*> curves)
    : d_(&d), curves_(std::move(curves)) {
  order_.assign(d.n, {});
  rank_.resize(curves_.size());
  for (int c = 0; c < curve_count(); ++c) {
    const Laminate& g = *curves_[c];
    rank_[c].assign(g.crossings(), -1);
    for (int i = 0; i < g.crossings(); ++i) order_[crossing_arc(d, g, i)].push_back({c, i});
  }
  size_t most = 0;
  for (int a = 0; a < d.n; ++a) {
    auto& pts = order_[a];
    std::stable_sort(pts.begin(), pts.end(), [&](Point p, Point q) { return compare(p, q) < 0; });
    for (size_t r = 0; r < pts.size(); ++r) rank_[pts[r].curve][pts[r].cross] = static_cast<int>(r);
    most = std::max(most, pts.size());
  }
  K_ = static_cast<long long>(most) + 1;

  chords_.resize(curves_.size());
  by_poly_.assign(d.polys.size(), {});
  for (int c = 0; c < curve_count(); ++c) {
    const Laminate& g = *curves_[c];
    const int m = seg_count(g);
    for (int s = 0; s < m; ++s) {
      const Segment& seg = g.segs[s];
      Chord ch;
      ch.curve = c;
      ch.seg = s;
      ch.poly = seg.poly;
      int in = s - 1, out = s;
      if (g.closed) in = (in + m) % m;
      if (seg.from.arc()) ch.a = Ext::fin(coord({c, in}, {seg.poly, seg.from.pos}));
      else ch.a = Ext{seg.from.inf(), 0};
      if (seg.to.arc()) {
        long long y = coord({c, out}, {seg.poly, seg.to.pos});
        if (d.poly(seg.poly).flavor == Flavor::Puncture && ch.a.finite()) {
          long long P = period(seg.poly);
          long long raw = y - ch.a.v;
          y = ch.a.v + (seg.side == Hand::L ? mod(raw, P) : -mod(-raw, P));
        }
        ch.b = Ext::fin(y);
      } else {
        ch.b = Ext{seg.to.inf(), 0};
      }
      chords_[c].push_back(ch);
      by_poly_[seg.poly].push_back({c, s});
    }
  }
}

long long Arrangement::coord(Point p, Side s) const {
  const Laminate& g = *curves_[p.curve];
  int arc = crossing_arc(*d_, g, p.cross);
  long long cnt = static_cast<long long>(order_[arc].size());
  int r = rank_[p.curve][p.cross];
  long long slot = d_->sides[arc][0] == s ? r + 1 : cnt - r;
  return static_cast<long long>(d_->coord(s.poly, s.pos)) * K_ + slot;
}

Arrangement::Walk Arrangement::start(Point p, bool forward) const {
  const Laminate& g = *curves_[p.curve];
  int arc = crossing_arc(*d_, g, p.cross);
  const Segment& nx = g.after(p.cross);
  bool along = Side{nx.poly, nx.from.pos} == d_->sides[arc][0];
  if (!forward) along = !along;
  int m = seg_count(g);
  return along ? Walk{(p.cross + 1) % m, 1} : Walk{p.cross, -1};
}

Arrangement::Key Arrangement::key(int curve, Walk w) const {
  const Segment& s = curves_[curve]->segs[w.seg];
  const End& exit = w.dir > 0 ? s.to : s.from;
  if (exit.free()) return {exit.inf() < 0 ? 1 : 2, 0};
  long long sg = w.dir * segment_span(*d_, s);
  return {sg < 0 ? 0 : 3, -sg};
}

bool Arrangement::advance(int curve, Walk& w) const {
  const Laminate& g = *curves_[curve];
  int m = seg_count(g);
  int nx = w.seg + w.dir;
  if (g.closed) nx = (nx + m) % m;
  else if (nx < 0 || nx >= m) return false;
  w.seg = nx;
  return true;
}

int Arrangement::compare(Point p, Point q) const {
  if (p == q) return 0;
  const int bound = seg_count(*curves_[p.curve]) + seg_count(*curves_[q.curve]) + 2;
  // A parallel stretch may end in opposite ways on its two sides (an essential
  // crossing). Every pair on the stretch must then read the same end, so look
  // first where the lower strand runs along its own orientation.
  Point lowp = std::tie(p.curve, p.cross) < std::tie(q.curve, q.cross) ? p : q;
  const int first = start(lowp, true).dir > 0 ? 0 : 1;
  for (int k = 0; k < 2; ++k) {
    const int pass = k == 0 ? first : 1 - first;
    Walk wp = start(p, pass == 0), wq = start(q, pass == 0);
    for (int step = 0; step < bound; ++step) {
      Key kp = key(p.curve, wp), kq = key(q.curve, wq);
      if (kp != kq) {
        int r = kp < kq ? -1 : 1;
        return pass == 0 ? r : -r;
      }
      if (kp.group == 1 || kp.group == 2) break;
      if (!advance(p.curve, wp) || !advance(q.curve, wq)) break;
    }
  }
  // parallel strands: the lower curve id runs on the left of itself
  if (p.curve == q.curve) throw std::logic_error("curve runs parallel to itself");
  const Laminate& g = *curves_[lowp.curve];
  int arc = crossing_arc(*d_, g, lowp.cross);
  const Segment& nx = g.after(lowp.cross);
  bool enters_a = Side{nx.poly, nx.from.pos} == d_->sides[arc][0];
  int low_first = enters_a ? -1 : 1;
  return lowp == p ? low_first : -low_first;
}

bool interleave(Ext ua, Ext ub, Ext wa, Ext wb) {
  Ext ul = std::min(ua, ub), uh = std::max(ua, ub), wl = std::min(wa, wb), wh = std::max(wa, wb);
  if ((uh.inf > 0 && wh.inf > 0) || (ul.inf < 0 && wl.inf < 0)) return false;
  auto in = [&](Ext x) { return ul < x && x < uh; };
  return in(wl) != in(wh);
}

std::vector<long long> crossing_shifts(const Arrangement::Chord& u, const Arrangement::Chord& w, long long P) {
  std::vector<long long> out;
  if (P == 0) {
    if (interleave(u.a, u.b, w.a, w.b)) out.push_back(0);
    return out;
  }
  Ext ul = u.lo(), uh = u.hi(), wl = w.lo(), wh = w.hi();
  bool uray = !ul.finite() || !uh.finite(), wray = !wl.finite() || !wh.finite();
  if (uray && wray) return out;  // same side: none; opposite: caller checks
  long long jmin, jmax;
  if (!uray && !wray) {
    jmin = floordiv(ul.v - wh.v, P) - 1;
    jmax = floordiv(uh.v - wl.v, P) + 1;
  } else {
    long long a = uray ? (ul.finite() ? ul.v : uh.v) : 0;
    if (uray) {
      jmin = floordiv(a - wh.v, P) - 1;
      jmax = floordiv(a - wl.v, P) + 1;
    } else {
      long long b = wl.finite() ? wl.v : wh.v;
      jmin = floordiv(ul.v - b, P) - 1;
      jmax = floordiv(uh.v - b, P) + 1;
    }
  }
  for (long long j = jmin; j <= jmax; ++j)
    if (interleave(u.a, u.b, w.a.shifted(j * P), w.b.shifted(j * P))) out.push_back(j);
  return out;
}

long long cross_count(const Arrangement::Chord& u, const Arrangement::Chord& w, long long P) {
  if (P != 0) {
    bool uray = !u.a.finite() || !u.b.finite(), wray = !w.a.finite() || !w.b.finite();
    if (uray && wray) {
      int ui = u.a.finite() ? u.b.inf : u.a.inf, wi = w.a.finite() ? w.b.inf : w.a.inf;
      return ui == wi ? 0 : kUnboundedCrossings;
    }
  }
  return static_cast<long long>(crossing_shifts(u, w, P).size());
}

long long crossings_between(const Arrangement& A, int c1, int c2) {
  long long total = 0;
  for (size_t p = 0; p < A.dis().polys.size(); ++p) {
    const auto& list = A.chords_in(static_cast<int>(p));
    long long P = A.period(static_cast<int>(p));
    for (auto [ca, sa] : list) {
      if (ca != c1) continue;
      for (auto [cb, sb] : list) {
        if (cb != c2) continue;
        long long k = cross_count(A.chord(ca, sa), A.chord(cb, sb), P);
        if (k == kUnboundedCrossings) return kUnboundedCrossings;
        total += k;
      }
    }
  }
  return total;
}

long long self_crossings(const Arrangement& A, int c) {
  long long total = 0;
  for (size_t p = 0; p < A.dis().polys.size(); ++p) {
    const auto& list = A.chords_in(static_cast<int>(p));
    long long P = A.period(static_cast<int>(p));
    for (size_t i = 0; i < list.size(); ++i) {
      if (list[i].first != c) continue;
      for (size_t j = i + 1; j < list.size(); ++j) {
        if (list[j].first != c) continue;
        long long k = cross_count(A.chord(c, list[i].second), A.chord(c, list[j].second), P);
        if (k == kUnboundedCrossings) return kUnboundedCrossings;
        total += k;
      }
    }
  }
  return total;
}

long long crossings_with(const Dissection& d, const Laminate& g, const Laminate& h) {
  Arrangement A(d, {&g, &h});
  return crossings_between(A, 0, 1);
}

bool compatible(const Dissection& d, const Laminate& g, const Laminate& h) { return crossings_with(d, g, h) == 0; }

bool positive_position(const Dissection& d, const Laminate& g, const Laminate& h) {
  Arrangement A(d, {&g, &h});
  for (size_t p = 0; p < d.polys.size(); ++p) {
    const auto& list = A.chords_in(static_cast<int>(p));
    long long P = A.period(static_cast<int>(p));
    for (auto [ca, sa] : list) {
      if (ca != 0) continue;
      for (auto [cb, sb] : list) {
        if (cb != 1) continue;
        const auto& s = A.chord(ca, sa);
        const auto& t = A.chord(cb, sb);
        if (cross_count(s, t, P) == kUnboundedCrossings) {
          // opposite spirals: every crossing has the same shape, positive iff s runs off to +inf
          if (!s.lo().finite()) return false;
          continue;
        }
        for (long long j : crossing_shifts(s, t, P)) {
          Ext tl = t.lo().shifted(j * P), th = t.hi().shifted(j * P);
          Ext sl = s.lo();
          if (!(tl < sl && sl < th)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace gf
