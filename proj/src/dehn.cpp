#include "gentlefan/dehn.hpp"

#include "gentlefan/arrangement.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gf {

namespace {

long long floordiv(long long a, long long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

// a segment under construction; span is the displacement in base coordinates of the cover
struct Piece {
  int poly;
  End from, to;
  long long span = 0;
  bool center = false;
};

Piece piece_of(const Dissection& d, const Segment& s) {
  Piece p{s.poly, s.from, s.to, 0};
  if (s.from.arc() && s.to.arc()) p.span = segment_span(d, s);
  return p;
}

long long lift_span(Ext a, Ext b, long long K) {
  if (!a.finite() || !b.finite()) return 0;
  return floordiv(b.v, K) - floordiv(a.v, K);
}

// remove backtracks across an arc, then fix the sides
std::vector<Segment> tighten(const Dissection& d, std::vector<Piece> ps, std::vector<bool>* center = nullptr) {
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 1; i + 1 < ps.size(); ++i) {
      const Piece& p = ps[i];
      if (!(p.from.arc() && p.to.arc() && p.from.pos == p.to.pos && p.span == 0)) continue;
      Piece a = ps[i - 1], b = ps[i + 1];
      Piece m{a.poly, a.from, b.to, a.span + b.span, a.center || p.center || b.center};
      ps.erase(ps.begin() + i - 1, ps.begin() + i + 2);
      ps.insert(ps.begin() + i - 1, m);
      again = true;
      break;
    }
  }
  std::vector<Segment> out;
  for (const Piece& p : ps) {
    Segment s{p.poly, p.from, p.to, Hand::L};
    if (p.from.arc() && p.to.arc() && d.poly(p.poly).flavor == Flavor::Puncture) {
      if (p.span == 0 || std::llabs(p.span) >= d.period(p.poly))
        throw std::logic_error("tighten: segment winds in " + d.poly(p.poly).name);
      s.side = p.span > 0 ? Hand::L : Hand::R;
    } else {
      s.side = forced_side(d, s);
    }
    out.push_back(s);
    if (center) center->push_back(p.center);
  }
  return out;
}

std::vector<Segment> oriented(const Laminate& g, bool forward) {
  if (forward) return g.segs;
  std::vector<Segment> r;
  for (auto it = g.segs.rbegin(); it != g.segs.rend(); ++it) r.push_back(it->reversed());
  return r;
}

struct Hit {
  int loop, seg;
  Ext a, b;
};

// right = true turns right onto each loop (the twist), false turns left (its inverse)
Laminate twist_one(const Dissection& d, const Laminate& gamma, const std::vector<Laminate>& loops,
                   const std::vector<long long>& exps, bool turn_right) {
  std::vector<const Laminate*> curves{&gamma};
  for (const auto& l : loops) curves.push_back(&l);
  Arrangement A(d, curves);
  const long long K = A.slots();
  std::vector<Piece> out;
  for (int i = 0; i < static_cast<int>(gamma.segs.size()); ++i) {
    const Segment& seg = gamma.segs[i];
    const int P = seg.poly;
    const auto& u = A.chord(0, i);
    const long long per = A.period(P);
    std::vector<Hit> hits;
    for (auto [c, s] : A.chords_in(P)) {
      if (c == 0 || exps[c - 1] == 0) continue;
      const auto& w = A.chord(c, s);
      for (long long j : crossing_shifts(u, w, per)) hits.push_back({c - 1, s, w.a.shifted(j * per), w.b.shifted(j * per)});
    }
    if (hits.empty()) {
      out.push_back(piece_of(d, seg));
      continue;
    }
    const bool up = u.a < u.b;
    auto right = [&](Ext x) { return up ? (u.a < x && x < u.b) : (x > u.a || x < u.b); };
    auto dist = [&](Ext x) { return std::pair<int, Ext>{up || x > u.a ? 0 : 1, x}; };
    for (auto& h : hits) {
      if (!right(h.a) && !right(h.b)) throw std::logic_error("twist: crossing without a right end");
    }
    std::sort(hits.begin(), hits.end(), [&](const Hit& x, const Hit& y) {
      Ext rx = right(x.a) ? x.a : x.b, ry = right(y.a) ? y.a : y.b;
      return dist(rx) < dist(ry);
    });
    End cur = seg.from;
    Ext cur_lift = u.a;
    for (const Hit& h : hits) {
      const Laminate& L = loops[h.loop];
      const bool fwd = right(h.b) == turn_right;
      auto segs = oriented(L, fwd);
      const int n = static_cast<int>(segs.size());
      const int k = fwd ? h.seg : n - 1 - h.seg;
      Ext e_lift = fwd ? h.b : h.a, c_lift = fwd ? h.a : h.b;
      out.push_back({P, cur, segs[k].to, lift_span(cur_lift, e_lift, K)});
      for (long long rep = 0; rep < exps[h.loop]; ++rep) {
        for (int t = 1; t < n; ++t) out.push_back(piece_of(d, segs[(k + t) % n]));
        if (rep + 1 < exps[h.loop]) out.push_back(piece_of(d, segs[k]));
      }
      cur = segs[k].from;
      cur_lift = c_lift;
    }
    out.push_back({P, cur, seg.to, lift_span(cur_lift, u.b, K)});
  }
  return build_laminate(d, tighten(d, std::move(out)), false);
}

}  // namespace

std::vector<Laminate> multi_twist(const Dissection& d, const std::vector<Laminate>& gammas, const MultiTwist& t) {
  if (t.loops.size() != t.exponents.size()) throw std::invalid_argument("multi_twist: exponent count differs from loop count");
  std::vector<Laminate> loops;
  std::vector<long long> exps;
  for (size_t i = 0; i < t.loops.size(); ++i) {
    if (!t.loops[i].closed) throw std::invalid_argument("twist: loop is not closed");
    if (t.exponents[i] < 0) throw std::invalid_argument("twist: negative exponent");
    auto it = std::find(loops.begin(), loops.end(), t.loops[i]);
    if (it == loops.end()) {
      loops.push_back(t.loops[i]);
      exps.push_back(t.exponents[i]);
    } else {
      exps[it - loops.begin()] += t.exponents[i];
    }
  }
  for (size_t i = 0; i < loops.size(); ++i)
    for (size_t j = i + 1; j < loops.size(); ++j)
      if (!compatible(d, loops[i], loops[j])) throw std::invalid_argument("twist: loops are not compatible");
  for (size_t i = 0; i < gammas.size(); ++i) {
    if (gammas[i].closed) throw std::invalid_argument("twist: laminate is closed");
    for (size_t j = i + 1; j < gammas.size(); ++j)
      if (!compatible(d, gammas[i], gammas[j])) throw std::invalid_argument("twist: laminates are not compatible");
    for (const auto& l : loops)
      if (!positive_position(d, gammas[i], l)) throw std::invalid_argument("twist: laminate not in positive position for loop");
  }
  std::vector<Laminate> out;
  for (const auto& g : gammas) out.push_back(twist_one(d, g, loops, exps, true));
  return out;
}

Laminate inverse_twist(const Dissection& d, const Laminate& gamma, const Laminate& loop, long long m) {
  if (!loop.closed) throw std::invalid_argument("twist: loop is not closed");
  if (gamma.closed) throw std::invalid_argument("twist: laminate is closed");
  if (m < 0) throw std::invalid_argument("twist: negative exponent");
  if (!positive_position(d, loop, gamma)) throw std::invalid_argument("inverse twist: loop not in positive position for laminate");
  return twist_one(d, gamma, {loop}, {m}, false);
}

Laminate twist(const Dissection& d, const Laminate& gamma, const Laminate& loop, long long m) {
  return multi_twist(d, {gamma}, {{loop}, {m}}).front();
}

BridgeCurve bridge(const Dissection& d, const Laminate& loop, int arc, const std::vector<Laminate>& ambient) {
  if (!loop.closed) throw std::invalid_argument("bridge: loop is not closed");
  if (arc < 0 || arc >= d.n) throw std::invalid_argument("bridge: no such arc");
  if (g_vector(d, loop)[arc] <= 0) throw std::invalid_argument("bridge: loop has no positive crossing with the arc");
  for (size_t i = 0; i < ambient.size(); ++i) {
    if (ambient[i].closed) throw std::invalid_argument("bridge: ambient laminate is closed");
    if (!compatible(d, ambient[i], loop)) throw std::invalid_argument("bridge: ambient crosses the loop");
    for (size_t j = i + 1; j < ambient.size(); ++j)
      if (!compatible(d, ambient[i], ambient[j])) throw std::invalid_argument("bridge: ambient not compatible");
  }
  std::vector<const Laminate*> curves;
  for (const auto& a : ambient) curves.push_back(&a);
  curves.push_back(&loop);
  const int L = static_cast<int>(ambient.size());
  Arrangement A(d, curves);
  const long long K = A.slots();
  int cross = -1;
  for (int i = 0; i < loop.crossings() && cross < 0; ++i)
    if (crossing_arc(d, loop, i) == arc) cross = i;
  const Point p{L, cross};

  std::vector<Piece> half[2];  // each runs away from the arc
  for (int side = 0; side < 2; ++side) {
    const Side sd = d.sides[arc][side];
    const int P = sd.poly;
    const long long per = A.period(P);
    const Ext x = Ext::fin(A.coord(p, sd));
    const End top{d.poly(P).flavor == Flavor::Boundary ? EndKind::BdPlus : EndKind::SpPlus, -1};
    const End here{EndKind::Arc, sd.pos};
    Arrangement::Chord alpha{-1, -1, P, x, Ext{1, 0}};
    bool found = false;
    Ext best;
    int bc = -1, bs = -1;
    bool to_end = false;
    for (auto [c, s] : A.chords_in(P)) {
      if (c == L) continue;
      const auto& w = A.chord(c, s);
      for (long long j : crossing_shifts(alpha, w, per)) {
        Ext wa = w.a.shifted(j * per), wb = w.b.shifted(j * per);
        bool b_in = x < wb && wb.finite();
        Ext q = b_in ? wb : wa;
        if (!found || q < best) {
          found = true;
          best = q;
          bc = c;
          bs = s;
          to_end = b_in;
        }
      }
    }
    auto& h = half[side];
    if (!found) {
      h.push_back({P, here, top, 0, true});
      continue;
    }
    const Laminate& amb = ambient[bc];
    const Segment& s = amb.segs[bs];
    h.push_back({P, here, to_end ? s.to : s.from, lift_span(x, best, K), true});
    if (to_end) {
      for (size_t t = bs + 1; t < amb.segs.size(); ++t) h.push_back(piece_of(d, amb.segs[t]));
    } else {
      for (int t = bs - 1; t >= 0; --t) h.push_back(piece_of(d, amb.segs[t].reversed()));
    }
  }
  std::vector<Piece> all;
  for (auto it = half[0].rbegin(); it != half[0].rend(); ++it) {
    Piece r{it->poly, it->to, it->from, -it->span, it->center};
    all.push_back(r);
  }
  for (const auto& pc : half[1]) all.push_back(pc);
  std::vector<bool> center;
  auto segs = tighten(d, all, &center);
  BridgeCurve out;
  out.base_loop = loop;
  out.arc = arc;
  out.curve = build_laminate(d, segs, false);
  const int n = static_cast<int>(segs.size());
  if (out.curve.segs != segs) std::reverse(center.begin(), center.end());
  std::vector<int> idx;
  for (int i = 0; i < n; ++i)
    if (center[i]) idx.push_back(i);
  out.center = {idx.front(), idx.back()};
  for (const auto& a : ambient)
    if (!compatible(d, out.curve, a)) throw std::logic_error("bridge: result crosses the ambient lamination");
  if (!positive_position(d, out.curve, loop)) throw std::logic_error("bridge: result not in positive position");
  return out;
}

DensityCertificate density_sequence(const Dissection& d, const GVector& g, int M) {
  if (M < 1) throw std::invalid_argument("density: steps must be >= 1");
  DensityCertificate c;
  c.target = g;
  Lamination X = invert_g(d, g);
  c.nonclosed = X.nonclosed();
  c.closed = X.closed();
  QVec u(g.begin(), g.end());
  Q norm = 0;
  for (long long x : g) norm += x < 0 ? -x : x;
  if (norm != 0)
    for (auto& x : u) x /= norm;
  auto distance = [&](const std::vector<GVector>& gs) {
    std::vector<QVec> gens;
    for (const auto& v : gs) gens.push_back(QVec(v.begin(), v.end()));
    return cone_distance2(gens, u);
  };
  if (c.closed.empty()) {
    std::vector<GVector> gs;
    for (const auto& l : c.nonclosed) gs.push_back(g_vector(d, l));
    for (int m = 0; m <= M; ++m) c.steps.push_back({m, c.nonclosed, gs, distance(gs)});
    return c;
  }
  std::vector<Laminate> ambient;
  for (const auto& l : c.nonclosed)
    if (std::find(ambient.begin(), ambient.end(), l) == ambient.end()) ambient.push_back(l);
  std::vector<Laminate> loops;
  for (const auto& l : c.closed)
    if (std::find(loops.begin(), loops.end(), l) == loops.end()) loops.push_back(l);
  for (const auto& l : loops) {
    bool touched = false;
    for (const auto& b : c.bridges)
      if (crossings_with(d, b.curve, l) > 0) touched = true;
    if (touched) continue;
    GVector gl = g_vector(d, l);
    int arc = -1;
    for (int i = 0; i < d.n && arc < 0; ++i)
      if (gl[i] > 0) arc = i;
    if (arc < 0) throw std::logic_error("density: loop without a positive entry");
    c.bridges.push_back(bridge(d, l, arc, ambient));
    ambient.push_back(c.bridges.back().curve);
  }
  for (const auto& l : c.closed) {
    long long n = 0;
    for (const auto& b : c.bridges) n += crossings_with(d, b.curve, l);
    if (n == 0) throw std::logic_error("density: loop missed by every bridge");
    c.counts.push_back(n);
    c.N *= n;
  }
  MultiTwist T;
  for (size_t j = 0; j < c.closed.size(); ++j) {
    T.loops.push_back(c.closed[j]);
    T.exponents.push_back(c.N / c.counts[j]);
  }
  std::vector<Laminate> base;
  for (const auto& b : c.bridges) base.push_back(b.curve);
  for (int m = 0; m <= M; ++m) {
    MultiTwist Tm = T;
    for (auto& e : Tm.exponents) e *= m;
    auto tw = multi_twist(d, base, Tm);
    DensityStep st;
    st.m = m;
    st.laminates = c.nonclosed;
    st.laminates.insert(st.laminates.end(), tw.begin(), tw.end());
    for (const auto& l : st.laminates) st.gvectors.push_back(g_vector(d, l));
    st.distance2 = distance(st.gvectors);
    c.steps.push_back(std::move(st));
  }
  return c;
}

std::string certificate_json(const Dissection& d, const DensityCertificate& c) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["target"] = c.target;
  auto specs = [&](const std::vector<Laminate>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& l : v) a.push_back(to_spec(d, l));
    return a;
  };
  j["nonclosed_part"] = specs(c.nonclosed);
  j["closed_part"] = specs(c.closed);
  j["bridges"] = ordered_json::array();
  for (const auto& b : c.bridges)
    j["bridges"].push_back({{"loop", to_spec(d, b.base_loop)}, {"arc", b.arc + 1}, {"curve", to_spec(d, b.curve)},
                            {"gvector", g_vector(d, b.curve)}});
  j["counts"] = c.counts;
  j["N"] = c.N;
  j["steps"] = ordered_json::array();
  for (const auto& s : c.steps) {
    ordered_json st;
    st["m"] = s.m;
    st["laminates"] = specs(s.laminates);
    st["gvectors"] = s.gvectors;
    st["ray_distance"] = to_string(s.distance2);
    st["ray_distance_l2"] = std::sqrt(to_double(s.distance2));
    j["steps"].push_back(st);
  }
  return j.dump(2);
}

}  // namespace gf
