#include "gentlefan/laminate.hpp"

#include "gentlefan/arrangement.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace gf {

int End::inf() const {
  switch (kind) {
    case EndKind::BdPlus:
    case EndKind::SpPlus: return 1;
    case EndKind::BdMinus:
    case EndKind::SpMinus: return -1;
    default: return 0;
  }
}

bool Laminate::operator<(const Laminate& o) const {
  if (closed != o.closed) return closed < o.closed;
  return segs < o.segs;
}

namespace {

long long mod(long long a, long long k) { return ((a % k) + k) % k; }

void check_segment(const Dissection& d, const Segment& s, int idx) {
  auto where = "segment " + std::to_string(idx);
  if (s.poly < 0 || s.poly >= static_cast<int>(d.polys.size())) throw InvalidLaminate(where + ": unknown polygon");
  const Polygon& P = d.poly(s.poly);
  for (const End* e : {&s.from, &s.to}) {
    if (e->arc()) {
      if (e->pos < 0 || e->pos >= P.size() || P.edges[e->pos].boundary())
        throw InvalidLaminate(where + ": end is not an arc side of " + P.name);
    } else if (e->kind == EndKind::BdPlus || e->kind == EndKind::BdMinus) {
      if (P.flavor != Flavor::Boundary) throw InvalidLaminate(where + ": boundary end in puncture polygon " + P.name);
    } else if (P.flavor != Flavor::Puncture) {
      throw InvalidLaminate(where + ": spiral end in boundary polygon " + P.name);
    }
  }
  if (s.from.arc() && s.to.arc() && s.from.pos == s.to.pos)
    throw InvalidLaminate(where + ": enters and leaves " + P.name + " through the same edge");
  if (s.from.free() && s.to.free()) throw InvalidLaminate(where + ": crosses no arc");
}

std::vector<Segment> canonical(const std::vector<Segment>& segs, bool closed) {
  std::vector<Segment> rev;
  for (auto it = segs.rbegin(); it != segs.rend(); ++it) rev.push_back(it->reversed());
  if (!closed) return std::min(segs, rev);
  std::vector<Segment> best = segs;
  for (const std::vector<Segment>* base : std::initializer_list<const std::vector<Segment>*>{&segs, &rev}) {
    std::vector<Segment> r = *base;
    for (size_t k = 0; k < r.size(); ++k) {
      std::rotate(r.begin(), r.begin() + 1, r.end());
      best = std::min(best, r);
    }
  }
  return best;
}

}  // namespace

long long segment_span(const Dissection& d, const Segment& s) {
  long long x = d.coord(s.poly, s.from.pos), y = d.coord(s.poly, s.to.pos);
  if (d.poly(s.poly).flavor == Flavor::Boundary) return y - x;
  long long k = d.period(s.poly);
  return s.side == Hand::L ? mod(y - x, k) : -mod(x - y, k);
}

bool side_is_free(const Dissection& d, const Segment& s) {
  return d.poly(s.poly).flavor == Flavor::Puncture && s.from.arc() && s.to.arc();
}

Hand forced_side(const Dissection& d, const Segment& s) {
  // white point on the left iff the cover coordinate increases
  if (s.from.free() || s.to.free()) {
    int fi = s.from.inf(), ti = s.to.inf();
    if (fi != 0 && ti != 0) return fi < ti ? Hand::L : Hand::R;
    return (ti > 0 || fi < 0) ? Hand::L : Hand::R;
  }
  if (side_is_free(d, s)) throw std::logic_error("side not forced");
  return d.coord(s.poly, s.to.pos) > d.coord(s.poly, s.from.pos) ? Hand::L : Hand::R;
}

int crossing_arc(const Dissection& d, const Laminate& g, int i) {
  const Segment& s = g.before(i);
  return d.poly(s.poly).edges[s.to.pos].arc;
}

int crossing_sign(const Laminate& g, int i) { return g.before(i).side == Hand::R ? 1 : -1; }

Laminate build_laminate(const Dissection& d, std::vector<Segment> segs, bool closed, bool generalized) {
  if (segs.empty()) throw InvalidLaminate("no segments");
  const int m = static_cast<int>(segs.size());
  for (int i = 0; i < m; ++i) {
    check_segment(d, segs[i], i);
    if (!side_is_free(d, segs[i]) && forced_side(d, segs[i]) != segs[i].side)
      throw InvalidLaminate("segment " + std::to_string(i) + ": marked side contradicts its ends");
  }
  for (int i = 0; i < m; ++i) {
    bool first = i == 0, last = i == m - 1;
    if (closed || !first) {
      if (segs[i].from.free()) throw InvalidLaminate("segment " + std::to_string(i) + ": free end inside the curve");
    } else if (segs[i].from.arc()) {
      throw InvalidLaminate("open curve must start at a boundary point or spiral");
    }
    if (closed || !last) {
      if (segs[i].to.free()) throw InvalidLaminate("segment " + std::to_string(i) + ": free end inside the curve");
    } else if (segs[i].to.arc()) {
      throw InvalidLaminate("open curve must end at a boundary point or spiral");
    }
  }
  const int nc = closed ? m : m - 1;
  if (nc < 1) throw InvalidLaminate("curve crosses no arc");
  for (int i = 0; i < nc; ++i) {
    const Segment& a = segs[i];
    const Segment& b = segs[(i + 1) % m];
    if (d.glued({a.poly, a.to.pos}) != Side{b.poly, b.from.pos})
      throw InvalidLaminate("crossing " + std::to_string(i) + ": consecutive segments are not glued");
    if (a.side == b.side)
      throw InvalidLaminate("crossing " + std::to_string(i) + ": condition (*) fails (white points on the same side)");
  }
  Laminate g;
  g.segs = canonical(segs, closed);
  g.closed = closed;
  g.generalized = generalized;
  if (!generalized) {
    std::vector<int> sign(d.n, 0);
    for (int i = 0; i < nc; ++i) {
      int a = crossing_arc(d, g, i), s = crossing_sign(g, i);
      if (sign[a] && sign[a] != s)
        throw InvalidLaminate("crossings of opposite sign on arc " + std::to_string(a + 1));
      sign[a] = s;
    }
    Arrangement A(d, {&g});
    long long x = self_crossings(A, 0);
    if (x != 0) throw InvalidLaminate("curve crosses itself");
  }
  return g;
}

Laminate elementary(const Dissection& d, int arc, int sign) {
  if (arc < 0 || arc >= d.n) throw std::out_of_range("unknown arc");
  Side a = d.sides[arc][0], b = d.sides[arc][1];
  auto far = [&](int p) {
    bool bd = d.poly(p).flavor == Flavor::Boundary;
    if (sign > 0) return End{bd ? EndKind::BdPlus : EndKind::SpPlus, -1};
    return End{bd ? EndKind::BdMinus : EndKind::SpMinus, -1};
  };
  Hand in = sign > 0 ? Hand::R : Hand::L;
  std::vector<Segment> segs{{a.poly, far(a.poly), End{EndKind::Arc, a.pos}, in},
                            {b.poly, End{EndKind::Arc, b.pos}, far(b.poly), flip(in)}};
  return build_laminate(d, segs, false);
}

GVector g_vector(const Dissection& d, const Laminate& g) {
  GVector v(d.n, 0);
  for (int i = 0; i < g.crossings(); ++i) v[crossing_arc(d, g, i)] += crossing_sign(g, i);
  return v;
}

std::string gvec_string(const GVector& g) {
  std::string s = "(";
  for (size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

namespace {

std::string end_token(const Dissection& d, int poly, const End& e) {
  switch (e.kind) {
    case EndKind::Arc: return d.edge_token({poly, e.pos});
    case EndKind::BdPlus: return "bd+";
    case EndKind::BdMinus: return "bd-";
    case EndKind::SpPlus: return "sp+";
    case EndKind::SpMinus: return "sp-";
  }
  return "?";
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

End parse_end(const Dissection& d, int poly, std::string t, const std::string& ctx) {
  // accept the unicode minus too
  for (size_t p; (p = t.find("\xe2\x88\x92")) != std::string::npos;) t.replace(p, 3, "-");
  if (t == "bd+") return {EndKind::BdPlus, -1};
  if (t == "bd-") return {EndKind::BdMinus, -1};
  if (t == "sp+") return {EndKind::SpPlus, -1};
  if (t == "sp-") return {EndKind::SpMinus, -1};
  if (t.size() >= 2 && (t.back() == 'A' || t.back() == 'B')) {
    std::string num = t.substr(0, t.size() - 1);
    if (!num.empty() && std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int arc = std::stoi(num) - 1;
      if (arc < 0 || arc >= d.n) throw InvalidLaminate(ctx + ": unknown arc in '" + t + "'");
      int pos = d.find_edge(poly, arc, t.back() == 'A' ? 0 : 1);
      if (pos < 0) throw InvalidLaminate(ctx + ": edge " + t + " is not a side of " + d.poly(poly).name);
      return {EndKind::Arc, pos};
    }
  }
  throw InvalidLaminate(ctx + ": bad end '" + t + "'");
}

}  // namespace

std::string to_spec(const Dissection& d, const Laminate& g) {
  std::string out;
  for (size_t i = 0; i < g.segs.size(); ++i) {
    const Segment& s = g.segs[i];
    if (i) out += "; ";
    out += d.poly(s.poly).name + ":" + end_token(d, s.poly, s.from) + ">" + end_token(d, s.poly, s.to) + "/" +
           (s.side == Hand::L ? "L" : "R");
  }
  return g.closed ? "loop(" + out + ")" : out;
}

std::vector<Segment> parse_segments(const Dissection& d, const std::string& spec_in, bool& closed) {
  std::string spec = trim(spec_in);
  closed = false;
  if (spec.rfind("loop(", 0) == 0) {
    if (spec.back() != ')') throw InvalidLaminate("unterminated loop(");
    closed = true;
    spec = spec.substr(5, spec.size() - 6);
  }
  std::vector<Segment> segs;
  std::vector<bool> given;
  std::stringstream ss(spec);
  std::string tok;
  int idx = 0;
  while (std::getline(ss, tok, ';')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    std::string ctx = "segment " + std::to_string(idx++);
    auto colon = tok.find(':'), gt = tok.find('>');
    if (colon == std::string::npos || gt == std::string::npos || gt < colon)
      throw InvalidLaminate(ctx + ": expected <poly>:<end>><end>[/L|/R] in '" + tok + "'");
    auto slash = tok.find('/', gt);
    Segment s;
    s.poly = d.poly_index(trim(tok.substr(0, colon)));
    if (s.poly < 0) throw InvalidLaminate(ctx + ": unknown polygon '" + trim(tok.substr(0, colon)) + "'");
    s.from = parse_end(d, s.poly, trim(tok.substr(colon + 1, gt - colon - 1)), ctx);
    std::string to = slash == std::string::npos ? tok.substr(gt + 1) : tok.substr(gt + 1, slash - gt - 1);
    s.to = parse_end(d, s.poly, trim(to), ctx);
    bool has = false;
    if (slash != std::string::npos) {
      std::string h = trim(tok.substr(slash + 1));
      if (h == "L") s.side = Hand::L, has = true;
      else if (h == "R") s.side = Hand::R, has = true;
      else if (h != "?") throw InvalidLaminate(ctx + ": marked side must be L or R");
    }
    if (!has && !side_is_free(d, s) && !(s.from.free() && s.to.free())) s.side = forced_side(d, s), has = true;
    segs.push_back(s);
    given.push_back(has);
  }
  if (segs.empty()) throw InvalidLaminate("empty laminate");
  // fill unspecified sides from condition (*)
  const int m = static_cast<int>(segs.size());
  for (int round = 0; round < m + 1; ++round)
    for (int i = 0; i < m; ++i) {
      if (given[i]) continue;
      int prev = i - 1, next = i + 1;
      if (closed) prev = (prev + m) % m, next %= m;
      if (prev >= 0 && given[prev]) segs[i].side = flip(segs[prev].side), given[i] = true;
      else if (next < m && given[next]) segs[i].side = flip(segs[next].side), given[i] = true;
    }
  if (std::find(given.begin(), given.end(), false) != given.end())
    throw InvalidLaminate("cannot infer marked sides; give /L or /R");
  return segs;
}

Laminate parse_laminate(const Dissection& d, const std::string& spec, bool generalized) {
  bool closed = false;
  auto segs = parse_segments(d, spec, closed);
  return build_laminate(d, std::move(segs), closed, generalized);
}

}  // namespace gf
