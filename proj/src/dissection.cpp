#include "gentlefan/dissection.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gf {

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                         ": " + msg),
      line(line_),
      col(col_) {}

namespace {

struct Tok {
  std::string s;
  int col;
};

std::vector<Tok> tokenize(const std::string& line) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int Dissection::poly_index(std::string_view nm) const {
  for (size_t i = 0; i < polys.size(); ++i)
    if (polys[i].name == nm) return static_cast<int>(i);
  return -1;
}

Side Dissection::glued(Side s) const {
  const Edge& e = edge(s);
  if (e.boundary()) throw std::invalid_argument("boundary segment has no gluing");
  return sides.at(e.arc)[1 - e.side];
}

int Dissection::find_edge(int p, int arc, int side) const {
  const auto& s = sides.at(arc)[side];
  return s.poly == p ? s.pos : -1;
}

int Dissection::coord(int p, int pos) const {
  const Polygon& P = polys.at(p);
  if (P.flavor == Flavor::Puncture) return pos;
  return ((pos - P.bpos) % P.size() + P.size()) % P.size();
}

int Dissection::pos_of_coord(int p, long long c) const {
  const Polygon& P = polys.at(p);
  long long k = P.size();
  if (P.flavor == Flavor::Puncture) return static_cast<int>(((c % k) + k) % k);
  return static_cast<int>((c + P.bpos) % k);
}

int Dissection::period(int p) const {
  const Polygon& P = polys.at(p);
  return P.flavor == Flavor::Puncture ? P.size() : 0;
}

std::vector<int> Dissection::arc_positions(int p) const {
  const Polygon& P = polys.at(p);
  std::vector<int> out;
  int k = P.size();
  int start = P.flavor == Flavor::Boundary ? P.bpos + 1 : 0;
  for (int i = 0; i < k; ++i) {
    int pos = (start + i) % k;
    if (!P.edges[pos].boundary()) out.push_back(pos);
  }
  return out;
}

std::string Dissection::edge_token(Side s) const {
  const Edge& e = edge(s);
  if (e.boundary()) return "@";
  return std::to_string(e.arc + 1) + (e.side == 0 ? "A" : "B");
}

Dissection parse_dissection(std::string_view text) {
  Dissection d;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int stage = 0;
  std::map<std::pair<int, int>, std::pair<int, int>> where;  // (arc, side) -> (line, col)
  std::vector<std::pair<int, int>> first_seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (stage == 0) {
      if (toks[0].s != "dissection" || toks.size() != 2)
        throw ParseError("expected 'dissection <name>'", lineno, toks[0].col);
      d.name = toks[1].s;
      stage = 1;
      continue;
    }
    if (stage == 1) {
      if (toks[0].s != "arcs" || toks.size() != 2)
        throw ParseError("expected 'arcs <n>'", lineno, toks[0].col);
      try {
        size_t used = 0;
        d.n = std::stoi(toks[1].s, &used);
        if (used != toks[1].s.size() || d.n < 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("bad arc count '" + toks[1].s + "'", lineno, toks[1].col);
      }
      d.sides.assign(d.n, {Side{}, Side{}});
      stage = 2;
      continue;
    }
    if (toks[0].s != "polygon")
      throw ParseError("expected 'polygon'", lineno, toks[0].col);
    if (toks.size() < 4) throw ParseError("polygon needs an id, a flavor and edges", lineno, toks[0].col);
    Polygon P;
    P.name = toks[1].s;
    if (d.poly_index(P.name) >= 0)
      throw ParseError("duplicate polygon id '" + P.name + "'", lineno, toks[1].col);
    if (toks[2].s == "puncture") P.flavor = Flavor::Puncture;
    else if (toks[2].s == "boundary") P.flavor = Flavor::Boundary;
    else throw ParseError("unknown flavor '" + toks[2].s + "'", lineno, toks[2].col);
    int pidx = static_cast<int>(d.polys.size());
    for (size_t t = 3; t < toks.size(); ++t) {
      const auto& tk = toks[t];
      if (tk.s == "@") {
        if (P.flavor != Flavor::Boundary)
          throw ParseError("'@' in a puncture polygon", lineno, tk.col);
        if (P.bpos >= 0) throw ParseError("polygon with more than one boundary segment", lineno, tk.col);
        P.bpos = P.size();
        P.edges.push_back(Edge{});
        continue;
      }
      char sc = tk.s.empty() ? '?' : tk.s.back();
      std::string num = tk.s.substr(0, tk.s.size() - 1);
      if ((sc != 'A' && sc != 'B') || num.empty() ||
          !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad edge token '" + tk.s + "'", lineno, tk.col);
      int arc = std::stoi(num);
      if (arc < 1 || arc > d.n)
        throw ParseError("arc id " + num + " out of range 1.." + std::to_string(d.n), lineno, tk.col);
      int side = sc == 'A' ? 0 : 1;
      if (where.count({arc - 1, side}))
        throw ParseError("edge " + tk.s + " appears more than once", lineno, tk.col);
      where[{arc - 1, side}] = {lineno, tk.col};
      d.sides[arc - 1][side] = Side{pidx, P.size()};
      P.edges.push_back(Edge{arc - 1, side});
    }
    if (P.flavor == Flavor::Boundary && P.bpos < 0)
      throw ParseError("boundary polygon without '@'", lineno, toks[2].col);
    if (std::none_of(P.edges.begin(), P.edges.end(), [](const Edge& e) { return !e.boundary(); }))
      throw ParseError("polygon without arc sides", lineno, toks[1].col);
    d.polys.push_back(std::move(P));
  }
  if (stage < 2) throw ParseError("missing header", lineno, 1);
  if (d.polys.empty()) throw ParseError("no polygons", lineno, 1);
  for (int a = 0; a < d.n; ++a)
    for (int s = 0; s < 2; ++s)
      if (d.sides[a][s].poly < 0)
        throw ParseError("arc " + std::to_string(a + 1) + " must appear exactly twice (missing side " +
                             (s == 0 ? "A" : "B") + ")",
                         lineno, 1);
  return d;
}

Dissection load_dissection(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_dissection(ss.str());
}

SurfaceInvariants validate(const Dissection& d) {
  std::vector<int> base(d.polys.size() + 1, 0);
  for (size_t p = 0; p < d.polys.size(); ++p) base[p + 1] = base[p] + d.polys[p].size();
  auto corner = [&](int p, int i) { return base[p] + (i % d.polys[p].size()); };
  int total = base.back();

  // corner i of a polygon sits at the start of edge i
  UF cu(total);
  UF pu(static_cast<int>(d.polys.size()));
  for (int a = 0; a < d.n; ++a) {
    Side s = d.sides[a][0], t = d.sides[a][1];
    cu.unite(corner(s.poly, s.pos), corner(t.poly, t.pos + 1));
    cu.unite(corner(s.poly, s.pos + 1), corner(t.poly, t.pos));
    pu.unite(s.poly, t.poly);
  }
  for (size_t p = 1; p < d.polys.size(); ++p)
    if (pu.find(static_cast<int>(p)) != pu.find(0)) throw InvalidDissection("glued complex is disconnected");

  std::set<int> classes, bclasses;
  std::map<int, int> bends;  // boundary-segment ends per class
  int bsegs = 0;
  for (int i = 0; i < total; ++i) classes.insert(cu.find(i));
  for (size_t p = 0; p < d.polys.size(); ++p) {
    const Polygon& P = d.polys[p];
    if (P.bpos < 0) continue;
    ++bsegs;
    int c1 = cu.find(corner(static_cast<int>(p), P.bpos));
    int c2 = cu.find(corner(static_cast<int>(p), P.bpos + 1));
    bclasses.insert(c1);
    bclasses.insert(c2);
    bends[c1]++;
    bends[c2]++;
  }
  for (auto [c, k] : bends)
    if (k != 2) throw InvalidDissection("boundary marked point with " + std::to_string(k) + " boundary segments");

  // boundary components: classes joined by boundary segments
  std::vector<int> bl(bclasses.begin(), bclasses.end());
  UF bu(static_cast<int>(bl.size()));
  auto bidx = [&](int c) { return static_cast<int>(std::lower_bound(bl.begin(), bl.end(), c) - bl.begin()); };
  for (size_t p = 0; p < d.polys.size(); ++p) {
    const Polygon& P = d.polys[p];
    if (P.bpos < 0) continue;
    bu.unite(bidx(cu.find(corner(static_cast<int>(p), P.bpos))),
             bidx(cu.find(corner(static_cast<int>(p), P.bpos + 1))));
  }
  std::set<int> broots;
  for (int i = 0; i < static_cast<int>(bl.size()); ++i) broots.insert(bu.find(i));

  SurfaceInvariants inv;
  inv.arcs = d.n;
  inv.bullet_marked = static_cast<int>(classes.size());
  inv.bullet_punctures = static_cast<int>(classes.size() - bclasses.size());
  inv.circ_marked = static_cast<int>(d.polys.size());
  inv.circ_punctures = static_cast<int>(
      std::count_if(d.polys.begin(), d.polys.end(), [](const Polygon& P) { return P.flavor == Flavor::Puncture; }));
  inv.boundary_components = static_cast<int>(broots.size());
  inv.euler_characteristic = inv.bullet_marked - (d.n + bsegs) + static_cast<int>(d.polys.size());
  int twice_g = 2 - inv.boundary_components - inv.euler_characteristic;
  if (twice_g < 0 || twice_g % 2 != 0)
    throw InvalidDissection("Euler characteristic " + std::to_string(inv.euler_characteristic) +
                            " inconsistent with " + std::to_string(inv.boundary_components) +
                            " boundary components");
  inv.genus = twice_g / 2;
  int expect = inv.circ_marked + inv.bullet_punctures + inv.boundary_components + 2 * inv.genus - 2;
  if (expect != d.n)
    throw InvalidDissection("arc count " + std::to_string(d.n) + " but the surface needs " +
                            std::to_string(expect));
  return inv;
}

std::vector<DualArc> dual(const Dissection& d) {
  std::vector<DualArc> out(d.n);
  for (int a = 0; a < d.n; ++a) out[a] = {d.sides[a][0].poly, d.sides[a][1].poly};
  return out;
}

std::pair<Side, Side> adjacency(const Dissection& d, int arc) {
  if (arc < 0 || arc >= d.n) throw std::out_of_range("unknown arc id " + std::to_string(arc + 1));
  Side a = d.sides[arc][0], b = d.sides[arc][1];
  if (b < a) std::swap(a, b);
  return {a, b};
}

}  // namespace gf
