#include "gentlefan/silting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gf {

bool StringComplex::short_complex() const {
  return std::all_of(t_exp.begin(), t_exp.end(), [](int h) { return h == 0; });
}

StringComplex StringComplex::reversed() const {
  StringComplex r = *this;
  std::reverse(r.vertices.begin(), r.vertices.end());
  std::reverse(r.degrees.begin(), r.degrees.end());
  std::reverse(r.maps.begin(), r.maps.end());
  std::reverse(r.t_exp.begin(), r.t_exp.end());
  return r;
}

bool StringComplex::isomorphic(const StringComplex& o) const { return *this == o || *this == o.reversed(); }

namespace {

int index_in(const std::vector<int>& ap, int pos) {
  for (int i = 0; i < static_cast<int>(ap.size()); ++i)
    if (ap[i] == pos) return i;
  throw std::logic_error("position is not an arc side");
}

void check_zigzag(const StringComplex& T) {
  if (T.vertices.empty()) throw std::invalid_argument("empty complex");
  if (T.degrees.size() != T.vertices.size() || T.maps.size() + 1 != T.vertices.size())
    throw std::invalid_argument("malformed complex");
  for (size_t i = 0; i + 1 < T.vertices.size(); ++i)
    if (T.degrees[i] == T.degrees[i + 1]) throw std::invalid_argument("complex is not a zigzag");
}

void require_short(const StringComplex& T) {
  check_zigzag(T);
  if (!T.short_complex()) throw std::invalid_argument("complex is not short");
}

}  // namespace

StringComplex string_complex(const Dissection& d, const Laminate& g) {
  if (g.closed) throw std::invalid_argument("closed laminate has no string complex");
  StringComplex T;
  T.n = d.n;
  int m = g.crossings();
  for (int i = 0; i < m; ++i) {
    T.vertices.push_back(crossing_arc(d, g, i));
    T.degrees.push_back(crossing_sign(g, i) > 0 ? 0 : -1);
  }
  for (int i = 1; i < m; ++i) {
    const Segment& s = g.segs[i];
    // white point on the right from start to end; the path runs from end to start
    int start = s.side == Hand::R ? s.from.pos : s.to.pos;
    int end = s.side == Hand::R ? s.to.pos : s.from.pos;
    auto ap = d.arc_positions(s.poly);
    ShortPath p{s.poly, index_in(ap, end), 0};
    if (d.poly(s.poly).flavor == Flavor::Puncture)
      p.len = static_cast<int>(std::llabs(segment_span(d, s)));
    else
      p.len = index_in(ap, start) - p.start;
    if (p.len <= 0) throw std::logic_error("degenerate segment");
    T.maps.push_back(p);
    T.t_exp.push_back(0);
  }
  check_zigzag(T);
  return T;
}

Laminate complex_laminate(const Dissection& d, const StringComplex& T) {
  require_short(T);
  int m = static_cast<int>(T.vertices.size());
  if (m == 1) return elementary(d, T.vertices[0], T.degrees[0] == 0 ? 1 : -1);
  std::vector<Segment> segs;
  for (int i = 1; i < m; ++i) {
    const ShortPath& p = T.maps[i - 1];
    auto ap = d.arc_positions(p.poly);
    int M = static_cast<int>(ap.size());
    End e{EndKind::Arc, ap[p.start % M]}, s{EndKind::Arc, ap[(p.start + p.len) % M]};
    if (T.degrees[i - 1] == -1)
      segs.push_back({p.poly, s, e, Hand::R});
    else
      segs.push_back({p.poly, e, s, Hand::L});
  }
  auto free_end = [&](int poly, bool plus) {
    bool punct = d.poly(poly).flavor == Flavor::Puncture;
    if (plus) return End{punct ? EndKind::SpPlus : EndKind::BdPlus, -1};
    return End{punct ? EndKind::SpMinus : EndKind::BdMinus, -1};
  };
  Side a = d.glued({segs.front().poly, segs.front().from.pos});
  bool plus0 = T.degrees[0] == 0;
  Segment first{a.poly, free_end(a.poly, plus0), End{EndKind::Arc, a.pos}, plus0 ? Hand::R : Hand::L};
  Side b = d.glued({segs.back().poly, segs.back().to.pos});
  bool plus1 = T.degrees[m - 1] == 0;
  Segment last{b.poly, End{EndKind::Arc, b.pos}, free_end(b.poly, plus1), plus1 ? Hand::L : Hand::R};
  segs.insert(segs.begin(), first);
  segs.push_back(last);
  return build_laminate(d, std::move(segs), false, true);
}

GVector complex_g(const StringComplex& T) {
  GVector g(T.n, 0);
  for (size_t i = 0; i < T.vertices.size(); ++i) g.at(T.vertices[i]) += T.degrees[i] == 0 ? 1 : -1;
  return g;
}

std::vector<int> shared_projectives(const StringComplex& T) {
  std::set<int> zero, minus;
  for (size_t i = 0; i < T.vertices.size(); ++i) (T.degrees[i] == 0 ? zero : minus).insert(T.vertices[i]);
  std::vector<int> out;
  std::set_intersection(zero.begin(), zero.end(), minus.begin(), minus.end(), std::back_inserter(out));
  return out;
}

std::string to_string(const Quiver& q, const StringComplex& T) {
  std::string s = "P" + std::to_string(T.vertices[0] + 1);
  if (T.vertices.size() == 1) return s + (T.degrees[0] == 0 ? "[0]" : "[-1]");
  for (size_t i = 0; i + 1 < T.vertices.size(); ++i) {
    std::vector<int> ws;
    const auto& c = q.cycles.at(T.maps[i].poly);
    for (int t = 0; t < T.maps[i].len; ++t) ws.push_back(c[(T.maps[i].start + t) % c.size()]);
    std::string w = q.word(ws);
    if (T.t_exp.size() > i && T.t_exp[i]) w = "t^" + std::to_string(T.t_exp[i]) + w;
    s += T.degrees[i] == -1 ? " -" + w + "-> " : " <-" + w + "- ";
    s += "P" + std::to_string(T.vertices[i + 1] + 1);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Hom(T, T'[1]).  Elements are (i, j, p): P_{x_i} in degree -1 of T, P_{y_j} in
// degree 0 of T', p a nonzero path y_j ~> x_i.  Homotopies give relations among
// them: a nonconstant factor kills an element, an identity at an aligned pair of
// projectives ties the elements through the adjacent differentials.

namespace {

struct Nbr {
  int pos;
  ShortPath path;
};

std::vector<Nbr> neighbours(const StringComplex& T, int i) {
  std::vector<Nbr> out;
  if (i > 0) out.push_back({i - 1, T.maps[i - 1]});
  if (i + 1 < static_cast<int>(T.vertices.size())) out.push_back({i + 1, T.maps[i]});
  return out;
}

struct PathOps {
  const Dissection& d;
  std::vector<int> size;  // arc sides per polygon
  std::vector<bool> cyc;

  explicit PathOps(const Dissection& d_) : d(d_) {
    for (int p = 0; p < static_cast<int>(d.polys.size()); ++p) {
      size.push_back(static_cast<int>(d.arc_positions(p).size()));
      cyc.push_back(d.poly(p).flavor == Flavor::Puncture);
    }
  }
  int end(const ShortPath& p) const { return cyc[p.poly] ? (p.start + p.len) % size[p.poly] : p.start + p.len; }
  int start(const ShortPath& p) const { return cyc[p.poly] ? p.start % size[p.poly] : p.start; }
  bool proper_suffix(const ShortPath& c, const ShortPath& p) const {
    return p.len > 0 && c.poly == p.poly && c.len < p.len && end(c) == end(p);
  }
  bool proper_prefix(const ShortPath& c, const ShortPath& p) const {
    return p.len > 0 && c.poly == p.poly && c.len < p.len && start(c) == start(p);
  }
  bool same(const ShortPath& a, const ShortPath& b) const {
    if (a.len == 0 || b.len == 0) return a.len == b.len && a.start == b.start && a.poly == b.poly;
    return a.poly == b.poly && a.len == b.len && start(a) == start(b);
  }
  // nonzero paths y ~> x at t-degree 0, full cycles excluded
  std::vector<ShortPath> paths(int y, int x) const {
    std::vector<ShortPath> out;
    if (x == y) out.push_back({-1, x, 0});
    for (int p = 0; p < static_cast<int>(size.size()); ++p) {
      auto ap = d.arc_positions(p);
      int m = size[p];
      for (int st = 0; st < m; ++st) {
        if (d.poly(p).edges[ap[st]].arc != y) continue;
        int maxlen = cyc[p] ? m - 1 : m - 1 - st;
        for (int len = 1; len <= maxlen; ++len)
          if (d.poly(p).edges[ap[(st + len) % m]].arc == x) out.push_back({p, st, len});
      }
    }
    return out;
  }
};

struct Element {
  int i, j;
  ShortPath p;
  auto operator<=>(const Element&) const = default;
};

struct HomData {
  std::vector<HomObstruction> singletons, quasi;
};

struct UnionFind {
  std::vector<int> parent;
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

HomData analyse(const Dissection& d, const StringComplex& T, const StringComplex& U) {
  require_short(T);
  require_short(U);
  PathOps ops(d);
  std::map<Element, int> index;
  std::vector<Element> elems;
  auto add = [&](const Element& e) {
    auto [it, fresh] = index.emplace(e, static_cast<int>(elems.size()));
    if (fresh) elems.push_back(e);
    return it->second;
  };
  int nt = static_cast<int>(T.vertices.size()), nu = static_cast<int>(U.vertices.size());
  for (int i = 0; i < nt; ++i) {
    if (T.degrees[i] != -1) continue;
    for (int j = 0; j < nu; ++j) {
      if (U.degrees[j] != 0) continue;
      for (const ShortPath& p : ops.paths(U.vertices[j], T.vertices[i])) add({i, j, p});
    }
  }

  // relations: (members, aligned pair)
  struct Rel {
    std::vector<int> members;
    std::pair<int, int> pair;
  };
  std::vector<Rel> rels;
  std::vector<bool> killed(elems.size(), false);
  auto find = [&](int i, int j, const ShortPath& p) {
    for (const auto& [e, k] : index)
      if (e.i == i && e.j == j && ops.same(e.p, p)) return k;
    throw std::logic_error("relation outside the element list");
  };
  for (int a = 0; a < nt; ++a)
    for (int b = 0; b < nu; ++b) {
      if (T.vertices[a] != U.vertices[b] || T.degrees[a] != U.degrees[b]) continue;
      Rel r{{}, {a, b}};
      if (T.degrees[a] == 0) {
        for (const Nbr& nb : neighbours(T, a)) r.members.push_back(find(nb.pos, b, nb.path));
      } else {
        for (const Nbr& nb : neighbours(U, b)) r.members.push_back(find(a, nb.pos, nb.path));
      }
      if (r.members.size() == 1) killed[r.members[0]] = true;
      if (!r.members.empty()) rels.push_back(std::move(r));
    }
  for (size_t k = 0; k < elems.size(); ++k) {
    const Element& e = elems[k];
    for (const Nbr& nb : neighbours(T, e.i))
      if (ops.proper_suffix(nb.path, e.p)) killed[k] = true;
    for (const Nbr& nb : neighbours(U, e.j))
      if (ops.proper_prefix(nb.path, e.p)) killed[k] = true;
  }

  UnionFind uf{std::vector<int>(elems.size())};
  std::iota(uf.parent.begin(), uf.parent.end(), 0);
  for (const Rel& r : rels)
    for (size_t t = 1; t < r.members.size(); ++t) uf.join(r.members[0], r.members[t]);
  std::map<int, std::vector<int>> comp_elems;
  std::map<int, std::vector<const Rel*>> comp_rels;
  for (size_t k = 0; k < elems.size(); ++k) comp_elems[uf.find(static_cast<int>(k))].push_back(static_cast<int>(k));
  for (const Rel& r : rels) comp_rels[uf.find(r.members[0])].push_back(&r);

  HomData out;
  for (const auto& [root, ks] : comp_elems) {
    bool dead = std::any_of(ks.begin(), ks.end(), [&](int k) { return killed[k]; });
    const auto& rs = comp_rels[root];
    if (dead || rs.size() >= ks.size()) continue;
    if (rs.empty()) {
      const Element& e = elems[ks[0]];
      HomObstruction o;
      o.kind = ObstructionKind::Singleton;
      o.path = e.p;
      o.pos = e.i;
      o.pos2 = e.j;
      bool xs = false, ys = false;
      for (const Nbr& nb : neighbours(T, e.i)) xs |= ops.proper_suffix(e.p, nb.path);
      for (const Nbr& nb : neighbours(U, e.j)) ys |= ops.proper_prefix(e.p, nb.path);
      o.form = xs ? (ys ? 'd' : 'b') : (ys ? 'c' : 'a');
      out.singletons.push_back(o);
      continue;
    }
    HomObstruction o;
    o.kind = ObstructionKind::QuasiGraph;
    for (const Rel* r : rs) o.aligned.push_back(r->pair);
    std::sort(o.aligned.begin(), o.aligned.end());
    // the free ends of the chain: elements in a single relation
    std::map<int, int> deg;
    for (const Rel* r : rs)
      for (int k : r->members) ++deg[k];
    for (int k : ks)
      if (deg[k] <= 1) {
        const Element& e = elems[k];
        // the aligned pair this end hangs off
        for (const Rel* r : rs)
          if (std::find(r->members.begin(), r->members.end(), k) != r->members.end())
            o.ends += T.degrees[r->pair.first] == -1 ? 'e' : 'f';
        if (o.pos < 0) {
          o.pos = e.i;
          o.pos2 = e.j;
          o.path = e.p;
        }
      }
    out.quasi.push_back(o);
  }
  return out;
}

}  // namespace

std::vector<HomObstruction> singleton_single_maps(const Dissection& d, const StringComplex& T, const StringComplex& T2) {
  return analyse(d, T, T2).singletons;
}

std::vector<HomObstruction> quasi_graph_reps(const Dissection& d, const StringComplex& T, const StringComplex& T2) {
  return analyse(d, T, T2).quasi;
}

std::vector<HomObstruction> hom_obstructions(const Dissection& d, const StringComplex& T, const StringComplex& T2) {
  auto h = analyse(d, T, T2);
  h.singletons.insert(h.singletons.end(), h.quasi.begin(), h.quasi.end());
  return h.singletons;
}

std::string to_string(const Dissection& d, const Quiver& q, const HomObstruction& o) {
  std::string p = o.path.len == 0 ? "e" + std::to_string(o.path.start + 1) : q.word(path_arrows(d, q, o.path));
  if (o.kind == ObstructionKind::Singleton)
    return "singleton (" + std::string(1, o.form) + ") via " + p + " at T[" + std::to_string(o.pos) + "] -> T'[" +
           std::to_string(o.pos2) + "]";
  std::string s = "quasi-graph over";
  for (auto [a, b] : o.aligned) s += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
  return s + " ends " + o.ends;
}

bool is_presilting(const Dissection& d, const std::vector<StringComplex>& Ts) {
  for (const auto& a : Ts)
    for (const auto& b : Ts)
      if (!hom_obstructions(d, a, b).empty()) return false;
  return true;
}

bool is_silting(const Dissection& d, const std::vector<StringComplex>& Ts) {
  if (!is_presilting(d, Ts)) return false;
  std::vector<const StringComplex*> distinct;
  for (const auto& t : Ts)
    if (std::none_of(distinct.begin(), distinct.end(), [&](const StringComplex* u) { return u->isomorphic(t); }))
      distinct.push_back(&t);
  return static_cast<int>(distinct.size()) == d.n;
}

std::vector<StringComplex> lamination_complex(const Dissection& d, const Lamination& X) {
  if (!X.reduced()) throw std::invalid_argument("lamination is not reduced");
  std::vector<StringComplex> out;
  for (const Laminate& g : X.members) out.push_back(string_complex(d, g));
  return out;
}

}  // namespace gf
