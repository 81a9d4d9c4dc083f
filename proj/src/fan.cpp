#include "gentlefan/fan.hpp"

#include "gentlefan/arrangement.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace gf {

bool Lamination::reduced() const {
  for (size_t i = 0; i < members.size(); ++i) {
    if (members[i].closed) return false;
    if (i && members[i] == members[i - 1]) return false;
  }
  return true;
}

std::vector<Laminate> Lamination::nonclosed() const {
  std::vector<Laminate> out;
  for (const auto& g : members)
    if (!g.closed) out.push_back(g);
  return out;
}

std::vector<Laminate> Lamination::closed() const {
  std::vector<Laminate> out;
  for (const auto& g : members)
    if (g.closed) out.push_back(g);
  return out;
}

bool Lamination::has_closed() const {
  return std::any_of(members.begin(), members.end(), [](const Laminate& g) { return g.closed; });
}

std::vector<std::pair<Laminate, int>> Lamination::grouped() const {
  std::vector<std::pair<Laminate, int>> out;
  for (const auto& g : members) {
    if (!out.empty() && out.back().first == g) out.back().second++;
    else out.push_back({g, 1});
  }
  return out;
}

GVector lamination_g(const Dissection& d, const Lamination& X) {
  GVector v(d.n, 0);
  for (const auto& g : X.members) {
    auto h = g_vector(d, g);
    for (int i = 0; i < d.n; ++i) v[i] += h[i];
  }
  return v;
}

Dissection model_dissection(ModelSignature sig) {
  if (sig.m < 1) throw std::invalid_argument("model needs m >= 1");
  Dissection d;
  d.name = "model";
  d.n = sig.m;
  d.sides.assign(sig.m, {Side{}, Side{}});
  Polygon c;
  c.name = "C";
  c.flavor = sig.flavor;
  for (int i = 0; i < sig.m; ++i) {
    d.sides[i][0] = {0, i};
    c.edges.push_back({i, 0});
  }
  if (sig.flavor == Flavor::Boundary) {
    c.bpos = sig.m;
    c.edges.push_back({});
  }
  d.polys.push_back(c);
  for (int i = 0; i < sig.m; ++i) {
    Polygon g;
    g.name = "D" + std::to_string(i + 1);
    g.flavor = Flavor::Boundary;
    g.edges = {{i, 1}, {}};
    g.bpos = 1;
    d.sides[i][1] = {i + 1, 0};
    d.polys.push_back(g);
  }
  return d;
}

namespace {

std::vector<ModelLaminate> enumerate_model(ModelSignature sig) {
  Dissection md = model_dissection(sig);
  const int m = sig.m;
  std::vector<Segment> centrals;
  auto arcend = [](int i) { return End{EndKind::Arc, i}; };
  std::vector<End> frees;
  if (sig.flavor == Flavor::Boundary) frees = {{EndKind::BdPlus, -1}, {EndKind::BdMinus, -1}};
  else frees = {{EndKind::SpPlus, -1}, {EndKind::SpMinus, -1}};
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Segment s{0, arcend(i), arcend(j), Hand::L};
      if (side_is_free(md, s)) {
        centrals.push_back(s);
        s.side = Hand::R;
        centrals.push_back(s);
      } else {
        s.side = forced_side(md, s);
        centrals.push_back(s);
      }
    }
  for (int i = 0; i < m; ++i)
    for (const End& f : frees) {
      Segment s{0, f, arcend(i), Hand::L};
      s.side = forced_side(md, s);
      centrals.push_back(s);
    }
  std::vector<ModelLaminate> out;
  for (const Segment& c : centrals) {
    std::vector<Segment> segs;
    if (c.from.arc()) {
      int i = c.from.pos;
      Hand h = flip(c.side);
      segs.push_back({i + 1, End{h == Hand::R ? EndKind::BdPlus : EndKind::BdMinus, -1}, arcend(0), h});
    }
    segs.push_back(c);
    if (c.to.arc()) {
      int j = c.to.pos;
      Hand h = flip(c.side);
      segs.push_back({j + 1, arcend(0), End{h == Hand::L ? EndKind::BdPlus : EndKind::BdMinus, -1}, h});
    }
    ModelLaminate ml;
    ml.lam = build_laminate(md, segs, false);
    ml.g = g_vector(md, ml.lam);
    ml.central = c;
    out.push_back(std::move(ml));
  }
  return out;
}

struct ModelData {
  std::vector<ModelLaminate> lams;
  std::vector<std::vector<int>> cliques;
  std::map<std::vector<long long>, std::vector<std::pair<int, int>>> memo;
};

std::mutex model_mutex;
std::map<ModelSignature, ModelData>& model_cache() {
  static std::map<ModelSignature, ModelData> cache;
  return cache;
}

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  while (!p.empty()) {
    int v = p.back();
    std::vector<int> np, nx;
    for (int u : p)
      if (adj[v][u]) np.push_back(u);
    for (int u : x)
      if (adj[v][u]) nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(adj, r, np, nx, out);
    r.pop_back();
    p.pop_back();
    x.push_back(v);
  }
}

ModelData& model_data(ModelSignature sig) {
  auto& cache = model_cache();
  auto it = cache.find(sig);
  if (it != cache.end()) return it->second;
  ModelData md;
  md.lams = enumerate_model(sig);
  Dissection dd = model_dissection(sig);
  const int k = static_cast<int>(md.lams.size());
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) adj[i][j] = adj[j][i] = compatible(dd, md.lams[i].lam, md.lams[j].lam);
  std::vector<int> r, p(k), x;
  for (int i = 0; i < k; ++i) p[i] = k - 1 - i;
  bron_kerbosch(adj, r, p, x, md.cliques);
  for (auto& c : md.cliques) std::sort(c.begin(), c.end());
  std::sort(md.cliques.begin(), md.cliques.end());
  return cache.emplace(sig, std::move(md)).first->second;
}

}  // namespace

const std::vector<ModelLaminate>& model_laminates(ModelSignature sig) {
  std::lock_guard lock(model_mutex);
  return model_data(sig).lams;
}

std::vector<std::pair<int, int>> local_solve(ModelSignature sig, const std::vector<long long>& local_g) {
  std::lock_guard lock(model_mutex);
  ModelData& md = model_data(sig);
  if (static_cast<int>(local_g.size()) != sig.m) throw std::invalid_argument("local_solve: wrong length");
  auto hit = md.memo.find(local_g);
  if (hit != md.memo.end()) return hit->second;
  std::vector<std::pair<int, int>> result;
  bool zero = std::all_of(local_g.begin(), local_g.end(), [](long long x) { return x == 0; });
  bool found = zero;
  for (const auto& cl : md.cliques) {
    if (found) break;
    if (static_cast<int>(cl.size()) != sig.m) continue;
    const int m = sig.m;
    QMat a(m, QVec(m));
    QVec b(m);
    for (int r = 0; r < m; ++r) {
      b[r] = local_g[r];
      for (int c = 0; c < m; ++c) a[r][c] = md.lams[cl[c]].g[r];
    }
    auto x = solve(a, b);
    if (!x) continue;
    bool ok = true;
    for (const Q& v : *x)
      if (v < 0 || boost::multiprecision::denominator(v) != 1) ok = false;
    if (!ok) continue;
    for (int c = 0; c < m; ++c)
      if ((*x)[c] > 0) result.push_back({cl[c], static_cast<int>(boost::multiprecision::numerator((*x)[c]))});
    found = true;
  }
  if (!found) throw std::logic_error("local_solve: no cone contains the local vector");
  md.memo[local_g] = result;
  return result;
}

namespace {

struct Instance {
  Segment seg;  // in the real polygon
  int model = -1, copy = 0;
  std::array<std::pair<int, int>, 2> link{{{-1, -1}, {-1, -1}}};  // per end: (instance, end)
};

}  // namespace

Lamination invert_g(const Dissection& d, const GVector& g) {
  if (static_cast<int>(g.size()) != d.n) throw std::invalid_argument("g-vector length differs from arc count");
  std::vector<Instance> inst;
  for (int p = 0; p < static_cast<int>(d.polys.size()); ++p) {
    auto sidepos = d.arc_positions(p);
    ModelSignature sig{static_cast<int>(sidepos.size()), d.poly(p).flavor};
    std::vector<long long> lg;
    for (int pos : sidepos) lg.push_back(g[d.poly(p).edges[pos].arc]);
    auto sol = local_solve(sig, lg);
    const auto& lams = model_laminates(sig);
    for (auto [idx, mult] : sol) {
      Segment s = lams[idx].central;
      s.poly = p;
      if (s.from.arc()) s.from.pos = sidepos[s.from.pos];
      if (s.to.arc()) s.to.pos = sidepos[s.to.pos];
      for (int c = 0; c < mult; ++c) inst.push_back({s, idx, c, {}});
    }
  }
  // order ends along each side, then glue in reversed order
  std::map<Side, std::vector<std::pair<int, int>>> at;
  for (int i = 0; i < static_cast<int>(inst.size()); ++i) {
    const Segment& s = inst[i].seg;
    if (s.from.arc()) at[{s.poly, s.from.pos}].push_back({i, 0});
    if (s.to.arc()) at[{s.poly, s.to.pos}].push_back({i, 1});
  }
  struct SortKey {
    int group;
    long long val;
    int tie;
    auto operator<=>(const SortKey&) const = default;
  };
  auto sort_key = [&](std::pair<int, int> e) {
    const Instance& I = inst[e.first];
    Segment s = e.second == 0 ? I.seg : I.seg.reversed();
    if (s.to.free()) return SortKey{s.to.inf() < 0 ? 1 : 2, 0, I.copy};
    long long sg = segment_span(d, s);
    return SortKey{sg < 0 ? 0 : 3, -sg, sg > 0 ? I.copy : -I.copy};
  };
  for (auto& [side, v] : at)
    std::sort(v.begin(), v.end(), [&](auto x, auto y) { return sort_key(x) < sort_key(y); });
  for (int a = 0; a < d.n; ++a) {
    auto& va = at[d.sides[a][0]];
    auto& vb = at[d.sides[a][1]];
    if (va.size() != vb.size()) throw std::logic_error("invert_g: unequal end counts on arc " + std::to_string(a + 1));
    const size_t k = va.size();
    for (size_t t = 0; t < k; ++t) {
      auto x = va[t], y = vb[k - 1 - t];
      inst[x.first].link[x.second] = y;
      inst[y.first].link[y.second] = x;
    }
  }
  Lamination X;
  std::vector<bool> used(inst.size(), false);
  auto trace = [&](int i, int entry, bool closed) {
    std::vector<Segment> segs;
    int start = i, start_entry = entry;
    while (true) {
      used[i] = true;
      Segment s = entry == 0 ? inst[i].seg : inst[i].seg.reversed();
      segs.push_back(s);
      int exit = 1 - entry;
      const End& e = exit == 1 ? inst[i].seg.to : inst[i].seg.from;
      if (e.free()) break;
      auto [j, je] = inst[i].link[exit];
      i = j;
      entry = je;
      if (closed && i == start && entry == start_entry) break;
      if (segs.size() > inst.size() + 1) throw std::logic_error("invert_g: runaway trace");
    }
    X.members.push_back(build_laminate(d, segs, closed));
  };
  for (int i = 0; i < static_cast<int>(inst.size()); ++i) {
    if (used[i]) continue;
    if (inst[i].seg.from.free()) trace(i, 0, false);
    else if (inst[i].seg.to.free()) trace(i, 1, false);
  }
  for (int i = 0; i < static_cast<int>(inst.size()); ++i)
    if (!used[i]) trace(i, 0, true);
  std::sort(X.members.begin(), X.members.end());
  return X;
}

Cone cone_of(const Dissection& d, const Lamination& X) {
  if (!X.reduced()) throw std::invalid_argument("cone_of needs a reduced lamination");
  Cone c;
  for (const auto& g : X.members) c.generators.push_back(g_vector(d, g));
  return c;
}

namespace {

QVec toq(const GVector& g) { return QVec(g.begin(), g.end()); }

}  // namespace

bool simplicial(const Cone& c) {
  QMat m;
  for (const auto& g : c.generators) m.push_back(toq(g));
  return rank(m) == static_cast<int>(c.generators.size());
}

bool contains(const Cone& c, const QVec& v) {
  const size_t k = c.generators.size();
  if (k == 0) return std::all_of(v.begin(), v.end(), [](const Q& x) { return x == 0; });
  QMat gram(k, QVec(k));
  QVec rhs(k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) gram[i][j] = dot(toq(c.generators[i]), toq(c.generators[j]));
    rhs[i] = dot(toq(c.generators[i]), v);
  }
  auto x = solve(gram, rhs);
  if (!x) throw std::invalid_argument("contains: generators are dependent");
  QVec back(v.size());
  for (size_t i = 0; i < k; ++i) {
    if ((*x)[i] < 0) return false;
    for (size_t t = 0; t < v.size(); ++t) back[t] += (*x)[i] * c.generators[i][t];
  }
  return back == v;
}

std::string to_string(Finiteness f) {
  switch (f) {
    case Finiteness::Finite: return "finite";
    case Finiteness::Infinite: return "infinite";
    default: return "unknown";
  }
}

void for_each_point(int n, int R, const std::function<void(const GVector&)>& fn) {
  GVector g(n, -R);
  while (true) {
    fn(g);
    int i = n - 1;
    while (i >= 0 && g[i] == R) g[i--] = -R;
    if (i < 0) break;
    g[i]++;
  }
}

Fan enumerate_fan(const Dissection& d, int R) {
  if (R < 0) throw std::invalid_argument("bound must be nonnegative");
  Fan f;
  f.n = d.n;
  f.bound = R;
  std::map<Laminate, int> ray_of;
  std::set<std::vector<int>> cones;
  std::vector<std::vector<Laminate>> supports;
  for_each_point(d.n, R, [&](const GVector& g) {
    f.points++;
    Lamination X = invert_g(d, g);
    if (X.has_closed()) {
      f.closed_points++;
      return;
    }
    auto grp = X.grouped();
    std::vector<Laminate> sup;
    for (auto& [lam, k] : grp) sup.push_back(lam);
    supports.push_back(sup);
    for (auto& lam : sup) ray_of.emplace(lam, 0);
  });
  std::vector<std::pair<GVector, Laminate>> rs;
  for (auto& [lam, _] : ray_of) rs.push_back({g_vector(d, lam), lam});
  std::sort(rs.begin(), rs.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (size_t i = 0; i < rs.size(); ++i) {
    ray_of[rs[i].second] = static_cast<int>(i);
    f.rays.push_back(rs[i].second);
    f.ray_g.push_back(rs[i].first);
  }
  for (size_t s = 0; s < supports.size(); ++s) {
    std::vector<int> idx;
    for (auto& lam : supports[s]) idx.push_back(ray_of[lam]);
    std::sort(idx.begin(), idx.end());
    cones.insert(idx);
  }
  f.cones.assign(cones.begin(), cones.end());
  for (auto& c : f.cones)
    if (static_cast<int>(c.size()) == d.n) f.maximal.push_back(c);
  // complete iff every wall of a maximal cone borders exactly two maximal cones
  std::map<std::vector<int>, int> walls;
  for (const auto& c : f.maximal)
    for (size_t i = 0; i < c.size(); ++i) {
      auto w = c;
      w.erase(w.begin() + i);
      walls[w]++;
    }
  bool closed_up = !f.maximal.empty();
  for (auto& [w, k] : walls)
    if (k != 2) closed_up = false;
  if (f.closed_points > 0) f.finite = Finiteness::Infinite;
  else if (closed_up) f.finite = Finiteness::Finite;
  else f.finite = Finiteness::Unknown;
  return f;
}

Q coverage(const Dissection& d, int R) {
  if (R < 0) throw std::invalid_argument("bound must be nonnegative");
  long long good = 0, total = 0;
  for_each_point(d.n, R, [&](const GVector& g) {
    ++total;
    if (!invert_g(d, g).has_closed()) ++good;
  });
  return Q(good) / Q(total);
}

std::pair<int, int> fan_defect(const Fan& f) {
  const int n = f.n;
  auto vecs = [&](const std::vector<int>& idx) {
    std::vector<QVec> out;
    for (int i : idx) out.push_back(toq(f.ray_g[i]));
    return out;
  };
  for (size_t a = 0; a < f.cones.size(); ++a) {
    Cone c;
    for (int i : f.cones[a]) c.generators.push_back(f.ray_g[i]);
    if (!simplicial(c)) return {static_cast<int>(a), static_cast<int>(a)};
  }
  for (size_t a = 0; a < f.cones.size(); ++a)
    for (size_t b = a + 1; b < f.cones.size(); ++b) {
      std::vector<int> common, onlya, onlyb;
      const auto &ca = f.cones[a], &cb = f.cones[b];
      std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(common));
      std::set_difference(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(onlya));
      std::set_difference(cb.begin(), cb.end(), ca.begin(), ca.end(), std::back_inserter(onlyb));
      if (onlya.empty() || onlyb.empty()) continue;  // one is a face of the other
      if (!strictly_separable(vecs(common), vecs(onlya), vecs(onlyb), n))
        return {static_cast<int>(a), static_cast<int>(b)};
    }
  return {-1, -1};
}

namespace {

std::vector<double> l1_normal(const QVec& v) {
  Q s = 0;
  for (const Q& x : v) s += x < 0 ? Q(-x) : x;
  std::vector<double> out;
  for (const Q& x : v) out.push_back(to_double(x / s));
  return out;
}

Polyline edge_path(const GVector& g1, const GVector& g2) {
  std::vector<Q> ts{0, 1};
  for (size_t i = 0; i < g1.size(); ++i) {
    if ((g1[i] < 0 && g2[i] > 0) || (g1[i] > 0 && g2[i] < 0)) ts.push_back(Q(g1[i]) / Q(g1[i] - g2[i]));
  }
  std::sort(ts.begin(), ts.end());
  Polyline pl;
  for (const Q& t : ts) {
    QVec p(g1.size());
    for (size_t i = 0; i < g1.size(); ++i) p[i] = (1 - t) * g1[i] + t * g2[i];
    pl.points.push_back(l1_normal(p));
  }
  return pl;
}

}  // namespace

std::vector<std::pair<std::vector<int>, std::vector<Polyline>>> fan_slice(const Fan& f) {
  if (f.n != 2 && f.n != 3) throw std::invalid_argument("slice needs n in {2,3}");
  std::vector<std::pair<std::vector<int>, std::vector<Polyline>>> out;
  for (const auto& c : f.maximal) {
    std::vector<Polyline> lines;
    for (size_t i = 0; i < c.size(); ++i) {
      size_t j = (i + 1) % c.size();
      if (c.size() == 2 && i == 1) break;
      lines.push_back(edge_path(f.ray_g[c[i]], f.ray_g[c[j]]));
    }
    out.push_back({c, lines});
  }
  return out;
}

}  // namespace gf
