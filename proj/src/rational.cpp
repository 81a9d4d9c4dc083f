#include "gentlefan/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace gf {

std::string to_string(const Q& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Q& q) { return q.convert_to<double>(); }

std::optional<QVec> solve(QMat a, QVec b) {
  const size_t n = a.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Q f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  QVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

int rank(QMat a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Q f = a[i][c] / a[r][c];
      for (size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return static_cast<int>(r);
}

Q dot(const QVec& a, const QVec& b) {
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Q cone_distance2(const std::vector<QVec>& gens, const QVec& u) {
  const size_t k = gens.size();
  if (k > 20) throw std::invalid_argument("cone_distance2: too many generators");
  std::optional<Q> best;
  // Active-set enumeration. KKT holds at exactly one face when gens are independent.
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    std::vector<size_t> s;
    for (size_t i = 0; i < k; ++i)
      if (mask >> i & 1) s.push_back(i);
    QVec coef;
    if (!s.empty()) {
      QMat g(s.size(), QVec(s.size()));
      QVec rhs(s.size());
      for (size_t i = 0; i < s.size(); ++i) {
        for (size_t j = 0; j < s.size(); ++j) g[i][j] = dot(gens[s[i]], gens[s[j]]);
        rhs[i] = dot(gens[s[i]], u);
      }
      auto sol = solve(g, rhs);
      if (!sol) continue;
      coef = *sol;
      if (std::any_of(coef.begin(), coef.end(), [](const Q& c) { return c <= 0; })) continue;
    }
    QVec r = u;
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t t = 0; t < r.size(); ++t) r[t] -= coef[i] * gens[s[i]][t];
    bool ok = true;
    for (size_t j = 0; j < k && ok; ++j)
      if (!(mask >> j & 1) && dot(r, gens[j]) > 0) ok = false;
    if (!ok) continue;
    Q d2 = dot(r, r);
    if (!best || d2 < *best) best = d2;
  }
  if (!best) throw std::logic_error("cone_distance2: no KKT point");
  return *best;
}

namespace {

struct Ineq {
  QVec a;       // a.x (>|>=) 0
  bool strict;
};

}  // namespace

bool strictly_separable(const std::vector<QVec>& zero, const std::vector<QVec>& pos,
                        const std::vector<QVec>& neg, int dim) {
  // Parametrize the null space of the equality rows, then eliminate variables.
  QMat eq(zero.begin(), zero.end());
  std::vector<int> pivcol;
  {
    size_t r = 0;
    for (int c = 0; c < dim && r < eq.size(); ++c) {
      size_t p = r;
      while (p < eq.size() && eq[p][c] == 0) ++p;
      if (p == eq.size()) continue;
      std::swap(eq[p], eq[r]);
      Q inv = 1 / eq[r][c];
      for (auto& x : eq[r]) x *= inv;
      for (size_t i = 0; i < eq.size(); ++i) {
        if (i == r || eq[i][c] == 0) continue;
        Q f = eq[i][c];
        for (int k = 0; k < dim; ++k) eq[i][k] -= f * eq[r][k];
      }
      pivcol.push_back(c);
      ++r;
    }
    eq.resize(r);
  }
  std::vector<int> freecol;
  for (int c = 0; c < dim; ++c)
    if (std::find(pivcol.begin(), pivcol.end(), c) == pivcol.end()) freecol.push_back(c);
  // x = B y with y over free columns.
  auto reduce = [&](const QVec& v) {
    QVec out(freecol.size());
    for (size_t j = 0; j < freecol.size(); ++j) {
      Q s = v[freecol[j]];
      for (size_t i = 0; i < pivcol.size(); ++i) s -= v[pivcol[i]] * eq[i][freecol[j]];
      out[j] = s;
    }
    return out;
  };
  std::vector<Ineq> sys;
  for (const auto& p : pos) sys.push_back({reduce(p), true});
  for (const auto& m : neg) {
    auto v = reduce(m);
    for (auto& x : v) x = -x;
    sys.push_back({v, true});
  }
  int vars = static_cast<int>(freecol.size());
  for (int v = vars - 1; v >= 0; --v) {
    std::vector<Ineq> up, lo, keep;
    for (auto& q : sys) {
      if (q.a[v] > 0) up.push_back(q);
      else if (q.a[v] < 0) lo.push_back(q);
      else keep.push_back(q);
    }
    for (auto& a : up)
      for (auto& b : lo) {
        Ineq c{QVec(v), a.strict || b.strict};
        Q fa = -b.a[v], fb = a.a[v];
        for (int k = 0; k < v; ++k) c.a[k] = fa * a.a[k] + fb * b.a[k];
        keep.push_back(c);
      }
    for (auto& q : keep) q.a.resize(v);
    sys = std::move(keep);
  }
  // Homogeneous system: the remaining constraints are 0 > 0 or 0 >= 0.
  for (auto& q : sys)
    if (q.strict) return false;
  return true;
}

}  // namespace gf
