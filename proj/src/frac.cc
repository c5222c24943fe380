#include "tflab/frac.hh"

#include <stdexcept>
#include <vector>

namespace tflab {

namespace {

// Dense exact simplex for  max c.x  s.t.  A x <= b, x >= 0  with b >= 0
// (slack basis is feasible).  Bland's rule on both the entering and the
// leaving choice guarantees termination.
struct LpResult {
  Rational value;
  std::vector<Rational> x;
};

LpResult simplex_max(const std::vector<std::vector<Rational>>& A,
                     const std::vector<Rational>& b,
                     const std::vector<Rational>& c) {
  int m = (int)A.size(), n = (int)c.size();
  int last = n + m;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(n + m + 1, 0));
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0) throw std::logic_error("simplex_max: negative rhs");
    for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][last] = b[i];
  }
  std::vector<Rational> z(n + m, 0);
  for (int j = 0; j < n; ++j) z[j] = c[j];
  Rational obj = 0;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    int e = -1;
    for (int j = 0; j < n + m; ++j)
      if (z[j] > 0) {
        e = j;
        break;
      }
    if (e == -1) break;
    int l = -1;
    Rational best = 0;
    for (int i = 0; i < m; ++i) {
      if (!(T[i][e] > 0)) continue;
      Rational r = T[i][last] / T[i][e];
      if (l == -1 || r < best || (r == best && basis[i] < basis[l])) {
        l = i;
        best = r;
      }
    }
    if (l == -1) throw std::runtime_error("simplex_max: unbounded LP");
    Rational piv = T[l][e];
    for (auto& t : T[l]) t /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == l || T[i][e] == 0) continue;
      Rational f = T[i][e];
      for (int j = 0; j <= last; ++j) T[i][j] -= f * T[l][j];
    }
    Rational f = z[e];
    obj += f * T[l][last];
    for (int j = 0; j < n + m; ++j) z[j] -= f * T[l][j];
    basis[l] = e;
  }

  LpResult r{obj, std::vector<Rational>((size_t)n, 0)};
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) r.x[basis[i]] = T[i][last];
  return r;
}

Rational solve_packing(const SimpleGraph& g,
                       const std::vector<std::vector<int>>& sets,
                       std::vector<Rational>* y_out) {
  int m = (int)sets.size(), n = g.n;
  std::vector<std::vector<Rational>> A(m, std::vector<Rational>((size_t)n, 0));
  for (int i = 0; i < m; ++i)
    for (int v : sets[i]) A[i][v] = 1;
  std::vector<Rational> b((size_t)m, 1), c((size_t)n, 1);
  LpResult lp = simplex_max(A, b, c);
  if (y_out) *y_out = lp.x;
  return lp.value;
}

}  // namespace

Rational fractional_chromatic(const SimpleGraph& g, int cap) {
  if (g.n > cap)
    throw std::runtime_error("fractional_chromatic: vertex cap exceeded");
  if (g.n == 0) return 0;
  std::vector<std::vector<int>> sets;
  for (int v = 0; v < g.n; ++v) sets.push_back({v});
  for (;;) {
    std::vector<Rational> y;
    Rational value = solve_packing(g, sets, &y);
    WeightedMisResult price = alpha_weighted(g, y);
    if (price.weight <= 1) return value;  // y feasible for the full LP
    sets.push_back(price.witness);        // most violated constraint
  }
}

Rational fractional_chromatic_bruteforce(const SimpleGraph& g) {
  if (g.n > 10)
    throw std::runtime_error(
        "fractional_chromatic_bruteforce: only supported for n <= 10");
  if (g.n == 0) return 0;
  std::vector<uint64_t> nbr((size_t)g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v]) nbr[v] |= 1ull << u;
  std::vector<std::vector<int>> sets;
  for (uint64_t mask = 1; mask < (1ull << g.n); ++mask) {
    bool indep = true;
    for (int v = 0; v < g.n && indep; ++v)
      if ((mask >> v) & 1)
        if (mask & nbr[v]) indep = false;
    if (!indep) continue;
    bool maximal = true;
    for (int v = 0; v < g.n && maximal; ++v)
      if (!((mask >> v) & 1) && !(mask & nbr[v])) maximal = false;
    if (!maximal) continue;
    std::vector<int> s;
    for (int v = 0; v < g.n; ++v)
      if ((mask >> v) & 1) s.push_back(v);
    sets.push_back(std::move(s));
  }
  return solve_packing(g, sets, nullptr);
}

}  // namespace tflab
