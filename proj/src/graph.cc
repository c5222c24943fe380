#include "tflab/graph.hh"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace tflab {

bool SimpleGraph::has_edge(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(m);
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) e.emplace_back(u, v);
  return e;
}

SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::runtime_error("from_edges: negative vertex count");
  SimpleGraph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::runtime_error("from_edges: vertex out of range");
    if (u == v) throw std::runtime_error("from_edges: self-loop");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = g.adj[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw std::runtime_error("from_edges: duplicate edge");
  }
  g.m = static_cast<int>(edges.size());
  return g;
}

SimpleGraph add_edge(const SimpleGraph& g, int u, int v) {
  if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v)
    throw std::runtime_error("add_edge: invalid endpoints");
  if (g.has_edge(u, v)) throw std::runtime_error("add_edge: edge already present");
  SimpleGraph h = g;
  h.adj[u].insert(std::lower_bound(h.adj[u].begin(), h.adj[u].end(), v), v);
  h.adj[v].insert(std::lower_bound(h.adj[v].begin(), h.adj[v].end(), u), u);
  h.m++;
  return h;
}

SimpleGraph delete_edge(const SimpleGraph& g, int u, int v) {
  if (u < 0 || u >= g.n || v < 0 || v >= g.n || !g.has_edge(u, v))
    throw std::runtime_error("delete_edge: edge not present");
  SimpleGraph h = g;
  auto& au = h.adj[u];
  au.erase(std::lower_bound(au.begin(), au.end(), v));
  auto& av = h.adj[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  h.m--;
  return h;
}

VertexDeletion delete_vertices(const SimpleGraph& g, const std::vector<int>& del) {
  std::vector<char> gone(g.n, 0);
  for (int v : del) {
    if (v < 0 || v >= g.n) throw std::runtime_error("delete_vertices: vertex out of range");
    gone[v] = 1;
  }
  VertexDeletion r;
  r.old_to_new.assign(g.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (!gone[v]) {
      r.old_to_new[v] = static_cast<int>(r.new_to_old.size());
      r.new_to_old.push_back(v);
    }
  r.g.n = static_cast<int>(r.new_to_old.size());
  r.g.adj.assign(r.g.n, {});
  int m = 0;
  for (int v = 0; v < g.n; ++v) {
    if (gone[v]) continue;
    for (int w : g.adj[v])
      if (!gone[w]) {
        r.g.adj[r.old_to_new[v]].push_back(r.old_to_new[w]);
        ++m;
      }
  }
  r.g.m = m / 2;
  return r;  // neighbor lists stay sorted: the remap is monotone
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& verts,
                             std::vector<int>* new_to_old) {
  std::vector<char> keep(g.n, 0);
  for (int v : verts) {
    if (v < 0 || v >= g.n) throw std::runtime_error("induced_subgraph: vertex out of range");
    if (keep[v]) throw std::runtime_error("induced_subgraph: repeated vertex");
    keep[v] = 1;
  }
  std::vector<int> del;
  for (int v = 0; v < g.n; ++v)
    if (!keep[v]) del.push_back(v);
  VertexDeletion r = delete_vertices(g, del);
  if (new_to_old) *new_to_old = r.new_to_old;
  return r.g;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g = a;
  g.n = a.n + b.n;
  g.m = a.m + b.m;
  g.adj.resize(g.n);
  for (int v = 0; v < b.n; ++v) {
    g.adj[a.n + v] = b.adj[v];
    for (int& w : g.adj[a.n + v]) w += a.n;
  }
  return g;
}

std::vector<std::vector<int>> components(const SimpleGraph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const SimpleGraph& g) { return components(g).size() == 1; }

std::vector<int> degree_counts(const SimpleGraph& g) {
  int maxdeg = 0;
  for (int v = 0; v < g.n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
  std::vector<int> counts(std::max(4, maxdeg + 1), 0);
  for (int v = 0; v < g.n; ++v) counts[g.degree(v)]++;
  return counts;
}

bool is_triangle_free(const SimpleGraph& g) {
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) {
      if (v <= u) continue;
      for (int w : g.adj[u]) {
        if (w <= v) continue;
        if (g.has_edge(v, w)) return false;
      }
    }
  return true;
}

bool max_degree_at_most(const SimpleGraph& g, int d) {
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) > d) return false;
  return true;
}

bool is_cubic(const SimpleGraph& g) {
  if (g.n == 0) return false;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

int girth(const SimpleGraph& g) {
  // BFS from every root; a non-tree edge (x,y) seen from root r witnesses a
  // cycle of length d(x)+d(y)+1. The minimum over all roots is exact, because
  // the bound is tight when the root lies on a shortest cycle.
  int best = kGirthInfinite;
  std::vector<int> dist(g.n), parent(g.n);
  for (int r = 0; r < g.n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    q.push(r);
    dist[r] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (best != kGirthInfinite && 2 * dist[x] >= best) break;
      for (int y : g.adj[x]) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (y != parent[x] && dist[y] >= dist[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

std::vector<std::vector<int>> cycles_of_length(const SimpleGraph& g, int k) {
  if (k < 3) throw std::runtime_error("cycles_of_length: k must be >= 3");
  // Each cycle is produced exactly once: the walk starts at the cycle's
  // smallest vertex s, uses only vertices > s, and the direction is fixed by
  // requiring the second vertex to be smaller than the last.
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> used(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    path.assign(1, s);
    auto dfs = [&](auto&& self, int v) -> void {
      if (static_cast<int>(path.size()) == k) {
        if (g.has_edge(v, s) && path[1] < path.back()) out.push_back(path);
        return;
      }
      for (int w : g.adj[v]) {
        if (w <= s || used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        used[w] = 0;
      }
    };
    dfs(dfs, s);
  }
  return out;
}

std::vector<int> cut_vertices(const SimpleGraph& g) {
  // Tarjan lowpoint articulation points (iterative via recursion on small n).
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<char> is_cut(g.n, 0);
  int timer = 0;
  auto dfs = [&](auto&& self, int v, int parent) -> void {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.adj[v]) {
      if (w == parent) {
        parent = -2;  // skip the tree edge once; parallel edges cannot occur
        continue;
      }
      if (disc[w] == -1) {
        ++children;
        self(self, w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent != -1 && low[w] >= disc[v]) is_cut[v] = 1;
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent == -1 && children > 1) is_cut[v] = 1;
  };
  for (int v = 0; v < g.n; ++v)
    if (disc[v] == -1) dfs(dfs, v, -1);
  std::vector<int> cuts;
  for (int v = 0; v < g.n; ++v)
    if (is_cut[v]) cuts.push_back(v);
  return cuts;
}

const char* to_string(ConnectivityClass c) {
  switch (c) {
    case ConnectivityClass::disconnected: return "disconnected";
    case ConnectivityClass::one: return "1";
    case ConnectivityClass::two: return "2";
    case ConnectivityClass::three_plus: return ">=3";
  }
  return "?";
}

ConnectivityClass connectivity_class(const SimpleGraph& g) {
  if (!is_connected(g)) return ConnectivityClass::disconnected;
  if (g.n == 1) return ConnectivityClass::one;
  if (2LL * g.m == static_cast<long long>(g.n) * (g.n - 1)) {
    // complete graph: connectivity n-1, capped at 3
    if (g.n == 2) return ConnectivityClass::one;
    if (g.n == 3) return ConnectivityClass::two;
    return ConnectivityClass::three_plus;
  }
  if (!cut_vertices(g).empty()) return ConnectivityClass::one;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      VertexDeletion d = delete_vertices(g, {u, v});
      if (!is_connected(d.g)) return ConnectivityClass::two;
    }
  return ConnectivityClass::three_plus;
}

Rational24 lb(const SimpleGraph& g) {
  auto counts = degree_counts(g);
  for (size_t d = 4; d < counts.size(); ++d)
    if (counts[d] > 0) throw std::runtime_error("lb: vertex of degree >= 4");
  long long lambda = static_cast<long long>(components(g).size());
  long long direct = 2 * (6LL * g.n - g.m - lambda);
  long long by_degrees =
      9LL * counts[3] + 10LL * counts[2] + 11LL * counts[1] + 12LL * counts[0] - 2 * lambda;
  if (direct != by_degrees) throw std::logic_error("lb: formula disagreement");
  return Rational24::over24(direct);
}

}  // namespace tflab
