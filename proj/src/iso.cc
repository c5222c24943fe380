#include "tflab/iso.hh"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tflab/graph6.hh"

namespace tflab {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement: split cells by neighbor counts into other cells until
// stable.  Splitting is deterministic (scan order, sub-cells ordered by
// ascending count), which the catalog stability relies on.
void refine(const SimpleGraph& g, Cells& cells) {
  bool changed = true;
  std::vector<int> cnt(g.n);
  while (changed) {
    changed = false;
    for (size_t s = 0; s < cells.size() && !changed; ++s) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (int v : cells[s])
        for (int u : g.adj[v]) ++cnt[u];
      for (size_t d = 0; d < cells.size(); ++d) {
        if (cells[d].size() <= 1) continue;
        std::map<int, std::vector<int>> groups;
        for (int v : cells[d]) groups[cnt[v]].push_back(v);
        if (groups.size() <= 1) continue;
        Cells repl;
        for (auto& [c, vs] : groups) repl.push_back(std::move(vs));
        cells.erase(cells.begin() + (long)d);
        cells.insert(cells.begin() + (long)d,
                     std::make_move_iterator(repl.begin()),
                     std::make_move_iterator(repl.end()));
        changed = true;
        break;
      }
    }
  }
}

// Node invariant: cell sizes plus the quotient row of each cell (neighbor
// counts from a representative into every cell — well-defined because the
// partition is equitable).  Isomorphism-invariant, so pruning on it is safe.
std::string node_invariant(const SimpleGraph& g, const Cells& cells) {
  std::string s;
  std::vector<int> cell_of(g.n);
  for (size_t i = 0; i < cells.size(); ++i)
    for (int v : cells[i]) cell_of[v] = (int)i;
  for (const auto& c : cells) {
    s += std::to_string(c.size());
    s.push_back(':');
    std::vector<int> row(cells.size(), 0);
    for (int u : g.adj[c[0]]) ++row[cell_of[u]];
    for (int r : row) {
      s += std::to_string(r);
      s.push_back(',');
    }
    s.push_back('|');
  }
  return s;
}

struct Ctx {
  const SimpleGraph& g;
  std::vector<std::string> best_inv;  // invariant path of the best regime
  bool have_key = false;
  std::string best_key;
  std::vector<int> best_pos;   // canon_pos of the max-key leaf
  std::vector<int> base_pos;   // canon_pos of the automorphism base leaf
  std::vector<int> uf;
  long long leaves = 0;

  explicit Ctx(const SimpleGraph& gg) : g(gg), uf(gg.n) {
    for (int i = 0; i < gg.n; ++i) uf[i] = i;
  }
  int find(int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) uf[std::max(a, b)] = std::min(a, b);
  }
};

std::string leaf_key(const SimpleGraph& g, const std::vector<int>& pos) {
  std::vector<std::pair<int, int>> es;
  es.reserve(g.m);
  for (auto [u, v] : g.edges()) es.push_back({pos[u], pos[v]});
  return to_graph6(from_edges(g.n, es));
}

void dfs(Ctx& c, Cells cells, size_t depth) {
  refine(c.g, cells);
  std::string inv = node_invariant(c.g, cells);
  if (depth < c.best_inv.size()) {
    if (inv < c.best_inv[depth]) return;  // provably worse subtree
    if (inv > c.best_inv[depth]) {
      c.best_inv.resize(depth);
      c.best_inv.push_back(inv);
      c.have_key = false;  // previously collected automorphisms stay valid
    }
  } else {
    c.best_inv.push_back(inv);
  }

  size_t target = cells.size();
  for (size_t i = 0; i < cells.size(); ++i)
    if (cells[i].size() > 1) {
      target = i;
      break;
    }

  if (target == cells.size()) {  // discrete: a leaf labeling
    if (++c.leaves > 5'000'000)
      throw std::runtime_error("canonicalize: search budget exceeded");
    std::vector<int> pos(c.g.n);
    for (size_t i = 0; i < cells.size(); ++i) pos[cells[i][0]] = (int)i;
    std::string key = leaf_key(c.g, pos);
    if (!c.have_key || key > c.best_key) {
      c.best_key = key;
      c.best_pos = pos;
      c.base_pos = pos;
      c.have_key = true;
    } else if (key == c.best_key) {
      // Two labelings of the same canonical graph compose to an automorphism.
      std::vector<int> at(c.g.n);
      for (int v = 0; v < c.g.n; ++v) at[c.base_pos[v]] = v;
      for (int v = 0; v < c.g.n; ++v) c.unite(v, at[pos[v]]);
    }
    return;
  }

  for (int v : cells[target]) {  // ascending: lowest-index vertex first
    Cells child;
    child.reserve(cells.size() + 1);
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i != target) {
        child.push_back(cells[i]);
        continue;
      }
      child.push_back({v});
      std::vector<int> rest;
      for (int u : cells[i])
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
    }
    dfs(c, std::move(child), depth + 1);
  }
}

}  // namespace

CanonResult canonicalize(const SimpleGraph& g, const std::vector<int>* colors,
                         int cap) {
  if (g.n > cap) throw std::runtime_error("canonicalize: vertex cap exceeded");
  if (colors && (int)colors->size() != g.n)
    throw std::runtime_error("canonicalize: color vector size mismatch");
  if (g.n == 0) return CanonResult{{}, "?", {}};

  Cells init;
  std::string suffix;
  if (colors) {
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < g.n; ++v) by_color[(*colors)[v]].push_back(v);
    for (auto& [col, vs] : by_color) {
      suffix += ";" + std::to_string(col) + ":" + std::to_string(vs.size());
      init.push_back(std::move(vs));
    }
  } else {
    std::vector<int> all(g.n);
    for (int v = 0; v < g.n; ++v) all[v] = v;
    init.push_back(std::move(all));
  }

  Ctx c(g);
  dfs(c, std::move(init), 0);

  CanonResult r;
  r.canon_pos = c.best_pos;
  r.key = c.best_key + suffix;
  r.orbit.resize(g.n);
  for (int v = 0; v < g.n; ++v) r.orbit[v] = c.find(v);
  return r;
}

std::string canonical_key(const SimpleGraph& g) { return canonicalize(g).key; }

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.n != b.n || a.m != b.m) return false;
  auto degs = [](const SimpleGraph& g) {
    std::vector<int> d(g.n);
    for (int v = 0; v < g.n; ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(a) != degs(b)) return false;
  return canonical_key(a) == canonical_key(b);
}

namespace {

// Backtracking embedding search shared by the three public entry points.
struct EmbedSearch {
  const SimpleGraph& h;
  const SimpleGraph& g;
  bool induced;
  bool collect_all;
  std::vector<int> order;      // H-vertices, connectivity-first
  std::vector<int> map;        // H-vertex -> G-vertex or -1
  std::vector<char> used;      // G-vertex occupied
  std::optional<Embedding> first;
  std::vector<std::vector<int>> images;  // sorted image sets (dedup later)

  EmbedSearch(const SimpleGraph& hh, const SimpleGraph& gg, bool ind, bool all)
      : h(hh), g(gg), induced(ind), collect_all(all) {
    map.assign(h.n, -1);
    used.assign(g.n, 0);
    // Order: BFS from a max-degree vertex, repeated per component, so that
    // most placed vertices have an already-mapped neighbor to prune against.
    std::vector<char> seen(h.n, 0);
    while ((int)order.size() < h.n) {
      int best = -1;
      for (int v = 0; v < h.n; ++v)
        if (!seen[v] && (best == -1 || h.degree(v) > h.degree(best))) best = v;
      std::vector<int> q{best};
      seen[best] = 1;
      for (size_t i = 0; i < q.size(); ++i) {
        order.push_back(q[i]);
        for (int u : h.adj[q[i]])
          if (!seen[u]) {
            seen[u] = 1;
            q.push_back(u);
          }
      }
    }
  }

  bool feasible(int hv, int gv) {
    if (used[gv] || g.degree(gv) < h.degree(hv)) return false;
    for (int hu : h.adj[hv])
      if (map[hu] != -1 && !g.has_edge(gv, map[hu])) return false;
    if (induced) {
      for (int hu = 0; hu < h.n; ++hu)
        if (map[hu] != -1 && !h.has_edge(hv, hu) && g.has_edge(gv, map[hu]))
          return false;
    }
    return true;
  }

  bool run(size_t idx) {  // returns true to stop early (first-match mode)
    if (idx == order.size()) {
      if (collect_all) {
        std::vector<int> img(map);
        std::sort(img.begin(), img.end());
        images.push_back(std::move(img));
        return false;
      }
      first = Embedding{map};
      return true;
    }
    int hv = order[idx];
    for (int gv = 0; gv < g.n; ++gv) {
      if (!feasible(hv, gv)) continue;
      map[hv] = gv;
      used[gv] = 1;
      if (run(idx + 1)) return true;
      map[hv] = -1;
      used[gv] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> find_subgraph(const SimpleGraph& h,
                                       const SimpleGraph& g, bool induced) {
  if (h.n > g.n || h.m > g.m) return std::nullopt;
  if (h.n == 0) return Embedding{{}};
  EmbedSearch s(h, g, induced, /*all=*/false);
  s.run(0);
  return s.first;
}

std::vector<std::vector<int>> all_occurrence_vertex_sets(const SimpleGraph& h,
                                                         const SimpleGraph& g,
                                                         bool induced) {
  if (h.n > g.n || h.m > g.m || h.n == 0) return {};
  EmbedSearch s(h, g, induced, /*all=*/true);
  s.run(0);
  std::sort(s.images.begin(), s.images.end());
  s.images.erase(std::unique(s.images.begin(), s.images.end()),
                 s.images.end());
  return s.images;
}

}  // namespace tflab
