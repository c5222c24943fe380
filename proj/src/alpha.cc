#include "tflab/alpha.hh"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tflab/iso.hh"

namespace tflab {

namespace {

// ---------------------------------------------------------------------------
// Branch-and-bound weighted MIS over bitset adjacency.  The solver state is
// copied at each recursion node; reductions record inverse transforms so the
// witness can be rebuilt while unwinding.
// ---------------------------------------------------------------------------

struct Transform {
  enum Kind { take, pendant, fold } kind;
  int v, u, w;
};

template <class W>
struct State {
  int n, blocks;
  std::vector<uint64_t> adj;    // row v occupies [v*blocks, (v+1)*blocks)
  std::vector<uint64_t> alive;  // blocks words
  std::vector<W> wt;

  uint64_t* row(int v) { return adj.data() + (size_t)v * blocks; }
  const uint64_t* row(int v) const { return adj.data() + (size_t)v * blocks; }
  bool is_alive(int v) const { return (alive[v >> 6] >> (v & 63)) & 1; }
  void kill(int v) { alive[v >> 6] &= ~(1ull << (v & 63)); }
  bool edge(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1; }

  int degree(int v) const {
    int d = 0;
    const uint64_t* r = row(v);
    for (int b = 0; b < blocks; ++b) d += std::popcount(r[b] & alive[b]);
    return d;
  }
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    const uint64_t* r = row(v);
    for (int b = 0; b < blocks; ++b) {
      uint64_t x = r[b] & alive[b];
      while (x) {
        int i = std::countr_zero(x);
        out.push_back(b * 64 + i);
        x &= x - 1;
      }
    }
    return out;
  }
  std::vector<int> alive_vertices() const {
    std::vector<int> out;
    for (int b = 0; b < blocks; ++b) {
      uint64_t x = alive[b];
      while (x) {
        int i = std::countr_zero(x);
        out.push_back(b * 64 + i);
        x &= x - 1;
      }
    }
    return out;
  }
  W alive_weight() const {
    W s = 0;
    for (int v : alive_vertices()) s += wt[v];
    return s;
  }
};

template <class W>
State<W> make_state(const SimpleGraph& g, const std::vector<W>& w) {
  State<W> s;
  s.n = g.n;
  s.blocks = (g.n + 63) / 64;
  if (s.blocks == 0) s.blocks = 1;
  s.adj.assign((size_t)s.n * s.blocks, 0);
  s.alive.assign(s.blocks, 0);
  s.wt = w;
  for (int v = 0; v < g.n; ++v) {
    s.alive[v >> 6] |= 1ull << (v & 63);
    for (int u : g.adj[v]) s.row(v)[u >> 6] |= 1ull << (u & 63);
  }
  return s;
}

template <class W>
struct Sol {
  W value;
  std::vector<char> in;  // slot membership
};

// Remove v and all its live neighbors (the "take v" move).
template <class W>
void remove_closed(State<W>& s, int v) {
  for (int u : s.neighbors(v)) s.kill(u);
  s.kill(v);
}

template <class W>
Sol<W> solve(State<W> s) {
  W base = 0;
  std::vector<Transform> post;

  // Reduction loop.
  bool again = true;
  while (again) {
    again = false;
    for (int v : s.alive_vertices()) {
      if (!s.is_alive(v)) continue;  // killed earlier in this scan
      if (s.wt[v] <= 0) {  // never helps; drop it
        s.kill(v);
        again = true;
        continue;
      }
      int d = s.degree(v);
      if (d == 0) {
        base += s.wt[v];
        post.push_back({Transform::take, v, -1, -1});
        s.kill(v);
        again = true;
      } else if (d == 1) {
        int u = s.neighbors(v)[0];
        if (s.wt[v] >= s.wt[u]) {
          base += s.wt[v];
          post.push_back({Transform::take, v, -1, -1});
          remove_closed(s, v);
        } else {
          // Pendant fold: any optimum either takes u, or can take v instead.
          base += s.wt[v];
          s.wt[u] -= s.wt[v];
          post.push_back({Transform::pendant, v, u, -1});
          s.kill(v);
        }
        again = true;
        break;  // degrees shifted; rescan
      } else if (d == 2) {
        auto nb = s.neighbors(v);
        int u = nb[0], w = nb[1];
        if (s.wt[v] < std::max(s.wt[u], s.wt[w])) continue;
        if (s.edge(u, w)) {
          // Triangle: at most one of u,w in any solution; v dominates it.
          base += s.wt[v];
          post.push_back({Transform::take, v, -1, -1});
          remove_closed(s, v);
        } else if (s.wt[u] + s.wt[w] <= s.wt[v]) {
          base += s.wt[v];
          post.push_back({Transform::take, v, -1, -1});
          remove_closed(s, v);
        } else {
          // Fold u,v,w into slot v: either v alone, or u and w together.
          base += s.wt[v];
          W merged = s.wt[u] + s.wt[w] - s.wt[v];
          uint64_t* rv = s.row(v);
          for (int b = 0; b < s.blocks; ++b)
            rv[b] = (rv[b] | s.row(u)[b] | s.row(w)[b]) & s.alive[b];
          rv[v >> 6] &= ~(1ull << (v & 63));
          rv[u >> 6] &= ~(1ull << (u & 63));
          rv[w >> 6] &= ~(1ull << (w & 63));
          s.kill(u);
          s.kill(w);
          for (int x : s.neighbors(v)) s.row(x)[v >> 6] |= 1ull << (v & 63);
          s.wt[v] = merged;
          post.push_back({Transform::fold, v, u, w});
        }
        again = true;
        break;
      }
    }
  }

  Sol<W> r{W(0), std::vector<char>((size_t)s.n, 0)};
  auto verts = s.alive_vertices();

  if (!verts.empty()) {
    // Component split: solve each connected piece of the live graph alone.
    std::vector<char> seen(s.n, 0);
    std::vector<std::vector<int>> comps;
    for (int v : verts) {
      if (seen[v]) continue;
      std::vector<int> q{v};
      seen[v] = 1;
      for (size_t i = 0; i < q.size(); ++i)
        for (int u : s.neighbors(q[i]))
          if (!seen[u]) {
            seen[u] = 1;
            q.push_back(u);
          }
      comps.push_back(std::move(q));
    }
    if (comps.size() > 1) {
      for (const auto& comp : comps) {
        State<W> sub = s;
        std::fill(sub.alive.begin(), sub.alive.end(), 0);
        for (int v : comp) sub.alive[v >> 6] |= 1ull << (v & 63);
        Sol<W> cr = solve(std::move(sub));
        r.value += cr.value;
        for (int v = 0; v < s.n; ++v)
          if (cr.in[v]) r.in[v] = 1;
      }
    } else {
      // Branch on a max-degree vertex, lowest id on ties.
      int b = -1, bd = -1;
      for (int v : verts) {
        int d = s.degree(v);
        if (d > bd) {
          bd = d;
          b = v;
        }
      }
      State<W> with = s;
      remove_closed(with, b);
      Sol<W> r1 = solve(std::move(with));
      r1.value += s.wt[b];
      r1.in[b] = 1;

      State<W> without = s;
      without.kill(b);
      // Simple bound: the exclude-branch cannot beat r1 if even taking
      // everything left falls short.
      if (without.alive_weight() > r1.value) {
        Sol<W> r2 = solve(std::move(without));
        r = (r2.value > r1.value) ? std::move(r2) : std::move(r1);
      } else {
        r = std::move(r1);
      }
    }
  }

  // Unwind reductions.
  for (auto it = post.rbegin(); it != post.rend(); ++it) {
    switch (it->kind) {
      case Transform::take:
        r.in[it->v] = 1;
        break;
      case Transform::pendant:
        if (!r.in[it->u]) r.in[it->v] = 1;
        break;
      case Transform::fold:
        if (r.in[it->v]) {
          r.in[it->v] = 0;
          r.in[it->u] = 1;
          r.in[it->w] = 1;
        } else {
          r.in[it->v] = 1;
        }
        break;
    }
  }
  r.value += base;
  return r;
}

template <class W>
std::vector<int> in_to_list(const std::vector<char>& in) {
  std::vector<int> out;
  for (int v = 0; v < (int)in.size(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

}  // namespace

MisResult alpha(const SimpleGraph& g) {
  std::vector<long long> w((size_t)g.n, 1);
  Sol<long long> r = solve(make_state(g, w));
  return MisResult{r.value, in_to_list<long long>(r.in)};
}

WeightedMisResult alpha_weighted(const SimpleGraph& g,
                                 const std::vector<Rational>& w) {
  if ((int)w.size() != g.n)
    throw std::runtime_error("alpha_weighted: weight vector size mismatch");
  Sol<Rational> r = solve(make_state(g, w));
  return WeightedMisResult{r.value, in_to_list<Rational>(r.in)};
}

AvoidResult has_mis_avoiding(const SimpleGraph& g, const std::vector<int>& t) {
  for (int v : t)
    if (v < 0 || v >= g.n)
      throw std::runtime_error("has_mis_avoiding: vertex out of range");
  long long full = alpha(g).size;
  VertexDeletion d = delete_vertices(g, t);
  MisResult sub = alpha(d.g);
  if (sub.size != full) return AvoidResult{false, {}};
  std::vector<int> witness;
  for (int v : sub.witness) witness.push_back(d.new_to_old[v]);
  std::sort(witness.begin(), witness.end());
  return AvoidResult{true, witness};
}

bool forall_mis_contain(const SimpleGraph& g, int v) {
  if (v < 0 || v >= g.n)
    throw std::runtime_error("forall_mis_contain: vertex out of range");
  long long full = alpha(g).size;
  VertexDeletion d = delete_vertices(g, {v});
  return alpha(d.g).size <= full - 1;
}

namespace {

// Exact maximum disjoint packing of the given vertex sets: independent set
// on the conflict graph (sets clash when they share a vertex).
PackingResult pack_disjoint(const std::vector<std::vector<int>>& sets) {
  int k = (int)sets.size();
  std::vector<std::pair<int, int>> conflicts;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool share = false;
      for (int a : sets[i]) {
        if (std::binary_search(sets[j].begin(), sets[j].end(), a)) {
          share = true;
          break;
        }
      }
      if (share) conflicts.push_back({i, j});
    }
  MisResult mis = alpha(from_edges(k, conflicts));
  PackingResult out{(int)mis.size, {}};
  for (int i : mis.witness) out.witness.push_back(sets[i]);
  return out;
}

}  // namespace

PackingResult triangle_packing(const SimpleGraph& g) {
  std::vector<std::vector<int>> tris;
  for (int a = 0; a < g.n; ++a)
    for (int b : g.adj[a]) {
      if (b <= a) continue;
      for (int c : g.adj[b]) {
        if (c <= b) continue;
        if (g.has_edge(a, c)) tris.push_back({a, b, c});
      }
    }
  return pack_disjoint(tris);
}

PackingResult bad_packing(const SimpleGraph& g,
                          const SubgraphCatalog& catalog) {
  if (g.n > 40)
    throw std::runtime_error("bad_packing: graphs beyond 40 vertices exceed "
                             "the documented cap (occurrence enumeration "
                             "blows up combinatorially)");
  if (catalog.complete_up_to < g.n)
    throw std::runtime_error("bad_packing: catalog incomplete for this order");
  std::vector<std::vector<int>> occ;
  for (const auto& h : catalog.members) {
    if (h.n > g.n) continue;
    for (auto& s : all_occurrence_vertex_sets(h, g, /*induced=*/false))
      occ.push_back(std::move(s));
  }
  std::sort(occ.begin(), occ.end());
  occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
  return pack_disjoint(occ);
}

Rational24 lb_T(const SimpleGraph& g) {
  if (!is_connected(g)) throw std::runtime_error("lb_T: graph not connected");
  if (!max_degree_at_most(g, 3))
    throw std::runtime_error("lb_T: graph has a vertex of degree > 3");
  long long t = triangle_packing(g).size;
  return Rational24{2 * (6LL * g.n - g.m - 2 * t - 1)};
}

}  // namespace tflab
