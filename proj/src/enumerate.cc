#include "tflab/enumerate.hh"

#include <algorithm>
#include <atomic>
#include <istream>
#include <queue>
#include <set>
#include <stdexcept>
#include <thread>

#include "tflab/critical.hh"
#include "tflab/graph6.hh"
#include "tflab/iso.hh"

namespace tflab {
namespace {

int effective_cap(const GenConstraints& c) {
  if (c.cap > 0) return c.cap;
  return c.cubic_only ? 40 : 18;
}

void validate(const GenConstraints& c) {
  if (c.max_n < 1) throw std::invalid_argument("generate: max_n must be >= 1");
  if (c.min_connectivity < 1 || c.min_connectivity > 3)
    throw std::invalid_argument("generate: min_connectivity must be 1, 2, or 3");
  if (c.min_girth >= 4 && !c.triangle_free)
    throw std::invalid_argument("generate: min_girth >= 4 requires triangle_free");
  if (c.max_n > effective_cap(c))
    throw std::length_error("generate: max_n exceeds the configured cap");
}

// Girth constraint actually enforced during construction: triangle-freeness
// alone means girth >= 4.
int effective_girth(const GenConstraints& c) {
  return std::max({3, c.min_girth, c.triangle_free ? 4 : 3});
}

// g plus one vertex adjacent to `nbrs` (ascending). The new vertex has the
// largest id, so appending it to each neighbor list keeps lists sorted.
SimpleGraph extend(const SimpleGraph& g, const std::vector<int>& nbrs) {
  SimpleGraph h = g;
  for (int u : nbrs) h.adj[u].push_back(g.n);
  h.adj.push_back(nbrs);
  h.n += 1;
  h.m += static_cast<int>(nbrs.size());
  return h;
}

struct Gen {
  GenConstraints c;
  int girth_eff = 4;

  // Smallest number of added vertices that could bring every degree to 3;
  // each addition changes the total deficiency by an odd amount of at most 3.
  bool cubic_completable(const SimpleGraph& g) const {
    if (!c.cubic_only) return true;
    int d = 0;
    for (int v = 0; v < g.n; ++v) d += 3 - g.degree(v);
    if (d == 0) return true;
    int steps = (d + 2) / 3;
    if ((steps & 1) != (d & 1)) ++steps;
    return g.n + steps <= c.max_n;
  }

  bool passes_emission(const SimpleGraph& g) const {
    if (c.cubic_only && !is_cubic(g)) return false;
    if (c.min_connectivity >= 2) {
      ConnectivityClass cc = connectivity_class(g);
      bool ok = cc == ConnectivityClass::three_plus ||
                (c.min_connectivity == 2 && cc == ConnectivityClass::two);
      if (!ok) return false;
    }
    if (c.critical_only && !is_critical(g)) return false;
    return true;
  }

  // Accepted children, in lexicographic neighbor-set order. Acceptance: the
  // new vertex must lie in the automorphism orbit of the non-cutvertex with
  // maximal canonical rank, so every isomorphism class is reached from
  // exactly one parent class; same-parent duplicates are removed by key.
  std::vector<SimpleGraph> children(const SimpleGraph& g) const {
    std::vector<int> eligible;
    for (int v = 0; v < g.n; ++v)
      if (g.degree(v) <= 2) eligible.push_back(v);
    const int k = static_cast<int>(eligible.size());
    if (k == 0) return {};

    // Pairwise distances among attachment candidates: joining x and y to the
    // new vertex closes a cycle of length dist(x,y) + 2.
    const int min_dist = girth_eff - 2;
    std::vector<std::vector<int>> dist;
    if (min_dist > 1) {
      dist.assign(k, std::vector<int>(g.n, g.n + 1));
      for (int i = 0; i < k; ++i) {
        std::queue<int> q;
        dist[i][eligible[i]] = 0;
        q.push(eligible[i]);
        while (!q.empty()) {
          int u = q.front();
          q.pop();
          for (int w : g.adj[u])
            if (dist[i][w] > dist[i][u] + 1) {
              dist[i][w] = dist[i][u] + 1;
              q.push(w);
            }
        }
      }
    }
    auto pair_ok = [&](int i, int j) {
      return min_dist <= 1 || dist[i][eligible[j]] >= min_dist;
    };

    std::vector<SimpleGraph> out;
    std::set<std::string> seen;
    std::vector<int> pick;
    auto consider = [&](const std::vector<int>& idx) {
      std::vector<int> nbrs;
      for (int i : idx) nbrs.push_back(eligible[i]);
      SimpleGraph h = extend(g, nbrs);
      if (!cubic_completable(h)) return;
      CanonResult cr = canonicalize(h);
      if (!seen.insert(cr.key).second) return;
      std::vector<char> is_cut(h.n, 0);
      for (int v : cut_vertices(h)) is_cut[v] = 1;
      int f = -1, best = -1;
      for (int v = 0; v < h.n; ++v)
        if (!is_cut[v] && cr.canon_pos[v] > best) {
          best = cr.canon_pos[v];
          f = v;
        }
      if (cr.orbit[h.n - 1] != cr.orbit[f]) return;
      out.push_back(std::move(h));
    };
    for (int i = 0; i < k; ++i) {
      consider({i});
      for (int j = i + 1; j < k; ++j) {
        if (!pair_ok(i, j)) continue;
        consider({i, j});
        for (int l = j + 1; l < k; ++l) {
          if (!pair_ok(i, l) || !pair_ok(j, l)) continue;
          consider({i, j, l});
        }
      }
    }
    return out;
  }

  void dfs(const SimpleGraph& g,
           const std::function<void(const SimpleGraph&)>& emit) const {
    if (passes_emission(g)) emit(g);
    if (g.n >= c.max_n) return;
    for (const SimpleGraph& h : children(g)) dfs(h, emit);
  }
};

}  // namespace

void generate(const GenConstraints& c,
              const std::function<void(const SimpleGraph&)>& emit, int jobs) {
  validate(c);
  Gen gen{c, effective_girth(c)};
  SimpleGraph root = from_edges(1, {});

  // Subtrees rooted at this level are distributed to workers; the serial
  // prefix and the per-subtree outputs are replayed in preorder, so the
  // emission sequence is identical for every job count.
  const int frontier = c.cubic_only ? 10 : 8;
  if (jobs <= 1 || c.max_n <= frontier) {
    gen.dfs(root, emit);
    return;
  }

  struct Event {
    bool is_subtree_root;
    SimpleGraph g;
  };
  std::vector<Event> events;
  std::function<void(const SimpleGraph&)> walk = [&](const SimpleGraph& g) {
    if (g.n == frontier) {
      events.push_back({true, g});
      return;
    }
    events.push_back({false, g});
    if (g.n < c.max_n)
      for (const SimpleGraph& h : gen.children(g)) walk(h);
  };
  walk(root);

  std::vector<const SimpleGraph*> roots;
  for (const Event& e : events)
    if (e.is_subtree_root) roots.push_back(&e.g);
  std::vector<std::vector<SimpleGraph>> outputs(roots.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= roots.size()) return;
      gen.dfs(*roots[i],
              [&](const SimpleGraph& g) { outputs[i].push_back(g); });
    }
  };
  std::vector<std::thread> pool;
  int nthreads = std::min<int>(jobs, static_cast<int>(roots.size()));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  size_t ri = 0;
  for (const Event& e : events) {
    if (e.is_subtree_root) {
      for (const SimpleGraph& g : outputs[ri]) emit(g);
      ++ri;
    } else if (gen.passes_emission(e.g)) {
      emit(e.g);
    }
  }
}

std::vector<SimpleGraph> generate_all(const GenConstraints& c, int jobs) {
  std::vector<SimpleGraph> out;
  generate(c, [&](const SimpleGraph& g) { out.push_back(g); }, jobs);
  return out;
}

namespace {

// Empty string if g satisfies every requested constraint, else a reason.
std::string constraint_violation(const SimpleGraph& g, const GenConstraints& c) {
  if (!max_degree_at_most(g, 3)) return "maximum degree exceeds 3";
  if (c.triangle_free && !is_triangle_free(g)) return "graph has a triangle";
  int need_girth = std::max(c.min_girth, c.triangle_free ? 4 : 0);
  if (need_girth > 0 && girth(g) < need_girth)
    return "girth below " + std::to_string(need_girth);
  if (!is_connected(g)) return "graph is not connected";
  if (c.min_connectivity >= 2) {
    ConnectivityClass cc = connectivity_class(g);
    bool ok = cc == ConnectivityClass::three_plus ||
              (c.min_connectivity == 2 && cc == ConnectivityClass::two);
    if (!ok)
      return "connectivity below " + std::to_string(c.min_connectivity);
  }
  if (c.cubic_only && !is_cubic(g)) return "graph is not 3-regular";
  if (c.critical_only && !is_critical(g)) return "graph is not critical";
  return "";
}

}  // namespace

IngestResult ingest_graph6(std::istream& in, const GenConstraints* revalidate,
                           bool strict) {
  IngestResult res;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& message) {
    if (strict)
      throw std::runtime_error("line " + std::to_string(lineno) + ": " +
                               message);
    res.errors.push_back({lineno, message});
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    SimpleGraph g;
    try {
      g = parse_graph6(line);
    } catch (const std::exception& e) {
      fail(std::string("graph6 parse: ") + e.what());
      continue;
    }
    if (revalidate) {
      std::string why = constraint_violation(g, *revalidate);
      if (!why.empty()) {
        fail(why);
        continue;
      }
    }
    res.items.push_back({lineno, std::move(g)});
  }
  return res;
}

}  // namespace tflab
