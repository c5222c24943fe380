#include "tflab/verify.hh"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "json.hpp"
#include "tflab/alpha.hh"
#include "tflab/critical.hh"
#include "tflab/families.hh"
#include "tflab/frac.hh"
#include "tflab/graph6.hh"
#include "tflab/iso.hh"

namespace tflab {
namespace {

using OrderedJson = nlohmann::ordered_json;

constexpr const char* kPass = "pass";
constexpr const char* kException = "exception-as-predicted";
constexpr const char* kFail = "FAIL";
constexpr const char* kFinding = "finding";

// Shared family-catalog caps for one sweep; using one cap per family for the
// whole run means each cache is built exactly once.
struct Caps {
  int bad = 8;
  int dangerous = 5;
  int almost = 6;
  const SubgraphCatalog* packing_catalog = nullptr;  // cor_triangles only
};

Caps caps_for(int max_n) {
  Caps c;
  c.bad = std::max(8, max_n);
  c.dangerous = std::max(5, max_n);
  c.almost = std::max(6, max_n);
  return c;
}

const SimpleGraph& k4_fixture() {
  static const SimpleGraph k4 =
      from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  return k4;
}

// Isomorphism test against the six fixtures; an induced embedding between
// graphs of equal order is exactly an isomorphism.
bool iso_to_forbidden(const SimpleGraph& g, std::string* name,
                      std::vector<int>* embedding) {
  for (const auto& [nm, f] : forbidden_in_size_order()) {
    if (f.n != g.n || f.m != g.m) continue;
    if (auto emb = find_subgraph(f, g, true)) {
      if (name) *name = nm;
      if (embedding) *embedding = emb->map;
      return true;
    }
  }
  return false;
}

bool has_bad_subgraph(const SimpleGraph& g, const Caps& caps) {
  for (const CatalogEntry& e : enumerate_bad(caps.bad)) {
    if (e.g.n > g.n) break;  // catalog is sorted by n
    if (e.g.m <= g.m && find_subgraph(e.g, g, false)) return true;
  }
  return false;
}

// Per-graph computation results: the quantities plus witness payloads that
// are not quantities themselves.
struct Computed {
  ClaimQuantities q;
  std::vector<int> mis;
  std::vector<int> embedding;
};

void fill_common(const SimpleGraph& g, const Caps& caps, Computed& c) {
  MisResult mis = alpha(g);
  c.mis = mis.witness;
  ClaimQuantities& q = c.q;
  q.n = g.n;
  q.alpha = static_cast<int>(mis.size);
  q.lb24 = static_cast<int>(lb(g).num);
  if (g.n > 0 && is_connected(g)) q.lb_t24 = static_cast<int>(lb_T(g).num);
  q.kappa = 30LL * q.alpha - 11LL * g.n;
  int gi = girth(g);
  q.girth = (gi == kGirthInfinite) ? 0 : gi;
  q.connectivity = to_string(connectivity_class(g));
  q.bad = is_bad(g, caps.bad);
  q.dangerous = is_dangerous(g, caps.dangerous);
  q.forbidden_free = !contains_any_forbidden(g).has_value();
  q.critical = is_critical(g);
}

std::string lt(long long a, const char* an, long long b, const char* bn) {
  return std::string(an) + " = " + std::to_string(a) + " < " + bn + " = " +
         std::to_string(b);
}

// ---------------------------------------------------------------------------
// Restriction filters
// ---------------------------------------------------------------------------

bool app_connected(const SimpleGraph& g, const Caps&) { return is_connected(g); }

bool app_forbidden_free(const SimpleGraph& g, const Caps&) {
  return !contains_any_forbidden(g).has_value();
}

bool app_technical(const SimpleGraph& g, const Caps&) {
  return is_connected(g) && !iso_to_forbidden(g, nullptr, nullptr) &&
         is_critical(g);
}

bool app_2conn(const SimpleGraph& g, const Caps&) {
  ConnectivityClass c = connectivity_class(g);
  return c == ConnectivityClass::two || c == ConnectivityClass::three_plus;
}

bool app_girth6(const SimpleGraph& g, const Caps&) { return girth(g) >= 6; }

bool app_thm_triangles(const SimpleGraph& g, const Caps&) {
  if (!is_connected(g)) return false;
  if (g.n == 4 && g.m == 6) return false;  // K4
  if (iso_to_forbidden(g, nullptr, nullptr)) return false;
  return is_critical(g);
}

bool app_cor_triangles(const SimpleGraph& g, const Caps&) {
  if (!is_connected(g) || g.n > 40) return false;  // packing solver cap
  if (find_subgraph(k4_fixture(), g, false)) return false;
  return !contains_any_forbidden(g).has_value();
}

bool app_frac(const SimpleGraph& g, const Caps&) {
  return g.n <= 20 && !contains_any_forbidden(g).has_value();  // LP cap
}

// ---------------------------------------------------------------------------
// Claim-specific extra quantities
// ---------------------------------------------------------------------------

void ext_none(const SimpleGraph&, const Caps&, Computed&) {}

void ext_fl(const SimpleGraph& g, const Caps&, Computed& c) {
  c.q.class_11_30 = to_string(classify_11_30(g));
}

void ext_technical(const SimpleGraph& g, const Caps& caps, Computed& c) {
  c.q.degree2_count = degree_counts(g)[2];
  c.q.bad_subgraph_free = !has_bad_subgraph(g, caps);
}

void ext_2conn(const SimpleGraph& g, const Caps&, Computed& c) {
  std::string name;
  std::vector<int> emb;
  if (iso_to_forbidden(g, &name, &emb)) {
    c.q.forbidden_match = name;
    c.embedding = emb;
  }
}

void ext_thm_triangles(const SimpleGraph& g, const Caps& caps, Computed& c) {
  c.q.bad_or_almost_bad = c.q.bad || is_almost_bad(g, caps.almost);
}

void ext_cor_triangles(const SimpleGraph& g, const Caps& caps, Computed& c) {
  c.q.bad_packing = bad_packing(g, *caps.packing_catalog).size;
}

void ext_frac(const SimpleGraph& g, const Caps&, Computed& c) {
  c.q.chi_f = fractional_chromatic(g, 20).str();
}

// ---------------------------------------------------------------------------
// Predicates (pure functions of the quantities)
// ---------------------------------------------------------------------------

ClaimVerdict eval_staton(const ClaimQuantities& q) {
  ClaimVerdict v;
  long long lhs = 14LL * q.alpha, rhs = 5LL * q.n;
  if (lhs >= rhs) {
    v.verdict = kPass;
    v.tight = (lhs == rhs);
  } else {
    v.verdict = kFail;
    v.note = lt(lhs, "14*alpha", rhs, "5n");
  }
  return v;
}

ClaimVerdict eval_fl(const ClaimQuantities& q) {
  ClaimVerdict v;
  const std::string cls = q.class_11_30.value_or("general");
  long long k = 30LL * q.alpha - 11LL * q.n;
  auto expect = [&](long long want, const char* what) {
    if (k == want) {
      v.verdict = kException;
      v.note = what;
    } else {
      v.verdict = kFail;
      v.note = std::string(what) + ", but 30*alpha - 11n = " +
               std::to_string(k) + ", expected " + std::to_string(want);
    }
  };
  if (cls == "F14")
    expect(-4, "F14: 30*alpha = 11n - 4");
  else if (cls == "F22")
    expect(-2, "F22: 30*alpha = 11n - 2");
  else if (cls == "T")
    expect(-2, "member of T: 30*alpha = 11n - 2");
  else if (cls == "Tminus")
    expect(-1, "member of T-minus: 30*alpha = 11n - 1");
  else if (k >= 0) {
    v.verdict = kPass;
    v.tight = (k <= 29);  // alpha = ceil(11n/30) exactly
  } else {
    v.verdict = kFail;
    v.note = "30*alpha - 11n = " + std::to_string(k) + " < 0";
  }
  return v;
}

ClaimVerdict eval_main38(const ClaimQuantities& q) {
  ClaimVerdict v;
  long long lhs = 8LL * q.alpha, rhs = 3LL * q.n;
  if (lhs >= rhs) {
    v.verdict = kPass;
    v.tight = (lhs == rhs);
  } else {
    v.verdict = kFail;
    v.note = lt(lhs, "8*alpha", rhs, "3n");
  }
  return v;
}

ClaimVerdict eval_technical(const ClaimQuantities& q) {
  ClaimVerdict v;
  long long a24 = 24LL * q.alpha;
  if (q.bad) {
    if (a24 == q.lb24 - 2) {
      v.verdict = kException;
      v.note = "bad: 24*alpha = 24*lb - 2";
    } else {
      v.verdict = kFail;
      v.note = "bad, but 24*alpha = " + std::to_string(a24) +
               ", expected 24*lb - 2 = " + std::to_string(q.lb24 - 2);
    }
    return v;
  }
  if (a24 < q.lb24) {
    v.verdict = kFail;
    v.note = lt(a24, "24*alpha", q.lb24, "24*lb");
    return v;
  }
  bool strengthened = q.degree2_count.value_or(0) >= 3 && !q.dangerous &&
                      q.bad_subgraph_free.value_or(false);
  if (strengthened && a24 < q.lb24 + 2) {
    v.verdict = kFail;
    v.note = ">= 3 degree-2 vertices, not dangerous, no bad subgraph, but " +
             lt(a24, "24*alpha", q.lb24 + 2, "24*lb + 2");
    return v;
  }
  v.verdict = kPass;
  v.tight = (a24 == q.lb24);
  return v;
}

ClaimVerdict eval_2conn(const ClaimQuantities& q) {
  ClaimVerdict v;
  long long a24 = 24LL * q.alpha, n9 = 9LL * q.n;
  if (a24 >= n9) {
    v.verdict = kPass;
    v.tight = (a24 == n9);
  } else if (q.forbidden_match && a24 >= n9 - 6) {
    v.verdict = kException;
    v.note = *q.forbidden_match + ": 24*alpha = " + std::to_string(a24) +
             " within [9n - 6, 9n)";
  } else if (a24 < n9 - 6) {
    v.verdict = kFail;
    v.note = lt(a24, "24*alpha", n9 - 6, "9n - 6");
  } else {
    v.verdict = kFail;
    v.note = "below 9n without matching a forbidden graph: " +
             lt(a24, "24*alpha", n9, "9n");
  }
  return v;
}

ClaimVerdict eval_girth6(const ClaimQuantities& q) {
  ClaimVerdict v;
  long long lhs = 8LL * q.alpha, rhs = 3LL * q.n;
  if (lhs >= rhs) {
    v.verdict = kPass;
    v.tight = (lhs == rhs);
  } else {
    v.verdict = kFail;
    v.note = lt(lhs, "8*alpha", rhs, "3n");
  }
  return v;
}

ClaimVerdict eval_thm_triangles(const ClaimQuantities& q) {
  ClaimVerdict v;
  long long a24 = 24LL * q.alpha;
  long long t24 = q.lb_t24.value_or(0);
  if (q.bad_or_almost_bad.value_or(false)) {
    if (a24 == t24 - 2) {
      v.verdict = kException;
      v.note = "bad or almost bad: 24*alpha = 24*lb_T - 2";
    } else {
      v.verdict = kFail;
      v.note = "bad or almost bad, but 24*alpha = " + std::to_string(a24) +
               ", expected 24*lb_T - 2 = " + std::to_string(t24 - 2);
    }
  } else if (a24 >= t24) {
    v.verdict = kPass;
    v.tight = (a24 == t24);
  } else {
    v.verdict = kFail;
    v.note = lt(a24, "24*alpha", t24, "24*lb_T");
  }
  return v;
}

ClaimVerdict eval_cor_triangles(const ClaimQuantities& q) {
  ClaimVerdict v;
  long long a24 = 24LL * q.alpha;
  long long bound = q.lb_t24.value_or(0) - 2LL * q.bad_packing.value_or(0);
  if (a24 >= bound) {
    v.verdict = kPass;
    v.tight = (a24 == bound);
  } else {
    v.verdict = kFail;
    v.note = lt(a24, "24*alpha", bound, "24*lb_T - 2B");
  }
  return v;
}

// Parses the exact rational rendering "p" or "p/q".
void parse_rational(const std::string& s, long long& p, long long& q) {
  size_t slash = s.find('/');
  p = std::stoll(s.substr(0, slash));
  q = (slash == std::string::npos) ? 1 : std::stoll(s.substr(slash + 1));
}

ClaimVerdict eval_frac(const ClaimQuantities& q) {
  ClaimVerdict v;
  long long p = 0, den = 1;
  parse_rational(q.chi_f.value_or("0"), p, den);
  if (3 * p <= 8 * den) {  // chi_f <= 8/3
    v.verdict = kPass;
    v.tight = (3 * p == 8 * den);
  } else {
    v.verdict = kFinding;
    v.note = "chi_f = " + *q.chi_f + " > 8/3";
  }
  return v;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct ClaimDef {
  const char* id;
  const char* statement;
  const char* restriction;
  bool triangle_corpus;  // the corpus precondition allows triangles
  bool needs_packing;
  bool (*applies)(const SimpleGraph&, const Caps&);
  void (*extras)(const SimpleGraph&, const Caps&, Computed&);
  ClaimVerdict (*evaluate)(const ClaimQuantities&);
};

const ClaimDef kClaims[] = {
    {"staton",
     "every connected triangle-free subcubic graph satisfies 14*alpha >= 5n",
     "connected", false, false, app_connected, ext_none, eval_staton},
    {"fl_connected",
     "five-way 11/30 split: 30*alpha = 11n - 4 for the two F14s, 11n - 2 for "
     "F22 and members of T, 11n - 1 for members of T-minus, and "
     "30*alpha >= 11n otherwise",
     "connected", false, false, app_connected, ext_fl, eval_fl},
    {"main_38",
     "a triangle-free subcubic graph without forbidden subgraphs satisfies "
     "8*alpha >= 3n",
     "no forbidden subgraph", false, false, app_forbidden_free, ext_none,
     eval_main38},
    {"technical_main",
     "connected critical, not forbidden: bad implies 24*alpha = 24*lb - 2, "
     "else 24*alpha >= 24*lb; with >= 3 degree-2 vertices, not dangerous and "
     "no bad subgraph, 24*alpha >= 24*lb + 2",
     "connected, critical, not isomorphic to a forbidden graph", false, false,
     app_technical, ext_technical, eval_technical},
    {"cor_2conn",
     "every 2-connected triangle-free subcubic graph satisfies "
     "24*alpha >= 9n - 6, and 24*alpha >= 9n except exactly for the six "
     "forbidden graphs",
     "2-connected", false, false, app_2conn, ext_2conn, eval_2conn},
    {"cor_girth6",
     "every triangle-free subcubic graph of girth >= 6 satisfies "
     "8*alpha >= 3n",
     "girth >= 6", false, false, app_girth6, ext_none, eval_girth6},
    {"thm_triangles",
     "connected critical subcubic, neither K4 nor forbidden: bad or almost "
     "bad implies 24*alpha = 24*lb_T - 2, else 24*alpha >= 24*lb_T",
     "connected, critical, not isomorphic to K4 or a forbidden graph", true,
     false, app_thm_triangles, ext_thm_triangles, eval_thm_triangles},
    {"cor_triangles",
     "connected subcubic without K4 or forbidden subgraphs: "
     "24*alpha >= 24*lb_T - 2B, B = maximum vertex-disjoint packing of bad "
     "or almost-bad subgraphs",
     "connected, no K4 or forbidden subgraph, n <= 40", true, true,
     app_cor_triangles, ext_cor_triangles, eval_cor_triangles},
    {"frac_explore",
     "exploration: is chi_f <= 8/3 for every triangle-free subcubic graph "
     "without forbidden subgraphs? violations are findings, not failures",
     "no forbidden subgraph, n <= 20", false, false, app_frac, ext_frac,
     eval_frac},
};

const ClaimDef& find_claim(const std::string& id) {
  for (const ClaimDef& c : kClaims)
    if (id == c.id) return c;
  throw std::invalid_argument("unknown claim: " + id);
}

void require_universe(const ClaimDef& def, const SimpleGraph& g) {
  if (!max_degree_at_most(g, 3))
    throw std::invalid_argument(std::string("corpus constraint mismatch: ") +
                                def.id + " expects a subcubic corpus");
  if (!def.triangle_corpus && !is_triangle_free(g))
    throw std::invalid_argument(std::string("corpus constraint mismatch: ") +
                                def.id + " expects a triangle-free corpus");
}

ClaimReport make_report(const ClaimDef& def, const SimpleGraph& g,
                        const Caps& caps) {
  Computed c;
  fill_common(g, caps, c);
  def.extras(g, caps, c);
  ClaimVerdict v = def.evaluate(c.q);
  ClaimReport r;
  r.claim_id = def.id;
  r.graph6 = to_graph6(g);
  r.n = g.n;
  r.q = std::move(c.q);
  r.verdict = v.verdict;
  r.tight = v.tight;
  r.note = v.note;
  if (r.verdict != kPass) {
    r.independent_set = std::move(c.mis);
    r.embedding = std::move(c.embedding);
  }
  return r;
}

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  if (const char* env = std::getenv("TFLAB_JOBS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0)
      return static_cast<int>(parsed);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

std::string iso8601_utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

OrderedJson quantities_json(const ClaimQuantities& q) {
  OrderedJson j;
  j["alpha"] = q.alpha;
  j["lb24"] = q.lb24;
  if (q.lb_t24.has_value()) j["lb_t24"] = *q.lb_t24;
  j["kappa"] = q.kappa;
  j["girth"] = q.girth;
  j["connectivity"] = q.connectivity;
  j["flags"] = OrderedJson{{"bad", q.bad},
                           {"dangerous", q.dangerous},
                           {"forbidden_free", q.forbidden_free},
                           {"critical", q.critical}};
  if (q.class_11_30.has_value()) j["class_11_30"] = *q.class_11_30;
  if (q.degree2_count.has_value()) j["degree2_count"] = *q.degree2_count;
  if (q.bad_subgraph_free.has_value())
    j["bad_subgraph_free"] = *q.bad_subgraph_free;
  if (q.bad_or_almost_bad.has_value())
    j["bad_or_almost_bad"] = *q.bad_or_almost_bad;
  if (q.forbidden_match.has_value()) j["forbidden_match"] = *q.forbidden_match;
  if (q.bad_packing.has_value()) j["bad_packing"] = *q.bad_packing;
  if (q.chi_f.has_value()) j["chi_f"] = *q.chi_f;
  return j;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> reg = [] {
    std::vector<ClaimInfo> out;
    for (const ClaimDef& c : kClaims) {
      ClaimInfo info;
      info.id = c.id;
      info.statement = c.statement;
      info.universe =
          c.triangle_corpus ? "subcubic" : "triangle-free subcubic";
      info.restriction = c.restriction;
      info.triangle_corpus = c.triangle_corpus;
      out.push_back(std::move(info));
    }
    return out;
  }();
  return reg;
}

const ClaimInfo& claim_info(const std::string& id) {
  find_claim(id);  // throws for unknown ids
  for (const ClaimInfo& info : claim_registry())
    if (info.id == id) return info;
  throw std::invalid_argument("unknown claim: " + id);  // unreachable
}

ClaimVerdict reevaluate_from_quantities(const std::string& id,
                                        const ClaimQuantities& q) {
  return find_claim(id).evaluate(q);
}

ClaimReport evaluate_claim(const std::string& id, const SimpleGraph& g) {
  const ClaimDef& def = find_claim(id);
  require_universe(def, g);
  Caps caps = caps_for(g.n);
  SubgraphCatalog local;
  if (def.needs_packing) {
    local = bad_or_almost_bad_catalog(std::max(6, g.n));
    caps.packing_catalog = &local;
  }
  if (!def.applies(g, caps))
    throw std::invalid_argument("claim " + id + " does not apply: restriction (" +
                                def.restriction + ") not met");
  return make_report(def, g, caps);
}

CheckSummary check_claim(const std::string& id,
                         const std::vector<SimpleGraph>& corpus,
                         std::vector<ClaimReport>& reports, int jobs) {
  const ClaimDef& def = find_claim(id);
  CheckSummary s;
  s.claim_id = def.id;
  s.universe = def.triangle_corpus ? "subcubic" : "triangle-free subcubic";
  s.restriction = def.restriction;
  s.corpus_size = static_cast<int>(corpus.size());

  int maxn = 0;
  for (const SimpleGraph& g : corpus) {
    require_universe(def, g);
    maxn = std::max(maxn, g.n);
  }

  Caps caps = caps_for(maxn);
  // Build every shared cache once, before the pool.
  enumerate_bad(caps.bad);
  enumerate_dangerous(caps.dangerous);
  enumerate_almost_bad(caps.almost);
  forbidden_in_size_order();
  SubgraphCatalog packing;
  if (def.needs_packing) {
    packing = bad_or_almost_bad_catalog(std::max(6, maxn));
    caps.packing_catalog = &packing;
  }
  if (std::string(def.id) == "fl_connected") {
    for (int n = 22; n <= maxn; n += 30) family_T(n);
    for (int n = 11; n <= maxn; n += 30) family_T_minus(n);
  }

  std::vector<std::optional<ClaimReport>> slots(corpus.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex err_mu;
  std::exception_ptr first_error;

  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= corpus.size() || abort.load()) break;
      try {
        const SimpleGraph& g = corpus[i];
        if (!def.applies(g, caps)) continue;
        slots[i] = make_report(def, g, caps);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
        abort.store(true);
      }
    }
  };

  int njobs = std::min<long long>(resolve_jobs(jobs),
                                  std::max<size_t>(corpus.size(), 1));
  if (njobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < njobs; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  reports.clear();
  for (std::optional<ClaimReport>& slot : slots)
    if (slot.has_value()) reports.push_back(std::move(*slot));
  s.evaluated = static_cast<int>(reports.size());
  s.skipped = s.corpus_size - s.evaluated;

  std::sort(reports.begin(), reports.end(),
            [](const ClaimReport& a, const ClaimReport& b) {
              if (a.n != b.n) return a.n < b.n;
              return a.graph6 < b.graph6;
            });

  for (const ClaimReport& r : reports) {
    if (r.verdict == kPass)
      ++s.pass;
    else if (r.verdict == kException)
      ++s.exception;
    else if (r.verdict == kFinding)
      ++s.finding;
    else
      ++s.fail;
    if (r.tight) ++s.tight;
  }
  return s;
}

std::string report_to_json(const ClaimReport& r) {
  OrderedJson j;
  j["claim"] = r.claim_id;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["quantities"] = quantities_json(r.q);
  j["verdict"] = r.verdict;
  if (r.tight) j["tight"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.verdict != kPass) {
    OrderedJson w;
    w["independent_set"] = r.independent_set;
    if (!r.embedding.empty()) w["embedding"] = r.embedding;
    j["witness"] = w;
  }
  return j.dump();
}

ClaimReport report_from_json(const std::string& line) {
  OrderedJson j = OrderedJson::parse(line);
  ClaimReport r;
  r.claim_id = j.at("claim").get<std::string>();
  r.graph6 = j.at("graph6").get<std::string>();
  r.n = j.at("n").get<int>();
  const OrderedJson& q = j.at("quantities");
  r.q.n = r.n;
  r.q.alpha = q.at("alpha").get<int>();
  r.q.lb24 = q.at("lb24").get<int>();
  if (q.contains("lb_t24")) r.q.lb_t24 = q.at("lb_t24").get<int>();
  r.q.kappa = q.at("kappa").get<long long>();
  r.q.girth = q.at("girth").get<int>();
  r.q.connectivity = q.at("connectivity").get<std::string>();
  const OrderedJson& f = q.at("flags");
  r.q.bad = f.at("bad").get<bool>();
  r.q.dangerous = f.at("dangerous").get<bool>();
  r.q.forbidden_free = f.at("forbidden_free").get<bool>();
  r.q.critical = f.at("critical").get<bool>();
  if (q.contains("class_11_30"))
    r.q.class_11_30 = q.at("class_11_30").get<std::string>();
  if (q.contains("degree2_count"))
    r.q.degree2_count = q.at("degree2_count").get<int>();
  if (q.contains("bad_subgraph_free"))
    r.q.bad_subgraph_free = q.at("bad_subgraph_free").get<bool>();
  if (q.contains("bad_or_almost_bad"))
    r.q.bad_or_almost_bad = q.at("bad_or_almost_bad").get<bool>();
  if (q.contains("forbidden_match"))
    r.q.forbidden_match = q.at("forbidden_match").get<std::string>();
  if (q.contains("bad_packing"))
    r.q.bad_packing = q.at("bad_packing").get<int>();
  if (q.contains("chi_f")) r.q.chi_f = q.at("chi_f").get<std::string>();
  r.verdict = j.at("verdict").get<std::string>();
  r.tight = j.value("tight", false);
  r.note = j.value("note", std::string());
  if (j.contains("witness")) {
    const OrderedJson& w = j.at("witness");
    r.independent_set = w.at("independent_set").get<std::vector<int>>();
    if (w.contains("embedding"))
      r.embedding = w.at("embedding").get<std::vector<int>>();
  }
  return r;
}

std::string summary_to_json(const CheckSummary& s) {
  OrderedJson j;
  j["summary"] = OrderedJson{{"claim", s.claim_id},
                             {"universe", s.universe},
                             {"restriction", s.restriction},
                             {"corpus_size", s.corpus_size},
                             {"evaluated", s.evaluated},
                             {"skipped", s.skipped},
                             {"pass", s.pass},
                             {"exception", s.exception},
                             {"fail", s.fail},
                             {"finding", s.finding},
                             {"tight", s.tight},
                             {"exit", s.exit_code()}};
  return j.dump();
}

void write_report_stream(std::ostream& out, const CheckSummary& s,
                         const std::vector<ClaimReport>& reports,
                         bool timestamp_header) {
  OrderedJson h;
  h["check"] = OrderedJson{{"claim", s.claim_id},
                           {"universe", s.universe},
                           {"restriction", s.restriction}};
  if (timestamp_header) h["check"]["timestamp"] = iso8601_utc_now();
  out << h.dump() << "\n";
  for (const ClaimReport& r : reports) out << report_to_json(r) << "\n";
  out << summary_to_json(s) << "\n";
}

int default_jobs() { return resolve_jobs(0); }

}  // namespace tflab
