// Claim registry and corpus sweeps: evaluates each registered claim's
// predicate per graph and renders machine-readable JSON-lines reports with
// counterexample witnesses.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tflab/graph.hh"

namespace tflab {

// Everything a claim predicate may depend on.  Verdicts are pure functions
// of these fields (plus n), so every report line can be re-checked from its
// own content without re-examining the graph.
struct ClaimQuantities {
  int n = 0;
  int alpha = 0;
  int lb24 = 0;                 // 24 * lb
  std::optional<int> lb_t24;    // 24 * lb_T; connected graphs only
  long long kappa = 0;          // 30*alpha - 11n
  int girth = 0;                // 0 encodes "no cycle"
  std::string connectivity;     // "disconnected", "1", "2", ">=3"
  bool bad = false;
  bool dangerous = false;
  bool forbidden_free = false;  // no forbidden graph as a subgraph
  bool critical = false;
  // Claim-specific extras; absent fields are simply not reported.
  std::optional<std::string> class_11_30;     // fl_connected
  std::optional<int> degree2_count;           // technical_main
  std::optional<bool> bad_subgraph_free;      // technical_main
  std::optional<bool> bad_or_almost_bad;      // thm_triangles
  std::optional<std::string> forbidden_match; // cor_2conn: iso-match name
  std::optional<int> bad_packing;             // cor_triangles: B(G)
  std::optional<std::string> chi_f;           // frac_explore: exact rational
};

// Outcome of one predicate evaluation.  `tight` marks informational
// equality at the claim's bound; `note` names the matched exception or the
// violated inequality.
struct ClaimVerdict {
  std::string verdict;  // "pass" | "exception-as-predicted" | "FAIL" | "finding"
  bool tight = false;
  std::string note;
};

// One JSON line of a report stream.  Witness payloads (a maximum
// independent set certifying alpha, and an embedding when an isomorphism
// match is the point) are attached to every non-pass row.
struct ClaimReport {
  std::string claim_id;
  std::string graph6;
  int n = 0;
  ClaimQuantities q;
  std::string verdict;
  bool tight = false;
  std::string note;
  std::vector<int> independent_set;
  std::vector<int> embedding;
};

// Registry entry.  `universe` is the corpus precondition (violations are
// errors, not skips); `restriction` is the claim's automatic corpus
// narrowing (filtered graphs are counted, not evaluated);
// `triangle_corpus` marks claims whose natural corpus allows triangles.
struct ClaimInfo {
  std::string id;
  std::string statement;
  std::string universe;
  std::string restriction;
  bool triangle_corpus = false;
};

struct CheckSummary {
  std::string claim_id;
  std::string universe;
  std::string restriction;
  int corpus_size = 0;
  int evaluated = 0;
  int skipped = 0;  // filtered out by the restriction
  int pass = 0;
  int exception = 0;
  int fail = 0;
  int finding = 0;
  int tight = 0;
  int exit_code() const { return fail > 0 ? 1 : 0; }
};

// The registered claims in their canonical order.
const std::vector<ClaimInfo>& claim_registry();
// Throws std::invalid_argument for an unknown id.
const ClaimInfo& claim_info(const std::string& id);

// Re-derives the verdict from recorded quantities alone; by construction
// this is the same pure function the sweep used.
ClaimVerdict reevaluate_from_quantities(const std::string& id,
                                        const ClaimQuantities& q);

// Evaluates one claim on one graph.  Throws std::invalid_argument when the
// graph violates the claim's universe ("corpus constraint mismatch") or
// does not meet its restriction.
ClaimReport evaluate_claim(const std::string& id, const SimpleGraph& g);

// Sweeps a corpus: validates the universe, filters by the restriction,
// evaluates the rest on a worker pool, and returns reports sorted by
// (n, graph6) -- identical for any job count.  jobs <= 0 resolves the
// TFLAB_JOBS environment variable, then hardware concurrency.
CheckSummary check_claim(const std::string& id,
                         const std::vector<SimpleGraph>& corpus,
                         std::vector<ClaimReport>& reports, int jobs = 0);

// JSON-lines rendering; to_json(from_json(line)) == line.
std::string report_to_json(const ClaimReport& r);
ClaimReport report_from_json(const std::string& line);
std::string summary_to_json(const CheckSummary& s);

// Full stream: one header line (carrying the timestamp unless suppressed),
// one line per report, one summary line.  With the timestamp suppressed,
// re-runs on the same corpus and config are byte-identical.
void write_report_stream(std::ostream& out, const CheckSummary& s,
                         const std::vector<ClaimReport>& reports,
                         bool timestamp_header = true);

// TFLAB_JOBS when set to a positive integer, else hardware concurrency.
int default_jobs();

}  // namespace tflab
