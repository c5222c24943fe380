// Command-line front end: graph generation, exact independence numbers,
// family catalogs, claim sweeps, fractional chromatic numbers, and
// single-graph classification dossiers.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tflab/alpha.hh"
#include "tflab/critical.hh"
#include "tflab/enumerate.hh"
#include "tflab/families.hh"
#include "tflab/frac.hh"
#include "tflab/graph6.hh"
#include "tflab/iso.hh"
#include "tflab/verify.hh"

using namespace tflab;
using OrderedJson = nlohmann::ordered_json;

namespace {

// Graphs from positional graph6 strings, a file, or stdin (one per line).
std::vector<SimpleGraph> read_graphs(const std::vector<std::string>& args,
                                     const std::string& input_path) {
  std::vector<SimpleGraph> out;
  if (!args.empty()) {
    for (const std::string& a : args) out.push_back(parse_graph6(a));
    return out;
  }
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!input_path.empty()) {
    file.open(input_path);
    if (!file) throw std::runtime_error("cannot open " + input_path);
    in = &file;
  }
  IngestResult res = ingest_graph6(*in);
  if (!res.errors.empty())
    throw std::runtime_error("input line " +
                             std::to_string(res.errors.front().line) + ": " +
                             res.errors.front().message);
  for (IngestItem& item : res.items) out.push_back(std::move(item.g));
  return out;
}

int run_gen(const GenConstraints& c, int jobs) {
  generate(c, [](const SimpleGraph& g) { std::cout << to_graph6(g) << "\n"; },
           jobs);
  return 0;
}

int run_alpha(const std::vector<std::string>& args, const std::string& input,
              bool witness) {
  for (const SimpleGraph& g : read_graphs(args, input)) {
    MisResult r = alpha(g);
    std::cout << r.size;
    if (witness) {
      std::cout << '\t';
      for (size_t i = 0; i < r.witness.size(); ++i)
        std::cout << (i ? " " : "") << r.witness[i];
    }
    std::cout << "\n";
  }
  return 0;
}

int run_families(const std::string& family, int max_n,
                 const std::string& traces_path) {
  if (family == "forbidden") {
    if (!traces_path.empty())
      throw std::runtime_error(
          "the forbidden graphs are fixtures, not constructions; no traces");
    for (const auto& [name, g] : forbidden_in_size_order())
      if (max_n < 0 || g.n <= max_n) std::cout << to_graph6(g) << "\n";
    return 0;
  }
  if (max_n < 0)
    throw std::runtime_error("--max-n is required for family " + family);
  const std::vector<CatalogEntry>* catalog = nullptr;
  if (family == "bad")
    catalog = &enumerate_bad(max_n);
  else if (family == "dangerous")
    catalog = &enumerate_dangerous(max_n);
  else if (family == "almost-bad")
    catalog = &enumerate_almost_bad(max_n);
  else if (family == "T")
    catalog = &family_T(max_n);
  else if (family == "Tminus")
    catalog = &family_T_minus(max_n);
  else
    throw std::runtime_error("unknown family " + family);
  if (traces_path.empty()) {
    for (const CatalogEntry& e : *catalog) std::cout << to_graph6(e.g) << "\n";
  } else {
    std::ofstream traces(traces_path);
    if (!traces) throw std::runtime_error("cannot open " + traces_path);
    export_catalog(*catalog, std::cout, traces);
  }
  return 0;
}

int run_check(const std::string& claim, int max_n, const std::string& input,
              bool cubic, int min_girth, int jobs,
              const std::string& output_path, bool no_timestamp) {
  const ClaimInfo& info = claim_info(claim);  // throws for unknown claims
  std::vector<SimpleGraph> corpus;
  if (!input.empty()) {
    corpus = read_graphs({}, input);
  } else if (max_n >= 0) {
    GenConstraints c;
    c.max_n = max_n;
    c.cubic_only = cubic;
    c.min_girth = min_girth;
    c.triangle_free = !info.triangle_corpus;
    corpus = generate_all(c, jobs > 0 ? jobs : default_jobs());
  } else {
    throw std::runtime_error("check needs a corpus: --max-n K or --input FILE");
  }

  std::vector<ClaimReport> reports;
  CheckSummary s = check_claim(claim, corpus, reports, jobs);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) throw std::runtime_error("cannot open " + output_path);
    out = &file;
  }
  write_report_stream(*out, s, reports, !no_timestamp);

  std::cerr << "claim " << s.claim_id << ": corpus " << s.corpus_size
            << ", evaluated " << s.evaluated << " (" << s.skipped
            << " outside restriction: " << s.restriction << "), pass "
            << s.pass << ", exception-as-predicted " << s.exception
            << ", FAIL " << s.fail << ", findings " << s.finding << ", tight "
            << s.tight << "\n";
  return s.exit_code();
}

int run_fracchi(const std::vector<std::string>& args, const std::string& input,
                bool brute, int cap) {
  for (const SimpleGraph& g : read_graphs(args, input)) {
    Rational v = brute ? fractional_chromatic_bruteforce(g)
                       : fractional_chromatic(g, cap);
    std::cout << v.str() << "\n";
  }
  return 0;
}

// Catalog membership only when the vertex count can occur in the family and
// stays within the catalog's documented completeness cap; nullopt = not
// decided here.
std::optional<bool> family_flag(const SimpleGraph& g, int modulus, int min_n,
                                int cap,
                                bool (*test)(const SimpleGraph&, int)) {
  if (g.n < min_n || (g.n - min_n) % modulus != 0) return false;
  if (g.n > cap) return std::nullopt;
  return test(g, std::max(min_n, g.n));
}

bool almost_bad_size_possible(int n) {
  // Sizes are 8k - 2 and 8k - 4 for bad sizes 8k.
  return n >= 4 && (n % 8 == 4 || n % 8 == 6);
}

void put_optional_flag(OrderedJson& j, const char* key,
                       const std::optional<bool>& v) {
  if (v.has_value())
    j[key] = *v;
  else
    j[key] = nullptr;  // beyond the catalog cap: undecided
}

int run_trace(const std::string& g6) {
  SimpleGraph g = parse_graph6(g6);
  OrderedJson j;
  j["graph6"] = to_graph6(g);
  j["n"] = g.n;
  j["m"] = g.m;
  j["degree_counts"] = degree_counts(g);
  bool subcubic = max_degree_at_most(g, 3);
  bool tf = is_triangle_free(g);
  bool connected = is_connected(g);
  j["subcubic"] = subcubic;
  j["triangle_free"] = tf;
  j["connected"] = connected;
  int gi = girth(g);
  j["girth"] = (gi == kGirthInfinite) ? 0 : gi;
  j["connectivity"] = to_string(connectivity_class(g));
  MisResult mis = alpha(g);
  j["alpha"] = mis.size;
  j["independent_set"] = mis.witness;
  j["kappa"] = 30 * mis.size - 11 * g.n;
  if (subcubic) j["lb24"] = lb(g).num;
  if (subcubic && connected && g.n > 0) j["lb_t24"] = lb_T(g).num;
  j["critical"] = is_critical(g);
  if (auto hit = contains_any_forbidden(g))
    j["contains_forbidden"] = *hit;
  else
    j["contains_forbidden"] = nullptr;

  OrderedJson fams;
  std::optional<bool> in_bad, in_dangerous, in_almost, in_t, in_tminus;
  ConstructionTrace trace;
  bool have_trace = false;
  auto lookup = [&](const std::vector<CatalogEntry>& catalog) {
    std::string key = canonical_key(g);
    for (const CatalogEntry& e : catalog)
      if (e.g.n == g.n && canonical_key(e.g) == key) {
        trace = e.trace;
        have_trace = true;
        return true;
      }
    return false;
  };
  if (subcubic && tf) {
    in_bad = family_flag(g, 8, 8, 32, is_bad);
    if (in_bad == true) lookup(enumerate_bad(std::max(8, g.n)));
    in_dangerous = family_flag(g, 8, 5, 29, is_dangerous);
    if (in_dangerous == true) lookup(enumerate_dangerous(std::max(5, g.n)));
    if (almost_bad_size_possible(g.n) && g.n <= 28) {
      in_almost = is_almost_bad(g, std::max(6, g.n));
      if (*in_almost) lookup(enumerate_almost_bad(std::max(6, g.n)));
    } else {
      in_almost = almost_bad_size_possible(g.n) ? std::optional<bool>()
                                                : std::optional<bool>(false);
    }
    in_t = std::optional<bool>(false);
    in_tminus = std::optional<bool>(false);
    if (g.n >= 22 && (g.n - 22) % 30 == 0) {
      if (g.n <= 52) {
        std::string key = canonical_key(g);
        in_t = false;
        for (const CatalogEntry& e : family_T(g.n))
          if (canonical_key(e.g) == key) in_t = true;
        if (*in_t) lookup(family_T(g.n));
      } else {
        in_t = std::nullopt;
      }
    }
    if (g.n >= 11 && (g.n - 11) % 30 == 0) {
      if (g.n <= 41) {
        std::string key = canonical_key(g);
        in_tminus = false;
        for (const CatalogEntry& e : family_T_minus(g.n))
          if (canonical_key(e.g) == key) in_tminus = true;
        if (*in_tminus) lookup(family_T_minus(g.n));
      } else {
        in_tminus = std::nullopt;
      }
    }
  } else {
    // Family members are all triangle-free and subcubic except the almost-bad
    // graphs, which may contain triangles.
    in_bad = in_dangerous = in_t = in_tminus = std::optional<bool>(false);
    if (subcubic && almost_bad_size_possible(g.n)) {
      if (g.n <= 28) {
        in_almost = is_almost_bad(g, std::max(6, g.n));
        if (*in_almost) lookup(enumerate_almost_bad(std::max(6, g.n)));
      }  // else: beyond the catalog cap, leave undecided
    } else {
      in_almost = false;
    }
  }
  put_optional_flag(fams, "bad", in_bad);
  put_optional_flag(fams, "dangerous", in_dangerous);
  put_optional_flag(fams, "almost_bad", in_almost);
  put_optional_flag(fams, "in_T", in_t);
  put_optional_flag(fams, "in_T_minus", in_tminus);
  j["families"] = fams;

  if (subcubic && tf && connected && g.n > 0)
    j["class_11_30"] = to_string(classify_11_30(g));
  if (have_trace) j["construction"] = OrderedJson::parse(trace_to_json(trace));
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification laboratory for independence bounds in "
               "triangle-free subcubic graphs"};
  app.require_subcommand(1);

  // gen
  GenConstraints gen_c;
  bool gen_triangles = false;
  int gen_jobs = 0;
  CLI::App* gen = app.add_subcommand(
      "gen", "stream one graph6 line per isomorphism class");
  gen->add_option("--max-n", gen_c.max_n, "largest vertex count")->required();
  gen->add_flag("--cubic", gen_c.cubic_only, "3-regular graphs only");
  gen->add_flag("--allow-triangles", gen_triangles,
                "drop the triangle-freeness constraint");
  gen->add_option("--min-girth", gen_c.min_girth, "minimum girth");
  gen->add_option("--min-connectivity", gen_c.min_connectivity,
                  "1, 2 or 3 (default 1)");
  gen->add_flag("--critical", gen_c.critical_only,
                "keep only graphs whose every edge is critical");
  gen->add_option("--cap", gen_c.cap, "raise the built-in size cap");
  gen->add_option("--jobs,-j", gen_jobs, "worker threads (default: TFLAB_JOBS)");

  // alpha
  std::vector<std::string> alpha_args;
  std::string alpha_input;
  bool alpha_witness = false;
  CLI::App* al = app.add_subcommand(
      "alpha", "maximum independent set size per input graph");
  al->add_option("graph6", alpha_args, "graph6 strings (default: stdin)");
  al->add_option("--input", alpha_input, "read graph6 lines from a file");
  al->add_flag("--witness", alpha_witness, "append one maximum set");

  // families
  std::string fam_name, fam_traces;
  int fam_max_n = -1;
  CLI::App* fam = app.add_subcommand(
      "families", "catalog of a named family as graph6 lines");
  fam->add_option("family", fam_name, "bad|dangerous|almost-bad|forbidden|T|Tminus")
      ->required()
      ->check(CLI::IsMember(
          {"bad", "dangerous", "almost-bad", "forbidden", "T", "Tminus"}));
  fam->add_option("--max-n", fam_max_n,
                  "catalog completeness bound (required except for forbidden)");
  fam->add_option("--traces", fam_traces,
                  "also write construction traces (JSON lines) to FILE");

  // check
  std::string check_claim_id, check_input, check_output;
  int check_max_n = -1, check_min_girth = 0, check_jobs = 0;
  bool check_cubic = false, check_no_ts = false;
  CLI::App* chk = app.add_subcommand(
      "check", "sweep a corpus with one registered claim");
  chk->add_option("claim", check_claim_id, "registered claim id")->required();
  chk->add_option("--max-n", check_max_n, "generate the corpus up to this size");
  chk->add_option("--input", check_input, "read the corpus from a graph6 file")
      ->excludes("--max-n");
  chk->add_flag("--cubic", check_cubic, "generated corpus: 3-regular only");
  chk->add_option("--min-girth", check_min_girth,
                  "generated corpus: minimum girth");
  chk->add_option("--jobs,-j", check_jobs,
                  "worker threads (default: TFLAB_JOBS, then hardware)");
  chk->add_option("--output", check_output, "write the report stream to FILE");
  chk->add_flag("--no-timestamp", check_no_ts,
                "omit the timestamp for byte-identical re-runs");

  // fracchi
  std::vector<std::string> frac_args;
  std::string frac_input;
  bool frac_brute = false;
  int frac_cap = 20;
  CLI::App* fr = app.add_subcommand(
      "fracchi", "exact fractional chromatic number per input graph");
  fr->add_option("graph6", frac_args, "graph6 strings (default: stdin)");
  fr->add_option("--input", frac_input, "read graph6 lines from a file");
  fr->add_flag("--brute", frac_brute,
               "full-enumeration LP instead of column generation (n <= 10)");
  fr->add_option("--cap", frac_cap, "size cap for column generation");

  // trace
  std::string trace_g6;
  CLI::App* tr = app.add_subcommand(
      "trace", "classification dossier for one graph");
  tr->add_option("graph6", trace_g6, "the graph to classify")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version are not usage errors
  }

  try {
    if (gen->parsed()) {
      gen_c.triangle_free = !gen_triangles;
      return run_gen(gen_c, gen_jobs > 0 ? gen_jobs : default_jobs());
    }
    if (al->parsed()) return run_alpha(alpha_args, alpha_input, alpha_witness);
    if (fam->parsed()) return run_families(fam_name, fam_max_n, fam_traces);
    if (chk->parsed())
      return run_check(check_claim_id, check_max_n, check_input, check_cubic,
                       check_min_girth, check_jobs, check_output, check_no_ts);
    if (fr->parsed()) return run_fracchi(frac_args, frac_input, frac_brute, frac_cap);
    if (tr->parsed()) return run_trace(trace_g6);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
