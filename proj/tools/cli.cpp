#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fullgraph/bounds.hpp"
#include "fullgraph/constructions.hpp"
#include "fullgraph/designs.hpp"
#include "fullgraph/error.hpp"
#include "fullgraph/oracle.hpp"
#include "fullgraph/patterns.hpp"
#include "fullgraph/serialize.hpp"
#include "fullgraph/verifier.hpp"

namespace fullgraph::cli {
namespace {

constexpr const char* kCacheHelp =
    "Oracle cache directory. Resolution order: this flag, then $FULLGRAPH_CACHE, "
    "then $XDG_CACHE_HOME/fullgraph, then ~/.cache/fullgraph";

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

std::string first_line(const std::string& text) {
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (!line.empty()) return line;
  }
  return {};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << content;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv("FULLGRAPH_CACHE"); env && *env) return std::filesystem::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "fullgraph";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "fullgraph";
  return std::nullopt;
}

struct ConstructArgs {
  std::string theorem;
  std::string patterns;
  std::size_t m = 0, n = 0, k = 0, r = 0, q = 0;
  std::string design_file, out_path, recipe_path;
  bool no_verify = false;
  CLI::Option *m_opt = nullptr, *n_opt = nullptr, *k_opt = nullptr, *r_opt = nullptr, *q_opt = nullptr;
};

std::size_t need(CLI::Option* opt, std::size_t value, const char* name) {
  if (!opt->count()) throw InvalidArgument(std::string("this construction needs --") + name);
  return value;
}

std::vector<Graph> need_patterns(const std::string& spec) {
  if (spec.empty()) throw InvalidArgument("this construction needs --patterns");
  return parse_pattern_list(spec);
}

int cmd_construct(const ConstructArgs& a, std::istream& in, std::ostream& out) {
  const TheoremTag tag = theorem_tag_from_string(a.theorem);
  Construction c;
  std::vector<Graph> check;
  switch (tag) {
    case TheoremTag::cyclic:
      check = need_patterns(a.patterns);
      c = cyclic_full(check);
      break;
    case TheoremTag::design: {
      check = need_patterns(a.patterns);
      ResolvableDesign d;
      if (!a.design_file.empty()) d = design_from_json(Json::parse(slurp(a.design_file, in)));
      else d = affine_plane(need(a.q_opt, a.q, "q (or --design-file)"));
      c = design_full(check, d);
      break;
    }
    case TheoremTag::h_vs_empty:
    case TheoremTag::delta_zero: {
      const auto pats = need_patterns(a.patterns);
      if (pats.size() != 1) throw InvalidArgument("this construction takes exactly one pattern");
      const std::size_t n = need(a.n_opt, a.n, "n");
      if (tag == TheoremTag::h_vs_empty)
        c = h_vs_empty(pats[0], n, a.r_opt->count() ? std::optional<std::size_t>(a.r) : std::nullopt);
      else
        c = delta_zero_construction(pats[0], n);
      check = {pats[0], families::empty(n)};
      break;
    }
    case TheoremTag::star:
    case TheoremTag::complete_bipartite: {
      const std::size_t m = need(a.m_opt, a.m, "m"), n = need(a.n_opt, a.n, "n");
      if (tag == TheoremTag::star) c = star_full(m, n, a.k_opt->count() ? std::optional<std::size_t>(a.k) : std::nullopt);
      else c = complete_bipartite_full(m, n);
      check = {families::star(m), families::empty(n)};
      break;
    }
  }
  if (c.graph.order() != c.recipe.claimed_order) throw InternalError("construction order differs from its recipe");

  const std::string g6 = to_graph6(c.graph);
  if (!a.out_path.empty()) write_file(a.out_path, g6 + "\n");
  if (!a.recipe_path.empty()) write_file(a.recipe_path, to_json(c.recipe).dump(2) + "\n");

  Json j{{"theorem_tag", std::string(to_string(tag))}, {"order", c.graph.order()}, {"graph6", g6}, {"recipe", to_json(c.recipe)}};
  bool ok = true;
  if (!a.no_verify) {
    const FullnessReport rep = is_full(c.graph, check);
    if (!recheck_report(c.graph, rep)) throw InternalError("verifier produced an invalid witness");
    ok = rep.verdict;
    j["verified"] = ok;
  }
  out << j.dump(2) << "\n";
  return ok ? kOk : kVerdictFalse;
}

int cmd_verify(const std::string& host_path, const std::string& patterns, std::istream& in, std::ostream& out) {
  const Graph host = from_graph6(first_line(slurp(host_path, in)));
  const auto pats = parse_pattern_list(patterns);
  const FullnessReport rep = is_full(host, pats);
  if (!recheck_report(host, rep)) throw InternalError("verifier produced an invalid witness");
  out << to_json(rep).dump(2) << "\n";
  return rep.verdict ? kOk : kVerdictFalse;
}

int cmd_bound(const std::vector<std::size_t>& egh, const std::vector<std::size_t>& star, const std::string& patterns,
              CLI::Option* n_opt, std::size_t n, std::ostream& out) {
  const int modes = !egh.empty() + !star.empty() + !patterns.empty();
  if (modes != 1) throw InvalidArgument("bound takes exactly one of --egh M N, --star M N or --patterns");
  std::vector<Graph> pats;
  std::optional<std::size_t> extra;
  if (!egh.empty()) pats = {families::complete(egh[0]), families::empty(egh[1])};
  else if (!star.empty()) pats = {families::star(star[0]), families::empty(star[1])};
  else pats = parse_pattern_list(patterns);
  if (n_opt->count()) {
    if (patterns.empty()) throw InvalidArgument("--n only combines with --patterns");
    extra = n;
  }
  const bounds::BoundSummary s = bounds::summarize(pats, extra);
  out << to_json(s).dump(2) << "\n";
  return s.consistent() ? kOk : kVerdictFalse;
}

struct SearchArgs {
  std::string patterns;
  std::size_t max_order = 9;
  std::size_t lower = 0;
  CLI::Option* lower_opt = nullptr;
  std::string cache_dir;
  bool no_cache = false;
  unsigned threads = 0;
  bool timing = false;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  const auto pats = parse_pattern_list(a.patterns);
  std::size_t lower = a.lower;
  if (!a.lower_opt->count()) {
    const auto lo = bounds::summarize(pats).best_lower();
    lower = lo && *lo > 0 ? static_cast<std::size_t>(*lo) : 0;
  }
  SearchOptions so;
  so.threads = a.threads;
  if (!a.no_cache) so.cache_dir = resolve_cache_dir(a.cache_dir);
  const SearchResult r = f_exact(pats, lower, a.max_order, so);
  err << "search: " << (r.from_cache ? "cache hit" : "computed") << " in " << r.wall_seconds << " s";
  if (so.cache_dir) err << " (cache " << so.cache_dir->string() << ")";
  err << "\n";
  if (r.upper_bound_only) err << "search: no exhaustive certificate above order 9; f is an upper bound only\n";
  out << to_json(r, a.timing).dump(2) << "\n";
  return r.f ? kOk : kVerdictFalse;
}

int cmd_design(std::size_t q, const std::string& out_path, std::ostream& out) {
  const ResolvableDesign d = affine_plane(q);
  const DesignReport rep = validate_design(d);
  if (!rep.valid()) throw InternalError("affine plane of order " + std::to_string(q) + " failed validation");
  const Json j = to_json(d);
  if (out_path.empty()) {
    out << j.dump() << "\n";
  } else {
    write_file(out_path, j.dump() + "\n");
    out << Json{{"q", q}, {"points", d.point_count}, {"classes", d.classes.size()}, {"valid", true}, {"path", out_path}}.dump(2)
        << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify, bound and search graphs in which every vertex lies in an induced copy of each pattern.\n"
               "Patterns: K<m> complete, E<n> edgeless, S<m> star, P<m> path, C<m> cycle, g6:<text>, '+' for disjoint union;\n"
               "lists are comma-separated. Exit codes: 0 ok, 1 verdict false, 2 usage or input error, 3 internal error.",
               "fullgraph"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a full graph and its recipe");
  construct->add_option("--theorem", ca.theorem, "cyclic, design, h_vs_empty, star, complete_bipartite or delta_zero")
      ->required();
  construct->add_option("--patterns", ca.patterns, "Pattern list");
  ca.m_opt = construct->add_option("--m", ca.m, "Star order m");
  ca.n_opt = construct->add_option("--n", ca.n, "Independent set order n");
  ca.k_opt = construct->add_option("--k", ca.k, "Star construction: Y-neighbours per X vertex");
  ca.r_opt = construct->add_option("--r", ca.r, "h_vs_empty: number of U blocks");
  ca.q_opt = construct->add_option("--q", ca.q, "design: affine plane order");
  construct->add_option("--design-file", ca.design_file, "design: JSON design instead of --q ('-' for stdin)");
  construct->add_option("--out", ca.out_path, "Write the graph6 here");
  construct->add_option("--recipe", ca.recipe_path, "Write the recipe JSON here");
  construct->add_flag("--no-verify,!--verify", ca.no_verify, "Skip the fullness check (default: verify)");

  std::string host_path, verify_patterns;
  auto* verify = app.add_subcommand("verify", "Check fullness of a graph6 host");
  verify->add_option("host", host_path, "graph6 file, '-' for stdin")->required();
  verify->add_option("--patterns", verify_patterns, "Pattern list")->required();

  std::vector<std::size_t> egh, star;
  std::string bound_patterns;
  std::size_t bound_n = 0;
  auto* bound = app.add_subcommand("bound", "Evaluate every applicable bound formula");
  bound->add_option("--egh", egh, "Complete K_M versus edgeless E_N")->expected(2);
  bound->add_option("--star", star, "Star S_M versus edgeless E_N")->expected(2);
  bound->add_option("--patterns", bound_patterns, "Pattern list");
  auto* bound_n_opt = bound->add_option("--n", bound_n, "Append an edgeless pattern of this order");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exact minimum order by exhaustive search (orders <= 9)");
  search->add_option("--patterns", sa.patterns, "Pattern list")->required();
  search->add_option("--max-order", sa.max_order, "Upper hint; above 9 the result is an upper bound only")
      ->capture_default_str();
  sa.lower_opt = search->add_option("--lower", sa.lower, "Lower hint (default: best proven lower bound)");
  search->add_option("--cache-dir", sa.cache_dir, kCacheHelp);
  search->add_flag("--no-cache", sa.no_cache, "Neither read nor write the cache");
  search->add_option("--threads", sa.threads, "Worker threads (default: all cores)");
  search->add_flag("--timing", sa.timing, "Include wall time and cache provenance in the JSON");

  std::size_t design_q = 0;
  std::string design_out;
  auto* design = app.add_subcommand("design", "Emit the affine plane of order q as JSON");
  design->add_option("--q", design_q, "Plane order (prime <= 61 or 4, 8, 9, 16, 25, 27)")->required();
  design->add_option("--out", design_out, "Write the design here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(ca, in, out);
    if (verify->parsed()) return cmd_verify(host_path, verify_patterns, in, out);
    if (bound->parsed()) return cmd_bound(egh, star, bound_patterns, bound_n_opt, bound_n, out);
    if (search->parsed()) return cmd_search(sa, out, err);
    if (design->parsed()) return cmd_design(design_q, design_out, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace fullgraph::cli
