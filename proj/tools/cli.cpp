#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "halinstar/cycle_colorer.hpp"
#include "halinstar/errors.hpp"
#include "halinstar/gen.hpp"
#include "halinstar/io.hpp"
#include "halinstar/oracle.hpp"
#include "halinstar/star_decomp.hpp"
#include "halinstar/tree_colorer.hpp"
#include "halinstar/verify.hpp"

namespace halinstar::cli {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Mode mode_or(const std::string& flag, Mode fallback) {
  if (flag.empty()) return fallback;
  const auto m = parse_mode(flag);
  if (!m) throw ParseError(0, "unknown mode '" + flag + "' (generalized|complete|tree)");
  return *m;
}

HalinInstance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string edge_names(const Violation& v, const EdgeIndex& edges) {
  std::string s = to_string(v.kind) + ":";
  for (std::size_t e : v.witness) s += " " + edges[e].key();
  return s;
}

// ---- color ---------------------------------------------------------------

struct RunReport {
  int n = 0;
  int delta = 0;
  int theta = 0;
  std::size_t cycle_length = 0;
  Mode mode = Mode::GeneralizedHalin;
  int k = 0;
  std::string outcome;  // colored | refused | violated
  std::string message;
  std::vector<std::string> violations;
  double millis = 0;

  void print(std::ostream& out, bool json) const {
    if (json) {
      nlohmann::ordered_json j;
      j["n"] = n;
      j["delta"] = delta;
      j["theta"] = theta;
      j["cycle_length"] = cycle_length;
      j["mode"] = to_string(mode);
      j["k"] = k;
      j["outcome"] = outcome;
      if (!message.empty()) j["message"] = message;
      j["violations"] = violations;
      j["millis"] = millis;
      out << j.dump() << '\n';
      return;
    }
    out << "instance: n=" << n << " Delta=" << delta << " theta=" << theta
        << " |C|=" << cycle_length << " mode=" << to_string(mode) << '\n'
        << "k: " << k << '\n'
        << "outcome: " << outcome << '\n';
    if (!message.empty()) out << "message: " << message << '\n';
    for (const auto& v : violations) out << "violation: " << v << '\n';
    out << "time_ms: " << millis << '\n';
  }
};

int cmd_color(const std::string& instance_path, const std::string& lists_path,
              const std::string& mode_flag, const std::string& out_path, std::string dot_path,
              bool force_c5, bool json, std::ostream& out) {
  const auto start = Clock::now();
  const HalinInstance inst = load_instance(instance_path);
  const EdgeIndex edges(inst);
  const ListAssignment lists = parse_lists(read_file(lists_path), edges);
  const DerivedParams params = derive_params(inst);

  RunReport report;
  report.n = inst.tree.size();
  report.delta = params.delta;
  report.theta = params.theta;
  report.cycle_length = inst.cycle.size();
  report.mode = mode_or(mode_flag, inst.mode);
  report.k = params.k_for(report.mode);

  int code = kOk;
  try {
    HalinColoringOptions options;
    options.force_c5 = force_c5;
    const EdgeColoring coloring = color_halin(inst, lists, report.mode, options);
    const SimpleGraph graph = to_simple_graph(inst);
    // Tree mode only colors T; check T alone there.
    SimpleGraph checked = graph;
    EdgeColoring checked_colors = coloring;
    ListAssignment checked_lists = lists;
    if (report.mode == Mode::TreeOnly) {
      checked.edges.resize(edges.tree_edge_count());
      checked_colors.resize(edges.tree_edge_count());
      checked_lists.resize(edges.tree_edge_count());
    }
    for (const Violation& v : verify_star(checked, checked_colors, checked_lists))
      report.violations.push_back(edge_names(v, edges));
    if (report.violations.empty()) {
      report.outcome = "colored";
      if (report.mode == Mode::TreeOnly) {
        std::vector<Color> tree_part(coloring.begin(), coloring.begin() + edges.tree_edge_count());
        HalinInstance tree_only = inst;
        tree_only.cycle.clear();
        write_file(out_path, serialize_coloring(tree_part, EdgeIndex(tree_only)));
      } else {
        write_file(out_path, serialize_coloring(coloring, edges));
      }
      if (dot_path.empty()) dot_path = out_path + ".dot";
      write_file(dot_path, to_dot(inst, coloring));
    } else {
      report.outcome = "violated";
      code = kViolation;
    }
  } catch (const Refusal& e) {
    report.outcome = "refused";
    report.message = e.what();
    code = kRefused;
  } catch (const InternalError& e) {
    report.outcome = "violated";
    report.message = e.what();
    code = kViolation;
  }
  report.millis = ms_since(start);
  report.print(out, json);
  return code;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& instance_path, const std::string& coloring_path,
               const std::string& lists_path, std::ostream& out) {
  HalinInstance inst = load_instance(instance_path);
  EdgeIndex edges(inst);
  const std::string coloring_text = read_file(coloring_path);
  const EdgeColoring coloring = parse_coloring(coloring_text, edges);
  std::optional<ListAssignment> lists;
  if (!lists_path.empty()) lists = parse_lists(read_file(lists_path), edges);

  const auto violations = verify_star(to_simple_graph(inst), coloring, lists);
  for (const Violation& v : violations) out << edge_names(v, edges) << '\n';
  if (violations.empty()) {
    out << "ok: star coloring of " << edges.size() << " edges\n";
    return kOk;
  }
  out << violations.size() << " violation(s)\n";
  return kViolation;
}

// ---- oracle ----------------------------------------------------------------

int cmd_oracle(const std::string& instance_path, int max_colors, int max_edges, std::ostream& out) {
  const HalinInstance inst = load_instance(instance_path);
  const SimpleGraph g = to_simple_graph(inst);
  if (static_cast<int>(g.edges.size()) > max_edges) {
    out << "refused: " << g.edges.size() << " edges exceeds --max-edges " << max_edges << '\n';
    return kRefused;
  }
  const auto start = Clock::now();
  const OracleResult r = star_chromatic_index(g, max_colors);
  if (r.exceeds_bound()) {
    out << "exceeds bound " << max_colors << '\n';
    return kRefused;
  }
  out << "chi'_star = " << *r.index << "  (edges=" << g.edges.size() << ", nodes=" << r.nodes
      << ", time_ms=" << ms_since(start) << ")\n";
  return kOk;
}

// ---- gen -------------------------------------------------------------------

int cmd_gen(GenSpec spec, const std::string& kind, const std::string& out_path,
            const std::string& lists_path, std::ostream& out) {
  const auto parsed = parse_gen_kind(kind);
  if (!parsed) throw ParseError(0, "unknown kind '" + kind + "'");
  spec.kind = *parsed;
  if (spec.kind == GenKind::Cycle) {
    out << "refused: a plain cycle has no instance document\n";
    return kRefused;
  }
  HalinInstance inst;
  try {
    inst = gen_instance(spec);
  } catch (const std::invalid_argument& e) {
    out << "refused: " << e.what() << '\n';
    return kRefused;
  }
  const std::string text = serialize_instance(inst);
  if (out_path.empty() || out_path == "-")
    out << text;
  else
    write_file(out_path, text);

  if (!lists_path.empty()) {
    const int k = derive_params(inst).k_for(inst.mode);
    const int list_size = spec.list_size > 0 ? spec.list_size : k;
    const int palette = spec.palette_size > 0 ? spec.palette_size : 2 * list_size;
    if (list_size > palette) throw ParseError(0, "--list-size exceeds --palette");
    const ListAssignment lists = gen_lists(inst, list_size, palette, derive_seed(spec.seed, 0x115));
    write_file(lists_path, serialize_lists(lists, EdgeIndex(inst)));
  }
  return kOk;
}

// ---- decompose ---------------------------------------------------------------

std::string join(const std::vector<Vertex>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s + "]";
}

int cmd_decompose(const std::string& instance_path, const std::string& mode_flag, bool dump,
                  std::ostream& out) {
  const HalinInstance inst = load_instance(instance_path);
  const Mode mode = mode_or(mode_flag, inst.mode);
  const DerivedParams params = derive_params(inst);
  try {
    const StarDecomposition dec = decompose(inst.tree, params, mode);
    out << "Delta=" << params.delta << " theta=" << params.theta << " k=" << dec.k()
        << " mode=" << to_string(mode) << '\n';
    if (!dump) return kOk;
    for (Vertex v : order_stars(inst.tree)) {
      const StarInfo& s = dec.star(v);
      out << v << " m=" << (s.m_index ? std::to_string(*s.m_index) : "-") << " red=" << join(s.red)
          << " blue=" << join(s.blue) << '\n';
    }
  } catch (const InternalError& e) {
    out << "internal: " << e.what() << '\n';
    return kViolation;
  }
  return kOk;
}

// ---- stress ----------------------------------------------------------------

struct StressRanges {
  int min_n = 5, max_n = 200;
  int min_delta = 3, max_delta = 20;
  int max_depth = 3;
};

struct TrialOutcome {
  bool passed = false;
  std::uint64_t seed = 0;
  std::string note;
};

TrialOutcome stress_trial(GenKind kind, std::uint64_t seed, const StressRanges& r) {
  TrialOutcome t;
  t.seed = seed;
  Rng rng(seed);
  GenSpec spec;
  spec.kind = kind;
  spec.seed = derive_seed(seed, 1);
  spec.n = rng.uniform(r.min_n, std::max(r.min_n, r.max_n));
  spec.delta = rng.uniform(r.min_delta, std::max(r.min_delta, r.max_delta));
  spec.depth = rng.uniform(1, std::max(1, r.max_depth));
  spec.twin_hubs = rng.uniform(0, 1) == 1;
  try {
    if (kind == GenKind::Cycle) {
      if (spec.n == 5) ++spec.n;
      std::vector<ColorList> lists = gen_lists(spec.n, 3, 6, derive_seed(seed, 2));
      const auto colors = star_color_cycle(lists);
      const auto v = verify_star(make_cycle(spec.n), colors, lists);
      t.passed = v.empty();
      if (!t.passed) t.note = "cycle coloring violates the star condition";
      return t;
    }
    if (kind == GenKind::CompleteHalin && spec.depth == 1 && spec.delta == 5) spec.delta = 6;
    if (kind == GenKind::Wheel && spec.n == 6) spec.n = 7;
    if (kind == GenKind::CubicHalin) spec.n = std::min(spec.n, 60);
    const HalinInstance inst = gen_instance(spec);
    const Mode mode = inst.mode;
    const int k = derive_params(inst).k_for(mode);
    const ListAssignment lists = gen_lists(inst, k, 2 * k, derive_seed(seed, 2));
    const EdgeColoring coloring = color_halin(inst, lists, mode);
    SimpleGraph g = to_simple_graph(inst);
    const auto violations = verify_star(g, coloring, lists);
    t.passed = violations.empty();
    if (!t.passed) t.note = describe(violations.front(), g);
  } catch (const std::exception& e) {
    t.note = e.what();
  }
  return t;
}

int thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HALIN_STAR_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return static_cast<int>(n);
}

int cmd_stress(const std::string& kind_name, int trials, std::uint64_t seed, const StressRanges& ranges,
               bool json, std::ostream& out) {
  const auto kind = parse_gen_kind(kind_name);
  if (!kind) throw ParseError(0, "unknown kind '" + kind_name + "'");
  if (trials < 0) throw ParseError(0, "--trials must be non-negative");
  const auto start = Clock::now();

  std::vector<TrialOutcome> results(trials);
  const int workers = std::min(thread_cap(), std::max(1, trials));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < trials; i += workers) results[i] = stress_trial(*kind, derive_seed(seed, i), ranges);
    });
  for (auto& t : pool) t.join();

  const int passed = static_cast<int>(std::count_if(results.begin(), results.end(),
                                                    [](const TrialOutcome& t) { return t.passed; }));
  const auto first_fail = std::find_if(results.begin(), results.end(),
                                       [](const TrialOutcome& t) { return !t.passed; });
  const double millis = ms_since(start);
  if (json) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name;
    j["trials"] = trials;
    j["passed"] = passed;
    j["failed"] = trials - passed;
    if (first_fail != results.end()) {
      j["first_failing_trial"] = first_fail - results.begin();
      j["first_failing_seed"] = first_fail->seed;
      j["note"] = first_fail->note;
    }
    j["millis"] = millis;
    out << j.dump() << '\n';
  } else {
    out << "kind                 trials  passed  failed  time_ms\n";
    out << kind_name << std::string(kind_name.size() < 21 ? 21 - kind_name.size() : 1, ' ') << trials
        << "\t" << passed << "\t" << trials - passed << "\t" << static_cast<long long>(millis) << '\n';
    if (first_fail != results.end())
      out << "first failure: trial " << (first_fail - results.begin()) << " seed " << first_fail->seed
          << ": " << first_fail->note << '\n';
  }
  return passed == trials ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"List star edge coloring of generalized Halin graphs", "halin-star"};
  app.require_subcommand(1);

  std::string instance_path, lists_path, coloring_path, mode_flag, out_path, dot_path, kind_name;
  bool force_c5 = false, json = false, dump = false, allow_c5 = false;
  int max_colors = 12, max_edges = 16, trials = 100;
  std::uint64_t seed = 1;
  GenSpec spec;
  StressRanges ranges;

  auto* color = app.add_subcommand("color", "Color an instance from edge lists and verify the result");
  color->add_option("instance", instance_path, "instance file")->required();
  color->add_option("lists", lists_path, "list assignment JSON")->required();
  color->add_option("--mode", mode_flag, "generalized|complete|tree (default: the instance's)");
  color->add_option("-o,--out", out_path, "coloring JSON output")->required();
  color->add_option("--dot", dot_path, "DOT output (default: <out>.dot)");
  color->add_flag("--force-c5", force_c5, "attempt |C| = 5 anyway");
  color->add_flag("--json", json, "machine-readable report");

  auto* verify = app.add_subcommand("verify", "Check a coloring for star-coloring violations");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("coloring", coloring_path)->required();
  verify->add_option("--lists", lists_path, "also check colors against these lists");

  auto* oracle = app.add_subcommand("oracle", "Exact star chromatic index by exhaustive search");
  oracle->add_option("instance", instance_path)->required();
  oracle->add_option("--max-colors", max_colors, "search bound");
  oracle->add_option("--max-edges", max_edges, "refuse larger graphs");

  auto* gen = app.add_subcommand("gen", "Generate a seeded instance (and optionally lists)");
  gen->add_option("--kind", kind_name, "generalized-halin|complete-halin|cubic-halin|tree|wheel")
      ->required();
  gen->add_option("--n", spec.n, "size parameter");
  gen->add_option("--delta", spec.delta, "target Delta(T)");
  gen->add_option("--depth", spec.depth, "leaf depth (complete-halin)");
  gen->add_option("--seed", spec.seed);
  gen->add_option("-o,--out", out_path, "instance output (default: stdout)");
  gen->add_option("--lists-out", lists_path, "write a random list assignment here");
  gen->add_option("--list-size", spec.list_size, "default: k for the instance's mode");
  gen->add_option("--palette", spec.palette_size, "default: 2 * list size");
  gen->add_flag("--allow-c5", allow_c5, "do not steer away from |C| = 5");
  gen->add_flag("--twin-hubs", spec.twin_hubs, "give a root child degree Delta as well");

  auto* dec = app.add_subcommand("decompose", "Show the red/blue split of every full star");
  dec->add_option("instance", instance_path)->required();
  dec->add_option("--mode", mode_flag);
  dec->add_flag("--dump", dump, "one line per star: center, m, red, blue");

  auto* stress = app.add_subcommand("stress", "gen -> color -> verify loop");
  stress->add_option("--kind", kind_name)->required();
  stress->add_option("--trials", trials);
  stress->add_option("--seed", seed);
  stress->add_option("--min-n", ranges.min_n);
  stress->add_option("--max-n", ranges.max_n);
  stress->add_option("--min-delta", ranges.min_delta);
  stress->add_option("--max-delta", ranges.max_delta);
  stress->add_option("--max-depth", ranges.max_depth);
  stress->add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kIoError;
  }

  try {
    if (*color) return cmd_color(instance_path, lists_path, mode_flag, out_path, dot_path, force_c5, json, out);
    if (*verify) return cmd_verify(instance_path, coloring_path, lists_path, out);
    if (*oracle) return cmd_oracle(instance_path, max_colors, max_edges, out);
    if (*gen) {
      spec.exclude_c5 = !allow_c5;
      return cmd_gen(spec, kind_name, out_path, lists_path, out);
    }
    if (*dec) return cmd_decompose(instance_path, mode_flag, dump, out);
    if (*stress) return cmd_stress(kind_name, trials, seed, ranges, json, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kIoError;
}

}  // namespace halinstar::cli
