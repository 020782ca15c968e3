#include "sumset/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "sumset/cyclic.hpp"
#include "sumset/errors.hpp"
#include "sumset/generators.hpp"
#include "sumset/point_io.hpp"
#include "sumset/report.hpp"
#include "sumset/select.hpp"
#include "sumset/structure.hpp"

namespace sumset::cli {

namespace {

struct Output {
  bool decimal = false;
  bool json = false;
};

struct GenOptions {
  std::string family;
  std::size_t d = 2;
  Coord n_len = 3;  // --N
  std::size_t count = 20;
  Coord box = 10;
  std::uint64_t seed = 0;
  std::uint64_t p = 101, m = 1;
  std::optional<std::uint64_t> span;
  std::int64_t start = 0;
  std::uint64_t length = 0;
  std::uint64_t fiber = 0;
  std::string out_path;
};

struct SelectOptions {
  std::string input, input_b, mode = "general";
  SelectionBudget budget;
  std::uint64_t seed = 0;
  bool dedupe = false;
};

struct VerifyOptions {
  std::string check, input, input_b, manifest;
  int k = 2;
  std::uint64_t p = 13, m = 1, max_size = 6;
  bool exhaustive = false;
  bool dedupe = false;
  std::optional<std::int64_t> i_start, j_start;
  std::optional<std::uint64_t> i_length, j_length;
};

struct SimOptions {
  std::string input_a, input_b;
  std::uint64_t t_count = 1, c = 1, trials = 100, seed = 0;
  bool dedupe = false;
};

// Digest of a parameter string plus the bytes of every input file.
std::string digest_inputs(const std::string& params, const std::vector<std::string>& paths) {
  std::string material = params;
  for (const auto& path : paths) material += "\n" + sha256_hex(read_file(path));
  return sha256_hex(material);
}

void emit(const Report& r, const Output& o, std::ostream& out) {
  out << r.records(o.decimal);
  if (o.json) out << r.json() << '\n';
}

int exit_for(const Report& r) { return r.verdict == Verdict::kFail ? kExitCheckFailed : kExitOk; }

PointSet load_points(const std::string& path, bool dedupe, std::ostream& err) {
  auto parsed = read_point_set(path, ParseOptions{dedupe});
  for (const auto& w : parsed.warnings) err << path << ": " << w << '\n';
  return std::move(parsed.set);
}

CyclicSet load_cyclic(const std::string& path, bool dedupe, std::ostream& err) {
  auto parsed = read_cyclic_set(path, ParseOptions{dedupe});
  for (const auto& w : parsed.warnings) err << path << ": " << w << '\n';
  return std::move(parsed.set);
}

// Shortest arc of Z_p containing the support of a.
IntervalWindow tight_window(const CyclicSet& a) {
  const auto profile = fiber_profile(a);
  const std::uint64_t p = a.space().p();
  std::vector<std::uint64_t> occupied;
  for (std::uint64_t x = 0; x < p; ++x) {
    if (profile[x]) occupied.push_back(x);
  }
  if (occupied.empty()) return {0, 0};
  // the largest gap between consecutive occupied residues is left outside
  std::uint64_t best_gap = 0, best_start = occupied.front();
  for (std::size_t i = 0; i < occupied.size(); ++i) {
    const std::uint64_t next = occupied[(i + 1) % occupied.size()];
    const std::uint64_t gap = occupied.size() == 1 ? p : (next + p - occupied[i]) % p;
    if (gap > best_gap) {
      best_gap = gap;
      best_start = next;
    }
  }
  return {static_cast<std::int64_t>(best_start), p - best_gap};
}

// ---------------------------------------------------------------------------

int cmd_gen(const GenOptions& g, std::ostream& out) {
  std::string text;
  if (g.family == "chr") {
    text = format_point_set(gen_chr(g.d, g.n_len));
  } else if (g.family == "grid") {
    text = format_point_set(gen_grid(g.d, g.n_len));
  } else if (g.family == "simplex") {
    text = format_point_set(gen_simplex(g.d));
  } else if (g.family == "random-lattice") {
    text = format_point_set(gen_random_lattice(g.d, g.count, g.box, g.seed));
  } else if (g.family == "random-cyclic") {
    text = format_cyclic_set(gen_random_cyclic(CyclicProductSpace(g.p, g.m), g.count, g.seed, g.span));
  } else {
    text = format_cyclic_set(CyclicSet::interval(CyclicProductSpace(g.p, g.m), g.start, g.length, g.fiber));
  }
  if (g.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(g.out_path);
    if (!f) throw ParseError("cannot write " + g.out_path, 0);
    f << text;
  }
  return kExitOk;
}

Report witness_report(const std::string& command, const PointSet& a, const TranslateWitness& w) {
  Report r(command);
  r.add_count("size_a", a.size());
  r.add_count("selected_size", w.selected.size());
  r.add_count("achieved", w.achieved);
  r.add("target", w.target);
  r.add("slack", static_cast<std::int64_t>(w.achieved) - w.target);
  r.verdict = w.meets_target() ? Verdict::kPass : Verdict::kFail;
  r.witness = w.to_string();
  return r;
}

int cmd_select(const SelectOptions& s, const Output& o, std::ostream& out, std::ostream& err) {
  const PointSet a = load_points(s.input, s.dedupe, err);
  std::vector<std::string> paths{s.input};
  if (!s.input_b.empty()) paths.push_back(s.input_b);
  std::ostringstream params;
  params << "select mode=" << s.mode << " sample=" << s.budget.sample_size << " rounds=" << s.budget.rounds
         << " greedy=" << s.budget.max_greedy << " directions=" << s.budget.direction_budget << " seed=" << s.seed;
  const std::string digest = digest_inputs(params.str(), paths);

  Report r;
  int code = kExitOk;
  if (s.mode == "triple1d") {
    const PointSet b = s.input_b.empty() ? a : load_points(s.input_b, s.dedupe, err);
    r = witness_report("select triple1d", a, select_triple_1d(a, b));
  } else if (s.mode == "line-covered") {
    const std::size_t n = a.size();
    std::size_t budget = s.budget.direction_budget;
    if (budget == 0) budget = n <= 512 ? std::max<std::size_t>(1, n * (n - 1) / 2) : 4096;
    const LineCover cover = best_line_cover(a, budget, s.seed);
    r = witness_report("select line-covered", a, select_line_covered(a, cover));
    r.add_count("lines", cover.r());
    r.add_count("size_bound", 3 * a.dim() * cover.r() * cover.r());
    r.seed = s.seed;
  } else {
    Rng rng(s.seed);
    try {
      r = witness_report("select general", a, select_general(a, s.budget, rng));
    } catch (const CascadeExhausted& e) {
      err << "cascade exhausted: " << e.what() << '\n';
      r = witness_report("select general", a, e.best());
      r.verdict = Verdict::kFail;
      code = kExitExhausted;
    }
    r.seed = s.seed;
  }
  r.inputs_digest = digest;
  emit(r, o, out);
  return code != kExitOk ? code : exit_for(r);
}

Report verify_points(const VerifyOptions& v, const std::string& path_a, const std::string& path_b,
                     std::ostream& err) {
  const PointSet a = load_points(path_a, v.dedupe, err);
  const PointSet b = path_b.empty() ? a : load_points(path_b, v.dedupe, err);
  if (v.check == "freiman") return check_freiman(a);
  if (v.check == "ruzsa") return check_ruzsa_asymmetric(a, b);
  if (v.check == "pr") return check_plunnecke_ruzsa(a, b, v.k);
  // m2: both covers along the best direction for A
  const std::size_t n = a.size();
  const LineCover cover_a = best_line_cover(a, n <= 512 ? std::max<std::size_t>(1, n * (n - 1) / 2) : 4096, 0);
  return check_m2_inequality(a, b, cover_a, line_cover(b, cover_a.dir));
}

Report verify_cyclic(const VerifyOptions& v, const std::string& path_a, const std::string& path_b,
                     std::ostream& err) {
  const CyclicSet a = load_cyclic(path_a, v.dedupe, err);
  const CyclicSet b = path_b.empty() ? a : load_cyclic(path_b, v.dedupe, err);
  if (v.check == "cauchy-davenport") return cauchy_davenport_check(a, b);
  if (v.check == "popular-nesting") return popular_nesting_check(a, b);
  const IntervalWindow ta = tight_window(a), tb = tight_window(b);
  const IntervalWindow i{v.i_start.value_or(ta.start), v.i_length.value_or(ta.length)};
  const IntervalWindow j{v.j_start.value_or(tb.start), v.j_length.value_or(tb.length)};
  return interval_triple_select(a, b, i, j).report;
}

Report verify_one(const VerifyOptions& v, const std::string& path_a, const std::string& path_b,
                  std::ostream& err) {
  std::ostringstream params;
  params << "verify check=" << v.check << " k=" << v.k;
  if (v.i_start) params << " istart=" << *v.i_start;
  if (v.i_length) params << " ilen=" << *v.i_length;
  if (v.j_start) params << " jstart=" << *v.j_start;
  if (v.j_length) params << " jlen=" << *v.j_length;
  std::vector<std::string> paths{path_a};
  if (!path_b.empty()) paths.push_back(path_b);
  const bool cyclic = v.check == "cauchy-davenport" || v.check == "xs" || v.check == "popular-nesting";
  Report r = cyclic ? verify_cyclic(v, path_a, path_b, err) : verify_points(v, path_a, path_b, err);
  r.command = "verify " + v.check;
  r.inputs_digest = digest_inputs(params.str(), paths);
  return r;
}

int cmd_verify(const VerifyOptions& v, const Output& o, std::ostream& out, std::ostream& err) {
  if (v.check == "xs" && v.exhaustive) {
    Report r = sweep_report(v.p, v.m, v.max_size);
    r.command = "verify xs --exhaustive";
    r.inputs_digest = sha256_hex("xs-sweep p=" + std::to_string(v.p) + " m=" + std::to_string(v.m) +
                                 " maxsize=" + std::to_string(v.max_size));
    if (r.witness) err << "xs sweep failure: " << *r.witness << '\n';
    emit(r, o, out);
    return exit_for(r);
  }
  if (v.manifest.empty()) {
    if (v.input.empty()) throw ContractViolation("verify: --input or --manifest is required");
    const Report r = verify_one(v, v.input, v.input_b, err);
    if (r.verdict == Verdict::kFail && r.witness) err << "check failed: " << *r.witness << '\n';
    emit(r, o, out);
    return exit_for(r);
  }

  // Batch: one `pathA [pathB]` per manifest line, relative to the manifest.
  std::istringstream lines(read_file(v.manifest));
  const auto slash = v.manifest.find_last_of('/');
  const std::string base = slash == std::string::npos ? "" : v.manifest.substr(0, slash + 1);
  auto resolve = [&](const std::string& p) { return p.empty() || p.front() == '/' ? p : base + p; };
  std::vector<Report> reports;
  for (std::string line; std::getline(lines, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string pa, pb;
    if (!(ss >> pa)) continue;
    ss >> pb;
    reports.push_back(verify_one(v, resolve(pa), resolve(pb), err));
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const Report& x, const Report& y) { return x.inputs_digest < y.inputs_digest; });
  Report summary("verify batch");
  std::size_t pass = 0, fail = 0, vacuous = 0;
  for (const auto& r : reports) {
    emit(r, o, out);
    pass += r.verdict == Verdict::kPass;
    fail += r.verdict == Verdict::kFail;
    vacuous += r.verdict == Verdict::kVacuous;
    if (r.verdict == Verdict::kFail && r.witness) err << "check failed: " << *r.witness << '\n';
  }
  std::string all;
  for (const auto& r : reports) all += r.inputs_digest + "\n";
  summary.inputs_digest = sha256_hex(all);
  summary.add_count("runs", reports.size());
  summary.add_count("passed", pass);
  summary.add_count("failed", fail);
  summary.add_count("vacuous", vacuous);
  summary.verdict = fail ? Verdict::kFail : Verdict::kPass;
  emit(summary, o, out);
  return exit_for(summary);
}

int cmd_sim(const SimOptions& s, const Output& o, std::ostream& out, std::ostream& err) {
  const CyclicSet a = load_cyclic(s.input_a, s.dedupe, err);
  const CyclicSet b = load_cyclic(s.input_b, s.dedupe, err);
  Report r = sample_cover_experiment(a, b, s.t_count, s.c, s.trials, s.seed);
  r.command = "sim";
  std::ostringstream params;
  params << "sim t=" << s.t_count << " c=" << s.c << " trials=" << s.trials << " seed=" << s.seed;
  r.inputs_digest = digest_inputs(params.str(), {s.input_a, s.input_b});
  if (r.verdict == Verdict::kVacuous) err << "vacuous run: popular set is empty\n";
  emit(r, o, out);
  return exit_for(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sumsets with few translates: generators, selection, verification, simulation", "sumset"};
  app.require_subcommand(1);
  Output o;

  GenOptions g;
  auto* gen = app.add_subcommand("gen", "Write a generated point set or cyclic set");
  gen->add_option("family", g.family, "Family")
      ->required()
      ->check(CLI::IsMember({"chr", "grid", "simplex", "random-lattice", "random-cyclic", "interval"}));
  gen->add_option("--d", g.d, "Dimension")->check(CLI::Range(1, 8));
  gen->add_option("--N", g.n_len, "Line length (chr) or side (grid)")->check(CLI::PositiveNumber);
  gen->add_option("--n", g.count, "Number of points (random families)")->check(CLI::PositiveNumber);
  gen->add_option("--box", g.box, "Coordinates drawn from 0..box-1")->check(CLI::PositiveNumber);
  gen->add_option("--seed", g.seed, "Seed");
  gen->add_option("--p", g.p, "Prime modulus");
  gen->add_option("--m", g.m, "Kernel size")->check(CLI::PositiveNumber);
  gen->add_option("--span", g.span, "Restrict random-cyclic to residues 0..span");
  gen->add_option("--start", g.start, "Interval start residue");
  gen->add_option("--length", g.length, "Interval length in steps");
  gen->add_option("--fiber", g.fiber, "Kernel residues per interval fiber (default all)");
  gen->add_option("--out", g.out_path, "Output file (default stdout)");

  SelectOptions s;
  auto* sel = app.add_subcommand("select", "Select few translates with a large sumset");
  sel->add_option("--input", s.input, "Point-set file")->required();
  sel->add_option("--input-b", s.input_b, "Second set for triple1d (default: the input)");
  sel->add_option("--mode", s.mode, "Mode")->check(CLI::IsMember({"triple1d", "line-covered", "general"}));
  sel->add_option("--sample-size", s.budget.sample_size, "Random stage sample size");
  sel->add_option("--rounds", s.budget.rounds, "Random stage rounds");
  sel->add_option("--max-greedy", s.budget.max_greedy, "Greedy steps (0: 4(d+1)^3)");
  sel->add_option("--direction-budget", s.budget.direction_budget, "Direction pairs (0: default rule)");
  sel->add_option("--seed", s.seed, "Seed");
  sel->add_flag("--dedupe", s.dedupe, "Drop duplicate points");

  VerifyOptions v;
  auto* ver = app.add_subcommand("verify", "Check an inequality on given inputs");
  ver->add_option("--check", v.check, "Check")
      ->required()
      ->check(CLI::IsMember({"freiman", "ruzsa", "m2", "pr", "cauchy-davenport", "xs", "popular-nesting"}));
  ver->add_option("--input", v.input, "First input");
  ver->add_option("--input-b", v.input_b, "Second input (default: the first)");
  ver->add_option("--manifest", v.manifest, "File listing inputs, one 'A [B]' per line");
  ver->add_option("--k", v.k, "Fold for pr")->check(CLI::Range(2, 3));
  ver->add_option("--p", v.p, "Prime for the exhaustive xs sweep");
  ver->add_option("--m", v.m, "Kernel size for the exhaustive xs sweep")->check(CLI::PositiveNumber);
  ver->add_option("--maxsize", v.max_size, "Largest |A| in the exhaustive sweep")->check(CLI::Range(1, 8));
  ver->add_flag("--exhaustive", v.exhaustive, "Sweep every normalised interval instance (xs)");
  ver->add_option("--i-start", v.i_start, "Window of A: start residue");
  ver->add_option("--i-length", v.i_length, "Window of A: length");
  ver->add_option("--j-start", v.j_start, "Window of B: start residue");
  ver->add_option("--j-length", v.j_length, "Window of B: length");
  ver->add_flag("--dedupe", v.dedupe, "Drop duplicate points");

  SimOptions m;
  auto* sim = app.add_subcommand("sim", "Random covering experiment on popular sums");
  sim->add_option("--input-a", m.input_a, "Cyclic set A")->required();
  sim->add_option("--input-b", m.input_b, "Cyclic set B")->required();
  sim->add_option("--t-count", m.t_count, "Popularity threshold as a count")->check(CLI::PositiveNumber);
  sim->add_option("--c", m.c, "Translates per trial")->check(CLI::PositiveNumber);
  sim->add_option("--trials", m.trials, "Trials")->check(CLI::PositiveNumber);
  sim->add_option("--seed", m.seed, "Seed");
  sim->add_flag("--dedupe", m.dedupe, "Drop duplicate elements");

  for (auto* sub : {sel, ver, sim}) {
    sub->add_flag("--decimal", o.decimal, "Also print rationals in decimal");
    sub->add_flag("--json", o.json, "Also print a JSON line");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(g, out);
    if (sel->parsed()) return cmd_select(s, o, out, err);
    if (ver->parsed()) return cmd_verify(v, o, out, err);
    return cmd_sim(m, o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "precondition: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EnumerationRefused& e) {
    err << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal invariant failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace sumset::cli
