#include "inscover/cli.hpp"

#include "inscover/bounds.hpp"
#include "inscover/constructions.hpp"
#include "inscover/diagnostics.hpp"
#include "inscover/errors.hpp"
#include "inscover/io.hpp"
#include "inscover/solvers.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace inscover::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
};

std::string params_line(int n, int k, int r) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" + std::to_string(r);
}

std::string body_text(const CoverSolution& s, int n, int k, int r) {
  if (const auto* code = std::get_if<Code>(&s)) return format_code_file({n, k, r, *code});
  return format_system_file({n, k, r, std::get<TuranSystem>(s)});
}

// Drops the header line of a formatted file.
std::string strip_header(const std::string& text) { return text.substr(text.find('\n') + 1); }

nlohmann::json solution_json(const CoverSolution& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

std::string describe_word(const Word& w) { return w.str(); }

// solve ----------------------------------------------------------------------

struct SolveArgs {
  std::string kind;
  int n = 0;
  int k = 0;
  int r = 0;
  bool exact = false;
  bool greedy = false;
  bool all_optimal = false;
  double time_limit = 300.0;
  unsigned threads = 1;
  int iso_depth = 2;
  std::string out_path;
  bool json = false;
};

void add_solve(CLI::App& app, SolveArgs& a) {
  auto* cmd = app.add_subcommand("solve", "Optimal covering codes, Turan systems and packings");
  cmd->add_option("kind", a.kind, "cover | turan | packing")
      ->required()
      ->check(CLI::IsMember({"cover", "turan", "packing"}));
  cmd->add_option("--n", a.n, "Alphabet (or ground set) size")->required()->check(CLI::Range(1, 255));
  cmd->add_option("--k", a.k, "Target length (default r+1)")->check(CLI::PositiveNumber);
  cmd->add_option("--r", a.r, "Code word length (or set size)")->required()->check(CLI::PositiveNumber);
  auto* exact = cmd->add_flag("--exact", a.exact, "Branch and bound with a proof of optimality (default)");
  cmd->add_flag("--greedy", a.greedy, "Greedy cover only")->excludes(exact);
  cmd->add_flag("--all-optimal", a.all_optimal,
                "All optimal codes up to renaming the symbols (cover only)");
  cmd->add_option("--time-limit", a.time_limit, "Search budget in seconds")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--threads", a.threads, "Worker threads")
      ->envname("INSCOVER_THREADS")
      ->check(CLI::Range(1u, 1024u));
  cmd->add_option("--iso-depth", a.iso_depth, "Isomorph rejection depth (0 disables)")
      ->check(CLI::Range(0, 8));
  cmd->add_option("--out", a.out_path,
                  "Write the solution to FILE (with --all-optimal, class i > 1 goes to FILE.i)");
  cmd->add_flag("--json", a.json, "Machine-readable report");
}

int report_all_optimal(const SolveArgs& a, Io io) {
  SolveOptions opts;
  opts.time_budget_seconds = a.time_limit;
  opts.threads = a.threads;
  opts.isomorph_depth = a.iso_depth;
  const auto reps = enumerate_optimal(a.n, a.k, a.r, SymmetryGroup::symbol_permutations, opts);
  const std::size_t optimum = reps.empty() ? 0 : reps.front().size();
  for (const auto& c : reps)
    if (!verify_cover(c, a.k)) throw std::logic_error("enumerated code does not cover");

  if (!a.out_path.empty())
    for (std::size_t i = 0; i < reps.size(); ++i)
      write_text_file(i == 0 ? a.out_path : a.out_path + "." + std::to_string(i + 1),
                      format_code_file({a.n, a.k, a.r, reps[i]}));

  if (a.json) {
    nlohmann::json doc;
    doc["params"] = {{"problem", a.kind}, {"n", a.n}, {"k", a.k}, {"r", a.r}, {"method", "all-optimal"}};
    doc["optimum"] = optimum;
    doc["status"] = std::string(to_string(SolveStatus::proved_optimal));
    auto list = nlohmann::json::array();
    for (const auto& c : reps) list.push_back(to_json(c));
    doc["solution"] = list;
    doc["certificate"] = {{"lower_bound", optimum},
                          {"classes", reps.size()},
                          {"group", "symbol_permutations"},
                          {"verified", true}};
    doc["stats"] = nlohmann::json::object();
    io.out << doc.dump(2) << "\n";
    return kSuccess;
  }
  io.out << "problem: " << a.kind << "\n"
         << "params: " << params_line(a.n, a.k, a.r) << "\n"
         << "method: all-optimal\n"
         << "optimum: " << optimum << "\n"
         << "status: " << to_string(SolveStatus::proved_optimal) << "\n"
         << "group: symbol_permutations\n"
         << "classes: " << reps.size() << "\n";
  for (std::size_t i = 0; i < reps.size(); ++i)
    io.out << "class " << i + 1 << ":\n"
           << strip_header(format_code_file({a.n, a.k, a.r, reps[i]}));
  return kSuccess;
}

// CLI11 drops environment values that fail validation; reject them instead.
void check_threads_env() {
  const char* value = std::getenv("INSCOVER_THREADS");
  if (value == nullptr) return;
  const std::string text(value);
  const bool digits = !text.empty() && text.size() <= 4 &&
                      text.find_first_not_of("0123456789") == std::string::npos;
  if (!digits || std::stoi(text) < 1 || std::stoi(text) > 1024)
    throw UsageError("INSCOVER_THREADS: expected an integer in [1, 1024], got '" + text + "'");
}

int run_solve(SolveArgs a, Io io) {
  check_threads_env();
  if (a.k == 0) a.k = a.r + 1;
  if (a.k <= a.r) throw UsageError("solve: need k > r");
  const bool packing = a.kind == "packing";
  if (packing && a.k != a.r + 1) throw UsageError("solve packing: k must equal r+1");
  if (packing && a.greedy) throw UsageError("solve packing: --greedy is not available");
  if (a.all_optimal && a.kind != "cover") throw UsageError("--all-optimal applies to cover only");
  if (a.all_optimal && a.greedy) throw UsageError("--all-optimal needs the exact solver");
  if (a.all_optimal) return report_all_optimal(a, io);

  SolveOptions opts;
  opts.time_budget_seconds = a.time_limit;
  opts.threads = a.threads;
  opts.isomorph_depth = a.iso_depth;

  const auto mode = a.kind == "turan" ? CoverMode::turan : CoverMode::sequence;
  SolveResult res = [&] {
    if (packing) return max_packing(a.n, a.r, opts);
    if (a.greedy) return solve_greedy(build_incidence(a.n, a.k, a.r, mode, opts.max_incidence_bits));
    return mode == CoverMode::turan ? min_turan(a.n, a.k, a.r, opts) : min_cover(a.n, a.k, a.r, opts);
  }();

  bool verified = false;
  std::string witness;
  if (packing) {
    const auto clash = packing_conflict(std::get<Code>(res.solution));
    verified = !clash;
    if (clash) witness = clash->first.str() + " " + clash->second.str();
  } else {
    const auto check = verify_solution(res.solution, a.k);
    verified = check.covered;
    if (check.witness) witness = check.witness->str();
  }

  if (!a.out_path.empty()) write_text_file(a.out_path, body_text(res.solution, a.n, a.k, a.r));

  const std::string method = packing ? "exact" : (a.greedy ? "greedy" : "exact");
  const std::string bound_kind = packing ? "upper_bound" : "lower_bound";
  if (a.json) {
    nlohmann::json doc;
    doc["params"] = {{"problem", a.kind}, {"n", a.n}, {"k", a.k}, {"r", a.r}, {"method", method}};
    doc["optimum"] = res.optimum;
    doc["status"] = std::string(to_string(res.status));
    doc["solution"] = solution_json(res.solution);
    doc["certificate"] = {{bound_kind, res.bound}, {"verified", verified}};
    if (!verified) doc["certificate"]["witness"] = witness;
    doc["stats"] = {{"nodes", res.stats.nodes}, {"seconds", res.stats.elapsed_seconds}};
    io.out << doc.dump(2) << "\n";
  } else {
    io.out << "problem: " << a.kind << "\n"
           << "params: " << params_line(a.n, a.k, a.r) << "\n"
           << "method: " << method << "\n"
           << "optimum: " << res.optimum << "\n"
           << "status: " << to_string(res.status) << "\n"
           << bound_kind << ": " << res.bound << "\n"
           << "verified: " << (verified ? "yes" : "NO " + witness) << "\n"
           << "solution:\n"
           << strip_header(body_text(res.solution, a.n, a.k, a.r));
    io.err << "nodes: " << res.stats.nodes << "  elapsed: " << std::fixed << std::setprecision(3)
           << res.stats.elapsed_seconds << " s\n";
  }
  if (!verified) return kVerificationFailed;
  if (a.greedy) return kSuccess;
  return res.status == SolveStatus::proved_optimal ? kSuccess : kBudgetExhausted;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string kind;
  std::string path;
  int k = 0;
};

void add_verify(CLI::App& app, VerifyArgs& a) {
  auto* cmd = app.add_subcommand("verify", "Check a code, Turan system or packing file");
  cmd->add_option("kind", a.kind, "cover | turan | packing")
      ->required()
      ->check(CLI::IsMember({"cover", "turan", "packing"}));
  cmd->add_option("file", a.path, "Input file")->required();
  cmd->add_option("--k", a.k, "Target length (default: the header's k)")->check(CLI::PositiveNumber);
}

int run_verify(const VerifyArgs& a, Io io) {
  if (a.kind == "packing") {
    const auto f = read_code_file(a.path, BodyLength::k);
    const auto clash = packing_conflict(f.code);
    if (clash) {
      io.out << "packing: NO\nconflict: " << clash->first.str() << " " << clash->second.str() << "\n";
      return kVerificationFailed;
    }
    io.out << "packing: yes (" << f.code.size() << " words, " << params_line(f.n, f.k, f.r) << ")\n";
    return kSuccess;
  }
  CoverCheck check;
  std::size_t size = 0;
  int n = 0, k = 0, r = 0;
  if (a.kind == "cover") {
    const auto f = read_code_file(a.path);
    n = f.n, k = a.k ? a.k : f.k, r = f.r;
    if (k <= r) throw UsageError("verify: need k > r");
    check = verify_cover(f.code, k);
    size = f.code.size();
  } else {
    const auto f = read_system_file(a.path);
    n = f.n, k = a.k ? a.k : f.k, r = f.r;
    if (k <= r) throw UsageError("verify: need k > r");
    check = verify_turan(f.system, k);
    size = f.system.size();
  }
  if (!check) {
    io.out << "covered: NO\nuncovered: " << describe_word(*check.witness) << "\n";
    return kVerificationFailed;
  }
  io.out << "covered: yes (" << size << (a.kind == "cover" ? " words, " : " sets, ")
         << params_line(n, k, r) << ")\n";
  return kSuccess;
}

// construct ------------------------------------------------------------------

struct ConstructArgs {
  std::string path;
  std::string out_path;
  int m = 0;
  std::vector<int> map;
  int n = 0;
  int k = 0;
  std::optional<std::uint64_t> seed;
};

struct ConstructCommands {
  CLI::App* lift = nullptr;
  CLI::App* random_lift = nullptr;
  CLI::App* turan_to_code = nullptr;
  CLI::App* code_to_turan = nullptr;
  CLI::App* symmetrize = nullptr;
  CLI::App* mantel = nullptr;
  CLI::App* turan43 = nullptr;
  CLI::App* half_cube = nullptr;
};

ConstructCommands add_construct(CLI::App& app, ConstructArgs& a) {
  auto* cmd = app.add_subcommand("construct", "Build codes and Turan systems");
  cmd->require_subcommand(1);
  ConstructCommands c;
  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", a.path, "Input file")->required(); };
  auto out_arg = [&](CLI::App* sub) { sub->add_option("--out", a.out_path, "Write the result to FILE"); };

  c.lift = cmd->add_subcommand("lift", "Preimage of a code under y -> y mod N or an explicit map");
  file_arg(c.lift);
  auto* m = c.lift->add_option("--m", a.m, "Target alphabet size for the mod lift")->check(CLI::Range(1, 255));
  c.lift->add_option("--map", a.map, "Explicit map: the images of 0, 1, ...")
      ->excludes(m)
      ->delimiter(',');
  out_arg(c.lift);

  c.random_lift = cmd->add_subcommand("random-lift", "Preimage under a seeded random map [n] -> [N]");
  file_arg(c.random_lift);
  c.random_lift->add_option("--n", a.n, "Target alphabet size")->required()->check(CLI::Range(1, 255));
  c.random_lift->add_option("--seed", a.seed, "Generator seed")->required();
  out_arg(c.random_lift);

  c.turan_to_code = cmd->add_subcommand("turan-to-code", "Covering code from a Turan system");
  file_arg(c.turan_to_code);
  c.turan_to_code->add_option("--k", a.k, "Target size (default: the header's k)")->check(CLI::PositiveNumber);
  out_arg(c.turan_to_code);

  c.code_to_turan = cmd->add_subcommand("code-to-turan", "Turan system from a symmetric covering code");
  file_arg(c.code_to_turan);
  c.code_to_turan->add_option("--k", a.k, "Target length (default: the header's k)")->check(CLI::PositiveNumber);
  out_arg(c.code_to_turan);

  c.symmetrize = cmd->add_subcommand("symmetrize", "Close a code under coordinate permutations");
  file_arg(c.symmetrize);
  out_arg(c.symmetrize);

  c.mantel = cmd->add_subcommand("mantel", "Two-clique Turan (n,3,2)-system");
  c.turan43 = cmd->add_subcommand("turan43", "Three-part Turan (n,4,3)-system");
  c.half_cube = cmd->add_subcommand("half-cube", "Two-block code covering [n]^3");
  for (auto* sub : {c.mantel, c.turan43, c.half_cube}) {
    sub->add_option("--n", a.n, "Alphabet (ground set) size")->required()->check(CLI::Range(1, 255));
    out_arg(sub);
  }
  return c;
}

int emit(const std::string& text, const std::string& out_path, std::size_t size, Io io) {
  if (out_path.empty()) {
    io.out << text;
  } else {
    write_text_file(out_path, text);
    io.out << "wrote " << out_path << " (" << size << " entries)\n";
  }
  return kSuccess;
}

int run_construct(const ConstructCommands& c, const ConstructArgs& a, Io io) {
  if (c.lift->parsed()) {
    const auto f = read_code_file(a.path);
    Code lifted(1, 1);
    int target = 0;
    if (!a.map.empty()) {
      std::vector<Symbol> table;
      for (int v : a.map) {
        if (v < 0 || v > 255) throw UsageError("--map entries must be symbols");
        table.push_back(static_cast<Symbol>(v));
      }
      const SymbolMap map(f.n, std::move(table));
      target = map.source_size();
      lifted = preimage_code(f.code, map);
    } else {
      if (a.m == 0) throw UsageError("lift: give --m or --map");
      target = a.m;
      lifted = mod_lift(f.code, a.m);
    }
    return emit(format_code_file({target, f.k, f.r, lifted}), a.out_path, lifted.size(), io);
  }
  if (c.random_lift->parsed()) {
    const auto f = read_code_file(a.path);
    const auto lift = random_lift(f.code, a.n, *a.seed);
    std::ostringstream map;
    for (std::size_t i = 0; i < lift.map.table().size(); ++i)
      map << (i ? " " : "") << static_cast<int>(lift.map.table()[i]);
    io.err << "map: " << map.str() << "\n";
    return emit(format_code_file({a.n, f.k, f.r, lift.code}), a.out_path, lift.code.size(), io);
  }
  if (c.turan_to_code->parsed()) {
    const auto f = read_system_file(a.path);
    const int k = a.k ? a.k : f.k;
    const auto code = turan_to_code(f.system, k);
    return emit(format_code_file({f.n, k, f.r, code}), a.out_path, code.size(), io);
  }
  if (c.code_to_turan->parsed()) {
    const auto f = read_code_file(a.path);
    const int k = a.k ? a.k : f.k;
    const auto system = code_to_turan(f.code, k);
    return emit(format_system_file({f.n, k, f.r, system}), a.out_path, system.size(), io);
  }
  if (c.symmetrize->parsed()) {
    const auto f = read_code_file(a.path);
    const auto code = symmetrize(f.code);
    return emit(format_code_file({f.n, f.k, f.r, code}), a.out_path, code.size(), io);
  }
  if (c.mantel->parsed()) {
    const auto t = mantel_system(a.n);
    return emit(format_system_file({a.n, 3, 2, t}), a.out_path, t.size(), io);
  }
  if (c.turan43->parsed()) {
    const auto t = turan43_system(a.n);
    return emit(format_system_file({a.n, 4, 3, t}), a.out_path, t.size(), io);
  }
  const auto code = half_cube_code(a.n);
  return emit(format_code_file({a.n, 3, 2, code}), a.out_path, code.size(), io);
}

// bounds ---------------------------------------------------------------------

struct BoundsArgs {
  std::vector<int> r;
  std::optional<int> n;
  std::optional<double> t_lower;
  bool json = false;
};

void add_bounds(CLI::App& app, BoundsArgs& a) {
  auto* cmd = app.add_subcommand("bounds", "Density bounds for codes and Turan systems");
  cmd->add_option("--r", a.r, "Word length(s), comma separated")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(1, 20));
  cmd->add_option("--n", a.n, "Also bound S(n,r+1,r) for this alphabet size")->check(CLI::Range(1, 255));
  cmd->add_option("--t-lower", a.t_lower, "Known lower bound on t(r+1,r)")->check(CLI::Range(0.0, 1.0));
  cmd->add_flag("--json", a.json, "Machine-readable report");
}

nlohmann::json bound_json(const NamedBound& b) {
  return {{"name", b.name},   {"quantity", b.quantity},       {"value", b.display()},
          {"exact", b.value}, {"conditional", b.conditional}, {"note", b.note}};
}

int run_bounds(const BoundsArgs& a, Io io) {
  std::map<int, double> known;
  if (a.t_lower)
    for (int r : a.r) known[r] = *a.t_lower;
  const auto table = bounds_table(a.r, known, a.n);
  bool consistent = true;
  for (const auto& row : table) consistent &= row.consistent();

  if (a.json) {
    nlohmann::json doc;
    doc["params"] = {{"r", a.r}};
    if (a.n) doc["params"]["n"] = *a.n;
    if (a.t_lower) doc["params"]["t_lower"] = *a.t_lower;
    auto rows = nlohmann::json::array();
    for (const auto& row : table) {
      nlohmann::json j{{"r", row.r}, {"consistent", row.consistent()}};
      if (row.n) j["n"] = *row.n;
      j["lower"] = nlohmann::json::array();
      j["upper"] = nlohmann::json::array();
      for (const auto& b : row.lower_bounds) j["lower"].push_back(bound_json(b));
      for (const auto& b : row.upper_bounds) j["upper"].push_back(bound_json(b));
      rows.push_back(std::move(j));
    }
    doc["rows"] = rows;
    io.out << doc.dump(2) << "\n";
    return consistent ? kSuccess : kVerificationFailed;
  }

  for (const auto& row : table) {
    io.out << "r=" << row.r;
    if (row.n) io.out << " n=" << *row.n;
    io.out << "\n";
    auto print = [&](const NamedBound& b, const char* side) {
      io.out << "  " << std::left << std::setw(12) << b.quantity << std::setw(7) << side
             << std::setw(16) << b.display() << std::setw(28) << b.name << b.note
             << (b.conditional ? " [conditional]" : "") << "\n";
    };
    for (const auto& b : row.lower_bounds) print(b, "lower");
    for (const auto& b : row.upper_bounds) print(b, "upper");
    io.out << "  consistent: " << (row.consistent() ? "yes" : "NO") << "\n";
  }
  return consistent ? kSuccess : kVerificationFailed;
}

// diagnose -------------------------------------------------------------------

struct DiagnoseArgs {
  std::string path;
  std::uint64_t trials = 10000;
  std::optional<std::uint64_t> seed;
  bool star = false;
  unsigned threads = 1;
};

struct DiagnoseCommands {
  CLI::App* atoms = nullptr;
  CLI::App* bonferroni = nullptr;
  CLI::App* intersections = nullptr;
};

DiagnoseCommands add_diagnose(CLI::App& app, DiagnoseArgs& a) {
  auto* cmd = app.add_subcommand("diagnose", "Exact checks of the density inequalities");
  cmd->require_subcommand(1);
  DiagnoseCommands d;
  d.atoms = cmd->add_subcommand("atoms", "Kernel/petal/residue profile of a covering code");
  d.atoms->add_option("file", a.path, "Code file")->required();
  d.bonferroni = cmd->add_subcommand("bonferroni", "Fuzz the inverse Bonferroni inequality");
  d.bonferroni->add_option("--trials", a.trials, "Number of random systems")->check(CLI::PositiveNumber);
  d.bonferroni->add_option("--seed", a.seed, "Master seed")->required();
  d.bonferroni->add_flag("--star", a.star, "Star trees with the residue term");
  d.bonferroni->add_option("--threads", a.threads, "Worker threads")
      ->envname("INSCOVER_THREADS")
      ->check(CLI::Range(1u, 1024u));
  d.intersections = cmd->add_subcommand("intersections", "Pairwise intersections of the deletion sets");
  d.intersections->add_option("file", a.path, "Code file")->required();
  return d;
}

const char* verdict(bool holds) { return holds ? "holds" : "VIOLATED"; }

bool print_pairwise(const Code& code, std::ostream& out) {
  const auto p = check_pairwise_intersections(code);
  out << "pairwise: min lambda(Ci n Cj) = " << p.min_intersection;
  if (p.worst_pair) out << " at (" << p.worst_pair->first + 1 << "," << p.worst_pair->second + 1 << ")";
  out << ", lambda^2 = " << p.square << "\n"
      << "pairwise all pairs: " << verdict(p.holds) << "\n"
      << "pairwise adjacent pairs: " << verdict(p.adjacent_holds) << "\n";
  return p.holds;
}

int run_diagnose(const DiagnoseCommands& d, const DiagnoseArgs& a, Io io) {
  if (d.bonferroni->parsed()) {
    check_threads_env();
    FuzzOptions opts;
    opts.trials = a.trials;
    opts.seed = *a.seed;
    opts.star = a.star;
    opts.threads = static_cast<int>(a.threads);
    const auto report = bonferroni_fuzz(opts);
    io.out << "trials: " << report.trials << "\n"
           << "tree: " << (a.star ? "star with residue term" : "random") << "\n"
           << "violations: " << report.violations << "\n";
    if (report.first_violation) io.out << "first violation: " << *report.first_violation << "\n";
    return report.violations ? kVerificationFailed : kSuccess;
  }
  const auto f = read_code_file(a.path);
  if (f.k != f.r + 1) throw UsageError("diagnose: needs k = r+1");
  if (d.intersections->parsed()) return print_pairwise(f.code, io.out) ? kSuccess : kVerificationFailed;

  const auto p = atom_profile(f.code);
  io.out << "params: " << params_line(f.n, f.k, f.r) << "\n"
         << "density: " << p.density << "\n"
         << "kernel: " << p.kernel << "\n";
  for (std::size_t i = 0; i < p.petals.size(); ++i) io.out << "petal " << i + 1 << ": " << p.petals[i] << "\n";
  io.out << "residue: " << p.residue << "\n";
  for (std::size_t j = 0; j < p.residue_complements.size(); ++j)
    io.out << "residue outside C" << j + 1 << ": " << p.residue_complements[j] << "\n";
  io.out << "multiplicity histogram:";
  for (std::size_t t = 0; t < p.histogram.size(); ++t) io.out << " t=" << t << ":" << p.histogram[t];
  io.out << "\n";

  bool ok = true;
  const auto floor = check_density_floor(p);
  io.out << "density floor (1-l)(rl-1) >= 0: " << floor.lhs << " " << verdict(floor.holds) << "\n";
  ok &= floor.holds;
  const auto residue = check_residue_bound(p);
  io.out << "residue bound: " << residue.lhs << " <= " << residue.rhs << " " << verdict(residue.holds) << "\n";
  ok &= residue.holds;
  const auto parts = check_residue_complements(p);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    io.out << "residue outside C" << j + 1 << " bound: " << parts[j].lhs << " <= " << parts[j].rhs << " "
           << verdict(parts[j].holds) << "\n";
    ok &= parts[j].holds;
  }
  ok &= print_pairwise(f.code, io.out);
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Io io{out, err};
  CLI::App app{"Covering insertion codes, Turan systems and their bounds", "inscover"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "inscover 1.0.0");

  SolveArgs solve;
  VerifyArgs verify;
  ConstructArgs construct;
  BoundsArgs bounds;
  DiagnoseArgs diagnose;
  add_solve(app, solve);
  add_verify(app, verify);
  const auto construct_cmds = add_construct(app, construct);
  add_bounds(app, bounds);
  const auto diagnose_cmds = add_diagnose(app, diagnose);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kUsageError;
  }

  try {
    if (app.got_subcommand("solve")) return run_solve(solve, io);
    if (app.got_subcommand("verify")) return run_verify(verify, io);
    if (app.got_subcommand("construct")) return run_construct(construct_cmds, construct, io);
    if (app.got_subcommand("bounds")) return run_bounds(bounds, io);
    return run_diagnose(diagnose_cmds, diagnose, io);
  } catch (const NotCoveringError& e) {
    err << "error: " << e.what() << "\n";
    out << "uncovered: " << e.witness().str() << "\n";
    return kVerificationFailed;
  } catch (const FormatError& e) {
    err << "error: malformed file: " << e.what() << "\n";
    return kUsageError;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace inscover::cli
