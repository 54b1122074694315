// kneading: command-line front end for the kneading library.
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kneading/entropy.hpp"
#include "kneading/enumerate.hpp"
#include "kneading/errors.hpp"
#include "kneading/family.hpp"
#include "kneading/inverse_iteration.hpp"
#include "kneading/report.hpp"

namespace {

using namespace kneading;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitSolve = 3;
constexpr int kExitUsage = 64;

struct Options {
  std::string family = "logistic";
  std::string format = "csv";
  std::string out;
  std::string word;
  std::string violations;
  int n = 0;
  int n_max = 0;
  double mu_min = 0.5;
  double mu_max = 1.0;
  int grid = 1000;
  int depth = 25;
  double tol_c = kDefaultTolC;
  double mu = 1.0;
  double mu1 = 0.0;
  double mu2 = 1.0;
  int max_depth = kDefaultEntropyDepth;
  std::uint64_t node_cap = kDefaultNodeCap;
  double tolerance = kDefaultEntropyTolerance;
  bool no_entropy = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file_or_stdout(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + path);
  f << text;
}

const UnimodalFamily& family_of(const Options& o) {
  static const FamilyRegistry registry = FamilyRegistry::with_builtins();
  if (!registry.contains(o.family)) {
    std::string known;
    for (const auto& n : registry.names()) known += (known.empty() ? "" : ", ") + n;
    throw UsageError("unknown family '" + o.family + "' (known: " + known + ")");
  }
  return registry.get(o.family);
}

Word maximal_word(const std::string& text) {
  const Word w = parse_word(text);
  if (!w.is_terminal()) throw UsageError("word " + text + " must end in C");
  if (!is_shift_maximal(w)) {
    const std::size_t k = first_non_dominated_shift(w);
    throw UsageError("word " + text + " is not shift-maximal: shift " + std::to_string(k) + " (" +
                     shift(w, k).str() + ") is not smaller");
  }
  return w;
}

int cmd_enumerate(const Options& o, OutputFormat fmt, std::ostream& os) {
  if (o.n < 1 || o.n > 20) throw UsageError("--n must be in 1..20");
  try {
    write_census(os, enumerate_kneading(o.n), fmt);
  } catch (const InvariantError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_count(const Options& o, OutputFormat fmt, std::ostream& os) {
  if (o.n < 1 || o.n > 62) throw UsageError("--n must be in 1..62");
  write_count(os, o.n, count_kneading(o.n), fmt);
  return kExitOk;
}

int cmd_solve(const Options& o, OutputFormat fmt, std::ostream& os) {
  const auto& fam = family_of(o);
  const Word w = maximal_word(o.word);
  write_records(os, {solve_superstable(fam, w, o.tol_c)}, fmt);
  return kExitOk;
}

int cmd_table(const Options& o, OutputFormat fmt, std::ostream& os) {
  const auto& fam = family_of(o);
  if (o.n_max < 1 || o.n_max > 12) throw UsageError("--n-max must be in 1..12");
  const auto table = superstable_table(fam, o.n_max);
  write_records(os, table, fmt);
  const auto inv = order_inversions(table);
  for (const auto& [i, j] : inv) {
    std::cerr << "order violation: " << table[i].word.str() << " (mu " << format_real(table[i].mu_star)
              << ") before " << table[j].word.str() << " (mu " << format_real(table[j].mu_star)
              << ")\n";
  }
  return inv.empty() ? kExitOk : kExitViolation;
}

int cmd_sweep(const Options& o, OutputFormat fmt, std::ostream& os) {
  const auto& fam = family_of(o);
  if (!(o.mu_min > 0.0 && o.mu_min < o.mu_max && o.mu_max <= 1.0)) {
    throw UsageError("--min and --max must satisfy 0 < min < max <= 1");
  }
  EntropyOptions eo;
  eo.enabled = !o.no_entropy;
  eo.max_depth = o.max_depth;
  eo.node_cap = o.node_cap;
  eo.tolerance = o.tolerance;
  const SweepReport r = sweep(fam, o.mu_min, o.mu_max, o.grid, o.depth, eo, o.tol_c);
  write_sweep(os, r, fmt);
  if (!o.violations.empty()) {
    std::ostringstream v;
    write_sweep_violations(v, r, fmt);
    write_file_or_stdout(o.violations, v.str());
  }
  if (!r.monotone()) {
    std::cerr << r.kneading_violations.size() << " kneading and " << r.entropy_violations.size()
              << " entropy violations\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_entropy(const Options& o, OutputFormat fmt, std::ostream& os) {
  const auto& fam = family_of(o);
  if (!(o.mu > 0.0 && o.mu <= 1.0)) throw UsageError("--mu must lie in (0, 1]");
  write_entropy(os, entropy_estimate(fam, o.mu, o.max_depth, o.node_cap), fmt);
  return kExitOk;
}

int cmd_check(const Options& o, OutputFormat fmt, std::ostream& os) {
  const auto& fam = family_of(o);
  const ClassCReport rep = check_class_C(fam, default_mu_grid(fam), default_x_grid());
  write_class_c(os, rep, fmt);
  return rep.all_ok() ? kExitOk : kExitViolation;
}

int cmd_ivt(const Options& o, OutputFormat fmt, std::ostream& os) {
  const auto& fam = family_of(o);
  const Word w = maximal_word(o.word);
  const int depth = std::max(o.depth, static_cast<int>(w.size()));
  write_ivt(os, w, realize_ivt(fam, w, o.mu1, o.mu2, depth, o.tol_c), o.mu1, o.mu2, fmt);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Kneading sequences and superstable parameters of unimodal families"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "Map family (logistic, sine)");
  };
  const auto positive = CLI::PositiveNumber;
  const auto unit = CLI::Range(0.0, 1.0);

  std::function<int(const Options&, OutputFormat, std::ostream&)> run;

  auto* en = app.add_subcommand("enumerate", "List all kneading words of period n");
  en->add_option("--n", o.n, "Period (1..20)")->required();
  en->callback([&] { run = cmd_enumerate; });

  auto* co = app.add_subcommand("count", "Count kneading words of period n");
  co->add_option("--n", o.n, "Period (1..62)")->required();
  co->callback([&] { run = cmd_count; });

  auto* so = app.add_subcommand("solve", "Superstable parameter of a kneading word");
  add_family(so);
  so->add_option("--word", o.word, "Kneading word ending in C")->required();
  so->add_option("--tol-c", o.tol_c, "Distance from c treated as hitting c")->check(positive);
  so->callback([&] { run = cmd_solve; });

  auto* ta = app.add_subcommand("table", "Superstable parameters for all periods up to n-max");
  add_family(ta);
  ta->add_option("--n-max", o.n_max, "Largest period (1..12)")->required();
  ta->callback([&] { run = cmd_table; });

  auto* sw = app.add_subcommand("sweep", "Kneading words and entropy on a parameter grid");
  add_family(sw);
  sw->add_option("--min", o.mu_min, "Smallest parameter")->check(unit);
  sw->add_option("--max", o.mu_max, "Largest parameter")->check(unit);
  sw->add_option("--grid", o.grid, "Number of grid points")->check(CLI::Range(2, 10'000'000));
  sw->add_option("--depth", o.depth, "Kneading word length")->check(CLI::Range(1, 10'000));
  sw->add_option("--tol-c", o.tol_c, "Distance from c treated as hitting c")->check(positive);
  sw->add_option("--max-depth", o.max_depth, "Lap levels for entropy")->check(CLI::Range(5, 1'000'000));
  sw->add_option("--node-cap", o.node_cap, "Preimage tree node cap")->check(positive);
  sw->add_option("--tolerance", o.tolerance, "Allowed entropy decrease")->check(positive);
  sw->add_flag("--no-entropy", o.no_entropy, "Skip entropy estimates");
  sw->add_option("--violations", o.violations, "Write violations to this file");
  sw->callback([&] { run = cmd_sweep; });

  auto* ep = app.add_subcommand("entropy", "Topological entropy estimate at one parameter");
  add_family(ep);
  ep->add_option("--mu", o.mu, "Parameter")->check(unit);
  ep->add_option("--max-depth", o.max_depth, "Lap levels")->check(CLI::Range(5, 1'000'000));
  ep->add_option("--node-cap", o.node_cap, "Preimage tree node cap")->check(positive);
  ep->callback([&] { run = cmd_entropy; });

  auto* ch = app.add_subcommand("check", "Check the class C properties of a family");
  add_family(ch);
  ch->callback([&] { run = cmd_check; });

  auto* iv = app.add_subcommand("ivt", "Find mu with a given kneading word between mu1 and mu2");
  add_family(iv);
  iv->add_option("--word", o.word, "Kneading word ending in C")->required();
  iv->add_option("--mu1", o.mu1, "Lower parameter")->check(unit);
  iv->add_option("--mu2", o.mu2, "Upper parameter")->check(unit);
  iv->add_option("--depth", o.depth, "Kneading word length used for comparisons")
      ->check(CLI::Range(1, 10'000));
  iv->add_option("--tol-c", o.tol_c, "Distance from c treated as hitting c")->check(positive);
  iv->callback([&] { run = cmd_ivt; });

  for (auto* sub : {en, co, so, ta, sw, ep, ch, iv}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::ostringstream os;
    const int code = run(o, parse_output_format(o.format), os);
    write_file_or_stdout(o.out, os.str());
    return code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SolveFailure& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolve;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
}
