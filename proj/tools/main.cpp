#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "emit.hpp"
#include "primewheel/bounds.hpp"
#include "primewheel/distribution.hpp"
#include "primewheel/errors.hpp"
#include "primewheel/prime_oracle.hpp"
#include "primewheel/propagation.hpp"
#include "primewheel/published.hpp"
#include "primewheel/sequence.hpp"
#include "primewheel/wheel.hpp"

namespace {

using namespace primewheel;
using tool::Cell;
using tool::Table;

struct GlobalOptions {
  std::string format = "csv";
  std::string cache_dir;
  u64 sieve_ceiling = 10'000'000'000ULL;
  u64 enum_cap = 100'000'000ULL;
  int precision = 3;

  bool json() const { return format == "json"; }
  OracleOptions oracle_options() const {
    OracleOptions o;
    o.ceiling = sieve_ceiling;
    o.cache_dir = cache_dir;
    return o;
  }
  EnumOptions enum_options() const {
    EnumOptions e;
    e.cap = enum_cap;
    return e;
  }
};

// Appends the computed cell, the published cell, and an equal/discrepant
// verdict; disagreements are also collected under provenance so the known
// misprints surface as data in JSON output.
void push_compared(Table& t, std::vector<Cell>& row, const std::string& table_id,
                   const std::string& row_key, const std::string& col, Cell computed,
                   Cell printed, bool equal) {
  row.push_back(std::move(computed));
  row.push_back(std::move(printed));
  row.push_back(tool::agree_cell(equal));
  if (!equal) t.provenance[table_id][row_key + "." + col] = "discrepant";
}

Table run_table1(const GlobalOptions& g, bool slow) {
  Table t{"table"};
  t.columns = {"k",    "pi_minus_k", "pi_minus_k_pub", "pi_minus_k_agree",
               "n_pp", "n_pp_pub",   "n_pp_agree",     "ratio",
               "ratio_pub", "ratio_agree"};
  PrimeOracle oracle(g.oracle_options());
  for (const auto& row : published::table1()) {
    if (row.k > 8 && !slow) continue;  // pi to 6.5e9 lives behind --slow
    WheelLevel level = make_level(row.k);
    LevelCounts c = counts(level);
    u64 pi_mk = oracle.prime_pi((u64)level.span_end) - (u64)row.k;
    Rat ratio(BigInt(pi_mk), to_bigint(c.n_pp));
    std::string key = "k=" + std::to_string(row.k);
    std::vector<Cell> r;
    r.emplace_back(row.k);
    push_compared(t, r, "table1", key, "pi_minus_k", Cell(pi_mk), Cell(row.pi_minus_k),
                  to_string((u128)pi_mk) == row.pi_minus_k);
    push_compared(t, r, "table1", key, "n_pp", tool::wide_cell(c.n_pp), Cell(row.n_pp),
                  to_string(c.n_pp) == row.n_pp);
    push_compared(t, r, "table1", key, "ratio", tool::rat_cell(ratio, g.precision),
                  Cell(row.ratio), matches_printed(ratio, row.ratio));
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table run_table2(const GlobalOptions& g) {
  Table t{"table"};
  t.columns = {"k",         "p_k",        "p_k1",
               "p_frac",    "p_frac_pub", "p_frac_agree",
               "primorial", "primorial_pub", "primorial_agree",
               "alpha",     "alpha_pub",  "alpha_agree",
               "alpha_frac", "alpha_frac_pub", "alpha_frac_agree",
               "step",      "step_pub",   "step_agree"};
  for (const auto& row : published::table2()) {
    WheelLevel level = make_level(row.k);
    Rat p_frac(row.p_k1, row.p_k1 - 1);
    StepRatio sr = ratio_step_approx(row.k);
    double alpha_frac = sr.alpha / (sr.alpha + 1.0);
    std::string key = "k=" + std::to_string(row.k);
    std::vector<Cell> r;
    r.emplace_back(row.k);
    r.emplace_back(row.p_k);
    r.emplace_back(row.p_k1);
    push_compared(t, r, "table2", key, "p_frac", tool::rat_cell(p_frac, g.precision),
                  Cell(row.p_frac), matches_printed(p_frac, row.p_frac));
    push_compared(t, r, "table2", key, "primorial", tool::wide_cell(level.primorial),
                  Cell(row.primorial), to_string(level.primorial) == row.primorial);
    push_compared(t, r, "table2", key, "alpha", tool::double_cell(sr.alpha, g.precision),
                  Cell(row.alpha), matches_printed(sr.alpha, row.alpha));
    push_compared(t, r, "table2", key, "alpha_frac", tool::double_cell(alpha_frac, g.precision),
                  Cell(row.alpha_frac), matches_printed(alpha_frac, row.alpha_frac));
    push_compared(t, r, "table2", key, "step", tool::double_cell(sr.step_ratio, g.precision),
                  Cell(row.step), matches_printed(sr.step_ratio, row.step));
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table run_table3(const GlobalOptions& g) {
  Table t{"table"};
  t.columns = {"k",      "p_k",        "span_end", "span_end_pub", "span_end_agree",
               "n_twin", "n_twin_pub", "n_twin_agree",
               "rho",    "rho_pub",    "rho_agree",
               "sigma",  "sigma_pub",  "sigma_agree"};
  for (const auto& row : published::table3()) {
    WheelLevel level = make_level(row.k);
    LevelCounts c = counts(level);
    std::string key = "k=" + std::to_string(row.k);
    std::vector<Cell> r;
    r.emplace_back(row.k);
    r.emplace_back(row.p_k);
    push_compared(t, r, "table3", key, "span_end", tool::wide_cell(level.span_end),
                  Cell(row.span_end), to_string(level.span_end) == row.span_end);
    push_compared(t, r, "table3", key, "n_twin", tool::wide_cell(c.n_twin), Cell(row.n_twin),
                  to_string(c.n_twin) == row.n_twin);
    push_compared(t, r, "table3", key, "rho", tool::rat_cell(c.rho_twin, g.precision),
                  Cell(row.rho), matches_printed(c.rho_twin, row.rho));
    push_compared(t, r, "table3", key, "sigma", tool::rat_cell(c.sigma_twin, g.precision),
                  Cell(row.sigma), matches_printed(c.sigma_twin, row.sigma));
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table run_table_mintp(const GlobalOptions& g) {
  Table t{"table"};
  t.columns = {"p_k", "p_k_minus_1", "trend", "trend_pub", "trend_agree"};
  for (const auto& row : published::table_mintp()) {
    Rat trend = subset_ratio_trend_terms(row.p_k, row.p_k_minus_1);
    std::string key = "p_k=" + std::to_string(row.p_k);
    std::vector<Cell> r;
    r.emplace_back(row.p_k);
    r.emplace_back(row.p_k_minus_1);
    push_compared(t, r, "mintp", key, "trend", tool::rat_cell(trend, g.precision),
                  Cell(row.trend), matches_printed(trend, row.trend));
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table run_table_bounds(const GlobalOptions& g) {
  Table t{"table"};
  t.columns = {"l",           "k",          "k_pub",  "k_agree",
               "p_k",         "p_k1",
               "bound_floor", "bound_floor_pub", "bound_floor_agree",
               "actual",      "actual_pub", "actual_agree",
               "ratio",       "ratio_pub",  "ratio_agree"};
  PrimeOracle oracle(g.oracle_options());
  for (const auto& row : published::table_bounds()) {
    BoundReport rep = twin_lower_bound(row.l, oracle);
    std::string key = "l=" + std::to_string(row.l);
    std::vector<Cell> r;
    r.emplace_back(row.l);
    push_compared(t, r, "bounds", key, "k", Cell(rep.k), Cell(row.k), rep.k == row.k);
    r.emplace_back(rep.p_k);
    r.emplace_back(rep.p_k1);
    push_compared(t, r, "bounds", key, "bound_floor", tool::big_cell(rep.bound_floor),
                  Cell(row.bound_floor), rep.bound_floor.str() == row.bound_floor);
    push_compared(t, r, "bounds", key, "actual", Cell(rep.actual), Cell(row.actual),
                  std::to_string(rep.actual) == row.actual);
    push_compared(t, r, "bounds", key, "ratio", tool::rat_cell(rep.ratio, g.precision),
                  Cell(row.ratio), matches_printed(rep.ratio, row.ratio));
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table run_counts(int k) {
  Table t{"counts"};
  t.columns = {"k", "primorial", "span_start", "span_end", "n_pp", "n_twin"};
  WheelLevel level = make_level(k);
  LevelCounts c = counts(level);
  t.rows.push_back({Cell(k), tool::wide_cell(level.primorial), tool::wide_cell(level.span_start),
                    tool::wide_cell(level.span_end), tool::wide_cell(c.n_pp),
                    tool::wide_cell(c.n_twin)});
  return t;
}

Table run_densities(const GlobalOptions& g, int k) {
  Table t{"densities"};
  t.columns = {"k", "rho_pp", "zeta_partial", "rho_twin", "sigma_twin"};
  LevelCounts c = counts(make_level(k));
  t.rows.push_back({Cell(k), tool::rat_cell(c.rho_pp, g.precision),
                    tool::rat_cell(c.zeta_partial, g.precision),
                    tool::rat_cell(c.rho_twin, g.precision),
                    tool::rat_cell(c.sigma_twin, g.precision)});
  return t;
}

struct StopEnumeration {};

Table run_generate(const GlobalOptions& g, int k, bool twins, u64 limit, bool mark_composites) {
  Table t{"generate"};
  EnumOptions opts = g.enum_options();
  std::optional<PrimeOracle> oracle;
  if (mark_composites) {
    oracle.emplace(g.oracle_options());
    opts.oracle = &*oracle;
  }
  try {
    if (twins) {
      t.columns = {"low", "high", "level", "seq_n"};
      for_each_prospective_twin(k, opts, [&](const TwinPair& p) {
        t.rows.push_back({tool::wide_cell(p.low), tool::wide_cell(p.low + 2), Cell(p.level),
                          tool::wide_cell(p.seq_n)});
        if (limit && t.rows.size() >= limit) throw StopEnumeration{};
      });
    } else {
      t.columns = {"value", "level", "class", "seq_n", "flag"};
      for_each_prospective_prime(k, opts, [&](const ProspectivePrime& p) {
        const char* flag = (p.is_actual_prime && !*p.is_actual_prime) ? "*" : "";
        t.rows.push_back({tool::wide_cell(p.value), Cell(p.level), Cell(progression_name(p.cls)),
                          tool::wide_cell(p.seq_n), Cell(flag)});
        if (limit && t.rows.size() >= limit) throw StopEnumeration{};
      });
    }
  } catch (const StopEnumeration&) {
  }
  return t;
}

Table run_distribution(const GlobalOptions& g, int k) {
  Table t{"distribution"};
  t.columns = {"m", "count_pp", "count_twin", "min_pp_bound", "min_twin_bound", "pp_ok", "twin_ok"};
  SubsetStats st = subset_stats(k, g.enum_options());
  for (size_t m = 0; m < st.counts_pp.size(); m++) {
    bool pp_ok = (u128)st.counts_pp[m] >= st.min_pp_bound;
    bool twin_ok = (u128)st.counts_twin[m] >= st.min_twin_bound;
    t.rows.push_back({Cell((u64)m), Cell(st.counts_pp[m]), Cell(st.counts_twin[m]),
                      tool::wide_cell(st.min_pp_bound), tool::wide_cell(st.min_twin_bound),
                      Cell(pp_ok), Cell(twin_ok)});
  }
  return t;
}

std::vector<Cell> bound_row(const BoundReport& rep, int precision) {
  return {Cell(rep.l),   Cell(rep.k),
          Cell(rep.p_k), Cell(rep.p_k1),
          Cell(decimal_fixed(rep.bound_exact, precision)), tool::big_cell(rep.bound_floor),
          Cell(rep.actual), tool::rat_cell(rep.ratio, precision)};
}

const std::vector<std::string> kBoundColumns = {"l",     "k",           "p_k",    "p_k1",
                                                "bound", "bound_floor", "actual", "ratio"};

Table run_bounds(const GlobalOptions& g, int l) {
  Table t{"bounds"};
  t.columns = kBoundColumns;
  PrimeOracle oracle(g.oracle_options());
  t.rows.push_back(bound_row(twin_lower_bound(l, oracle), g.precision));
  return t;
}

Table run_find_twin_above(const GlobalOptions& g, u64 n) {
  Table t{"find-twin-above"};
  t.columns = kBoundColumns;
  PrimeOracle oracle(g.oracle_options());
  t.rows.push_back(bound_row(find_twin_above(n, oracle), g.precision));
  return t;
}

std::string twin_label(const TwinPair& p) {
  return "(" + to_string(p.low) + "," + to_string(p.low + 2) + ")@" + std::to_string(p.level);
}

void dump_tree_text(const FamilyTree& node, int depth, std::ostream& out) {
  out << std::string(2 * (size_t)depth, ' ') << twin_label(node.pair) << "\n";
  for (const auto& c : node.children) dump_tree_text(c, depth + 1, out);
}

void dump_tree_dot(const FamilyTree& node, std::ostream& out) {
  for (const auto& c : node.children) {
    out << "  \"" << twin_label(node.pair) << "\" -> \"" << twin_label(c.pair) << "\";\n";
    dump_tree_dot(c, out);
  }
}

void run_tree(const GlobalOptions& g, int to_k, const std::string& tree_format, std::ostream& out) {
  FamilyTree root = family_tree(make_twin(5, 2), to_k, g.enum_options());
  if (tree_format == "dot") {
    out << "digraph twins {\n  \"" << twin_label(root.pair) << "\";\n";
    dump_tree_dot(root, out);
    out << "}\n";
  } else {
    dump_tree_text(root, 0, out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions g;
  CLI::App app{"primorial wheel tables, prospective prime generation, and twin bound queries"};
  app.require_subcommand(1);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "directory for prime counting checkpoints");
  app.add_option("--sieve-ceiling", g.sieve_ceiling, "largest sievable value")
      ->capture_default_str();
  app.add_option("--enum-cap", g.enum_cap, "refuse enumerations larger than this")
      ->capture_default_str();
  app.add_option("--precision", g.precision, "significant digits for rendered ratios")
      ->check(CLI::Range(1, 30))
      ->capture_default_str();

  auto* table_cmd = app.add_subcommand("table", "re-emit a published table with agreement flags");
  std::string table_id;
  bool table_slow = false;
  table_cmd->add_option("--id", table_id, "table identifier")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "mintp", "bounds"}));
  table_cmd->add_flag("--slow", table_slow, "include the minutes-scale sieve rows of table 1");
  table_cmd->fallthrough();

  auto* counts_cmd = app.add_subcommand("counts", "level span and survivor counts");
  int counts_k = 0;
  counts_cmd->add_option("--k", counts_k, "wheel level")->required();
  counts_cmd->fallthrough();

  auto* densities_cmd = app.add_subcommand("densities", "exact survivor densities of a level");
  int densities_k = 0;
  densities_cmd->add_option("--k", densities_k, "wheel level")->required();
  densities_cmd->fallthrough();

  auto* generate_cmd =
      app.add_subcommand("generate", "enumerate prospective primes or twins of a level");
  int generate_k = 0;
  bool generate_twins = false;
  bool generate_mark = false;
  u64 generate_limit = 0;
  generate_cmd->add_option("--k", generate_k, "wheel level")->required();
  auto* twins_opt = generate_cmd->add_flag("--twins", generate_twins, "emit twin pairs");
  generate_cmd->add_option("--limit", generate_limit, "stop after this many rows");
  generate_cmd
      ->add_flag("--mark-composites", generate_mark,
                 "flag survivors that are not actually prime")
      ->excludes(twins_opt);
  generate_cmd->fallthrough();

  auto* tree_cmd = app.add_subcommand("tree", "twin family tree from the seed pair (5,7)");
  int tree_to_k = 0;
  std::string tree_format = "text";
  tree_cmd->add_option("--to-k", tree_to_k, "deepest level")->required();
  tree_cmd->add_option("--format", tree_format, "tree layout")
      ->check(CLI::IsMember({"dot", "text"}));
  tree_cmd->fallthrough();

  auto* distribution_cmd =
      app.add_subcommand("distribution", "per-subset occupancy against the guaranteed minima");
  int distribution_k = 0;
  distribution_cmd->add_option("--k", distribution_k, "wheel level")->required();
  distribution_cmd->fallthrough();

  auto* bounds_cmd = app.add_subcommand("bounds", "twin lower bound report for one level");
  int bounds_l = 0;
  bounds_cmd->add_option("--l", bounds_l, "bound level")->required();
  bounds_cmd->fallthrough();

  auto* find_cmd =
      app.add_subcommand("find-twin-above", "first bound interval starting past a value");
  u64 find_n = 0;
  find_cmd->add_option("--n", find_n, "lower threshold")->required();
  find_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    CLI::App* a = &app;
    for (auto subs = a->get_subcommands(); !subs.empty(); subs = a->get_subcommands())
      a = subs.front();
    std::cout << a->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 2;
  }

  try {
    if (table_cmd->parsed()) {
      Table t;
      if (table_id == "1") t = run_table1(g, table_slow);
      else if (table_id == "2") t = run_table2(g);
      else if (table_id == "3") t = run_table3(g);
      else if (table_id == "mintp") t = run_table_mintp(g);
      else t = run_table_bounds(g);
      tool::emit(t, g.json(), std::cout);
    } else if (counts_cmd->parsed()) {
      tool::emit(run_counts(counts_k), g.json(), std::cout);
    } else if (densities_cmd->parsed()) {
      tool::emit(run_densities(g, densities_k), g.json(), std::cout);
    } else if (generate_cmd->parsed()) {
      tool::emit(run_generate(g, generate_k, generate_twins, generate_limit, generate_mark),
                 g.json(), std::cout);
    } else if (tree_cmd->parsed()) {
      run_tree(g, tree_to_k, tree_format, std::cout);
    } else if (distribution_cmd->parsed()) {
      tool::emit(run_distribution(g, distribution_k), g.json(), std::cout);
    } else if (bounds_cmd->parsed()) {
      tool::emit(run_bounds(g, bounds_l), g.json(), std::cout);
    } else if (find_cmd->parsed()) {
      tool::emit(run_find_twin_above(g, find_n), g.json(), std::cout);
    }
  } catch (const RangeError& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
