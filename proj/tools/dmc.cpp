// Command-line front end over the C interface.
//
//   dmc solve --rows 2,1,1 --cols 2,1,1 --class zero-one --subgroup diag
//   dmc check witness.txt --rows 2,1,2 --cols 2,1,2 --subgroup full
//   dmc sweep --max-m 3 --max-n 3 --max-total 6 --classes zero-one
//   dmc gen --seed 7 --subgroup rot180 --class integral
//
// Exit codes: 0 feasible / pass / no discrepancies, 1 the opposite, 2 bad input.

#include "dihedral/dihedral.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kInputError = 2;

struct Owned {
  char* p = nullptr;
  ~Owned() { dmc_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int input_error(dmc_status status) {
  std::cerr << "error: " << dmc_status_name(status) << ": " << dmc_last_error() << "\n";
  return kInputError;
}

std::optional<std::string> slurp(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

dmc_format format_of(const std::string& name) { return name == "json" ? DMC_FORMAT_JSON : DMC_FORMAT_TEXT; }

struct SolveArgs {
  std::string rows, cols, matrix_class = "integral", subgroup = "trivial", instance, format = "text";
};

int run_solve(const SolveArgs& a) {
  dmc_instance* inst = nullptr;
  dmc_status st;
  if (!a.instance.empty()) {
    const auto text = slurp(a.instance);
    if (!text) {
      std::cerr << "error: cannot read " << a.instance << "\n";
      return kInputError;
    }
    st = dmc_instance_from_json(text->c_str(), &inst);
  } else {
    st = dmc_instance_create(a.rows.c_str(), a.cols.c_str(), a.matrix_class.c_str(), a.subgroup.c_str(), &inst);
  }
  if (st != DMC_OK) return input_error(st);

  dmc_report* report = nullptr;
  st = dmc_solve(inst, &report);
  dmc_instance_free(inst);
  if (st != DMC_OK) return input_error(st);
  Owned out;
  st = dmc_report_render(report, format_of(a.format), &out.p);
  const int feasible = dmc_report_is_feasible(report);
  dmc_report_free(report);
  if (st != DMC_OK) return input_error(st);
  std::cout << out.str();
  return feasible ? 0 : 1;
}

struct CheckArgs {
  std::string file, rows, cols, matrix_class, subgroup, format = "text";
};

int run_check(const CheckArgs& a) {
  const auto text = slurp(a.file);
  if (!text) {
    std::cerr << "error: cannot read " << a.file << "\n";
    return kInputError;
  }
  dmc_matrix* m = nullptr;
  dmc_status st = dmc_matrix_parse(text->c_str(), &m);
  if (st != DMC_OK) return input_error(st);

  // A solve report names its own instance; flags override it.
  std::string rows = a.rows, cols = a.cols, cls = a.matrix_class, sub = a.subgroup;
  dmc_instance* embedded = nullptr;
  if (dmc_instance_from_json(text->c_str(), &embedded) == DMC_OK) {
    Owned r, c;
    if (dmc_instance_margins(embedded, &r.p, &c.p) == DMC_OK) {
      if (rows.empty()) rows = r.str();
      if (cols.empty()) cols = c.str();
    }
    if (cls.empty()) cls = dmc_instance_class(embedded);
    if (sub.empty()) sub = dmc_instance_subgroup(embedded);
    dmc_instance_free(embedded);
  }
  Owned own_rows, own_cols;
  st = dmc_matrix_margins(m, &own_rows.p, &own_cols.p);
  if (st != DMC_OK) {
    dmc_matrix_free(m);
    return input_error(st);
  }
  if (rows.empty()) rows = own_rows.str();
  if (cols.empty()) cols = own_cols.str();
  if (cls.empty()) cls = "real";
  if (sub.empty()) sub = "trivial";

  dmc_instance* inst = nullptr;
  st = dmc_instance_create(rows.c_str(), cols.c_str(), cls.c_str(), sub.c_str(), &inst);
  if (st != DMC_OK) {
    dmc_matrix_free(m);
    return input_error(st);
  }
  int passed = 0;
  Owned out;
  st = dmc_check(m, inst, format_of(a.format), &passed, &out.p);
  dmc_instance_free(inst);
  dmc_matrix_free(m);
  if (st != DMC_OK) return input_error(st);
  std::cout << out.str();
  return passed ? 0 : 1;
}

int run_sweep(const dmc_sweep_config& cfg) {
  std::size_t checked = 0, found = 0;
  Owned listing;
  const dmc_status st = dmc_sweep(&cfg, &checked, &found, &listing.p);
  if (st != DMC_OK) return input_error(st);
  std::cout << listing.str();
  std::cout << checked << " checks\n" << found << " discrepancies\n";
  return found == 0 ? 0 : 1;
}

int run_gen(const dmc_gen_config& cfg) {
  dmc_instance* inst = nullptr;
  dmc_status st = dmc_generate(&cfg, &inst);
  if (st != DMC_OK) return input_error(st);
  Owned json;
  st = dmc_instance_to_json(inst, &json.p);
  dmc_instance_free(inst);
  if (st != DMC_OK) return input_error(st);
  std::cout << json.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dihedral matrix classes: decide, construct and cross-check."};
  app.require_subcommand(1);
  const std::vector<std::string> classes{"real", "integral", "zero-one"};
  const std::vector<std::string> formats{"json", "text"};

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide one instance and print the report");
  solve_cmd->add_option("--rows", solve.rows, "Row sums, comma-separated");
  solve_cmd->add_option("--cols", solve.cols, "Column sums, comma-separated");
  solve_cmd->add_option("--class", solve.matrix_class, "real, integral or zero-one")->check(CLI::IsMember(classes));
  solve_cmd->add_option("--subgroup", solve.subgroup, "Subgroup name");
  auto* instance_opt = solve_cmd->add_option("--instance", solve.instance, "Instance JSON file, - for stdin");
  solve_cmd->add_option("--format", solve.format, "json or text")->check(CLI::IsMember(formats));
  instance_opt->excludes(solve_cmd->get_option("--rows"));
  instance_opt->excludes(solve_cmd->get_option("--cols"));

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Verify a matrix against margins, subgroup and class");
  check_cmd->add_option("matrix", check.file, "Matrix file: text rows, JSON array, or a solve report")->required();
  check_cmd->add_option("--rows", check.rows, "Row sums (default: the instance in a report, else the matrix's own)");
  check_cmd->add_option("--cols", check.cols, "Column sums");
  check_cmd->add_option("--class", check.matrix_class, "real, integral or zero-one")->check(CLI::IsMember(classes));
  check_cmd->add_option("--subgroup", check.subgroup, "Subgroup name");
  check_cmd->add_option("--format", check.format, "json or text")->check(CLI::IsMember(formats));

  dmc_sweep_config sweep;
  dmc_sweep_config_init(&sweep);
  std::string sweep_classes = "integral,zero-one", sweep_subgroups;
  bool inject = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Compare decisions with exhaustive search on all small instances");
  sweep_cmd->add_option("--max-m", sweep.max_m, "Largest row count")->capture_default_str();
  sweep_cmd->add_option("--max-n", sweep.max_n, "Largest column count")->capture_default_str();
  sweep_cmd->add_option("--max-total", sweep.max_total, "Largest total N")->capture_default_str();
  sweep_cmd->add_option("--classes", sweep_classes, "Comma-separated classes")->capture_default_str();
  sweep_cmd->add_option("--subgroups", sweep_subgroups, "Comma-separated subgroups (default all)");
  sweep_cmd->add_option("--entry-bound", sweep.entry_bound, "Integral entry cap (negative: N)");
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->capture_default_str();
  sweep_cmd->add_flag("--inject-fault", inject)->group("");

  dmc_gen_config gen;
  dmc_gen_config_init(&gen);
  std::string gen_subgroup = "trivial", gen_class = "integral";
  auto* gen_cmd = app.add_subcommand("gen", "Print a random instance");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--max-m", gen.max_m, "Largest row count")->capture_default_str();
  gen_cmd->add_option("--max-n", gen.max_n, "Largest column count")->capture_default_str();
  gen_cmd->add_option("--max-entry", gen.max_entry, "Largest cell value")->capture_default_str();
  gen_cmd->add_option("--subgroup", gen_subgroup, "Subgroup name")->capture_default_str();
  gen_cmd->add_option("--class", gen_class, "real, integral or zero-one")
      ->check(CLI::IsMember(classes))
      ->capture_default_str();
  gen_cmd->add_option("--feasible-bias", gen.feasible_bias, "Chance of margins taken from an invariant matrix")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (*solve_cmd) {
    if (solve.instance.empty() && (solve.rows.empty() && solve.cols.empty())) {
      std::cerr << "error: give --rows and --cols, or --instance\n";
      return kInputError;
    }
    return run_solve(solve);
  }
  if (*check_cmd) return run_check(check);
  if (*sweep_cmd) {
    sweep.classes = sweep_classes.c_str();
    sweep.subgroups = sweep_subgroups.empty() ? nullptr : sweep_subgroups.c_str();
    sweep.inject_fault = inject ? 1 : 0;
    return run_sweep(sweep);
  }
  gen.subgroup = gen_subgroup.c_str();
  gen.matrix_class = gen_class.c_str();
  return run_gen(gen);
}
