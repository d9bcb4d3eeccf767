#include "dihedral/dihedral.h"

#include "dihedral/errors.hpp"
#include "dihedral/generate.hpp"
#include "dihedral/io.hpp"
#include "dihedral/oracle.hpp"
#include "dihedral/transport.hpp"
#include "dihedral/zeroone.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using namespace dihedral;

struct dmc_instance {
  io::Instance inst;
};

struct dmc_report {
  io::Instance inst;
  FeasibilityReport report;
};

struct dmc_matrix {
  DenseMatrix a;
};

namespace {

thread_local std::string last_error;

dmc_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return DMC_ERR_PARSE;
    case ErrorKind::SumMismatch: return DMC_ERR_SUM_MISMATCH;
    case ErrorKind::Shape: return DMC_ERR_SHAPE;
    case ErrorKind::Bounds: return DMC_ERR_BOUNDS;
    case ErrorKind::NotIntegral: return DMC_ERR_DOMAIN;
    case ErrorKind::Infeasible: return DMC_ERR_INFEASIBLE;
    case ErrorKind::Argument: return DMC_ERR_ARGUMENT;
  }
  return DMC_ERR_INTERNAL;
}

template <class F>
dmc_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DMC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DMC_ERR_INTERNAL;
  }
}

dmc_status null_argument(const char* what) {
  last_error = std::string(what) + " must not be NULL";
  return DMC_ERR_ARGUMENT;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

MatrixClass class_from(const char* text) {
  const auto c = parse_matrix_class(text);
  if (!c) throw Error(ErrorKind::Parse, std::string("unknown class \"") + text + "\"");
  return *c;
}

SubgroupId subgroup_from(const char* text) {
  const auto h = parse_subgroup(text);
  if (!h) throw Error(ErrorKind::Parse, std::string("unknown subgroup \"") + text + "\"");
  return *h;
}

template <class T, class F>
std::vector<T> list_from(const char* text, F parse_one) {
  std::vector<T> out;
  std::string s(text);
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const std::string word = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!word.empty()) out.push_back(parse_one(word.c_str()));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* dmc_last_error(void) { return last_error.c_str(); }

const char* dmc_status_name(dmc_status status) {
  switch (status) {
    case DMC_OK: return "ok";
    case DMC_ERR_PARSE: return "parse error";
    case DMC_ERR_SUM_MISMATCH: return "sum mismatch";
    case DMC_ERR_SHAPE: return "shape error";
    case DMC_ERR_BOUNDS: return "bounds error";
    case DMC_ERR_DOMAIN: return "domain error";
    case DMC_ERR_ARGUMENT: return "invalid argument";
    case DMC_ERR_INFEASIBLE: return "infeasible";
    case DMC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void dmc_string_free(char* s) { std::free(s); }

dmc_status dmc_instance_create(const char* rows, const char* cols, const char* matrix_class, const char* subgroup,
                               dmc_instance** out) {
  if (!rows || !cols || !matrix_class || !subgroup || !out) return null_argument("every argument");
  return guarded([&] {
    io::Instance inst;
    inst.margins = MarginPair(MarginVector::parse(rows), MarginVector::parse(cols));
    inst.matrix_class = class_from(matrix_class);
    inst.subgroup = subgroup_from(subgroup);
    *out = new dmc_instance{std::move(inst)};
    return DMC_OK;
  });
}

dmc_status dmc_instance_from_json(const char* json, dmc_instance** out) {
  if (!json || !out) return null_argument("json and out");
  return guarded([&] {
    *out = new dmc_instance{io::parse_instance(json)};
    return DMC_OK;
  });
}

dmc_status dmc_instance_to_json(const dmc_instance* inst, char** out) {
  if (!inst || !out) return null_argument("inst and out");
  return guarded([&] {
    *out = copy_out(io::instance_json(inst->inst));
    return DMC_OK;
  });
}

dmc_status dmc_instance_margins(const dmc_instance* inst, char** rows, char** cols) {
  if (!inst || !rows || !cols) return null_argument("inst, rows and cols");
  return guarded([&] {
    *rows = copy_out(inst->inst.margins.rows().to_string());
    *cols = copy_out(inst->inst.margins.cols().to_string());
    return DMC_OK;
  });
}

const char* dmc_instance_class(const dmc_instance* inst) { return inst ? name(inst->inst.matrix_class).data() : ""; }

const char* dmc_instance_subgroup(const dmc_instance* inst) { return inst ? name(inst->inst.subgroup).data() : ""; }

void dmc_instance_free(dmc_instance* inst) { delete inst; }

dmc_status dmc_solve(const dmc_instance* inst, dmc_report** out) {
  if (!inst || !out) return null_argument("inst and out");
  return guarded([&] {
    const auto& i = inst->inst;
    FeasibilityReport r = i.matrix_class == MatrixClass::ZeroOne
                              ? zeroone::feasible01(i.margins, i.subgroup)
                              : transport::feasible(i.margins, i.subgroup, i.matrix_class);
    *out = new dmc_report{i, std::move(r)};
    return DMC_OK;
  });
}

int dmc_report_is_feasible(const dmc_report* report) { return report && report->report.feasible ? 1 : 0; }

const char* dmc_report_theorem(const dmc_report* report) { return report ? report->report.theorem.c_str() : ""; }

size_t dmc_report_condition_count(const dmc_report* report) { return report ? report->report.conditions.size() : 0; }

dmc_status dmc_report_condition(const dmc_report* report, size_t index, const char** label, int* holds,
                                const char** detail) {
  if (!report) return null_argument("report");
  if (index >= report->report.conditions.size()) {
    last_error = "condition index out of range";
    return DMC_ERR_ARGUMENT;
  }
  const auto& c = report->report.conditions[index];
  if (label) *label = c.label.c_str();
  if (holds) *holds = c.holds ? 1 : 0;
  if (detail) *detail = c.detail.c_str();
  return DMC_OK;
}

dmc_status dmc_report_witness(const dmc_report* report, dmc_matrix** out) {
  if (!report || !out) return null_argument("report and out");
  if (!report->report.witness) {
    last_error = "the class is empty";
    return DMC_ERR_INFEASIBLE;
  }
  return guarded([&] {
    *out = new dmc_matrix{*report->report.witness};
    return DMC_OK;
  });
}

dmc_status dmc_report_render(const dmc_report* report, dmc_format format, char** out) {
  if (!report || !out) return null_argument("report and out");
  return guarded([&] {
    *out = copy_out(format == DMC_FORMAT_JSON ? io::report_json(report->inst, report->report)
                                              : io::report_text(report->inst, report->report));
    return DMC_OK;
  });
}

void dmc_report_free(dmc_report* report) { delete report; }

dmc_status dmc_matrix_parse(const char* text, dmc_matrix** out) {
  if (!text || !out) return null_argument("text and out");
  return guarded([&] {
    *out = new dmc_matrix{io::parse_matrix(text)};
    return DMC_OK;
  });
}

size_t dmc_matrix_rows(const dmc_matrix* a) { return a ? a->a.rows() : 0; }
size_t dmc_matrix_cols(const dmc_matrix* a) { return a ? a->a.cols() : 0; }

dmc_status dmc_matrix_entry(const dmc_matrix* a, size_t i, size_t j, char** out) {
  if (!a || !out) return null_argument("a and out");
  if (i >= a->a.rows() || j >= a->a.cols()) {
    last_error = "entry index out of range";
    return DMC_ERR_ARGUMENT;
  }
  return guarded([&] {
    *out = copy_out(format_scalar(a->a(i, j)));
    return DMC_OK;
  });
}

dmc_status dmc_matrix_render(const dmc_matrix* a, char** out) {
  if (!a || !out) return null_argument("a and out");
  return guarded([&] {
    *out = copy_out(io::matrix_text(a->a));
    return DMC_OK;
  });
}

dmc_status dmc_matrix_margins(const dmc_matrix* a, char** rows, char** cols) {
  if (!a || !rows || !cols) return null_argument("a, rows and cols");
  return guarded([&] {
    const MarginVector r(a->a.row_sums()), c(a->a.col_sums());
    *rows = copy_out(r.to_string());
    *cols = copy_out(c.to_string());
    return DMC_OK;
  });
}

void dmc_matrix_free(dmc_matrix* a) { delete a; }

dmc_status dmc_check(const dmc_matrix* a, const dmc_instance* inst, dmc_format format, int* passed, char** out) {
  if (!a || !inst || !passed) return null_argument("a, inst and passed");
  return guarded([&] {
    const auto report = oracle::verify(a->a, inst->inst.margins, inst->inst.subgroup, inst->inst.matrix_class);
    *passed = report.passed() ? 1 : 0;
    if (out) *out = copy_out(format == DMC_FORMAT_JSON ? io::verify_json(report) : io::verify_text(report));
    return DMC_OK;
  });
}

void dmc_sweep_config_init(dmc_sweep_config* cfg) {
  if (!cfg) return;
  const oracle::SweepConfig defaults;
  cfg->max_m = defaults.max_m;
  cfg->max_n = defaults.max_n;
  cfg->max_total = defaults.max_total;
  cfg->classes = nullptr;
  cfg->subgroups = nullptr;
  cfg->entry_bound = defaults.entry_bound;
  cfg->jobs = defaults.jobs;
  cfg->inject_fault = 0;
}

dmc_status dmc_sweep(const dmc_sweep_config* cfg, size_t* checked, size_t* discrepancies, char** listing) {
  if (!cfg) return null_argument("cfg");
  return guarded([&] {
    oracle::SweepConfig c;
    c.max_m = cfg->max_m;
    c.max_n = cfg->max_n;
    c.max_total = cfg->max_total;
    if (cfg->classes) c.classes = list_from<MatrixClass>(cfg->classes, class_from);
    if (cfg->subgroups) c.subgroups = list_from<SubgroupId>(cfg->subgroups, subgroup_from);
    c.entry_bound = cfg->entry_bound;
    c.jobs = cfg->jobs;
    c.inject_fault = cfg->inject_fault != 0;
    const auto result = oracle::sweep(c);
    if (checked) *checked = result.checked;
    if (discrepancies) *discrepancies = result.discrepancies.size();
    if (listing) {
      std::string text;
      for (const auto& d : result.discrepancies) text += d.to_string() + "\n";
      *listing = copy_out(text);
    }
    return DMC_OK;
  });
}

void dmc_gen_config_init(dmc_gen_config* cfg) {
  if (!cfg) return;
  const generate::Options defaults;
  cfg->seed = defaults.seed;
  cfg->max_m = defaults.max_m;
  cfg->max_n = defaults.max_n;
  cfg->max_entry = defaults.max_entry;
  cfg->subgroup = "trivial";
  cfg->matrix_class = "integral";
  cfg->feasible_bias = defaults.feasible_bias;
}

dmc_status dmc_generate(const dmc_gen_config* cfg, dmc_instance** out) {
  if (!cfg || !out) return null_argument("cfg and out");
  return guarded([&] {
    generate::Options opt;
    opt.seed = cfg->seed;
    opt.max_m = cfg->max_m;
    opt.max_n = cfg->max_n;
    opt.max_entry = cfg->max_entry;
    opt.subgroup = subgroup_from(cfg->subgroup ? cfg->subgroup : "trivial");
    opt.matrix_class = class_from(cfg->matrix_class ? cfg->matrix_class : "integral");
    opt.feasible_bias = cfg->feasible_bias;
    io::Instance inst;
    inst.margins = generate::instance(opt);
    inst.matrix_class = opt.matrix_class;
    inst.subgroup = opt.subgroup;
    *out = new dmc_instance{std::move(inst)};
    return DMC_OK;
  });
}

}  // extern "C"
