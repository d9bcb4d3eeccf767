#include "dihedral/dihedral.h"

#include <gtest/gtest.h>

#include <string>

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { dmc_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

}  // namespace

TEST(CApi, SolveAndInspect) {
  dmc_instance* inst = nullptr;
  ASSERT_EQ(dmc_instance_create("2,1,2", "2,1,2", "zero-one", "full", &inst), DMC_OK);
  EXPECT_STREQ(dmc_instance_class(inst), "zero-one");
  EXPECT_STREQ(dmc_instance_subgroup(inst), "full");
  dmc_report* report = nullptr;
  ASSERT_EQ(dmc_solve(inst, &report), DMC_OK);
  EXPECT_EQ(dmc_report_is_feasible(report), 1);
  EXPECT_GT(dmc_report_condition_count(report), 0u);
  const char* label = nullptr;
  int holds = -1;
  ASSERT_EQ(dmc_report_condition(report, 0, &label, &holds, nullptr), DMC_OK);
  EXPECT_NE(label, nullptr);
  EXPECT_EQ(dmc_report_condition(report, 1000, &label, &holds, nullptr), DMC_ERR_ARGUMENT);

  dmc_matrix* w = nullptr;
  ASSERT_EQ(dmc_report_witness(report, &w), DMC_OK);
  EXPECT_EQ(dmc_matrix_rows(w), 3u);
  EXPECT_EQ(dmc_matrix_cols(w), 3u);
  int passed = 0;
  Str text;
  ASSERT_EQ(dmc_check(w, inst, DMC_FORMAT_TEXT, &passed, &text.p), DMC_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_EQ(text.s().rfind("pass", 0), 0u);
  Str rows, cols;
  ASSERT_EQ(dmc_matrix_margins(w, &rows.p, &cols.p), DMC_OK);
  EXPECT_EQ(rows.s(), "2,1,2");
  Str entry;
  EXPECT_EQ(dmc_matrix_entry(w, 3, 0, &entry.p), DMC_ERR_ARGUMENT);

  Str json;
  ASSERT_EQ(dmc_report_render(report, DMC_FORMAT_JSON, &json.p), DMC_OK);
  dmc_matrix* again = nullptr;
  ASSERT_EQ(dmc_matrix_parse(json.s().c_str(), &again), DMC_OK);
  ASSERT_EQ(dmc_check(again, inst, DMC_FORMAT_JSON, &passed, nullptr), DMC_OK);
  EXPECT_EQ(passed, 1);

  dmc_matrix_free(again);
  dmc_matrix_free(w);
  dmc_report_free(report);
  dmc_instance_free(inst);
}

TEST(CApi, InfeasibleHasNoWitness) {
  dmc_instance* inst = nullptr;
  ASSERT_EQ(dmc_instance_create("6,6,6,2,1,1", "4,4,2,2,2,4,4", "zero-one", "v", &inst), DMC_OK);
  dmc_report* report = nullptr;
  ASSERT_EQ(dmc_solve(inst, &report), DMC_OK);
  EXPECT_EQ(dmc_report_is_feasible(report), 0);
  dmc_matrix* w = nullptr;
  EXPECT_EQ(dmc_report_witness(report, &w), DMC_ERR_INFEASIBLE);
  EXPECT_EQ(w, nullptr);
  dmc_report_free(report);
  dmc_instance_free(inst);
}

TEST(CApi, ErrorCodes) {
  dmc_instance* inst = nullptr;
  EXPECT_EQ(dmc_instance_create("1,2", "4", "integral", "trivial", &inst), DMC_ERR_SUM_MISMATCH);
  EXPECT_NE(std::string(dmc_last_error()), "");
  EXPECT_EQ(dmc_instance_create("1,x", "1", "integral", "trivial", &inst), DMC_ERR_PARSE);
  EXPECT_EQ(dmc_instance_create("1", "1", "integral", "rot45", &inst), DMC_ERR_PARSE);
  EXPECT_EQ(dmc_instance_create(nullptr, "1", "integral", "trivial", &inst), DMC_ERR_ARGUMENT);
  EXPECT_EQ(inst, nullptr);

  ASSERT_EQ(dmc_instance_create("1/2", "1/2", "integral", "trivial", &inst), DMC_OK);
  dmc_report* report = nullptr;
  EXPECT_EQ(dmc_solve(inst, &report), DMC_ERR_DOMAIN);
  dmc_instance_free(inst);

  ASSERT_EQ(dmc_instance_create("1,1", "2", "integral", "rot90", &inst), DMC_OK);
  EXPECT_EQ(dmc_solve(inst, &report), DMC_ERR_SHAPE);
  dmc_instance_free(inst);

  dmc_matrix* m = nullptr;
  EXPECT_EQ(dmc_matrix_parse("1 2\n3\n", &m), DMC_ERR_PARSE);
  EXPECT_STREQ(dmc_status_name(DMC_ERR_SHAPE), "shape error");
  EXPECT_EQ(dmc_report_is_feasible(nullptr), 0);
  dmc_instance_free(nullptr);
  dmc_report_free(nullptr);
  dmc_matrix_free(nullptr);
}

TEST(CApi, JsonInstanceRoundTrip) {
  dmc_instance* inst = nullptr;
  ASSERT_EQ(dmc_instance_from_json(R"({"rows":["1/2","1/2"],"cols":[1],"class":"real","subgroup":"h"})", &inst),
            DMC_OK);
  Str json;
  ASSERT_EQ(dmc_instance_to_json(inst, &json.p), DMC_OK);
  dmc_instance* back = nullptr;
  ASSERT_EQ(dmc_instance_from_json(json.s().c_str(), &back), DMC_OK);
  Str rows, cols;
  ASSERT_EQ(dmc_instance_margins(back, &rows.p, &cols.p), DMC_OK);
  EXPECT_EQ(rows.s(), "1/2,1/2");
  EXPECT_EQ(cols.s(), "1");
  EXPECT_STREQ(dmc_instance_subgroup(back), "h");
  dmc_instance_free(back);
  dmc_instance_free(inst);
}

TEST(CApi, SweepAndGenerate) {
  dmc_sweep_config cfg;
  dmc_sweep_config_init(&cfg);
  cfg.max_m = 2;
  cfg.max_n = 2;
  cfg.max_total = 3;
  cfg.classes = "zero-one";
  size_t checked = 0, found = 1;
  Str listing;
  ASSERT_EQ(dmc_sweep(&cfg, &checked, &found, &listing.p), DMC_OK);
  EXPECT_GT(checked, 0u);
  EXPECT_EQ(found, 0u);
  EXPECT_EQ(listing.s(), "");

  cfg.inject_fault = 1;
  Str faulty;
  ASSERT_EQ(dmc_sweep(&cfg, &checked, &found, &faulty.p), DMC_OK);
  EXPECT_GT(found, 0u);
  EXPECT_NE(faulty.s(), "");

  cfg.subgroups = "v,bogus";
  EXPECT_EQ(dmc_sweep(&cfg, &checked, &found, nullptr), DMC_ERR_PARSE);

  dmc_gen_config gen;
  dmc_gen_config_init(&gen);
  gen.seed = 9;
  gen.subgroup = "rot180";
  dmc_instance* a = nullptr;
  dmc_instance* b = nullptr;
  ASSERT_EQ(dmc_generate(&gen, &a), DMC_OK);
  ASSERT_EQ(dmc_generate(&gen, &b), DMC_OK);
  Str ja, jb;
  ASSERT_EQ(dmc_instance_to_json(a, &ja.p), DMC_OK);
  ASSERT_EQ(dmc_instance_to_json(b, &jb.p), DMC_OK);
  EXPECT_EQ(ja.s(), jb.s());
  dmc_instance_free(a);
  dmc_instance_free(b);
}
