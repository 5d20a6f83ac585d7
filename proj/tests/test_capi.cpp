#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "gammalc/gammalc.h"

namespace {

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  glc_string_free(s);
  return out;
}

glc_seq* seq(const char* text) {
  glc_seq* s = nullptr;
  EXPECT_EQ(glc_seq_parse(text, &s), GLC_OK) << text;
  return s;
}

}  // namespace

TEST(CApi, StatusNamesAndVersion) {
  EXPECT_STRNE(glc_version(), "");
  EXPECT_STREQ(glc_status_name(GLC_OK), "ok");
  EXPECT_STRNE(glc_status_name(GLC_ERR_CAP_EXCEEDED), glc_status_name(GLC_ERR_RANGE));
}

TEST(CApi, NullArgumentsAreRejected) {
  EXPECT_EQ(glc_seq_parse(nullptr, nullptr), GLC_ERR_NULL_ARGUMENT);
  EXPECT_EQ(glc_coeff(6, 1, 0, 0, nullptr), GLC_ERR_NULL_ARGUMENT);
  EXPECT_EQ(glc_certificate_new(6, 2, 2, 100, 0, nullptr), GLC_ERR_NULL_ARGUMENT);
  int passed = 0;
  EXPECT_EQ(glc_sweep(nullptr, 4, 100, &passed, GLC_FORMAT_TEXT, nullptr),
            GLC_ERR_NULL_ARGUMENT);
  glc_seq_free(nullptr);
  glc_certificate_free(nullptr);
}

TEST(CApi, ParseErrorSetsLastError) {
  glc_seq* s = nullptr;
  EXPECT_EQ(glc_seq_parse("1,x", &s), GLC_ERR_PARSE);
  EXPECT_EQ(s, nullptr);
  EXPECT_NE(std::string(glc_last_error()).find("column 3"), std::string::npos)
      << glc_last_error();
}

TEST(CApi, GammaRoundTrip) {
  glc_seq* g = seq("1,1,1,1");
  glc_gamma* gamma = nullptr;
  ASSERT_EQ(glc_gamma_new(6, g, &gamma), GLC_OK);
  glc_poly* poly = nullptr;
  ASSERT_EQ(glc_gamma_to_poly(gamma, &poly), GLC_OK);
  glc_seq* h = nullptr;
  ASSERT_EQ(glc_poly_coeffs(poly, &h), GLC_OK);
  char* text = nullptr;
  ASSERT_EQ(glc_seq_to_string(h, &text), GLC_OK);
  EXPECT_EQ(take(text), "1,7,20,29,20,7,1");
  EXPECT_EQ(glc_seq_length(h), 7u);

  glc_gamma* back = nullptr;
  ASSERT_EQ(glc_poly_to_gamma(poly, &back), GLC_OK);
  glc_seq* g2 = nullptr;
  ASSERT_EQ(glc_gamma_coeffs(back, &g2), GLC_OK);
  ASSERT_EQ(glc_seq_to_string(g2, &text), GLC_OK);
  EXPECT_EQ(take(text), "1,1,1,1");

  ASSERT_EQ(glc_poly_json(poly, &text), GLC_OK);
  EXPECT_NE(take(text).find("\"schema\":\"1\""), std::string::npos);

  for (glc_seq* s : {g, h, g2}) glc_seq_free(s);
  glc_gamma_free(gamma);
  glc_gamma_free(back);
  glc_poly_free(poly);
}

TEST(CApi, SymmetryViolation) {
  glc_seq* s = seq("1,2,3");
  glc_poly* p = nullptr;
  EXPECT_EQ(glc_poly_new(2, s, &p), GLC_ERR_SYMMETRY);
  EXPECT_EQ(p, nullptr);
  glc_seq_free(s);
}

TEST(CApi, CheckSequenceWitness) {
  glc_seq* s = seq("1,0,1");
  int verdict = -1;
  size_t w[3] = {0, 0, 0};
  size_t wlen = 9;
  ASSERT_EQ(glc_check_sequence(GLC_UNIMODAL, s, 0, &verdict, w, &wlen, nullptr), GLC_OK);
  EXPECT_EQ(verdict, 0);
  ASSERT_EQ(wlen, 3u);
  EXPECT_EQ(w[1], 1u);
  EXPECT_EQ(glc_check_sequence(GLC_ULTRA_LOG_CONCAVE, s, 1, &verdict, w, &wlen, nullptr),
            GLC_ERR_ORDER_TOO_SMALL);
  glc_seq_free(s);
}

TEST(CApi, MainTheorem) {
  glc_seq* g = seq("1,2,3,2,1");
  glc_gamma* gamma = nullptr;
  ASSERT_EQ(glc_gamma_new(8, g, &gamma), GLC_OK);
  int hyp = 0, con = 0;
  char* json = nullptr;
  ASSERT_EQ(glc_main_theorem(gamma, &hyp, &con, &json), GLC_OK);
  EXPECT_EQ(hyp, 1);
  EXPECT_EQ(con, 1);
  EXPECT_NE(take(json).find("\"1\",\"10\",\"43\""), std::string::npos);
  glc_gamma_free(gamma);
  glc_seq_free(g);
}

TEST(CApi, Coefficients) {
  char* out = nullptr;
  ASSERT_EQ(glc_coeff(16, 5, 1, 5, &out), GLC_OK);
  EXPECT_EQ(take(out), "-182");
  ASSERT_EQ(glc_coeff_oracle(8, 3, 0, 4, &out), GLC_OK);
  EXPECT_EQ(take(out), "-28");
  EXPECT_EQ(glc_coeff(1, 1, 0, 0, &out), GLC_ERR_RANGE);

  glc_coeff_table* t = nullptr;
  ASSERT_EQ(glc_coeff_table_new(8, 3, &t), GLC_OK);
  ASSERT_EQ(glc_coeff_table_at(t, 4, 0, &out), GLC_OK);
  EXPECT_EQ(take(out), "-28");
  ASSERT_EQ(glc_coeff_table_render(t, GLC_TABLE_REGROUPED, &out), GLC_OK);
  EXPECT_NE(take(out).find("[105 (g1^2 - g0 g2) + 315 g0 g2]"), std::string::npos);
  glc_coeff_table_free(t);

  int tail = 0;
  ASSERT_EQ(glc_diagonal(16, 5, 3, GLC_EVEN, &tail, GLC_FORMAT_TEXT, &out), GLC_OK);
  EXPECT_EQ(tail, 1);
  EXPECT_EQ(take(out), "825 1177 -182 -1820 | tail-sign: OK\n");

  int holds = 0;
  ASSERT_EQ(glc_identity(16, 5, 3, 1, GLC_EVEN, &holds, GLC_FORMAT_JSON, &out), GLC_OK);
  EXPECT_EQ(holds, 1);
  EXPECT_NE(take(out).find("\"1177\""), std::string::npos);

  ASSERT_EQ(glc_r_sum(6, 2, 2, &out), GLC_OK);
  EXPECT_EQ(take(out), "28");
}

TEST(CApi, Abel) {
  glc_seq* a = seq("1,-1");
  glc_seq* b = seq("5,2");
  glc_seq* bad = seq("2,5");
  int ok = 0;
  char* out = nullptr;
  ASSERT_EQ(glc_abel(a, b, &ok, GLC_FORMAT_TEXT, &out), GLC_OK);
  EXPECT_EQ(ok, 1);
  glc_string_free(out);
  EXPECT_EQ(glc_abel(a, bad, &ok, GLC_FORMAT_TEXT, &out), GLC_ERR_HYPOTHESIS);
  for (glc_seq* s : {a, b, bad}) glc_seq_free(s);
}

TEST(CApi, EnumerateWithEarlyStop) {
  std::vector<std::string> seen;
  auto visit = [](const char* steps, void* ctx) {
    static_cast<std::vector<std::string>*>(ctx)->push_back(steps);
    return 0;
  };
  ASSERT_EQ(glc_enumerate_paths(0, 0, 1, 1, 100, visit, &seen), GLC_OK);
  EXPECT_EQ(seen, (std::vector<std::string>{"EN", "NE"}));

  int calls = 0;
  auto stop = [](const char*, void* ctx) { return ++*static_cast<int*>(ctx) >= 3 ? 1 : 0; };
  ASSERT_EQ(glc_enumerate_paths(0, 0, 6, 2, 100, stop, &calls), GLC_OK);
  EXPECT_EQ(calls, 3);

  EXPECT_EQ(glc_enumerate_paths(0, 0, 6, 2, 27, visit, &seen), GLC_ERR_CAP_EXCEEDED);
  EXPECT_NE(std::string(glc_last_error()).find("28"), std::string::npos);
}

TEST(CApi, Involution) {
  char* out = nullptr;
  ASSERT_EQ(glc_involution(0, 0, 2, 1, "EEN", &out), GLC_OK);
  EXPECT_EQ(take(out), "NEE");
  EXPECT_EQ(glc_involution(0, 0, 1, 2, "EEN", &out), GLC_ERR_ENDPOINT_MISMATCH);
}

TEST(CApi, Certificate) {
  glc_certificate* c = nullptr;
  ASSERT_EQ(glc_certificate_new(6, 2, 2, GLC_DEFAULT_PATH_CAP, 1, &c), GLC_OK);
  int certifies = 0;
  ASSERT_EQ(glc_certificate_certifies(c, &certifies), GLC_OK);
  EXPECT_EQ(certifies, 1);
  char* out = nullptr;
  ASSERT_EQ(glc_certificate_render(c, 1, &out), GLC_OK);
  const std::string text = take(out);
  EXPECT_NE(text.find("total 28 = 27 + 1"), std::string::npos);
  EXPECT_NE(text.find(" 2  . . . . o . D"), std::string::npos);
  ASSERT_EQ(glc_certificate_json(c, &out), GLC_OK);
  EXPECT_NE(take(out).find("\"contributions\""), std::string::npos);
  glc_certificate_free(c);

  c = nullptr;
  EXPECT_EQ(glc_certificate_new(6, 2, 2, 10, 0, &c), GLC_ERR_CAP_EXCEEDED);
  EXPECT_EQ(c, nullptr);
}

TEST(CApi, Sweep) {
  int passed = 0;
  char* out = nullptr;
  ASSERT_EQ(glc_sweep("diagonals", 8, GLC_DEFAULT_PATH_CAP, &passed, GLC_FORMAT_TEXT, &out),
            GLC_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_NE(take(out).find("PASS  tail_sign"), std::string::npos);
  EXPECT_EQ(glc_sweep("nonsense", 8, 0, &passed, GLC_FORMAT_TEXT, &out), GLC_ERR_PARSE);
}
