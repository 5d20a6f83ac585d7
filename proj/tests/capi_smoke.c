/* Compiles the public header as C and exercises a handful of calls. */
#include <stdio.h>
#include <string.h>

#include "gammalc/gammalc.h"

static int failures = 0;

static void expect(int ok, const char* what) {
  if (!ok) {
    fprintf(stderr, "FAIL %s (%s)\n", what, glc_last_error());
    ++failures;
  }
}

int main(void) {
  char* out = NULL;
  glc_seq* s = NULL;
  glc_gamma* g = NULL;
  glc_poly* p = NULL;
  glc_seq* h = NULL;

  expect(glc_seq_parse("1,1,1,1", &s) == GLC_OK, "parse");
  expect(glc_gamma_new(6, s, &g) == GLC_OK, "gamma_new");
  expect(glc_gamma_to_poly(g, &p) == GLC_OK, "to_poly");
  expect(glc_poly_coeffs(p, &h) == GLC_OK, "coeffs");
  expect(glc_seq_to_string(h, &out) == GLC_OK && strcmp(out, "1,7,20,29,20,7,1") == 0,
         "h of all-ones gamma");
  glc_string_free(out);

  expect(glc_r_sum(6, 2, 2, &out) == GLC_OK && strcmp(out, "28") == 0, "r_sum");
  glc_string_free(out);
  expect(glc_coeff(6, 0, 0, 0, &out) == GLC_ERR_RANGE, "range error");

  glc_seq_free(h);
  glc_poly_free(p);
  glc_gamma_free(g);
  glc_seq_free(s);
  if (failures == 0) puts("capi smoke: ok");
  return failures != 0;
}
