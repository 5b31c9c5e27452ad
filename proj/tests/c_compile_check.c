/* Compiles as C99 and drives a few calls: proves the header is C-clean
 * and the shared library links from plain C. */
#include "braidforge/braidforge.h"

#include <stdio.h>
#include <string.h>

int main(void) {
  bf_braid* w = NULL;
  if (bf_braid_parse("2: 1 1 1", &w) != BF_OK) return 1;
  if (bf_braid_strands(w) != 2) return 1;

  bf_poly* delta = NULL;
  if (bf_alexander(w, &delta) != BF_OK) return 1;
  char* text = NULL;
  if (bf_poly_text(delta, 1, &text) != BF_OK) return 1;
  int ok = strcmp(text, "1 - 1*t + 1*t^2") == 0;
  bf_string_free(text);
  bf_poly_free(delta);
  bf_braid_free(w);

  if (!ok) return 1;
  printf("c api ok (version %s)\n", bf_version());
  return 0;
}
