/* The public header must compile as plain C. */
#include "twobridge/twobridge.h"

#include <stdio.h>
#include <string.h>

int main(void) {
  tb_knot* k = NULL;
  char* text = NULL;
  int rc = 1;
  if (tb_knot_normalize("105", "64", &k) == TB_OK && tb_knot_to_string(k, &text) == TB_OK) {
    rc = strcmp(text, "b(105,-41)") == 0 ? 0 : 1;
    printf("%s\n", text);
  }
  tb_string_free(text);
  tb_knot_free(k);
  return rc;
}
