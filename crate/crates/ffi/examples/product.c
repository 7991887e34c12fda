/* Prints M_(3,2) * M_(2,3) term by term. */
#include <stdio.h>
#include "dqsym.h"

int main(void) {
  const uint32_t alpha[] = {3, 2};
  const uint32_t beta[] = {2, 3};
  DqsymExpansion *e = NULL;
  DqsymStatus s = dqsym_product_expand(alpha, 2, beta, 2, DQSYM_CONVENTION_PAPER_LITERAL, &e);
  if (s != DQSYM_STATUS_OK) {
    fprintf(stderr, "error: %s\n", dqsym_status_message(s));
    return 1;
  }
  for (size_t i = 0; i < dqsym_expansion_len(e); i++) {
    const uint32_t *parts;
    size_t len;
    DqsymPoly *c = NULL;
    dqsym_expansion_gamma(e, i, &parts, &len);
    dqsym_expansion_coeff(e, i, &c);
    char *text = dqsym_poly_to_string(c);
    printf("(");
    for (size_t k = 0; k < len; k++) printf(k ? ",%u" : "%u", parts[k]);
    printf("): %s\n", text);
    dqsym_string_free(text);
    dqsym_poly_free(c);
  }
  dqsym_expansion_free(e);
  return 0;
}
