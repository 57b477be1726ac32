#include <stdio.h>
#include <string.h>
#include "ai_ffi.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "check failed at line %d: %s\n",     \
                    __LINE__, #cond);                            \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    AiMonomialIdeal *a = NULL;
    CHECK(ai_monomial_ideal_parse("x^2, y^3", 0, &a) == AI_STATUS_OK);
    uint64_t e = 0, len = 0;
    CHECK(ai_multiplicity(a, &e) == AI_STATUS_OK && e == 6);
    CHECK(ai_colength(a, &len) == AI_STATUS_OK && len == 6);
    int64_t num = 0, den = 0;
    CHECK(ai_lct(a, &num, &den) == AI_STATUS_OK && num == 5 && den == 6);

    AiMonomialIdeal *j = NULL;
    CHECK(ai_multiplier_ideal(a, 1, 1, &j) == AI_STATUS_OK);
    char *s = NULL;
    CHECK(ai_monomial_ideal_to_string(j, &s) == AI_STATUS_OK);
    CHECK(strcmp(s, "x2, x1") == 0);
    ai_string_free(s);
    ai_monomial_ideal_free(j);
    ai_monomial_ideal_free(a);

    AiMonomialIdeal *bad = NULL;
    CHECK(ai_monomial_ideal_parse("x^2, y^", 0, &bad) == AI_STATUS_PARSE);
    CHECK(bad == NULL);
    CHECK(strstr(ai_last_error_message(), "offset 7") != NULL);

    AiPolynomialIdeal *p = NULL;
    CHECK(ai_polynomial_ideal_parse("x^2 + y^2, x*y", 0, &p) == AI_STATUS_OK);
    CHECK(ai_polynomial_colength(p, AI_ORDER_GREVLEX, &len) == AI_STATUS_OK && len == 4);
    ai_polynomial_ideal_free(p);

    AiSequence *seq = NULL;
    CHECK(ai_sequence_parse("weighted 5 7 5", 0, &seq) == AI_STATUS_OK);
    char *csv = NULL;
    CHECK(ai_sequence_report(seq, 4, 4, 4, "mult,lct", AI_FORMAT_CSV, &csv) == AI_STATUS_OK);
    CHECK(strncmp(csv, "m,mult,mult_decimal,lct,lct_decimal\n", 36) == 0);
    ai_string_free(csv);
    ai_sequence_free(seq);

    printf("ok %s\n", ai_version());
    return 0;
}
