#include <stdio.h>
#include <string.h>
#include "charvar.h"

int main(void) {
    CvPolynomial *p = NULL;
    char *s = NULL;
    uint64_t d = 0;
    if (cv_reduce_trace("g1^2 g2", 0, &p) != CV_STATUS_OK) return 1;
    if (cv_polynomial_to_string(p, &s) != CV_STATUS_OK) return 2;
    if (strcmp(s, "t1*t12 - t2") != 0) return 3;
    cv_string_free(s);
    cv_polynomial_free(p);
    if (cv_davenport(2, 2, 0, &d) != CV_STATUS_OK || d != 3) return 4;
    if (cv_reduce_trace("g7", 0, &p) != CV_STATUS_INVALID_INPUT || cv_last_error() == NULL) return 5;
    puts("ok");
    return 0;
}
