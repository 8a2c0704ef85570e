/* Compiled as plain C: the public header must work without C++. */

#include "raney.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

static void expect(int ok, const char* what) {
    if (!ok) {
        ++failures;
        fprintf(stderr, "FAILED: %s (%s)\n", what, raney_last_error());
    }
}

int main(void) {
    char* value = NULL;

    expect(raney_number(4, 2, 3, &value) == RANEY_OK, "raney_number status");
    expect(value != NULL && strcmp(value, "52") == 0, "R(4,2,3) == 52");
    raney_string_free(value);

    expect(raney_number(0, 2, 3, &value) == RANEY_ERROR_INVALID_ARGUMENT,
           "p = 0 rejected");

    raney_corals* corals = NULL;
    expect(raney_corals_enumerate(2, 2, 1, 1000, RANEY_CORAL_TUPLE, &corals) ==
               RANEY_OK,
           "enumerate status");
    expect(raney_corals_count(corals) == 2, "two diagrams");
    char* line = NULL;
    expect(raney_corals_record(corals, 0, &line) == RANEY_OK, "record status");
    expect(line != NULL && strcmp(line, "2 2 1 3,0,0,2,0,0") == 0,
           "first record");
    raney_string_free(line);
    raney_corals_free(corals);

    raney_webs* webs = NULL;
    expect(raney_webs_minus(1, 1000, &webs) == RANEY_OK, "webs status");
    expect(raney_webs_count(webs) == 1, "one minus web");
    raney_webs_free(webs);

    int matched = -1;
    char* classes = NULL;
    expect(raney_orient_with_word("3,0,0,0", "+++", &matched, &classes) ==
               RANEY_OK,
           "orient status");
    expect(matched == 1 && classes != NULL && strcmp(classes, "-+++") == 0,
           "orientation classes");
    raney_string_free(classes);

    if (failures == 0) {
        printf("test_capi_c: all checks passed\n");
        return 0;
    }
    fprintf(stderr, "test_capi_c: %d check(s) failed\n", failures);
    return 1;
}
